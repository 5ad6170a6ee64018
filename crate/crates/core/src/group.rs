//! Finite groups as explicit Cayley tables.
//!
//! The identity is always element index 0, so `G \ {e}` is the contiguous
//! index range `1..order`. Tables are validated (Latin square, identity,
//! inverses, associativity) once at construction and immutable afterwards.

use std::collections::HashMap;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::subset::SubsetMask;

/// Largest group order supported by the dense table representation.
pub const MAX_ORDER: usize = 4096;

/// Orders up to this bound get an exhaustive associativity check.
pub const EXHAUSTIVE_ASSOC_LIMIT: usize = 512;

const ASSOC_SAMPLES: usize = 1_000_000;
const ASSOC_SEED: u64 = 0x5eed_f00d;

/// Index of an element inside its owning [`GroupTable`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElementIndex(pub usize);

impl ElementIndex {
    pub const IDENTITY: ElementIndex = ElementIndex(0);

    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for ElementIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

#[derive(Clone)]
pub struct GroupTable {
    order: usize,
    mul: Vec<u16>,
    inv: Vec<u16>,
    labels: Vec<String>,
    label_index: HashMap<String, usize>,
    name: String,
    abelian: bool,
    residues: Option<Vec<u64>>,
}

impl fmt::Debug for GroupTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GroupTable").field("name", &self.name).field("order", &self.order).finish()
    }
}

impl GroupTable {
    /// Builds a group from a row-major multiplication table and validates
    /// every group axiom. Element 0 must be the identity.
    pub fn from_table(name: impl Into<String>, mul: Vec<usize>, labels: Vec<String>) -> Result<Self> {
        let name = name.into();
        let order = labels.len();
        if order == 0 {
            return Err(Error::ZeroOrder);
        }
        if order > MAX_ORDER {
            return Err(Error::OrderTooLarge { order, max: MAX_ORDER });
        }
        if mul.len() != order * order {
            return Err(Error::InvalidTable(format!("table has {} entries, expected {}", mul.len(), order * order)));
        }
        if let Some(&bad) = mul.iter().find(|&&x| x >= order) {
            return Err(Error::InvalidTable(format!("entry {bad} out of range")));
        }
        let mul: Vec<u16> = mul.into_iter().map(|x| x as u16).collect();

        // Latin square
        let mut seen = vec![0usize; order];
        for (stamp, r) in (1..).zip(0..order) {
            for c in 0..order {
                let x = mul[r * order + c] as usize;
                if seen[x] == stamp {
                    return Err(Error::InvalidTable(format!("row {r} repeats element {x}")));
                }
                seen[x] = stamp;
            }
        }
        seen.iter_mut().for_each(|s| *s = 0);
        for (stamp, c) in (1..).zip(0..order) {
            for r in 0..order {
                let x = mul[r * order + c] as usize;
                if seen[x] == stamp {
                    return Err(Error::InvalidTable(format!("column {c} repeats element {x}")));
                }
                seen[x] = stamp;
            }
        }
        for x in 0..order {
            if mul[x] as usize != x || mul[x * order] as usize != x {
                return Err(Error::InvalidTable(format!("element 0 is not an identity for {x}")));
            }
        }
        let mut inv = vec![0u16; order];
        for x in 0..order {
            let y = (0..order).find(|&y| mul[x * order + y] == 0).expect("Latin row contains the identity");
            if mul[y * order + x] != 0 {
                return Err(Error::InvalidTable(format!("left and right inverse of {x} differ")));
            }
            inv[x] = y as u16;
        }

        let at = |a: usize, b: usize| mul[a * order + b] as usize;
        if order <= EXHAUSTIVE_ASSOC_LIMIT {
            for a in 0..order {
                for b in 0..order {
                    let ab = at(a, b);
                    for c in 0..order {
                        if at(ab, c) != at(a, at(b, c)) {
                            return Err(Error::InvalidTable(format!("associativity fails at ({a},{b},{c})")));
                        }
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(ASSOC_SEED);
            for _ in 0..ASSOC_SAMPLES {
                let (a, b, c) = (rng.gen_range(0..order), rng.gen_range(0..order), rng.gen_range(0..order));
                if at(at(a, b), c) != at(a, at(b, c)) {
                    return Err(Error::InvalidTable(format!("associativity fails at ({a},{b},{c})")));
                }
            }
        }

        let abelian = (0..order).all(|a| (a + 1..order).all(|b| at(a, b) == at(b, a)));
        Self::assemble(name, mul, inv, labels, abelian)
    }

    fn assemble(name: String, mul: Vec<u16>, inv: Vec<u16>, labels: Vec<String>, abelian: bool) -> Result<Self> {
        let mut label_index = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if label_index.insert(l.clone(), i).is_some() {
                return Err(Error::InvalidTable(format!("duplicate label `{l}`")));
            }
        }
        Ok(GroupTable { order: labels.len(), mul, inv, labels, label_index, name, abelian, residues: None })
    }

    /// The cyclic group `(Z_n, +)`; element `i` is the residue `i`.
    pub fn cyclic(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroOrder);
        }
        if n > MAX_ORDER {
            return Err(Error::OrderTooLarge { order: n, max: MAX_ORDER });
        }
        let mul = (0..n * n).map(|x| ((x / n + x % n) % n) as u16).collect();
        let inv = (0..n).map(|x| ((n - x) % n) as u16).collect();
        let labels = (0..n).map(|i| i.to_string()).collect();
        Self::assemble(format!("C{n}"), mul, inv, labels, true)
    }

    /// Componentwise product; `(i, j)` is stored at index `i * |g2| + j`.
    pub fn direct_product(g1: &GroupTable, g2: &GroupTable) -> Result<Self> {
        Self::direct_product_bounded(g1, g2, MAX_ORDER)
    }

    pub fn direct_product_bounded(g1: &GroupTable, g2: &GroupTable, max_order: usize) -> Result<Self> {
        let (n1, n2) = (g1.order, g2.order);
        let order = n1
            .checked_mul(n2)
            .filter(|&o| o <= max_order.min(MAX_ORDER))
            .ok_or(Error::OrderTooLarge { order: n1.saturating_mul(n2), max: max_order.min(MAX_ORDER) })?;
        let mut mul = Vec::with_capacity(order * order);
        for a in 0..order {
            let (a1, a2) = (a / n2, a % n2);
            for b in 0..order {
                let (b1, b2) = (b / n2, b % n2);
                mul.push(g1.mul_raw(a1, b1) * n2 + g2.mul_raw(a2, b2));
            }
        }
        let labels = (0..order).map(|x| format!("({},{})", g1.labels[x / n2], g2.labels[x % n2])).collect();
        Self::from_table(format!("{}x{}", g1.name, g2.name), mul, labels)
    }

    /// The multiplicative group `(Z_p \ {0}, *)`. Index `i` holds the
    /// residue `i + 1`, so the identity (residue 1) sits at index 0.
    pub fn units_mod(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let order = (p - 1) as usize;
        if order > MAX_ORDER {
            return Err(Error::OrderTooLarge { order, max: MAX_ORDER });
        }
        let mut mul = Vec::with_capacity(order * order);
        for a in 0..order as u64 {
            for b in 0..order as u64 {
                mul.push((((a + 1) * (b + 1)) % p - 1) as usize);
            }
        }
        let labels = (1..p).map(|r| r.to_string()).collect();
        let mut g = Self::from_table(format!("Zmult{p}"), mul, labels)?;
        g.residues = Some((1..p).collect());
        Ok(g)
    }

    /// The quaternion group, elements ordered `1, -1, i, -i, j, -j, k, -k`.
    pub fn quaternion8() -> Self {
        // (sign, unit) with unit 0=1, 1=i, 2=j, 3=k; index = 2*unit + sign
        const UNIT_MUL: [[(bool, usize); 4]; 4] = [
            [(false, 0), (false, 1), (false, 2), (false, 3)],
            [(false, 1), (true, 0), (false, 3), (true, 2)],
            [(false, 2), (true, 3), (true, 0), (false, 1)],
            [(false, 3), (false, 2), (true, 1), (true, 0)],
        ];
        let mut mul = Vec::with_capacity(64);
        for a in 0..8 {
            for b in 0..8 {
                let (neg, unit) = UNIT_MUL[a / 2][b / 2];
                let sign = (a % 2 == 1) ^ (b % 2 == 1) ^ neg;
                mul.push(2 * unit + usize::from(sign));
            }
        }
        let labels = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"].iter().map(|s| s.to_string()).collect();
        Self::from_table("Q8", mul, labels).expect("quaternion table is a group")
    }

    /// Dihedral group of order `2m`: `r0..r{m-1}` rotations, `s0..s{m-1}`
    /// reflections with `s_i = s r^i`.
    pub fn dihedral(m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::ZeroOrder);
        }
        let order = 2 * m;
        if order > MAX_ORDER {
            return Err(Error::OrderTooLarge { order, max: MAX_ORDER });
        }
        // element (f, i) = s^f r^i at index f*m + i; r^i s = s r^{-i}
        let mut mul = Vec::with_capacity(order * order);
        for a in 0..order {
            let (fa, ia) = (a / m, a % m);
            for b in 0..order {
                let (fb, ib) = (b / m, b % m);
                let i = if fb == 0 { (ia + ib) % m } else { (m - ia + ib) % m };
                mul.push(((fa + fb) % 2) * m + i);
            }
        }
        let labels = (0..order).map(|x| format!("{}{}", if x < m { 'r' } else { 's' }, x % m)).collect();
        Self::from_table(format!("D{m}"), mul, labels)
    }

    /// Parses `C<n>`, `C<a>xC<b>` (any number of factors), `Zmult<p>`,
    /// `Q8` or `D<m>`.
    pub fn from_descriptor(desc: &str) -> Result<Self> {
        let desc = desc.trim();
        let bad = || Error::Descriptor(desc.to_string());
        if desc == "Q8" {
            return Ok(Self::quaternion8());
        }
        if let Some(p) = desc.strip_prefix("Zmult") {
            return Self::units_mod(p.parse().map_err(|_| bad())?);
        }
        if let Some(m) = desc.strip_prefix('D') {
            return Self::dihedral(m.parse().map_err(|_| bad())?);
        }
        let mut factors =
            desc.split('x').map(|f| f.strip_prefix('C').and_then(|n| n.parse::<usize>().ok()).ok_or_else(bad));
        let first = factors.next().ok_or_else(bad)??;
        let mut g = Self::cyclic(first)?;
        for f in factors {
            g = Self::direct_product(&g, &Self::cyclic(f?)?)?;
        }
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn identity(&self) -> ElementIndex {
        ElementIndex::IDENTITY
    }

    pub fn is_abelian(&self) -> bool {
        self.abelian
    }

    #[inline]
    pub(crate) fn mul_raw(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }

    #[inline]
    pub(crate) fn inv_raw(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    pub fn mul(&self, a: ElementIndex, b: ElementIndex) -> ElementIndex {
        ElementIndex(self.mul_raw(a.0, b.0))
    }

    pub fn inv(&self, a: ElementIndex) -> ElementIndex {
        ElementIndex(self.inv_raw(a.0))
    }

    pub fn pow(&self, a: ElementIndex, e: usize) -> ElementIndex {
        (0..e).fold(ElementIndex::IDENTITY, |acc, _| self.mul(acc, a))
    }

    pub fn element_order(&self, a: ElementIndex) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != ElementIndex::IDENTITY {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn element(&self, index: usize) -> Result<ElementIndex> {
        if index < self.order {
            Ok(ElementIndex(index))
        } else {
            Err(Error::ElementOutOfRange { index, order: self.order })
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = ElementIndex> {
        (0..self.order).map(ElementIndex)
    }

    pub fn label(&self, a: ElementIndex) -> &str {
        &self.labels[a.0]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn element_by_label(&self, label: &str) -> Result<ElementIndex> {
        self.label_index
            .get(label.trim())
            .map(|&i| ElementIndex(i))
            .ok_or_else(|| Error::Label { group: self.name.clone(), label: label.trim().to_string() })
    }

    /// Residue held by an element of a `units_mod` group.
    pub fn residue(&self, a: ElementIndex) -> Option<u64> {
        self.residues.as_ref().map(|r| r[a.0])
    }

    pub fn element_by_residue(&self, residue: u64) -> Option<ElementIndex> {
        let r = self.residues.as_ref()?;
        r.iter().position(|&x| x == residue).map(ElementIndex)
    }

    /// Parses a comma-separated label list (top-level commas only, so
    /// `(1,0),(0,1)` yields two labels) into a subset.
    pub fn parse_subset(&self, list: &str) -> Result<SubsetMask> {
        let mut mask = SubsetMask::empty(self.order);
        for label in split_labels(list) {
            mask.insert(self.element_by_label(&label)?);
        }
        Ok(mask)
    }

    /// The closure of `gens` under multiplication and inversion, identity
    /// included.
    pub fn subgroup_generated(&self, gens: &[ElementIndex]) -> Result<SubsetMask> {
        for g in gens {
            self.element(g.0)?;
        }
        let mut mask = SubsetMask::empty(self.order);
        mask.insert(ElementIndex::IDENTITY);
        let mut frontier = vec![0usize];
        while let Some(x) = frontier.pop() {
            for g in gens {
                for y in [self.mul_raw(x, g.0), self.mul_raw(x, self.inv_raw(g.0))] {
                    if !mask.contains(ElementIndex(y)) {
                        mask.insert(ElementIndex(y));
                        frontier.push(y);
                    }
                }
            }
        }
        Ok(mask)
    }

    pub fn is_subgroup(&self, h: &SubsetMask) -> bool {
        h.owner_order() == self.order
            && h.contains(ElementIndex::IDENTITY)
            && h.iter().all(|a| h.contains(self.inv(a)) && h.iter().all(|b| h.contains(self.mul(a, b))))
    }

    /// `{t s t^-1 : s in S}`.
    pub fn conjugate_subset(&self, s: &SubsetMask, t: ElementIndex) -> Result<SubsetMask> {
        self.check_mask(s)?;
        self.element(t.0)?;
        let t_inv = self.inv_raw(t.0);
        let mut out = SubsetMask::empty(self.order);
        for x in s.iter() {
            out.insert(ElementIndex(self.mul_raw(self.mul_raw(t.0, x.0), t_inv)));
        }
        Ok(out)
    }

    pub fn check_mask(&self, s: &SubsetMask) -> Result<()> {
        if s.owner_order() == self.order {
            Ok(())
        } else {
            Err(Error::OrderMismatch { expected: self.order, found: s.owner_order() })
        }
    }

    /// Labels of the members of `s` in index order.
    pub fn subset_labels(&self, s: &SubsetMask) -> Vec<String> {
        s.iter().map(|x| self.labels[x.0].clone()).collect()
    }
}

/// Splits on commas that are not nested inside parentheses.
pub fn split_labels(list: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for ch in list.chars() {
        match ch {
            '(' => {
                depth += 1;
                cur.push(ch);
            }
            ')' => {
                depth -= 1;
                cur.push(ch);
            }
            ',' if depth == 0 => {
                out.push(std::mem::take(&mut cur));
            }
            c if c.is_whitespace() => {}
            c => cur.push(c),
        }
    }
    out.push(cur);
    out.into_iter().filter(|s| !s.is_empty()).collect()
}

/// Deterministic trial division.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}
