//! Brute-force oracles shared by the integration tests. Matrices are built
//! straight from the multiplication table and squared naively, with no
//! library matrix or counting code in the loop.

#![allow(dead_code, clippy::needless_range_loop)]

use frameforge::{ElementIndex, GroupTable, SearchSpec, SignatureKind, SignatureVerdict};

/// `a + b w` with `w^2 = -1 - w`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Zw(pub i64, pub i64);

impl Zw {
    pub const ZERO: Zw = Zw(0, 0);
    pub const ONE: Zw = Zw(1, 0);
    pub const W: Zw = Zw(0, 1);
    pub const W2: Zw = Zw(-1, -1);

    pub fn add(self, o: Zw) -> Zw {
        Zw(self.0 + o.0, self.1 + o.1)
    }

    pub fn mul(self, o: Zw) -> Zw {
        let (a, b, c, d) = (self.0, self.1, o.0, o.1);
        Zw(a * c - b * d, a * d + b * c - b * d)
    }

    pub fn conj(self) -> Zw {
        Zw(self.0 - self.1, -self.1)
    }

    pub fn norm(self) -> i64 {
        self.0 * self.0 - self.0 * self.1 + self.1 * self.1
    }
}

pub fn isqrt_exact(d: i64) -> Option<i64> {
    let r = (d as f64).sqrt().round() as i64;
    (r - 1..=r + 1).find(|x| *x >= 0 && x * x == d)
}

/// `Some((mu, k))` when `q` is a Seidel matrix with `q^2 = (n-1) I + mu q`
/// for an integer `mu`; `k` is the multiplicity of the positive eigenvalue,
/// fixed by `tr q = 0`.
pub fn two_eigenvalue(q: &[Vec<Zw>]) -> Option<(i64, u64)> {
    let n = q.len();
    if n < 2 {
        return None;
    }
    for i in 0..n {
        for j in 0..n {
            let ok = if i == j { q[i][j] == Zw::ZERO } else { q[i][j].norm() == 1 && q[j][i] == q[i][j].conj() };
            if !ok {
                return None;
            }
        }
    }
    let sq: Vec<Vec<Zw>> = (0..n)
        .map(|i| (0..n).map(|j| (0..n).fold(Zw::ZERO, |acc, l| acc.add(q[i][l].mul(q[l][j])))).collect())
        .collect();
    let m = sq[0][1].mul(q[0][1].conj());
    if m.1 != 0 {
        return None;
    }
    let mu = m.0;
    for i in 0..n {
        for j in 0..n {
            let want = if i == j { Zw(n as i64 - 1, 0) } else { Zw(mu * q[i][j].0, mu * q[i][j].1) };
            if sq[i][j] != want {
                return None;
            }
        }
    }
    let ni = n as i64;
    let k = if mu == 0 {
        if !n.is_multiple_of(2) {
            return None;
        }
        ni / 2
    } else {
        let s = isqrt_exact(mu * mu + 4 * (ni - 1))?;
        if (ni * (s - mu)) % (2 * s) != 0 {
            return None;
        }
        ni * (s - mu) / (2 * s)
    };
    Some((mu, k as u64))
}

/// `entry(r, c) = coeff(r c^-1)`, optionally bordered by a row and column
/// of ones.
pub fn group_matrix(g: &GroupTable, coeff: &[Zw], bordered: bool) -> Vec<Vec<Zw>> {
    let n = g.order();
    let core: Vec<Vec<Zw>> =
        (0..n).map(|r| (0..n).map(|c| coeff[g.mul(ElementIndex(r), g.inv(ElementIndex(c))).0]).collect()).collect();
    if !bordered {
        return core;
    }
    let mut out = vec![vec![Zw::ONE; n + 1]];
    out[0][0] = Zw::ZERO;
    for row in core {
        let mut r = vec![Zw::ONE];
        r.extend(row);
        out.push(r);
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct OracleHit {
    pub s: Vec<usize>,
    pub t: Vec<usize>,
    pub mu: i64,
    pub k: u64,
}

impl OracleHit {
    pub fn from_verdict(v: &SignatureVerdict) -> Self {
        OracleHit {
            s: v.set.indices(),
            t: v.t_set.as_ref().map(|t| t.indices()).unwrap_or_default(),
            mu: v.witness_mu,
            k: v.params.k,
        }
    }
}

/// Every subset (real kinds) or every `S/T/V` assignment (cube kinds) of
/// `G \ {e}`, kept when the oracle matrix has two eigenvalues.
pub fn brute_force(g: &GroupTable, kind: SignatureKind) -> Vec<OracleHit> {
    let n = g.order();
    let slots = n - 1;
    let base: u64 = if kind.is_cube() { 3 } else { 2 };
    let mut hits = Vec::new();
    for mut code in 0..base.pow(slots as u32) {
        let mut coeff = vec![Zw::ZERO; n];
        let (mut s, mut t) = (Vec::new(), Vec::new());
        for x in 1..n {
            let digit = code % base;
            code /= base;
            coeff[x] = match (kind.is_cube(), digit) {
                (false, 1) | (true, 0) => {
                    s.push(x);
                    Zw::ONE
                }
                (false, _) => Zw(-1, 0),
                (true, 1) => {
                    t.push(x);
                    Zw::W
                }
                _ => Zw::W2,
            };
        }
        if let Some((mu, k)) = two_eigenvalue(&group_matrix(g, &coeff, kind.is_bordered())) {
            hits.push(OracleHit { s, t, mu, k });
        }
    }
    hits.sort();
    hits
}

pub fn search_hits(g: &GroupTable, kind: SignatureKind) -> Vec<OracleHit> {
    let found = frameforge::search(&SearchSpec::new(g.clone(), kind)).expect("within bounds");
    let mut hits: Vec<_> = found.iter().map(|h| OracleHit::from_verdict(&h.verdict)).collect();
    hits.sort();
    hits
}

/// One group of every isomorphism type of order at most 8.
pub fn small_groups() -> Vec<GroupTable> {
    ["C1", "C2", "C3", "C4", "C2xC2", "C5", "C6", "D3", "C7", "C8", "C2xC4", "C2xC2xC2", "D4", "Q8"]
        .iter()
        .map(|d| GroupTable::from_descriptor(d).expect("valid descriptor"))
        .collect()
}

/// `#{(a, b) in A x B : a b = g}` by scanning all pairs.
pub fn naive_count(g: &GroupTable, a: &[usize], b: &[usize], target: usize) -> i64 {
    a.iter()
        .flat_map(|&x| b.iter().map(move |&y| (x, y)))
        .filter(|&(x, y)| g.mul(ElementIndex(x), ElementIndex(y)).0 == target)
        .count() as i64
}
