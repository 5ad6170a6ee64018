//! Exhaustive enumeration of signature sets, quasi-signature sets and
//! cube-root (quasi-)pairs in a finite group.
//!
//! Candidates are built orbit by orbit under `x -> x^-1`. A partial
//! assignment is abandoned as soon as no reachable `|S|` is compatible with
//! the row-sum law: `J` is an eigenvector of every candidate matrix with
//! eigenvalue `r = |S| - |T|`, so a two-eigenvalue matrix on `n` vectors
//! needs `r^2 - mu r - (n-1) = 0` (or `mu = r` once bordered).

use rayon::prelude::*;
use serde::Serialize;

use crate::cube::{
    cube_necessary_conditions, nmu_excluded, verify_quasi_signature_pair, verify_signature_pair, CubeContext,
};
use crate::error::Error;
use crate::group::{ElementIndex, GroupTable};
use crate::params::params_from_mu;
use crate::signature::{
    quasi_screen, verify_quasi_signature_set, verify_signature_set, SignatureKind, SignatureVerdict, Verification,
};
use crate::subset::SubsetMask;

/// Largest group order searched without `force`.
pub fn default_bound(kind: SignatureKind) -> usize {
    if kind.is_cube() {
        16
    } else {
        36
    }
}

#[derive(Debug, Clone)]
pub struct SearchSpec {
    pub group: GroupTable,
    pub kind: SignatureKind,
    pub mu_filter: Option<i64>,
    pub dedupe_conjugates: bool,
    pub limit: Option<usize>,
    /// Lifts the order bound of [`default_bound`].
    pub force: bool,
    /// Worker count; `None` uses the global rayon pool.
    pub threads: Option<usize>,
}

impl SearchSpec {
    pub fn new(group: GroupTable, kind: SignatureKind) -> Self {
        SearchSpec { group, kind, mu_filter: None, dedupe_conjugates: false, limit: None, force: false, threads: None }
    }

    pub fn mu(mut self, mu: i64) -> Self {
        self.mu_filter = Some(mu);
        self
    }
}

/// Member labels of `S` (and `T` for cube kinds) in element order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CanonicalKey {
    pub s: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SearchHit {
    pub verdict: SignatureVerdict,
    pub canonical_key: CanonicalKey,
}

/// Inverse orbits of `G \ {e}` as `(x, x^-1)` with `x <= x^-1`, ordered by `x`.
pub fn inverse_orbits(g: &GroupTable) -> Vec<(ElementIndex, ElementIndex)> {
    g.elements().skip(1).map(|x| (x, g.inv(x))).filter(|(x, y)| x <= y).collect()
}

/// Every inverse-closed subset of `G \ {e}`; bit `i` of the counter decides
/// orbit `i`.
///
/// # Panics
/// If `G` has 64 or more inverse orbits.
pub fn enumerate_inverse_closed(g: &GroupTable) -> impl Iterator<Item = SubsetMask> {
    let orbits = inverse_orbits(g);
    assert!(orbits.len() < 64, "too many inverse orbits to enumerate");
    let order = g.order();
    (0..1u64 << orbits.len()).map(move |bits| {
        let mut s = SubsetMask::empty(order);
        for (i, &(x, y)) in orbits.iter().enumerate() {
            if bits >> i & 1 == 1 {
                s.insert(x);
                s.insert(y);
            }
        }
        s
    })
}

/// Every `(S, T)` with `S = S^-1` and `V = T^-1`: involutions sit in `S`,
/// and each pair orbit `{x, x^-1}` goes to `S`, puts `x` in `T`, or puts
/// `x^-1` in `T`, in that digit order.
///
/// # Panics
/// If `G` has 40 or more pair orbits.
pub fn cube_candidates(g: &GroupTable) -> impl Iterator<Item = (SubsetMask, SubsetMask)> {
    let orbits = inverse_orbits(g);
    let involutions: Vec<_> = orbits.iter().filter(|(x, y)| x == y).map(|p| p.0).collect();
    let pairs: Vec<_> = orbits.into_iter().filter(|(x, y)| x != y).collect();
    assert!(pairs.len() < 40, "too many pair orbits to enumerate");
    let order = g.order();
    (0..3u64.pow(pairs.len() as u32)).map(move |mut code| {
        let mut s = SubsetMask::from_indices(order, involutions.iter().map(|x| x.0)).expect("in range");
        let mut t = SubsetMask::empty(order);
        for &(x, y) in &pairs {
            match code % 3 {
                0 => {
                    s.insert(x);
                    s.insert(y);
                }
                1 => t.insert(x),
                _ => t.insert(y),
            }
            code /= 3;
        }
        (s, t)
    })
}

/// The `mu` a two-eigenvalue matrix with these part sizes must have.
fn row_sum_mu(kind: SignatureKind, n: i64, s_len: i64, t_len: i64) -> Option<i64> {
    let r = s_len - t_len;
    if kind.is_bordered() {
        return Some(r);
    }
    (r != 0 && (n - 1) % r == 0).then(|| r - (n - 1) / r)
}

/// Necessary conditions on `mu` for a partition with nonempty or empty
/// parts, before any counting.
fn admissible(kind: SignatureKind, n: u64, mu: i64, nontrivial: bool, abelian: bool) -> bool {
    if params_from_mu(n, mu).is_err() {
        return false;
    }
    if !nontrivial {
        return true;
    }
    let ni = n as i64;
    match kind {
        SignatureKind::Signature => n.is_multiple_of(2) && mu % 2 == 0 && (ni - 2 - mu) % 4 == 0,
        SignatureKind::Quasi => quasi_screen(n as usize, mu).is_ok() && (ni + 3 * mu - 6) % 4 == 0,
        SignatureKind::CubePair => {
            cube_necessary_conditions(n, mu, CubeContext::Pair).pass && !nmu_excluded(n, mu, abelian)
        }
        SignatureKind::CubeQuasi => cube_necessary_conditions(n, mu, CubeContext::QuasiPair).pass,
    }
}

struct Plan<'a> {
    g: &'a GroupTable,
    kind: SignatureKind,
    /// Real kinds: every inverse orbit. Cube kinds: pair orbits only.
    slots: Vec<(ElementIndex, ElementIndex)>,
    states: u8,
    /// `|S|` contributed by each slot in its "in S" state.
    weights: Vec<usize>,
    base: SubsetMask,
    /// `allowed[i]` is whether `|S| = i` can occur in a hit.
    allowed: Vec<bool>,
    mu_filter: Option<i64>,
}

impl<'a> Plan<'a> {
    fn new(spec: &'a SearchSpec) -> Self {
        let g = &spec.group;
        let order = g.order();
        let orbits = inverse_orbits(g);
        let (slots, base, states): (Vec<_>, _, _) = if spec.kind.is_cube() {
            let base = SubsetMask::from_indices(order, orbits.iter().filter(|(x, y)| x == y).map(|p| p.0 .0))
                .expect("in range");
            (orbits.into_iter().filter(|(x, y)| x != y).collect(), base, 3)
        } else {
            (orbits, SubsetMask::empty(order), 2)
        };
        let weights = slots.iter().map(|(x, y)| if x == y { 1 } else { 2 }).collect();
        let n = order as u64 + spec.kind.is_bordered() as u64;
        let abelian = g.is_abelian();
        let allowed = (0..order)
            .map(|s_len| {
                let rest = order - 1 - s_len;
                let t_len = if spec.kind.is_cube() { rest / 2 } else { rest };
                if spec.kind.is_cube() && (s_len < base.len() || !rest.is_multiple_of(2)) {
                    return false;
                }
                let nontrivial = s_len > 0 && t_len > 0;
                row_sum_mu(spec.kind, n as i64, s_len as i64, t_len as i64).is_some_and(|mu| {
                    spec.mu_filter.is_none_or(|f| f == mu) && admissible(spec.kind, n, mu, nontrivial, abelian)
                })
            })
            .collect();
        Plan { g, kind: spec.kind, slots, states, weights, base, allowed, mu_filter: spec.mu_filter }
    }

    fn reachable(&self, depth: usize, s_len: usize) -> bool {
        let rest: usize = self.weights[depth..].iter().sum();
        self.allowed[s_len..=(s_len + rest).min(self.allowed.len() - 1)].iter().any(|&a| a)
    }

    fn s_len(&self, states: &[u8]) -> usize {
        let in_s = self.in_s();
        self.base.len() + states.iter().zip(&self.weights).filter(|(&st, _)| st == in_s).map(|(_, w)| w).sum::<usize>()
    }

    /// The "in S" state: 1 for real kinds, 0 for cube kinds.
    fn in_s(&self) -> u8 {
        if self.kind.is_cube() {
            0
        } else {
            1
        }
    }

    fn explore(&self, states: &mut Vec<u8>, s_len: usize, out: &mut Vec<SignatureVerdict>) {
        if !self.reachable(states.len(), s_len) {
            return;
        }
        let depth = states.len();
        if depth == self.slots.len() {
            if let Ok(v) = self.verify(states) {
                if self.mu_filter.is_none_or(|f| f == v.witness_mu) {
                    out.push(v);
                }
            }
            return;
        }
        for st in 0..self.states {
            states.push(st);
            let grow = if st == self.in_s() { self.weights[depth] } else { 0 };
            self.explore(states, s_len + grow, out);
            states.pop();
        }
    }

    fn partition(&self, states: &[u8]) -> (SubsetMask, SubsetMask) {
        let mut s = self.base.clone();
        let mut t = SubsetMask::empty(self.g.order());
        for (&(x, y), &st) in self.slots.iter().zip(states) {
            match (self.kind.is_cube(), st) {
                (false, 1) | (true, 0) => {
                    s.insert(x);
                    s.insert(y);
                }
                (true, 1) => t.insert(x),
                (true, 2) => t.insert(y),
                _ => {}
            }
        }
        (s, t)
    }

    fn verify(&self, states: &[u8]) -> Verification {
        let (s, t) = self.partition(states);
        match self.kind {
            SignatureKind::Signature => verify_signature_set(self.g, &s),
            SignatureKind::Quasi => verify_quasi_signature_set(self.g, &s),
            SignatureKind::CubePair => verify_signature_pair(self.g, &s, &t),
            SignatureKind::CubeQuasi => verify_quasi_signature_pair(self.g, &s, &t),
        }
    }

    /// All assignments of the first `width` slots.
    fn prefixes(&self, width: usize) -> Vec<Vec<u8>> {
        let mut out = vec![Vec::new()];
        for _ in 0..width {
            out = out
                .into_iter()
                .flat_map(|p| {
                    (0..self.states).map(move |st| {
                        let mut q = p.clone();
                        q.push(st);
                        q
                    })
                })
                .collect();
        }
        out
    }
}

fn sort_key(v: &SignatureVerdict) -> (Vec<usize>, Vec<usize>) {
    (v.set.indices(), v.t_set.as_ref().map(|t| t.indices()).unwrap_or_default())
}

/// Whether no conjugate `x S x^-1` (with `T` alongside) sorts before `v`.
fn is_conjugacy_representative(g: &GroupTable, v: &SignatureVerdict) -> bool {
    let own = sort_key(v);
    g.elements().all(|x| {
        let s = g.conjugate_subset(&v.set, x).expect("same group");
        let t = v.t_set.as_ref().map(|t| g.conjugate_subset(t, x).expect("same group"));
        (s.indices(), t.map(|t| t.indices()).unwrap_or_default()) >= own
    })
}

/// Every hit of `spec.kind` in `spec.group`, sorted by member indices.
pub fn search(spec: &SearchSpec) -> Result<Vec<SearchHit>, Error> {
    let g = &spec.group;
    let bound = default_bound(spec.kind);
    if g.order() > bound && !spec.force {
        return Err(Error::SearchBound { order: g.order(), bound });
    }
    let run = || {
        let plan = Plan::new(spec);
        let workers = rayon::current_num_threads().max(1);
        let mut width = 0;
        while width < plan.slots.len() && (plan.states as usize).pow(width as u32) < 4 * workers {
            width += 1;
        }
        let mut found: Vec<SignatureVerdict> = plan
            .prefixes(width)
            .into_par_iter()
            .flat_map_iter(|mut prefix| {
                let mut out = Vec::new();
                let s_len = plan.s_len(&prefix);
                plan.explore(&mut prefix, s_len, &mut out);
                out
            })
            .collect();
        found.sort_by_cached_key(sort_key);
        found
    };
    let mut found = match spec.threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t.max(1))
            .build()
            .map_err(|e| Error::Parse(e.to_string()))?
            .install(run),
        None => run(),
    };
    if spec.dedupe_conjugates && !g.is_abelian() {
        found.retain(|v| is_conjugacy_representative(g, v));
    }
    if let Some(limit) = spec.limit {
        found.truncate(limit);
    }
    Ok(found
        .into_iter()
        .map(|verdict| {
            let canonical_key = CanonicalKey {
                s: g.subset_labels(&verdict.set),
                t: verdict.t_set.as_ref().map(|t| g.subset_labels(t)),
            };
            SearchHit { verdict, canonical_key }
        })
        .collect())
}
