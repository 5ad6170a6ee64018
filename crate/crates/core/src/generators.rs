//! `(2k, k)` frames from primes: quasi-signature sets in `Z_p` built from
//! powers of 2, and the tables they produce.

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::Error;
use crate::group::{is_prime, GroupTable};
use crate::signature::{verify_quasi_signature_set, Rejection};
use crate::subset::SubsetMask;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Algorithm {
    /// `p = 8m + 5` with 2 a primitive root; the set is `<4>`.
    Thm59,
    /// `p = 8m + 1` with `<2>` of index 2; the set is `<2>`.
    Thm511,
}

impl Algorithm {
    pub fn as_str(self) -> &'static str {
        match self {
            Algorithm::Thm59 => "thm59",
            Algorithm::Thm511 => "thm511",
        }
    }

    pub fn prime(self, m: u64) -> u64 {
        match self {
            Algorithm::Thm59 => 8 * m + 5,
            Algorithm::Thm511 => 8 * m + 1,
        }
    }
}

impl std::str::FromStr for Algorithm {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "thm59" => Ok(Algorithm::Thm59),
            "thm511" => Ok(Algorithm::Thm511),
            _ => Err(Error::Parse(format!("unknown algorithm `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeneratorHit {
    pub m: u64,
    pub p: u64,
    pub n: u64,
    pub k: u64,
    /// Residues in increasing order.
    pub set: Vec<u64>,
    pub algorithm: Algorithm,
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut q = 2;
    while q * q <= n {
        if n.is_multiple_of(q) {
            out.push(q);
            while n.is_multiple_of(q) {
                n /= q;
            }
        }
        q += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Multiplicative order of 2 modulo an odd prime `p`.
pub fn order_of_two(p: u64) -> u64 {
    assert!(p > 2 && is_prime(p), "order_of_two needs an odd prime, got {p}");
    let mut ord = p - 1;
    for q in prime_factors(p - 1) {
        while ord.is_multiple_of(q) && pow_mod(2, ord / q, p) == 1 {
            ord /= q;
        }
    }
    ord
}

fn powers(base: u64, count: u64, p: u64) -> Vec<u64> {
    let mut set: Vec<u64> = (1..=count).map(|r| pow_mod(base, r, p)).collect();
    set.sort_unstable();
    set
}

/// The hit for a single `m`, if the algorithm produces one.
pub fn generate_one(algorithm: Algorithm, m: u64) -> Result<Option<GeneratorHit>, Rejection> {
    let p = algorithm.prime(m);
    if p < 5 || !is_prime(p) {
        return Ok(None);
    }
    let half = (p - 1) / 2;
    let set = match algorithm {
        Algorithm::Thm59 if order_of_two(p) == p - 1 => powers(4, half, p),
        Algorithm::Thm511 if order_of_two(p) == half => powers(2, half, p),
        _ => return Ok(None),
    };
    let n = p + 1;
    let hit = GeneratorHit { m, p, n, k: n / 2, set, algorithm };
    reverify(&hit)?;
    Ok(Some(hit))
}

/// Checks the hit's set as a quasi-signature set of `Z_p` with `mu = 0`.
pub fn reverify(hit: &GeneratorHit) -> Result<(), Rejection> {
    let g = GroupTable::cyclic(hit.p as usize)?;
    let s = SubsetMask::from_indices(g.order(), hit.set.iter().map(|&r| r as usize))?;
    let v = verify_quasi_signature_set(&g, &s)?;
    if v.witness_mu != 0 || v.params.k != hit.k {
        return Err(Rejection::CriteriaDisagree(format!(
            "p = {} gave mu = {}, k = {}",
            hit.p, v.witness_mu, v.params.k
        )));
    }
    Ok(())
}

/// Every hit for `0 <= m <= max_m`, in increasing `m`.
pub fn generate(algorithm: Algorithm, max_m: u64) -> Result<Vec<GeneratorHit>, Rejection> {
    let found: Result<Vec<_>, _> = (0..=max_m).into_par_iter().map(|m| generate_one(algorithm, m)).collect();
    Ok(found?.into_iter().flatten().collect())
}

pub fn generate_thm59(max_m: u64) -> Result<Vec<GeneratorHit>, Rejection> {
    generate(Algorithm::Thm59, max_m)
}

pub fn generate_thm511(max_m: u64) -> Result<Vec<GeneratorHit>, Rejection> {
    generate(Algorithm::Thm511, max_m)
}

/// Aligned `m` and `(n,k)` columns, one row per hit, optionally followed
/// by the set as `{r1,r2,...}`.
pub fn format_table(hits: &[GeneratorHit], with_sets: bool) -> String {
    let cells: Vec<(String, String)> = hits.iter().map(|h| (h.m.to_string(), format!("({},{})", h.n, h.k))).collect();
    let w0 = cells.iter().map(|c| c.0.len()).chain([1]).max().unwrap_or(1);
    let w1 = cells.iter().map(|c| c.1.len()).chain([5]).max().unwrap_or(5);
    let mut out = String::new();
    let mut line = |m: &str, nk: &str, set: Option<String>| {
        let _ = match set {
            Some(set) => writeln!(out, "{m:>w0$}  {nk:<w1$}  {set}"),
            None => writeln!(out, "{m:>w0$}  {nk}"),
        };
    };
    line("m", "(n,k)", with_sets.then(|| "set".to_string()));
    for ((m, nk), h) in cells.iter().zip(hits) {
        let set = with_sets.then(|| format!("{{{}}}", h.set.iter().map(u64::to_string).collect::<Vec<_>>().join(",")));
        line(m, nk, set);
    }
    out
}

/// `(m, n, k)` triples read back from [`format_table`] output or any text
/// with one `m (n,k)` pair per line.
pub fn parse_table_rows(text: &str) -> Vec<(u64, u64, u64)> {
    text.lines()
        .filter_map(|line| {
            let (m, rest) = line.trim().split_once(char::is_whitespace)?;
            let inner = rest.trim().strip_prefix('(')?.strip_suffix(')')?;
            let (n, k) = inner.split_once(',')?;
            Some((m.parse().ok()?, n.trim().parse().ok()?, k.trim().parse().ok()?))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        assert_eq!(order_of_two(5), 4);
        assert_eq!(order_of_two(13), 12);
        assert_eq!(order_of_two(17), 8);
        assert_eq!(order_of_two(73), 9);
        for p in [3u64, 7, 11, 41, 101] {
            let naive = (1..p).find(|&e| pow_mod(2, e, p) == 1).unwrap();
            assert_eq!(order_of_two(p), naive);
        }
    }

    #[test]
    fn thm59_examples() {
        let hits = generate_thm59(2).unwrap();
        assert_eq!(hits.len(), 2);
        assert_eq!((hits[0].p, hits[0].n, hits[0].k, hits[0].set.clone()), (5, 6, 3, vec![1, 4]));
        assert_eq!((hits[1].n, hits[1].k), (14, 7));
        assert_eq!(hits[1].set, vec![1, 3, 4, 9, 10, 12]);
    }

    #[test]
    fn thm511_examples() {
        let hits = generate_thm511(9).unwrap();
        let ms: Vec<_> = hits.iter().map(|h| h.m).collect();
        assert_eq!(ms, vec![2, 5]);
        assert_eq!(hits[0].set, vec![1, 2, 4, 8, 9, 13, 15, 16]);
        assert_eq!((hits[1].n, hits[1].k), (42, 21));
        assert_eq!(generate_one(Algorithm::Thm511, 9).unwrap(), None);
    }

    #[test]
    fn table_round_trip() {
        let hits = generate_thm59(12).unwrap();
        let text = format_table(&hits, false);
        assert!(text.starts_with(" m  (n,k)"));
        assert_eq!(
            parse_table_rows(&text),
            vec![(0, 6, 3), (1, 14, 7), (3, 30, 15), (4, 38, 19), (6, 54, 27), (7, 62, 31), (12, 102, 51)]
        );
        let with_sets = format_table(&hits[..1], true);
        assert_eq!(with_sets, "m  (n,k)  set\n0  (6,3)  {1,4}\n");
    }
}
