//! `(n, k, lambda)` difference sets in abelian groups and their link to
//! signature sets.

use serde::Serialize;

use crate::error::Error;
use crate::group::{ElementIndex, GroupTable};
use crate::params::exact_sqrt;
use crate::signature::{verify_signature_set, Rejection, Verification};
use crate::subset::SubsetMask;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DifferenceSetReport {
    pub n: u64,
    pub k: u64,
    pub lambda: u64,
    pub reversible: bool,
    pub hadamard_family: bool,
    pub contains_identity: bool,
}

/// `(4m^2, 2m^2 - m, m^2 - m)` for some `m >= 1`.
pub fn is_hadamard_parameters(n: u64, k: u64, lambda: u64) -> bool {
    let Some(m) = exact_sqrt(n).filter(|r| r % 2 == 0).map(|r| r / 2) else {
        return false;
    };
    m >= 1 && k == 2 * m * m - m && lambda == m * m - m
}

/// `#{(x, y) in D x D : x y^-1 = t}` for every `t`.
pub fn difference_counts(g: &GroupTable, d: &SubsetMask) -> Result<Vec<usize>, Error> {
    g.check_mask(d)?;
    let mut counts = vec![0usize; g.order()];
    for x in d.iter() {
        for y in d.iter() {
            counts[g.mul(x, g.inv(y)).0] += 1;
        }
    }
    Ok(counts)
}

pub fn verify_difference_set(g: &GroupTable, d: &SubsetMask) -> Result<DifferenceSetReport, Rejection> {
    g.check_mask(d)?;
    if !g.is_abelian() {
        return Err(Error::NonAbelian.into());
    }
    let n = g.order();
    if n < 2 {
        return Err(Rejection::Hypothesis("the trivial group has no nonzero differences".into()));
    }
    let counts = difference_counts(g, d)?;
    let lambda = counts[1];
    if let Some(t) = (1..n).find(|&t| counts[t] != lambda) {
        return Err(Rejection::CountMismatch {
            statistic: "difference count",
            witness: g.label(ElementIndex(t)).to_string(),
            found: counts[t].to_string(),
            expected: lambda.to_string(),
        });
    }
    let (n, k, lambda) = (n as u64, d.len() as u64, lambda as u64);
    debug_assert_eq!(lambda * (n - 1), k * k.saturating_sub(1));
    Ok(DifferenceSetReport {
        n,
        k,
        lambda,
        reversible: d.iter().all(|x| d.contains(g.inv(x))),
        hadamard_family: is_hadamard_parameters(n, k, lambda),
        contains_identity: d.contains_identity(),
    })
}

/// Parameters of the complementary difference set `G \ D`.
pub fn complement_report(r: &DifferenceSetReport) -> DifferenceSetReport {
    let k = r.n - r.k;
    let lambda = k * k.saturating_sub(1) / (r.n - 1);
    DifferenceSetReport {
        n: r.n,
        k,
        lambda,
        reversible: r.reversible,
        hadamard_family: is_hadamard_parameters(r.n, k, lambda),
        contains_identity: !r.contains_identity,
    }
}

/// Turns a reversible difference set with `k = (n ∓ sqrt n)/2` into a
/// signature set: `D` itself when `e ∉ D` (`mu = 2`), `D \ {e}` otherwise
/// (`mu = -2`).
pub fn diffset_to_signature(g: &GroupTable, d: &SubsetMask) -> Verification {
    let report = verify_difference_set(g, d)?;
    let outcome = diffset_branch(g, d, &report);
    if !report.contains_identity {
        let expected = report.hadamard_family && report.reversible;
        if outcome.is_ok() != expected {
            return Err(Rejection::CriteriaDisagree(format!(
                "reversible Hadamard family is {expected} but the signature test gave {}",
                outcome.is_ok()
            )));
        }
    }
    outcome
}

fn diffset_branch(g: &GroupTable, d: &SubsetMask, r: &DifferenceSetReport) -> Verification {
    if !r.reversible {
        return Err(Rejection::Hypothesis("difference set is not reversible".into()));
    }
    let root =
        exact_sqrt(r.n).ok_or_else(|| Rejection::Hypothesis(format!("group order {} is not a perfect square", r.n)))?;
    let (target_k, mu, s) = if r.contains_identity {
        let mut s = d.clone();
        s.remove(ElementIndex::IDENTITY);
        ((r.n + root) / 2, -2, s)
    } else {
        ((r.n - root) / 2, 2, d.clone())
    };
    if !(r.n + root).is_multiple_of(2) || r.k != target_k {
        return Err(Rejection::Hypothesis(format!(
            "k = {} but a signature set needs k = {}",
            r.k,
            if (r.n + root).is_multiple_of(2) { target_k.to_string() } else { format!("({} ± {root})/2", r.n) }
        )));
    }
    let v = verify_signature_set(g, &s)?;
    if v.witness_mu != mu || v.params.k != target_k {
        return Err(Rejection::CriteriaDisagree(format!(
            "expected mu = {mu}, k = {target_k}; got mu = {}, k = {}",
            v.witness_mu, v.params.k
        )));
    }
    Ok(v)
}
