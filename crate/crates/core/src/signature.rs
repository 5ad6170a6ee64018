//! Signature sets and quasi-signature sets: verification by pair counts,
//! the associated `±1` Seidel matrices and the index-2 subgroup family.

use serde::Serialize;
use thiserror::Error;

use crate::counting::count_pair_unchecked;
use crate::error::Error;
use crate::group::{ElementIndex, GroupTable};
use crate::matrix::{border_standard, certify_two_eigenvalue, regrep_sum, CertifyError, SeidelMatrix, SeidelMatrixInt};
use crate::params::{params_from_mu, FrameParams, Infeasible};
use crate::subset::SubsetMask;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SignatureKind {
    Signature,
    Quasi,
    CubePair,
    CubeQuasi,
}

impl SignatureKind {
    pub const ALL: [SignatureKind; 4] = [Self::Signature, Self::Quasi, Self::CubePair, Self::CubeQuasi];

    pub fn as_str(self) -> &'static str {
        match self {
            Self::Signature => "signature",
            Self::Quasi => "quasi",
            Self::CubePair => "cube-pair",
            Self::CubeQuasi => "cube-quasi",
        }
    }

    /// Bordered kinds live on `|G| + 1` frame vectors.
    pub fn is_bordered(self) -> bool {
        matches!(self, Self::Quasi | Self::CubeQuasi)
    }

    pub fn is_cube(self) -> bool {
        matches!(self, Self::CubePair | Self::CubeQuasi)
    }
}

impl std::str::FromStr for SignatureKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        Self::ALL.into_iter().find(|k| k.as_str() == s).ok_or_else(|| Error::Parse(format!("unknown kind `{s}`")))
    }
}

/// An accepted set (or cube-root pair) together with its frame parameters.
#[derive(Debug, Clone, PartialEq)]
pub struct SignatureVerdict {
    pub kind: SignatureKind,
    pub params: FrameParams,
    pub witness_mu: i64,
    pub set: SubsetMask,
    /// The `T` part of a cube-root pair.
    pub t_set: Option<SubsetMask>,
    pub matrix_dim: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Rejection {
    #[error(transparent)]
    Invalid(#[from] Error),
    #[error("the trivial group carries no signature set")]
    TrivialGroup,
    #[error("{set} fails at {witness}")]
    NotInverseClosed { set: &'static str, witness: String },
    #[error("{rule}: {detail}")]
    Screen { rule: &'static str, detail: String },
    #[error("{statistic} at {witness} is {found}, expected {expected}")]
    CountMismatch { statistic: &'static str, witness: String, found: String, expected: String },
    #[error("mu = {mu} gives no frame: {reason}")]
    Infeasible { mu: i64, reason: Infeasible },
    #[error(transparent)]
    Certificate(#[from] CertifyError),
    #[error("subgroup of order {subgroup} has index other than 2 in a group of order {order}")]
    IndexNotTwo { subgroup: usize, order: usize },
    #[error("internal error: equivalent criteria disagree ({0})")]
    CriteriaDisagree(String),
    #[error("{0}")]
    Hypothesis(String),
}

impl Rejection {
    pub fn witness(&self) -> Option<&str> {
        match self {
            Rejection::NotInverseClosed { witness, .. } | Rejection::CountMismatch { witness, .. } => Some(witness),
            _ => None,
        }
    }
}

pub type Verification = Result<SignatureVerdict, Rejection>;

pub(crate) fn first_not_inverse_closed(g: &GroupTable, s: &SubsetMask) -> Option<ElementIndex> {
    s.iter().find(|x| !s.contains(g.inv(*x)))
}

pub(crate) fn check_inverse_closed(g: &GroupTable, s: &SubsetMask, name: &'static str) -> Result<(), Rejection> {
    match first_not_inverse_closed(g, s) {
        Some(x) => Err(Rejection::NotInverseClosed { set: name, witness: g.label(x).to_string() }),
        None => Ok(()),
    }
}

fn quarter(num: i64) -> String {
    if num % 4 == 0 {
        (num / 4).to_string()
    } else {
        format!("{num}/4")
    }
}

/// `N_SS - 2 N_ST + N_TT` at `x`.
fn triple_count(g: &GroupTable, s: &SubsetMask, t: &SubsetMask, x: usize) -> i64 {
    count_pair_unchecked(g, s, s, x) as i64 - 2 * count_pair_unchecked(g, s, t, x) as i64
        + count_pair_unchecked(g, t, t, x) as i64
}

/// Checks the per-element triple-count identity: `target_s` on `S`,
/// `target_t` on `T`.
fn triple_criterion(g: &GroupTable, s: &SubsetMask, t: &SubsetMask, target_s: i64, target_t: i64) -> bool {
    s.iter().all(|x| triple_count(g, s, t, x.0) == target_s) && t.iter().all(|x| triple_count(g, s, t, x.0) == target_t)
}

fn split(g: &GroupTable, s: &SubsetMask) -> Result<SubsetMask, Rejection> {
    g.check_mask(s)?;
    s.require_identity_free()?;
    Ok(s.complement_nonidentity())
}

fn params_or_reject(n: usize, mu: i64) -> Result<FrameParams, Rejection> {
    params_from_mu(n as u64, mu).map_err(|reason| Rejection::Infeasible { mu, reason })
}

/// `T = (G \ {e}) \ S`.
pub fn complement_set(g: &GroupTable, s: &SubsetMask) -> Result<SubsetMask, Error> {
    g.check_mask(s)?;
    s.require_identity_free()?;
    Ok(s.complement_nonidentity())
}

/// Accepts `S` when `sum_S rho(g) - sum_T rho(h)` is a Seidel matrix with
/// two eigenvalues, decided by `N_(S,T)` counts.
pub fn verify_signature_set(g: &GroupTable, s: &SubsetMask) -> Verification {
    let t = split(g, s)?;
    let n = g.order();
    if n == 1 {
        return Err(Rejection::TrivialGroup);
    }
    check_inverse_closed(g, s, "S = S^-1")?;
    check_inverse_closed(g, &t, "T = T^-1")?;
    let nontrivial = !s.is_empty() && !t.is_empty();
    if nontrivial && n % 2 == 1 {
        return Err(Rejection::Screen { rule: "parity", detail: format!("group order {n} is odd") });
    }

    let ni = n as i64;
    let count = |x: ElementIndex| count_pair_unchecked(g, s, &t, x.0) as i64;
    let mu = match s.iter().next() {
        Some(x) => ni - 2 - 4 * count(x),
        None => 4 * count(t.iter().next().expect("n >= 2")) - ni + 2,
    };
    let on_s = s.iter().find(|&x| 4 * count(x) != ni - 2 - mu);
    let on_t = t.iter().find(|&x| 4 * count(x) != ni - 2 + mu);
    let single_ok = on_s.is_none() && on_t.is_none();
    let triple_ok = triple_criterion(g, s, &t, mu, -mu);
    if single_ok != triple_ok {
        return Err(Rejection::CriteriaDisagree(format!("single-count {single_ok}, triple-count {triple_ok}")));
    }
    if let Some(x) = on_s {
        return Err(Rejection::CountMismatch {
            statistic: "N_(S,T)",
            witness: g.label(x).to_string(),
            found: count(x).to_string(),
            expected: quarter(ni - 2 - mu),
        });
    }
    if let Some(x) = on_t {
        return Err(Rejection::CountMismatch {
            statistic: "N_(S,T)",
            witness: g.label(x).to_string(),
            found: count(x).to_string(),
            expected: quarter(ni - 2 + mu),
        });
    }
    if nontrivial && mu % 2 != 0 {
        return Err(Rejection::Screen { rule: "parity", detail: format!("mu = {mu} is odd") });
    }
    let params = params_or_reject(n, mu)?;
    Ok(SignatureVerdict {
        kind: SignatureKind::Signature,
        params,
        witness_mu: mu,
        set: s.clone(),
        t_set: None,
        matrix_dim: n,
    })
}

/// Range and parity screen for a nontrivial quasi-signature set on `n`
/// frame vectors.
pub fn quasi_screen(n: usize, mu: i64) -> Result<(), Rejection> {
    let ni = n as i64;
    if n % 2 == 1 {
        return Err(Rejection::Screen { rule: "parity", detail: format!("frame size {n} is odd") });
    }
    if mu % 2 != 0 {
        return Err(Rejection::Screen { rule: "parity", detail: format!("mu = {mu} is odd") });
    }
    if 3 * mu < 6 - ni || 3 * mu > ni - 6 {
        return Err(Rejection::Screen {
            rule: "range",
            detail: format!("mu = {mu} outside 2 - n/3 ..= n/3 - 2 for n = {n}"),
        });
    }
    Ok(())
}

/// Accepts `S` when the bordered matrix on `|G| + 1` vectors has two
/// eigenvalues, decided by `N_(S,S)` and `N_(T,T)` counts with
/// `mu = |S| - |T|`.
pub fn verify_quasi_signature_set(g: &GroupTable, s: &SubsetMask) -> Verification {
    let t = split(g, s)?;
    let n = g.order() + 1;
    check_inverse_closed(g, s, "S = S^-1")?;
    check_inverse_closed(g, &t, "T = T^-1")?;
    let mu = s.len() as i64 - t.len() as i64;
    if !s.is_empty() && !t.is_empty() {
        quasi_screen(n, mu)?;
    }

    let ni = n as i64;
    let ss = |x: ElementIndex| count_pair_unchecked(g, s, s, x.0) as i64;
    let tt = |x: ElementIndex| count_pair_unchecked(g, &t, &t, x.0) as i64;
    let on_s = s.iter().find(|&x| 4 * ss(x) != ni + 3 * mu - 6);
    let on_t = t.iter().find(|&x| 4 * tt(x) != ni - 3 * mu - 6);
    let single_ok = on_s.is_none() && on_t.is_none();
    let triple_ok = triple_criterion(g, s, &t, mu - 1, -mu - 1);
    if single_ok != triple_ok {
        return Err(Rejection::CriteriaDisagree(format!("single-count {single_ok}, triple-count {triple_ok}")));
    }
    if let Some(x) = on_s {
        return Err(Rejection::CountMismatch {
            statistic: "N_(S,S)",
            witness: g.label(x).to_string(),
            found: ss(x).to_string(),
            expected: quarter(ni + 3 * mu - 6),
        });
    }
    if let Some(x) = on_t {
        return Err(Rejection::CountMismatch {
            statistic: "N_(T,T)",
            witness: g.label(x).to_string(),
            found: tt(x).to_string(),
            expected: quarter(ni - 3 * mu - 6),
        });
    }
    let params = params_or_reject(n, mu)?;
    Ok(SignatureVerdict {
        kind: SignatureKind::Quasi,
        params,
        witness_mu: mu,
        set: s.clone(),
        t_set: None,
        matrix_dim: n,
    })
}

/// `H \ {e}` for a subgroup `H`, accepted exactly when `H` has index 2.
pub fn index2_subgroup_set(g: &GroupTable, h: &SubsetMask) -> Verification {
    g.check_mask(h)?;
    if !g.is_subgroup(h) {
        return Err(Error::NotSubgroup.into());
    }
    if 2 * h.len() != g.order() {
        return Err(Rejection::IndexNotTwo { subgroup: h.len(), order: g.order() });
    }
    let mut s = h.clone();
    s.remove(ElementIndex::IDENTITY);
    let v = verify_signature_set(g, &s)?;
    if v.witness_mu != g.order() as i64 - 2 {
        return Err(Rejection::CriteriaDisagree(format!("index-2 subgroup gave mu = {}", v.witness_mu)));
    }
    Ok(v)
}

/// `+1` on `S`, `-1` on its complement, `0` at the identity.
pub fn sign_coefficients(g: &GroupTable, s: &SubsetMask) -> Vec<i64> {
    g.elements()
        .map(|x| {
            if x == ElementIndex::IDENTITY {
                0
            } else if s.contains(x) {
                1
            } else {
                -1
            }
        })
        .collect()
}

/// `sum_S rho(g) - sum_T rho(h)`; fails unless `S` and `T` are
/// inverse-closed.
pub fn signature_matrix(g: &GroupTable, s: &SubsetMask) -> Result<SeidelMatrixInt, Error> {
    g.check_mask(s)?;
    s.require_identity_free()?;
    SeidelMatrix::new(regrep_sum(g, &sign_coefficients(g, s))?)
}

pub fn quasi_signature_matrix(g: &GroupTable, s: &SubsetMask) -> Result<SeidelMatrixInt, Error> {
    Ok(border_standard(&signature_matrix(g, s)?))
}

/// The matrix a verdict describes, built from scratch.
pub fn verdict_matrix_int(g: &GroupTable, v: &SignatureVerdict) -> Result<SeidelMatrixInt, Error> {
    match v.kind {
        SignatureKind::Signature => signature_matrix(g, &v.set),
        SignatureKind::Quasi => quasi_signature_matrix(g, &v.set),
        _ => Err(Error::Parse(format!("{} verdicts carry Eisenstein matrices", v.kind.as_str()))),
    }
}

/// Whether the matrix criterion accepts `S` with the same `mu`, without
/// using any counting.
pub fn matrix_criterion(g: &GroupTable, s: &SubsetMask, kind: SignatureKind) -> Option<i64> {
    let m = match kind {
        SignatureKind::Signature => signature_matrix(g, s).ok()?,
        SignatureKind::Quasi => quasi_signature_matrix(g, s).ok()?,
        _ => return None,
    };
    certify_two_eigenvalue(&m).ok().map(|c| c.mu)
}
