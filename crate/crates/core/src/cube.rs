//! Cube-root signature pairs: partitions `G \ {e} = S ⊔ T ⊔ V` weighted by
//! `1, w, w^2`, optionally bordered into standard form.

use serde::Serialize;

use crate::counting::count_pair_unchecked;
use crate::eisenstein::EisensteinInt;
use crate::error::Error;
use crate::group::{ElementIndex, GroupTable};
use crate::matrix::{
    border_standard, certify_two_eigenvalue, regrep_sum_with, Representation, SeidelMatrix, SeidelMatrixEis,
    SquareMatrix,
};
use crate::params::exact_sqrt;
use crate::signature::{check_inverse_closed, Rejection, SignatureKind, SignatureVerdict, Verification};
use crate::subset::SubsetMask;

type E = EisensteinInt;

/// Largest group order on which the counting form is evaluated alongside
/// the matrix identity.
pub const COUNTING_CROSS_CHECK_MAX: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CubePartition {
    pub s: SubsetMask,
    pub t: SubsetMask,
    pub v: SubsetMask,
}

impl CubePartition {
    /// `V` is whatever `S` and `T` leave of `G \ {e}`.
    pub fn new(g: &GroupTable, s: &SubsetMask, t: &SubsetMask) -> Result<Self, Error> {
        g.check_mask(s)?;
        g.check_mask(t)?;
        s.require_identity_free()?;
        t.require_identity_free()?;
        if let Some(x) = s.intersection(t).iter().next() {
            return Err(Error::Overlap(x.0));
        }
        let v = s.union(t).complement_nonidentity();
        Ok(CubePartition { s: s.clone(), t: t.clone(), v })
    }

    pub fn coefficient(&self, x: ElementIndex) -> E {
        if self.s.contains(x) {
            E::ONE
        } else if self.t.contains(x) {
            E::OMEGA
        } else if self.v.contains(x) {
            E::OMEGA2
        } else {
            E::ZERO
        }
    }

    pub fn coefficients(&self) -> Vec<E> {
        (0..self.s.owner_order()).map(|x| self.coefficient(ElementIndex(x))).collect()
    }
}

/// `sum_S rho(g) + w sum_T rho(g) + w^2 sum_V rho(g)`; Hermitian exactly
/// when `S = S^-1` and `V = T^-1`.
pub fn build_cube_matrix(g: &GroupTable, p: &CubePartition) -> Result<SquareMatrix<E>, Error> {
    build_cube_matrix_with(g, p, Representation::Left)
}

pub fn build_cube_matrix_with(
    g: &GroupTable,
    p: &CubePartition,
    rep: Representation,
) -> Result<SquareMatrix<E>, Error> {
    g.check_mask(&p.s)?;
    regrep_sum_with(g, &p.coefficients(), rep)
}

/// The Seidel matrix a cube verdict certifies.
pub fn cube_seidel_matrix(
    g: &GroupTable,
    p: &CubePartition,
    bordered: bool,
    rep: Representation,
) -> Result<SeidelMatrixEis, Error> {
    let q = SeidelMatrix::new(build_cube_matrix_with(g, p, rep)?)?;
    Ok(if bordered { border_standard(&q) } else { q })
}

fn check_hermitian_pair(g: &GroupTable, p: &CubePartition) -> Result<(), Rejection> {
    check_inverse_closed(g, &p.s, "S = S^-1")?;
    if let Some(x) = p.t.iter().find(|&x| !p.v.contains(g.inv(x))) {
        return Err(Rejection::NotInverseClosed { set: "V = T^-1", witness: g.label(x).to_string() });
    }
    if p.t.len() != p.v.len() {
        let x = p.v.iter().find(|&x| !p.t.contains(g.inv(x))).expect("|V| > |T|");
        return Err(Rejection::NotInverseClosed { set: "V = T^-1", witness: g.label(x).to_string() });
    }
    Ok(())
}

/// Coefficient of `rho(x)` in `Q^2`, assembled from the nine pair counts.
pub fn square_coefficient(g: &GroupTable, p: &CubePartition, x: ElementIndex) -> E {
    let parts = [(&p.s, E::ONE), (&p.t, E::OMEGA), (&p.v, E::OMEGA2)];
    let mut acc = E::ZERO;
    for (a, ca) in parts {
        for (b, cb) in parts {
            let n = count_pair_unchecked(g, a, b, x.0) as i64;
            acc += ca * cb * E::from_int(n);
        }
    }
    acc
}

/// The counting form of the two-eigenvalue condition: every `x != e` has
/// `Q^2` coefficient `mu c(x)` (or `mu c(x) - 1` when bordered, with
/// `mu = |S| - |T|`). Returns the common `mu`.
pub fn counting_criterion(g: &GroupTable, p: &CubePartition, bordered: bool) -> Option<i64> {
    let shift = if bordered { E::ONE } else { E::ZERO };
    let mut elements = g.elements().skip(1);
    let mu = if bordered {
        p.s.len() as i64 - p.t.len() as i64
    } else {
        let x = elements.next()?;
        let m = square_coefficient(g, p, x) * p.coefficient(x).conj();
        if !m.is_rational() {
            return None;
        }
        m.a
    };
    g.elements()
        .skip(1)
        .all(|x| square_coefficient(g, p, x) == E::from_int(mu) * p.coefficient(x) - shift)
        .then_some(mu)
}

fn verify_pair(g: &GroupTable, s: &SubsetMask, t: &SubsetMask, kind: SignatureKind) -> Verification {
    let p = CubePartition::new(g, s, t)?;
    let bordered = kind.is_bordered();
    check_hermitian_pair(g, &p)?;
    let q = cube_seidel_matrix(g, &p, bordered, Representation::Left)?;
    let matrix = certify_two_eigenvalue(&q);
    if g.order() <= COUNTING_CROSS_CHECK_MAX {
        let counted = counting_criterion(g, &p, bordered);
        let certified = matrix.as_ref().ok().map(|c| c.mu);
        if counted != certified {
            return Err(Rejection::CriteriaDisagree(format!(
                "matrix criterion gave {certified:?}, counting gave {counted:?}"
            )));
        }
    }
    let cert = matrix?;
    if bordered && cert.mu != s.len() as i64 - t.len() as i64 {
        return Err(Rejection::CriteriaDisagree(format!("bordered mu = {} differs from |S| - |T|", cert.mu)));
    }
    Ok(SignatureVerdict {
        kind,
        params: cert.params,
        witness_mu: cert.mu,
        set: p.s,
        t_set: Some(p.t),
        matrix_dim: q.n(),
    })
}

/// `(S, T)` with the unbordered matrix on `|G|` vectors.
pub fn verify_signature_pair(g: &GroupTable, s: &SubsetMask, t: &SubsetMask) -> Verification {
    verify_pair(g, s, t, SignatureKind::CubePair)
}

/// `(S, T)` with the bordered matrix on `|G| + 1` vectors; `mu = |S| - |T|`.
pub fn verify_quasi_signature_pair(g: &GroupTable, s: &SubsetMask, t: &SubsetMask) -> Verification {
    verify_pair(g, s, t, SignatureKind::CubeQuasi)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CubeContext {
    Pair,
    QuasiPair,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CubeScreen {
    pub pass: bool,
    pub failures: Vec<String>,
}

/// Arithmetic conditions every nontrivial pair (both `S` and `T`
/// non-empty) satisfies.
///
/// Pairs: `n ≡ 0 (mod 3)`, `mu ≡ 1 (mod 3)`, `4(n-1) + mu^2` a square
/// divisible by 9. Quasi-pairs: the discriminant is a square and
/// `|S| = (n+2mu-2)/3`, `|T| = (n-2-mu)/3` are non-negative integers.
pub fn cube_necessary_conditions(n: u64, mu: i64, context: CubeContext) -> CubeScreen {
    let mut failures = Vec::new();
    let ni = n as i64;
    let d = 4 * (ni - 1) + mu * mu;
    let square = d >= 0 && exact_sqrt(d as u64).is_some();
    if !square {
        failures.push(format!("4(n-1) + mu^2 = {d} is not a perfect square"));
    }
    match context {
        CubeContext::Pair => {
            if !n.is_multiple_of(3) {
                failures.push(format!("n = {n} is not divisible by 3"));
            }
            if mu.rem_euclid(3) != 1 {
                failures.push(format!("mu = {mu} is not 1 mod 3"));
            }
            if square && d % 9 != 0 {
                failures.push(format!("4(n-1) + mu^2 = {d} is not divisible by 9"));
            }
        }
        CubeContext::QuasiPair => {
            let s3 = ni + 2 * mu - 2;
            let t3 = ni - 2 - mu;
            if s3 < 0 || s3 % 3 != 0 {
                failures.push(format!("|S| = ({s3})/3 is not a non-negative integer"));
            }
            if t3 < 0 || t3 % 3 != 0 {
                failures.push(format!("|T| = ({t3})/3 is not a non-negative integer"));
            }
        }
    }
    CubeScreen { pass: failures.is_empty(), failures }
}

/// The unique `h != e` with `h^2 = x` in an abelian group of odd order.
pub fn unique_square_root(g: &GroupTable, x: ElementIndex) -> Result<ElementIndex, Error> {
    g.element(x.0)?;
    if !g.is_abelian() {
        return Err(Error::NonAbelian);
    }
    if g.order().is_multiple_of(2) {
        return Err(Error::EvenOrder);
    }
    if x == ElementIndex::IDENTITY {
        return Err(Error::IdentityElement);
    }
    let h = g.pow(x, g.element_order(x).div_ceil(2));
    debug_assert_eq!(g.elements().filter(|&y| g.mul(y, y) == x).count(), 1);
    Ok(h)
}

/// Abelian groups of order `≡ 3 (mod 6)` carry no signature pair with
/// `S` non-empty and `mu ≡ 4 (mod 6)`.
pub fn nmu_excluded(n: u64, mu: i64, abelian: bool) -> bool {
    abelian && n % 6 == 3 && mu.rem_euclid(6) == 4
}
