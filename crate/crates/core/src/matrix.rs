//! Exact dense square matrices over `i64` and the Eisenstein integers,
//! regular-representation sums, the two-eigenvalue certificate and
//! switching.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::eisenstein::EisensteinInt;
use crate::error::{Error, Result};
use crate::group::GroupTable;
use crate::params::{params_from_mu, FrameParams, Infeasible};

/// Entry type of an exact matrix.
pub trait Scalar:
    Copy
    + PartialEq
    + Eq
    + Send
    + Sync
    + fmt::Debug
    + fmt::Display
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    const ZERO: Self;
    const ONE: Self;

    fn from_int(v: i64) -> Self;
    fn conj(self) -> Self;
    /// Admissible off-diagonal Seidel entry and switching scalar.
    fn is_seidel_unit(self) -> bool;
    /// The value as an integer when it has no irrational part.
    fn as_integer(self) -> Option<i64>;
    fn to_complex(self) -> Complex64;
    fn cell(self) -> String;
}

impl Scalar for i64 {
    const ZERO: Self = 0;
    const ONE: Self = 1;

    fn from_int(v: i64) -> Self {
        v
    }
    fn conj(self) -> Self {
        self
    }
    fn is_seidel_unit(self) -> bool {
        self == 1 || self == -1
    }
    fn as_integer(self) -> Option<i64> {
        Some(self)
    }
    fn to_complex(self) -> Complex64 {
        Complex64::new(self as f64, 0.0)
    }
    fn cell(self) -> String {
        self.to_string()
    }
}

impl Scalar for EisensteinInt {
    const ZERO: Self = EisensteinInt::ZERO;
    const ONE: Self = EisensteinInt::ONE;

    fn from_int(v: i64) -> Self {
        EisensteinInt::from_int(v)
    }
    fn conj(self) -> Self {
        EisensteinInt::conj(self)
    }
    fn is_seidel_unit(self) -> bool {
        self.is_cube_root_of_unity()
    }
    fn as_integer(self) -> Option<i64> {
        self.is_rational().then_some(self.a)
    }
    fn to_complex(self) -> Complex64 {
        EisensteinInt::to_complex(self)
    }
    fn cell(self) -> String {
        EisensteinInt::cell(self)
    }
}

/// Dense row-major `n x n` matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct SquareMatrix<T> {
    n: usize,
    data: Vec<T>,
}

const PAR_ROWS: usize = 96;

impl<T: Scalar> SquareMatrix<T> {
    pub fn zeros(n: usize) -> Self {
        SquareMatrix { n, data: vec![T::ZERO; n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.set(i, i, T::ONE);
        }
        m
    }

    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> T) -> Self {
        let data = (0..n * n).map(|x| f(x / n, x % n)).collect();
        SquareMatrix { n, data }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let n = rows.len();
        if let Some((i, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != n) {
            return Err(Error::Dimension(format!("row {i} has {} entries, expected {n}", r.len())));
        }
        Ok(SquareMatrix { n, data: rows.into_iter().flatten().collect() })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> T {
        self.data[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.n + j] = v;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[T]> {
        self.data.chunks(self.n.max(1)).take(self.n)
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        self.rows().map(|r| r.to_vec()).collect()
    }

    pub fn conj_transpose(&self) -> Self {
        Self::from_fn(self.n, |i, j| self.get(j, i).conj())
    }

    pub fn scale(&self, c: T) -> Self {
        SquareMatrix { n: self.n, data: self.data.iter().map(|&x| c * x).collect() }
    }

    pub fn is_hermitian(&self) -> bool {
        (0..self.n).all(|i| (i..self.n).all(|j| self.get(j, i) == self.get(i, j).conj()))
    }

    /// Exact product; rows are computed in parallel for large `n`.
    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "dimension mismatch");
        let n = self.n;
        let mut out = vec![T::ZERO; n * n];
        let row_job = |(i, out_row): (usize, &mut [T])| {
            for (k, &a) in self.row(i).iter().enumerate() {
                if a == T::ZERO {
                    continue;
                }
                for (o, &b) in out_row.iter_mut().zip(other.row(k)) {
                    *o = *o + a * b;
                }
            }
        };
        if n >= PAR_ROWS {
            out.par_chunks_mut(n).enumerate().for_each(row_job);
        } else {
            out.chunks_mut(n.max(1)).enumerate().for_each(row_job);
        }
        SquareMatrix { n, data: out }
    }

    pub fn to_complex(&self) -> Vec<Vec<Complex64>> {
        self.rows().map(|r| r.iter().map(|x| x.to_complex()).collect()).collect()
    }
}

impl<T: Scalar> Add for &SquareMatrix<T> {
    type Output = SquareMatrix<T>;
    fn add(self, o: Self) -> SquareMatrix<T> {
        assert_eq!(self.n, o.n, "dimension mismatch");
        SquareMatrix { n: self.n, data: self.data.iter().zip(&o.data).map(|(&a, &b)| a + b).collect() }
    }
}

impl<T: Scalar> Sub for &SquareMatrix<T> {
    type Output = SquareMatrix<T>;
    fn sub(self, o: Self) -> SquareMatrix<T> {
        assert_eq!(self.n, o.n, "dimension mismatch");
        SquareMatrix { n: self.n, data: self.data.iter().zip(&o.data).map(|(&a, &b)| a - b).collect() }
    }
}

impl<T: Scalar> Mul for &SquareMatrix<T> {
    type Output = SquareMatrix<T>;
    fn mul(self, o: Self) -> SquareMatrix<T> {
        self.matmul(o)
    }
}

impl<T: Scalar> fmt::Debug for SquareMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "SquareMatrix({})", self.n)?;
        for r in self.rows() {
            let cells: Vec<String> = r.iter().map(|x| format!("{:>3}", x.cell())).collect();
            writeln!(f, "[{}]", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Which regular representation a group-ring sum is built from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Representation {
    /// `e_h -> e_(gh)`: entry `(r, c)` is the coefficient of `r c^-1`.
    #[default]
    Left,
    /// `e_h -> e_(h g^-1)`: entry `(r, c)` is the coefficient of `r^-1 c`.
    Right,
}

/// `sum_g coeffs[g] * rho(g)` for the chosen regular representation `rho`.
pub fn regrep_sum<T: Scalar>(g: &GroupTable, coeffs: &[T]) -> Result<SquareMatrix<T>> {
    regrep_sum_with(g, coeffs, Representation::Left)
}

pub fn regrep_sum_with<T: Scalar>(g: &GroupTable, coeffs: &[T], rep: Representation) -> Result<SquareMatrix<T>> {
    let n = g.order();
    if coeffs.len() != n {
        return Err(Error::CoefficientLength { expected: n, found: coeffs.len() });
    }
    if coeffs[0] != T::ZERO {
        return Err(Error::IdentityCoefficient);
    }
    Ok(SquareMatrix::from_fn(n, |r, c| {
        let x = match rep {
            Representation::Left => g.mul_raw(r, g.inv_raw(c)),
            Representation::Right => g.mul_raw(g.inv_raw(r), c),
        };
        coeffs[x]
    }))
}

/// A self-adjoint matrix with zero diagonal and unimodular off-diagonal
/// entries (`±1`, or cube roots of unity in the Eisenstein case).
#[derive(Clone, PartialEq, Eq)]
pub struct SeidelMatrix<T> {
    m: SquareMatrix<T>,
}

pub type SeidelMatrixInt = SeidelMatrix<i64>;
pub type SeidelMatrixEis = SeidelMatrix<EisensteinInt>;

impl<T: Scalar> SeidelMatrix<T> {
    pub fn new(m: SquareMatrix<T>) -> Result<Self> {
        let n = m.n();
        for i in 0..n {
            if m.get(i, i) != T::ZERO {
                return Err(Error::NotSeidel(format!("nonzero diagonal entry at {i}")));
            }
            for j in 0..n {
                if i == j {
                    continue;
                }
                let x = m.get(i, j);
                if !x.is_seidel_unit() {
                    return Err(Error::NotSeidel(format!("entry ({i},{j}) = {x} is not unimodular")));
                }
                if m.get(j, i) != x.conj() {
                    return Err(Error::NotSeidel(format!("entry ({j},{i}) breaks self-adjointness")));
                }
            }
        }
        Ok(SeidelMatrix { m })
    }

    pub fn n(&self) -> usize {
        self.m.n()
    }

    pub fn get(&self, i: usize, j: usize) -> T {
        self.m.get(i, j)
    }

    pub fn matrix(&self) -> &SquareMatrix<T> {
        &self.m
    }

    pub fn into_matrix(self) -> SquareMatrix<T> {
        self.m
    }

    /// Whether the first row and column are all ones off the diagonal.
    pub fn is_standard(&self) -> bool {
        (1..self.n()).all(|i| self.get(0, i) == T::ONE)
    }
}

impl<T: Scalar> fmt::Debug for SeidelMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Seidel{:?}", self.m)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TwoEigenvalueCertificate {
    pub mu: i64,
    pub params: FrameParams,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertifyError {
    #[error("matrix of size {0} has no off-diagonal entries")]
    TooSmall(usize),
    #[error("mu = {0} is not real")]
    NonRealMu(String),
    #[error("Q^2 differs from (n-1)I + mu Q at ({row},{col}): expected {expected}, found {found}")]
    Mismatch { row: usize, col: usize, expected: String, found: String },
    #[error("mu = {mu} gives no frame: {reason}")]
    Infeasible { mu: i64, reason: Infeasible },
}

/// Checks `Q^2 = (n-1)I + mu Q` entrywise in exact arithmetic, with `mu`
/// read off position `(0,1)`.
pub fn certify_two_eigenvalue<T: Scalar>(q: &SeidelMatrix<T>) -> Result<TwoEigenvalueCertificate, CertifyError> {
    let n = q.n();
    if n < 2 {
        return Err(CertifyError::TooSmall(n));
    }
    let sq = q.m.matmul(&q.m);
    let mu_s = sq.get(0, 1) * q.get(0, 1).conj();
    let mu = mu_s.as_integer().ok_or_else(|| CertifyError::NonRealMu(mu_s.cell()))?;
    let diag = T::from_int(n as i64 - 1);
    let mu_t = T::from_int(mu);
    for i in 0..n {
        for j in 0..n {
            let expected = if i == j { diag } else { mu_t * q.get(i, j) };
            let found = sq.get(i, j);
            if found != expected {
                return Err(CertifyError::Mismatch { row: i, col: j, expected: expected.cell(), found: found.cell() });
            }
        }
    }
    let params = params_from_mu(n as u64, mu).map_err(|reason| CertifyError::Infeasible { mu, reason })?;
    Ok(TwoEigenvalueCertificate { mu, params })
}

/// Prepends a first row and column of ones with a zero corner.
pub fn border_standard<T: Scalar>(q: &SeidelMatrix<T>) -> SeidelMatrix<T> {
    let n = q.n() + 1;
    let m = SquareMatrix::from_fn(n, |i, j| match (i, j) {
        (0, 0) => T::ZERO,
        (0, _) | (_, 0) => T::ONE,
        _ => q.get(i - 1, j - 1),
    });
    SeidelMatrix { m }
}

/// `U P Q P^t U*` with `U = diag(d)` and `P e_i = e_(perm[i])`.
pub fn switch<T: Scalar>(q: &SeidelMatrix<T>, d: &[T], perm: &[usize]) -> Result<SeidelMatrix<T>> {
    let n = q.n();
    if d.len() != n || perm.len() != n {
        return Err(Error::Dimension(format!(
            "switching data of lengths {} and {} for a matrix of size {n}",
            d.len(),
            perm.len()
        )));
    }
    if let Some(i) = d.iter().position(|x| !x.is_seidel_unit()) {
        return Err(Error::NotUnimodular(i));
    }
    let mut inv = vec![usize::MAX; n];
    for (i, &p) in perm.iter().enumerate() {
        if p >= n || inv[p] != usize::MAX {
            return Err(Error::InvalidPermutation);
        }
        inv[p] = i;
    }
    let m = SquareMatrix::from_fn(n, |i, j| d[i] * q.get(inv[i], inv[j]) * d[j].conj());
    Ok(SeidelMatrix { m })
}

/// Switches so that the first row and column are all ones.
pub fn to_standard_form<T: Scalar>(q: &SeidelMatrix<T>) -> SeidelMatrix<T> {
    let n = q.n();
    let d: Vec<T> = (0..n).map(|i| if i == 0 { T::ONE } else { q.get(0, i) }).collect();
    let id: Vec<usize> = (0..n).collect();
    switch(q, &d, &id).expect("first-row entries are unimodular")
}

/// Entries `±1` and `M^t M = nI`.
pub fn is_hadamard(m: &SquareMatrix<i64>) -> bool {
    let n = m.n();
    if !m.rows().flatten().all(|&x| x == 1 || x == -1) {
        return false;
    }
    let mtm = m.conj_transpose().matmul(m);
    mtm == SquareMatrix::identity(n).scale(n as i64)
}

/// Zero diagonal, `±1` off the diagonal and `M^t M = (n-1)I`.
pub fn is_conference(m: &SquareMatrix<i64>) -> bool {
    let n = m.n();
    for i in 0..n {
        for j in 0..n {
            let x = m.get(i, j);
            if (i == j && x != 0) || (i != j && x != 1 && x != -1) {
                return false;
            }
        }
    }
    let mtm = m.conj_transpose().matmul(m);
    mtm == SquareMatrix::identity(n).scale(n as i64 - 1)
}
