//! Floating-point frames: the Gram matrix `(k/n) I + c Q` of a certified
//! Seidel matrix, its factorization `P = V V*`, and checks of the frame
//! properties.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::matrix::{certify_two_eigenvalue, CertifyError, Scalar, SeidelMatrix};
use crate::params::FrameParams;

pub type ComplexMatrix = Vec<Vec<Complex64>>;

pub const DEFAULT_TOL: f64 = 1e-9;

const PARSEVAL_SAMPLES: usize = 100;
const PARSEVAL_SEED: u64 = 0x00f0_2a3e;
const MAX_SWEEPS: usize = 100;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FrameError {
    #[error(transparent)]
    Certificate(#[from] CertifyError),
    #[error("certificate gives (n, mu) = ({n}, {mu}) but the parameters say ({expected_n}, {expected_mu})")]
    ParamsMismatch { n: u64, mu: i64, expected_n: u64, expected_mu: i64 },
    #[error("matrix is not a rank-{k} projection: spectrum {spectrum:?}")]
    Spectrum { k: usize, spectrum: Vec<f64> },
    #[error("V V* differs from the Gram matrix by {0:e}")]
    Factorization(f64),
    #[error("{0}")]
    Shape(String),
}

/// `n` vectors in `C^k`, stored as the rows of the analysis operator `V`
/// (`n x k`, `V V* = P`). Frame vector `f_i` is the conjugate of row `i`.
#[derive(Debug, Clone, PartialEq)]
pub struct FrameVectors {
    pub n: usize,
    pub k: usize,
    pub vectors: ComplexMatrix,
}

impl FrameVectors {
    pub fn frame_vector(&self, i: usize) -> Vec<Complex64> {
        self.vectors[i].iter().map(|z| z.conj()).collect()
    }

    /// `<f_i, f_j>`, which equals `P[j][i]`.
    pub fn inner(&self, i: usize, j: usize) -> Complex64 {
        self.vectors[j].iter().zip(&self.vectors[i]).map(|(a, b)| a * b.conj()).sum()
    }
}

/// `(k/n) I + c_{n,k} Q` with Eisenstein entries mapped into `C`.
pub fn gram_from_certificate<T: Scalar>(
    q: &SeidelMatrix<T>,
    params: &FrameParams,
) -> Result<ComplexMatrix, FrameError> {
    let cert = certify_two_eigenvalue(q)?;
    if cert.params.n != params.n || cert.mu != params.mu {
        return Err(FrameError::ParamsMismatch {
            n: cert.params.n,
            mu: cert.mu,
            expected_n: params.n,
            expected_mu: params.mu,
        });
    }
    let diag = params.k as f64 / params.n as f64;
    let mut p = q.matrix().to_complex();
    for (i, row) in p.iter_mut().enumerate() {
        for z in row.iter_mut() {
            *z *= params.c_value;
        }
        row[i] = Complex64::new(diag, 0.0);
    }
    Ok(p)
}

/// Eigenvalues (descending) and unitary eigenvector columns of a Hermitian
/// matrix, by cyclic Jacobi rotations.
pub fn hermitian_eigen(a: &ComplexMatrix) -> (Vec<f64>, ComplexMatrix) {
    let n = a.len();
    let mut a = a.clone();
    let mut v: ComplexMatrix =
        (0..n).map(|i| (0..n).map(|j| Complex64::new((i == j) as u8 as f64, 0.0)).collect()).collect();
    let scale: f64 = a.iter().flatten().map(|z| z.norm_sqr()).sum::<f64>().sqrt().max(f64::MIN_POSITIVE);
    for _ in 0..MAX_SWEEPS {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[i][j].norm_sqr())
            .sum::<f64>()
            .sqrt();
        if off <= 1e-15 * scale {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let r = a[p][q].norm();
                if r <= 1e-300 {
                    continue;
                }
                let phase = a[p][q] / r;
                let theta = 0.5 * (2.0 * r).atan2(a[p][p].re - a[q][q].re);
                let (s, c) = theta.sin_cos();
                let upp = Complex64::new(c, 0.0);
                let upq = Complex64::new(-s, 0.0);
                let uqp = phase.conj() * s;
                let uqq = phase.conj() * c;
                for row in a.iter_mut().chain(v.iter_mut()) {
                    let (xp, xq) = (row[p], row[q]);
                    row[p] = xp * upp + xq * uqp;
                    row[q] = xp * upq + xq * uqq;
                }
                for j in 0..n {
                    let (xp, xq) = (a[p][j], a[q][j]);
                    a[p][j] = upp.conj() * xp + uqp.conj() * xq;
                    a[q][j] = upq.conj() * xp + uqq.conj() * xq;
                }
                a[p][q] = Complex64::new(0.0, 0.0);
                a[q][p] = Complex64::new(0.0, 0.0);
            }
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[j][j].re.total_cmp(&a[i][i].re).then(i.cmp(&j)));
    let values = order.iter().map(|&i| a[i][i].re).collect();
    let vectors = (0..n).map(|r| order.iter().map(|&i| v[r][i]).collect()).collect();
    (values, vectors)
}

/// `V` with `V V* = P` from the `k` unit eigenvectors of a rank-`k`
/// projection; each column's first nonzero entry is made real-positive.
pub fn factor_gram(p: &ComplexMatrix, k: usize, tol: f64) -> Result<FrameVectors, FrameError> {
    let n = p.len();
    if p.iter().any(|row| row.len() != n) {
        return Err(FrameError::Shape("Gram matrix is not square".into()));
    }
    if k > n {
        return Err(FrameError::Shape(format!("rank {k} exceeds size {n}")));
    }
    let (values, vecs) = hermitian_eigen(p);
    let ones = values.iter().filter(|&&x| (x - 1.0).abs() <= tol).count();
    let zeros = values.iter().filter(|&&x| x.abs() <= tol).count();
    if ones != k || zeros != n - k {
        return Err(FrameError::Spectrum { k, spectrum: values });
    }
    let mut cols: Vec<Vec<Complex64>> = (0..k)
        .map(|c| {
            let root = values[c].max(0.0).sqrt();
            (0..n).map(|r| vecs[r][c] * root).collect()
        })
        .collect();
    for col in &mut cols {
        if let Some(lead) = col.iter().find(|z| z.norm() > 1e-12).copied() {
            let phase = lead.conj() / lead.norm();
            col.iter_mut().for_each(|z| *z *= phase);
        }
    }
    let vectors: ComplexMatrix = (0..n).map(|r| cols.iter().map(|col| col[r]).collect()).collect();
    let frame = FrameVectors { n, k, vectors };
    let deviation = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .map(|(i, j)| (frame.inner(j, i) - p[i][j]).norm())
        .fold(0.0, f64::max);
    if deviation > 10.0 * tol {
        return Err(FrameError::Factorization(deviation));
    }
    Ok(frame)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FrameReport {
    pub n: usize,
    pub k: usize,
    pub tol: f64,
    /// `max |(V* V - I)_{ij}|`.
    pub tightness_deviation: f64,
    /// `max |‖f_i‖^2 - k/n|`.
    pub uniformity_deviation: f64,
    /// `max_{i != j} ||<f_i, f_j>| - c|`.
    pub equiangularity_deviation: f64,
    /// Largest relative error of `sum_j |<x, f_j>|^2 = ‖x‖^2` over random `x`.
    pub parseval_deviation: f64,
    pub tight: bool,
    pub uniform: bool,
    pub equiangular: bool,
    /// Judged at `10 * tol`.
    pub parseval: bool,
}

impl FrameReport {
    pub fn pass(&self) -> bool {
        self.tight && self.uniform && self.equiangular && self.parseval
    }

    pub fn max_deviation(&self) -> f64 {
        self.tightness_deviation.max(self.uniformity_deviation).max(self.equiangularity_deviation)
    }
}

fn random_vector(rng: &mut ChaCha8Rng, k: usize) -> Vec<Complex64> {
    (0..k).map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))).collect()
}

pub fn verify_frame(v: &FrameVectors, params: &FrameParams, tol: f64) -> Result<FrameReport, FrameError> {
    let (n, k) = (v.n, v.k);
    if n as u64 != params.n || k as u64 != params.k || v.vectors.len() != n || v.vectors.iter().any(|r| r.len() != k) {
        return Err(FrameError::Shape(format!(
            "frame is {n} x {k} but the parameters are ({}, {})",
            params.n, params.k
        )));
    }
    let mut tightness: f64 = 0.0;
    for a in 0..k {
        for b in 0..k {
            let dot: Complex64 = v.vectors.iter().map(|row| row[a].conj() * row[b]).sum();
            let want = if a == b { 1.0 } else { 0.0 };
            tightness = tightness.max((dot - want).norm());
        }
    }
    let target = k as f64 / n as f64;
    let uniformity = (0..n).map(|i| (v.inner(i, i).re - target).abs()).fold(0.0, f64::max);
    let equiangularity = (0..n)
        .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
        .map(|(i, j)| (v.inner(i, j).norm() - params.c_value).abs())
        .fold(0.0, f64::max);

    let mut rng = ChaCha8Rng::seed_from_u64(PARSEVAL_SEED);
    let mut parseval: f64 = 0.0;
    for _ in 0..PARSEVAL_SAMPLES {
        let x = random_vector(&mut rng, k);
        let norm: f64 = x.iter().map(|z| z.norm_sqr()).sum();
        // <x, f_j> = sum_l x_l conj(f_j,l) = sum_l x_l V_jl
        let energy: f64 =
            v.vectors.iter().map(|row| row.iter().zip(&x).map(|(a, b)| a * b).sum::<Complex64>().norm_sqr()).sum();
        parseval = parseval.max((energy - norm).abs() / norm.max(f64::MIN_POSITIVE));
    }
    Ok(FrameReport {
        n,
        k,
        tol,
        tightness_deviation: tightness,
        uniformity_deviation: uniformity,
        equiangularity_deviation: equiangularity,
        parseval_deviation: parseval,
        tight: tightness <= tol,
        uniform: uniformity <= tol,
        equiangular: equiangularity <= tol,
        parseval: parseval <= 10.0 * tol,
    })
}

/// Certify, build the Gram matrix and factor it.
pub fn frame_from_matrix<T: Scalar>(q: &SeidelMatrix<T>, tol: f64) -> Result<(FrameVectors, FrameParams), FrameError> {
    let cert = certify_two_eigenvalue(q)?;
    let p = gram_from_certificate(q, &cert.params)?;
    let frame = factor_gram(&p, cert.params.k as usize, tol)?;
    Ok((frame, cert.params))
}
