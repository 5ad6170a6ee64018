//! Exact relations between the frame size `n`, the dimension `k`, the
//! Seidel parameter `mu` (from `Q^2 = (n-1)I + mu Q`) and the two
//! eigenvalues.
//!
//! `mu` is always an integer here. Feasibility is decided in integer
//! arithmetic; the eigenvalues and the equiangularity constant are
//! reported as floats.

use serde::Serialize;
use thiserror::Error;

use crate::group::is_prime;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FrameParams {
    pub n: u64,
    pub k: u64,
    pub mu: i64,
    /// `mu^2 + 4(n-1)`.
    pub discriminant: u64,
    pub c_value: f64,
    pub lambda1: f64,
    pub lambda2: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum Infeasible {
    #[error("frame size must be at least 2")]
    TooSmall,
    #[error("mu = 0 needs an even frame size")]
    OddWithZeroMu,
    #[error("discriminant {0} is not a perfect square")]
    NonSquareDiscriminant(u64),
    #[error("k is not an integer")]
    NonIntegralK,
    #[error("k = {0} is outside 1..n-1")]
    KOutOfRange(i64),
}

/// Floor square root by integer Newton iteration.
pub fn isqrt(n: u64) -> u64 {
    if n < 2 {
        return n;
    }
    let mut x = n;
    let mut y = x.div_ceil(2);
    while y < x {
        x = y;
        y = (x + n / x) / 2;
    }
    x
}

pub fn exact_sqrt(n: u64) -> Option<u64> {
    let r = isqrt(n);
    (r * r == n).then_some(r)
}

/// Frame parameters for a Seidel matrix of size `n` with parameter `mu`.
pub fn params_from_mu(n: u64, mu: i64) -> Result<FrameParams, Infeasible> {
    if n < 2 {
        return Err(Infeasible::TooSmall);
    }
    let discriminant = (mu * mu) as u64 + 4 * (n - 1);
    let k = if mu == 0 {
        if !n.is_multiple_of(2) {
            return Err(Infeasible::OddWithZeroMu);
        }
        (n / 2) as i64
    } else {
        let s = exact_sqrt(discriminant).ok_or(Infeasible::NonSquareDiscriminant(discriminant))? as i64;
        let num = n as i64 * (s - mu);
        if num % (2 * s) != 0 {
            return Err(Infeasible::NonIntegralK);
        }
        num / (2 * s)
    };
    if k < 1 || k > n as i64 - 1 {
        return Err(Infeasible::KOutOfRange(k));
    }
    let root = (discriminant as f64).sqrt();
    Ok(FrameParams {
        n,
        k: k as u64,
        mu,
        discriminant,
        c_value: c_value(n, k as u64),
        lambda1: (mu as f64 - root) / 2.0,
        lambda2: (mu as f64 + root) / 2.0,
    })
}

/// A value of `mu` computed from `(n, k)`, with its exact reduced fraction
/// when `(n-1) k (n-k)` is a perfect square.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MuValue {
    pub value: f64,
    pub exact: Option<(i64, i64)>,
}

impl MuValue {
    pub fn as_integer(&self) -> Option<i64> {
        match self.exact {
            Some((num, 1)) => Some(num),
            _ => None,
        }
    }
}

pub fn mu_from_k(n: u64, k: u64) -> Result<MuValue, Infeasible> {
    if n < 2 {
        return Err(Infeasible::TooSmall);
    }
    if k < 1 || k >= n {
        return Err(Infeasible::KOutOfRange(k as i64));
    }
    let a = n - 1;
    let b = k * (n - k);
    let lead = n as i64 - 2 * k as i64;
    let value = lead as f64 * (a as f64 / b as f64).sqrt();
    let exact = if lead == 0 { Some(0) } else { exact_sqrt(a * b) }.map(|r| {
        let num = lead * r as i64;
        let den = b as i64;
        let g = gcd(num.unsigned_abs(), den as u64).max(1) as i64;
        (num / g, den / g)
    });
    Ok(MuValue { value, exact })
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// `sqrt(k(n-k) / (n^2 (n-1)))`.
pub fn c_value(n: u64, k: u64) -> f64 {
    let (n, k) = (n as f64, k as f64);
    (k * (n - k) / (n * n * (n - 1.0))).sqrt()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MuContext {
    /// Sets in a group of order `n`.
    Signature,
    /// Bordered sets in a group of order `n - 1`.
    Quasi,
}

/// Values of `mu` admissible for a nontrivial set (both `S` and its
/// complement non-empty) producing a frame of size `n`.
///
/// The trivial partitions `S = G \ {e}` and `S = ∅` give `mu = ±(n-2)` for
/// every `n` and are not screened by this list.
pub fn feasible_mu_values(n: u64, context: MuContext) -> Vec<i64> {
    if n < 2 || !n.is_multiple_of(2) {
        return Vec::new();
    }
    let ni = n as i64;
    let half = n / 2;
    let odd_prime_half = half % 2 == 1 && is_prime(half);
    let odd_prime_quarter = n.is_multiple_of(4) && (n / 4) % 2 == 1 && is_prime(n / 4);
    let mut out = Vec::new();
    match context {
        MuContext::Signature => {
            for mu in (-(ni - 2)..=ni - 2).filter(|m| m % 2 == 0) {
                if (ni - 2 - mu) % 4 != 0 || params_from_mu(n, mu).is_err() {
                    continue;
                }
                if odd_prime_half && !(mu == 0 || mu.abs() == ni - 2) {
                    continue;
                }
                if odd_prime_quarter && mu.abs() != ni - 2 {
                    continue;
                }
                out.push(mu);
            }
        }
        MuContext::Quasi => {
            if odd_prime_quarter {
                return out;
            }
            // 2 - n/3 <= mu <= n/3 - 2
            for mu in (-ni..=ni).filter(|m| m % 2 == 0) {
                if 3 * mu < 6 - ni || 3 * mu > ni - 6 {
                    continue;
                }
                if (ni + 3 * mu - 6) % 4 != 0 || params_from_mu(n, mu).is_err() {
                    continue;
                }
                if odd_prime_half && mu != 0 {
                    continue;
                }
                out.push(mu);
            }
        }
    }
    out
}
