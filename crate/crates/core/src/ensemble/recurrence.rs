//! Three-term recurrences for the two orthogonal-polynomial families used
//! by the exact finite-size distributions: the negative-binomial-weight
//! discrete family (weight C(x+K-1,x) q^x on nonnegative integers) and the
//! generalized Laguerre family (weight x^alpha e^{-x} on the half-line).

use libm::lgamma;
use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum Family {
    Meixner { k: u64, q: f64 },
    Laguerre { alpha: f64 },
}

/// Monic recurrence p_{n+1}(x) = (x - A_n) p_n(x) - B_n p_{n-1}(x),
/// with log squared norms of the monic polynomials riding along.
#[derive(Debug, Clone)]
pub struct MonicRecurrence {
    pub family: Family,
    pub a: Vec<f64>,
    pub b: Vec<f64>, // b[0] unused (set 0)
    pub log_norms: Vec<f64>,
}

impl Family {
    /// log of the orthogonality weight at x.
    pub fn weight_log(&self, x: f64) -> f64 {
        match *self {
            Family::Meixner { k, q } => {
                let kf = k as f64;
                lgamma(x + kf) - lgamma(x + 1.0) - lgamma(kf) + x * q.ln()
            }
            Family::Laguerre { alpha } => {
                if x <= 0.0 {
                    if alpha == 0.0 && x == 0.0 {
                        0.0
                    } else {
                        f64::NEG_INFINITY
                    }
                } else {
                    alpha * x.ln() - x
                }
            }
        }
    }

    /// log of the total weight mass mu_0 (squared norm of the constant 1).
    pub fn log_mass(&self) -> f64 {
        match *self {
            Family::Meixner { k, q } => -(k as f64) * (1.0 - q).ln(),
            Family::Laguerre { alpha } => lgamma(alpha + 1.0),
        }
    }

    fn coeffs(&self, n: f64) -> (f64, f64) {
        match *self {
            Family::Meixner { k, q } => {
                let kf = k as f64;
                (
                    (n + (n + kf) * q) / (1.0 - q),
                    n * (n + kf - 1.0) * q / ((1.0 - q) * (1.0 - q)),
                )
            }
            Family::Laguerre { alpha } => (2.0 * n + alpha + 1.0, n * (n + alpha)),
        }
    }
}

/// Build the recurrence up to degree n_max (coefficients A_0..A_{n_max},
/// B_1..B_{n_max}).
pub fn recurrence(family: Family, n_max: usize) -> Result<MonicRecurrence> {
    match family {
        Family::Meixner { k, q } => {
            if k < 1 {
                return Err(Error::Domain("K must be >= 1".into()));
            }
            if !(0.0..1.0).contains(&q) || q == 0.0 {
                return Err(Error::Domain(format!("q must lie in (0,1), got {q}")));
            }
        }
        Family::Laguerre { alpha } => {
            if alpha < 0.0 {
                return Err(Error::Domain(format!("alpha must be >= 0, got {alpha}")));
            }
        }
    }
    let mut a = Vec::with_capacity(n_max + 1);
    let mut b = vec![0.0];
    let mut log_norms = vec![family.log_mass()];
    for n in 0..=n_max {
        let (an, bn) = family.coeffs(n as f64);
        if !an.is_finite() || !bn.is_finite() {
            return Err(Error::OutOfRange(format!(
                "recurrence coefficients overflow at degree {n}"
            )));
        }
        a.push(an);
        if n >= 1 {
            if bn <= 0.0 {
                return Err(Error::Domain(format!("B_{n} = {bn} not positive")));
            }
            b.push(bn);
            let prev = log_norms[n - 1];
            log_norms.push(prev + bn.ln());
        }
    }
    Ok(MonicRecurrence {
        family,
        a,
        b,
        log_norms,
    })
}
