//! Exact CDF of the geometric-weight passage time.
//!
//! P[G <= t] equals the probability that the rightmost point of the
//! N-point discrete ensemble lies at or below s = t + N - 1, i.e. the
//! Fredholm determinant of the kernel restricted to {s+1, s+2, ...}.
//! Because the kernel is a rank-N projection, that determinant equals the
//! ordinary N x N determinant of the wavefunction Gram matrix summed over
//! the *complement* window {0, ..., s} — a finite sum with no tail
//! truncation at all. That is the form evaluated here.

use nalgebra::DMatrix;

use crate::ensemble::kernel::WaveEvaluator;
use crate::ensemble::recurrence::Family;
use crate::ensemble::{CdfMethod, CdfValue};
use crate::error::{Error, Result};
use crate::params::ModelParams;

fn meixner_family(params: &ModelParams) -> Family {
    Family::Meixner {
        k: params.meixner_k() as u64,
        q: params.q,
    }
}

/// Accumulate the Gram matrix of wavefunction levels 0..N-1 over the
/// integer window [x_lo, x_hi].
fn accumulate_gram(
    ev: &WaveEvaluator,
    n: usize,
    gram: &mut DMatrix<f64>,
    x_lo: i64,
    x_hi: i64,
) {
    for x in x_lo..=x_hi {
        let phi = ev.eval(x as f64);
        for a in 0..n {
            if phi[a] == 0.0 {
                continue;
            }
            for b in a..n {
                gram[(a, b)] += phi[a] * phi[b];
            }
        }
    }
}

fn symmetrized_det(gram: &DMatrix<f64>) -> f64 {
    let n = gram.nrows();
    let mut full = gram.clone();
    for a in 0..n {
        for b in 0..a {
            full[(a, b)] = full[(b, a)];
        }
    }
    full.lu().determinant()
}

/// P[G(M,N) <= t] for the geometric model.
pub fn exact_cdf_meixner(params: &ModelParams, t: i64) -> Result<CdfValue> {
    Ok(exact_cdf_meixner_many(params, &[t])?.pop().unwrap())
}

/// Evaluate P[G <= t] at many thresholds in one sweep. The thresholds must
/// be sorted ascending; the Gram matrix is extended incrementally.
pub fn exact_cdf_meixner_many(params: &ModelParams, ts: &[i64]) -> Result<Vec<CdfValue>> {
    if ts.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::Domain("thresholds must be sorted ascending".into()));
    }
    if let Some(&t0) = ts.first() {
        if t0 < -1 {
            return Err(Error::OutOfRange(format!(
                "threshold {t0} below the support (t >= -1)"
            )));
        }
    }
    let n = params.n;
    let ev = WaveEvaluator::new(meixner_family(params), n - 1);
    let err = 1e-13 * (1.0 + n as f64);
    let mut gram = DMatrix::<f64>::zeros(n, n);
    let mut next_x: i64 = 0;
    let mut out = Vec::with_capacity(ts.len());
    for &t in ts {
        let s = t + n as i64 - 1;
        if s >= next_x {
            accumulate_gram(&ev, n, &mut gram, next_x, s);
            next_x = s + 1;
        }
        let p = if s < n as i64 - 1 {
            // fewer window points than the ensemble size: determinant is 0
            0.0
        } else {
            symmetrized_det(&gram).clamp(0.0, 1.0)
        };
        out.push(CdfValue {
            t: t as f64,
            p,
            err,
            method: CdfMethod::Fredholm,
        });
    }
    Ok(out)
}

/// Mass of the kernel diagonal beyond `cutoff`: since the full trace is
/// exactly N, the tail equals N minus the windowed trace, computed here
/// directly. Used to size evaluation windows for kernel-level checks.
pub fn tail_truncation_bound(params: &ModelParams, cutoff: i64) -> Result<f64> {
    let n = params.n;
    let ev = WaveEvaluator::new(meixner_family(params), n - 1);
    let mut trace = 0.0;
    for x in 0..=cutoff {
        let phi = ev.eval(x as f64);
        trace += phi.iter().map(|p| p * p).sum::<f64>();
    }
    Ok((n as f64 - trace).max(0.0))
}
