//! Brute-force oracle for the exact CDF on tiny instances.
//!
//! The passage time's law is that of the rightmost of N points drawn from
//! the squared-Vandermonde ensemble with the discrete negative-binomial
//! weight: P[G <= t] is the mass of configurations with max h_i <= t+N-1,
//! normalized by the unrestricted sum. Direct summation over ordered
//! h_1 < ... < h_N up to a cutoff; feasible only for N <= 3.

use crate::ensemble::recurrence::Family;
use crate::ensemble::{CdfMethod, CdfValue};
use crate::error::{Error, Result};
use crate::params::ModelParams;

/// Bucket the ensemble mass by the maximum coordinate, for max <= cap.
fn mass_by_max(k: u64, q: f64, n: usize, cap: usize) -> Vec<f64> {
    let fam = Family::Meixner { k, q };
    let w: Vec<f64> = (0..=cap).map(|x| fam.weight_log(x as f64).exp()).collect();
    let mut bucket = vec![0.0f64; cap + 1];
    match n {
        1 => {
            for (h, &wh) in w.iter().enumerate() {
                bucket[h] += wh;
            }
        }
        2 => {
            for h2 in 1..=cap {
                for h1 in 0..h2 {
                    let d = (h2 - h1) as f64;
                    bucket[h2] += d * d * w[h1] * w[h2];
                }
            }
        }
        3 => {
            for h3 in 2..=cap {
                for h2 in 1..h3 {
                    let d32 = (h3 - h2) as f64;
                    let w32 = w[h2] * w[h3];
                    for h1 in 0..h2 {
                        let d21 = (h2 - h1) as f64;
                        let d31 = (h3 - h1) as f64;
                        let v = d21 * d31 * d32;
                        bucket[h3] += v * v * w[h1] * w32;
                    }
                }
            }
        }
        _ => unreachable!(),
    }
    bucket
}

/// P[G(M,N) <= t] by direct summation. Refuses N > 3.
pub fn brute_force_cdf(params: &ModelParams, t: i64) -> Result<CdfValue> {
    let n = params.n;
    if n > 3 {
        return Err(Error::Domain(format!(
            "brute-force oracle supports N <= 3, got N = {n}"
        )));
    }
    if t < -1 {
        return Err(Error::OutOfRange(format!(
            "threshold {t} below the support (t >= -1)"
        )));
    }
    let k = params.meixner_k() as u64;
    let q = params.q;
    let s = t + n as i64 - 1;

    // grow the cutoff until the unrestricted sum is stable to full precision
    let mut cap = 128.max(2 * (s.max(0) as usize) + 16);
    let mut bucket = mass_by_max(k, q, n, cap);
    let mut total: f64 = bucket.iter().sum();
    loop {
        let cap2 = cap * 2;
        if cap2 > 40_000 {
            return Err(Error::Truncation(format!(
                "brute-force cutoff exceeded 40000 at q={q}"
            )));
        }
        let bucket2 = mass_by_max(k, q, n, cap2);
        let total2: f64 = bucket2.iter().sum();
        let stable = (total2 - total).abs() <= 1e-14 * total2;
        bucket = bucket2;
        total = total2;
        cap = cap2;
        if stable {
            break;
        }
    }

    let restricted: f64 = bucket
        .iter()
        .take((s.max(-1) + 1).max(0) as usize)
        .sum();
    Ok(CdfValue {
        t: t as f64,
        p: (restricted / total).clamp(0.0, 1.0),
        err: 1e-12,
        method: CdfMethod::BruteForce,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn n1_reproduces_negative_binomial() {
        // M=2, N=1, t=0: both weights zero, (1-q)^2
        let p = ModelParams::new(0.5, 2, 1).unwrap();
        let v = brute_force_cdf(&p, 0).unwrap();
        assert!((v.p - 0.25).abs() < 1e-12);
        // M=N=1: geometric closed form
        let p1 = ModelParams::new(0.3, 1, 1).unwrap();
        for t in 0..8 {
            let v = brute_force_cdf(&p1, t).unwrap();
            assert!((v.p - (1.0 - 0.3f64.powi(t as i32 + 1))).abs() < 1e-12);
        }
    }

    #[test]
    fn saturates_to_one() {
        let p = ModelParams::new(0.5, 3, 2).unwrap();
        let v = brute_force_cdf(&p, 200).unwrap();
        assert!((v.p - 1.0).abs() < 1e-10);
    }

    #[test]
    fn ordered_sum_equals_symmetrized_sum() {
        // N=2 hand check on a tiny cap: summing over ordered pairs with the
        // squared Vandermonde equals half the sum over all distinct pairs
        let fam = Family::Meixner { k: 2, q: 0.4 };
        let cap = 30usize;
        let w: Vec<f64> = (0..=cap).map(|x| fam.weight_log(x as f64).exp()).collect();
        let ordered: f64 = mass_by_max(2, 0.4, 2, cap).iter().sum();
        let mut all = 0.0;
        for h1 in 0..=cap {
            for h2 in 0..=cap {
                let d = h1 as f64 - h2 as f64;
                all += d * d * w[h1] * w[h2];
            }
        }
        assert!((2.0 * ordered - all).abs() < 1e-12 * all);
    }

    #[test]
    fn refuses_large_n() {
        let p = ModelParams::new(0.5, 4, 4).unwrap();
        assert!(brute_force_cdf(&p, 3).is_err());
    }

    #[test]
    fn matches_determinant_route_on_small_cases() {
        use crate::ensemble::meixner::exact_cdf_meixner;
        for &(m, n, q) in &[(2usize, 2usize, 0.3), (3, 2, 0.5), (4, 3, 0.7), (3, 3, 0.5)] {
            let p = ModelParams::new(q, m, n).unwrap();
            for t in -1..=10 {
                let a = exact_cdf_meixner(&p, t).unwrap();
                let b = brute_force_cdf(&p, t).unwrap();
                assert!(
                    (a.p - b.p).abs() < 1e-10,
                    "M={m} N={n} q={q} t={t}: det={} brute={}",
                    a.p,
                    b.p
                );
            }
        }
    }
}
