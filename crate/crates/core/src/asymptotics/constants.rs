use serde::Serialize;

use crate::error::{Error, Result};

/// Closed-form limit constants for the geometric model at aspect ratio
/// gamma = M/N: the law-of-large-numbers constant omega, the fluctuation
/// scale sigma, the equilibrium-measure support [a, b] with width c, and
/// the auxiliary combinations big_b, big_d entering the density and rate
/// function.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct EdgeConstants {
    pub gamma: f64,
    pub q: f64,
    pub omega: f64,
    pub sigma: f64,
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub big_b: f64,
    pub big_d: f64,
}

pub fn check_domain(gamma: f64, q: f64) -> Result<()> {
    if !(gamma >= 1.0) {
        return Err(Error::Domain(format!("gamma must be >= 1, got {gamma}")));
    }
    if !(q > 0.0 && q < 1.0) {
        return Err(Error::Domain(format!("q must lie in (0,1), got {q}")));
    }
    Ok(())
}

/// Mean constant: G(⌊γN⌋, N)/N -> omega.
pub fn omega(gamma: f64, q: f64) -> Result<f64> {
    check_domain(gamma, q)?;
    let r = (q * gamma).sqrt();
    Ok((1.0 + r) * (1.0 + r) / (1.0 - q) - 1.0)
}

/// Fluctuation scale: (G - N omega) / (sigma N^{1/3}) converges to the
/// edge law.
pub fn sigma(gamma: f64, q: f64) -> Result<f64> {
    check_domain(gamma, q)?;
    Ok(q.powf(1.0 / 6.0) * gamma.powf(-1.0 / 6.0)
        * (gamma.sqrt() + q.sqrt()).powf(2.0 / 3.0)
        * (1.0 + (q * gamma).sqrt()).powf(2.0 / 3.0)
        / (1.0 - q))
}

impl EdgeConstants {
    pub fn new(gamma: f64, q: f64) -> Result<Self> {
        check_domain(gamma, q)?;
        let r = (q * gamma).sqrt();
        let b = (1.0 + r) * (1.0 + r) / (1.0 - q);
        let a = (1.0 - r) * (1.0 - r) / (1.0 - q);
        Ok(EdgeConstants {
            gamma,
            q,
            omega: b - 1.0,
            sigma: sigma(gamma, q)?,
            a,
            b,
            c: b - a,
            big_b: (gamma + q) / (2.0 * r),
            big_d: (1.0 + q * gamma) / (2.0 * r),
        })
    }
}

/// Limit constants for the exponential model: mean H/N -> (1+sqrt(gamma))^2
/// and fluctuation scale gamma^{-1/6} (1+sqrt(gamma))^{4/3}.
pub fn exp_constants(gamma: f64) -> Result<(f64, f64)> {
    if !(gamma >= 1.0) {
        return Err(Error::Domain(format!("gamma must be >= 1, got {gamma}")));
    }
    let s = gamma.sqrt();
    Ok(((1.0 + s) * (1.0 + s), gamma.powf(-1.0 / 6.0) * (1.0 + s).powf(4.0 / 3.0)))
}

/// Membership in the limit shape of the rescaled growing cluster:
/// (x, y) with y + 2 sqrt(q x y) + x <= 1 - q.
pub fn shape_contains(x: f64, y: f64, q: f64) -> bool {
    x >= 0.0 && y >= 0.0 && y + 2.0 * (q * x * y).sqrt() + x <= 1.0 - q
}

/// Center and scale of the particle-current fluctuations at macroscopic
/// position u: (Y - center(t)) / scale(t) converges to the reflected edge
/// law 1 - F(-xi).
///
/// The scale is derived from the passage-time constants via
/// Y(k,t) > m <=> H(m+k+1, m+1) <= t with gamma = ((1+u)/(1-u))^2:
/// scale(t) = (1-u)^{5/3} / (2^{4/3} (1+u)^{1/3}) * t^{1/3}. At u = 0 this
/// is 2^{-4/3} t^{1/3}, confirmed against direct simulation (the sample
/// standard deviation of the rescaled current matches the limit law).
#[derive(Debug, Clone, Copy)]
pub struct TasepFluct {
    pub u: f64,
}

pub fn tasep_fluct_params(u: f64) -> Result<TasepFluct> {
    if !(0.0..1.0).contains(&u) {
        return Err(Error::Domain(format!("u must lie in [0,1), got {u}")));
    }
    Ok(TasepFluct { u })
}

impl TasepFluct {
    pub fn center(&self, t: f64) -> f64 {
        t * (1.0 - self.u) * (1.0 - self.u) / 4.0
    }

    pub fn scale(&self, t: f64) -> f64 {
        t.cbrt() * (1.0 - self.u).powf(5.0 / 3.0)
            / (2f64.powf(4.0 / 3.0) * (1.0 + self.u).cbrt())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn omega_and_sigma_closed_values() {
        // gamma=1, q=1/4: (1 + 1/2)^2 / (3/4) - 1 = 2
        assert!((omega(1.0, 0.25).unwrap() - 2.0).abs() < 1e-14);
        let s = sigma(1.0, 0.25).unwrap();
        let direct = 0.25f64.powf(1.0 / 6.0) * 1.5f64.powf(4.0 / 3.0) / 0.75;
        assert!((s - direct).abs() < 1e-14, "sigma={s}");
        assert!((s - 1.8170).abs() < 1e-3);
    }

    #[test]
    fn omega_vanishes_with_q() {
        assert!(omega(2.0, 1e-12).unwrap() < 1e-5);
    }

    #[test]
    fn omega_plus_one_equals_upper_endpoint() {
        for &(g, q) in &[(1.0, 0.3), (2.7, 0.11), (5.0, 0.5), (1.0, 0.81), (9.3, 0.62)] {
            let ec = EdgeConstants::new(g, q).unwrap();
            assert!((ec.omega + 1.0 - ec.b).abs() < 1e-12);
            assert!(ec.a >= 0.0 && ec.c > 0.0 && ec.sigma > 0.0);
            assert!(ec.big_d >= 1.0 && ec.big_b >= 1.0);
        }
    }

    #[test]
    fn exp_constants_values_and_q_to_one_limit() {
        let (mean, scale) = exp_constants(1.0).unwrap();
        assert_eq!(mean, 4.0);
        assert!((scale - 2f64.powf(4.0 / 3.0)).abs() < 1e-14);
        for &g in &[1.0, 2.0, 4.5] {
            let q = 1.0 - 1e-6;
            let (m, _) = exp_constants(g).unwrap();
            let lim = (1.0 - q) * (omega(g, q).unwrap() + 1.0);
            assert!((lim - m).abs() < 1e-2 * m, "g={g}: {lim} vs {m}");
        }
    }

    #[test]
    fn shape_boundary_points() {
        assert!(shape_contains(0.0, 0.0, 0.5));
        // (1-q, 0) sits exactly on the boundary
        assert!(shape_contains(0.5, 0.0, 0.5));
        assert!(!shape_contains(0.5 + 1e-12, 0.0, 0.5));
        assert!(!shape_contains(0.3, 0.3, 0.5));
    }

    #[test]
    fn current_fluctuation_parameters() {
        let f = tasep_fluct_params(0.0).unwrap();
        assert_eq!(f.center(2000.0), 500.0);
        assert!((f.scale(2000.0) - 2000f64.cbrt() / 2f64.powf(4.0 / 3.0)).abs() < 1e-12);
        let g = tasep_fluct_params(0.5).unwrap();
        assert!((g.center(8.0) / 8.0 - 0.0625).abs() < 1e-14);
        assert!(g.scale(8.0) > 0.0);
        assert!(tasep_fluct_params(1.0).is_err());
    }
}
