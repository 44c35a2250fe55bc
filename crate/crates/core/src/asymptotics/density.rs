//! Equilibrium (limit) density of the rescaled particle profile.
//!
//! On the normalized coordinate x = 2(t - a)/c - 1 in [-1, 1] the density
//! is an explicit arctangent expression in the constants B, D. For
//! gamma < 1/q the constrained measure saturates the lattice bound and is
//! identically 1 on [0, a]; for gamma >= 1/q it is supported on [a, b]
//! alone.

use std::f64::consts::PI;

use crate::asymptotics::constants::EdgeConstants;
use crate::error::Result;
use crate::quad::gauss_legendre;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    /// gamma >= 1/q: density stays strictly below 1.
    Unsaturated,
    /// gamma < 1/q: density pinned at 1 on [0, a].
    Saturated,
}

#[derive(Debug, Clone, Copy)]
pub struct EquilibriumDensity {
    pub constants: EdgeConstants,
    pub regime: Regime,
}

/// atan((C x + 1) / (sqrt(1-x^2) sqrt(C^2-1))), continued by its +-pi/2
/// limits at the degenerate points C = 1 (boundary aspect ratio) and
/// x = +-1 (support endpoints).
fn branch_angle(c: f64, x: f64) -> f64 {
    let s2 = (1.0 - x * x).max(0.0);
    let num = c * x + 1.0;
    if c * c - 1.0 < 1e-13 || s2 == 0.0 {
        return if num >= 0.0 { PI / 2.0 } else { -PI / 2.0 };
    }
    (num / (s2.sqrt() * (c * c - 1.0).sqrt())).atan()
}

impl EquilibriumDensity {
    pub fn new(gamma: f64, q: f64) -> Result<Self> {
        let constants = EdgeConstants::new(gamma, q)?;
        let regime = if gamma >= 1.0 / q {
            Regime::Unsaturated
        } else {
            Regime::Saturated
        };
        Ok(EquilibriumDensity { constants, regime })
    }

    /// Density value on the arc, in the normalized coordinate x in [-1, 1].
    fn arc_value(&self, x: f64) -> f64 {
        let d_term = branch_angle(self.constants.big_d, x);
        let b_term = branch_angle(self.constants.big_b, x);
        match self.regime {
            Regime::Unsaturated => (d_term - b_term) / (2.0 * PI),
            Regime::Saturated => (PI - d_term - b_term) / (2.0 * PI),
        }
    }

    /// Density phi(t) on the physical axis t >= 0.
    pub fn phi(&self, t: f64) -> f64 {
        let ec = &self.constants;
        if t < 0.0 || t > ec.b {
            return 0.0;
        }
        if t < ec.a {
            return match self.regime {
                Regime::Saturated => 1.0,
                Regime::Unsaturated => 0.0,
            };
        }
        let x = 2.0 * (t - ec.a) / ec.c - 1.0;
        self.arc_value(x).clamp(0.0, 1.0)
    }

    /// Total mass: Gauss-Legendre over the arc plus the saturated plateau.
    pub fn mass(&self) -> f64 {
        let (xs, ws) = gauss_legendre(4000);
        let arc: f64 = xs
            .iter()
            .zip(&ws)
            .map(|(&x, &w)| w * self.arc_value(x))
            .sum::<f64>()
            * self.constants.c
            / 2.0;
        match self.regime {
            Regime::Saturated => arc + self.constants.a,
            Regime::Unsaturated => arc,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const CASES: [(f64, f64); 5] = [(5.0, 0.5), (1.0, 0.25), (1.0, 0.81), (2.0, 0.5), (4.0, 0.25)];

    #[test]
    fn regime_classification() {
        assert_eq!(EquilibriumDensity::new(5.0, 0.5).unwrap().regime, Regime::Unsaturated);
        assert_eq!(EquilibriumDensity::new(1.0, 0.25).unwrap().regime, Regime::Saturated);
        // boundary gamma = 1/q counts as unsaturated
        assert_eq!(EquilibriumDensity::new(2.0, 0.5).unwrap().regime, Regime::Unsaturated);
    }

    #[test]
    fn unit_mass_all_cases() {
        for (g, q) in CASES {
            let d = EquilibriumDensity::new(g, q).unwrap();
            let m = d.mass();
            assert!((m - 1.0).abs() < 1e-6, "g={g}, q={q}: mass={m}");
        }
    }

    #[test]
    fn density_bounded_between_zero_and_one() {
        for (g, q) in CASES {
            let d = EquilibriumDensity::new(g, q).unwrap();
            let ec = d.constants;
            for i in 0..=1000 {
                let t = ec.b * i as f64 / 1000.0;
                let v = d.phi(t);
                assert!((0.0..=1.0).contains(&v), "g={g}, q={q}, t={t}: {v}");
            }
        }
    }

    #[test]
    fn vanishes_at_upper_endpoint_and_beyond() {
        for (g, q) in CASES {
            let d = EquilibriumDensity::new(g, q).unwrap();
            assert_eq!(d.phi(d.constants.b), 0.0, "g={g}, q={q}");
            assert_eq!(d.phi(d.constants.b + 1.0), 0.0);
            // continuity: small just inside the edge
            assert!(d.phi(d.constants.b - 1e-6) < 1e-2);
        }
    }

    #[test]
    fn saturated_plateau_is_exactly_one() {
        let d = EquilibriumDensity::new(1.0, 0.25).unwrap();
        let a = d.constants.a;
        assert!(a > 0.0);
        for i in 0..=50 {
            let t = a * i as f64 / 50.0;
            assert_eq!(d.phi(t), 1.0, "t={t}");
        }
        // and the arc continues from 1 just past a
        assert!(d.phi(a + 1e-6) > 1.0 - 1e-2);
    }

    #[test]
    fn unsaturated_zero_below_lower_endpoint() {
        let d = EquilibriumDensity::new(5.0, 0.5).unwrap();
        let a = d.constants.a;
        assert!(a > 0.0);
        assert_eq!(d.phi(0.5 * a), 0.0);
        assert!(d.phi(a + 1e-6) < 1e-2);
    }

    #[test]
    fn boundary_aspect_ratio_stays_finite() {
        // gamma = 1/q makes D = 1; the branch angle degenerates to pi/2
        let d = EquilibriumDensity::new(2.0, 0.5).unwrap();
        let m = d.mass();
        assert!((m - 1.0).abs() < 1e-6, "mass={m}");
        assert!((d.phi(1e-9) - 0.5).abs() < 0.5); // finite, in [0,1]
    }
}
