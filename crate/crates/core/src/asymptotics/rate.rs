//! Right-tail large-deviation rate function of the passage time.
//!
//! J(t) = 0 for t <= b and for t > b equals an explicit integral over the
//! normalized coordinate, evaluated after the substitution y = cosh(theta)
//! which removes the inverse square-root endpoint singularity.

use crate::asymptotics::constants::EdgeConstants;
use crate::error::{Error, Result};
use crate::quad::gauss_legendre;

const QUAD_NODES: usize = 400;

/// Rate function J(t): P[G(floor(gamma N), N) >= Nt] decays like
/// exp(-2 N J(t)) to leading order.
pub fn rate_j(gamma: f64, q: f64, t: f64) -> Result<f64> {
    let ec = EdgeConstants::new(gamma, q)?;
    if !t.is_finite() {
        return Err(Error::OutOfRange(format!("t must be finite, got {t}")));
    }
    if t <= ec.b {
        return Ok(0.0);
    }
    let x = 2.0 * (t - ec.a) / ec.c - 1.0;
    let theta_max = x.acosh();
    let (us, ws) = gauss_legendre(QUAD_NODES);
    let qg = (q * gamma).sqrt();
    let mut sum = 0.0;
    for (&u, &w) in us.iter().zip(&ws) {
        let theta = (u + 1.0) * theta_max / 2.0;
        let y = theta.cosh();
        let f = (x - y) * ((gamma - q) / (y + ec.big_b) + (1.0 - q * gamma) / (y + ec.big_d));
        sum += w * theta_max / 2.0 * f;
    }
    Ok(ec.c / (8.0 * qg) * sum)
}

/// Leading coefficient of the small-excess expansion
/// J(b + delta) ~ coeff * delta^{3/2}.
pub fn rate_edge_coefficient(gamma: f64, q: f64) -> Result<f64> {
    crate::asymptotics::constants::check_domain(gamma, q)?;
    Ok(2.0 * (1.0 - q).powf(1.5) * gamma.powf(0.25)
        / (3.0 * q.powf(0.25) * (q.sqrt() + gamma.sqrt()) * (1.0 + (q * gamma).sqrt())))
}

/// Finite-N right-tail bound P[G > N t] <= exp(-2 N J(t + 1)).
pub fn tail_bound_finite_n(gamma: f64, q: f64, n: usize, t: f64) -> Result<f64> {
    let j = rate_j(gamma, q, t + 1.0)?;
    Ok((-2.0 * n as f64 * j).exp())
}

/// Left-tail rate function (order N^2 speed). Not implemented: the
/// variational problem for the constrained minimizer is out of scope here.
pub fn lower_tail_rate(_gamma: f64, _q: f64, _t: f64) -> Result<f64> {
    Err(Error::NotImplemented("lower-tail rate function"))
}
