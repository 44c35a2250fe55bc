//! Edge rescaling of the exact finite-N law and its distance to the
//! limiting edge distribution.

use serde::Serialize;

use crate::asymptotics::constants::EdgeConstants;
use crate::ensemble::exact_cdf_meixner_many;
use crate::error::{Error, Result};
use crate::params::ModelParams;
use crate::tw::{tw_cdf, TwMethod};

/// One rescaled point: F_N(s) = P[G <= floor(N omega + sigma N^{1/3} s)].
#[derive(Debug, Clone, Copy, Serialize)]
pub struct RescaledPoint {
    pub s: f64,
    pub t: i64,
    pub p: f64,
}

/// Supremum distance of the rescaled exact law to the limit on a grid,
/// one row of a convergence ladder.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct ConvergenceRow {
    pub n: usize,
    pub sup_dist: f64,
    pub grid_lo: f64,
    pub grid_hi: f64,
}

/// Map edge coordinates s (sorted ascending) to integer thresholds and
/// evaluate the exact CDF there.
pub fn rescaled_cdf_points(params: &ModelParams, s_values: &[f64]) -> Result<Vec<RescaledPoint>> {
    if s_values.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::Domain("s grid must be sorted ascending".into()));
    }
    let ec = EdgeConstants::new(params.gamma, params.q)?;
    let nf = params.n as f64;
    let ts: Vec<i64> = s_values
        .iter()
        .map(|&s| ((nf * ec.omega + ec.sigma * nf.cbrt() * s).floor() as i64).max(-1))
        .collect();
    let vals = exact_cdf_meixner_many(params, &ts)?;
    Ok(s_values
        .iter()
        .zip(ts)
        .zip(vals)
        .map(|((&s, t), v)| RescaledPoint { s, t, p: v.p })
        .collect())
}

/// sup_s |F_N(s) - F(s)| over a uniform grid on [grid_lo, grid_hi].
pub fn edge_distance(
    params: &ModelParams,
    grid_lo: f64,
    grid_hi: f64,
    grid_points: usize,
    method: TwMethod,
) -> Result<ConvergenceRow> {
    if grid_points < 2 || grid_hi <= grid_lo {
        return Err(Error::Domain(format!(
            "need grid_points >= 2 and grid_hi > grid_lo, got {grid_points}, [{grid_lo}, {grid_hi}]"
        )));
    }
    let step = (grid_hi - grid_lo) / (grid_points - 1) as f64;
    let s_values: Vec<f64> = (0..grid_points).map(|i| grid_lo + i as f64 * step).collect();
    let pts = rescaled_cdf_points(params, &s_values)?;
    let mut sup = 0.0f64;
    for p in &pts {
        let f = tw_cdf(p.s, method)?.f;
        sup = sup.max((p.p - f).abs());
    }
    Ok(ConvergenceRow {
        n: params.n,
        sup_dist: sup,
        grid_lo,
        grid_hi,
    })
}

/// Run `edge_distance` for each size in `ladder` (with M = floor(gamma N)).
pub fn convergence_ladder(
    q: f64,
    gamma: f64,
    ladder: &[usize],
    grid_lo: f64,
    grid_hi: f64,
    grid_points: usize,
    method: TwMethod,
) -> Result<Vec<ConvergenceRow>> {
    ladder
        .iter()
        .map(|&n| {
            let params = ModelParams::from_gamma(q, gamma, n)?;
            edge_distance(&params, grid_lo, grid_hi, grid_points, method)
        })
        .collect()
}
