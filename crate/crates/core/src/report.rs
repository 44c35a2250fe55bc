//! The acceptance suite: one function per criterion, each returning a
//! pass/fail verdict with the measured quantities, shared between the CLI
//! `validate` command and the integration test target.

use rayon::prelude::*;
use serde::Serialize;

use crate::asymptotics::{
    convergence_ladder, rate_edge_coefficient, rate_j, tail_bound_finite_n, tasep_fluct_params,
    EdgeConstants, EquilibriumDensity, Regime,
};
use crate::ensemble::{
    brute_force_cdf, exact_cdf_laguerre, exact_cdf_meixner, exact_cdf_meixner_many, kernel_window,
    recurrence, Family,
};
use crate::error::Result;
use crate::growth::{current_y, monte_carlo_batch, WeightKind};
use crate::params::ModelParams;
use crate::rng::index_stream;
use crate::stats::{dkw_bound, ks_distance_lattice, Ecdf};
use crate::tw::{edge_cdf_painleve, tw_cdf, TwMethod};

#[derive(Debug, Clone, Serialize)]
pub struct CriterionResult {
    pub index: usize,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl CriterionResult {
    fn new(index: usize, name: &'static str, passed: bool, detail: String) -> Self {
        CriterionResult {
            index,
            name,
            passed,
            detail,
        }
    }
}

impl std::fmt::Display for CriterionResult {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "[{}] {:2}. {} — {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.index,
            self.name,
            self.detail
        )
    }
}

/// 1. Determinant route vs. direct enumeration over all small cases.
pub fn exact_vs_enumeration() -> Result<CriterionResult> {
    let mut worst = 0.0f64;
    for n in 1..=3usize {
        for m in n..=4usize {
            for &q in &[0.3, 0.5, 0.7] {
                let params = ModelParams::new(q, m, n)?;
                for t in 0..=10i64 {
                    let a = exact_cdf_meixner(&params, t)?.p;
                    let b = brute_force_cdf(&params, t)?.p;
                    worst = worst.max((a - b).abs());
                }
            }
        }
    }
    Ok(CriterionResult::new(
        1,
        "exact-vs-enumeration",
        worst <= 1e-10,
        format!("max |determinant - enumeration| = {worst:.3e} (tol 1e-10)"),
    ))
}

/// 2. Single-cell closed forms for both weight models.
pub fn closed_forms() -> Result<CriterionResult> {
    let mut worst_geo = 0.0f64;
    for &q in &[0.3, 0.5, 0.7] {
        let params = ModelParams::new(q, 1, 1)?;
        for t in 0..=10i64 {
            let p = exact_cdf_meixner(&params, t)?.p;
            worst_geo = worst_geo.max((p - (1.0 - q.powi(t as i32 + 1))).abs());
        }
    }
    let mut worst_exp = 0.0f64;
    for &t in &[0.25, 0.5, 1.0, 2.0, 4.0, 8.0] {
        let p = exact_cdf_laguerre(1, 1, t)?.p;
        worst_exp = worst_exp.max((p - (1.0 - (-t).exp())).abs());
    }
    Ok(CriterionResult::new(
        2,
        "closed-forms",
        worst_geo <= 1e-10 && worst_exp <= 1e-8,
        format!(
            "geometric dev {worst_geo:.3e} (tol 1e-10), exponential dev {worst_exp:.3e} (tol 1e-8)"
        ),
    ))
}

/// 3. Kernel trace and projection identity on wide windows.
pub fn kernel_projection() -> Result<CriterionResult> {
    let mut worst_trace = 0.0f64;
    let mut worst_proj = 0.0f64;
    for (n, k, q, width) in [
        (5usize, 3u64, 0.4, 300usize),
        (20, 11, 0.5, 600),
        (50, 1, 0.25, 800),
    ] {
        let rec = recurrence(Family::Meixner { k, q }, n + 1)?;
        let points: Vec<f64> = (0..width).map(|x| x as f64).collect();
        let kw = kernel_window(&rec, n, &points);
        worst_trace = worst_trace.max((kw.trace() - n as f64).abs());
        let sq = &kw.values * &kw.values;
        for i in 0..width {
            for j in 0..width {
                worst_proj = worst_proj.max((sq[(i, j)] - kw.values[(i, j)]).abs());
            }
        }
    }
    Ok(CriterionResult::new(
        3,
        "kernel-projection",
        worst_trace <= 1e-8 && worst_proj <= 1e-8,
        format!("|trace - N| = {worst_trace:.3e}, ||K^2 - K||_max = {worst_proj:.3e} (tol 1e-8)"),
    ))
}

/// KS distance of a Monte Carlo batch against the exact law (N=20, gamma=2,
/// q=0.5). Exposed with an adjustable sample count for the determinism check.
fn simulation_ks(seed: u64, samples: usize) -> Result<f64> {
    let params = ModelParams::from_gamma(0.5, 2.0, 20)?;
    let batch = monte_carlo_batch(params, WeightKind::Geometric, samples, seed, 0.0, 1.0)?;
    let lo = batch.raw.iter().cloned().fold(f64::INFINITY, f64::min) as i64 - 1;
    let hi = batch.raw.iter().cloned().fold(0.0, f64::max) as i64;
    let ts: Vec<i64> = (lo..=hi).collect();
    let cdf = exact_cdf_meixner_many(&params, &ts)?;
    let ecdf = Ecdf::new(batch.raw);
    Ok(ks_distance_lattice(&ecdf, |t| {
        if t < lo {
            0.0
        } else if t > hi {
            1.0
        } else {
            cdf[(t - lo) as usize].p
        }
    }))
}

/// 4. 10^5 simulated passage times against the exact CDF, DKW 99% band.
pub fn simulation_vs_exact(seed: u64) -> Result<CriterionResult> {
    let n = 100_000;
    let ks = simulation_ks(seed, n)?;
    let bound = dkw_bound(n, 0.99);
    Ok(CriterionResult::new(
        4,
        "simulation-vs-exact",
        ks <= bound,
        format!("KS = {ks:.5} vs DKW 99% bound {bound:.5} ({n} samples)"),
    ))
}

/// 5. Both edge-law routes agree; each is monotone; far tail reaches 1.
pub fn edge_law_dual_route() -> Result<CriterionResult> {
    let mut worst = 0.0f64;
    let mut prev = (0.0f64, 0.0f64);
    let mut monotone = true;
    for s in -6..=2i64 {
        let f = tw_cdf(s as f64, TwMethod::Fredholm)?.f;
        let p = tw_cdf(s as f64, TwMethod::Painleve)?.f;
        worst = worst.max((f - p).abs());
        if s > -6 {
            monotone &= f >= prev.0 && p >= prev.1;
        }
        prev = (f, p);
    }
    let far_f = tw_cdf(8.0, TwMethod::Fredholm)?.f;
    let far_p = tw_cdf(8.0, TwMethod::Painleve)?.f;
    let tail_ok = far_f >= 1.0 - 1e-6 && far_p >= 1.0 - 1e-6;
    Ok(CriterionResult::new(
        5,
        "edge-law-dual-route",
        worst <= 1e-6 && monotone && tail_ok,
        format!(
            "sup |route diff| = {worst:.3e} (tol 1e-6), monotone = {monotone}, F(8) = {far_f:.9}"
        ),
    ))
}

/// 6. Rescaled exact law approaches the limit as N grows.
pub fn edge_convergence() -> Result<CriterionResult> {
    let rows = convergence_ladder(0.5, 1.0, &[50, 100, 200, 400], -5.0, 2.0, 29, TwMethod::Painleve)?;
    let d50 = rows[0].sup_dist;
    let d400 = rows[3].sup_dist;
    let dists: Vec<String> = rows
        .iter()
        .map(|r| format!("d_{} = {:.4}", r.n, r.sup_dist))
        .collect();
    Ok(CriterionResult::new(
        6,
        "edge-convergence",
        d400 < d50 && d400 <= 0.05,
        format!("{} (need d_400 < d_50 and d_400 <= 0.05)", dists.join(", ")),
    ))
}

/// 7. Geometric model at q -> 1 approaches the exponential model.
pub fn geometric_to_exponential() -> Result<CriterionResult> {
    let q = 1.0 - 1e-3;
    let params = ModelParams::new(q, 3, 2)?;
    let ts: Vec<i64> = [2.0, 4.0, 6.0].iter().map(|t| (1e3 * t) as i64).collect();
    let geo = exact_cdf_meixner_many(&params, &ts)?;
    let mut worst = 0.0f64;
    for (i, &t) in [2.0, 4.0, 6.0].iter().enumerate() {
        let lag = exact_cdf_laguerre(3, 2, t)?.p;
        worst = worst.max((geo[i].p - lag).abs());
    }
    Ok(CriterionResult::new(
        7,
        "geometric-to-exponential",
        worst <= 0.01,
        format!("max |geometric(q=0.999) - exponential| = {worst:.5} (tol 0.01)"),
    ))
}

/// 8. Equilibrium measure: unit mass, 0 <= phi <= 1, vanishing at the upper
/// edge, saturated plateau in the constrained regime.
pub fn equilibrium_measure() -> Result<CriterionResult> {
    let mut worst_mass = 0.0f64;
    let mut bounds_ok = true;
    let mut edge_ok = true;
    let mut plateau_ok = true;
    for (g, q) in [(5.0, 0.5), (2.0, 0.5), (1.0, 0.25), (1.0, 0.81)] {
        let d = EquilibriumDensity::new(g, q)?;
        worst_mass = worst_mass.max((d.mass() - 1.0).abs());
        let b = d.constants.b;
        for i in 0..=1000 {
            let v = d.phi(b * i as f64 / 1000.0);
            bounds_ok &= (0.0..=1.0).contains(&v);
        }
        edge_ok &= d.phi(b) == 0.0;
        if d.regime == Regime::Saturated {
            let a = d.constants.a;
            for i in 0..=100 {
                plateau_ok &= d.phi(a * i as f64 / 100.0) == 1.0;
            }
        }
    }
    Ok(CriterionResult::new(
        8,
        "equilibrium-measure",
        worst_mass <= 1e-6 && bounds_ok && edge_ok && plateau_ok,
        format!(
            "max |mass - 1| = {worst_mass:.3e} (tol 1e-6), 0<=phi<=1: {bounds_ok}, phi(b)=0: {edge_ok}, plateau: {plateau_ok}"
        ),
    ))
}

/// Empirical upper-tail frequencies for the square geometric model at
/// N = 50, q = 0.5, against the finite-N bound exp(-2N J(t+1)).
fn tail_frequencies(seed: u64, samples: usize) -> Result<Vec<(f64, f64, f64)>> {
    let params = ModelParams::new(0.5, 50, 50)?;
    let batch = monte_carlo_batch(params, WeightKind::Geometric, samples, seed, 0.0, 1.0)?;
    let omega = EdgeConstants::new(1.0, 0.5)?.omega;
    let mut out = Vec::new();
    for &delta in &[0.25, 0.5, 1.0] {
        let t = omega + delta;
        let thr = 50.0 * t;
        let freq =
            batch.raw.iter().filter(|&&g| g > thr).count() as f64 / samples as f64;
        let bound = tail_bound_finite_n(1.0, 0.5, 50, t)?;
        let se = (bound * (1.0 - bound) / samples as f64).sqrt();
        out.push((freq, bound, se));
    }
    Ok(out)
}

/// 9. Rate function: zero at the edge, 3/2-power onset with the printed
/// coefficient, and the finite-N tail bound respected empirically.
pub fn tail_rate_bounds(seed: u64) -> Result<CriterionResult> {
    let ec = EdgeConstants::new(2.0, 0.5)?;
    let j_edge = rate_j(2.0, 0.5, ec.b)?;
    let delta = 1e-3;
    let coef = rate_edge_coefficient(2.0, 0.5)?;
    let ratio = rate_j(2.0, 0.5, ec.b + delta)? / delta.powf(1.5) / coef;
    let onset_ok = j_edge == 0.0 && (ratio - 1.0).abs() <= 0.02;
    let freqs = tail_frequencies(seed, 100_000)?;
    let bound_ok = freqs.iter().all(|&(f, b, se)| f <= b + 3.0 * se);
    let freq_str: Vec<String> = freqs
        .iter()
        .map(|&(f, b, _)| format!("{f:.4}<= {b:.4}"))
        .collect();
    Ok(CriterionResult::new(
        9,
        "tail-rate-bounds",
        onset_ok && bound_ok,
        format!(
            "J(b) = {j_edge}, onset ratio = {ratio:.4} (tol 2%), tail freq vs bound: {}",
            freq_str.join(", ")
        ),
    ))
}

/// Mean current and KS distance of the rescaled current against the
/// reflected edge law, at u = 0.
fn current_stats(seed: u64, runs: usize, t: f64) -> Result<(f64, f64)> {
    let ys: Vec<f64> = (0..runs as u64)
        .into_par_iter()
        .map(|i| {
            let run_seed = index_stream(seed, i).next_u64();
            current_y(0.0, t, run_seed).map(|y| y as f64)
        })
        .collect::<Result<_>>()?;
    let mean = ys.iter().sum::<f64>() / runs as f64 / t;
    let fluct = tasep_fluct_params(0.0)?;
    let (center, scale) = (fluct.center(t), fluct.scale(t));
    let ecdf = Ecdf::new(ys);
    let ks = ks_distance_lattice(&ecdf, |y| {
        let s = -((y as f64 - center) / scale);
        if s < -12.0 {
            1.0
        } else if s > 12.0 {
            0.0
        } else {
            1.0 - edge_cdf_painleve(s).map(|(f, _)| f).unwrap_or(1.0)
        }
    });
    Ok((mean, ks))
}

/// 10. Hydrodynamic current 1/4 and its rescaled fluctuation law at u = 0.
pub fn current_fluctuations(seed: u64) -> Result<CriterionResult> {
    let (mean, ks) = current_stats(seed, 1000, 2000.0)?;
    let mean_ok = (mean - 0.25).abs() <= 0.02 * 0.25;
    Ok(CriterionResult::new(
        10,
        "current-fluctuations",
        mean_ok && ks <= 0.1,
        format!("mean Y/t = {mean:.5} (within 2% of 0.25: {mean_ok}), KS = {ks:.4} (tol 0.1)"),
    ))
}

/// 11. Stochastic criteria rerun bit-identically under a fixed seed. Uses
/// reduced sample counts: determinism is a property of the pipeline, not
/// of the sample size.
pub fn seeded_determinism(seed: u64) -> Result<CriterionResult> {
    let ks_a = simulation_ks(seed, 20_000)?;
    let ks_b = simulation_ks(seed, 20_000)?;
    let tails_a = tail_frequencies(seed, 20_000)?;
    let tails_b = tail_frequencies(seed, 20_000)?;
    let cur_a = current_stats(seed, 100, 500.0)?;
    let cur_b = current_stats(seed, 100, 500.0)?;
    let same = ks_a.to_bits() == ks_b.to_bits()
        && tails_a
            .iter()
            .zip(&tails_b)
            .all(|(a, b)| a.0.to_bits() == b.0.to_bits())
        && cur_a.0.to_bits() == cur_b.0.to_bits()
        && cur_a.1.to_bits() == cur_b.1.to_bits();
    Ok(CriterionResult::new(
        11,
        "seeded-determinism",
        same,
        format!("bit-identical reruns of criteria 4/9/10 statistics: {same}"),
    ))
}

/// Run the whole suite; an error inside a criterion is reported as a
/// failure of that criterion, never a panic of the harness.
pub fn run_all(seed: u64) -> Vec<CriterionResult> {
    let runs: Vec<(usize, &'static str, Result<CriterionResult>)> = vec![
        (1, "exact-vs-enumeration", exact_vs_enumeration()),
        (2, "closed-forms", closed_forms()),
        (3, "kernel-projection", kernel_projection()),
        (4, "simulation-vs-exact", simulation_vs_exact(seed)),
        (5, "edge-law-dual-route", edge_law_dual_route()),
        (6, "edge-convergence", edge_convergence()),
        (7, "geometric-to-exponential", geometric_to_exponential()),
        (8, "equilibrium-measure", equilibrium_measure()),
        (9, "tail-rate-bounds", tail_rate_bounds(seed)),
        (10, "current-fluctuations", current_fluctuations(seed)),
        (11, "seeded-determinism", seeded_determinism(seed)),
    ];
    runs.into_iter()
        .map(|(index, name, r)| match r {
            Ok(c) => c,
            Err(e) => CriterionResult::new(index, name, false, format!("error: {e}")),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    // The full suite runs as the dedicated integration test target; here we
    // only exercise the cheap criteria and the harness plumbing.

    #[test]
    fn cheap_criteria_pass() {
        assert!(closed_forms().unwrap().passed);
        assert!(equilibrium_measure().unwrap().passed);
        assert!(geometric_to_exponential().unwrap().passed);
    }

    #[test]
    fn display_format_has_verdict_and_name() {
        let c = CriterionResult::new(3, "kernel-projection", true, "ok".into());
        let s = format!("{c}");
        assert!(s.starts_with("[PASS]"));
        assert!(s.contains("kernel-projection"));
    }

    #[test]
    fn determinism_check_holds_at_small_size() {
        assert!(seeded_determinism(12345).unwrap().passed);
    }
}
