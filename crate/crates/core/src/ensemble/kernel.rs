//! Orthonormal wavefunctions and the Christoffel-Darboux projection kernel.

use nalgebra::DMatrix;

use crate::ensemble::recurrence::MonicRecurrence;

use crate::ensemble::dd::Dd;
use crate::ensemble::recurrence::Family;

/// Prepared wavefunction evaluator: phi_j(x) = (orthonormal
/// polynomial)_j(x) * sqrt(w(x)) for j = 0..=j_max.
///
/// The recurrence is carried in double-double — including the recurrence
/// coefficients themselves, whose f64 rounding alone would otherwise seed
/// a geometrically growing parasite in the region where the true
/// wavefunction is exponentially small. A running log exponent keeps
/// degrees into the hundreds finite even where the bare polynomial values
/// overflow; each emitted value is O(1).
pub struct WaveEvaluator {
    family: Family,
    a: Vec<Dd>,
    bs: Vec<Dd>,
    j_max: usize,
    log_mass: f64,
}

impl WaveEvaluator {
    pub fn new(family: Family, j_max: usize) -> Self {
        let mut a = Vec::with_capacity(j_max + 1);
        let mut bs = vec![Dd::ZERO];
        match family {
            Family::Meixner { k, q } => {
                let omq = Dd::diff(1.0, q);
                let omq2 = omq.mul(omq);
                for n in 0..=j_max {
                    let nf = n as f64;
                    a.push(Dd::prod(nf + k as f64, q).add_f64(nf).div(omq));
                    if n >= 1 {
                        let b = Dd::prod(nf * (nf + k as f64 - 1.0), q).div(omq2);
                        bs.push(b.sqrt());
                    }
                }
            }
            Family::Laguerre { alpha } => {
                for n in 0..=j_max {
                    let nf = n as f64;
                    a.push(Dd::from(alpha).add_f64(2.0 * nf).add_f64(1.0));
                    if n >= 1 {
                        let b = Dd::from(alpha).add_f64(nf).mul_f64(nf);
                        bs.push(b.sqrt());
                    }
                }
            }
        }
        WaveEvaluator {
            family,
            a,
            bs,
            j_max,
            log_mass: family.log_mass(),
        }
    }

    pub fn eval(&self, x: f64) -> Vec<f64> {
        let half_lw = 0.5 * self.family.weight_log(x);
        let mut out = Vec::with_capacity(self.j_max + 1);
        let mut scale = -0.5 * self.log_mass;
        let mut pm = Dd::ZERO;
        let mut pc = Dd::ONE;
        let emit = |p: Dd, scale: f64| -> f64 {
            if p.hi == 0.0 {
                0.0
            } else {
                // ln|hi + lo| = ln|hi| + lo/hi to first order
                p.hi.signum() * (p.hi.abs().ln() + p.lo / p.hi + scale + half_lw).exp()
            }
        };
        out.push(emit(pc, scale));
        for n in 0..self.j_max {
            let next = Dd::from(x)
                .sub(self.a[n])
                .mul(pc)
                .sub(self.bs[n].mul(pm))
                .div(self.bs[n + 1]);
            pm = pc;
            pc = next;
            let mag = pm.hi.abs().max(pc.hi.abs());
            if mag > 1e150 {
                pm = pm.scale(1e-150);
                pc = pc.scale(1e-150);
                scale += 150.0 * std::f64::consts::LN_10;
            } else if mag > 0.0 && mag < 1e-150 {
                pm = pm.scale(1e150);
                pc = pc.scale(1e150);
                scale -= 150.0 * std::f64::consts::LN_10;
            }
            let val = emit(pc, scale);
            out.push(val);
            // Below the lower turning point of level n+1 the true value
            // decays monotonically in the degree, while the upward
            // recurrence amplifies its rounding noise at the reciprocal
            // rate. Once the (still accurate) values are negligible, every
            // higher level at this x is too: emit exact zeros instead of
            // letting the noise resurface. Two consecutive levels must be
            // negligible — an isolated near-zero is a sign change in the
            // oscillatory band, whose neighbours are O(1). The
            // double-double noise floor is ~1e-16, so values at 1e-14 are
            // still reliable.
            let lower_edge = self.a[n + 1].hi - 2.0 * self.bs[n + 1].hi;
            if x < lower_edge && val.abs() < 1e-14 && out[n].abs() < 1e-14 {
                out.resize(self.j_max + 1, 0.0);
                break;
            }
        }
        out
    }
}

/// Convenience one-shot evaluation (prefer `WaveEvaluator` in loops).
pub fn wavefunctions_at(rec: &MonicRecurrence, j_max: usize, x: f64) -> Vec<f64> {
    debug_assert!(j_max + 1 <= rec.a.len());
    WaveEvaluator::new(rec.family, j_max).eval(x)
}

/// All wavefunction levels j = 0..n_levels-1 on a set of points, as an
/// (n_levels x points) matrix.
pub fn wavefunction_matrix(rec: &MonicRecurrence, n_levels: usize, points: &[f64]) -> DMatrix<f64> {
    let ev = WaveEvaluator::new(rec.family, n_levels - 1);
    let mut m = DMatrix::zeros(n_levels, points.len());
    for (col, &x) in points.iter().enumerate() {
        let v = ev.eval(x);
        for (row, &phi) in v.iter().enumerate() {
            m[(row, col)] = phi;
        }
    }
    m
}

/// Dense evaluation of the degree-N projection kernel on a window of
/// points. Off-diagonal entries use the Christoffel-Darboux quotient,
/// the diagonal uses the sum of squared wavefunctions.
#[derive(Debug, Clone)]
pub struct KernelWindow {
    pub points: Vec<f64>,
    pub values: DMatrix<f64>,
    pub trace_tail_bound: f64,
}

impl KernelWindow {
    pub fn trace(&self) -> f64 {
        self.values.diagonal().sum()
    }
}

/// Build the kernel window for the N-point ensemble attached to `rec`.
/// `rec` must carry coefficients up to degree N.
pub fn kernel_window(rec: &MonicRecurrence, n: usize, points: &[f64]) -> KernelWindow {
    let b_n = rec.b[n].sqrt();
    // levels 0..=n at every point (level n feeds the CD numerator)
    let phi = wavefunction_matrix(rec, n + 1, points);
    let len = points.len();
    let mut values = DMatrix::zeros(len, len);
    for i in 0..len {
        let mut diag = 0.0;
        for j in 0..n {
            diag += phi[(j, i)] * phi[(j, i)];
        }
        values[(i, i)] = diag;
        for j2 in i + 1..len {
            let num = phi[(n, i)] * phi[(n - 1, j2)] - phi[(n - 1, i)] * phi[(n, j2)];
            let v = b_n * num / (points[i] - points[j2]);
            values[(i, j2)] = v;
            values[(j2, i)] = v;
        }
    }
    KernelWindow {
        points: points.to_vec(),
        values,
        trace_tail_bound: 0.0,
    }
}
