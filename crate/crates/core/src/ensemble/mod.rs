//! Exact finite-size distributions of the corner passage time, via
//! determinantal point-process kernels built from orthogonal polynomials.

pub mod brute;
mod dd;
pub mod kernel;
pub mod laguerre;
pub mod meixner;
pub mod recurrence;

use serde::Serialize;

pub use brute::brute_force_cdf;
pub use kernel::{kernel_window, wavefunction_matrix, wavefunctions_at, KernelWindow, WaveEvaluator};
pub use laguerre::exact_cdf_laguerre;
pub use meixner::{exact_cdf_meixner, exact_cdf_meixner_many, tail_truncation_bound};
pub use recurrence::{recurrence, Family, MonicRecurrence};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CdfMethod {
    Fredholm,
    BruteForce,
    ClosedForm,
}

impl std::fmt::Display for CdfMethod {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CdfMethod::Fredholm => write!(f, "fredholm"),
            CdfMethod::BruteForce => write!(f, "bruteforce"),
            CdfMethod::ClosedForm => write!(f, "closedform"),
        }
    }
}

/// A probability with an attached truncation/quadrature error bound.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct CdfValue {
    pub t: f64,
    pub p: f64,
    pub err: f64,
    pub method: CdfMethod,
}
