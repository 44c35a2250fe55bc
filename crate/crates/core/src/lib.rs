//! Corner-growth model toolkit.
//!
//! Samples the geometric/exponential last-passage percolation model and its
//! growing-Young-diagram / TASEP views, evaluates the exact finite-size
//! distribution of the passage time through Meixner and Laguerre
//! determinantal kernels, computes the Tracy-Widom GUE edge law by two
//! independent routes, and provides the closed-form limit constants,
//! equilibrium densities and large-deviation rate functions tying them
//! together.

pub mod asymptotics;
pub mod ensemble;
pub mod error;
pub mod growth;
pub mod output;
pub mod params;
pub mod quad;
pub mod report;
pub mod rng;
pub mod stats;
pub mod tw;

pub use error::{Error, Result};
pub use params::ModelParams;
