//! Law-of-large-numbers and fluctuation asymptotics: limit constants,
//! equilibrium measure, large-deviation rate function, and the edge
//! rescaling that connects the exact finite-N law to its limit.

pub mod constants;
pub mod density;
pub mod rate;
pub mod rescale;

pub use constants::{
    exp_constants, omega, shape_contains, sigma, tasep_fluct_params, EdgeConstants, TasepFluct,
};
pub use density::{EquilibriumDensity, Regime};
pub use rate::{lower_tail_rate, rate_edge_coefficient, rate_j, tail_bound_finite_n};
pub use rescale::{
    convergence_ladder, edge_distance, rescaled_cdf_points, ConvergenceRow, RescaledPoint,
};
