use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::params::ModelParams;
use crate::rng::{cell_stream, exponential, geometric};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum WeightKind {
    /// P[w = k] = (1-q) q^k on k >= 0.
    Geometric,
    /// w* = w + 1, supported on k >= 1.
    GeometricStar,
    /// Rate-1 exponential (q is ignored).
    Exponential,
}

/// An M x N field of i.i.d. site weights, reproducible from (seed, params).
///
/// Geometric entries are integer-valued (stored exactly in f64).
#[derive(Debug, Clone)]
pub struct WeightField {
    pub params: ModelParams,
    pub kind: WeightKind,
    pub seed: u64,
    entries: Vec<f64>, // row-major: entries[(j-1)*M + (i-1)]
}

impl WeightField {
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        debug_assert!(i >= 1 && i <= self.params.m && j >= 1 && j <= self.params.n);
        self.entries[(j - 1) * self.params.m + (i - 1)]
    }

    pub fn entries(&self) -> &[f64] {
        &self.entries
    }

    /// Build a field from explicit entries (row-major, length M*N).
    pub fn from_entries(
        params: ModelParams,
        kind: WeightKind,
        entries: Vec<f64>,
    ) -> Result<Self> {
        if entries.len() != params.m * params.n {
            return Err(crate::error::Error::Domain(format!(
                "expected {} entries, got {}",
                params.m * params.n,
                entries.len()
            )));
        }
        Ok(WeightField {
            params,
            kind,
            seed: 0,
            entries,
        })
    }

    pub fn total(&self) -> f64 {
        self.entries.iter().sum()
    }
}

/// Sample the i.i.d. environment. Each cell draws from its own
/// counter-based stream, so the grid is independent of traversal order.
pub fn sample_weights(params: ModelParams, kind: WeightKind, seed: u64) -> Result<WeightField> {
    let (m, n, q) = (params.m, params.n, params.q);
    let mut entries = Vec::with_capacity(m * n);
    for j in 1..=n {
        for i in 1..=m {
            let u = cell_stream(seed, i as u64, j as u64).next_open01();
            let w = match kind {
                WeightKind::Geometric => geometric(u, q) as f64,
                WeightKind::GeometricStar => (geometric(u, q) + 1) as f64,
                WeightKind::Exponential => exponential(u),
            };
            entries.push(w);
        }
    }
    Ok(WeightField {
        params,
        kind,
        seed,
        entries,
    })
}
