use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The (q, M, N) configuration shared by every layer of the model.
///
/// `gamma = M/N` is derived and cached; the standing assumption is
/// `M >= N >= 1` and `0 < q < 1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ModelParams {
    pub q: f64,
    pub m: usize,
    pub n: usize,
    pub gamma: f64,
}

impl ModelParams {
    pub fn new(q: f64, m: usize, n: usize) -> Result<Self> {
        if !(q > 0.0 && q < 1.0) {
            return Err(Error::Domain(format!("q must lie in (0,1), got {q}")));
        }
        if n < 1 || m < n {
            return Err(Error::Domain(format!(
                "need M >= N >= 1, got M={m}, N={n}"
            )));
        }
        Ok(ModelParams {
            q,
            m,
            n,
            gamma: m as f64 / n as f64,
        })
    }

    /// Build params with `M = floor(gamma * N)`.
    pub fn from_gamma(q: f64, gamma: f64, n: usize) -> Result<Self> {
        if gamma < 1.0 {
            return Err(Error::Domain(format!("gamma must be >= 1, got {gamma}")));
        }
        let m = (gamma * n as f64).floor() as usize;
        Self::new(q, m.max(n), n)
    }

    /// Meixner weight parameter `K = M - N + 1`.
    pub fn meixner_k(&self) -> usize {
        self.m - self.n + 1
    }
}
