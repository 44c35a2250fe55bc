//! The GUE edge-fluctuation law F(s), computed by two independent routes:
//! a Fredholm-determinant discretization and a Painleve-II representation.

pub mod airy;
pub mod fredholm;
pub mod painleve;

use serde::Serialize;

use crate::error::Result;

pub use airy::airy_ai;
pub use fredholm::edge_cdf_fredholm;
pub use painleve::{edge_cdf_painleve, hastings_mcleod};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TwMethod {
    Fredholm,
    Painleve,
}

impl std::fmt::Display for TwMethod {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            TwMethod::Fredholm => write!(f, "fredholm"),
            TwMethod::Painleve => write!(f, "painleve"),
        }
    }
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct TwValue {
    pub s: f64,
    pub f: f64,
    pub method: TwMethod,
    pub est_err: f64,
}

/// F(s) by the requested route.
pub fn tw_cdf(s: f64, method: TwMethod) -> Result<TwValue> {
    let (f, est_err) = match method {
        TwMethod::Fredholm => edge_cdf_fredholm(s)?,
        TwMethod::Painleve => edge_cdf_painleve(s)?,
    };
    Ok(TwValue {
        s,
        f,
        method,
        est_err,
    })
}

/// Evaluate F on an inclusive uniform grid.
pub fn tw_table(s_min: f64, s_max: f64, count: usize, method: TwMethod) -> Result<Vec<TwValue>> {
    if count < 2 || s_max <= s_min {
        return Err(crate::error::Error::Domain(format!(
            "need count >= 2 and s_max > s_min, got count={count}, [{s_min}, {s_max}]"
        )));
    }
    let step = (s_max - s_min) / (count - 1) as f64;
    (0..count)
        .map(|i| tw_cdf(s_min + i as f64 * step, method))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_endpoints_and_length() {
        let t = tw_table(-4.0, 2.0, 13, TwMethod::Painleve).unwrap();
        assert_eq!(t.len(), 13);
        assert!((t[0].s + 4.0).abs() < 1e-12);
        assert!((t[12].s - 2.0).abs() < 1e-12);
        assert!(t.windows(2).all(|w| w[1].f >= w[0].f - 1e-12));
    }

    #[test]
    fn both_methods_expose_error_estimates() {
        for m in [TwMethod::Fredholm, TwMethod::Painleve] {
            let v = tw_cdf(-3.0, m).unwrap();
            assert!(v.est_err > 0.0 && v.est_err < 1e-3);
        }
    }
}
