use crate::error::{Error, Result};
use crate::growth::passage::{last_passage, PassageGrid};
use crate::growth::weights::{sample_weights, WeightKind};
use crate::params::ModelParams;
use crate::rng::index_stream;

/// Continuous-time particle system started from the step profile, observed
/// through its passage-time dual: particle k (initially at -k) has taken
/// more than m jumps by time t exactly when `H(m+k+1, m+1) <= t`, where H
/// is the last-passage table over rate-1 exponential weights.
pub struct CurrentSampler {
    grid: PassageGrid,
    k_max: usize,
    m_max: usize,
}

impl CurrentSampler {
    pub fn new(seed: u64, k_max: usize, m_max: usize) -> Result<Self> {
        let params = ModelParams::new(0.5, m_max + k_max + 1, m_max + 1)?;
        let w = sample_weights(params, WeightKind::Exponential, seed)?;
        Ok(CurrentSampler {
            grid: last_passage(&w),
            k_max,
            m_max,
        })
    }

    /// Number of jumps particle k has made by time t, or an error if the
    /// count would run past the sampled table.
    pub fn jumps(&self, k: usize, t: f64) -> Result<u64> {
        if k > self.k_max {
            return Err(Error::OutOfRange(format!(
                "particle index {k} exceeds table bound {}",
                self.k_max
            )));
        }
        // H(m+k+1, m+1) is increasing in m, so scan until it passes t.
        let mut count = 0u64;
        for m in 0..=self.m_max {
            if self.grid.get(m + k + 1, m + 1) <= t {
                count = m as u64 + 1;
            } else {
                return Ok(count);
            }
        }
        Err(Error::Truncation(format!(
            "jump count for particle {k} saturated the {}-deep table at t={t}",
            self.m_max
        )))
    }
}

/// Sample the jump count of the particle at macroscopic position u in [0,1)
/// at time t, i.e. particle k = floor(u t). Grows the table if the first
/// guess at its depth proves too small.
pub fn current_y(u: f64, t: f64, seed: u64) -> Result<u64> {
    if !(0.0..1.0).contains(&u) || !t.is_finite() || t < 0.0 {
        return Err(Error::Domain(format!(
            "need 0 <= u < 1 and t >= 0, got u={u}, t={t}"
        )));
    }
    let k = (u * t).floor() as usize;
    // law-of-large-numbers scale t(1-u)^2/4 plus a generous t^(1/3) margin
    let mut m_max = (0.25 * t * (1.0 - u) * (1.0 - u) + 10.0 * t.cbrt() + 32.0) as usize;
    for attempt in 0u64..4 {
        let sampler = CurrentSampler::new(index_stream(seed, attempt).next_u64(), k, m_max)?;
        match sampler.jumps(k, t) {
            Ok(y) => return Ok(y),
            Err(Error::Truncation(_)) => m_max *= 2,
            Err(e) => return Err(e),
        }
    }
    Err(Error::Truncation(format!(
        "jump count at u={u}, t={t} kept saturating up to depth {m_max}"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_time_means_zero_jumps() {
        assert_eq!(current_y(0.3, 0.0, 1).unwrap(), 0);
    }

    #[test]
    fn jumps_monotone_in_time() {
        let s = CurrentSampler::new(7, 4, 80).unwrap();
        for k in 0..=4 {
            let mut prev = 0;
            for ti in 1..=20 {
                let y = s.jumps(k, ti as f64).unwrap();
                assert!(y >= prev);
                prev = y;
            }
        }
    }

    #[test]
    fn leading_particle_outruns_followers() {
        // particle k starts k sites behind particle 0 and can never have
        // made more jumps: H(m+k+1, m+1) >= H(m+1, m+1).
        let s = CurrentSampler::new(3, 6, 100).unwrap();
        for t in [5.0, 20.0, 60.0] {
            let mut prev = u64::MAX;
            for k in 0..=6 {
                let y = s.jumps(k, t).unwrap();
                assert!(y <= prev);
                prev = y;
            }
        }
    }

    #[test]
    fn mean_jump_count_near_hydrodynamic_limit() {
        // at u = 0 the count concentrates at t/4
        let t = 400.0;
        let mut sum = 0.0;
        let n = 40;
        for seed in 0..n {
            sum += current_y(0.0, t, seed).unwrap() as f64;
        }
        let mean = sum / n as f64;
        let expect = t / 4.0;
        // fluctuations are O(t^(1/3)) ~ 7.4; allow a wide band
        assert!(
            (mean - expect).abs() < 12.0,
            "mean={mean}, expect={expect}"
        );
    }

    #[test]
    fn rejects_bad_domain() {
        assert!(current_y(1.0, 5.0, 0).is_err());
        assert!(current_y(-0.1, 5.0, 0).is_err());
        assert!(current_y(0.2, -1.0, 0).is_err());
    }
}
