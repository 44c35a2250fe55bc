use crate::error::{Error, Result};
use crate::growth::diagram::YoungDiagramState;
use crate::rng::SplitMix64;

/// A window of the infinite 0/1 particle configuration. Sites below
/// `k_lo` are occupied and sites above `k_lo + occupation.len() - 1` are
/// empty by convention (the step-profile tails).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TasepConfig {
    pub k_lo: i64,
    pub occupation: Vec<bool>,
}

impl TasepConfig {
    pub fn k_hi(&self) -> i64 {
        self.k_lo + self.occupation.len() as i64 - 1
    }

    pub fn occupied(&self, k: i64) -> bool {
        if k < self.k_lo {
            true
        } else if k > self.k_hi() {
            false
        } else {
            self.occupation[(k - self.k_lo) as usize]
        }
    }

    /// Particle positions inside the window, rightmost first.
    pub fn particles(&self) -> Vec<i64> {
        (self.k_lo..=self.k_hi())
            .rev()
            .filter(|&k| self.occupied(k))
            .collect()
    }
}

/// Read the staircase boundary of the diagram as a particle configuration.
///
/// Particle j (counting from the right, starting at site 1-j at time 0)
/// has moved mu_j steps, where mu is the conjugate partition, so it sits
/// at `mu_j - j + 1`. This reproduces the boundary word anchored at the
/// x = y diagonal.
pub fn tasep_encode(state: &YoungDiagramState, k_lo: i64, k_hi: i64) -> Result<TasepConfig> {
    if k_lo > 0 || k_hi < 1 {
        return Err(Error::WindowTooSmall(format!(
            "window [{k_lo},{k_hi}] must straddle the origin"
        )));
    }
    let mu = state.conjugate();
    // particles with index beyond mu sit at 1-j and are covered by the
    // occupied-left convention once 1-j < k_lo.
    let j_max = mu.len().max((1 - k_lo) as usize);
    let mut occupation = vec![false; (k_hi - k_lo + 1) as usize];
    for j in 1..=j_max {
        let steps = mu.get(j - 1).copied().unwrap_or(0) as i64;
        let pos = steps - j as i64 + 1;
        if pos > k_hi {
            return Err(Error::WindowTooSmall(format!(
                "particle {j} at site {pos} exceeds window end {k_hi}"
            )));
        }
        if pos >= k_lo {
            occupation[(pos - k_lo) as usize] = true;
        } else if steps > 0 {
            return Err(Error::WindowTooSmall(format!(
                "moved particle {j} at site {pos} lies left of window start {k_lo}"
            )));
        }
    }
    Ok(TasepConfig { k_lo, occupation })
}

/// Invert `tasep_encode`: recover the diagram's column heights.
pub fn tasep_decode(config: &TasepConfig) -> Result<Vec<u64>> {
    let mut mu: Vec<u64> = Vec::new();
    for (j, pos) in config.particles().iter().enumerate() {
        let steps = pos + j as i64; // mu_j = pos_j + j - 1 with j 1-based
        if steps < 0 {
            return Err(Error::Domain(format!(
                "particle {} at site {pos} implies negative displacement",
                j + 1
            )));
        }
        mu.push(steps as u64);
    }
    // particles below the window have displacement 0 by convention
    while mu.last() == Some(&0) {
        mu.pop();
    }
    if mu.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::Domain("configuration is not a staircase".into()));
    }
    let shape = YoungDiagramState { t: 0, rows: mu };
    Ok(shape.conjugate())
}

/// One synchronous step of the discrete-time TASEP: every particle whose
/// right neighbor is empty in the pre-step configuration jumps right with
/// probability 1 - q.
pub fn tasep_step_discrete(config: &TasepConfig, q: f64, rng: &mut SplitMix64) -> TasepConfig {
    // Extend by one implied site on each side: the particle at k_lo - 1
    // may enter the window, and the particle at k_hi may leave it.
    let mut pre = Vec::with_capacity(config.occupation.len() + 2);
    pre.push(true);
    pre.extend_from_slice(&config.occupation);
    pre.push(false);
    let mut post = pre.clone();
    for i in 0..pre.len() - 1 {
        if pre[i] && !pre[i + 1] && rng.next_bool(1.0 - q) {
            post[i] = false;
            post[i + 1] = true;
        }
    }
    let mut k_lo = config.k_lo - 1;
    if post[0] {
        post.remove(0);
        k_lo += 1;
    }
    if let Some(&false) = post.last() {
        post.pop();
    }
    TasepConfig {
        k_lo,
        occupation: post,
    }
}
