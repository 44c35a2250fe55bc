//! Empirical distribution helpers: ECDF evaluation, Kolmogorov-Smirnov
//! distances and the Dvoretzky-Kiefer-Wolfowitz confidence band.

/// Empirical CDF over a sorted copy of the data.
#[derive(Debug, Clone)]
pub struct Ecdf {
    sorted: Vec<f64>,
}

impl Ecdf {
    pub fn new(mut data: Vec<f64>) -> Self {
        data.sort_by(|a, b| a.partial_cmp(b).unwrap());
        Ecdf { sorted: data }
    }

    pub fn n(&self) -> usize {
        self.sorted.len()
    }

    /// F_n(x) = (number of samples <= x) / n.
    pub fn eval(&self, x: f64) -> f64 {
        let k = self.sorted.partition_point(|&v| v <= x);
        k as f64 / self.sorted.len() as f64
    }

    pub fn sorted(&self) -> &[f64] {
        &self.sorted
    }
}

/// sup_x |F_n(x) - F(x)| against an exact atomless CDF, where `cdf(x)`
/// returns P[X <= x]. The supremum is attained at the jumps of F_n and is
/// checked from both sides of each jump.
pub fn ks_distance<F: Fn(f64) -> f64>(ecdf: &Ecdf, cdf: F) -> f64 {
    let n = ecdf.n() as f64;
    let mut sup: f64 = 0.0;
    let mut prev = 0.0;
    let mut i = 0;
    let xs = ecdf.sorted();
    while i < xs.len() {
        let x = xs[i];
        let mut j = i;
        while j < xs.len() && xs[j] == x {
            j += 1;
        }
        let f = cdf(x);
        let below = (f - prev).abs(); // just left of the jump
        let above = (j as f64 / n - f).abs(); // at the jump
        sup = sup.max(below).max(above);
        prev = j as f64 / n;
        i = j;
    }
    sup
}

/// sup |F_n - F| when the reference law lives on the integer lattice
/// spanned by the (integer-valued) samples: both CDFs are constant between
/// integers, so the supremum is a maximum over integer evaluation points.
pub fn ks_distance_lattice<F: Fn(i64) -> f64>(ecdf: &Ecdf, cdf: F) -> f64 {
    let xs = ecdf.sorted();
    if xs.is_empty() {
        return 0.0;
    }
    let lo = xs[0] as i64 - 1;
    let hi = xs[xs.len() - 1] as i64;
    (lo..=hi)
        .map(|t| (ecdf.eval(t as f64) - cdf(t)).abs())
        .fold(0.0, f64::max)
}

/// Two-sample sup distance between empirical CDFs.
pub fn ks_two_sample(a: &Ecdf, b: &Ecdf) -> f64 {
    let mut sup: f64 = 0.0;
    for &x in a.sorted().iter().chain(b.sorted()) {
        sup = sup.max((a.eval(x) - b.eval(x)).abs());
    }
    sup
}

/// One-sided DKW band half-width: with probability >= `confidence`,
/// sup |F_n - F| <= sqrt(ln(2/alpha) / (2n)).
pub fn dkw_bound(n: usize, confidence: f64) -> f64 {
    let alpha = 1.0 - confidence;
    ((2.0 / alpha).ln() / (2.0 * n as f64)).sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::SplitMix64;

    #[test]
    fn ecdf_steps() {
        let e = Ecdf::new(vec![2.0, 1.0, 2.0, 4.0]);
        assert_eq!(e.eval(0.5), 0.0);
        assert_eq!(e.eval(1.0), 0.25);
        assert_eq!(e.eval(2.0), 0.75);
        assert_eq!(e.eval(3.0), 0.75);
        assert_eq!(e.eval(4.0), 1.0);
    }

    #[test]
    fn ks_of_exact_lattice_match() {
        // samples drawn exactly from a two-point law vs. its own CDF
        let data: Vec<f64> = (0..100).map(|i| if i < 30 { 0.0 } else { 1.0 }).collect();
        let cdf = |t: i64| {
            if t < 0 {
                0.0
            } else if t < 1 {
                0.3
            } else {
                1.0
            }
        };
        assert!(ks_distance_lattice(&Ecdf::new(data), cdf) < 1e-15);
        // a perturbed reference is detected at its exact offset
        let data2: Vec<f64> = (0..100).map(|i| if i < 30 { 0.0 } else { 1.0 }).collect();
        let d = ks_distance_lattice(&Ecdf::new(data2), |t| if t < 0 { 0.0 } else if t < 1 { 0.4 } else { 1.0 });
        assert!((d - 0.1).abs() < 1e-15);
    }

    #[test]
    fn ks_detects_shift() {
        let data: Vec<f64> = (0..1000).map(|i| i as f64 / 1000.0).collect();
        // uniform on [0,1) sample vs. uniform CDF shifted by 0.2
        let d = ks_distance(&Ecdf::new(data), |x| (x - 0.2).clamp(0.0, 1.0));
        assert!((d - 0.2).abs() < 0.01, "d={d}");
    }

    #[test]
    fn uniform_sample_within_dkw() {
        let mut rng = SplitMix64::new(12);
        let n = 20_000;
        let data: Vec<f64> = (0..n).map(|_| rng.next_open01()).collect();
        let d = ks_distance(&Ecdf::new(data), |x| x.clamp(0.0, 1.0));
        assert!(d < dkw_bound(n, 0.99), "d={d}");
    }

    #[test]
    fn two_sample_distance_is_symmetric_and_zero_on_self() {
        let mut rng = SplitMix64::new(3);
        let a = Ecdf::new((0..500).map(|_| rng.next_open01()).collect());
        let b = Ecdf::new((0..800).map(|_| rng.next_open01() + 0.1).collect());
        assert_eq!(ks_two_sample(&a, &a), 0.0);
        assert!((ks_two_sample(&a, &b) - ks_two_sample(&b, &a)).abs() < 1e-15);
        assert!(ks_two_sample(&a, &b) > 0.05);
    }

    #[test]
    fn dkw_shrinks_like_inverse_sqrt_n() {
        let b1 = dkw_bound(10_000, 0.99);
        let b2 = dkw_bound(40_000, 0.99);
        assert!((b1 / b2 - 2.0).abs() < 1e-12);
        assert!((dkw_bound(100_000, 0.99) - 0.00515).abs() < 1e-4);
    }
}
