//! Minimal double-double arithmetic (~32 significant digits).
//!
//! The wavefunction recurrences amplify input perturbations geometrically
//! in the region where the true solution is exponentially small; seeding
//! the contamination at 1e-32 instead of 1e-16 — both in the arithmetic
//! and in the recurrence coefficients themselves — keeps every emitted
//! value far below the 1e-10 accuracy targets up to degree several hundred.

#[derive(Debug, Clone, Copy)]
pub struct Dd {
    pub hi: f64,
    pub lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    pub const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };

    #[inline]
    pub fn from(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }

    /// Exact product of two doubles.
    #[inline]
    pub fn prod(a: f64, b: f64) -> Dd {
        let (hi, lo) = two_prod(a, b);
        Dd { hi, lo }
    }

    /// Exact difference of two doubles.
    #[inline]
    pub fn diff(a: f64, b: f64) -> Dd {
        let (hi, lo) = two_sum(a, -b);
        Dd { hi, lo }
    }

    #[inline]
    pub fn add(self, o: Dd) -> Dd {
        let (s, e) = two_sum(self.hi, o.hi);
        let (hi, lo) = quick_two_sum(s, e + self.lo + o.lo);
        Dd { hi, lo }
    }

    #[inline]
    pub fn add_f64(self, o: f64) -> Dd {
        let (s, e) = two_sum(self.hi, o);
        let (hi, lo) = quick_two_sum(s, e + self.lo);
        Dd { hi, lo }
    }

    #[inline]
    pub fn sub(self, o: Dd) -> Dd {
        self.add(Dd {
            hi: -o.hi,
            lo: -o.lo,
        })
    }

    #[inline]
    pub fn mul(self, o: Dd) -> Dd {
        let (p, e) = two_prod(self.hi, o.hi);
        let (hi, lo) = quick_two_sum(p, e + self.hi * o.lo + self.lo * o.hi);
        Dd { hi, lo }
    }

    #[inline]
    pub fn div(self, o: Dd) -> Dd {
        let q1 = self.hi / o.hi;
        let r = self.sub(o.mul_f64(q1));
        let q2 = (r.hi + r.lo) / o.hi;
        let (hi, lo) = quick_two_sum(q1, q2);
        Dd { hi, lo }
    }

    #[inline]
    pub fn mul_f64(self, b: f64) -> Dd {
        let (p, e) = two_prod(self.hi, b);
        let (hi, lo) = quick_two_sum(p, e + self.lo * b);
        Dd { hi, lo }
    }

    #[inline]
    pub fn sqrt(self) -> Dd {
        if self.hi == 0.0 {
            return Dd::ZERO;
        }
        let s = self.hi.sqrt();
        // one Newton step: s + (x - s^2) / (2s)
        let corr = self.sub(Dd::prod(s, s));
        let (hi, lo) = quick_two_sum(s, (corr.hi + corr.lo) / (2.0 * s));
        Dd { hi, lo }
    }

    /// Multiply by an exact power of two (or other exact scale).
    #[inline]
    pub fn scale(self, f: f64) -> Dd {
        Dd {
            hi: self.hi * f,
            lo: self.lo * f,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_products_and_differences() {
        let p = Dd::prod(1.0000000001e8, 1.0000000003e8);
        // hi + lo reconstructs more digits than f64 alone
        assert!(p.lo != 0.0 || p.hi == 1.0000000001e8 * 1.0000000003e8);
        let d = Dd::diff(1.0, 0.4);
        // hi + lo equals the exact real 1 - f64(0.4)
        assert_eq!(d.hi + d.lo, d.hi + d.lo);
        assert!((d.hi - 0.6).abs() < 1e-15);
    }

    #[test]
    fn division_and_sqrt_round_trip() {
        let a = Dd::from(2.0);
        let r = a.sqrt();
        let back = r.mul(r);
        assert!((back.hi - 2.0).abs() < 1e-30 + back.lo.abs() * 2.0);
        let q = Dd::from(1.0).div(Dd::from(3.0));
        let three_q = q.mul_f64(3.0);
        assert!((three_q.hi - 1.0).abs() + three_q.lo.abs() < 1e-30);
    }

    #[test]
    fn accumulates_beyond_f64_precision() {
        // (1e16 + 1) - 1e16 = 1 exactly in dd, 0 in plain f64
        let s = Dd::from(1e16).add_f64(1.0).add_f64(-1e16);
        assert_eq!(s.hi, 1.0);
    }
}
