//! Edge-scaling limit CDF via the Hastings-McLeod connection.
//!
//! The same F(s) as the Fredholm route, but computed from the second
//! Painleve transcendent: u'' = 2u^3 + x u with u(x) ~ Ai(x) as x -> +inf.
//! Then F(s) = exp(-int_s^inf (x - s) u(x)^2 dx). Integrating the ODE
//! leftward from deep in the decaying tail is numerically stable; the
//! two moment integrals ride along as extra state components.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::tw::airy::airy_ai;

const X_HI: f64 = 12.0;
const X_LO: f64 = -12.0;
const H: f64 = 1.0 / 2048.0;
const STEPS: usize = ((X_HI - X_LO) * 2048.0) as usize;

#[derive(Clone, Copy)]
struct State {
    u: f64,
    v: f64,
    i1: f64, // int_x^{X_HI} u^2
    i2: f64, // int_x^{X_HI} y u^2
}

fn deriv(x: f64, s: State) -> State {
    State {
        u: s.v,
        v: 2.0 * s.u * s.u * s.u + x * s.u,
        i1: -s.u * s.u,
        i2: -x * s.u * s.u,
    }
}

fn axpy(s: State, h: f64, d: State) -> State {
    State {
        u: s.u + h * d.u,
        v: s.v + h * d.v,
        i1: s.i1 + h * d.i1,
        i2: s.i2 + h * d.i2,
    }
}

fn rk4_step(x: f64, s: State, h: f64) -> State {
    let k1 = deriv(x, s);
    let k2 = deriv(x + 0.5 * h, axpy(s, 0.5 * h, k1));
    let k3 = deriv(x + 0.5 * h, axpy(s, 0.5 * h, k2));
    let k4 = deriv(x + h, axpy(s, h, k3));
    State {
        u: s.u + h / 6.0 * (k1.u + 2.0 * k2.u + 2.0 * k3.u + k4.u),
        v: s.v + h / 6.0 * (k1.v + 2.0 * k2.v + 2.0 * k3.v + k4.v),
        i1: s.i1 + h / 6.0 * (k1.i1 + 2.0 * k2.i1 + 2.0 * k3.i1 + k4.i1),
        i2: s.i2 + h / 6.0 * (k1.i2 + 2.0 * k2.i2 + 2.0 * k3.i2 + k4.i2),
    }
}

/// Solution table at x_k = X_HI - k * H, built once.
fn table() -> &'static Vec<State> {
    static TABLE: OnceLock<Vec<State>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let (u0, v0) = airy_ai(X_HI);
        let mut s = State {
            u: u0,
            v: v0,
            i1: 0.0,
            i2: 0.0,
        };
        let mut out = Vec::with_capacity(STEPS + 1);
        out.push(s);
        for k in 0..STEPS {
            let x = X_HI - k as f64 * H;
            s = rk4_step(x, s, -H);
            out.push(s);
        }
        out
    })
}

/// Cubic Hermite value at fraction t in [0,1] between (f0, d0) and (f1, d1)
/// over an interval of width w.
fn hermite(t: f64, f0: f64, d0: f64, f1: f64, d1: f64, w: f64) -> f64 {
    let t2 = t * t;
    let t3 = t2 * t;
    (2.0 * t3 - 3.0 * t2 + 1.0) * f0
        + (t3 - 2.0 * t2 + t) * w * d0
        + (-2.0 * t3 + 3.0 * t2) * f1
        + (t3 - t2) * w * d1
}

/// The Hastings-McLeod solution u(x) (and u'(x)).
pub fn hastings_mcleod(x: f64) -> Result<(f64, f64)> {
    if !(X_LO..=X_HI).contains(&x) {
        return Err(Error::OutOfRange(format!(
            "x={x} outside tabulated range [{X_LO}, {X_HI}]"
        )));
    }
    let tab = table();
    let pos = (X_HI - x) / H;
    let k = (pos.floor() as usize).min(STEPS - 1);
    let t = pos - k as f64;
    let (a, b) = (tab[k], tab[k + 1]);
    let (xa, xb) = (X_HI - k as f64 * H, X_HI - (k + 1) as f64 * H);
    let da = deriv(xa, a);
    let db = deriv(xb, b);
    Ok((
        hermite(t, a.u, da.u, b.u, db.u, -H),
        hermite(t, a.v, da.v, b.v, db.v, -H),
    ))
}

/// Evaluate F(s); returns (value, estimated error).
pub fn edge_cdf_painleve(s: f64) -> Result<(f64, f64)> {
    if !s.is_finite() {
        return Err(Error::Domain(format!("s must be finite, got {s}")));
    }
    if s >= X_HI {
        // 1 - F(12) is below 1e-27
        return Ok((1.0, 1e-14));
    }
    if s < X_LO {
        return Err(Error::OutOfRange(format!(
            "s={s} below tabulated range start {X_LO}"
        )));
    }
    let tab = table();
    let pos = (X_HI - s) / H;
    let k = (pos.floor() as usize).min(STEPS - 1);
    let t = pos - k as f64;
    let (a, b) = (tab[k], tab[k + 1]);
    let (xa, xb) = (X_HI - k as f64 * H, X_HI - (k + 1) as f64 * H);
    let da = deriv(xa, a);
    let db = deriv(xb, b);
    let i1 = hermite(t, a.i1, da.i1, b.i1, db.i1, -H);
    let i2 = hermite(t, a.i2, da.i2, b.i2, db.i2, -H);
    let f = (-(i2 - s * i1)).exp();
    // leftward error growth of the ODE solution, floor at the RK4 bias
    let est = if s < 0.0 {
        (1e-15 * (0.9428 * (-s).powf(1.5)).min(34.0).exp()).min(1.0)
    } else {
        1e-14
    };
    Ok((f.clamp(0.0, 1.0), est))
}
