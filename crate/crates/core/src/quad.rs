//! Gauss-Legendre quadrature with node doubling.
//!
//! Integrands in this crate are analytic after the sine substitution that
//! removes inverse-square-root endpoint singularities, so a fixed-order
//! rule doubled until the value settles converges geometrically.  Node
//! tables are computed once per order by Newton iteration on the Legendre
//! recurrence and cached.

use crate::error::{Error, Result};
use std::sync::OnceLock;

/// Supported orders: 64 * 2^k up to 4096.
const LEVELS: usize = 7;

fn order(level: usize) -> usize {
    64 << level
}

/// Nodes and weights on [-1, 1] for one order.
type Rule = Vec<(f64, f64)>;

fn rule(level: usize) -> &'static Rule {
    static CACHE: [OnceLock<Rule>; LEVELS] = [
        OnceLock::new(),
        OnceLock::new(),
        OnceLock::new(),
        OnceLock::new(),
        OnceLock::new(),
        OnceLock::new(),
        OnceLock::new(),
    ];
    CACHE[level].get_or_init(|| gauss_legendre(order(level)))
}

/// Compute the n-point Gauss-Legendre rule on [-1, 1].
fn gauss_legendre(n: usize) -> Rule {
    let mut out = Vec::with_capacity(n);
    let m = n.div_ceil(2);
    for i in 0..m {
        // Tricomi initial guess, then Newton on P_n.
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre_pair(n, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        out.push((-x, w));
        if 2 * (i + 1) <= n && x != 0.0 {
            out.push((x, w));
        }
    }
    out.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    out
}

/// P_n(x) and P_n'(x) by the three-term recurrence.
fn legendre_pair(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0_f64;
    let mut p1 = x;
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (p0 - x * p1) / (1.0 - x * x);
    (p1, d)
}

/// Fixed-order integral of `f` over `[a, b]`.
pub fn integrate_fixed<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, level: usize) -> f64 {
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let mut sum = 0.0;
    for &(x, w) in rule(level) {
        sum += w * f(mid + half * x);
    }
    sum * half
}

/// Adaptive integral: double the order until the relative change is below
/// `rel_tol`.  Returns the last value, or an error if 4096 nodes were not
/// enough (the callers treat that as "energy too close to the horizon").
pub fn integrate_adaptive<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, rel_tol: f64) -> Result<f64> {
    let mut prev = integrate_fixed(f, a, b, 0);
    for level in 1..LEVELS {
        let next = integrate_fixed(f, a, b, level);
        let scale = next.abs().max(1e-300);
        if (next - prev).abs() <= rel_tol * scale {
            return Ok(next);
        }
        prev = next;
    }
    Err(Error::QuadratureNonConvergent(
        (prev - integrate_fixed(f, a, b, LEVELS - 1)).abs() / prev.abs().max(1e-300),
    ))
}

/// Composite trapezoid on uniformly spaced samples with spacing `h`.
pub fn trapezoid_uniform(values: &[f64], h: f64) -> f64 {
    match values.len() {
        0 | 1 => 0.0,
        n => {
            let inner: f64 = values[1..n - 1].iter().sum();
            h * (0.5 * (values[0] + values[n - 1]) + inner)
        }
    }
}

/// Composite Simpson on uniformly spaced samples (even interval count).
///
/// Falls back to trapezoid on the final interval when the count is odd.
pub fn simpson_uniform(values: &[f64], h: f64) -> f64 {
    let n = values.len();
    if n < 3 {
        return trapezoid_uniform(values, h);
    }
    let intervals = n - 1;
    let even_part = if intervals % 2 == 0 { n } else { n - 1 };
    let mut sum = values[0] + values[even_part - 1];
    let mut i = 1;
    while i < even_part - 1 {
        sum += if i % 2 == 1 { 4.0 } else { 2.0 } * values[i];
        i += 1;
    }
    let mut total = sum * h / 3.0;
    if intervals % 2 == 1 {
        total += 0.5 * h * (values[n - 2] + values[n - 1]);
    }
    total
}
