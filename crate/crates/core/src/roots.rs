//! Bracketed scalar root finding (Brent-Dekker).
//!
//! All inversions in the crate go through [`brent`]: amplitude solves,
//! time-map inversions, curve inversions and intersection refinement.  The
//! callers guarantee a sign change; `brent` converges superlinearly and
//! never leaves the bracket.

use crate::error::{Error, Result};

/// Find a root of `f` in `[a, b]` given `f(a)` and `f(b)` of opposite sign.
///
/// Termination: bracket width below `atol + rtol*|x|` or an exact zero.
pub fn brent<F: FnMut(f64) -> f64>(
    mut f: F,
    mut a: f64,
    mut b: f64,
    rtol: f64,
    atol: f64,
) -> Result<f64> {
    let mut fa = f(a);
    let mut fb = f(b);
    if fa == 0.0 {
        return Ok(a);
    }
    if fb == 0.0 {
        return Ok(b);
    }
    if fa.signum() == fb.signum() {
        return Err(Error::NoBracket { a, b, fa, fb });
    }
    if fa.abs() < fb.abs() {
        std::mem::swap(&mut a, &mut b);
        std::mem::swap(&mut fa, &mut fb);
    }
    let mut c = a;
    let mut fc = fa;
    let mut d = b - a;
    let mut e = d;

    const MAX_ITER: usize = 200;
    for _ in 0..MAX_ITER {
        if fb.signum() == fc.signum() {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
        if fc.abs() < fb.abs() {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        let tol = 2.0 * f64::EPSILON * b.abs() + 0.5 * (atol + rtol * b.abs());
        let m = 0.5 * (c - b);
        if m.abs() <= tol || fb == 0.0 {
            return Ok(b);
        }
        if e.abs() < tol || fa.abs() <= fb.abs() {
            // bisection
            d = m;
            e = m;
        } else {
            let s = fb / fa;
            let (mut p, mut q) = if a == c {
                // secant
                (2.0 * m * s, 1.0 - s)
            } else {
                // inverse quadratic
                let qq = fa / fc;
                let r = fb / fc;
                (
                    s * (2.0 * m * qq * (qq - r) - (b - a) * (r - 1.0)),
                    (qq - 1.0) * (r - 1.0) * (s - 1.0),
                )
            };
            if p > 0.0 {
                q = -q;
            }
            p = p.abs();
            if 2.0 * p < (3.0 * m * q - (tol * q).abs()).min((e * q).abs()) {
                e = d;
                d = p / q;
            } else {
                d = m;
                e = m;
            }
        }
        a = b;
        fa = fb;
        b += if d.abs() > tol {
            d
        } else if m > 0.0 {
            tol
        } else {
            -tol
        };
        fb = f(b);
        if fb == 0.0 {
            return Ok(b);
        }
    }
    Err(Error::RootIterations(MAX_ITER))
}

/// Scan `f` on `grid` and return refined roots, one per sign change.
///
/// Consecutive grid values with opposite signs delimit a bracket that is
/// handed to [`brent`].  Exact zeros at grid nodes are returned as-is.
pub fn roots_on_grid<F: FnMut(f64) -> f64>(
    mut f: F,
    grid: &[f64],
    rtol: f64,
    atol: f64,
) -> Result<Vec<f64>> {
    let mut out = Vec::new();
    if grid.len() < 2 {
        return Ok(out);
    }
    let mut prev_x = grid[0];
    let mut prev_f = f(prev_x);
    for &x in &grid[1..] {
        let fx = f(x);
        if prev_f == 0.0 {
            out.push(prev_x);
        } else if fx != 0.0 && prev_f.signum() != fx.signum() {
            out.push(brent(&mut f, prev_x, x, rtol, atol)?);
        }
        prev_x = x;
        prev_f = fx;
    }
    if prev_f == 0.0 {
        out.push(prev_x);
    }
    out.dedup_by(|a, b| (*a - *b).abs() <= atol + rtol * a.abs().max(b.abs()));
    Ok(out)
}
