//! Piecewise-cubic Hermite interpolation.
//!
//! Knots carry exact values and slopes, so the interpolant is C1 by
//! construction.  Used for the diffusion-from-knots family and for the
//! sampled characteristic curves.

/// One knot: abscissa, value, slope.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Knot {
    pub x: f64,
    pub y: f64,
    pub dy: f64,
}

/// C1 piecewise-cubic Hermite interpolant over sorted knots.
#[derive(Debug, Clone)]
pub struct CubicHermite {
    knots: Vec<Knot>,
}

impl CubicHermite {
    /// Build from knots sorted strictly by `x`.  Panics on unsorted input;
    /// callers validate user data first.
    pub fn new(knots: Vec<Knot>) -> Self {
        assert!(knots.len() >= 1, "need at least one knot");
        assert!(
            knots.windows(2).all(|w| w[0].x < w[1].x),
            "knots must be strictly increasing in x"
        );
        CubicHermite { knots }
    }

    pub fn knots(&self) -> &[Knot] {
        &self.knots
    }

    pub fn x_min(&self) -> f64 {
        self.knots[0].x
    }

    pub fn x_max(&self) -> f64 {
        self.knots[self.knots.len() - 1].x
    }

    fn segment(&self, x: f64) -> usize {
        // rightmost knot with knot.x <= x, clamped to a valid segment
        match self
            .knots
            .binary_search_by(|k| k.x.partial_cmp(&x).unwrap())
        {
            Ok(i) => i.min(self.knots.len().saturating_sub(2)),
            Err(0) => 0,
            Err(i) => (i - 1).min(self.knots.len().saturating_sub(2)),
        }
    }

    /// Value at `x`; constant extension outside the knot range.
    pub fn eval(&self, x: f64) -> f64 {
        if self.knots.len() == 1 || x <= self.x_min() {
            return self.knots[0].y;
        }
        if x >= self.x_max() {
            return self.knots[self.knots.len() - 1].y;
        }
        let i = self.segment(x);
        let (a, b) = (self.knots[i], self.knots[i + 1]);
        let h = b.x - a.x;
        let t = (x - a.x) / h;
        let (h00, h10, h01, h11) = hermite_basis(t);
        h00 * a.y + h10 * h * a.dy + h01 * b.y + h11 * h * b.dy
    }

    /// Derivative at `x`; zero outside the knot range (constant extension).
    pub fn deriv(&self, x: f64) -> f64 {
        if self.knots.len() == 1 || x < self.x_min() || x > self.x_max() {
            return 0.0;
        }
        if x == self.x_max() {
            return self.knots[self.knots.len() - 1].dy;
        }
        let i = self.segment(x);
        let (a, b) = (self.knots[i], self.knots[i + 1]);
        let h = b.x - a.x;
        let t = (x - a.x) / h;
        let d00 = (6.0 * t * t - 6.0 * t) / h;
        let d10 = 3.0 * t * t - 4.0 * t + 1.0;
        let d01 = (-6.0 * t * t + 6.0 * t) / h;
        let d11 = 3.0 * t * t - 2.0 * t;
        d00 * a.y + d10 * a.dy + d01 * b.y + d11 * b.dy
    }

    /// True when the derivative keeps the sign `sign` (+1/-1, non-strict)
    /// over every interior segment.  The derivative of a Hermite cubic is
    /// quadratic in t, so it suffices to check its extremum and endpoints.
    pub fn derivative_keeps_sign(&self, sign: f64) -> bool {
        for w in self.knots.windows(2) {
            let (a, b) = (w[0], w[1]);
            let h = b.x - a.x;
            // p'(t)/1: c2 t^2 + c1 t + c0 with respect to t in [0,1]
            let slope = (b.y - a.y) / h;
            let c0 = a.dy;
            let c1 = 6.0 * slope - 4.0 * a.dy - 2.0 * b.dy;
            let c2 = 3.0 * (a.dy + b.dy) - 6.0 * slope;
            let mut worst = sign * c0.min(0.0);
            for t in [0.0_f64, 1.0] {
                let v = c2 * t * t + c1 * t + c0;
                if sign * v < -1e-13 * (1.0 + v.abs()) {
                    return false;
                }
                worst = worst.min(sign * v);
            }
            if c2 != 0.0 {
                let t_star = -c1 / (2.0 * c2);
                if (0.0..=1.0).contains(&t_star) {
                    let v = c2 * t_star * t_star + c1 * t_star + c0;
                    if sign * v < -1e-13 * (1.0 + v.abs()) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

fn hermite_basis(t: f64) -> (f64, f64, f64, f64) {
    let t2 = t * t;
    let t3 = t2 * t;
    (
        2.0 * t3 - 3.0 * t2 + 1.0,
        t3 - 2.0 * t2 + t,
        -2.0 * t3 + 3.0 * t2,
        t3 - t2,
    )
}
