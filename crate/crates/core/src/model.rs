//! Model functions: the reaction nonlinearity f and the diffusion
//! coefficient a, with derivative and primitive access and validation.
//!
//! The reaction term must satisfy f(0) = 0, f'(0) = 1, u f''(u) < 0 away
//! from zero, and be dissipative at the ends of the analysis horizon.  The
//! diffusion coefficient must be C1 with values in [m, M], m > 0.

use crate::error::{Error, Result};
use crate::interp::{CubicHermite, Knot};
use crate::quad;
use crate::roots::brent;
use crate::tol::Tolerances;
use serde::{Deserialize, Serialize};

/// Supported reaction families.  Both cubics have closed-form primitives
/// and exact zeros, which the tests lean on.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ReactionKind {
    /// f(u) = u - u^3 (odd).
    OddCubic,
    /// f(u) = u - b_plus u^3 for u >= 0, u - b_minus u^3 for u < 0.
    PiecewiseCubic { b_plus: f64, b_minus: f64 },
}

/// The reaction nonlinearity with derivatives, primitive and zeros.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Nonlinearity {
    b_plus: f64,
    b_minus: f64,
    z_plus: f64,
    z_minus: f64,
    odd: bool,
}

impl Nonlinearity {
    pub fn from_kind(kind: ReactionKind) -> Result<Self> {
        match kind {
            ReactionKind::OddCubic => Self::piecewise_cubic(1.0, 1.0),
            ReactionKind::PiecewiseCubic { b_plus, b_minus } => {
                Self::piecewise_cubic(b_plus, b_minus)
            }
        }
    }

    /// f(u) = u - u^3.
    pub fn odd_cubic() -> Self {
        Self::piecewise_cubic(1.0, 1.0).expect("unit coefficients are valid")
    }

    /// The non-odd default: f(u) = u - u^3 for u >= 0, u - u^3/4 for u < 0
    /// (zeros at 1 and -2).
    pub fn asymmetric_cubic() -> Self {
        Self::piecewise_cubic(1.0, 0.25).expect("coefficients are valid")
    }

    /// General branch-wise cubic; both coefficients must be positive so
    /// that finite zeros exist on both sides.
    pub fn piecewise_cubic(b_plus: f64, b_minus: f64) -> Result<Self> {
        if !(b_plus > 0.0 && b_minus > 0.0) {
            return Err(Error::InvalidModel(format!(
                "cubic coefficients must be positive, got ({b_plus}, {b_minus})"
            )));
        }
        Ok(Nonlinearity {
            b_plus,
            b_minus,
            z_plus: 1.0 / b_plus.sqrt(),
            z_minus: -1.0 / b_minus.sqrt(),
            odd: b_plus == b_minus,
        })
    }

    fn branch(&self, u: f64) -> f64 {
        if u >= 0.0 {
            self.b_plus
        } else {
            self.b_minus
        }
    }

    /// Cubic coefficient of the branch containing `u`; the time-map layer
    /// uses it to evaluate energy gaps in factored, cancellation-free form.
    pub fn branch_coeff(&self, u: f64) -> f64 {
        self.branch(u)
    }

    pub fn f(&self, u: f64) -> f64 {
        u - self.branch(u) * u * u * u
    }

    pub fn df(&self, u: f64) -> f64 {
        1.0 - 3.0 * self.branch(u) * u * u
    }

    pub fn ddf(&self, u: f64) -> f64 {
        -6.0 * self.branch(u) * u
    }

    /// Primitive F(u) = int_0^u f, exact for the cubic families.
    pub fn primitive(&self, u: f64) -> f64 {
        let u2 = u * u;
        0.5 * u2 - 0.25 * self.branch(u) * u2 * u2
    }

    /// Smallest positive zero of f.
    pub fn z_plus(&self) -> f64 {
        self.z_plus
    }

    /// Largest negative zero of f.
    pub fn z_minus(&self) -> f64 {
        self.z_minus
    }

    pub fn is_odd(&self) -> bool {
        self.odd
    }

    /// Heteroclinic energy level: min(F(z+), F(z-)).
    pub fn e_max(&self) -> f64 {
        self.primitive(self.z_plus).min(self.primitive(self.z_minus))
    }
}

/// Outcome of one validator condition.
#[derive(Debug, Clone, Serialize)]
pub struct ConditionReport {
    pub name: String,
    pub passed: bool,
    pub worst_violation: f64,
    pub at: f64,
}

/// Full validation report for a reaction nonlinearity.
#[derive(Debug, Clone, Serialize)]
pub struct ValidationReport {
    pub conditions: Vec<ConditionReport>,
    pub z_plus_located: Option<f64>,
    pub z_minus_located: Option<f64>,
    pub passed: bool,
}

/// Check the structural conditions on a candidate reaction (f, f', f'', F)
/// over `[lo, hi]`, locating the dissipative zeros by bracketed
/// root-finding.
///
/// The sign condition at the horizon endpoints stands in for the
/// dissipativity limit, which a finite sample cannot verify; the report
/// phrases it as a horizon-limited check.
pub fn validate_reaction(
    f: &dyn Fn(f64) -> f64,
    df: &dyn Fn(f64) -> f64,
    ddf: &dyn Fn(f64) -> f64,
    big_f: &dyn Fn(f64) -> f64,
    lo: f64,
    hi: f64,
    tols: &Tolerances,
) -> Result<ValidationReport> {
    if !(lo < 0.0 && hi > 0.0) {
        return Err(Error::Domain(format!(
            "validation horizon must straddle zero, got [{lo}, {hi}]"
        )));
    }
    let n = tols.validator_grid;
    let grid: Vec<f64> = (0..=n)
        .map(|i| lo + (hi - lo) * i as f64 / n as f64)
        .collect();
    if grid.iter().any(|&u| !f(u).is_finite()) {
        return Err(Error::Domain("f not evaluable on the horizon".into()));
    }

    let mut conditions = Vec::new();
    let mut push = |name: &str, violation: f64, at: f64, tol: f64| {
        conditions.push(ConditionReport {
            name: name.to_string(),
            passed: violation <= tol,
            worst_violation: violation,
            at,
        });
    };

    push("f(0) = 0", f(0.0).abs(), 0.0, tols.validator_pointwise);
    push(
        "f'(0) = 1",
        (df(0.0) - 1.0).abs(),
        0.0,
        tols.validator_pointwise,
    );

    // u f''(u) < 0 for u != 0 on the sample grid
    let mut worst = f64::NEG_INFINITY;
    let mut worst_at = 0.0;
    for &u in &grid {
        if u == 0.0 {
            continue;
        }
        let v = u * ddf(u);
        if v > worst {
            worst = v;
            worst_at = u;
        }
    }
    push("u f''(u) < 0 for u != 0", worst.max(0.0), worst_at, 0.0);

    // horizon-limited dissipativity: f(u)/u < 0 at both horizon endpoints
    let mut worst = f64::NEG_INFINITY;
    let mut worst_at = lo;
    for u in [lo, hi] {
        let v = f(u) / u;
        if v > worst {
            worst = v;
            worst_at = u;
        }
    }
    push("f(u)/u < 0 at horizon endpoints", worst.max(0.0), worst_at, 0.0);

    // primitive consistency on sampled subintervals
    let mut worst = 0.0_f64;
    let mut worst_at = 0.0;
    for k in 0..20 {
        let a = lo + (hi - lo) * (k as f64) / 20.0;
        let b = lo + (hi - lo) * ((k + 1) as f64) / 20.0;
        let q = quad::integrate_adaptive(&|u| f(u), a, b, tols.quad_rel)?;
        let v = (big_f(b) - big_f(a) - q).abs();
        if v > worst {
            worst = v;
            worst_at = a;
        }
    }
    push(
        "F(b) - F(a) = int_a^b f",
        worst,
        worst_at,
        tols.validator_pointwise,
    );

    // locate the zeros by scanning for the first sign change away from 0
    let z_plus_located = locate_zero(f, &grid, 1.0);
    let z_minus_located = locate_zero(f, &grid, -1.0);
    push(
        "positive zero z+ exists on horizon",
        if z_plus_located.is_some() { 0.0 } else { 1.0 },
        hi,
        0.5,
    );
    push(
        "negative zero z- exists on horizon",
        if z_minus_located.is_some() { 0.0 } else { 1.0 },
        lo,
        0.5,
    );

    let passed = conditions.iter().all(|c| c.passed);
    Ok(ValidationReport {
        conditions,
        z_plus_located,
        z_minus_located,
        passed,
    })
}

/// First zero of f in the direction `dir` (+1 or -1), by bracketing the
/// first sign change beyond a small offset from the origin.
fn locate_zero(f: &dyn Fn(f64) -> f64, grid: &[f64], dir: f64) -> Option<f64> {
    let mut prev: Option<(f64, f64)> = None;
    let mut points: Vec<f64> = grid
        .iter()
        .copied()
        .filter(|&u| u * dir > 1e-9)
        .collect();
    if dir < 0.0 {
        points.reverse();
    }
    for u in points {
        let fu = f(u);
        if let Some((pu, pf)) = prev {
            if pf > 0.0 && fu <= 0.0 {
                return brent(f, pu, u, 1e-14, 1e-15).ok();
            }
        }
        prev = Some((u, fu));
    }
    None
}

/// Validate a typed [`Nonlinearity`] over [z- - 1, z+ + 1] and additionally
/// compare located zeros against the stored ones.
pub fn validate_nonlinearity(f: &Nonlinearity, tols: &Tolerances) -> Result<ValidationReport> {
    let lo = f.z_minus() - 1.0;
    let hi = f.z_plus() + 1.0;
    let mut rep = validate_reaction(
        &|u| f.f(u),
        &|u| f.df(u),
        &|u| f.ddf(u),
        &|u| f.primitive(u),
        lo,
        hi,
        tols,
    )?;
    if let Some(z) = rep.z_plus_located {
        rep.conditions.push(ConditionReport {
            name: "located z+ matches stored zero".into(),
            passed: (z - f.z_plus()).abs() <= 1e-10,
            worst_violation: (z - f.z_plus()).abs(),
            at: f.z_plus(),
        });
    }
    if let Some(z) = rep.z_minus_located {
        rep.conditions.push(ConditionReport {
            name: "located z- matches stored zero".into(),
            passed: (z - f.z_minus()).abs() <= 1e-10,
            worst_violation: (z - f.z_minus()).abs(),
            at: f.z_minus(),
        });
    }
    rep.passed = rep.conditions.iter().all(|c| c.passed);
    Ok(rep)
}

/// Supported diffusion families.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum DiffusionKind {
    /// a(r) = value.
    Constant { value: f64 },
    /// a(r) = alpha + beta * exp(-gamma (r - r0)^2); beta < 0 yields a dip.
    Bump {
        alpha: f64,
        beta: f64,
        gamma: f64,
        r0: f64,
    },
    /// C1 cubic Hermite through (r, a, a') knots, constant beyond the ends.
    Hermite { knots: Vec<(f64, f64, f64)> },
}

/// The nonlocal diffusion coefficient with derivative access and bounds.
#[derive(Debug, Clone)]
pub struct Diffusion {
    kind: DiffusionKind,
    hermite: Option<CubicHermite>,
    r_max: f64,
    m: f64,
    big_m: f64,
}

impl Diffusion {
    pub fn constant(value: f64, r_max: f64) -> Result<Self> {
        if value <= 0.0 {
            return Err(Error::InvalidModel(format!(
                "constant diffusion must be positive, got {value}"
            )));
        }
        Diffusion::new(DiffusionKind::Constant { value }, r_max)
    }

    pub fn bump(alpha: f64, beta: f64, gamma: f64, r0: f64, r_max: f64) -> Result<Self> {
        if gamma <= 0.0 {
            return Err(Error::InvalidModel("bump width gamma must be positive".into()));
        }
        Diffusion::new(DiffusionKind::Bump { alpha, beta, gamma, r0 }, r_max)
    }

    /// Build the Hermite family from knots sorted by r.  Constant extension
    /// beyond the boundary knots is only C1 when the boundary slopes vanish,
    /// so nonzero end slopes are rejected.
    pub fn from_knots(knots: &[(f64, f64, f64)], r_max: f64) -> Result<Self> {
        if knots.is_empty() {
            return Err(Error::InvalidModel("need at least one knot".into()));
        }
        if knots.windows(2).any(|w| w[0].0 >= w[1].0) {
            return Err(Error::InvalidModel("knots must be strictly increasing in r".into()));
        }
        if let Some(&(r, a, _)) = knots.iter().find(|&&(_, a, _)| a <= 0.0) {
            return Err(Error::InvalidModel(format!(
                "diffusion value must be positive, got a({r}) = {a}"
            )));
        }
        if knots.len() > 1 {
            let first = knots[0];
            let last = knots[knots.len() - 1];
            if first.2 != 0.0 || last.2 != 0.0 {
                return Err(Error::InvalidModel(
                    "boundary knots need zero slope for a C1 constant extension".into(),
                ));
            }
        }
        Diffusion::new(
            DiffusionKind::Hermite { knots: knots.to_vec() },
            r_max,
        )
    }

    pub fn from_kind(kind: DiffusionKind, r_max: f64) -> Result<Self> {
        match kind {
            DiffusionKind::Constant { value } => Diffusion::constant(value, r_max),
            DiffusionKind::Bump { alpha, beta, gamma, r0 } => {
                Diffusion::bump(alpha, beta, gamma, r0, r_max)
            }
            DiffusionKind::Hermite { knots } => Diffusion::from_knots(&knots, r_max),
        }
    }

    fn new(kind: DiffusionKind, r_max: f64) -> Result<Self> {
        if !(r_max > 0.0) {
            return Err(Error::InvalidModel("r_max must be positive".into()));
        }
        let hermite = match &kind {
            DiffusionKind::Hermite { knots } => Some(CubicHermite::new(
                knots
                    .iter()
                    .map(|&(x, y, dy)| Knot { x, y, dy })
                    .collect(),
            )),
            _ => None,
        };
        let mut d = Diffusion {
            kind,
            hermite,
            r_max,
            m: 0.0,
            big_m: 0.0,
        };
        let (m, big_m) = d.extrema();
        if m <= 0.0 {
            return Err(Error::InvalidModel(format!(
                "diffusion must stay positive on [0, r_max]; min is {m}"
            )));
        }
        d.m = m;
        d.big_m = big_m;
        Ok(d)
    }

    pub fn a(&self, r: f64) -> f64 {
        match &self.kind {
            DiffusionKind::Constant { value } => *value,
            DiffusionKind::Bump { alpha, beta, gamma, r0 } => {
                alpha + beta * (-gamma * (r - r0) * (r - r0)).exp()
            }
            DiffusionKind::Hermite { .. } => self.hermite.as_ref().unwrap().eval(r),
        }
    }

    pub fn da(&self, r: f64) -> f64 {
        match &self.kind {
            DiffusionKind::Constant { .. } => 0.0,
            DiffusionKind::Bump { beta, gamma, r0, .. } => {
                -2.0 * gamma * (r - r0) * beta * (-gamma * (r - r0) * (r - r0)).exp()
            }
            DiffusionKind::Hermite { .. } => self.hermite.as_ref().unwrap().deriv(r),
        }
    }

    /// Lower bound m on [0, r_max].
    pub fn lower_bound(&self) -> f64 {
        self.m
    }

    /// Upper bound M on [0, r_max].
    pub fn upper_bound(&self) -> f64 {
        self.big_m
    }

    pub fn r_max(&self) -> f64 {
        self.r_max
    }

    pub fn kind(&self) -> &DiffusionKind {
        &self.kind
    }

    /// Extrema on [0, r_max] by dense sampling plus derivative-root polish.
    fn extrema(&self) -> (f64, f64) {
        let n = 4096;
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        let mut prev_r = 0.0;
        let mut prev_d = self.da(0.0);
        for i in 0..=n {
            let r = self.r_max * i as f64 / n as f64;
            let v = self.a(r);
            lo = lo.min(v);
            hi = hi.max(v);
            let d = self.da(r);
            if i > 0 && prev_d != 0.0 && d != 0.0 && prev_d.signum() != d.signum() {
                if let Ok(rc) = brent(|x| self.da(x), prev_r, r, 1e-13, 1e-15) {
                    let v = self.a(rc);
                    lo = lo.min(v);
                    hi = hi.max(v);
                }
            }
            prev_r = r;
            prev_d = d;
        }
        (lo, hi)
    }

    /// Primitive A(s) = int_0^s a.  Closed form for constant and Hermite
    /// families, adaptive quadrature for the bump.
    pub fn primitive(&self) -> PrimitiveA<'_> {
        PrimitiveA { diffusion: self }
    }
}

/// Accessor for A(s) = int_0^s a(theta) dtheta.
#[derive(Debug, Clone, Copy)]
pub struct PrimitiveA<'a> {
    diffusion: &'a Diffusion,
}

impl PrimitiveA<'_> {
    pub fn eval(&self, s: f64) -> f64 {
        let d = self.diffusion;
        match &d.kind {
            DiffusionKind::Constant { value } => value * s,
            DiffusionKind::Bump { .. } => {
                if s == 0.0 {
                    0.0
                } else {
                    quad::integrate_adaptive(&|r| d.a(r), 0.0, s, 1e-12)
                        .expect("bump integrand is entire")
                }
            }
            DiffusionKind::Hermite { .. } => {
                let h = d.hermite.as_ref().unwrap();
                hermite_integral(h, s)
            }
        }
    }
}

/// Exact integral of a piecewise-cubic Hermite from 0 to s, honoring the
/// constant extension on both sides.
fn hermite_integral(h: &CubicHermite, s: f64) -> f64 {
    if s == 0.0 {
        return 0.0;
    }
    if s < 0.0 {
        return -hermite_integral_nonneg(h, -s, true);
    }
    hermite_integral_nonneg(h, s, false)
}

fn hermite_integral_nonneg(h: &CubicHermite, s: f64, _mirror: bool) -> f64 {
    // Integrate piece by piece from 0 to s.
    let knots = h.knots();
    let mut acc = 0.0;
    let mut pos = 0.0_f64;
    // left constant extension
    if pos < knots[0].x {
        let end = s.min(knots[0].x);
        acc += knots[0].y * (end - pos);
        pos = end;
        if pos >= s {
            return acc;
        }
    }
    for w in knots.windows(2) {
        let (a, b) = (w[0], w[1]);
        if pos >= s {
            return acc;
        }
        if s <= a.x || pos >= b.x {
            continue;
        }
        let from = pos.max(a.x);
        let to = s.min(b.x);
        acc += hermite_segment_integral(a, b, from, to);
        pos = to;
    }
    // right constant extension
    if pos < s {
        acc += knots[knots.len() - 1].y * (s - pos);
    }
    acc
}

fn hermite_segment_integral(a: Knot, b: Knot, from: f64, to: f64) -> f64 {
    let h = b.x - a.x;
    // antiderivative of the Hermite basis in t, scaled by h
    let anti = |t: f64| {
        let t2 = t * t;
        let t3 = t2 * t;
        let t4 = t3 * t;
        let h00 = 0.5 * t4 - t3 + t;
        let h10 = 0.25 * t4 - (2.0 / 3.0) * t3 + 0.5 * t2;
        let h01 = -0.5 * t4 + t3;
        let h11 = 0.25 * t4 - t3 / 3.0;
        h * (h00 * a.y + h10 * h * a.dy + h01 * b.y + h11 * h * b.dy)
    };
    let t0 = (from - a.x) / h;
    let t1 = (to - a.x) / h;
    anti(t1) - anti(t0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn odd_cubic_passes_validation() {
        let f = Nonlinearity::odd_cubic();
        let rep = validate_nonlinearity(&f, &Tolerances::default()).unwrap();
        assert!(rep.passed, "{rep:?}");
        assert_relative_eq!(rep.z_plus_located.unwrap(), 1.0, epsilon = 1e-12);
        assert_relative_eq!(rep.z_minus_located.unwrap(), -1.0, epsilon = 1e-12);
    }

    #[test]
    fn asymmetric_cubic_has_stated_zeros() {
        let f = Nonlinearity::asymmetric_cubic();
        let rep = validate_nonlinearity(&f, &Tolerances::default()).unwrap();
        assert!(rep.passed);
        assert_relative_eq!(rep.z_plus_located.unwrap(), 1.0, epsilon = 1e-12);
        assert_relative_eq!(rep.z_minus_located.unwrap(), -2.0, epsilon = 1e-12);
        assert!(!f.is_odd());
        assert_relative_eq!(f.e_max(), 0.25, epsilon = 1e-15);
    }

    #[test]
    fn wrong_sign_cubic_fails_concavity() {
        // f(u) = u + u^3: the concavity and horizon-sign conditions fail
        // and no dissipative zeros exist.
        let rep = validate_reaction(
            &|u| u + u * u * u,
            &|u| 1.0 + 3.0 * u * u,
            &|u| 6.0 * u,
            &|u| 0.5 * u * u + 0.25 * u * u * u * u,
            -2.0,
            2.0,
            &Tolerances::default(),
        )
        .unwrap();
        assert!(!rep.passed);
        let concavity = rep
            .conditions
            .iter()
            .find(|c| c.name.starts_with("u f''"))
            .unwrap();
        assert!(!concavity.passed);
        assert!(rep.z_plus_located.is_none());
        // the strict constructor also refuses it
        assert!(Nonlinearity::piecewise_cubic(-1.0, -1.0).is_err());
    }

    #[test]
    fn primitive_matches_quadrature() {
        let f = Nonlinearity::asymmetric_cubic();
        for (a, b) in [(-1.5, 0.3), (0.0, 1.0), (-2.0, 2.0)] {
            let q = quad::integrate_adaptive(&|u| f.f(u), a, b, 1e-13).unwrap();
            assert_relative_eq!(f.primitive(b) - f.primitive(a), q, epsilon = 1e-12);
        }
    }

    #[test]
    fn primitive_at_z_plus_is_quarter() {
        let f = Nonlinearity::odd_cubic();
        assert_relative_eq!(f.primitive(1.0), 0.25, epsilon = 1e-15);
    }

    #[test]
    fn f_increasing_then_decreasing_primitive_shape() {
        // F strictly increasing on [0, z+], strictly decreasing on [z-, 0]
        let f = Nonlinearity::asymmetric_cubic();
        let n = 500;
        for i in 0..n {
            let u0 = f.z_plus() * i as f64 / n as f64;
            let u1 = f.z_plus() * (i + 1) as f64 / n as f64;
            assert!(f.primitive(u1) > f.primitive(u0));
            let v0 = f.z_minus() * i as f64 / n as f64;
            let v1 = f.z_minus() * (i + 1) as f64 / n as f64;
            assert!(f.primitive(v1) > f.primitive(v0));
        }
    }

    #[test]
    fn constant_knots_give_constant_diffusion() {
        let d = Diffusion::from_knots(&[(0.0, 1.0, 0.0), (10.0, 1.0, 0.0)], 10.0).unwrap();
        for r in [0.0, 3.3, 10.0, 25.0] {
            assert_eq!(d.a(r), 1.0);
            assert_eq!(d.da(r), 0.0);
        }
        assert_eq!(d.lower_bound(), 1.0);
        assert_eq!(d.upper_bound(), 1.0);
    }

    #[test]
    fn single_knot_extends_constantly() {
        let d = Diffusion::from_knots(&[(0.0, 2.0, 0.0)], 5.0).unwrap();
        assert_eq!(d.a(0.0), 2.0);
        assert_eq!(d.a(4.0), 2.0);
        assert_eq!(d.primitive().eval(3.0), 6.0);
    }

    #[test]
    fn dip_knots_have_min_at_center() {
        let d = Diffusion::from_knots(
            &[(0.0, 1.0, 0.0), (2.0, 0.5, 0.0), (4.0, 1.0, 0.0)],
            6.0,
        )
        .unwrap();
        assert_relative_eq!(d.a(2.0), 0.5, epsilon = 1e-14);
        assert_relative_eq!(d.lower_bound(), 0.5, epsilon = 1e-10);
        assert!(d.a(1.0) > 0.5 && d.a(1.0) < 1.0);
        // C1 at the knots: one-sided slopes agree with the stored ones
        for r in [0.0, 2.0, 4.0] {
            let eps = 1e-7;
            let fd = (d.a(r + eps) - d.a(r - eps)) / (2.0 * eps);
            assert!((fd - d.da(r)).abs() < 1e-6);
        }
    }

    #[test]
    fn knot_validation_errors() {
        assert!(Diffusion::from_knots(&[(1.0, 1.0, 0.0), (0.5, 1.0, 0.0)], 5.0).is_err());
        assert!(Diffusion::from_knots(&[(0.0, -1.0, 0.0)], 5.0).is_err());
        assert!(Diffusion::from_knots(&[(0.0, 1.0, 0.3), (1.0, 2.0, 0.0)], 5.0).is_err());
    }

    #[test]
    fn hermite_primitive_is_exact() {
        let d = Diffusion::from_knots(
            &[(0.0, 1.0, 0.0), (2.0, 0.5, 0.0), (4.0, 1.5, 0.0)],
            8.0,
        )
        .unwrap();
        let p = d.primitive();
        for s in [0.5, 2.0, 3.7, 6.0] {
            let q = quad::integrate_adaptive(&|r| d.a(r), 0.0, s, 1e-13).unwrap();
            assert_relative_eq!(p.eval(s), q, epsilon = 1e-11);
        }
        assert_eq!(p.eval(0.0), 0.0);
    }

    #[test]
    fn bump_primitive_consistent_with_derivative() {
        let d = Diffusion::bump(1.0, -0.5, 4.0, 1.0, 10.0).unwrap();
        let p = d.primitive();
        for s in [0.2, 1.0, 2.5] {
            let eps = 1e-6;
            let fd = (p.eval(s + eps) - p.eval(s - eps)) / (2.0 * eps);
            assert_relative_eq!(fd, d.a(s), epsilon = 1e-8);
        }
    }

    #[test]
    fn bump_bounds_cover_dip() {
        let d = Diffusion::bump(1.0, -0.6, 8.0, 1.5, 10.0).unwrap();
        assert_relative_eq!(d.lower_bound(), 0.4, epsilon = 1e-9);
        assert!(d.upper_bound() <= 1.0 + 1e-12);
        // derivative consistency by finite differences
        for r in [0.3, 1.5, 2.8] {
            let eps = 1e-6;
            let fd = (d.a(r + eps) - d.a(r - eps)) / (2.0 * eps);
            assert_relative_eq!(fd, d.da(r), epsilon = 1e-7);
        }
    }
}
