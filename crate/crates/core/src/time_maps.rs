//! Time maps of the scalar pendulum u'' + lambda f(u) = 0.
//!
//! A stationary profile at energy level E (meaning u'^2/2 + lambda F(u) =
//! lambda E) spends
//!
//! ```text
//! tau_lambda^±(E) = ± sqrt(2/lambda) * int_0^{U^±(E)} (E - F(u))^{-1/2} du
//! ```
//!
//! on one monotone half-arch, where U^+(E) in [0, z+] and U^-(E) in [z-, 0]
//! are the amplitudes with F(U^±) = E.  The nodal time for a class-j
//! profile weights the half-arch times by the arch counts of the class.
//!
//! The integrand has an inverse-square-root singularity at the amplitude;
//! substituting u = U sin(theta) removes it.  For the branch-cubic reaction
//! families the energy gap along the arc factors as
//!
//! ```text
//! E - F(U sin θ) = cos²θ · (U²/2 - (b/4) U⁴ (1 + sin²θ)),
//! ```
//!
//! which cancels the cos θ of the substitution exactly and leaves an
//! analytic integrand; Gauss-Legendre with node doubling then converges
//! geometrically.  Everything is evaluated at lambda = 1 and scaled by
//! 1/sqrt(lambda), which is exact.

use crate::error::{Error, Result};
use crate::model::Nonlinearity;
use crate::quad;
use crate::roots::brent;
use crate::tol::Tolerances;
use serde::{Deserialize, Serialize};

/// Sign of the slope at x = 0: selects which amplitude the first arch hits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn factor(self) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn both() -> [Sign; 2] {
        [Sign::Plus, Sign::Minus]
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

impl std::fmt::Display for Sign {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// Usable energy interval (0, E_max) with the numerical cutoff below the
/// heteroclinic level, past which the time maps diverge.
#[derive(Debug, Clone, Copy)]
pub struct EnergyDomain {
    e_max: f64,
    e_cut: f64,
}

impl EnergyDomain {
    pub fn new(f: &Nonlinearity, tols: &Tolerances) -> Self {
        let e_max = f.e_max();
        EnergyDomain {
            e_max,
            e_cut: tols.energy_cutoff * e_max,
        }
    }

    pub fn e_max(&self) -> f64 {
        self.e_max
    }

    /// Largest admissible energy for quadrature.
    pub fn e_cut(&self) -> f64 {
        self.e_cut
    }

    pub fn check(&self, e: f64) -> Result<()> {
        if !(e > 0.0 && e < self.e_max) {
            return Err(Error::Domain(format!(
                "energy {e} outside (0, {})",
                self.e_max
            )));
        }
        if e > self.e_cut {
            return Err(Error::EnergyHorizon(e));
        }
        Ok(())
    }
}

/// Amplitude U^sign(E): the unique root of F(u) = E in [0, z+] or [z-, 0].
pub fn amplitude(f: &Nonlinearity, e: f64, sign: Sign) -> Result<f64> {
    let e_max = f.e_max();
    if !(e > 0.0 && e < e_max) {
        return Err(Error::Domain(format!("energy {e} outside (0, {e_max})")));
    }
    let u = match sign {
        Sign::Plus => brent(|u| f.primitive(u) - e, 0.0, f.z_plus(), 1e-14, 0.0)?,
        Sign::Minus => brent(|u| f.primitive(u) - e, f.z_minus(), 0.0, 1e-14, 0.0)?,
    };
    Ok(u)
}

/// Number of (positive, negative) arches of a class-(j, sign) profile.
pub fn arch_counts(j: u32, sign: Sign) -> (u32, u32) {
    if j % 2 == 0 {
        (j / 2, j / 2)
    } else {
        match sign {
            Sign::Plus => ((j + 1) / 2, (j - 1) / 2),
            Sign::Minus => ((j - 1) / 2, (j + 1) / 2),
        }
    }
}

/// Stable energy gap along the arc: E - F(U sin θ) with E = F(U), divided
/// by cos²θ.  Positive on [0, π/2] for amplitudes inside the well.
fn gap_factor(f: &Nonlinearity, u_amp: f64, sin_sq: f64) -> f64 {
    let b = f.branch_coeff(u_amp);
    let u2 = u_amp * u_amp;
    0.5 * u2 - 0.25 * b * u2 * u2 * (1.0 + sin_sq)
}

/// Half-arch time at lambda = 1:
/// tau_1^sign(E) = sqrt(2) |U| int_0^{π/2} dθ / sqrt(gap_factor).
pub fn tau_unit(f: &Nonlinearity, e: f64, sign: Sign, tols: &Tolerances) -> Result<f64> {
    EnergyDomain::new(f, tols).check(e)?;
    let u_amp = amplitude(f, e, sign)?;
    let integrand = |theta: f64| {
        let s = theta.sin();
        let g = gap_factor(f, u_amp, s * s).max(1e-300);
        1.0 / g.sqrt()
    };
    let v = quad::integrate_adaptive(&integrand, 0.0, std::f64::consts::FRAC_PI_2, tols.quad_rel)?;
    Ok(std::f64::consts::SQRT_2 * u_amp.abs() * v)
}

/// Half-arch time tau_lambda^sign(E) = tau_1 / sqrt(lambda).
pub fn tau(f: &Nonlinearity, e: f64, lambda: f64, sign: Sign, tols: &Tolerances) -> Result<f64> {
    if !(lambda > 0.0) {
        return Err(Error::Domain(format!("lambda must be positive, got {lambda}")));
    }
    Ok(tau_unit(f, e, sign, tols)? / lambda.sqrt())
}

/// Nodal time at lambda = 1 for class (j, sign): arch-count-weighted sum of
/// the half-arch times.
pub fn composite_time_unit(
    f: &Nonlinearity,
    e: f64,
    j: u32,
    sign: Sign,
    tols: &Tolerances,
) -> Result<f64> {
    if j == 0 {
        return Err(Error::Domain("nodal class j must be >= 1".into()));
    }
    let (np, nm) = arch_counts(j, sign);
    let mut t = 0.0;
    if np > 0 {
        t += np as f64 * tau_unit(f, e, Sign::Plus, tols)?;
    }
    if nm > 0 {
        t += nm as f64 * tau_unit(f, e, Sign::Minus, tols)?;
    }
    Ok(t)
}

/// Nodal time T_lambda^sign(E) = T_1 / sqrt(lambda).
pub fn composite_time(
    f: &Nonlinearity,
    e: f64,
    lambda: f64,
    j: u32,
    sign: Sign,
    tols: &Tolerances,
) -> Result<f64> {
    if !(lambda > 0.0) {
        return Err(Error::Domain(format!("lambda must be positive, got {lambda}")));
    }
    Ok(composite_time_unit(f, e, j, sign, tols)? / lambda.sqrt())
}

/// Monotone-half area I^sign(E) = |int_0^{U^sign} sqrt(E - F(u)) du|,
/// the building block of the gradient energy.
pub fn half_arch_area(f: &Nonlinearity, e: f64, sign: Sign, tols: &Tolerances) -> Result<f64> {
    EnergyDomain::new(f, tols).check(e)?;
    let u_amp = amplitude(f, e, sign)?;
    let integrand = |theta: f64| {
        let s = theta.sin();
        let c = theta.cos();
        let g = gap_factor(f, u_amp, s * s).max(0.0);
        c * c * g.sqrt()
    };
    let v = quad::integrate_adaptive(&integrand, 0.0, std::f64::consts::FRAC_PI_2, tols.quad_rel)?;
    Ok(u_amp.abs() * v)
}

/// One evaluated energy level: amplitudes and unit-lambda half-arch times.
#[derive(Debug, Clone, Copy)]
pub struct TimeMapSample {
    pub e: f64,
    pub u_plus: f64,
    pub u_minus: f64,
    pub tau_plus: f64,
    pub tau_minus: f64,
}

impl TimeMapSample {
    pub fn new(f: &Nonlinearity, e: f64, tols: &Tolerances) -> Result<Self> {
        Ok(TimeMapSample {
            e,
            u_plus: amplitude(f, e, Sign::Plus)?,
            u_minus: amplitude(f, e, Sign::Minus)?,
            tau_plus: tau_unit(f, e, Sign::Plus, tols)?,
            tau_minus: tau_unit(f, e, Sign::Minus, tols)?,
        })
    }

    /// Composite nodal time at any lambda, from the cached half-arch times.
    pub fn composite(&self, lambda: f64, j: u32, sign: Sign) -> f64 {
        let (np, nm) = arch_counts(j, sign);
        (np as f64 * self.tau_plus + nm as f64 * self.tau_minus) / lambda.sqrt()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use std::f64::consts::PI;

    fn tols() -> Tolerances {
        Tolerances::default()
    }

    /// Reference half-arch time without the factored gap: direct
    /// (E - F(u))^{-1/2} after the sine substitution.
    fn tau_unit_direct(f: &Nonlinearity, e: f64, sign: Sign) -> f64 {
        let u_amp = amplitude(f, e, sign).unwrap();
        let integrand = |theta: f64| {
            let s = theta.sin();
            let diff = (e - f.primitive(u_amp * s)).max(1e-300);
            theta.cos() / diff.sqrt()
        };
        std::f64::consts::SQRT_2
            * u_amp.abs()
            * quad::integrate_adaptive(&integrand, 0.0, PI / 2.0, 1e-10).unwrap()
    }

    #[test]
    fn amplitude_matches_quartic_inversion() {
        let f = Nonlinearity::odd_cubic();
        // closed form: u^2 = 1 - sqrt(1 - 4E)
        for e in [0.01f64, 3.0 / 16.0, 0.2, 0.2499] {
            let exact = (1.0 - (1.0 - 4.0 * e).sqrt()).sqrt();
            let u = amplitude(&f, e, Sign::Plus).unwrap();
            assert_relative_eq!(u, exact, max_relative = 1e-12);
            let um = amplitude(&f, e, Sign::Minus).unwrap();
            assert_relative_eq!(um, -exact, max_relative = 1e-12);
        }
        let u = amplitude(&f, 3.0 / 16.0, Sign::Plus).unwrap();
        assert_relative_eq!(u, 0.5f64.sqrt(), max_relative = 1e-12);
    }

    #[test]
    fn amplitude_at_quarter_energy_is_one() {
        let f = Nonlinearity::odd_cubic();
        let u = amplitude(&f, 0.25 - 1e-14, Sign::Plus).unwrap();
        assert!((u - 1.0).abs() < 1e-6);
    }

    #[test]
    fn amplitude_rejects_out_of_range_energy() {
        let f = Nonlinearity::odd_cubic();
        assert!(amplitude(&f, 0.3, Sign::Plus).is_err());
        assert!(amplitude(&f, -0.1, Sign::Plus).is_err());
    }

    #[test]
    fn small_energy_limit_is_harmonic_half_period() {
        let f = Nonlinearity::odd_cubic();
        let t = tols();
        for lambda in [1.0, 4.0, 7.3] {
            let v = tau(&f, 1e-9, lambda, Sign::Plus, &t).unwrap();
            assert_relative_eq!(v, PI / lambda.sqrt(), max_relative = 1e-6);
        }
    }

    #[test]
    fn lambda_scaling_is_exact() {
        let f = Nonlinearity::asymmetric_cubic();
        let t = tols();
        let e = 0.17;
        let t1 = tau(&f, e, 1.0, Sign::Minus, &t).unwrap();
        let t4 = tau(&f, e, 4.0, Sign::Minus, &t).unwrap();
        assert_eq!(t4, t1 / 2.0);
    }

    #[test]
    fn odd_reaction_has_symmetric_half_arches() {
        let f = Nonlinearity::odd_cubic();
        let t = tols();
        for e in [0.01, 0.1, 0.2, 0.24] {
            let tp = tau_unit(&f, e, Sign::Plus, &t).unwrap();
            let tm = tau_unit(&f, e, Sign::Minus, &t).unwrap();
            assert_relative_eq!(tp, tm, max_relative = 1e-12);
        }
    }

    #[test]
    fn factored_gap_matches_direct_integrand() {
        // dual route for the singular quadrature
        let f = Nonlinearity::asymmetric_cubic();
        let t = tols();
        for e in [0.05, 0.15, 0.22] {
            for sign in Sign::both() {
                let a = tau_unit(&f, e, sign, &t).unwrap();
                let b = tau_unit_direct(&f, e, sign);
                assert_relative_eq!(a, b, max_relative = 1e-9);
            }
        }
    }

    #[test]
    fn tau_strictly_increasing_in_energy() {
        let f = Nonlinearity::asymmetric_cubic();
        let t = tols();
        for sign in Sign::both() {
            let mut prev = 0.0;
            for k in 1..40 {
                let e = 0.2499 * k as f64 / 40.0;
                let v = tau_unit(&f, e, sign, &t).unwrap();
                assert!(v > prev, "tau not increasing at E = {e} ({sign})");
                prev = v;
            }
        }
    }

    #[test]
    fn composite_weights_follow_parity() {
        let f = Nonlinearity::asymmetric_cubic();
        let t = tols();
        let e = 0.12;
        let tp = tau_unit(&f, e, Sign::Plus, &t).unwrap();
        let tm = tau_unit(&f, e, Sign::Minus, &t).unwrap();
        // j = 1: a single arch of the slope sign
        assert_relative_eq!(
            composite_time_unit(&f, e, 1, Sign::Plus, &t).unwrap(),
            tp,
            max_relative = 1e-14
        );
        // j = 2: one arch of each sign regardless of slope sign
        let t2p = composite_time_unit(&f, e, 2, Sign::Plus, &t).unwrap();
        let t2m = composite_time_unit(&f, e, 2, Sign::Minus, &t).unwrap();
        assert_relative_eq!(t2p, tp + tm, max_relative = 1e-14);
        assert_eq!(t2p, t2m);
        // j = 3: 2-1 split
        assert_relative_eq!(
            composite_time_unit(&f, e, 3, Sign::Minus, &t).unwrap(),
            tp + 2.0 * tm,
            max_relative = 1e-14
        );
    }

    #[test]
    fn odd_reaction_composite_is_j_tau() {
        let f = Nonlinearity::odd_cubic();
        let t = tols();
        let e = 0.2;
        let tp = tau_unit(&f, e, Sign::Plus, &t).unwrap();
        for j in 1..=4u32 {
            for sign in Sign::both() {
                let v = composite_time_unit(&f, e, j, sign, &t).unwrap();
                assert_relative_eq!(v, j as f64 * tp, max_relative = 1e-11);
            }
        }
    }

    #[test]
    fn doubling_convergence_already_settles() {
        // doubling the nodes changes tau by less than 1e-10 relative
        let f = Nonlinearity::odd_cubic();
        let e = 0.2;
        let u_amp = amplitude(&f, e, Sign::Plus).unwrap();
        let integrand = |theta: f64| {
            let s: f64 = theta.sin();
            1.0 / super::gap_factor(&f, u_amp, s * s).max(1e-300).sqrt()
        };
        let a = quad::integrate_fixed(&integrand, 0.0, PI / 2.0, 1);
        let b = quad::integrate_fixed(&integrand, 0.0, PI / 2.0, 2);
        assert!(((a - b) / b).abs() < 1e-10);
    }

    #[test]
    fn energy_cutoff_is_enforced() {
        let f = Nonlinearity::odd_cubic();
        let t = tols();
        let e = 0.25 * (1.0 - 1e-9);
        assert!(matches!(
            tau_unit(&f, e, Sign::Plus, &t),
            Err(Error::EnergyHorizon(_))
        ));
    }
}
