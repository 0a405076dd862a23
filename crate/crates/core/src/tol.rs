//! Central tolerance set.
//!
//! Every module reads its thresholds from here so that a run configuration
//! can scale the whole family at once (`--tol-scale`).

/// Tolerances used across the toolkit.  Fields are grouped by the layer
/// that consumes them; see the guide for the rationale behind each default.
#[derive(Debug, Clone)]
pub struct Tolerances {
    /// Pointwise identity checks in the model validator (f(0)=0, f'(0)=1, ...).
    pub validator_pointwise: f64,
    /// Sample count for validator grids.
    pub validator_grid: usize,
    /// Relative tolerance for adaptive Gauss-Legendre doubling.
    pub quad_rel: f64,
    /// Relative root tolerance for scalar Brent solves.
    pub root_rel: f64,
    /// Fraction of E_max below which time-map evaluation is allowed.
    pub energy_cutoff: f64,
    /// Max deviation of the pointwise energy identity along profiles.
    pub profile_energy: f64,
    /// Endpoint miss factor for profile reconstruction (scaled by v0).
    pub profile_endpoint: f64,
    /// Relative agreement between arch-formula r and profile quadrature r.
    pub r_cross_check: f64,
    /// Held-out relative error target for c-curve interpolants.
    pub curve_interp: f64,
    /// Defining identity nu*c(r) = a(r) at branch points.
    pub branch_identity: f64,
    /// Hyperbolicity gap band: |a'-nu c'| <= gap_band*(1+|a'|) is non-hyperbolic.
    pub gap_band: f64,
    /// Spectral indeterminate band factor (scaled by 1 + sup|p|).
    pub spectral_band: f64,
    /// Lyapunov monotonicity slack per accepted step, scaled by 1+|V|.
    pub lyapunov_slack: f64,
    /// Discrete H1 distance for declaring convergence to an equilibrium.
    pub sim_converge_h1: f64,
    /// Discrete residual for declaring convergence.
    pub sim_converge_residual: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            validator_pointwise: 1e-10,
            validator_grid: 10_000,
            quad_rel: 1e-11,
            root_rel: 1e-13,
            energy_cutoff: 1.0 - 1e-6,
            profile_energy: 1e-8,
            profile_endpoint: 1e-7,
            r_cross_check: 1e-6,
            curve_interp: 1e-8,
            branch_identity: 1e-9,
            gap_band: 1e-6,
            spectral_band: 1e-4,
            lyapunov_slack: 1e-8,
            sim_converge_h1: 1e-4,
            sim_converge_residual: 1e-6,
        }
    }
}

impl Tolerances {
    /// Scale every acceptance-style band by `x` (quadrature and root
    /// tolerances are left alone: loosening them degrades everything else).
    pub fn scaled(mut self, x: f64) -> Self {
        self.validator_pointwise *= x;
        self.profile_energy *= x;
        self.r_cross_check *= x;
        self.curve_interp *= x;
        self.branch_identity *= x;
        self.gap_band *= x;
        self.spectral_band *= x;
        self.lyapunov_slack *= x;
        self.sim_converge_h1 *= x;
        self.sim_converge_residual *= x;
        self
    }
}
