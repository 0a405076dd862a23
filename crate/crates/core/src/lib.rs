//! Equilibria, bifurcations and spectra of the scalar parabolic problem
//! with gradient-dependent nonlocal diffusion
//!
//! ```text
//! u_t = a(||u_x||^2) u_xx + nu f(u),   x in (0, pi),   u(0) = u(pi) = 0,
//! ```
//!
//! where `a` is a positive C1 coefficient of the squared gradient norm and
//! `f` is a dissipative bistable reaction term.  Every nontrivial
//! equilibrium of this problem is a stationary profile of the local
//! problem u'' + lambda f(u) = 0 for exactly one lambda; the crate
//! computes the characteristic curves c_j^±(r) = 1/lambda_j^±(r) that
//! encode this reduction, intersects nu c_j^±(r) with a(r) to enumerate
//! equilibria, classifies bifurcations and Morse indices from the
//! derivative criterion a'(r) vs nu c'(r), and cross-validates the
//! classification against the spectrum of the discretized nonlocal
//! linearization and against gradient-flow simulation.
//!
//! See the guide in `book/` for a chapter-by-chapter walk-through; each
//! code snippet there runs as a doc-test of this crate.

pub mod error;
pub mod tol;

pub mod interp;
pub mod quad;
pub mod roots;

pub mod model;
pub mod time_maps;

pub use error::{Error, Result};
pub use model::{Diffusion, DiffusionKind, Nonlinearity, ReactionKind};
pub use time_maps::Sign;
pub use tol::Tolerances;
