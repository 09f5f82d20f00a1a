//! Solvers for time-fractional quasilinear evolution equations
//!
//! `fracevol` discretizes equations of the form
//!
//! ```text
//!     d^beta/dt^beta (u(t) - x) + A(t, u(t)) = f(t),      0 < t < T,
//! ```
//!
//! where `beta` is a Caputo fractional order in (0, 1] and `A` is a monotone
//! spatial operator (porous medium, p-Laplace, or linear relaxation) acting
//! on a discretized Gelfand triple `V ⊆ H ⊆ V*`. The crate provides
//!
//! - [`kernels`]: fractional-calculus primitives (Grünwald–Letnikov and L1
//!   memory weights, Riemann–Liouville convolution quadrature, a
//!   Mittag-Leffler evaluator, a one-sided stable subordinator sampler),
//! - [`operators`]: 1D Dirichlet grids, the two Gelfand triples, the monotone
//!   operators, and a sampling verifier for the hemicontinuity /
//!   monotonicity / coercivity / growth conditions,
//! - [`stepper`]: the implicit fractional time stepper with per-node
//!   monotone resolvent solves, plus convergence and decay diagnostics,
//! - [`stochastic`]: additive fractional noise — the stochastic convolution
//!   path, the admissibility gate `gamma < beta + 1/2`, and Monte Carlo
//!   statistics over shift-and-solve runs,
//! - [`yosida`]: the causal space-time realization of `-d^beta/dt^beta`,
//!   its resolvent and Yosida approximation, and a convergence study that
//!   reenacts the abstract existence argument at finite dimension,
//! - [`verify`]: named invariant suites with margins, used by the CLI and
//!   the acceptance tests.

pub mod error;
pub mod kernels;
pub mod linalg;
pub mod operators;
pub mod rng;
pub mod stepper;
pub mod stochastic;
pub mod verify;
pub mod yosida;

pub use error::{Error, Result};
