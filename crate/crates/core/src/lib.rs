//! Numerical suite for self-gravitating bound states.
//!
//! The crate computes the energy-minimizing ground state of the
//! Newton-Schrödinger (Choquard) system on a radial grid, certifies the
//! nondegeneracy of its linearization by dense eigendecomposition, and
//! continues the state in the relativistic parameter `eps = 1/c` to
//! particlelike solutions of the spherically symmetric Einstein-Dirac
//! equations.
//!
//! Module map:
//! - [`radial`]: grids, stencils, quadrature, the radial Poisson/Newton
//!   kernel, and weighted norms.
//! - [`choquard`]: the canonical positive bound state and its rescaling to
//!   the normalized energy minimizer.
//! - [`linearized`]: the linearized operator, its spectrum, and the
//!   constructive inverse of the linearization at the Newtonian limit point.
//! - [`einstein_dirac`]: the rescaled residual map, Newton continuation in
//!   `eps`, and reconstruction of the physical metric and spinor fields.
//! - [`config`], [`pipeline`], [`io`]: run configuration, the staged
//!   pipeline, and deterministic serialization.

pub mod choquard;
pub mod config;
pub mod einstein_dirac;
pub mod io;
pub mod linalg;
pub mod linearized;
pub mod pipeline;
pub mod radial;
pub mod units;

pub use radial::grid::RadialGrid;
pub use radial::norms::{NormKind, NormSpec};
pub use radial::profile::{OriginParity, RadialProfile};
pub use units::UnitSystem;
