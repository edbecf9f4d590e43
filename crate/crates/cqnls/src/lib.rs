//! Ground-state solitons of the cubic-quintic nonlinear Schrödinger equation
//! on R³ and everything that hangs off them: the soliton mass curve and its
//! critical frequency, variational constants, the linearized radial spectrum,
//! and split-step dynamics with an orbit-distance diagnostic.
//!
//! The stationary profiles solve
//!
//! ```text
//! Q'' + (2/r) Q' - ω Q + Q³ - Q⁵ = 0,   Q'(0) = 0,  Q(∞) = 0,
//! ```
//!
//! which has a positive decaying solution exactly for 0 < ω < 3/16.

pub mod collocation;
pub mod curve;
pub mod dst;
pub mod dynamics;
pub mod error;
pub mod field;
pub mod functionals;
pub mod gradient_flow;
pub mod grid;
pub mod ground_state;
pub mod io;
pub mod spectral;

pub use error::{Error, Result};
pub use field::{orbit_distance, ComplexRadialField};
pub use grid::{gradient_norm_sq, integrate_radial, RadialGrid, RealRadialFunction};
pub use ground_state::{solve_ground_state, Frequency, RadialProfile, ShootingConfig};
