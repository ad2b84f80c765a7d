//! Discrete conformal structures on ideally triangulated hyperbolic
//! surfaces with boundary.
//!
//! An ideally triangulated bordered surface assigns each ideal face a
//! right-angled hyperbolic hexagon; a discrete conformal structure produces
//! the hexagon side lengths from per-boundary conformal factors `f` through
//! one of six classified closed forms, splits each edge at a center point,
//! and (when the per-face compatibility condition holds) equips the
//! triangulation's Poincare dual with geometric face centers.
//!
//! Module map:
//!
//! - [`lorentz`]: the Lorentzian 3-space, hyperboloid and Klein models;
//! - [`trig`]: the ten generalized cosine laws and their substitutions into
//!   the families;
//! - [`dcs`]: the six families, edge splits, face coexistence rules and the
//!   alpha reparameterization;
//! - [`hexagon`]: hexagon realization, edge/face centers, compatibility;
//! - [`surface`]: triangulation combinatorics, JSON I/O, global metric
//!   computation and the C reparameterization;
//! - [`verify`]: numerical certification of the defining equations;
//! - [`bundled`]: example surfaces;
//! - [`jsonfmt`]: report serialization at 17 significant digits.

pub mod bundled;
pub mod dcs;
pub mod hexagon;
pub mod jsonfmt;
pub mod lorentz;
pub mod surface;
pub mod trig;
pub mod verify;
