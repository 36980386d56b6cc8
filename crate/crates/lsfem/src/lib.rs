//! Nonlinear finite elements for liquid thin shells.
//!
//! The library discretizes curvature-elastic surfaces (Canham/Helfrich bending
//! energy with compressible or area-incompressible in-plane response) with
//! C1-continuous bi-quadratic NURBS elements, stabilizes the quasi-static
//! in-plane rank deficiency with stiffness-, viscosity- or projection-type
//! schemes, and solves the resulting equations with load-stepped Newton
//! iterations.
//!
//! The crate is organized along the pipeline:
//!
//! * [`kinematics`] - pointwise surface differential geometry,
//! * [`nurbs`] - patches, basis evaluation, quadrature and mesh generators,
//! * [`constitutive`] - energy densities, stresses, moments and their tangents,
//! * [`stabilization`] - the nine quasi-static stabilization schemes,
//! * [`assembly`] - element residuals/tangents and the global system,
//! * [`solver`] - sparse direct linear algebra and the Newton driver,
//! * [`scenarios`] - the four benchmark drivers with closed-form oracles,
//! * [`io`] - config parsing, CSV/field/log output and normalization,
//! * [`verify`] - the runtime finite-difference and invariant check suite.

pub mod assembly;
pub mod constitutive;
pub mod io;
pub mod kinematics;
pub mod nurbs;
pub mod scenarios;
pub mod solver;
pub mod stabilization;
pub mod tensor;
pub mod verify;

pub use kinematics::{KinematicState, SurfacePoint, TangentFrame};

/// 3-vector of f64, the working type for positions and directions.
pub type Vec3 = nalgebra::Vector3<f64>;
/// Symmetric 2x2 surface tensors (metric, curvature) in component form.
pub type Mat2 = nalgebra::Matrix2<f64>;
/// Dense 3x3 blocks (nodal tangent sub-blocks, rotations).
pub type Mat3 = nalgebra::Matrix3<f64>;
