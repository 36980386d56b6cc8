//! Multi-patch bi-quadratic NURBS discretization: basis evaluation with
//! second derivatives, exact-conic construction curves, benchmark mesh
//! generators and Gauss quadrature.

pub mod basis;
pub mod curve;
pub mod dump;
pub mod generators;
pub mod mesh;
pub mod patch;
pub mod quadrature;

pub use basis::KnotVector;
pub use generators::{make_mesh, MeshError, MeshScenario};
pub use mesh::{ControlMesh, EdgeSide, Element, OrientedEdge, SeamEdge};
pub use patch::{BasisEval, Patch};
pub use quadrature::{line_rule, surface_rule, QuadratureRule};
