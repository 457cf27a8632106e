//! Platonic solids, the regular tetrahedra that enclose them, and a
//! rotation-space minimizer that double-checks every claimed volume.
//!
//! The crate has three layers:
//!
//! * a geometry kernel ([`vec`], [`rotation`], [`polyhedron`], [`platonic`],
//!   [`regtetra`], [`mintriangle`]) written against a generic scalar so it
//!   monomorphizes to `f32` or `f64`;
//! * analytic enclosing constructions ([`constructions`]) that emit [`Scene`]s
//!   with exact poses and a trace of the derivation's intermediate scalars;
//! * an independent numerical check ([`optimizer`]) that searches all
//!   orientations for the smallest enclosing regular tetrahedron, plus
//!   serialization and a verification table ([`scenedoc`], [`mesh`],
//!   [`verify`]) behind the `tetrafit` CLI.
//!
//! All shipped tolerances assume `f64`; the concrete aliases below are what
//! the construction and optimizer layers use.

pub mod constructions;
pub mod error;
pub mod mesh;
pub mod mintriangle;
pub mod optimizer;
pub mod platonic;
pub mod polyhedron;
pub mod regtetra;
pub mod rotation;
pub mod scalar;
pub mod scenedoc;
pub mod vec;
pub mod verify;

pub use constructions::{DerivationTrace, Scene, TraceKey};
pub use error::GeomError;
pub use optimizer::{EnclosureResult, SearchConfig};
pub use platonic::{SolidKind, SolidMetrics};

/// Working 3-vector at double precision.
pub type Vec3 = vec::Vector3<f64>;
/// Working 2D point at double precision.
pub type P2 = vec::Point2<f64>;
/// Working rotation at double precision.
pub type Rotation = rotation::Rotation3<f64>;
/// Working polyhedron at double precision.
pub type Polyhedron = polyhedron::ConvexPolyhedron<f64>;
/// Working plane polygon at double precision.
pub type Polygon = polyhedron::Polygon2<f64>;
/// Working regular-tetrahedron pose at double precision.
pub type Tetra = regtetra::RegularTetra<f64>;
