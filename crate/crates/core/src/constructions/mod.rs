//! Matrix rings and their patterned subrings, trivial/Dorroh/Nagata
//! extensions, corner and generated subrings, and isomorphism checks.

pub mod extension;
pub mod iso;
pub mod matrix;
pub mod shape;
pub mod subset;

pub use extension::{dorroh, nagata, trivial_extension, ActionKind, DorrohCarrier};
pub use iso::{named_iso, verify_iso, IsoCandidate, IsoReport};
pub use matrix::{matrix_ring, MatrixRing};
pub use shape::MatrixShape;
pub use subset::{closure, closure_ring, corner, Rng};
