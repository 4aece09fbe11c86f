//! Exact skew and Laurent polynomial arithmetic and truncated quotients.

pub mod arith;
pub mod literal;
pub mod rings;

pub use arith::{laurent_mul, skew_mul, trim, Convention};
pub use rings::{laurent_ring, skew_poly_ring, trunc_ring, LaurentRing, SkewPolyRing, TruncRing};
