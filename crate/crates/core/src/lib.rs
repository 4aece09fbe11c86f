pub mod constructions;
pub mod dsl;
pub mod kernel;
pub mod poly;
pub mod properties;
pub mod subring;
pub mod suite;
