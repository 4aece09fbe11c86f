//! Ring abstraction, element model, endomorphisms and base rings.

pub mod base;
pub mod elem;
pub mod endo;
pub mod error;
pub mod literal;
pub mod quaternion;
pub mod ring;
pub mod sequence;
pub mod table;

pub use base::{gf, integers, product, zn};
pub use elem::{Elem, RingId, RingValue};
pub use endo::{EndoSpec, Endomorphism, LawCheck};
pub use error::{LiteralError, RingError};
pub use quaternion::quaternions;
pub use ring::{FiniteView, Ring, RingImpl, RingKind, TABLE_LIMIT};
pub use sequence::ec_sequences;
pub use table::{gf4, load_table_ring, table_ring};
