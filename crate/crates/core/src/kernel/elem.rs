//! Element payloads.
//!
//! Every ring stores its elements as an [`Elem`] in a canonical normal form,
//! so structural equality is ring equality. The payload variant is fixed by
//! the owning ring's construction; ring implementations assume their inputs
//! are well formed and panic on a foreign variant.

use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};

use num_bigint::BigInt;

/// Untagged element payload.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Elem {
    /// Arbitrary precision integer (the ring Z).
    Int(BigInt),
    /// Residue in `[0, m)`.
    Res(u64),
    /// Ordered tuple: direct products and sequence prefixes.
    Tuple(Vec<Elem>),
    /// Two-component extensions (trivial, Dorroh, Nagata).
    Pair(Box<(Elem, Elem)>),
    /// Square matrix in row-major order.
    Matrix(Vec<Elem>),
    /// Polynomial coefficients, lowest degree first.
    Coeffs(Vec<Elem>),
    /// Laurent polynomial: lowest exponent and coefficients from there up.
    Laurent(i64, Vec<Elem>),
    /// Quaternion coefficients on the basis 1, i, j, k.
    Quat(Box<[Elem; 4]>),
    /// Index into a table ring's carrier.
    Table(u32),
}

impl Elem {
    pub fn pair(a: Elem, b: Elem) -> Elem {
        Elem::Pair(Box::new((a, b)))
    }

    pub fn res(&self) -> u64 {
        match self {
            Elem::Res(r) => *r,
            other => panic!("expected a residue, found {other:?}"),
        }
    }

    pub fn table(&self) -> u32 {
        match self {
            Elem::Table(t) => *t,
            other => panic!("expected a table index, found {other:?}"),
        }
    }

    pub fn int(&self) -> &BigInt {
        match self {
            Elem::Int(n) => n,
            other => panic!("expected an integer, found {other:?}"),
        }
    }

    pub fn as_pair(&self) -> (&Elem, &Elem) {
        match self {
            Elem::Pair(p) => (&p.0, &p.1),
            other => panic!("expected a pair, found {other:?}"),
        }
    }

    pub fn tuple(&self) -> &[Elem] {
        match self {
            Elem::Tuple(t) => t,
            other => panic!("expected a tuple, found {other:?}"),
        }
    }

    pub fn matrix(&self) -> &[Elem] {
        match self {
            Elem::Matrix(m) => m,
            other => panic!("expected a matrix, found {other:?}"),
        }
    }

    pub fn coeffs(&self) -> &[Elem] {
        match self {
            Elem::Coeffs(c) => c,
            other => panic!("expected a coefficient list, found {other:?}"),
        }
    }

    pub fn quat(&self) -> &[Elem; 4] {
        match self {
            Elem::Quat(q) => q,
            other => panic!("expected a quaternion, found {other:?}"),
        }
    }
}

/// Identifier of a constructed ring. Two builds of the same expression get
/// distinct ids.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RingId(pub u64);

impl RingId {
    pub(crate) fn fresh() -> RingId {
        static NEXT: AtomicU64 = AtomicU64::new(1);
        RingId(NEXT.fetch_add(1, Ordering::Relaxed))
    }
}

impl fmt::Display for RingId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ring#{}", self.0)
    }
}

/// An element tagged with the ring it belongs to.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingValue {
    pub ring: RingId,
    pub elem: Elem,
}
