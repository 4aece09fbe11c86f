//! The ring handle and the implementation contract every construction meets.

use std::any::Any;
use std::fmt;
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rayon::prelude::*;

use super::elem::{Elem, RingId, RingValue};
use super::error::{LiteralError, RingError};
use super::literal::Cursor;

/// Largest carrier for which a full multiplication table is materialized.
pub const TABLE_LIMIT: u64 = 2048;

/// Construction tag of a ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RingKind {
    Residues,
    Integers,
    Product,
    Table,
    Quaternions,
    Sequences,
    Matrix,
    Trivial,
    Dorroh,
    Nagata,
    Subset,
    SkewTrunc,
    SkewPoly,
    Laurent,
}

/// Arithmetic and enumeration for one construction.
///
/// `element_at` and `index_of` are only called on finite rings, with an
/// in-range index and a member element respectively.
pub trait RingImpl: Send + Sync + 'static {
    fn kind(&self) -> RingKind;
    /// Canonical ring expression in the DSL.
    fn expr(&self) -> String;
    /// `None` for arithmetic-only rings.
    fn size(&self) -> Option<u64>;
    fn zero(&self) -> Elem;
    fn one(&self) -> Elem;
    fn add(&self, a: &Elem, b: &Elem) -> Elem;
    fn neg(&self, a: &Elem) -> Elem;
    fn mul(&self, a: &Elem, b: &Elem) -> Elem;
    fn element_at(&self, index: u64) -> Elem;
    fn index_of(&self, a: &Elem) -> u64;
    /// Membership with a reason on failure.
    fn contains(&self, a: &Elem) -> Result<(), String>;
    fn write_elem(&self, a: &Elem, out: &mut String);
    fn parse_elem(&self, cur: &mut Cursor<'_>) -> Result<Elem, LiteralError>;
    /// Check set for arithmetic-only rings (finite rings use the carrier).
    fn sample(&self) -> Vec<Elem> {
        Vec::new()
    }
    fn commutative_hint(&self) -> Option<bool> {
        None
    }
    fn as_any(&self) -> &dyn Any;
}

struct Inner {
    id: RingId,
    imp: Box<dyn RingImpl>,
    commutative: OnceLock<bool>,
    view: OnceLock<Option<Arc<FiniteView>>>,
}

/// Shared, immutable ring handle.
#[derive(Clone)]
pub struct Ring(Arc<Inner>);

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ring({} {})", self.0.id, self.expr())
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.expr())
    }
}

impl Ring {
    pub fn new(imp: impl RingImpl) -> Ring {
        Ring(Arc::new(Inner {
            id: RingId::fresh(),
            imp: Box::new(imp),
            commutative: OnceLock::new(),
            view: OnceLock::new(),
        }))
    }

    pub fn id(&self) -> RingId {
        self.0.id
    }

    pub fn kind(&self) -> RingKind {
        self.0.imp.kind()
    }

    pub fn expr(&self) -> String {
        self.0.imp.expr()
    }

    pub fn size(&self) -> Option<u64> {
        self.0.imp.size()
    }

    pub fn is_finite(&self) -> bool {
        self.size().is_some()
    }

    pub fn downcast<T: 'static>(&self) -> Option<&T> {
        self.0.imp.as_any().downcast_ref::<T>()
    }

    pub fn same_as(&self, other: &Ring) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }

    pub fn zero(&self) -> Elem {
        self.0.imp.zero()
    }

    pub fn one(&self) -> Elem {
        self.0.imp.one()
    }

    pub fn add(&self, a: &Elem, b: &Elem) -> Elem {
        self.0.imp.add(a, b)
    }

    pub fn neg(&self, a: &Elem) -> Elem {
        self.0.imp.neg(a)
    }

    pub fn sub(&self, a: &Elem, b: &Elem) -> Elem {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        self.0.imp.mul(a, b)
    }

    pub fn is_zero(&self, a: &Elem) -> bool {
        *a == self.zero()
    }

    pub fn pow(&self, a: &Elem, mut k: u64) -> Elem {
        let mut acc = self.one();
        let mut base = a.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            k >>= 1;
            if k > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// `k` copies of `a` added together (negative `k` negates).
    pub fn times(&self, a: &Elem, k: &BigInt) -> Elem {
        let mut acc = self.zero();
        let mut base = if k.is_negative() { self.neg(a) } else { a.clone() };
        let mut k = k.abs();
        let two = BigInt::from(2);
        while !k.is_zero() {
            if (&k % &two) == BigInt::from(1) {
                acc = self.add(&acc, &base);
            }
            k /= &two;
            if !k.is_zero() {
                base = self.add(&base, &base);
            }
        }
        acc
    }

    /// Image of an integer under the unique unital map Z → R.
    pub fn from_int(&self, k: &BigInt) -> Elem {
        self.times(&self.one(), k)
    }

    /// Additive order of 1, when finite and at most `limit`.
    pub fn characteristic(&self, limit: u64) -> Option<u64> {
        let one = self.one();
        let zero = self.zero();
        let mut acc = one.clone();
        for k in 1..=limit {
            if acc == zero {
                return Some(k);
            }
            acc = self.add(&acc, &one);
        }
        None
    }

    pub fn element_at(&self, index: u64) -> Result<Elem, RingError> {
        let size = self.require_finite()?;
        if index >= size {
            return Err(RingError::IndexOutOfRange { index, size });
        }
        Ok(self.0.imp.element_at(index))
    }

    pub fn index_of(&self, a: &Elem) -> Result<u64, RingError> {
        self.require_finite()?;
        self.check(a)?;
        Ok(self.0.imp.index_of(a))
    }

    /// Unchecked variants for hot loops over known members.
    pub(crate) fn element_at_unchecked(&self, index: u64) -> Elem {
        self.0.imp.element_at(index)
    }

    pub(crate) fn index_of_unchecked(&self, a: &Elem) -> u64 {
        self.0.imp.index_of(a)
    }

    pub fn require_finite(&self) -> Result<u64, RingError> {
        self.size().ok_or_else(|| RingError::NotEnumerable(self.expr()))
    }

    /// All elements in enumeration order.
    pub fn elements(&self) -> Result<Vec<Elem>, RingError> {
        let size = self.require_finite()?;
        Ok((0..size).map(|i| self.0.imp.element_at(i)).collect())
    }

    /// Carrier for finite rings, otherwise the construction's sample set.
    pub fn check_set(&self) -> Vec<Elem> {
        match self.size() {
            Some(n) if n <= 1 << 16 => (0..n).map(|i| self.0.imp.element_at(i)).collect(),
            _ => self.0.imp.sample(),
        }
    }

    pub fn contains(&self, a: &Elem) -> bool {
        self.0.imp.contains(a).is_ok()
    }

    pub fn check(&self, a: &Elem) -> Result<(), RingError> {
        self.0.imp.contains(a).map_err(|detail| RingError::NotAnElement {
            ring: self.expr(),
            detail,
        })
    }

    pub fn fmt_elem(&self, a: &Elem) -> String {
        let mut s = String::new();
        self.0.imp.write_elem(a, &mut s);
        s
    }

    pub fn write_elem(&self, a: &Elem, out: &mut String) {
        self.0.imp.write_elem(a, out)
    }

    pub fn parse_elem_at(&self, cur: &mut Cursor<'_>) -> Result<Elem, LiteralError> {
        self.0.imp.parse_elem(cur)
    }

    /// Parses a complete literal and checks membership.
    pub fn parse_elem(&self, text: &str) -> Result<Elem, LiteralError> {
        let mut cur = Cursor::new(text);
        let e = self.0.imp.parse_elem(&mut cur)?;
        cur.finish()?;
        self.0.imp.contains(&e).map_err(|detail| LiteralError {
            column: 1,
            message: format!("not an element of {}: {detail}", self.expr()),
        })?;
        Ok(e)
    }

    pub fn sample(&self) -> Vec<Elem> {
        self.0.imp.sample()
    }

    pub fn commutative_hint(&self) -> Option<bool> {
        self.0.imp.commutative_hint()
    }

    /// Exhaustive on carriers with a table, otherwise the construction's
    /// structural answer, otherwise a check over `check_set`.
    pub fn is_commutative(&self) -> bool {
        *self.0.commutative.get_or_init(|| {
            if let Some(view) = self.view() {
                return view.is_commutative();
            }
            if let Some(h) = self.commutative_hint() {
                return h;
            }
            let set = self.check_set();
            set.iter()
                .all(|a| set.iter().all(|b| self.mul(a, b) == self.mul(b, a)))
        })
    }

    /// Cached index tables, for finite rings up to [`TABLE_LIMIT`].
    pub fn view(&self) -> Option<Arc<FiniteView>> {
        self.0
            .view
            .get_or_init(|| match self.size() {
                Some(n) if n <= TABLE_LIMIT => Some(Arc::new(FiniteView::build(self))),
                _ => None,
            })
            .clone()
    }

    // Ring-id checked API.

    pub fn value(&self, elem: Elem) -> Result<RingValue, RingError> {
        self.check(&elem)?;
        Ok(RingValue {
            ring: self.id(),
            elem,
        })
    }

    fn own<'v>(&self, v: &'v RingValue) -> Result<&'v Elem, RingError> {
        if v.ring != self.id() {
            return Err(RingError::ForeignElement {
                expected: self.id(),
                found: v.ring,
            });
        }
        Ok(&v.elem)
    }

    fn tag(&self, elem: Elem) -> RingValue {
        RingValue {
            ring: self.id(),
            elem,
        }
    }

    pub fn add_values(&self, a: &RingValue, b: &RingValue) -> Result<RingValue, RingError> {
        Ok(self.tag(self.add(self.own(a)?, self.own(b)?)))
    }

    pub fn mul_values(&self, a: &RingValue, b: &RingValue) -> Result<RingValue, RingError> {
        Ok(self.tag(self.mul(self.own(a)?, self.own(b)?)))
    }

    pub fn neg_value(&self, a: &RingValue) -> Result<RingValue, RingError> {
        Ok(self.tag(self.neg(self.own(a)?)))
    }

    pub fn eq_values(&self, a: &RingValue, b: &RingValue) -> Result<bool, RingError> {
        Ok(self.own(a)? == self.own(b)?)
    }
}

/// Materialized index tables of a finite ring.
pub struct FiniteView {
    pub elems: Vec<Elem>,
    mul: Vec<u32>,
    add: OnceLock<Vec<u32>>,
    pub zero: u32,
    pub one: u32,
    idempotent: Vec<bool>,
}

impl FiniteView {
    fn build(ring: &Ring) -> FiniteView {
        let elems = ring.elements().expect("finite");
        let n = elems.len();
        let mut mul = vec![0u32; n * n];
        mul.par_chunks_mut(n.max(1))
            .enumerate()
            .for_each(|(i, row)| {
                for (j, slot) in row.iter_mut().enumerate() {
                    let p = ring.mul(&elems[i], &elems[j]);
                    *slot = ring.index_of_unchecked(&p) as u32;
                }
            });
        let idempotent = (0..n).map(|i| mul[i * n + i] as usize == i).collect();
        let zero = ring.index_of_unchecked(&ring.zero()) as u32;
        let one = ring.index_of_unchecked(&ring.one()) as u32;
        FiniteView {
            elems,
            mul,
            add: OnceLock::new(),
            zero,
            one,
            idempotent,
        }
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.mul[a as usize * self.elems.len() + b as usize]
    }

    #[inline]
    pub fn is_idempotent(&self, a: u32) -> bool {
        self.idempotent[a as usize]
    }

    /// Addition table, built on first use.
    pub fn add_table(&self, ring: &Ring) -> &[u32] {
        self.add.get_or_init(|| {
            let n = self.elems.len();
            let mut add = vec![0u32; n * n];
            add.par_chunks_mut(n.max(1))
                .enumerate()
                .for_each(|(i, row)| {
                    for (j, slot) in row.iter_mut().enumerate() {
                        let s = ring.add(&self.elems[i], &self.elems[j]);
                        *slot = ring.index_of_unchecked(&s) as u32;
                    }
                });
            add
        })
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.elems.len();
        (0..n).all(|i| (i + 1..n).all(|j| self.mul[i * n + j] == self.mul[j * n + i]))
    }

    pub fn idempotent_indices(&self) -> Vec<u32> {
        (0..self.elems.len() as u32)
            .filter(|&i| self.idempotent[i as usize])
            .collect()
    }
}

/// Shared helper: mixed-radix digits of `index` in base `radix`.
pub(crate) fn digits(mut index: u64, radix: u64, count: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        out.push(index % radix);
        index /= radix;
    }
    out
}

/// Inverse of [`digits`].
pub(crate) fn undigits(ds: impl DoubleEndedIterator<Item = u64>, radix: u64) -> u64 {
    ds.rev().fold(0u64, |acc, d| acc * radix + d)
}

/// `base^exp` if it fits in `u64`.
pub(crate) fn checked_size(base: u64, exp: usize) -> Option<u64> {
    let mut acc: u64 = 1;
    for _ in 0..exp {
        acc = acc.checked_mul(base)?;
    }
    Some(acc)
}
