//! Base rings: residues Z_n, prime fields, the integers and direct products.

use std::any::Any;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::elem::Elem;
use super::error::{LiteralError, RingError};
use super::literal::Cursor;
use super::ring::{Ring, RingImpl, RingKind};

/// Z/mZ, optionally labelled as the prime field GF(m).
pub struct Residues {
    modulus: u64,
    field: bool,
}

impl Residues {
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn is_field(&self) -> bool {
        self.field
    }

    fn reduce(&self, v: &BigInt) -> u64 {
        let m = BigInt::from(self.modulus);
        let r = ((v % &m) + &m) % &m;
        r.to_u64().expect("residue fits")
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Z/mZ for `m ≥ 1` (Z_1 is the zero ring).
pub fn zn(modulus: u64) -> Result<Ring, RingError> {
    if modulus == 0 {
        return Err(RingError::construction("Z0", "modulus must be at least 1"));
    }
    Ok(Ring::new(Residues {
        modulus,
        field: false,
    }))
}

/// The prime field GF(p).
pub fn gf(p: u64) -> Result<Ring, RingError> {
    if !is_prime(p) {
        return Err(RingError::construction(
            format!("GF{p}"),
            format!("{p} is not prime"),
        ));
    }
    Ok(Ring::new(Residues {
        modulus: p,
        field: true,
    }))
}

impl RingImpl for Residues {
    fn kind(&self) -> RingKind {
        RingKind::Residues
    }

    fn expr(&self) -> String {
        if self.field {
            format!("GF{}", self.modulus)
        } else {
            format!("Z{}", self.modulus)
        }
    }

    fn size(&self) -> Option<u64> {
        Some(self.modulus)
    }

    fn zero(&self) -> Elem {
        Elem::Res(0)
    }

    fn one(&self) -> Elem {
        Elem::Res(1 % self.modulus)
    }

    fn add(&self, a: &Elem, b: &Elem) -> Elem {
        let s = (a.res() as u128 + b.res() as u128) % self.modulus as u128;
        Elem::Res(s as u64)
    }

    fn neg(&self, a: &Elem) -> Elem {
        let r = a.res();
        Elem::Res(if r == 0 { 0 } else { self.modulus - r })
    }

    fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        let p = (a.res() as u128 * b.res() as u128) % self.modulus as u128;
        Elem::Res(p as u64)
    }

    fn element_at(&self, index: u64) -> Elem {
        Elem::Res(index)
    }

    fn index_of(&self, a: &Elem) -> u64 {
        a.res()
    }

    fn contains(&self, a: &Elem) -> Result<(), String> {
        match a {
            Elem::Res(r) if *r < self.modulus => Ok(()),
            Elem::Res(r) => Err(format!("residue {r} not below {}", self.modulus)),
            other => Err(format!("expected a residue, found {other:?}")),
        }
    }

    fn write_elem(&self, a: &Elem, out: &mut String) {
        out.push_str(&a.res().to_string());
    }

    fn parse_elem(&self, cur: &mut Cursor<'_>) -> Result<Elem, LiteralError> {
        let v = cur.int()?;
        Ok(Elem::Res(self.reduce(&v)))
    }

    fn commutative_hint(&self) -> Option<bool> {
        Some(true)
    }

    fn as_any(&self) -> &dyn Any {
        self
    }
}

/// The integers, arithmetic only.
pub struct Integers;

pub fn integers() -> Ring {
    Ring::new(Integers)
}

impl RingImpl for Integers {
    fn kind(&self) -> RingKind {
        RingKind::Integers
    }

    fn expr(&self) -> String {
        "Z".to_string()
    }

    fn size(&self) -> Option<u64> {
        None
    }

    fn zero(&self) -> Elem {
        Elem::Int(BigInt::from(0))
    }

    fn one(&self) -> Elem {
        Elem::Int(BigInt::from(1))
    }

    fn add(&self, a: &Elem, b: &Elem) -> Elem {
        Elem::Int(a.int() + b.int())
    }

    fn neg(&self, a: &Elem) -> Elem {
        Elem::Int(-a.int())
    }

    fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        Elem::Int(a.int() * b.int())
    }

    fn element_at(&self, _index: u64) -> Elem {
        unreachable!("Z is not enumerable")
    }

    fn index_of(&self, _a: &Elem) -> u64 {
        unreachable!("Z is not enumerable")
    }

    fn contains(&self, a: &Elem) -> Result<(), String> {
        match a {
            Elem::Int(_) => Ok(()),
            other => Err(format!("expected an integer, found {other:?}")),
        }
    }

    fn write_elem(&self, a: &Elem, out: &mut String) {
        out.push_str(&a.int().to_string());
    }

    fn parse_elem(&self, cur: &mut Cursor<'_>) -> Result<Elem, LiteralError> {
        Ok(Elem::Int(cur.int()?))
    }

    fn sample(&self) -> Vec<Elem> {
        (-3..=3).map(|k| Elem::Int(BigInt::from(k))).collect()
    }

    fn commutative_hint(&self) -> Option<bool> {
        Some(true)
    }

    fn as_any(&self) -> &dyn Any {
        self
    }
}

/// Direct product R × S with componentwise operations.
pub struct Product {
    left: Ring,
    right: Ring,
}

impl Product {
    pub fn left(&self) -> &Ring {
        &self.left
    }

    pub fn right(&self) -> &Ring {
        &self.right
    }
}

pub fn product(left: Ring, right: Ring) -> Ring {
    Ring::new(Product { left, right })
}

impl RingImpl for Product {
    fn kind(&self) -> RingKind {
        RingKind::Product
    }

    fn expr(&self) -> String {
        format!("prod({}, {})", self.left.expr(), self.right.expr())
    }

    fn size(&self) -> Option<u64> {
        self.left.size()?.checked_mul(self.right.size()?)
    }

    fn zero(&self) -> Elem {
        Elem::Tuple(vec![self.left.zero(), self.right.zero()])
    }

    fn one(&self) -> Elem {
        Elem::Tuple(vec![self.left.one(), self.right.one()])
    }

    fn add(&self, a: &Elem, b: &Elem) -> Elem {
        let (a, b) = (a.tuple(), b.tuple());
        Elem::Tuple(vec![self.left.add(&a[0], &b[0]), self.right.add(&a[1], &b[1])])
    }

    fn neg(&self, a: &Elem) -> Elem {
        let a = a.tuple();
        Elem::Tuple(vec![self.left.neg(&a[0]), self.right.neg(&a[1])])
    }

    fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        let (a, b) = (a.tuple(), b.tuple());
        Elem::Tuple(vec![self.left.mul(&a[0], &b[0]), self.right.mul(&a[1], &b[1])])
    }

    fn element_at(&self, index: u64) -> Elem {
        let n = self.left.size().expect("finite");
        Elem::Tuple(vec![
            self.left.element_at_unchecked(index % n),
            self.right.element_at_unchecked(index / n),
        ])
    }

    fn index_of(&self, a: &Elem) -> u64 {
        let a = a.tuple();
        let n = self.left.size().expect("finite");
        self.left.index_of_unchecked(&a[0]) + n * self.right.index_of_unchecked(&a[1])
    }

    fn contains(&self, a: &Elem) -> Result<(), String> {
        match a {
            Elem::Tuple(t) if t.len() == 2 => {
                self.left.check(&t[0]).map_err(|e| e.to_string())?;
                self.right.check(&t[1]).map_err(|e| e.to_string())
            }
            other => Err(format!("expected a 2-tuple, found {other:?}")),
        }
    }

    fn write_elem(&self, a: &Elem, out: &mut String) {
        let a = a.tuple();
        out.push('(');
        self.left.write_elem(&a[0], out);
        out.push_str(", ");
        self.right.write_elem(&a[1], out);
        out.push(')');
    }

    fn parse_elem(&self, cur: &mut Cursor<'_>) -> Result<Elem, LiteralError> {
        cur.expect('(')?;
        let a = self.left.parse_elem_at(cur)?;
        cur.expect(',')?;
        let b = self.right.parse_elem_at(cur)?;
        cur.expect(')')?;
        Ok(Elem::Tuple(vec![a, b]))
    }

    fn sample(&self) -> Vec<Elem> {
        let ls = self.left.check_set();
        let rs = self.right.check_set();
        let mut out = Vec::new();
        for a in ls.iter().take(8) {
            for b in rs.iter().take(8) {
                out.push(Elem::Tuple(vec![a.clone(), b.clone()]));
            }
        }
        out
    }

    fn commutative_hint(&self) -> Option<bool> {
        Some(self.left.is_commutative() && self.right.is_commutative())
    }

    fn as_any(&self) -> &dyn Any {
        self
    }
}
