//! Rings carried by an explicit subset of an ambient ring: corners eRe,
//! generated subrings, and non-unital carriers for Dorroh extensions.

use std::any::Any;
use std::collections::{HashMap, HashSet};

use crate::kernel::literal::Cursor;
use crate::kernel::ring::{Ring, RingImpl, RingKind};
use crate::kernel::base::{is_prime, Residues};
use crate::kernel::{Elem, LiteralError, RingError};
use crate::subring::linalg::Echelon;

use super::matrix::MatrixRing;

/// A finite subset closed under +, −, ·, sorted by ambient index.
#[derive(Clone, Debug)]
pub struct Carrier {
    ambient: Ring,
    elems: Vec<Elem>,
    index: HashMap<Elem, u64>,
}

impl Carrier {
    fn new(ambient: &Ring, set: HashSet<Elem>) -> Carrier {
        let mut elems: Vec<Elem> = set.into_iter().collect();
        match ambient.size() {
            Some(_) => elems.sort_by_cached_key(|e| ambient.index_of_unchecked(e)),
            None => elems.sort(),
        }
        let index = elems.iter().enumerate().map(|(i, e)| (e.clone(), i as u64)).collect();
        Carrier {
            ambient: ambient.clone(),
            elems,
            index,
        }
    }

    pub fn ambient(&self) -> &Ring {
        &self.ambient
    }

    pub fn elems(&self) -> &[Elem] {
        &self.elems
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn contains(&self, a: &Elem) -> bool {
        self.index.contains_key(a)
    }

    pub fn position(&self, a: &Elem) -> Option<u64> {
        self.index.get(a).copied()
    }
}

/// Smallest subset of `ambient` containing `gens` (and 0, and 1 when
/// `unital`) closed under addition, negation and multiplication.
///
/// Grows an additive subgroup A one coset at a time, keeping the elements
/// h₁, h₂, … that were joined. A·g ⊆ A as soon as every hᵢ·g lies in A, so
/// only those products are taken; once they all land in A, A holds every
/// product of generators (with 1 in A when unital) and is the generated
/// subring.
pub fn closure(ambient: &Ring, gens: &[Elem], unital: bool) -> HashSet<Elem> {
    let zero = ambient.zero();
    let mut set: HashSet<Elem> = HashSet::from([zero.clone()]);
    let mut members: Vec<Elem> = vec![zero];
    let mut joined: Vec<Elem> = Vec::new();
    let mut seeds: Vec<Elem> = gens.to_vec();
    if unital {
        seeds.push(ambient.one());
    }
    for g in &seeds {
        if join_cyclic(ambient, &mut set, &mut members, g) {
            joined.push(g.clone());
        }
    }
    let mut next = 0;
    while next < joined.len() {
        let h = joined[next].clone();
        next += 1;
        for g in gens {
            let y = ambient.mul(&h, g);
            if join_cyclic(ambient, &mut set, &mut members, &y) {
                joined.push(y);
            }
        }
    }
    set
}

/// A ← A + Zh, adding whole cosets A + kh until they wrap around. False
/// when h was already in A.
fn join_cyclic(ambient: &Ring, set: &mut HashSet<Elem>, members: &mut Vec<Elem>, h: &Elem) -> bool {
    if set.contains(h) {
        return false;
    }
    let mut frontier: Vec<Elem> = members.clone();
    loop {
        let coset: Vec<Elem> = frontier
            .iter()
            .map(|x| ambient.add(x, h))
            .filter(|y| !set.contains(y))
            .collect();
        if coset.is_empty() {
            break;
        }
        for y in &coset {
            set.insert(y.clone());
            members.push(y.clone());
        }
        frontier = coset;
    }
    true
}

/// Subring with its own unity (the ambient one, or e for a corner).
pub struct SubsetRing {
    carrier: Carrier,
    one: Elem,
    expr: String,
}

impl SubsetRing {
    pub fn carrier(&self) -> &Carrier {
        &self.carrier
    }
}

/// Subring generated by `gens`, printed as `closure(R, g₁, …)`.
pub fn closure_ring(ambient: &Ring, gens: &[Elem]) -> Result<Ring, RingError> {
    ambient.require_finite()?;
    for g in gens {
        ambient.check(g)?;
    }
    let mut expr = format!("closure({}", ambient.expr());
    for g in gens {
        expr.push_str(", ");
        expr.push_str(&ambient.fmt_elem(g));
    }
    expr.push(')');
    if let Some(p) = prime_matrix_modulus(ambient) {
        return Ok(Ring::new(SpanRing::generated(ambient, p, gens, expr)));
    }
    let set = closure(ambient, gens, true);
    Ok(Ring::new(SubsetRing {
        carrier: Carrier::new(ambient, set),
        one: ambient.one(),
        expr,
    }))
}

/// p when `ambient` is a matrix ring over Z_p with p prime.
fn prime_matrix_modulus(ambient: &Ring) -> Option<u64> {
    let m = ambient.downcast::<MatrixRing>()?;
    let p = m.base().downcast::<Residues>()?.modulus();
    is_prime(p).then_some(p)
}

/// Subring of a matrix ring over GF(p), kept as a GF(p)-subspace: the i-th
/// element has the base-p digits of i as coordinates on the echelon basis.
pub struct SpanRing {
    ambient: Ring,
    span: Echelon,
    expr: String,
}

impl SpanRing {
    fn generated(ambient: &Ring, p: u64, gens: &[Elem], expr: String) -> SpanRing {
        let width = ambient.zero().matrix().len();
        let mut span = Echelon::new(p, width);
        let mut joined: Vec<Elem> = Vec::new();
        for g in std::iter::once(ambient.one()).chain(gens.iter().cloned()) {
            if span.insert(&vector(&g)) {
                joined.push(g);
            }
        }
        let mut next = 0;
        while next < joined.len() {
            let h = joined[next].clone();
            next += 1;
            for g in gens {
                let y = ambient.mul(&h, g);
                if span.insert(&vector(&y)) {
                    joined.push(y);
                }
            }
        }
        SpanRing {
            ambient: ambient.clone(),
            span,
            expr,
        }
    }
}

fn vector(a: &Elem) -> Vec<u64> {
    a.matrix().iter().map(Elem::res).collect()
}

impl RingImpl for SpanRing {
    fn kind(&self) -> RingKind {
        RingKind::Subset
    }

    fn expr(&self) -> String {
        self.expr.clone()
    }

    fn size(&self) -> Option<u64> {
        self.span.p.checked_pow(self.span.dim() as u32)
    }

    fn zero(&self) -> Elem {
        self.ambient.zero()
    }

    fn one(&self) -> Elem {
        self.ambient.one()
    }

    fn add(&self, a: &Elem, b: &Elem) -> Elem {
        self.ambient.add(a, b)
    }

    fn neg(&self, a: &Elem) -> Elem {
        self.ambient.neg(a)
    }

    fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        self.ambient.mul(a, b)
    }

    fn element_at(&self, mut index: u64) -> Elem {
        let p = self.span.p;
        let mut v = vec![0u64; self.span.width];
        for row in &self.span.rows {
            let c = index % p;
            index /= p;
            for (x, y) in v.iter_mut().zip(row) {
                *x = (*x + c * y) % p;
            }
        }
        Elem::Matrix(v.into_iter().map(Elem::Res).collect())
    }

    fn index_of(&self, a: &Elem) -> u64 {
        let v = vector(a);
        self.span.pivots.iter().rev().fold(0, |acc, &c| acc * self.span.p + v[c])
    }

    fn contains(&self, a: &Elem) -> Result<(), String> {
        self.ambient.check(a).map_err(|e| e.to_string())?;
        if self.span.contains(&vector(a)) {
            Ok(())
        } else {
            Err(format!("not in the span generating {}", self.expr))
        }
    }

    fn write_elem(&self, a: &Elem, out: &mut String) {
        self.ambient.write_elem(a, out)
    }

    fn parse_elem(&self, cur: &mut Cursor<'_>) -> Result<Elem, LiteralError> {
        self.ambient.parse_elem_at(cur)
    }

    fn as_any(&self) -> &dyn Any {
        self
    }
}

/// The corner ring eRe with unity e.
pub fn corner(ambient: &Ring, e: &Elem) -> Result<Ring, RingError> {
    ambient.check(e)?;
    let what = || format!("corner({}, {})", ambient.expr(), ambient.fmt_elem(e));
    if ambient.mul(e, e) != *e {
        return Err(RingError::construction(what(), "e is not idempotent"));
    }
    let n = ambient.require_finite()?;
    let set: HashSet<Elem> = (0..n)
        .map(|i| {
            let x = ambient.element_at_unchecked(i);
            ambient.mul(&ambient.mul(e, &x), e)
        })
        .collect();
    Ok(Ring::new(SubsetRing {
        carrier: Carrier::new(ambient, set),
        one: e.clone(),
        expr: what(),
    }))
}

impl RingImpl for SubsetRing {
    fn kind(&self) -> RingKind {
        RingKind::Subset
    }

    fn expr(&self) -> String {
        self.expr.clone()
    }

    fn size(&self) -> Option<u64> {
        Some(self.carrier.len() as u64)
    }

    fn zero(&self) -> Elem {
        self.carrier.ambient.zero()
    }

    fn one(&self) -> Elem {
        self.one.clone()
    }

    fn add(&self, a: &Elem, b: &Elem) -> Elem {
        self.carrier.ambient.add(a, b)
    }

    fn neg(&self, a: &Elem) -> Elem {
        self.carrier.ambient.neg(a)
    }

    fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        self.carrier.ambient.mul(a, b)
    }

    fn element_at(&self, index: u64) -> Elem {
        self.carrier.elems[index as usize].clone()
    }

    fn index_of(&self, a: &Elem) -> u64 {
        self.carrier.index[a]
    }

    fn contains(&self, a: &Elem) -> Result<(), String> {
        if self.carrier.contains(a) {
            Ok(())
        } else {
            Err(format!("not in the subset carrier of {}", self.carrier.ambient.expr()))
        }
    }

    fn write_elem(&self, a: &Elem, out: &mut String) {
        self.carrier.ambient.write_elem(a, out)
    }

    fn parse_elem(&self, cur: &mut Cursor<'_>) -> Result<Elem, LiteralError> {
        self.carrier.ambient.parse_elem_at(cur)
    }

    fn as_any(&self) -> &dyn Any {
        self
    }
}

/// Non-unital subring of a unital ambient ring, printed as `rng(R, g₁, …)`.
#[derive(Clone, Debug)]
pub struct Rng {
    carrier: Carrier,
    expr: String,
}

impl Rng {
    pub fn generated(ambient: &Ring, gens: &[Elem]) -> Result<Rng, RingError> {
        ambient.require_finite()?;
        for g in gens {
            ambient.check(g)?;
        }
        let mut expr = format!("rng({}", ambient.expr());
        for g in gens {
            expr.push_str(", ");
            expr.push_str(&ambient.fmt_elem(g));
        }
        expr.push(')');
        Ok(Rng {
            carrier: Carrier::new(ambient, closure(ambient, gens, false)),
            expr,
        })
    }

    pub fn carrier(&self) -> &Carrier {
        &self.carrier
    }

    pub fn expr(&self) -> &str {
        &self.expr
    }
}
