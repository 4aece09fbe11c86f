//! Two-component extensions on R × R or R × S: trivial, Nagata and Dorroh.

use std::any::Any;
use std::sync::Arc;

use num_bigint::BigInt;

use crate::kernel::base::Residues;
use crate::kernel::literal::Cursor;
use crate::kernel::ring::{checked_size, Ring, RingImpl, RingKind};
use crate::kernel::{Elem, Endomorphism, LiteralError, RingError};

use super::subset::Rng;

fn pair_index(left: &Ring, right: &Ring, a: &Elem) -> u64 {
    let (x, y) = a.as_pair();
    left.index_of_unchecked(x) + left.size().expect("finite") * right.index_of_unchecked(y)
}

fn pair_at(left: &Ring, right: &Ring, index: u64) -> Elem {
    let n = left.size().expect("finite");
    Elem::pair(
        left.element_at_unchecked(index % n),
        right.element_at_unchecked(index / n),
    )
}

fn write_pair(left: &Ring, right: &Ring, a: &Elem, out: &mut String) {
    let (x, y) = a.as_pair();
    out.push('(');
    left.write_elem(x, out);
    out.push_str(", ");
    right.write_elem(y, out);
    out.push(')');
}

fn parse_pair(left: &Ring, right: &Ring, cur: &mut Cursor<'_>) -> Result<Elem, LiteralError> {
    cur.expect('(')?;
    let x = left.parse_elem_at(cur)?;
    cur.expect(',')?;
    let y = right.parse_elem_at(cur)?;
    cur.expect(')')?;
    Ok(Elem::pair(x, y))
}

fn check_pair(left: &Ring, right: &Ring, a: &Elem) -> Result<(), String> {
    match a {
        Elem::Pair(p) => {
            left.check(&p.0).map_err(|e| e.to_string())?;
            right.check(&p.1).map_err(|e| e.to_string())
        }
        other => Err(format!("expected a pair, found {other:?}")),
    }
}

fn sample_pairs(left: &Ring, right: &Ring) -> Vec<Elem> {
    let ls = left.check_set();
    let rs = right.check_set();
    let mut out = Vec::new();
    for a in ls.iter().take(12) {
        for b in rs.iter().take(12) {
            out.push(Elem::pair(a.clone(), b.clone()));
        }
    }
    out
}

/// T(R, R) with (r₁, m₁)(r₂, m₂) = (r₁r₂, r₁m₂ + m₁r₂).
pub struct Trivial {
    base: Ring,
}

impl Trivial {
    pub fn base(&self) -> &Ring {
        &self.base
    }
}

pub fn trivial_extension(base: Ring) -> Ring {
    Ring::new(Trivial { base })
}

impl RingImpl for Trivial {
    fn kind(&self) -> RingKind {
        RingKind::Trivial
    }

    fn expr(&self) -> String {
        format!("triv({})", self.base.expr())
    }

    fn size(&self) -> Option<u64> {
        checked_size(self.base.size()?, 2)
    }

    fn zero(&self) -> Elem {
        Elem::pair(self.base.zero(), self.base.zero())
    }

    fn one(&self) -> Elem {
        Elem::pair(self.base.one(), self.base.zero())
    }

    fn add(&self, a: &Elem, b: &Elem) -> Elem {
        let (a, b) = (a.as_pair(), b.as_pair());
        Elem::pair(self.base.add(a.0, b.0), self.base.add(a.1, b.1))
    }

    fn neg(&self, a: &Elem) -> Elem {
        let a = a.as_pair();
        Elem::pair(self.base.neg(a.0), self.base.neg(a.1))
    }

    fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        let r = &self.base;
        let ((r1, m1), (r2, m2)) = (a.as_pair(), b.as_pair());
        Elem::pair(r.mul(r1, r2), r.add(&r.mul(r1, m2), &r.mul(m1, r2)))
    }

    fn element_at(&self, index: u64) -> Elem {
        pair_at(&self.base, &self.base, index)
    }

    fn index_of(&self, a: &Elem) -> u64 {
        pair_index(&self.base, &self.base, a)
    }

    fn contains(&self, a: &Elem) -> Result<(), String> {
        check_pair(&self.base, &self.base, a)
    }

    fn write_elem(&self, a: &Elem, out: &mut String) {
        write_pair(&self.base, &self.base, a, out)
    }

    fn parse_elem(&self, cur: &mut Cursor<'_>) -> Result<Elem, LiteralError> {
        parse_pair(&self.base, &self.base, cur)
    }

    fn sample(&self) -> Vec<Elem> {
        sample_pairs(&self.base, &self.base)
    }

    fn commutative_hint(&self) -> Option<bool> {
        Some(self.base.is_commutative())
    }

    fn as_any(&self) -> &dyn Any {
        self
    }
}

/// Nagata extension of commutative R by R and σ:
/// (r₁, m₁)(r₂, m₂) = (r₁r₂, σ(r₁)m₂ + r₂m₁).
pub struct Nagata {
    base: Ring,
    sigma: Arc<Endomorphism>,
}

impl Nagata {
    pub fn base(&self) -> &Ring {
        &self.base
    }

    pub fn sigma(&self) -> &Endomorphism {
        &self.sigma
    }
}

pub fn nagata(base: Ring, sigma: Arc<Endomorphism>) -> Result<Ring, RingError> {
    let what = || format!("nagata({}, {})", base.expr(), sigma.expr());
    if !base.is_commutative() {
        return Err(RingError::construction(what(), "the base ring must be commutative"));
    }
    if !sigma.ring().same_as(&base) {
        return Err(RingError::construction(what(), "σ is defined on a different ring"));
    }
    Ok(Ring::new(Nagata { base, sigma }))
}

impl RingImpl for Nagata {
    fn kind(&self) -> RingKind {
        RingKind::Nagata
    }

    fn expr(&self) -> String {
        format!("nagata({}, {})", self.base.expr(), self.sigma.expr())
    }

    fn size(&self) -> Option<u64> {
        checked_size(self.base.size()?, 2)
    }

    fn zero(&self) -> Elem {
        Elem::pair(self.base.zero(), self.base.zero())
    }

    fn one(&self) -> Elem {
        Elem::pair(self.base.one(), self.base.zero())
    }

    fn add(&self, a: &Elem, b: &Elem) -> Elem {
        let (a, b) = (a.as_pair(), b.as_pair());
        Elem::pair(self.base.add(a.0, b.0), self.base.add(a.1, b.1))
    }

    fn neg(&self, a: &Elem) -> Elem {
        let a = a.as_pair();
        Elem::pair(self.base.neg(a.0), self.base.neg(a.1))
    }

    fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        let r = &self.base;
        let ((r1, m1), (r2, m2)) = (a.as_pair(), b.as_pair());
        let second = r.add(&r.mul(&self.sigma.apply(r1), m2), &r.mul(r2, m1));
        Elem::pair(r.mul(r1, r2), second)
    }

    fn element_at(&self, index: u64) -> Elem {
        pair_at(&self.base, &self.base, index)
    }

    fn index_of(&self, a: &Elem) -> u64 {
        pair_index(&self.base, &self.base, a)
    }

    fn contains(&self, a: &Elem) -> Result<(), String> {
        check_pair(&self.base, &self.base, a)
    }

    fn write_elem(&self, a: &Elem, out: &mut String) {
        write_pair(&self.base, &self.base, a, out)
    }

    fn parse_elem(&self, cur: &mut Cursor<'_>) -> Result<Elem, LiteralError> {
        parse_pair(&self.base, &self.base, cur)
    }

    fn sample(&self) -> Vec<Elem> {
        sample_pairs(&self.base, &self.base)
    }

    fn commutative_hint(&self) -> Option<bool> {
        self.sigma.is_identity().then_some(true)
    }

    fn as_any(&self) -> &dyn Any {
        self
    }
}

/// How the scalars Z_m act on the carrier.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ActionKind {
    /// s · r = φ(s) r with φ the unital map Z_m → ambient.
    CentralHom,
    /// s · r = r + ⋯ + r (s times).
    AdditiveChar,
}

impl ActionKind {
    pub fn keyword(self) -> &'static str {
        match self {
            ActionKind::CentralHom => "hom",
            ActionKind::AdditiveChar => "char",
        }
    }
}

/// The algebra R of a Dorroh extension: a unital ring or a non-unital
/// subring of one.
#[derive(Clone, Debug)]
pub enum DorrohCarrier {
    Ring(Ring),
    Rng(Rng),
}

impl DorrohCarrier {
    pub fn ambient(&self) -> &Ring {
        match self {
            DorrohCarrier::Ring(r) => r,
            DorrohCarrier::Rng(a) => a.carrier().ambient(),
        }
    }

    pub fn expr(&self) -> String {
        match self {
            DorrohCarrier::Ring(r) => r.expr(),
            DorrohCarrier::Rng(a) => a.expr().to_string(),
        }
    }

    fn size(&self) -> Option<u64> {
        match self {
            DorrohCarrier::Ring(r) => r.size(),
            DorrohCarrier::Rng(a) => Some(a.carrier().len() as u64),
        }
    }

    fn element_at(&self, i: u64) -> Elem {
        match self {
            DorrohCarrier::Ring(r) => r.element_at_unchecked(i),
            DorrohCarrier::Rng(a) => a.carrier().elems()[i as usize].clone(),
        }
    }

    fn index_of(&self, x: &Elem) -> u64 {
        match self {
            DorrohCarrier::Ring(r) => r.index_of_unchecked(x),
            DorrohCarrier::Rng(a) => a.carrier().position(x).expect("member"),
        }
    }

    fn check(&self, x: &Elem) -> Result<(), String> {
        match self {
            DorrohCarrier::Ring(r) => r.check(x).map_err(|e| e.to_string()),
            DorrohCarrier::Rng(a) if a.carrier().contains(x) => Ok(()),
            DorrohCarrier::Rng(a) => Err(format!("not in {}", a.expr())),
        }
    }

    fn check_set(&self) -> Vec<Elem> {
        match self {
            DorrohCarrier::Ring(r) => r.check_set(),
            DorrohCarrier::Rng(a) => a.carrier().elems().to_vec(),
        }
    }
}

/// Dorroh extension R × S with (r₁, s₁)(r₂, s₂) = (r₁r₂ + s₁r₂ + s₂r₁, s₁s₂)
/// and unity (0, 1). The scalar ring is Z_m or GF(p).
pub struct Dorroh {
    carrier: DorrohCarrier,
    scalars: Ring,
    action: ActionKind,
}

impl Dorroh {
    pub fn carrier(&self) -> &DorrohCarrier {
        &self.carrier
    }

    pub fn scalars(&self) -> &Ring {
        &self.scalars
    }

    pub fn action(&self) -> ActionKind {
        self.action
    }

    /// s · r.
    pub fn act(&self, s: &Elem, r: &Elem) -> Elem {
        let amb = self.carrier.ambient();
        let k = BigInt::from(s.res());
        match self.action {
            ActionKind::CentralHom => amb.mul(&amb.from_int(&k), r),
            ActionKind::AdditiveChar => amb.times(r, &k),
        }
    }
}

pub fn dorroh(carrier: DorrohCarrier, scalars: Ring, action: ActionKind) -> Result<Ring, RingError> {
    let what = format!(
        "dorroh({}, {}, {})",
        carrier.expr(),
        scalars.expr(),
        action.keyword()
    );
    let m = scalars
        .downcast::<Residues>()
        .map(Residues::modulus)
        .ok_or_else(|| RingError::construction(&what, "scalar ring must be Z_m or GF(p)"))?;
    let d = Dorroh {
        carrier,
        scalars,
        action,
    };
    validate_action(&d, m).map_err(|reason| RingError::construction(&what, reason))?;
    Ok(Ring::new(d))
}

fn validate_action(d: &Dorroh, m: u64) -> Result<(), String> {
    let amb = d.carrier.ambient();
    let lit = |x: &Elem| amb.fmt_elem(x);
    let rs = d.carrier.check_set();
    let m_big = BigInt::from(m);
    match d.action {
        ActionKind::CentralHom => {
            if !amb.is_zero(&amb.from_int(&m_big)) {
                return Err(format!("{m}·1 ≠ 0 in {}, so Z{m} → R is not defined", amb.expr()));
            }
        }
        ActionKind::AdditiveChar => {
            if let Some(r) = rs.iter().find(|r| !amb.is_zero(&amb.times(r, &m_big))) {
                return Err(format!("{m}·r ≠ 0 for r = {}", lit(r)));
            }
        }
    }
    let ss = d.scalars.check_set();
    let one = d.scalars.one();
    for r in &rs {
        if d.act(&one, r) != *r {
            return Err(format!("1·r = r fails at r = {}", lit(r)));
        }
    }
    let triple = |s: &Elem, a: &Elem, b: &Elem| {
        format!("(s, r₁, r₂) = ({}, {}, {})", d.scalars.fmt_elem(s), lit(a), lit(b))
    };
    for s in &ss {
        for a in &rs {
            let sa = d.act(s, a);
            if d.carrier.check(&sa).is_err() {
                return Err(format!("s·r leaves the carrier at (s, r) = ({}, {})", d.scalars.fmt_elem(s), lit(a)));
            }
            for b in &rs {
                let lhs = d.act(s, &amb.mul(a, b));
                if lhs != amb.mul(&sa, b) || lhs != amb.mul(a, &d.act(s, b)) {
                    return Err(format!("s·(r₁r₂) = (s·r₁)r₂ = r₁(s·r₂) fails at {}", triple(s, a, b)));
                }
            }
            for t in &ss {
                if d.act(&d.scalars.mul(s, t), a) != d.act(s, &d.act(t, a)) {
                    return Err(format!(
                        "(s₁s₂)·r = s₁·(s₂·r) fails at (s₁, s₂, r) = ({}, {}, {})",
                        d.scalars.fmt_elem(s),
                        d.scalars.fmt_elem(t),
                        lit(a)
                    ));
                }
            }
        }
    }
    Ok(())
}

impl RingImpl for Dorroh {
    fn kind(&self) -> RingKind {
        RingKind::Dorroh
    }

    fn expr(&self) -> String {
        format!(
            "dorroh({}, {}, {})",
            self.carrier.expr(),
            self.scalars.expr(),
            self.action.keyword()
        )
    }

    fn size(&self) -> Option<u64> {
        self.carrier.size()?.checked_mul(self.scalars.size()?)
    }

    fn zero(&self) -> Elem {
        Elem::pair(self.carrier.ambient().zero(), self.scalars.zero())
    }

    fn one(&self) -> Elem {
        Elem::pair(self.carrier.ambient().zero(), self.scalars.one())
    }

    fn add(&self, a: &Elem, b: &Elem) -> Elem {
        let (a, b) = (a.as_pair(), b.as_pair());
        Elem::pair(self.carrier.ambient().add(a.0, b.0), self.scalars.add(a.1, b.1))
    }

    fn neg(&self, a: &Elem) -> Elem {
        let a = a.as_pair();
        Elem::pair(self.carrier.ambient().neg(a.0), self.scalars.neg(a.1))
    }

    fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        let amb = self.carrier.ambient();
        let ((r1, s1), (r2, s2)) = (a.as_pair(), b.as_pair());
        let r = amb.add(&amb.add(&amb.mul(r1, r2), &self.act(s1, r2)), &self.act(s2, r1));
        Elem::pair(r, self.scalars.mul(s1, s2))
    }

    fn element_at(&self, index: u64) -> Elem {
        let n = self.carrier.size().expect("finite");
        Elem::pair(
            self.carrier.element_at(index % n),
            self.scalars.element_at_unchecked(index / n),
        )
    }

    fn index_of(&self, a: &Elem) -> u64 {
        let (r, s) = a.as_pair();
        self.carrier.index_of(r) + self.carrier.size().expect("finite") * self.scalars.index_of_unchecked(s)
    }

    fn contains(&self, a: &Elem) -> Result<(), String> {
        match a {
            Elem::Pair(p) => {
                self.carrier.check(&p.0)?;
                self.scalars.check(&p.1).map_err(|e| e.to_string())
            }
            other => Err(format!("expected a pair, found {other:?}")),
        }
    }

    fn write_elem(&self, a: &Elem, out: &mut String) {
        write_pair(self.carrier.ambient(), &self.scalars, a, out)
    }

    fn parse_elem(&self, cur: &mut Cursor<'_>) -> Result<Elem, LiteralError> {
        parse_pair(self.carrier.ambient(), &self.scalars, cur)
    }

    fn as_any(&self) -> &dyn Any {
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::matrix::matrix_ring;
    use crate::constructions::shape::MatrixShape;
    use crate::kernel::{gf, product, zn, EndoSpec};

    #[test]
    fn trivial_extension_laws() {
        let t = trivial_extension(zn(4).unwrap());
        assert_eq!(t.size(), Some(16));
        let a = t.parse_elem("(2, 3)").unwrap();
        assert_eq!(t.mul(&t.one(), &a), a);
        let m = t.parse_elem("(0, 1)").unwrap();
        assert_eq!(t.mul(&m, &m), t.zero());
    }

    #[test]
    fn dorroh_example_product() {
        let r = product(zn(2).unwrap(), zn(2).unwrap());
        let d = dorroh(DorrohCarrier::Ring(r), zn(2).unwrap(), ActionKind::CentralHom).unwrap();
        let a = d.parse_elem("((1, 0), 1)").unwrap();
        let b = d.parse_elem("((0, 1), 1)").unwrap();
        assert_eq!(d.fmt_elem(&d.mul(&a, &b)), "((1, 1), 1)");
        let x = d.parse_elem("((1, 1), 0)").unwrap();
        assert_eq!(d.mul(&d.one(), &x), x);
        assert_eq!(d.size(), Some(8));
    }

    #[test]
    fn dorroh_rejects_ill_defined_action() {
        let r = zn(3).unwrap();
        assert!(dorroh(DorrohCarrier::Ring(r.clone()), zn(2).unwrap(), ActionKind::CentralHom).is_err());
        assert!(dorroh(DorrohCarrier::Ring(r), zn(2).unwrap(), ActionKind::AdditiveChar).is_err());
    }

    #[test]
    fn dorroh_over_non_unital_carrier() {
        let amb = product(zn(2).unwrap(), zn(2).unwrap());
        let e = amb.parse_elem("(1, 0)").unwrap();
        let rng = Rng::generated(&amb, std::slice::from_ref(&e)).unwrap();
        let d = dorroh(DorrohCarrier::Rng(rng), gf(2).unwrap(), ActionKind::AdditiveChar).unwrap();
        assert_eq!(d.size(), Some(4));
        let ee = Elem::pair(e, Elem::Res(0));
        assert_eq!(d.mul(&ee, &ee), ee);
    }

    #[test]
    fn nagata_formula() {
        let r = product(zn(3).unwrap(), zn(3).unwrap());
        let s = Arc::new(Endomorphism::new(&r, &EndoSpec::Swap).unwrap());
        let n = nagata(r, s).unwrap();
        assert_eq!(n.size(), Some(81));
        let a = n.parse_elem("((1, 2), (0, 1))").unwrap();
        let b = n.parse_elem("((2, 0), (1, 1))").unwrap();
        assert_eq!(n.fmt_elem(&n.mul(&a, &b)), "((2, 0), (2, 1))");
        assert_eq!(n.mul(&n.one(), &a), a);
    }

    #[test]
    fn nagata_needs_commutative_base() {
        let t = matrix_ring(MatrixShape::upper(2), zn(2).unwrap());
        let id = Arc::new(Endomorphism::identity(&t));
        assert!(nagata(t, id).is_err());
    }
}
