//! Rings of polynomials: the exact skew polynomial ring R[x;σ], Laurent
//! polynomials R[x, x⁻¹], and the finite quotients R[x;σ]/(xᵏ).

use std::any::Any;
use std::sync::Arc;

use crate::kernel::literal::Cursor;
use crate::kernel::ring::{checked_size, digits, undigits, Ring, RingImpl, RingKind};
use crate::kernel::{Elem, Endomorphism, LiteralError, RingError};

use super::arith::{laurent_mul, laurent_normalize, poly_add, skew_mul, trim, Convention};
use super::literal::{dense, parse_terms, write_terms};

fn check_coeffs(base: &Ring, c: &[Elem]) -> Result<(), String> {
    c.iter()
        .enumerate()
        .try_for_each(|(i, a)| base.check(a).map_err(|e| format!("coefficient {i}: {e}")))
}

fn sample_polys(base: &Ring, max_len: usize) -> Vec<Vec<Elem>> {
    let coeffs: Vec<Elem> = base.check_set().into_iter().take(3).collect();
    let mut out: Vec<Vec<Elem>> = vec![Vec::new()];
    let mut layer: Vec<Vec<Elem>> = vec![Vec::new()];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|p| {
                coeffs.iter().map(move |c| {
                    let mut q = p.clone();
                    q.push(c.clone());
                    q
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

/// R[x;σ] in the left convention, arithmetic only. Elements are trimmed
/// coefficient lists (the zero polynomial is empty).
pub struct SkewPolyRing {
    base: Ring,
    sigma: Arc<Endomorphism>,
}

pub fn skew_poly_ring(base: Ring, sigma: Arc<Endomorphism>) -> Result<Ring, RingError> {
    if !sigma.ring().same_as(&base) {
        return Err(RingError::construction(
            format!("poly({}, {})", base.expr(), sigma.expr()),
            "σ is defined on a different ring",
        ));
    }
    Ok(Ring::new(SkewPolyRing { base, sigma }))
}

impl SkewPolyRing {
    pub fn base(&self) -> &Ring {
        &self.base
    }

    pub fn sigma(&self) -> &Endomorphism {
        &self.sigma
    }

    pub fn from_coeffs(&self, c: Vec<Elem>) -> Elem {
        Elem::Coeffs(trim(&self.base, c))
    }

    /// f² = f in the exact ring.
    pub fn is_idempotent(&self, f: &Elem) -> bool {
        self.mul(f, f) == *f
    }
}

impl RingImpl for SkewPolyRing {
    fn kind(&self) -> RingKind {
        RingKind::SkewPoly
    }

    fn expr(&self) -> String {
        format!("poly({}, {})", self.base.expr(), self.sigma.expr())
    }

    fn size(&self) -> Option<u64> {
        if self.base.size() == Some(1) {
            Some(1)
        } else {
            None
        }
    }

    fn zero(&self) -> Elem {
        Elem::Coeffs(Vec::new())
    }

    fn one(&self) -> Elem {
        self.from_coeffs(vec![self.base.one()])
    }

    fn add(&self, a: &Elem, b: &Elem) -> Elem {
        self.from_coeffs(poly_add(&self.base, a.coeffs(), b.coeffs()))
    }

    fn neg(&self, a: &Elem) -> Elem {
        Elem::Coeffs(a.coeffs().iter().map(|c| self.base.neg(c)).collect())
    }

    fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        self.from_coeffs(skew_mul(
            &self.base,
            &self.sigma,
            Convention::Left,
            a.coeffs(),
            b.coeffs(),
            None,
        ))
    }

    fn element_at(&self, _index: u64) -> Elem {
        self.zero()
    }

    fn index_of(&self, _a: &Elem) -> u64 {
        0
    }

    fn contains(&self, a: &Elem) -> Result<(), String> {
        match a {
            Elem::Coeffs(c) if c.last() != Some(&self.base.zero()) => check_coeffs(&self.base, c),
            Elem::Coeffs(_) => Err("polynomial has a trailing zero coefficient".into()),
            other => Err(format!("expected a polynomial, found {other:?}")),
        }
    }

    fn write_elem(&self, a: &Elem, out: &mut String) {
        write_terms(&self.base, a.coeffs().iter().enumerate().map(|(i, c)| (i as i64, c)), out)
    }

    fn parse_elem(&self, cur: &mut Cursor<'_>) -> Result<Elem, LiteralError> {
        let terms = parse_terms(&self.base, cur, false)?;
        Ok(self.from_coeffs(dense(&self.base, &terms).1))
    }

    fn sample(&self) -> Vec<Elem> {
        sample_polys(&self.base, 2)
            .into_iter()
            .map(|c| self.from_coeffs(c))
            .collect()
    }

    fn commutative_hint(&self) -> Option<bool> {
        if self.sigma.is_identity() {
            Some(self.base.is_commutative())
        } else {
            None
        }
    }

    fn as_any(&self) -> &dyn Any {
        self
    }
}

/// R[x, x⁻¹], arithmetic only.
pub struct LaurentRing {
    base: Ring,
}

pub fn laurent_ring(base: Ring) -> Ring {
    Ring::new(LaurentRing { base })
}

impl LaurentRing {
    pub fn base(&self) -> &Ring {
        &self.base
    }

    pub fn from_coeffs(&self, lo: i64, c: Vec<Elem>) -> Elem {
        let (lo, c) = laurent_normalize(&self.base, lo, c);
        Elem::Laurent(lo, c)
    }

    fn parts(a: &Elem) -> (i64, &[Elem]) {
        match a {
            Elem::Laurent(lo, c) => (*lo, c),
            other => panic!("expected a Laurent polynomial, found {other:?}"),
        }
    }
}

impl RingImpl for LaurentRing {
    fn kind(&self) -> RingKind {
        RingKind::Laurent
    }

    fn expr(&self) -> String {
        format!("laurent({})", self.base.expr())
    }

    fn size(&self) -> Option<u64> {
        if self.base.size() == Some(1) {
            Some(1)
        } else {
            None
        }
    }

    fn zero(&self) -> Elem {
        Elem::Laurent(0, Vec::new())
    }

    fn one(&self) -> Elem {
        self.from_coeffs(0, vec![self.base.one()])
    }

    fn add(&self, a: &Elem, b: &Elem) -> Elem {
        let ((la, ca), (lb, cb)) = (Self::parts(a), Self::parts(b));
        if ca.is_empty() {
            return b.clone();
        }
        if cb.is_empty() {
            return a.clone();
        }
        let lo = la.min(lb);
        let pad = |l: i64, c: &[Elem]| {
            let mut v = vec![self.base.zero(); (l - lo) as usize];
            v.extend(c.iter().cloned());
            v
        };
        self.from_coeffs(lo, poly_add(&self.base, &pad(la, ca), &pad(lb, cb)))
    }

    fn neg(&self, a: &Elem) -> Elem {
        let (lo, c) = Self::parts(a);
        Elem::Laurent(lo, c.iter().map(|x| self.base.neg(x)).collect())
    }

    fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        let ((la, ca), (lb, cb)) = (Self::parts(a), Self::parts(b));
        let (lo, c) = laurent_mul(&self.base, la, ca, lb, cb);
        self.from_coeffs(lo, c)
    }

    fn element_at(&self, _index: u64) -> Elem {
        self.zero()
    }

    fn index_of(&self, _a: &Elem) -> u64 {
        0
    }

    fn contains(&self, a: &Elem) -> Result<(), String> {
        match a {
            Elem::Laurent(lo, c) => {
                if laurent_normalize(&self.base, *lo, c.clone()) != (*lo, c.clone()) {
                    return Err("Laurent support is not normalized".into());
                }
                check_coeffs(&self.base, c)
            }
            other => Err(format!("expected a Laurent polynomial, found {other:?}")),
        }
    }

    fn write_elem(&self, a: &Elem, out: &mut String) {
        let (lo, c) = Self::parts(a);
        write_terms(&self.base, c.iter().enumerate().map(|(i, x)| (lo + i as i64, x)), out)
    }

    fn parse_elem(&self, cur: &mut Cursor<'_>) -> Result<Elem, LiteralError> {
        let terms = parse_terms(&self.base, cur, true)?;
        let (lo, c) = dense(&self.base, &terms);
        Ok(self.from_coeffs(lo, c))
    }

    fn sample(&self) -> Vec<Elem> {
        sample_polys(&self.base, 3)
            .into_iter()
            .map(|c| self.from_coeffs(-1, c))
            .collect()
    }

    fn commutative_hint(&self) -> Option<bool> {
        Some(self.base.is_commutative())
    }

    fn as_any(&self) -> &dyn Any {
        self
    }
}

/// R[x;σ]/(xᵏ) in either convention; elements are coefficient lists of
/// length exactly k.
pub struct TruncRing {
    base: Ring,
    sigma: Arc<Endomorphism>,
    order: usize,
    conv: Convention,
}

pub fn trunc_ring(
    base: Ring,
    sigma: Arc<Endomorphism>,
    order: usize,
    conv: Convention,
) -> Result<Ring, RingError> {
    let what = || {
        format!(
            "skewtrunc({}, {}, {order}, {})",
            base.expr(),
            sigma.expr(),
            conv.keyword()
        )
    };
    if order < 1 {
        return Err(RingError::construction(what(), "order must be at least 1"));
    }
    if !sigma.ring().same_as(&base) {
        return Err(RingError::construction(what(), "σ is defined on a different ring"));
    }
    Ok(Ring::new(TruncRing {
        base,
        sigma,
        order,
        conv,
    }))
}

impl TruncRing {
    pub fn base(&self) -> &Ring {
        &self.base
    }

    pub fn sigma(&self) -> &Endomorphism {
        &self.sigma
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn convention(&self) -> Convention {
        self.conv
    }

    fn pad(&self, mut c: Vec<Elem>) -> Elem {
        c.truncate(self.order);
        c.resize(self.order, self.base.zero());
        Elem::Coeffs(c)
    }
}

impl RingImpl for TruncRing {
    fn kind(&self) -> RingKind {
        RingKind::SkewTrunc
    }

    fn expr(&self) -> String {
        format!(
            "skewtrunc({}, {}, {}, {})",
            self.base.expr(),
            self.sigma.expr(),
            self.order,
            self.conv.keyword()
        )
    }

    fn size(&self) -> Option<u64> {
        checked_size(self.base.size()?, self.order)
    }

    fn zero(&self) -> Elem {
        self.pad(Vec::new())
    }

    fn one(&self) -> Elem {
        self.pad(vec![self.base.one()])
    }

    fn add(&self, a: &Elem, b: &Elem) -> Elem {
        Elem::Coeffs(poly_add(&self.base, a.coeffs(), b.coeffs()))
    }

    fn neg(&self, a: &Elem) -> Elem {
        Elem::Coeffs(a.coeffs().iter().map(|c| self.base.neg(c)).collect())
    }

    fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        self.pad(skew_mul(
            &self.base,
            &self.sigma,
            self.conv,
            a.coeffs(),
            b.coeffs(),
            Some(self.order),
        ))
    }

    fn element_at(&self, index: u64) -> Elem {
        let q = self.base.size().expect("finite");
        Elem::Coeffs(
            digits(index, q, self.order)
                .into_iter()
                .map(|d| self.base.element_at_unchecked(d))
                .collect(),
        )
    }

    fn index_of(&self, a: &Elem) -> u64 {
        let q = self.base.size().expect("finite");
        undigits(a.coeffs().iter().map(|c| self.base.index_of_unchecked(c)), q)
    }

    fn contains(&self, a: &Elem) -> Result<(), String> {
        match a {
            Elem::Coeffs(c) if c.len() == self.order => check_coeffs(&self.base, c),
            other => Err(format!("expected {} coefficients, found {other:?}", self.order)),
        }
    }

    fn write_elem(&self, a: &Elem, out: &mut String) {
        write_terms(&self.base, a.coeffs().iter().enumerate().map(|(i, c)| (i as i64, c)), out)
    }

    fn parse_elem(&self, cur: &mut Cursor<'_>) -> Result<Elem, LiteralError> {
        let start = cur.pos();
        let terms = parse_terms(&self.base, cur, false)?;
        if let Some((k, _)) = terms.iter().find(|(k, _)| *k as usize >= self.order) {
            return Err(LiteralError {
                column: start + 1,
                message: format!("x^{k} is zero in a quotient by x^{}", self.order),
            });
        }
        Ok(self.pad(dense(&self.base, &terms).1))
    }

    fn sample(&self) -> Vec<Elem> {
        sample_polys(&self.base, self.order)
            .into_iter()
            .filter(|c| c.len() == self.order)
            .map(|c| self.pad(c))
            .collect()
    }

    fn commutative_hint(&self) -> Option<bool> {
        if self.sigma.is_identity() {
            Some(self.base.is_commutative())
        } else {
            None
        }
    }

    fn as_any(&self) -> &dyn Any {
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{gf4, product, zn, EndoSpec};

    fn id(r: &Ring) -> Arc<Endomorphism> {
        Arc::new(Endomorphism::identity(r))
    }

    #[test]
    fn swap_poly_example() {
        let r = product(zn(2).unwrap(), zn(2).unwrap());
        let s = Arc::new(Endomorphism::new(&r, &EndoSpec::Swap).unwrap());
        let p = skew_poly_ring(r, s).unwrap();
        let f = p.parse_elem("(1, 0)*x").unwrap();
        let g = p.parse_elem("(1, 0)").unwrap();
        assert_eq!(p.mul(&f, &g), p.zero());
        assert_eq!(p.mul(&g, &f), f);
    }

    #[test]
    fn constant_idempotent_in_z6_poly() {
        let z6 = zn(6).unwrap();
        let p = skew_poly_ring(z6.clone(), id(&z6)).unwrap();
        let sp = p.downcast::<SkewPolyRing>().unwrap();
        assert!(sp.is_idempotent(&p.parse_elem("3 + 0*x").unwrap()));
        assert!(!sp.is_idempotent(&p.parse_elem("x").unwrap()));
        assert_eq!(p.fmt_elem(&p.parse_elem("3 + 0*x").unwrap()), "3");
    }

    #[test]
    fn laurent_inverse_pair() {
        let z6 = zn(6).unwrap();
        let l = laurent_ring(z6);
        let x = l.parse_elem("x").unwrap();
        let xi = l.parse_elem("x^-1").unwrap();
        assert_eq!(l.mul(&x, &xi), l.one());
        let f = l.parse_elem("3*x^-1 + 3*x").unwrap();
        assert_eq!(l.fmt_elem(&l.mul(&f, &f)), "3*x^-2 + 3*x^2");
    }

    #[test]
    fn truncated_sizes_and_relation() {
        let z6 = zn(6).unwrap();
        let t = trunc_ring(z6.clone(), id(&z6), 3, Convention::Left).unwrap();
        assert_eq!(t.size(), Some(216));
        let x = t.parse_elem("x").unwrap();
        assert_eq!(t.mul(&t.mul(&x, &x), &x), t.zero());
        let f4 = gf4();
        let frob = Arc::new(Endomorphism::new(&f4, &EndoSpec::Frobenius).unwrap());
        let tf = trunc_ring(f4.clone(), frob, 3, Convention::Left).unwrap();
        assert_eq!(tf.size(), Some(64));
        // x·w = w²·x
        let xw = tf.mul(&tf.parse_elem("x").unwrap(), &tf.parse_elem("2").unwrap());
        assert_eq!(tf.fmt_elem(&xw), "3*x");
        assert!(trunc_ring(z6.clone(), id(&z6), 0, Convention::Left).is_err());
    }

    #[test]
    fn right_convention_relation() {
        let r = product(zn(3).unwrap(), zn(3).unwrap());
        let s = Arc::new(Endomorphism::new(&r, &EndoSpec::Swap).unwrap());
        let t = trunc_ring(r, s, 2, Convention::Right).unwrap();
        // b·x = x·σ(b)
        let b = t.parse_elem("(1, 2)").unwrap();
        let x = t.parse_elem("x").unwrap();
        assert_eq!(t.fmt_elem(&t.mul(&b, &x)), "(2, 1)*x");
    }
}
