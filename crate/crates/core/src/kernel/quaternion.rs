//! Quaternion algebras H(R) = R⟨i, j⟩ with i² = j² = k² = −1, ij = k = −ji.

use std::any::Any;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::elem::Elem;
use super::error::{LiteralError, RingError};
use super::literal::Cursor;
use super::ring::{checked_size, digits, undigits, Ring, RingImpl, RingKind};

pub struct Quaternions {
    base: Ring,
}

impl Quaternions {
    pub fn base(&self) -> &Ring {
        &self.base
    }

    /// Whether literals use the `a+bi+cj+dk` form (integer-like coefficients).
    fn integer_coeffs(&self) -> bool {
        matches!(
            self.base.kind(),
            super::ring::RingKind::Residues | super::ring::RingKind::Integers
        )
    }

    fn coeff_int(&self, c: &Elem) -> BigInt {
        match c {
            Elem::Int(n) => n.clone(),
            Elem::Res(r) => BigInt::from(*r),
            other => panic!("integer-like coefficient expected, found {other:?}"),
        }
    }
}

/// H(base); the base must be commutative.
pub fn quaternions(base: Ring) -> Result<Ring, RingError> {
    if !base.is_commutative() {
        return Err(RingError::construction(
            format!("H({})", base.expr()),
            "quaternions need a commutative base",
        ));
    }
    Ok(Ring::new(Quaternions { base }))
}

const UNITS: [&str; 4] = ["", "i", "j", "k"];

impl RingImpl for Quaternions {
    fn kind(&self) -> RingKind {
        RingKind::Quaternions
    }

    fn expr(&self) -> String {
        format!("H({})", self.base.expr())
    }

    fn size(&self) -> Option<u64> {
        checked_size(self.base.size()?, 4)
    }

    fn zero(&self) -> Elem {
        let z = self.base.zero();
        Elem::Quat(Box::new([z.clone(), z.clone(), z.clone(), z]))
    }

    fn one(&self) -> Elem {
        let z = self.base.zero();
        Elem::Quat(Box::new([self.base.one(), z.clone(), z.clone(), z]))
    }

    fn add(&self, a: &Elem, b: &Elem) -> Elem {
        let (a, b) = (a.quat(), b.quat());
        let r = &self.base;
        Elem::Quat(Box::new([
            r.add(&a[0], &b[0]),
            r.add(&a[1], &b[1]),
            r.add(&a[2], &b[2]),
            r.add(&a[3], &b[3]),
        ]))
    }

    fn neg(&self, a: &Elem) -> Elem {
        let a = a.quat();
        let r = &self.base;
        Elem::Quat(Box::new([r.neg(&a[0]), r.neg(&a[1]), r.neg(&a[2]), r.neg(&a[3])]))
    }

    fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        let (a, b) = (a.quat(), b.quat());
        let r = &self.base;
        let m = |x: usize, y: usize| r.mul(&a[x], &b[y]);
        let sum = |terms: [(bool, Elem); 4]| {
            terms.into_iter().fold(r.zero(), |acc, (plus, t)| {
                if plus {
                    r.add(&acc, &t)
                } else {
                    r.sub(&acc, &t)
                }
            })
        };
        Elem::Quat(Box::new([
            sum([(true, m(0, 0)), (false, m(1, 1)), (false, m(2, 2)), (false, m(3, 3))]),
            sum([(true, m(0, 1)), (true, m(1, 0)), (true, m(2, 3)), (false, m(3, 2))]),
            sum([(true, m(0, 2)), (false, m(1, 3)), (true, m(2, 0)), (true, m(3, 1))]),
            sum([(true, m(0, 3)), (true, m(1, 2)), (false, m(2, 1)), (true, m(3, 0))]),
        ]))
    }

    fn element_at(&self, index: u64) -> Elem {
        let q = self.base.size().expect("finite");
        let d = digits(index, q, 4);
        Elem::Quat(Box::new([
            self.base.element_at_unchecked(d[0]),
            self.base.element_at_unchecked(d[1]),
            self.base.element_at_unchecked(d[2]),
            self.base.element_at_unchecked(d[3]),
        ]))
    }

    fn index_of(&self, a: &Elem) -> u64 {
        let q = self.base.size().expect("finite");
        undigits(a.quat().iter().map(|c| self.base.index_of_unchecked(c)), q)
    }

    fn contains(&self, a: &Elem) -> Result<(), String> {
        match a {
            Elem::Quat(q) => q
                .iter()
                .try_for_each(|c| self.base.check(c).map_err(|e| e.to_string())),
            other => Err(format!("expected a quaternion, found {other:?}")),
        }
    }

    fn write_elem(&self, a: &Elem, out: &mut String) {
        let q = a.quat();
        if !self.integer_coeffs() {
            out.push_str("q(");
            for (i, c) in q.iter().enumerate() {
                if i > 0 {
                    out.push_str(", ");
                }
                self.base.write_elem(c, out);
            }
            out.push(')');
            return;
        }
        let mut first = true;
        for (c, unit) in q.iter().zip(UNITS) {
            let v = self.coeff_int(c);
            if v.is_zero() {
                continue;
            }
            let mag = v.abs();
            if v.is_negative() {
                out.push('-');
            } else if !first {
                out.push('+');
            }
            if unit.is_empty() || mag != BigInt::from(1) {
                out.push_str(&mag.to_string());
            }
            out.push_str(unit);
            first = false;
        }
        if first {
            out.push('0');
        }
    }

    fn parse_elem(&self, cur: &mut Cursor<'_>) -> Result<Elem, LiteralError> {
        if !self.integer_coeffs() {
            cur.expect('q')?;
            let parts = cur.list('(', ')', |c| self.base.parse_elem_at(c))?;
            let parts: [Elem; 4] = parts
                .try_into()
                .map_err(|_| cur.error("quaternion needs four coefficients"))?;
            return Ok(Elem::Quat(Box::new(parts)));
        }
        let mut coeffs = [BigInt::zero(), BigInt::zero(), BigInt::zero(), BigInt::zero()];
        let mut first = true;
        loop {
            let sign = match cur.peek() {
                Some('+') if !first => {
                    cur.bump();
                    1
                }
                Some('-') => {
                    cur.bump();
                    -1
                }
                _ if first => 1,
                _ => break,
            };
            cur.skip_ws();
            let mag = match cur.peek_raw() {
                Some(c) if c.is_ascii_digit() => Some(cur.uint()?),
                _ => None,
            };
            let unit = match cur.peek_raw() {
                Some('i') => 1,
                Some('j') => 2,
                Some('k') => 3,
                _ => 0,
            };
            if unit > 0 {
                cur.bump();
            } else if mag.is_none() {
                return Err(cur.error("expected a quaternion term"));
            }
            let mag = mag.unwrap_or_else(|| BigInt::from(1));
            coeffs[unit] += mag * sign;
            first = false;
        }
        let [a, b, c, d] = coeffs;
        Ok(Elem::Quat(Box::new([
            self.base.from_int(&a),
            self.base.from_int(&b),
            self.base.from_int(&c),
            self.base.from_int(&d),
        ])))
    }

    fn sample(&self) -> Vec<Elem> {
        let cs = self.base.check_set();
        let cs: Vec<Elem> = cs.into_iter().take(3).collect();
        let mut out = Vec::new();
        for a in &cs {
            for b in &cs {
                for c in &cs {
                    for d in &cs {
                        out.push(Elem::Quat(Box::new([a.clone(), b.clone(), c.clone(), d.clone()])));
                    }
                }
            }
        }
        out
    }

    fn as_any(&self) -> &dyn Any {
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::base::{integers, zn};

    fn q(r: &Ring, s: &str) -> Elem {
        r.parse_elem(s).unwrap()
    }

    #[test]
    fn unit_table() {
        let h = quaternions(integers()).unwrap();
        assert_eq!(h.mul(&q(&h, "i"), &q(&h, "i")), q(&h, "-1"));
        assert_eq!(h.mul(&q(&h, "i"), &q(&h, "j")), q(&h, "k"));
        assert_eq!(h.mul(&q(&h, "j"), &q(&h, "i")), q(&h, "-k"));
        assert_eq!(h.mul(&q(&h, "k"), &q(&h, "j")), q(&h, "-i"));
        assert_eq!(h.mul(&q(&h, "j"), &q(&h, "k")), q(&h, "i"));
        assert_eq!(h.mul(&q(&h, "k"), &q(&h, "i")), q(&h, "j"));
        assert_eq!(h.mul(&q(&h, "1+i"), &q(&h, "1-i")), q(&h, "2"));
    }

    #[test]
    fn over_z2_i_squared_is_one() {
        let h = quaternions(zn(2).unwrap()).unwrap();
        assert_eq!(h.size(), Some(16));
        assert_eq!(h.mul(&q(&h, "i"), &q(&h, "i")), h.one());
        assert_eq!(h.fmt_elem(&h.mul(&q(&h, "i"), &q(&h, "i"))), "1");
    }

    #[test]
    fn literal_round_trip() {
        let h = quaternions(integers()).unwrap();
        for s in ["0", "1", "-1", "2j", "1+2i-3j+k", "-i-k", "7-2k"] {
            let e = q(&h, s);
            assert_eq!(h.fmt_elem(&e), s);
        }
    }

    #[test]
    fn noncommutative_base_rejected() {
        let m = crate::constructions::matrix::matrix_ring(
            crate::constructions::shape::MatrixShape::upper(2),
            zn(2).unwrap(),
        );
        assert!(quaternions(m).is_err());
    }
}
