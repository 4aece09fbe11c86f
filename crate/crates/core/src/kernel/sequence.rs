//! Eventually constant sequences (a₁, a₂, …) with aᵢ = a_L for i ≥ L.
//!
//! Elements are stored as the shortest prefix whose last entry repeats
//! forever, so `(0, 1, 0, 0)` and `(0, 1, 0)` are the same sequence.

use std::any::Any;

use super::elem::Elem;
use super::error::{LiteralError, RingError};
use super::literal::Cursor;
use super::ring::{Ring, RingImpl, RingKind};

pub struct Sequences {
    base: Ring,
    len: usize,
}

impl Sequences {
    pub fn base(&self) -> &Ring {
        &self.base
    }

    /// Number of explicit positions before the tail repeats.
    pub fn window(&self) -> usize {
        self.len
    }

    pub fn pad(&self, a: &Elem) -> Vec<Elem> {
        let mut v = a.tuple().to_vec();
        let last = v.last().cloned().expect("nonempty prefix");
        v.resize(self.len, last);
        v
    }

    pub fn canonical(mut v: Vec<Elem>) -> Elem {
        while v.len() > 1 && v[v.len() - 1] == v[v.len() - 2] {
            v.pop();
        }
        Elem::Tuple(v)
    }

    /// (a₁, a₂, …) ↦ (a₂, a₃, …).
    pub fn shift(&self, a: &Elem) -> Elem {
        let mut v = self.pad(a);
        let last = v[self.len - 1].clone();
        v.remove(0);
        v.push(last);
        Self::canonical(v)
    }

    fn pointwise(&self, a: &Elem, b: &Elem, f: impl Fn(&Elem, &Elem) -> Elem) -> Elem {
        let (a, b) = (self.pad(a), self.pad(b));
        Self::canonical(a.iter().zip(&b).map(|(x, y)| f(x, y)).collect())
    }
}

/// Eventually constant sequences over `base` with constant tails from
/// position `len` on.
pub fn ec_sequences(base: Ring, len: usize) -> Result<Ring, RingError> {
    if len < 2 {
        return Err(RingError::construction(
            format!("ecseq({}, {len})", base.expr()),
            "length must be at least 2",
        ));
    }
    Ok(Ring::new(Sequences { base, len }))
}

impl RingImpl for Sequences {
    fn kind(&self) -> RingKind {
        RingKind::Sequences
    }

    fn expr(&self) -> String {
        format!("ecseq({}, {})", self.base.expr(), self.len)
    }

    fn size(&self) -> Option<u64> {
        None
    }

    fn zero(&self) -> Elem {
        Elem::Tuple(vec![self.base.zero()])
    }

    fn one(&self) -> Elem {
        Elem::Tuple(vec![self.base.one()])
    }

    fn add(&self, a: &Elem, b: &Elem) -> Elem {
        self.pointwise(a, b, |x, y| self.base.add(x, y))
    }

    fn neg(&self, a: &Elem) -> Elem {
        Self::canonical(self.pad(a).iter().map(|x| self.base.neg(x)).collect())
    }

    fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        self.pointwise(a, b, |x, y| self.base.mul(x, y))
    }

    fn element_at(&self, _index: u64) -> Elem {
        unreachable!("sequence rings are arithmetic only")
    }

    fn index_of(&self, _a: &Elem) -> u64 {
        unreachable!("sequence rings are arithmetic only")
    }

    fn contains(&self, a: &Elem) -> Result<(), String> {
        match a {
            Elem::Tuple(t) if !t.is_empty() && t.len() <= self.len => {
                if t.len() > 1 && t[t.len() - 1] == t[t.len() - 2] {
                    return Err("sequence prefix is not trimmed".into());
                }
                t.iter()
                    .try_for_each(|x| self.base.check(x).map_err(|e| e.to_string()))
            }
            other => Err(format!("expected a prefix of length 1..={}, found {other:?}", self.len)),
        }
    }

    fn write_elem(&self, a: &Elem, out: &mut String) {
        out.push('(');
        for (i, x) in self.pad(a).iter().enumerate() {
            if i > 0 {
                out.push_str(", ");
            }
            self.base.write_elem(x, out);
        }
        out.push(')');
    }

    fn parse_elem(&self, cur: &mut Cursor<'_>) -> Result<Elem, LiteralError> {
        let items = cur.list('(', ')', |c| self.base.parse_elem_at(c))?;
        if items.is_empty() || items.len() > self.len {
            return Err(cur.error(format!(
                "sequence literal needs 1..={} entries, found {}",
                self.len,
                items.len()
            )));
        }
        Ok(Self::canonical(items))
    }

    fn sample(&self) -> Vec<Elem> {
        let base = self.base.check_set();
        let base: Vec<Elem> = match self.base.size() {
            Some(q) if super::ring::checked_size(q, self.len).is_some_and(|n| n <= 4096) => base,
            _ => base.into_iter().take(3).collect(),
        };
        let mut out: Vec<Vec<Elem>> = vec![Vec::new()];
        for _ in 0..self.len {
            out = out
                .into_iter()
                .flat_map(|p| {
                    base.iter().map(move |x| {
                        let mut q = p.clone();
                        q.push(x.clone());
                        q
                    })
                })
                .collect();
        }
        out.into_iter().map(Self::canonical).collect()
    }

    fn commutative_hint(&self) -> Option<bool> {
        Some(self.base.is_commutative())
    }

    fn as_any(&self) -> &dyn Any {
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::base::zn;

    fn seq() -> Ring {
        ec_sequences(zn(2).unwrap(), 4).unwrap()
    }

    #[test]
    fn pointwise_product() {
        let r = seq();
        let a = r.parse_elem("(0,1,1,0)").unwrap();
        let b = r.parse_elem("(0,1,0,0)").unwrap();
        assert_eq!(r.mul(&a, &b), b);
        assert_eq!(r.fmt_elem(&b), "(0, 1, 0, 0)");
    }

    #[test]
    fn shift_fixes_one_and_kills_first_unit_vector() {
        let r = seq();
        let s = r.downcast::<Sequences>().unwrap();
        assert_eq!(s.shift(&r.one()), r.one());
        let e1 = r.parse_elem("(1,0,0,0)").unwrap();
        assert_eq!(s.shift(&e1), r.zero());
    }

    #[test]
    fn trimmed_normal_form_is_unique() {
        let r = seq();
        assert_eq!(r.parse_elem("(1,1,1,1)").unwrap(), r.parse_elem("(1)").unwrap());
        assert!(r.parse_elem("(1,1,1,1,1)").is_err());
        assert_eq!(r.sample().len(), 16);
    }
}
