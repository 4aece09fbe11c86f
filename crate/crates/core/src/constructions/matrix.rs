//! Matrix rings over an arbitrary base, restricted to a [`MatrixShape`].

use std::any::Any;

use crate::kernel::literal::Cursor;
use crate::kernel::ring::{checked_size, digits, Ring, RingImpl, RingKind};
use crate::kernel::{Elem, LiteralError, RingError};

use super::shape::{MatrixShape, ShapeName};

pub struct MatrixRing {
    shape: MatrixShape,
    base: Ring,
    slots: Vec<Vec<(usize, usize)>>,
}

pub fn matrix_ring(shape: MatrixShape, base: Ring) -> Ring {
    let slots = shape.slots();
    Ring::new(MatrixRing { shape, base, slots })
}

/// Checked front end for the DSL: the order must be at least 1 and the fixed
/// 3×3 / 4×4 shapes keep their order.
pub fn matrix_ring_checked(shape: MatrixShape, base: Ring) -> Result<Ring, RingError> {
    if shape.n == 0 {
        return Err(RingError::construction(
            format!("{}(0, {})", shape_prefix(shape.name), base.expr()),
            "matrix order must be at least 1",
        ));
    }
    Ok(matrix_ring(shape, base))
}

fn shape_prefix(name: ShapeName) -> &'static str {
    match name {
        ShapeName::Full => "M",
        ShapeName::Upper => "T",
        ShapeName::ScalarDiagonal => "D",
        ShapeName::Band => "V",
        ShapeName::S3 => "S3",
        ShapeName::S4 => "S4",
    }
}

impl MatrixRing {
    pub fn shape(&self) -> &MatrixShape {
        &self.shape
    }

    pub fn base(&self) -> &Ring {
        &self.base
    }

    pub fn n(&self) -> usize {
        self.shape.n
    }

    /// Matrix from a row-major grid of base elements (no shape check).
    pub fn from_grid(&self, grid: Vec<Elem>) -> Elem {
        Elem::Matrix(grid)
    }

    pub fn entry<'a>(&self, a: &'a Elem, i: usize, j: usize) -> &'a Elem {
        &a.matrix()[i * self.shape.n + j]
    }

    /// E_{ij} with 1-based indices; rejected when (i, j) is not a free
    /// position of the shape on its own.
    pub fn elementary(&self, i: usize, j: usize) -> Result<Elem, RingError> {
        let n = self.shape.n;
        let what = || format!("E{i}{j} in {}", self.expr());
        if i == 0 || j == 0 || i > n || j > n {
            return Err(RingError::construction(what(), "index out of range"));
        }
        let mut grid = vec![self.base.zero(); n * n];
        grid[(i - 1) * n + (j - 1)] = self.base.one();
        let e = Elem::Matrix(grid);
        self.contains(&e)
            .map_err(|reason| RingError::construction(what(), format!("out of shape: {reason}")))?;
        Ok(e)
    }

    /// Diagonal matrix with the given diagonal entries.
    pub fn diagonal(&self, diag: &[Elem]) -> Elem {
        let n = self.shape.n;
        let mut grid = vec![self.base.zero(); n * n];
        for (k, d) in diag.iter().enumerate() {
            grid[k * n + k] = d.clone();
        }
        Elem::Matrix(grid)
    }

    pub fn scalar(&self, c: &Elem) -> Elem {
        self.diagonal(&vec![c.clone(); self.shape.n])
    }
}

impl RingImpl for MatrixRing {
    fn kind(&self) -> RingKind {
        RingKind::Matrix
    }

    fn expr(&self) -> String {
        match self.shape.name {
            ShapeName::S3 | ShapeName::S4 => {
                format!("{}({})", shape_prefix(self.shape.name), self.base.expr())
            }
            name => format!("{}({}, {})", shape_prefix(name), self.shape.n, self.base.expr()),
        }
    }

    fn size(&self) -> Option<u64> {
        checked_size(self.base.size()?, self.slots.len())
    }

    fn zero(&self) -> Elem {
        let n = self.shape.n;
        Elem::Matrix(vec![self.base.zero(); n * n])
    }

    fn one(&self) -> Elem {
        self.scalar(&self.base.one())
    }

    fn add(&self, a: &Elem, b: &Elem) -> Elem {
        let (a, b) = (a.matrix(), b.matrix());
        Elem::Matrix(a.iter().zip(b).map(|(x, y)| self.base.add(x, y)).collect())
    }

    fn neg(&self, a: &Elem) -> Elem {
        Elem::Matrix(a.matrix().iter().map(|x| self.base.neg(x)).collect())
    }

    fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        let n = self.shape.n;
        let (a, b) = (a.matrix(), b.matrix());
        let r = &self.base;
        let zero = r.zero();
        let mut out = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let (lo, hi) = if self.shape.upper { (i, j + 1) } else { (0, n) };
                let mut acc = zero.clone();
                for k in lo..hi.max(lo) {
                    let (x, y) = (&a[i * n + k], &b[k * n + j]);
                    if *x == zero || *y == zero {
                        continue;
                    }
                    acc = r.add(&acc, &r.mul(x, y));
                }
                out.push(acc);
            }
        }
        Elem::Matrix(out)
    }

    fn element_at(&self, index: u64) -> Elem {
        let q = self.base.size().expect("finite");
        let n = self.shape.n;
        let mut grid = vec![self.base.zero(); n * n];
        for (slot, d) in self.slots.iter().zip(digits(index, q, self.slots.len())) {
            let v = self.base.element_at_unchecked(d);
            for &(i, j) in slot {
                grid[i * n + j] = v.clone();
            }
        }
        Elem::Matrix(grid)
    }

    fn index_of(&self, a: &Elem) -> u64 {
        let q = self.base.size().expect("finite");
        let n = self.shape.n;
        let m = a.matrix();
        self.slots.iter().rev().fold(0u64, |acc, slot| {
            let (i, j) = slot[0];
            acc * q + self.base.index_of_unchecked(&m[i * n + j])
        })
    }

    fn contains(&self, a: &Elem) -> Result<(), String> {
        let n = self.shape.n;
        let m = match a {
            Elem::Matrix(m) if m.len() == n * n => m,
            other => return Err(format!("expected a {n}×{n} matrix, found {other:?}")),
        };
        for (k, x) in m.iter().enumerate() {
            self.base
                .check(x)
                .map_err(|e| format!("entry ({}, {}): {e}", k / n + 1, k % n + 1))?;
            if !self.shape.allows(k / n, k % n) && !self.base.is_zero(x) {
                return Err(format!("entry ({}, {}) must be zero", k / n + 1, k % n + 1));
            }
        }
        for slot in &self.slots {
            let (i, j) = slot[0];
            if let Some(&(a, b)) = slot.iter().find(|&&(a, b)| m[a * n + b] != m[i * n + j]) {
                return Err(format!(
                    "entries ({}, {}) and ({}, {}) must be equal",
                    i + 1,
                    j + 1,
                    a + 1,
                    b + 1
                ));
            }
        }
        Ok(())
    }

    fn write_elem(&self, a: &Elem, out: &mut String) {
        let n = self.shape.n;
        let m = a.matrix();
        out.push('[');
        for i in 0..n {
            if i > 0 {
                out.push_str(", ");
            }
            out.push('[');
            for j in 0..n {
                if j > 0 {
                    out.push_str(", ");
                }
                self.base.write_elem(&m[i * n + j], out);
            }
            out.push(']');
        }
        out.push(']');
    }

    fn parse_elem(&self, cur: &mut Cursor<'_>) -> Result<Elem, LiteralError> {
        let n = self.shape.n;
        let rows = cur.list('[', ']', |c| c.list('[', ']', |c| self.base.parse_elem_at(c)))?;
        if rows.len() != n || rows.iter().any(|r| r.len() != n) {
            return Err(cur.error(format!("expected a {n}×{n} grid")));
        }
        Ok(Elem::Matrix(rows.into_iter().flatten().collect()))
    }

    fn sample(&self) -> Vec<Elem> {
        let base: Vec<Elem> = self.base.check_set().into_iter().take(3).collect();
        let n = self.shape.n;
        let mut out = vec![self.zero(), self.one()];
        for slot in &self.slots {
            for v in &base {
                let mut grid = vec![self.base.zero(); n * n];
                for &(i, j) in slot {
                    grid[i * n + j] = v.clone();
                }
                out.push(Elem::Matrix(grid.clone()));
                out.push(self.add(&Elem::Matrix(grid), &self.one()));
            }
        }
        out.sort();
        out.dedup();
        out
    }

    fn commutative_hint(&self) -> Option<bool> {
        match self.shape.name {
            _ if self.shape.n == 1 => Some(self.base.is_commutative()),
            ShapeName::Band => Some(self.base.is_commutative()),
            ShapeName::ScalarDiagonal if self.shape.n == 2 => Some(self.base.is_commutative()),
            _ if self.base.size() == Some(1) => Some(true),
            _ => Some(false),
        }
    }

    fn as_any(&self) -> &dyn Any {
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{gf, zn};

    #[test]
    fn sizes() {
        let z2 = zn(2).unwrap();
        assert_eq!(matrix_ring(MatrixShape::upper(3), z2.clone()).size(), Some(64));
        assert_eq!(matrix_ring(MatrixShape::upper(2), z2.clone()).size(), Some(8));
        assert_eq!(matrix_ring(MatrixShape::scalar_diagonal(5), z2.clone()).size(), Some(2048));
        assert_eq!(matrix_ring(MatrixShape::s4(), gf(2).unwrap()).size(), Some(256));
        assert_eq!(matrix_ring(MatrixShape::band(3), zn(6).unwrap()).size(), Some(216));
    }

    #[test]
    fn elementary_products() {
        let t3 = matrix_ring(MatrixShape::upper(3), zn(2).unwrap());
        let m = t3.downcast::<MatrixRing>().unwrap();
        let e = |i, j| m.elementary(i, j).unwrap();
        assert_eq!(t3.mul(&e(1, 2), &e(2, 3)), e(1, 3));
        assert_eq!(t3.mul(&e(2, 3), &e(1, 2)), t3.zero());
        let id = t3.add(&t3.add(&e(1, 1), &e(2, 2)), &e(3, 3));
        assert_eq!(id, t3.one());
        assert!(m.elementary(2, 1).is_err());
        let d3 = matrix_ring(MatrixShape::scalar_diagonal(3), zn(2).unwrap());
        assert!(d3.downcast::<MatrixRing>().unwrap().elementary(1, 1).is_err());
    }

    #[test]
    fn enumeration_is_a_bijection() {
        let r = matrix_ring(MatrixShape::s3(), zn(3).unwrap());
        let elems = r.elements().unwrap();
        assert_eq!(elems.len(), 243);
        for (i, a) in elems.iter().enumerate() {
            assert!(r.contains(a));
            assert_eq!(r.index_of(a).unwrap(), i as u64);
        }
    }

    #[test]
    fn literal_round_trip() {
        let r = matrix_ring(MatrixShape::full(2), zn(6).unwrap());
        let a = r.parse_elem("[[1, 2], [3, 5]]").unwrap();
        assert_eq!(r.fmt_elem(&a), "[[1, 2], [3, 5]]");
        let t = matrix_ring(MatrixShape::upper(2), zn(6).unwrap());
        assert!(t.parse_elem("[[1, 2], [3, 5]]").is_err());
    }

    #[test]
    fn t2_enumeration_puts_e11_before_e12() {
        let r = matrix_ring(MatrixShape::upper(2), zn(2).unwrap());
        let m = r.downcast::<MatrixRing>().unwrap();
        assert_eq!(r.index_of(&m.elementary(1, 1).unwrap()).unwrap(), 1);
        assert_eq!(r.index_of(&m.elementary(1, 2).unwrap()).unwrap(), 2);
    }
}
