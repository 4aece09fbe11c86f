//! Rings given by explicit addition and multiplication tables.
//!
//! File format: a first line `order n`, then `n` rows of the addition table,
//! a blank line, then `n` rows of the multiplication table. Entries are
//! 0-based element indices separated by whitespace.

use std::any::Any;
use std::fmt::Write as _;
use std::path::Path;

use num_traits::ToPrimitive;

use super::elem::Elem;
use super::error::{LiteralError, RingError};
use super::literal::Cursor;
use super::ring::{Ring, RingImpl, RingKind};

#[derive(Debug)]
pub struct TableRing {
    name: String,
    order: usize,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    zero: u32,
    one: u32,
}

impl TableRing {
    pub fn order(&self) -> usize {
        self.order
    }

    fn at(&self, table: &[u32], a: u32, b: u32) -> u32 {
        table[a as usize * self.order + b as usize]
    }
}

/// Validates the ring axioms (O(n³)) and builds the ring. `name` is the DSL
/// expression the ring prints as.
pub fn table_ring(name: impl Into<String>, add: Vec<u32>, mul: Vec<u32>) -> Result<Ring, RingError> {
    Ok(Ring::new(validate_tables(name.into(), add, mul)?))
}

fn axiom(law: &str, inputs: impl Into<String>) -> RingError {
    RingError::Axiom {
        law: law.to_string(),
        inputs: inputs.into(),
    }
}

fn validate_tables(name: String, add: Vec<u32>, mul: Vec<u32>) -> Result<TableRing, RingError> {
    let n = (add.len() as f64).sqrt().round() as usize;
    if n == 0 || n * n != add.len() || mul.len() != add.len() {
        return Err(RingError::TableFormat(format!(
            "tables must be square and of equal order (got {} and {} entries)",
            add.len(),
            mul.len()
        )));
    }
    if let Some(bad) = add.iter().chain(mul.iter()).find(|&&v| v as usize >= n) {
        return Err(RingError::TableFormat(format!("entry {bad} out of range for order {n}")));
    }
    let at = |t: &[u32], a: usize, b: usize| t[a * n + b] as usize;

    for a in 0..n {
        for b in 0..n {
            if at(&add, a, b) != at(&add, b, a) {
                return Err(axiom("a+b = b+a", format!("({a}, {b})")));
            }
            for c in 0..n {
                if at(&add, at(&add, a, b), c) != at(&add, a, at(&add, b, c)) {
                    return Err(axiom("(a+b)+c = a+(b+c)", format!("({a}, {b}, {c})")));
                }
                if at(&mul, at(&mul, a, b), c) != at(&mul, a, at(&mul, b, c)) {
                    return Err(axiom("(ab)c = a(bc)", format!("({a}, {b}, {c})")));
                }
                if at(&mul, a, at(&add, b, c)) != at(&add, at(&mul, a, b), at(&mul, a, c)) {
                    return Err(axiom("a(b+c) = ab+ac", format!("({a}, {b}, {c})")));
                }
                if at(&mul, at(&add, a, b), c) != at(&add, at(&mul, a, c), at(&mul, b, c)) {
                    return Err(axiom("(a+b)c = ac+bc", format!("({a}, {b}, {c})")));
                }
            }
        }
    }
    let zero = (0..n)
        .find(|&z| (0..n).all(|a| at(&add, z, a) == a))
        .ok_or_else(|| axiom("additive identity exists", "all candidates"))?;
    let mut neg = Vec::with_capacity(n);
    for a in 0..n {
        let inv = (0..n)
            .find(|&b| at(&add, a, b) == zero)
            .ok_or_else(|| axiom("additive inverse exists", format!("({a})")))?;
        neg.push(inv as u32);
    }
    let one = (0..n)
        .find(|&u| (0..n).all(|a| at(&mul, u, a) == a && at(&mul, a, u) == a))
        .ok_or_else(|| axiom("two-sided unity exists", "all candidates"))?;
    Ok(TableRing {
        name,
        order: n,
        add,
        mul,
        neg,
        zero: zero as u32,
        one: one as u32,
    })
}

/// Parses the table file format.
pub fn parse_tables(text: &str) -> Result<(Vec<u32>, Vec<u32>), RingError> {
    let mut lines = text.lines().map(str::trim);
    let header = lines
        .by_ref()
        .find(|l| !l.is_empty())
        .ok_or_else(|| RingError::TableFormat("empty file".into()))?;
    let n: usize = header
        .strip_prefix("order")
        .and_then(|rest| rest.trim().parse().ok())
        .ok_or_else(|| RingError::TableFormat(format!("expected `order n`, found `{header}`")))?;
    let rows: Vec<&str> = lines.collect();
    let blocks: Vec<Vec<&str>> = rows
        .split(|l| l.is_empty())
        .map(|b| b.to_vec())
        .filter(|b| !b.is_empty())
        .collect();
    if blocks.len() != 2 {
        return Err(RingError::TableFormat(format!(
            "expected two tables separated by a blank line, found {}",
            blocks.len()
        )));
    }
    let mut tables = Vec::new();
    for (name, block) in ["add", "mul"].iter().zip(&blocks) {
        if block.len() != n {
            return Err(RingError::TableFormat(format!(
                "{name} table has {} rows, expected {n}",
                block.len()
            )));
        }
        let mut t = Vec::with_capacity(n * n);
        for (r, row) in block.iter().enumerate() {
            let entries: Vec<u32> = row
                .split_whitespace()
                .map(|x| {
                    x.parse().map_err(|_| {
                        RingError::TableFormat(format!("{name} row {r}: bad entry `{x}`"))
                    })
                })
                .collect::<Result<_, _>>()?;
            if entries.len() != n {
                return Err(RingError::TableFormat(format!(
                    "{name} row {r} has {} entries, expected {n}",
                    entries.len()
                )));
            }
            t.extend(entries);
        }
        tables.push(t);
    }
    let mul = tables.pop().expect("two tables");
    let add = tables.pop().expect("two tables");
    Ok((add, mul))
}

/// Renders tables in the file format.
pub fn format_tables(add: &[u32], mul: &[u32]) -> String {
    let n = (add.len() as f64).sqrt().round() as usize;
    let mut s = format!("order {n}\n");
    for (i, t) in [add, mul].iter().enumerate() {
        if i == 1 {
            s.push('\n');
        }
        for row in t.chunks(n) {
            let cells: Vec<String> = row.iter().map(u32::to_string).collect();
            let _ = writeln!(s, "{}", cells.join(" "));
        }
    }
    s
}

/// Loads a table ring from a file; the ring prints as `table(<path>)`.
pub fn load_table_ring(path: &Path) -> Result<Ring, RingError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| RingError::TableFormat(format!("{}: {e}", path.display())))?;
    let (add, mul) = parse_tables(&text)?;
    table_ring(format!("table({})", path.display()), add, mul)
}

/// GF(4) = {0, 1, w, w+1} with w² = w + 1, as indices 0, 1, 2, 3.
pub fn gf4() -> Ring {
    let add = (0..16u32).map(|k| (k / 4) ^ (k % 4)).collect();
    #[rustfmt::skip]
    let mul = vec![
        0, 0, 0, 0,
        0, 1, 2, 3,
        0, 2, 3, 1,
        0, 3, 1, 2,
    ];
    table_ring("GF4", add, mul).expect("GF(4) tables are a field")
}

impl RingImpl for TableRing {
    fn kind(&self) -> RingKind {
        RingKind::Table
    }

    fn expr(&self) -> String {
        self.name.clone()
    }

    fn size(&self) -> Option<u64> {
        Some(self.order as u64)
    }

    fn zero(&self) -> Elem {
        Elem::Table(self.zero)
    }

    fn one(&self) -> Elem {
        Elem::Table(self.one)
    }

    fn add(&self, a: &Elem, b: &Elem) -> Elem {
        Elem::Table(self.at(&self.add, a.table(), b.table()))
    }

    fn neg(&self, a: &Elem) -> Elem {
        Elem::Table(self.neg[a.table() as usize])
    }

    fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        Elem::Table(self.at(&self.mul, a.table(), b.table()))
    }

    fn element_at(&self, index: u64) -> Elem {
        Elem::Table(index as u32)
    }

    fn index_of(&self, a: &Elem) -> u64 {
        a.table() as u64
    }

    fn contains(&self, a: &Elem) -> Result<(), String> {
        match a {
            Elem::Table(t) if (*t as usize) < self.order => Ok(()),
            other => Err(format!("expected a table index below {}, found {other:?}", self.order)),
        }
    }

    fn write_elem(&self, a: &Elem, out: &mut String) {
        out.push_str(&a.table().to_string());
    }

    fn parse_elem(&self, cur: &mut Cursor<'_>) -> Result<Elem, LiteralError> {
        let start = cur.pos();
        let v = cur.uint()?;
        match v.to_u32() {
            Some(t) if (t as usize) < self.order => Ok(Elem::Table(t)),
            _ => Err(LiteralError {
                column: start + 1,
                message: format!("table index {v} out of range for order {}", self.order),
            }),
        }
    }

    fn as_any(&self) -> &dyn Any {
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::base::zn;

    #[test]
    fn gf4_is_a_field_of_order_four() {
        let f = gf4();
        assert_eq!(f.size(), Some(4));
        let elems = f.elements().unwrap();
        let idem: Vec<_> = elems.iter().filter(|a| f.mul(a, a) == **a).cloned().collect();
        assert_eq!(idem, vec![Elem::Table(0), Elem::Table(1)]);
        for a in &elems[1..] {
            assert!(elems.iter().any(|b| f.mul(a, b) == f.one()), "{a:?} has an inverse");
        }
    }

    #[test]
    fn z2_tables_match_builtin() {
        let t = table_ring("Z2t", vec![0, 1, 1, 0], vec![0, 0, 0, 1]).unwrap();
        let z = zn(2).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                let (a, b) = (Elem::Table(i), Elem::Table(j));
                let (x, y) = (Elem::Res(i as u64), Elem::Res(j as u64));
                assert_eq!(t.add(&a, &b).table() as u64, z.add(&x, &y).res());
                assert_eq!(t.mul(&a, &b).table() as u64, z.mul(&x, &y).res());
            }
        }
    }

    #[test]
    fn missing_unity_is_rejected() {
        // Z2 addition with the zero multiplication.
        let err = table_ring("bad", vec![0, 1, 1, 0], vec![0, 0, 0, 0]).unwrap_err();
        assert!(matches!(err, RingError::Axiom { ref law, .. } if law.contains("unity")), "{err}");
    }

    #[test]
    fn non_associative_multiplication_names_a_triple() {
        // Order 3 with Z3 addition and a multiplication that is not associative.
        let add = vec![0, 1, 2, 1, 2, 0, 2, 0, 1];
        let mul = vec![0, 0, 0, 0, 1, 2, 0, 2, 2];
        let err = table_ring("bad", add, mul).unwrap_err();
        match err {
            RingError::Axiom { inputs, .. } => assert!(inputs.starts_with('(')),
            other => panic!("unexpected {other}"),
        }
    }

    #[test]
    fn file_format_round_trips() {
        let f = gf4();
        let t = f.downcast::<TableRing>().unwrap();
        let text = format_tables(&t.add, &t.mul);
        assert!(text.starts_with("order 4\n"));
        let (add, mul) = parse_tables(&text).unwrap();
        assert_eq!(add, t.add);
        assert_eq!(mul, t.mul);
    }

    #[test]
    fn malformed_file_is_reported() {
        assert!(parse_tables("order 2\n0 1\n1 0\n").is_err());
        assert!(parse_tables("size 2\n").is_err());
        assert!(parse_tables("order 2\n0 1\n1\n\n0 0\n0 1\n").is_err());
    }
}
