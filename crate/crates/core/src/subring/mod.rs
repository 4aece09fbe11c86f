//! Subrings of T_n(GF(p)) between a given subring and the whole ring, and
//! certification that each is not i-reversible.

pub(crate) mod linalg;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::constructions::shape::ShapeName;
use crate::constructions::{closure_ring, MatrixRing};
use crate::kernel::base::Residues;
use crate::kernel::{Elem, Ring};
use crate::properties::{check_i_reversible, CheckError, CheckOptions, Verdict, Witness, WitnessKind};

use linalg::{all_subspaces, Echelon};

/// Largest quotient dimension whose subspaces are enumerated.
pub const MAX_QUOTIENT_DIM: usize = 6;

/// The upper triangular ambient T_n(GF(p)).
#[derive(Clone, Debug)]
pub struct Ambient {
    pub ring: Ring,
    pub n: usize,
    pub p: u64,
}

impl Ambient {
    pub fn new(ring: &Ring) -> Result<Ambient, CheckError> {
        let bad = |why: &str| CheckError::Unsupported(format!("{} is not T_n over a prime field: {why}", ring.expr()));
        let m = ring.downcast::<MatrixRing>().ok_or_else(|| bad("not a matrix ring"))?;
        if m.shape().name != ShapeName::Upper {
            return Err(bad("shape is not T(n, ·)"));
        }
        let res = m.base().downcast::<Residues>().ok_or_else(|| bad("base is not Z_p or GF(p)"))?;
        if !crate::kernel::base::is_prime(res.modulus()) {
            return Err(bad("modulus is not prime"));
        }
        Ok(Ambient {
            ring: ring.clone(),
            n: m.n(),
            p: res.modulus(),
        })
    }

    fn width(&self) -> usize {
        self.n * self.n
    }

    pub fn vector(&self, a: &Elem) -> Vec<u64> {
        a.matrix().iter().map(Elem::res).collect()
    }

    pub fn elem(&self, v: &[u64]) -> Elem {
        Elem::Matrix(v.iter().map(|&x| Elem::Res(x)).collect())
    }

    pub fn mul(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let n = self.n;
        let mut out = vec![0u64; n * n];
        for i in 0..n {
            for k in i..n {
                let x = a[i * n + k];
                if x == 0 {
                    continue;
                }
                for j in k..n {
                    out[i * n + j] = (out[i * n + j] + x * b[k * n + j]) % self.p;
                }
            }
        }
        out
    }

    pub fn identity(&self) -> Vec<u64> {
        self.diag(&vec![1; self.n])
    }

    pub fn diag(&self, d: &[u64]) -> Vec<u64> {
        let mut v = vec![0; self.width()];
        for (k, &x) in d.iter().enumerate() {
            v[k * self.n + k] = x;
        }
        v
    }

    pub fn unit(&self, i: usize, j: usize) -> Vec<u64> {
        let mut v = vec![0; self.width()];
        v[i * self.n + j] = 1;
        v
    }

    fn sub(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        a.iter().zip(b).map(|(x, y)| (x + self.p - y) % self.p).collect()
    }

    fn upper_units(&self) -> Vec<Vec<u64>> {
        let n = self.n;
        (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).map(|(i, j)| self.unit(i, j)).collect()
    }

    fn literal(&self, v: &[u64]) -> String {
        self.ring.fmt_elem(&self.elem(v))
    }
}

/// A GF(p)-subspace of T_n(GF(p)) closed under multiplication.
#[derive(Clone, Debug)]
pub struct SubringBasis {
    pub ambient: Ambient,
    /// Reduced row echelon basis, as row-major matrices.
    pub basis: Vec<Vec<u64>>,
    pub contains_unity: bool,
    /// `closure_certificate[i][j]` = coordinates of basis[i]·basis[j].
    pub closure_certificate: Vec<Vec<Vec<u64>>>,
}

impl SubringBasis {
    /// Spans `vectors`; errors if the span is not multiplicatively closed.
    pub fn from_vectors(ambient: &Ambient, vectors: &[Vec<u64>]) -> Result<SubringBasis, CheckError> {
        let span = Echelon::spanned_by(ambient.p, ambient.width(), vectors);
        Self::from_echelon(ambient, span).ok_or_else(|| CheckError::Unsupported("span is not closed under multiplication".into()))
    }

    fn from_echelon(ambient: &Ambient, span: Echelon) -> Option<SubringBasis> {
        let mut cert = Vec::with_capacity(span.dim());
        for u in &span.rows {
            let mut row = Vec::with_capacity(span.dim());
            for v in &span.rows {
                row.push(span.coords(&ambient.mul(u, v))?);
            }
            cert.push(row);
        }
        Some(SubringBasis {
            contains_unity: span.contains(&ambient.identity()),
            ambient: ambient.clone(),
            basis: span.rows,
            closure_certificate: cert,
        })
    }

    /// Basis of a finite ring of n×n matrices over GF(p) inside the ambient.
    pub fn of_ring(ambient: &Ambient, ring: &Ring, opts: &CheckOptions) -> Result<SubringBasis, CheckError> {
        let vectors: Vec<Vec<u64>> = match ring.downcast::<MatrixRing>() {
            Some(m) if m.n() == ambient.n && m.base().expr() == ambient_base_expr(ambient) => m
                .shape()
                .slots()
                .iter()
                .map(|slot| {
                    let mut v = vec![0u64; ambient.width()];
                    for &(i, j) in slot {
                        v[i * ambient.n + j] = 1;
                    }
                    v
                })
                .collect(),
            _ => {
                let n = ring.require_finite()?;
                opts.budget.require(&format!("basis extraction of {}", ring.expr()), n as u128)?;
                ring.elements()?.iter().map(|a| ambient.vector(a)).collect()
            }
        };
        for v in &vectors {
            ambient
                .ring
                .check(&ambient.elem(v))
                .map_err(|_| CheckError::Unsupported(format!("{} is not inside {}", ring.expr(), ambient.ring.expr())))?;
        }
        Self::from_vectors(ambient, &vectors)
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    fn echelon(&self) -> Echelon {
        Echelon {
            p: self.ambient.p,
            width: self.ambient.width(),
            rows: self.basis.clone(),
            pivots: self.basis.iter().map(|r| r.iter().position(|&x| x != 0).expect("nonzero row")).collect(),
        }
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        self.echelon().contains(v)
    }

    /// Re-checks the closure certificate and unity flag from scratch.
    pub fn revalidate(&self) -> bool {
        let a = &self.ambient;
        let combine = |coords: &[u64]| {
            let mut out = vec![0u64; a.width()];
            for (c, row) in coords.iter().zip(&self.basis) {
                for (x, y) in out.iter_mut().zip(row) {
                    *x = (*x + c * y) % a.p;
                }
            }
            out
        };
        self.closure_certificate.len() == self.dim()
            && self.basis.iter().enumerate().all(|(i, u)| {
                self.basis
                    .iter()
                    .enumerate()
                    .all(|(j, v)| combine(&self.closure_certificate[i][j]) == a.mul(u, v))
            })
            && self.contains_unity == self.contains(&a.identity())
    }

    pub fn literals(&self) -> Vec<String> {
        self.basis.iter().map(|v| self.ambient.literal(v)).collect()
    }

    /// `closure(T(n, F), basis…)`: the same subring as a DSL expression.
    pub fn expr(&self) -> String {
        let mut s = format!("closure({}", self.ambient.ring.expr());
        for l in self.literals() {
            s.push_str(", ");
            s.push_str(&l);
        }
        s.push(')');
        s
    }

    pub fn ring(&self) -> Result<Ring, CheckError> {
        let gens: Vec<Elem> = self.basis.iter().map(|v| self.ambient.elem(v)).collect();
        Ok(closure_ring(&self.ambient.ring, &gens)?)
    }
}

fn ambient_base_expr(a: &Ambient) -> String {
    a.ring.downcast::<MatrixRing>().expect("checked in Ambient::new").base().expr()
}

/// Indicator idempotents of the distinct diagonal values of a diagonal B.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagonalIdempotentFamily {
    pub source: Vec<u64>,
    pub values: Vec<u64>,
    pub idempotents: Vec<Vec<u64>>,
}

/// Builds E⁽¹⁾..E⁽ᵏ⁾ for the distinct diagonal values of `b` and confirms
/// each lies in span{I, B, …, B^{k−1}} (and in `within`, when given).
pub fn extract_diagonal_idempotents(
    ambient: &Ambient,
    b: &[u64],
    within: Option<&SubringBasis>,
) -> Result<DiagonalIdempotentFamily, CheckError> {
    let n = ambient.n;
    if (0..n).any(|i| (0..n).any(|j| i != j && b[i * n + j] != 0)) {
        return Err(CheckError::Unsupported("source matrix is not diagonal".into()));
    }
    let diag: Vec<u64> = (0..n).map(|i| b[i * n + i]).collect();
    let mut values: Vec<u64> = Vec::new();
    for &x in &diag {
        if !values.contains(&x) {
            values.push(x);
        }
    }
    let mut powers = vec![ambient.identity()];
    for _ in 1..values.len() {
        let last = powers.last().expect("nonempty");
        powers.push(ambient.mul(last, b));
    }
    let span = Echelon::spanned_by(ambient.p, ambient.width(), &powers);
    let idempotents: Vec<Vec<u64>> = values
        .iter()
        .map(|&v| ambient.diag(&diag.iter().map(|&x| u64::from(x == v)).collect::<Vec<_>>()))
        .collect();
    for e in &idempotents {
        if !span.contains(e) {
            return Err(CheckError::Unsupported("indicator outside the span of powers of B".into()));
        }
        if within.is_some_and(|s| !s.contains(e)) {
            return Err(CheckError::Unsupported("indicator outside the given subring".into()));
        }
    }
    Ok(DiagonalIdempotentFamily {
        source: b.to_vec(),
        values,
        idempotents,
    })
}

/// Every subring S with base ⊊ S ⊆ ambient, in subspace enumeration order.
pub fn intermediate_subrings(base: &SubringBasis) -> Result<Vec<SubringBasis>, CheckError> {
    let a = &base.ambient;
    let mut full = base.echelon();
    let mut complement = Vec::new();
    for u in a.upper_units() {
        if full.insert(&u) {
            complement.push(u);
        }
    }
    let q = complement.len();
    if q > MAX_QUOTIENT_DIM {
        return Err(CheckError::Budget {
            what: "quotient dimension for subspace enumeration".into(),
            needed: q as u128,
            limit: MAX_QUOTIENT_DIM as u128,
            flag: "(fixed limit)",
        });
    }
    let subspaces = all_subspaces(a.p, q);
    Ok(subspaces
        .par_iter()
        .filter(|w| !w.is_empty())
        .filter_map(|w| {
            let mut span = base.echelon();
            for row in w {
                let mut lift = vec![0u64; a.width()];
                for (c, u) in row.iter().zip(&complement) {
                    for (x, y) in lift.iter_mut().zip(u) {
                        *x = (*x + c * y) % a.p;
                    }
                }
                span.insert(&lift);
            }
            SubringBasis::from_echelon(a, span)
        })
        .collect())
}

/// Outcome of trying to show a subring is not i-reversible.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum Certificate {
    NotIReversible { route: String, witness: Witness },
    /// The exhaustive scan found no violation.
    IReversible,
    Inconclusive { reason: String },
}

/// Constructive route first: when S contains every strictly upper E_ij, a
/// diagonal idempotent α ≠ I of weight ≥ 3 (with ones at i₁ < i₂ < … < i_k)
/// gives a = (I−α)+E_{i₂i_k}, b = (I−α)+E_{i₁i₂} with ab = I−α and
/// ba = I−α+E_{i₁i_k}. Otherwise an exhaustive scan of S.
pub fn certify_not_i_reversible(s: &SubringBasis, opts: &CheckOptions) -> Certificate {
    if let Some(w) = constructive_witness(s) {
        return Certificate::NotIReversible {
            route: "constructive".into(),
            witness: w,
        };
    }
    let ring = match s.ring() {
        Ok(r) => r,
        Err(e) => return Certificate::Inconclusive { reason: e.to_string() },
    };
    match check_i_reversible(&ring, opts) {
        Ok(v) => match v.witness {
            Some(w) => Certificate::NotIReversible {
                route: "exhaustive".into(),
                witness: w,
            },
            None => Certificate::IReversible,
        },
        Err(e) => Certificate::Inconclusive { reason: e.to_string() },
    }
}

fn constructive_witness(s: &SubringBasis) -> Option<Witness> {
    let a = &s.ambient;
    let n = a.n;
    let strict: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    if !strict.iter().all(|&(i, j)| s.contains(&a.unit(i, j))) {
        return None;
    }
    let id = a.identity();
    for b in &s.basis {
        let d = a.diag(&(0..n).map(|i| b[i * n + i]).collect::<Vec<_>>());
        let Ok(fam) = extract_diagonal_idempotents(a, &d, Some(s)) else {
            continue;
        };
        for e in &fam.idempotents {
            for alpha in [e.clone(), a.sub(&id, e)] {
                let ones: Vec<usize> = (0..n).filter(|&i| alpha[i * n + i] == 1).collect();
                if ones.len() < 3 || ones.len() == n {
                    continue;
                }
                let beta = a.sub(&id, &alpha);
                let (i1, i2, ik) = (ones[0], ones[1], ones[ones.len() - 1]);
                let plus = |x: &[u64], u: Vec<u64>| -> Vec<u64> { x.iter().zip(&u).map(|(p, q)| (p + q) % a.p).collect() };
                let x = plus(&beta, a.unit(i2, ik));
                let y = plus(&beta, a.unit(i1, i2));
                let xy = a.mul(&x, &y);
                let yx = a.mul(&y, &x);
                let ok = a.mul(&xy, &xy) == xy && xy.iter().any(|&c| c != 0) && a.mul(&yx, &yx) != yx;
                if ok && s.contains(&x) && s.contains(&y) {
                    return Some(Witness::new(
                        WitnessKind::IReversibilityViolation,
                        s.expr(),
                        vec![a.literal(&x), a.literal(&y)],
                    ));
                }
            }
        }
    }
    None
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubringEntry {
    pub basis: Vec<String>,
    pub dim: usize,
    #[serde(flatten)]
    pub certificate: Certificate,
}

/// Maximality analysis of `base` inside T_n(GF(p)).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MaximalityReport {
    pub base: String,
    pub ambient: String,
    pub base_verdict: Verdict,
    pub maximal: bool,
    pub subrings: Vec<SubringEntry>,
}

impl MaximalityReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Intermediate subrings that turned out to be i-reversible.
    pub fn i_reversible_intermediates(&self) -> Vec<&SubringEntry> {
        self.subrings
            .iter()
            .filter(|e| e.certificate == Certificate::IReversible)
            .collect()
    }
}

/// `base` is a maximal i-reversible subring of `ambient` iff every strict
/// intermediate subring gets a non-i-reversibility certificate. An
/// inconclusive certificate makes the whole analysis fail.
pub fn check_maximal_i_reversible(base: &Ring, ambient: &Ring, opts: &CheckOptions) -> Result<MaximalityReport, CheckError> {
    let amb = Ambient::new(ambient)?;
    let base_verdict = check_i_reversible(base, opts)?;
    if !base_verdict.holds {
        return Err(CheckError::Unsupported(format!("{} is not i-reversible", base.expr())));
    }
    let sb = SubringBasis::of_ring(&amb, base, opts)?;
    let subrings = intermediate_subrings(&sb)?;
    let entries: Vec<SubringEntry> = subrings
        .par_iter()
        .map(|s| SubringEntry {
            basis: s.literals(),
            dim: s.dim(),
            certificate: certify_not_i_reversible(s, opts),
        })
        .collect();
    if let Some(e) = entries.iter().find(|e| matches!(e.certificate, Certificate::Inconclusive { .. })) {
        let Certificate::Inconclusive { reason } = &e.certificate else { unreachable!() };
        return Err(CheckError::Unsupported(format!(
            "maximality of {} undecided: subring of dimension {} is inconclusive: {reason}",
            base.expr(),
            e.dim
        )));
    }
    Ok(MaximalityReport {
        base: base.expr(),
        ambient: ambient.expr(),
        base_verdict,
        maximal: entries.iter().all(|e| matches!(e.certificate, Certificate::NotIReversible { .. })),
        subrings: entries,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl;

    fn amb(n: usize, p: u64) -> Ambient {
        Ambient::new(&dsl::ring(&format!("T({n}, GF{p})")).unwrap()).unwrap()
    }

    #[test]
    fn diagonal_family_over_gf3() {
        let a = amb(5, 3);
        let b = a.diag(&[0, 1, 1, 0, 2]);
        let fam = extract_diagonal_idempotents(&a, &b, None).unwrap();
        assert_eq!(fam.values, vec![0, 1, 2]);
        assert_eq!(fam.idempotents[0], a.diag(&[1, 0, 0, 1, 0]));
        assert_eq!(fam.idempotents[1], a.diag(&[0, 1, 1, 0, 0]));
        assert_eq!(fam.idempotents[2], a.diag(&[0, 0, 0, 0, 1]));
        let single = extract_diagonal_idempotents(&a, &a.identity(), None).unwrap();
        assert_eq!(single.idempotents, vec![a.identity()]);
    }

    #[test]
    fn quotient_enumeration_counts() {
        let opts = CheckOptions::deterministic();
        let a = amb(3, 2);
        let s3 = SubringBasis::of_ring(&a, &dsl::ring("S3(GF2)").unwrap(), &opts).unwrap();
        let subs = intermediate_subrings(&s3).unwrap();
        assert_eq!(subs.len(), 1);
        assert_eq!(subs[0].dim(), 6);
        let d3 = SubringBasis::of_ring(&a, &dsl::ring("D(3, GF2)").unwrap(), &opts).unwrap();
        let subs = intermediate_subrings(&d3).unwrap();
        assert!(subs.iter().all(|s| s.revalidate() && s.contains_unity));
        assert!(subs.iter().any(|s| !s.contains(&a.unit(0, 0)) && s.dim() == 5));
    }

    #[test]
    fn closure_of_d5_and_e11_gets_constructive_witness() {
        let a = amb(5, 2);
        let d5 = SubringBasis::of_ring(&a, &dsl::ring("D(5, GF2)").unwrap(), &CheckOptions::deterministic()).unwrap();
        let mut vs = d5.basis.clone();
        vs.push(a.unit(0, 0));
        let s = SubringBasis::from_vectors(&a, &vs).unwrap();
        match certify_not_i_reversible(&s, &CheckOptions::deterministic()) {
            Certificate::NotIReversible { route, .. } => assert_eq!(route, "constructive"),
            other => panic!("{other:?}"),
        }
    }
}
