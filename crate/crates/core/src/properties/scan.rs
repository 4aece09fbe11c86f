//! Element and pair scans over finite rings.

use std::collections::HashSet;

use rayon::prelude::*;

use super::{CheckError, CheckOptions, Run, Verdict, Witness, WitnessKind};
use crate::kernel::{Elem, Endomorphism, Ring};

/// First (i, j) in `0..outer × 0..inner` with `hit(i, j)`: the
/// lexicographically least one when `deterministic`, any one otherwise.
pub(crate) fn scan_pairs<F>(outer: usize, inner: usize, deterministic: bool, hit: F) -> Option<(usize, usize)>
where
    F: Fn(usize, usize) -> bool + Sync,
{
    let row = |i: usize| (0..inner).find(|&j| hit(i, j)).map(|j| (i, j));
    if deterministic {
        (0..outer).into_par_iter().find_map_first(row)
    } else {
        (0..outer).into_par_iter().find_map_any(row)
    }
}

/// First index with `hit`, minimal when `deterministic`.
pub(crate) fn scan_one<F>(n: usize, deterministic: bool, hit: F) -> Option<usize>
where
    F: Fn(usize) -> bool + Sync,
{
    if deterministic {
        (0..n).into_par_iter().find_first(|&i| hit(i))
    } else {
        (0..n).into_par_iter().find_any(|&i| hit(i))
    }
}

pub(crate) fn scanned(found: Option<(usize, usize)>, inner: usize, total: u64) -> u64 {
    found.map_or(total, |(i, j)| (i * inner + j + 1) as u64)
}

fn vacuous(run: Run) -> Verdict {
    run.finish(None, "vacuous", 0, None)
}

/// Carrier for a streaming scan, within budget.
fn carrier(ring: &Ring, opts: &CheckOptions, what: &str, work: u128) -> Result<Vec<Elem>, CheckError> {
    opts.budget.require(what, work)?;
    let n = ring.require_finite()?;
    Ok((0..n).into_par_iter().map(|i| ring.element_at(i).expect("in range")).collect())
}

/// All idempotents in index order.
pub fn idempotents(ring: &Ring, opts: &CheckOptions) -> Result<Vec<Elem>, CheckError> {
    let n = ring.require_finite()?;
    if let Some(v) = ring.view() {
        return Ok(v.idempotent_indices().into_iter().map(|i| v.elems[i as usize].clone()).collect());
    }
    opts.budget.require(&format!("idempotent scan of {}", ring.expr()), n as u128)?;
    Ok((0..n)
        .into_par_iter()
        .filter_map(|i| {
            let a = ring.element_at(i).expect("in range");
            (ring.mul(&a, &a) == a).then_some(a)
        })
        .collect())
}

/// Idempotents commuting with every element.
pub fn central_idempotents(ring: &Ring, opts: &CheckOptions) -> Result<Vec<Elem>, CheckError> {
    let es = idempotents(ring, opts)?;
    let n = ring.require_finite()?;
    opts.budget
        .require("centrality scan", es.len() as u128 * n as u128)?;
    Ok(es
        .into_iter()
        .filter(|e| {
            (0..n).into_par_iter().all(|i| {
                let x = ring.element_at(i).expect("in range");
                ring.mul(e, &x) == ring.mul(&x, e)
            })
        })
        .collect())
}

fn pair_witness(ring: &Ring, kind: WitnessKind, a: &Elem, b: &Elem) -> Witness {
    Witness::new(kind, ring.expr(), vec![ring.fmt_elem(a), ring.fmt_elem(b)])
}

/// ab = 0 ⇒ ba = 0 over all ordered pairs.
pub fn check_reversible(ring: &Ring, opts: &CheckOptions) -> Result<Verdict, CheckError> {
    let run = Run::new("reversible", ring.expr(), opts);
    let n = ring.require_finite()? as usize;
    if n == 1 {
        return Ok(vacuous(run));
    }
    let total = (n * n) as u64;
    let kind = WitnessKind::ReversibilityViolation;
    let what = format!("reversibility scan of {}", ring.expr());
    opts.budget.require(&what, (n as u128).pow(2))?;
    if let Some(v) = ring.view() {
        let z = v.zero;
        let found = scan_pairs(n, n, opts.deterministic, |i, j| {
            v.mul(i as u32, j as u32) == z && v.mul(j as u32, i as u32) != z
        });
        let w = found.map(|(i, j)| pair_witness(ring, kind, &v.elems[i], &v.elems[j]));
        return Ok(run.finish(w, "exhaustive", scanned(found, n, total), None));
    }
    let elems = carrier(ring, opts, &what, (n as u128).pow(2))?;
    let found = scan_pairs(n, n, opts.deterministic, |i, j| {
        ring.is_zero(&ring.mul(&elems[i], &elems[j])) && !ring.is_zero(&ring.mul(&elems[j], &elems[i]))
    });
    let w = found.map(|(i, j)| pair_witness(ring, kind, &elems[i], &elems[j]));
    Ok(run.finish(w, "exhaustive", scanned(found, n, total), None))
}

/// ab a nonzero idempotent ⇒ ba idempotent, over all ordered pairs.
///
/// Carriers too large for the pair budget but still within it elementwise
/// are decided by the trivial-idempotent certificate: with only 0 and 1
/// idempotent, ab nonzero idempotent means ab = 1, and in a finite ring that
/// forces ba = 1.
pub fn check_i_reversible(ring: &Ring, opts: &CheckOptions) -> Result<Verdict, CheckError> {
    let run = Run::new("i-reversible", ring.expr(), opts);
    let n = ring.require_finite()? as usize;
    if n == 1 {
        return Ok(vacuous(run));
    }
    let total = (n as u64).saturating_mul(n as u64);
    let kind = WitnessKind::IReversibilityViolation;
    let pairs = (n as u128).pow(2);
    if pairs <= opts.budget.max_pairs as u128 {
        if let Some(v) = ring.view() {
            let z = v.zero;
            let found = scan_pairs(n, n, opts.deterministic, |i, j| {
                let p = v.mul(i as u32, j as u32);
                p != z && v.is_idempotent(p) && !v.is_idempotent(v.mul(j as u32, i as u32))
            });
            let w = found.map(|(i, j)| pair_witness(ring, kind, &v.elems[i], &v.elems[j]));
            return Ok(run.finish(w, "exhaustive", scanned(found, n, total), None));
        }
        let elems = carrier(ring, opts, "i-reversibility scan", pairs)?;
        let idem: HashSet<&Elem> = elems.par_iter().filter(|a| ring.mul(a, a) == **a).collect();
        let found = scan_pairs(n, n, opts.deterministic, |i, j| {
            let p = ring.mul(&elems[i], &elems[j]);
            !ring.is_zero(&p) && idem.contains(&p) && !idem.contains(&ring.mul(&elems[j], &elems[i]))
        });
        let w = found.map(|(i, j)| pair_witness(ring, kind, &elems[i], &elems[j]));
        return Ok(run.finish(w, "exhaustive", scanned(found, n, total), None));
    }
    let es = idempotents(ring, opts)?;
    let (zero, one) = (ring.zero(), ring.one());
    if es.iter().all(|e| *e == zero || *e == one) {
        return Ok(run.finish(None, "trivial-idempotent certificate", n as u64, None));
    }
    Err(CheckError::Budget {
        what: format!("i-reversibility scan of {} (nontrivial idempotents present)", ring.expr()),
        needed: pairs,
        limit: opts.budget.max_pairs as u128,
        flag: "--max-pairs",
    })
}

/// Every idempotent is central.
pub fn check_abelian(ring: &Ring, opts: &CheckOptions) -> Result<Verdict, CheckError> {
    let run = Run::new("abelian", ring.expr(), opts);
    let n = ring.require_finite()? as usize;
    if n == 1 {
        return Ok(vacuous(run));
    }
    let kind = WitnessKind::NonCentralIdempotent;
    if let Some(v) = ring.view() {
        let es = v.idempotent_indices();
        let found = scan_pairs(es.len(), n, opts.deterministic, |k, x| {
            let e = es[k];
            v.mul(e, x as u32) != v.mul(x as u32, e)
        });
        let w = found.map(|(k, x)| pair_witness(ring, kind, &v.elems[es[k] as usize], &v.elems[x]));
        let work = scanned(found, n, (es.len() * n) as u64);
        return Ok(run.finish(w, "exhaustive", work, None));
    }
    let es = idempotents(ring, opts)?;
    let elems = carrier(ring, opts, "centrality scan", es.len() as u128 * n as u128)?;
    let found = scan_pairs(es.len(), n, opts.deterministic, |k, x| {
        ring.mul(&es[k], &elems[x]) != ring.mul(&elems[x], &es[k])
    });
    let w = found.map(|(k, x)| pair_witness(ring, kind, &es[k], &elems[x]));
    let work = scanned(found, n, (es.len() * n) as u64);
    Ok(run.finish(w, "exhaustive", work, None))
}

fn element_check(
    ring: &Ring,
    opts: &CheckOptions,
    property: &str,
    kind: WitnessKind,
    bad: impl Fn(&Elem) -> bool + Sync,
) -> Result<Verdict, CheckError> {
    let run = Run::new(property, ring.expr(), opts);
    let n = ring.require_finite()? as usize;
    if n == 1 {
        return Ok(vacuous(run));
    }
    let w;
    let found;
    if let Some(v) = ring.view() {
        found = scan_one(n, opts.deterministic, |i| bad(&v.elems[i]));
        w = found.map(|i| Witness::new(kind, ring.expr(), vec![ring.fmt_elem(&v.elems[i])]));
    } else {
        opts.budget.require(&format!("{property} scan of {}", ring.expr()), n as u128)?;
        found = scan_one(n, opts.deterministic, |i| bad(&ring.element_at(i as u64).expect("in range")));
        w = found.map(|i| {
            let a = ring.element_at(i as u64).expect("in range");
            Witness::new(kind, ring.expr(), vec![ring.fmt_elem(&a)])
        });
    }
    let work = found.map_or(n as u64, |i| i as u64 + 1);
    Ok(run.finish(w, "exhaustive", work, None))
}

/// No nonzero a with a² = 0.
pub fn check_reduced(ring: &Ring, opts: &CheckOptions) -> Result<Verdict, CheckError> {
    element_check(ring, opts, "reduced", WitnessKind::Nilpotent, |a| {
        !ring.is_zero(a) && ring.is_zero(&ring.mul(a, a))
    })
}

/// Only 0 and 1 are idempotent.
pub fn check_trivial_idempotents(ring: &Ring, opts: &CheckOptions) -> Result<Verdict, CheckError> {
    let (zero, one) = (ring.zero(), ring.one());
    element_check(ring, opts, "trivial-idempotents", WitnessKind::NontrivialIdempotent, |a| {
        *a != zero && *a != one && ring.mul(a, a) == *a
    })
}

/// a σ(a) = 0 ⇒ a = 0. The witness lives in poly(R, σ), where σ is
/// recoverable for replay; constants there are the elements of R.
pub fn check_sigma_rigid(sigma: &Endomorphism, opts: &CheckOptions) -> Result<Verdict, CheckError> {
    let ring = sigma.ring();
    let mut v = element_check(ring, opts, "sigma-rigid", WitnessKind::SigmaRigidViolation, |a| {
        !ring.is_zero(a) && ring.is_zero(&ring.mul(a, &sigma.apply(a)))
    })?;
    let poly_expr = format!("poly({}, {})", ring.expr(), sigma.expr());
    v.ring = poly_expr.clone();
    if let Some(w) = v.witness.as_mut() {
        w.ring = poly_expr;
    }
    Ok(v)
}

/// Unital ring endomorphism laws; exhaustive on carriers up to 2048.
pub fn validate_endo(sigma: &Endomorphism, opts: &CheckOptions) -> Verdict {
    let ring = sigma.ring();
    let run = Run::new("endomorphism", format!("{} on {}", sigma.expr(), ring.expr()), opts);
    let check = sigma.check_laws();
    let method = match ring.size() {
        Some(n) if n <= 2048 => "exhaustive",
        Some(_) => "strided sample",
        None => "sample",
    };
    let w = check.violation.map(|(law, inputs)| Witness {
        kind: WitnessKind::EndomorphismViolation,
        ring: ring.expr(),
        elements: inputs,
        claim: vec![law, format!("sigma = {}", sigma.expr())],
    });
    run.finish(w, method, check.checked as u64, None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{matrix_ring, MatrixShape};
    use crate::kernel::{gf4, zn};

    fn det() -> CheckOptions {
        CheckOptions::deterministic()
    }

    #[test]
    fn t2_z2_reversibility_witness_is_e12_e11() {
        let r = matrix_ring(MatrixShape::upper(2), zn(2).unwrap());
        let v = check_reversible(&r, &det()).unwrap();
        assert!(!v.holds);
        let w = v.witness.unwrap();
        assert_eq!(w.elements, vec!["[[0, 1], [0, 0]]", "[[1, 0], [0, 0]]"]);
    }

    #[test]
    fn small_verdicts() {
        let z6 = zn(6).unwrap();
        assert!(check_reversible(&z6, &det()).unwrap().holds);
        assert!(check_reduced(&z6, &det()).unwrap().holds);
        assert!(!check_trivial_idempotents(&z6, &det()).unwrap().holds);
        let f4 = gf4();
        assert!(check_trivial_idempotents(&f4, &det()).unwrap().holds);
        assert!(check_reduced(&f4, &det()).unwrap().holds);
        let d3 = matrix_ring(MatrixShape::scalar_diagonal(3), zn(2).unwrap());
        assert!(check_abelian(&d3, &det()).unwrap().holds);
        assert!(!check_reduced(&d3, &det()).unwrap().holds);
        assert_eq!(idempotents(&z6, &det()).unwrap().len(), 4);
    }

    #[test]
    fn i_reversibility_of_triangular_rings() {
        let t2 = matrix_ring(MatrixShape::upper(2), zn(2).unwrap());
        assert!(check_i_reversible(&t2, &det()).unwrap().holds);
        let t3 = matrix_ring(MatrixShape::upper(3), zn(2).unwrap());
        assert!(!check_i_reversible(&t3, &det()).unwrap().holds);
        let trivial = zn(1).unwrap();
        assert_eq!(check_i_reversible(&trivial, &det()).unwrap().method, "vacuous");
    }

    #[test]
    fn budget_refusal_is_explicit() {
        let mut opts = det();
        opts.budget.max_pairs = 10;
        let d4 = matrix_ring(MatrixShape::upper(3), zn(6).unwrap());
        let err = check_i_reversible(&d4, &opts).unwrap_err();
        assert!(err.to_string().contains("--max-pairs"), "{err}");
    }
}
