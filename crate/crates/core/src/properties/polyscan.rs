//! Bounded-degree scans in R[x;σ] and R[x, x⁻¹] over a tabled base ring.
//!
//! Polynomials are dense vectors of element indices; products go through the
//! base ring's multiplication and addition tables and a table of σ powers.

use std::sync::Arc;

use rayon::prelude::*;

use super::scan::{scan_one, scan_pairs, scanned};
use super::{CheckError, CheckOptions, Run, Verdict, Witness, WitnessKind};
use crate::kernel::{Elem, Endomorphism, FiniteView, Ring};
use crate::poly::literal::write_terms;

struct Tables {
    base: Ring,
    view: Arc<FiniteView>,
    add: Vec<u32>,
    /// σ^k as index maps, k = 0, 1, …
    sigma_pow: Vec<Vec<u32>>,
    identity: bool,
    n: usize,
}

impl Tables {
    fn new(sigma: &Endomorphism, max_pow: usize) -> Result<Tables, CheckError> {
        let base = sigma.ring().clone();
        let view = base.view().ok_or_else(|| {
            CheckError::Unsupported(format!(
                "bounded polynomial scans need a finite base ring with at most 2048 elements, got {}",
                base.expr()
            ))
        })?;
        let n = view.len();
        let add = view.add_table(&base).to_vec();
        let identity = sigma.is_identity();
        let mut sigma_pow = vec![(0..n as u32).collect::<Vec<u32>>()];
        if !identity {
            let map = sigma.index_map().expect("finite base");
            for k in 1..=max_pow {
                let prev = &sigma_pow[k - 1];
                sigma_pow.push(prev.iter().map(|&i| map[i as usize]).collect());
            }
        }
        Ok(Tables {
            base,
            view,
            add,
            sigma_pow,
            identity,
            n,
        })
    }

    #[inline]
    fn add(&self, a: u32, b: u32) -> u32 {
        self.add[a as usize * self.n + b as usize]
    }

    #[inline]
    fn mul(&self, a: u32, b: u32) -> u32 {
        self.view.mul(a, b)
    }

    #[inline]
    fn sigma(&self, k: i64, b: u32) -> u32 {
        if self.identity {
            b
        } else {
            self.sigma_pow[k as usize][b as usize]
        }
    }

    fn zero(&self) -> u32 {
        self.view.zero
    }

    /// Polynomial with little-endian digit coefficients.
    fn poly(&self, mut index: u64, len: usize) -> Vec<u32> {
        (0..len)
            .map(|_| {
                let d = index % self.n as u64;
                index /= self.n as u64;
                d as u32
            })
            .collect()
    }

    /// (lo_f, f)·(lo_g, g) in the left convention, normalized.
    fn mul_poly(&self, lo_f: i64, f: &[u32], lo_g: i64, g: &[u32]) -> (i64, Vec<u32>) {
        if f.is_empty() || g.is_empty() {
            return (0, Vec::new());
        }
        let z = self.zero();
        let mut out = vec![z; f.len() + g.len() - 1];
        for (i, &a) in f.iter().enumerate() {
            if a == z {
                continue;
            }
            let e = lo_f + i as i64;
            for (j, &b) in g.iter().enumerate() {
                if b != z {
                    out[i + j] = self.add(out[i + j], self.mul(a, self.sigma(e, b)));
                }
            }
        }
        self.normalize(lo_f + lo_g, out)
    }

    fn normalize(&self, lo: i64, v: Vec<u32>) -> (i64, Vec<u32>) {
        let z = self.zero();
        let Some(first) = v.iter().position(|&a| a != z) else {
            return (0, Vec::new());
        };
        let last = v.iter().rposition(|&a| a != z).expect("nonzero exists");
        (lo + first as i64, v[first..=last].to_vec())
    }

    fn is_idempotent(&self, p: &(i64, Vec<u32>)) -> bool {
        self.mul_poly(p.0, &p.1, p.0, &p.1) == *p
    }

    fn fmt(&self, lo: i64, c: &[u32]) -> String {
        let elems: Vec<&Elem> = c.iter().map(|&i| &self.view.elems[i as usize]).collect();
        let mut out = String::new();
        write_terms(
            &self.base,
            elems.iter().enumerate().map(|(i, e)| (lo + i as i64, *e)),
            &mut out,
        );
        out
    }
}

fn family_size(n: usize, len: usize) -> u128 {
    (n as u128).saturating_pow(len as u32)
}

fn degree_note(d: usize) -> String {
    format!("bounded proxy: certified for polynomials of degree at most {d} only")
}

fn poly_expr(sigma: &Endomorphism) -> String {
    format!("poly({}, {})", sigma.ring().expr(), sigma.expr())
}

/// Pairs f, g from a family of dense polynomials starting at exponent `lo`
/// with fg a nonzero idempotent and gf not idempotent.
fn i_rev_family(
    t: &Tables,
    lo: i64,
    len: usize,
    ring_expr: String,
    property: &str,
    opts: &CheckOptions,
    note: String,
) -> Result<Verdict, CheckError> {
    let run = Run::new(property, ring_expr.clone(), opts);
    let count = family_size(t.n, len);
    opts.budget
        .require(&format!("{property} scan of {ring_expr}"), count.saturating_mul(count))?;
    let count = count as usize;
    let polys: Vec<(i64, Vec<u32>)> = (0..count as u64)
        .into_par_iter()
        .map(|k| t.normalize(lo, t.poly(k, len)))
        .collect();
    let found = scan_pairs(count, count, opts.deterministic, |i, j| {
        let (f, g) = (&polys[i], &polys[j]);
        let p = t.mul_poly(f.0, &f.1, g.0, &g.1);
        !p.1.is_empty() && t.is_idempotent(&p) && !t.is_idempotent(&t.mul_poly(g.0, &g.1, f.0, &f.1))
    });
    let w = found.map(|(i, j)| {
        let (f, g) = (&polys[i], &polys[j]);
        Witness::new(
            WitnessKind::IReversibilityViolation,
            ring_expr.clone(),
            vec![t.fmt(f.0, &f.1), t.fmt(g.0, &g.1)],
        )
    });
    let total = (count as u64).saturating_mul(count as u64);
    Ok(run.finish(w, "exhaustive (bounded degree)", scanned(found, count, total), Some(note)))
}

/// All pairs of degree ≤ d in R[x;σ].
pub fn scan_poly_i_reversible(sigma: &Endomorphism, d: usize, opts: &CheckOptions) -> Result<Verdict, CheckError> {
    opts.budget.require_degree(d)?;
    let t = Tables::new(sigma, 4 * d + 1)?;
    i_rev_family(&t, 0, d + 1, poly_expr(sigma), "poly-i-reversible", opts, degree_note(d))
}

/// All pairs supported on exponents −1..d−1 in R[x, x⁻¹].
pub fn scan_laurent_i_reversible(base: &Ring, d: usize, opts: &CheckOptions) -> Result<Verdict, CheckError> {
    opts.budget.require_degree(d)?;
    let id = Endomorphism::identity(base);
    let t = Tables::new(&id, 0)?;
    let note = format!("bounded proxy: certified for Laurent polynomials supported on x^-1..x^{} only", d as i64 - 1);
    i_rev_family(&t, -1, d + 1, format!("laurent({})", base.expr()), "laurent-i-reversible", opts, note)
}

/// Idempotents of R[x;σ] of degree ≤ d; holds iff all are constants.
pub fn scan_poly_idempotents(sigma: &Endomorphism, d: usize, opts: &CheckOptions) -> Result<(Verdict, Vec<Elem>), CheckError> {
    opts.budget.require_degree(d)?;
    let ring_expr = poly_expr(sigma);
    let run = Run::new("poly-idempotents-constant", ring_expr.clone(), opts);
    let t = Tables::new(sigma, 2 * d + 1)?;
    let count = family_size(t.n, d + 1);
    opts.budget.require(&format!("idempotent scan of {ring_expr}"), count)?;
    let idem: Vec<(i64, Vec<u32>)> = (0..count as u64)
        .into_par_iter()
        .filter_map(|k| {
            let p = t.normalize(0, t.poly(k, d + 1));
            t.is_idempotent(&p).then_some(p)
        })
        .collect();
    let all: Vec<Elem> = idem
        .iter()
        .map(|(lo, c)| {
            let mut v = vec![t.view.elems[t.zero() as usize].clone(); *lo as usize];
            v.extend(c.iter().map(|&i| t.view.elems[i as usize].clone()));
            Elem::Coeffs(v)
        })
        .collect();
    let w = idem
        .iter()
        .find(|(lo, c)| *lo as usize + c.len() > 1)
        .map(|(lo, c)| Witness::new(WitnessKind::IdempotentDegreeViolation, ring_expr.clone(), vec![t.fmt(*lo, c)]));
    Ok((run.finish(w, "exhaustive (bounded degree)", count as u64, Some(degree_note(d))), all))
}

/// Armendariz: fg = 0 in R[x] forces every aᵢbⱼ = 0 (degrees ≤ d).
pub fn check_armendariz(ring: &Ring, d: usize, opts: &CheckOptions) -> Result<Verdict, CheckError> {
    armendariz_scan(&Endomorphism::identity(ring), d, opts, "armendariz")
}

/// σ-Armendariz: pq = 0 in R[x;σ] forces every aᵢbⱼ = 0 (degrees ≤ d).
pub fn check_sigma_armendariz(sigma: &Endomorphism, d: usize, opts: &CheckOptions) -> Result<Verdict, CheckError> {
    armendariz_scan(sigma, d, opts, "sigma-armendariz")
}

/// For each nonzero f, a backtracking search for g with fg = 0 and some
/// aᵢbⱼ ≠ 0. Coefficient k of fg is fixed once b₀..b_{k−i₀} are chosen (i₀
/// the lowest nonzero exponent of f), so it is tested as soon as that
/// happens. The budget counts the candidates f.
fn armendariz_scan(sigma: &Endomorphism, d: usize, opts: &CheckOptions, property: &str) -> Result<Verdict, CheckError> {
    opts.budget.require_degree(d)?;
    let ring_expr = poly_expr(sigma);
    let run = Run::new(property, sigma.ring().expr(), opts);
    let t = Tables::new(sigma, d)?;
    let count = family_size(t.n, d + 1);
    opts.budget.require(&format!("{property} scan of {}", sigma.ring().expr()), count)?;
    let found = scan_one(count as usize, opts.deterministic, |k| {
        k != 0 && solve_g(&t, &t.poly(k as u64, d + 1)).is_some()
    });
    let w = found.map(|k| {
        let f = t.poly(k as u64, d + 1);
        let g = solve_g(&t, &f).expect("found above");
        let (fl, fc) = t.normalize(0, f);
        let (gl, gc) = t.normalize(0, g);
        Witness::new(WitnessKind::ArmendarizViolation, ring_expr.clone(), vec![t.fmt(fl, &fc), t.fmt(gl, &gc)])
    });
    let work = found.map_or(count as u64, |k| k as u64 + 1);
    Ok(run.finish(w, "exhaustive (bounded degree)", work, Some(degree_note(d))))
}

fn solve_g(t: &Tables, f: &[u32]) -> Option<Vec<u32>> {
    let z = t.zero();
    let i0 = f.iter().position(|&a| a != z)?;
    let d = f.len() - 1;
    let mut g = vec![z; d + 1];
    let coeff = |g: &[u32], k: usize| -> u32 {
        let mut acc = z;
        for (i, &a) in f.iter().enumerate().take(k + 1) {
            let j = k - i;
            if a != z && j < g.len() && g[j] != z {
                acc = t.add(acc, t.mul(a, t.sigma(i as i64, g[j])));
            }
        }
        acc
    };
    fn go(t: &Tables, f: &[u32], g: &mut Vec<u32>, pos: usize, i0: usize, coeff: &dyn Fn(&[u32], usize) -> u32) -> bool {
        let z = t.zero();
        let d = g.len() - 1;
        if pos > d {
            if (i0 + d + 1..=2 * d).any(|k| coeff(g, k) != z) {
                return false;
            }
            return f.iter().any(|&a| a != z && g.iter().any(|&b| b != z && t.mul(a, b) != z));
        }
        for b in 0..t.n as u32 {
            g[pos] = b;
            if coeff(g, i0 + pos) == z && go(t, f, g, pos + 1, i0, coeff) {
                return true;
            }
        }
        g[pos] = z;
        false
    }
    go(t, f, &mut g, 0, i0, &coeff).then_some(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{matrix_ring, trivial_extension, MatrixShape};
    use crate::kernel::{gf4, product, zn, EndoSpec};

    fn det() -> CheckOptions {
        CheckOptions::deterministic()
    }

    #[test]
    fn z6_poly_idempotents_are_constants() {
        let z6 = zn(6).unwrap();
        let mut opts = det();
        opts.budget.max_degree = 3;
        let (v, all) = scan_poly_idempotents(&Endomorphism::identity(&z6), 3, &opts).unwrap();
        assert!(v.holds);
        assert_eq!(all.len(), 4);
    }

    #[test]
    fn t2_poly_has_nonconstant_idempotent() {
        let t2 = matrix_ring(MatrixShape::upper(2), zn(2).unwrap());
        let (v, _) = scan_poly_idempotents(&Endomorphism::identity(&t2), 2, &det()).unwrap();
        assert!(!v.holds);
    }

    #[test]
    fn armendariz_examples() {
        let t2 = matrix_ring(MatrixShape::upper(2), zn(2).unwrap());
        assert!(!check_armendariz(&t2, 1, &det()).unwrap().holds);
        let z6 = zn(6).unwrap();
        assert!(check_armendariz(&z6, 2, &det()).unwrap().holds);
        let tt = trivial_extension(trivial_extension(zn(2).unwrap()));
        let v = check_armendariz(&tt, 1, &det()).unwrap();
        assert!(!v.holds);
    }

    #[test]
    fn swap_over_z6_squared_violates() {
        let r = product(zn(6).unwrap(), zn(6).unwrap());
        let s = Endomorphism::new(&r, &EndoSpec::Swap).unwrap();
        let v = scan_poly_i_reversible(&s, 1, &det()).unwrap();
        assert!(!v.holds, "{v:?}");
    }

    #[test]
    fn trivial_idempotent_bases_are_clean() {
        let z4 = zn(4).unwrap();
        assert!(scan_poly_i_reversible(&Endomorphism::identity(&z4), 2, &det()).unwrap().holds);
        let f4 = gf4();
        let frob = Endomorphism::new(&f4, &EndoSpec::Frobenius).unwrap();
        assert!(scan_poly_i_reversible(&frob, 2, &det()).unwrap().holds);
        assert!(scan_laurent_i_reversible(&zn(6).unwrap(), 2, &det()).unwrap().holds);
    }
}
