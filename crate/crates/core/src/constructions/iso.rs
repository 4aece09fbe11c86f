//! Exhaustive verification of candidate ring isomorphisms.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::kernel::{Elem, Ring, RingError, RingKind};

use super::extension::Dorroh;
use super::matrix::MatrixRing;
use super::shape::ShapeName;

type ElemMap = Box<dyn Fn(&Elem) -> Elem + Send + Sync>;

pub struct IsoCandidate {
    pub name: String,
    pub source: Ring,
    pub target: Ring,
    pub forward: ElemMap,
    pub inverse: ElemMap,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoReport {
    pub holds: bool,
    /// First failed law and its inputs as element literals.
    pub violation: Option<(String, Vec<String>)>,
    pub checked_pairs: u64,
}

impl IsoReport {
    fn fail(law: &str, inputs: Vec<String>, checked: u64) -> IsoReport {
        IsoReport {
            holds: false,
            violation: Some((law.to_string(), inputs)),
            checked_pairs: checked,
        }
    }
}

/// Holds iff `forward` is a bijective unital ring homomorphism with inverse
/// `inverse`; every law is checked on the full carriers.
pub fn verify_iso(c: &IsoCandidate) -> Result<IsoReport, RingError> {
    let (src, dst) = (&c.source, &c.target);
    let n = src.require_finite()?;
    let m = dst.require_finite()?;
    if n != m {
        return Ok(IsoReport::fail("|source| = |target|", vec![n.to_string(), m.to_string()], 0));
    }
    let xs = src.elements()?;
    let images: Vec<Elem> = xs.par_iter().map(|a| (c.forward)(a)).collect();
    for (a, fa) in xs.iter().zip(&images) {
        if !dst.contains(fa) {
            return Ok(IsoReport::fail("f(a) ∈ target", vec![src.fmt_elem(a)], 0));
        }
        if (c.inverse)(fa) != *a {
            return Ok(IsoReport::fail("g(f(a)) = a", vec![src.fmt_elem(a)], 0));
        }
    }
    let distinct: HashSet<&Elem> = images.iter().collect();
    if distinct.len() as u64 != n {
        return Ok(IsoReport::fail("f injective", vec![], 0));
    }
    for b in dst.elements()? {
        let gb = (c.inverse)(&b);
        if !src.contains(&gb) || (c.forward)(&gb) != b {
            return Ok(IsoReport::fail("f(g(b)) = b", vec![dst.fmt_elem(&b)], 0));
        }
    }
    if (c.forward)(&src.one()) != dst.one() {
        return Ok(IsoReport::fail("f(1) = 1", vec![], 0));
    }
    let law = |i: usize, j: usize| -> Option<&'static str> {
        if (c.forward)(&src.add(&xs[i], &xs[j])) != dst.add(&images[i], &images[j]) {
            return Some("f(a+b) = f(a)+f(b)");
        }
        if (c.forward)(&src.mul(&xs[i], &xs[j])) != dst.mul(&images[i], &images[j]) {
            return Some("f(ab) = f(a)f(b)");
        }
        None
    };
    let len = xs.len();
    let bad = (0..len * len)
        .into_par_iter()
        .find_first(|&k| law(k / len, k % len).is_some());
    Ok(match bad {
        None => IsoReport {
            holds: true,
            violation: None,
            checked_pairs: (len * len) as u64,
        },
        Some(k) => {
            let (i, j) = (k / len, k % len);
            IsoReport::fail(
                law(i, j).expect("found"),
                vec![src.fmt_elem(&xs[i]), src.fmt_elem(&xs[j])],
                k as u64 + 1,
            )
        }
    })
}

/// Names accepted by [`named_iso`].
pub const ISO_MAPS: &[&str] = &["vn-trunc", "dorroh-product", "skewtrunc-nagata", "triv-d2", "same"];

/// Builds one of the bundled candidate maps between `source` and `target`.
///
/// - `vn-trunc`: V_n(R) → R[x]/(xⁿ), first row ↦ coefficients.
/// - `dorroh-product`: Dorroh(R over S) → S × R, (r, s) ↦ (s, r + s·1).
/// - `skewtrunc-nagata`: right R[x;σ]/(x²) → Nagata(R, σ), c₀ + x c₁ ↦ (c₀, c₁).
/// - `triv-d2`: T(R, R) → D_2(R), (r, m) ↦ [[r, m], [0, r]].
/// - `same`: the identity on payloads, for rings sharing a representation.
pub fn named_iso(name: &str, source: &Ring, target: &Ring) -> Result<IsoCandidate, RingError> {
    let bad = |reason: &str| RingError::construction(format!("iso {name}"), reason.to_string());
    let (s, t) = (source.clone(), target.clone());
    let (forward, inverse): (ElemMap, ElemMap) = match name {
        "vn-trunc" => {
            let m = source
                .downcast::<MatrixRing>()
                .filter(|m| m.shape().name == ShapeName::Band)
                .ok_or_else(|| bad("source must be V(n, R)"))?;
            if target.kind() != RingKind::SkewTrunc {
                return Err(bad("target must be skewtrunc(R, id, n, left)"));
            }
            let n = m.n();
            let zero = m.base().zero();
            (
                Box::new(move |a: &Elem| Elem::Coeffs(a.matrix()[..n].to_vec())),
                Box::new(move |f: &Elem| {
                    let c = f.coeffs();
                    let mut grid = vec![zero.clone(); n * n];
                    for i in 0..n {
                        for j in i..n {
                            grid[i * n + j] = c[j - i].clone();
                        }
                    }
                    Elem::Matrix(grid)
                }),
            )
        }
        "dorroh-product" => {
            let d = source
                .downcast::<Dorroh>()
                .ok_or_else(|| bad("source must be a Dorroh extension"))?;
            if target.kind() != RingKind::Product {
                return Err(bad("target must be prod(S, R)"));
            }
            let amb = d.carrier().ambient().clone();
            let amb2 = amb.clone();
            (
                Box::new(move |a: &Elem| {
                    let (r, sc) = a.as_pair();
                    let shifted = amb.add(r, &amb.times(&amb.one(), &sc.res().into()));
                    Elem::Tuple(vec![sc.clone(), shifted])
                }),
                Box::new(move |b: &Elem| {
                    let t = b.tuple();
                    let r = amb2.sub(&t[1], &amb2.times(&amb2.one(), &t[0].res().into()));
                    Elem::pair(r, t[0].clone())
                }),
            )
        }
        "skewtrunc-nagata" => {
            if source.kind() != RingKind::SkewTrunc || target.kind() != RingKind::Nagata {
                return Err(bad("expects skewtrunc(R, σ, 2, right) and nagata(R, σ)"));
            }
            (
                Box::new(|a: &Elem| {
                    let c = a.coeffs();
                    Elem::pair(c[0].clone(), c[1].clone())
                }),
                Box::new(|b: &Elem| {
                    let (x, y) = b.as_pair();
                    Elem::Coeffs(vec![x.clone(), y.clone()])
                }),
            )
        }
        "triv-d2" => {
            if source.kind() != RingKind::Trivial {
                return Err(bad("source must be triv(R)"));
            }
            let zero = target
                .downcast::<MatrixRing>()
                .filter(|m| m.n() == 2)
                .ok_or_else(|| bad("target must be a 2×2 matrix ring"))?
                .base()
                .zero();
            (
                Box::new(move |a: &Elem| {
                    let (r, m) = a.as_pair();
                    Elem::Matrix(vec![r.clone(), m.clone(), zero.clone(), r.clone()])
                }),
                Box::new(|b: &Elem| {
                    let g = b.matrix();
                    Elem::pair(g[0].clone(), g[1].clone())
                }),
            )
        }
        "same" => (Box::new(|a: &Elem| a.clone()), Box::new(|b: &Elem| b.clone())),
        other => {
            return Err(RingError::construction(
                format!("iso {other}"),
                format!("unknown map; expected one of {}", ISO_MAPS.join(", ")),
            ))
        }
    };
    Ok(IsoCandidate {
        name: name.to_string(),
        source: s,
        target: t,
        forward,
        inverse,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::extension::{dorroh, trivial_extension, ActionKind, DorrohCarrier};
    use crate::constructions::matrix::matrix_ring;
    use crate::constructions::shape::MatrixShape;
    use crate::kernel::{product, zn};

    #[test]
    fn dorroh_is_a_product() {
        let r = product(zn(2).unwrap(), zn(2).unwrap());
        let d = dorroh(DorrohCarrier::Ring(r.clone()), zn(2).unwrap(), ActionKind::CentralHom).unwrap();
        let p = product(zn(2).unwrap(), r);
        let c = named_iso("dorroh-product", &d, &p).unwrap();
        assert!(verify_iso(&c).unwrap().holds);
    }

    #[test]
    fn trivial_extension_is_d2() {
        let t = trivial_extension(zn(3).unwrap());
        let d2 = matrix_ring(MatrixShape::scalar_diagonal(2), zn(3).unwrap());
        assert!(verify_iso(&named_iso("triv-d2", &t, &d2).unwrap()).unwrap().holds);
    }

    #[test]
    fn wrong_map_reports_a_law() {
        // Identity payload map from T(Z3, Z3) onto the commutative product Z3 × Z3
        // is not even well typed; the report names the first failure.
        let t = trivial_extension(zn(3).unwrap());
        let p = product(zn(3).unwrap(), zn(3).unwrap());
        let r = verify_iso(&named_iso("same", &t, &p).unwrap()).unwrap();
        assert!(!r.holds);
        assert_eq!(r.violation.unwrap().0, "f(a) ∈ target");
    }
}
