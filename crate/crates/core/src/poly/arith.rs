//! Coefficient-list arithmetic for skew and Laurent polynomials.

use crate::kernel::{Elem, Endomorphism, Ring};

/// Which side coefficients sit on relative to powers of x.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Convention {
    /// Σ aᵢxⁱ with xb = σ(b)x.
    Left,
    /// Σ xⁱaᵢ with bx = xσ(b).
    Right,
}

impl Convention {
    pub fn keyword(self) -> &'static str {
        match self {
            Convention::Left => "left",
            Convention::Right => "right",
        }
    }
}

/// Drops trailing zero coefficients.
pub fn trim(base: &Ring, mut c: Vec<Elem>) -> Vec<Elem> {
    let zero = base.zero();
    while c.last() == Some(&zero) {
        c.pop();
    }
    c
}

/// σⁱ(b) for i < `count`, shared across a whole product.
fn powers(sigma: &Endomorphism, b: &Elem, count: usize) -> Vec<Elem> {
    let mut out = Vec::with_capacity(count);
    let mut cur = b.clone();
    for i in 0..count {
        if i > 0 {
            cur = sigma.apply(&cur);
        }
        out.push(cur.clone());
    }
    out
}

/// Exact product in R[x;σ]; with `truncate = Some(k)` only the coefficients
/// of x⁰..x^{k−1} are computed. The result is not trimmed.
pub fn skew_mul(
    base: &Ring,
    sigma: &Endomorphism,
    conv: Convention,
    f: &[Elem],
    g: &[Elem],
    truncate: Option<usize>,
) -> Vec<Elem> {
    if f.is_empty() || g.is_empty() {
        return Vec::new();
    }
    let full = f.len() + g.len() - 1;
    let len = truncate.map_or(full, |k| k.min(full));
    let zero = base.zero();
    let mut out = vec![zero.clone(); len];
    let ident = sigma.is_identity();
    match conv {
        Convention::Left => {
            // a xⁱ · b xʲ = a σⁱ(b) x^{i+j}
            for (j, b) in g.iter().enumerate() {
                if *b == zero {
                    continue;
                }
                let span = len.saturating_sub(j).min(f.len());
                let tw = if ident { Vec::new() } else { powers(sigma, b, span) };
                for (i, a) in f.iter().enumerate().take(span) {
                    if *a == zero {
                        continue;
                    }
                    let sb = if ident { b } else { &tw[i] };
                    out[i + j] = base.add(&out[i + j], &base.mul(a, sb));
                }
            }
        }
        Convention::Right => {
            // xⁱ a · xʲ b = x^{i+j} σʲ(a) b
            for (i, a) in f.iter().enumerate() {
                if *a == zero {
                    continue;
                }
                let span = len.saturating_sub(i).min(g.len());
                let tw = if ident { Vec::new() } else { powers(sigma, a, span) };
                for (j, b) in g.iter().enumerate().take(span) {
                    if *b == zero {
                        continue;
                    }
                    let sa = if ident { a } else { &tw[j] };
                    out[i + j] = base.add(&out[i + j], &base.mul(sa, b));
                }
            }
        }
    }
    out
}

pub fn poly_add(base: &Ring, f: &[Elem], g: &[Elem]) -> Vec<Elem> {
    let zero = base.zero();
    (0..f.len().max(g.len()))
        .map(|k| {
            let a = f.get(k).unwrap_or(&zero);
            let b = g.get(k).unwrap_or(&zero);
            base.add(a, b)
        })
        .collect()
}

/// Laurent product on shifted supports: (lo_f, f)·(lo_g, g).
pub fn laurent_mul(base: &Ring, lo_f: i64, f: &[Elem], lo_g: i64, g: &[Elem]) -> (i64, Vec<Elem>) {
    let id = Endomorphism::identity(base);
    (lo_f + lo_g, skew_mul(base, &id, Convention::Left, f, g, None))
}

/// Canonical Laurent support: no zero coefficients at either end; the zero
/// polynomial is (0, []).
pub fn laurent_normalize(base: &Ring, lo: i64, c: Vec<Elem>) -> (i64, Vec<Elem>) {
    let zero = base.zero();
    let Some(first) = c.iter().position(|a| *a != zero) else {
        return (0, Vec::new());
    };
    let last = c.iter().rposition(|a| *a != zero).expect("nonzero exists");
    (lo + first as i64, c[first..=last].to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{product, zn, EndoSpec};

    #[test]
    fn identity_sigma_is_ordinary_multiplication() {
        let z2 = zn(2).unwrap();
        let id = Endomorphism::identity(&z2);
        let one_plus_x = vec![Elem::Res(1), Elem::Res(1)];
        let sq = skew_mul(&z2, &id, Convention::Left, &one_plus_x, &one_plus_x, None);
        assert_eq!(trim(&z2, sq), vec![Elem::Res(1), Elem::Res(0), Elem::Res(1)]);
    }

    #[test]
    fn swap_example() {
        let r = product(zn(2).unwrap(), zn(2).unwrap());
        let s = Endomorphism::new(&r, &EndoSpec::Swap).unwrap();
        let e = r.parse_elem("(1, 0)").unwrap();
        let f = vec![r.zero(), e.clone()];
        let g = vec![e.clone()];
        let fg = skew_mul(&r, &s, Convention::Left, &f, &g, None);
        assert!(trim(&r, fg).is_empty());
        let gf = skew_mul(&r, &s, Convention::Left, &g, &f, None);
        assert_eq!(trim(&r, gf), f);
    }

    #[test]
    fn laurent_square() {
        let z6 = zn(6).unwrap();
        let f = vec![Elem::Res(3), Elem::Res(0), Elem::Res(3)];
        let (lo, c) = laurent_mul(&z6, -1, &f, -1, &f);
        let (lo, c) = laurent_normalize(&z6, lo, c);
        assert_eq!(lo, -2);
        assert_eq!(c, vec![Elem::Res(3), Elem::Res(0), Elem::Res(0), Elem::Res(0), Elem::Res(3)]);
    }
}
