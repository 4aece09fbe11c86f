//! Unital ring endomorphisms.

use std::path::{Path, PathBuf};
use std::sync::{Arc, OnceLock};

use rayon::prelude::*;

use super::elem::Elem;
use super::error::RingError;
use super::ring::{Ring, RingKind};

/// Syntactic description of an endomorphism, resolved against a ring by
/// [`Endomorphism::new`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EndoSpec {
    Identity,
    /// (a, b) ↦ (b, a) on R × R.
    Swap,
    /// (a, b) ↦ (α(a), β(b)) on a product.
    Componentwise(Box<EndoSpec>, Box<EndoSpec>),
    /// a ↦ a^p where p is the (prime) characteristic.
    Frobenius,
    /// (a₁, a₂, …) ↦ (a₂, a₃, …) on eventually constant sequences.
    Shift,
    /// (a, b) ↦ (a, 0) on a trivial extension.
    DiagProjection,
    /// Image table read from a file: the i-th entry is the index of σ(i).
    Table(PathBuf),
}

impl EndoSpec {
    pub fn expr(&self) -> String {
        match self {
            EndoSpec::Identity => "id".into(),
            EndoSpec::Swap => "swap".into(),
            EndoSpec::Componentwise(a, b) => format!("cw({}, {})", a.expr(), b.expr()),
            EndoSpec::Frobenius => "frob".into(),
            EndoSpec::Shift => "shift".into(),
            EndoSpec::DiagProjection => "diagproj".into(),
            EndoSpec::Table(p) => format!("etable({})", p.display()),
        }
    }
}

#[derive(Debug)]
enum Map {
    Identity,
    Swap,
    Componentwise(Box<Endomorphism>, Box<Endomorphism>),
    Power(u64),
    Shift,
    DiagProjection(Elem),
    Table(Vec<u32>),
}

/// A map R → R resolved from an [`EndoSpec`]. Instances built through
/// [`Endomorphism::new`] have passed [`Endomorphism::check_laws`].
#[derive(Debug)]
pub struct Endomorphism {
    ring: Ring,
    expr: String,
    map: Map,
    images: OnceLock<Option<Arc<Vec<u32>>>>,
}

/// Outcome of checking the unital homomorphism laws.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LawCheck {
    pub holds: bool,
    /// Failed law and the inputs, as element literals.
    pub violation: Option<(String, Vec<String>)>,
    pub checked: usize,
}

fn structural(spec: &EndoSpec, ring: &Ring, reason: impl Into<String>) -> RingError {
    RingError::construction(format!("{} on {}", spec.expr(), ring.expr()), reason)
}

impl Endomorphism {
    /// Resolves and validates; any failed law is an error.
    pub fn new(ring: &Ring, spec: &EndoSpec) -> Result<Endomorphism, RingError> {
        let e = Self::unchecked(ring, spec)?;
        e.validate()?;
        Ok(e)
    }

    /// Resolves without checking the homomorphism laws. Structural mismatches
    /// (swap on a non-product, a short table) are still errors.
    pub fn unchecked(ring: &Ring, spec: &EndoSpec) -> Result<Endomorphism, RingError> {
        let map = match spec {
            EndoSpec::Identity => Map::Identity,
            EndoSpec::Swap => {
                let p = ring
                    .downcast::<super::base::Product>()
                    .ok_or_else(|| structural(spec, ring, "swap needs a product R × R"))?;
                if p.left().expr() != p.right().expr() {
                    return Err(structural(spec, ring, "swap needs equal factors"));
                }
                Map::Swap
            }
            EndoSpec::Componentwise(a, b) => {
                let p = ring
                    .downcast::<super::base::Product>()
                    .ok_or_else(|| structural(spec, ring, "cw needs a product"))?;
                Map::Componentwise(
                    Box::new(Endomorphism::unchecked(p.left(), a)?),
                    Box::new(Endomorphism::unchecked(p.right(), b)?),
                )
            }
            EndoSpec::Frobenius => {
                let p = ring
                    .characteristic(1 << 20)
                    .filter(|&c| super::base::is_prime(c))
                    .ok_or_else(|| structural(spec, ring, "frob needs prime characteristic"))?;
                Map::Power(p)
            }
            EndoSpec::Shift => {
                if ring.kind() != RingKind::Sequences {
                    return Err(structural(spec, ring, "shift needs a sequence ring"));
                }
                Map::Shift
            }
            EndoSpec::DiagProjection => {
                let t = ring
                    .downcast::<crate::constructions::extension::Trivial>()
                    .ok_or_else(|| structural(spec, ring, "diagproj needs a trivial extension"))?;
                Map::DiagProjection(t.base().zero())
            }
            EndoSpec::Table(path) => Map::Table(read_table_map(ring, path)?),
        };
        Ok(Endomorphism {
            ring: ring.clone(),
            expr: spec.expr(),
            map,
            images: OnceLock::new(),
        })
    }

    /// Table-backed map given directly as element indices.
    pub fn from_table(ring: &Ring, name: &str, images: Vec<u32>) -> Result<Endomorphism, RingError> {
        let n = ring.require_finite()?;
        if images.len() as u64 != n || images.iter().any(|&i| i as u64 >= n) {
            return Err(RingError::construction(
                format!("{name} on {}", ring.expr()),
                format!("map must list {n} images, each below {n}"),
            ));
        }
        Ok(Endomorphism {
            ring: ring.clone(),
            expr: name.to_string(),
            map: Map::Table(images),
            images: OnceLock::new(),
        })
    }

    pub fn identity(ring: &Ring) -> Endomorphism {
        Self::unchecked(ring, &EndoSpec::Identity).expect("identity always resolves")
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn expr(&self) -> &str {
        &self.expr
    }

    pub fn is_identity(&self) -> bool {
        matches!(self.map, Map::Identity)
    }

    pub fn apply(&self, a: &Elem) -> Elem {
        match &self.map {
            Map::Identity => a.clone(),
            Map::Swap => {
                let t = a.tuple();
                Elem::Tuple(vec![t[1].clone(), t[0].clone()])
            }
            Map::Componentwise(f, g) => {
                let t = a.tuple();
                Elem::Tuple(vec![f.apply(&t[0]), g.apply(&t[1])])
            }
            Map::Power(p) => self.ring.pow(a, *p),
            Map::Shift => self
                .ring
                .downcast::<super::sequence::Sequences>()
                .expect("sequence ring")
                .shift(a),
            Map::DiagProjection(zero) => Elem::pair(a.as_pair().0.clone(), zero.clone()),
            Map::Table(t) => self.ring.element_at_unchecked(t[self.ring.index_of_unchecked(a) as usize] as u64),
        }
    }

    /// σᵏ(a).
    pub fn apply_pow(&self, a: &Elem, k: usize) -> Elem {
        if self.is_identity() {
            return a.clone();
        }
        (0..k).fold(a.clone(), |x, _| self.apply(&x))
    }

    /// Image of every element index, for rings with a cached view.
    pub fn index_map(&self) -> Option<Arc<Vec<u32>>> {
        self.images
            .get_or_init(|| {
                let view = self.ring.view()?;
                let map = view
                    .elems
                    .par_iter()
                    .map(|a| self.ring.index_of_unchecked(&self.apply(a)) as u32)
                    .collect();
                Some(Arc::new(map))
            })
            .clone()
    }

    /// Injectivity: exhaustive on finite rings, structural otherwise.
    pub fn is_injective(&self) -> Option<bool> {
        if let Some(n) = self.ring.size().filter(|&n| n <= 1 << 20) {
            let mut seen = std::collections::HashSet::with_capacity(n as usize);
            return Some(
                (0..n).all(|i| seen.insert(self.apply(&self.ring.element_at_unchecked(i)))),
            );
        }
        match &self.map {
            Map::Identity | Map::Swap => Some(true),
            Map::Componentwise(f, g) => Some(f.is_injective()? && g.is_injective()?),
            Map::Shift => Some(false),
            Map::DiagProjection(_) => Some(false),
            _ => None,
        }
    }

    /// Checks σ(1) = 1, additivity and multiplicativity over the ring's
    /// check set (the whole carrier for finite rings of size ≤ 2048; larger
    /// carriers use an evenly strided subset of 2048 elements).
    pub fn check_laws(&self) -> LawCheck {
        let r = &self.ring;
        let lit = |a: &Elem| r.fmt_elem(a);
        if self.apply(&r.one()) != r.one() {
            return LawCheck {
                holds: false,
                violation: Some(("σ(1) = 1".into(), vec![lit(&r.one())])),
                checked: 1,
            };
        }
        let set = match r.size() {
            Some(n) if n > 2048 => {
                let step = n / 2048;
                (0..2048).map(|k| r.element_at_unchecked(k * step)).collect()
            }
            _ => r.check_set(),
        };
        let images: Vec<Elem> = set.par_iter().map(|a| self.apply(a)).collect();
        let bad = (0..set.len()).into_par_iter().find_first(|&i| {
            (0..set.len()).any(|j| self.pair_violation(&set, &images, i, j).is_some())
        });
        match bad {
            None => LawCheck {
                holds: true,
                violation: None,
                checked: set.len() * set.len(),
            },
            Some(i) => {
                let (j, law) = (0..set.len())
                    .find_map(|j| self.pair_violation(&set, &images, i, j).map(|l| (j, l)))
                    .expect("violation found above");
                LawCheck {
                    holds: false,
                    violation: Some((law.into(), vec![lit(&set[i]), lit(&set[j])])),
                    checked: i * set.len() + j + 1,
                }
            }
        }
    }

    fn pair_violation(&self, set: &[Elem], images: &[Elem], i: usize, j: usize) -> Option<&'static str> {
        let r = &self.ring;
        let (a, b) = (&set[i], &set[j]);
        if self.apply(&r.add(a, b)) != r.add(&images[i], &images[j]) {
            return Some("σ(a+b) = σ(a)+σ(b)");
        }
        if self.apply(&r.mul(a, b)) != r.mul(&images[i], &images[j]) {
            return Some("σ(ab) = σ(a)σ(b)");
        }
        None
    }

    fn validate(&self) -> Result<(), RingError> {
        let check = self.check_laws();
        match check.violation {
            None => Ok(()),
            Some((law, inputs)) => Err(RingError::InvalidEndomorphism {
                endo: self.expr.clone(),
                ring: self.ring.expr(),
                law,
                inputs: format!("({})", inputs.join(", ")),
            }),
        }
    }
}

/// Reads a whitespace separated list of image indices.
fn read_table_map(ring: &Ring, path: &Path) -> Result<Vec<u32>, RingError> {
    let n = ring.require_finite()?;
    let what = || format!("etable({}) on {}", path.display(), ring.expr());
    let text = std::fs::read_to_string(path)
        .map_err(|e| RingError::construction(what(), e.to_string()))?;
    let images: Vec<u32> = text
        .split_whitespace()
        .map(|t| t.parse::<u32>())
        .collect::<Result<_, _>>()
        .map_err(|e| RingError::construction(what(), format!("bad entry: {e}")))?;
    if images.len() as u64 != n {
        return Err(RingError::construction(
            what(),
            format!("map is not total: {} images for {n} elements", images.len()),
        ));
    }
    if let Some(bad) = images.iter().find(|&&i| i as u64 >= n) {
        return Err(RingError::construction(what(), format!("image {bad} out of range")));
    }
    Ok(images)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::base::{product, zn};
    use crate::kernel::sequence::ec_sequences;
    use crate::kernel::table::gf4;

    #[test]
    fn swap_on_z3_squared_is_valid() {
        let r = product(zn(3).unwrap(), zn(3).unwrap());
        let s = Endomorphism::new(&r, &EndoSpec::Swap).unwrap();
        assert_eq!(s.check_laws().violation, None);
        assert_eq!(s.apply(&r.parse_elem("(1, 2)").unwrap()), r.parse_elem("(2, 1)").unwrap());
        assert_eq!(s.is_injective(), Some(true));
    }

    #[test]
    fn shift_is_valid_and_not_injective() {
        let r = ec_sequences(zn(2).unwrap(), 4).unwrap();
        let s = Endomorphism::new(&r, &EndoSpec::Shift).unwrap();
        assert!(s.check_laws().holds);
        assert_eq!(s.is_injective(), Some(false));
    }

    #[test]
    fn doubling_on_z4_is_rejected() {
        let r = zn(4).unwrap();
        let e = Endomorphism::from_table(&r, "double", vec![0, 2, 0, 2]).unwrap();
        let c = e.check_laws();
        assert!(!c.holds);
        assert_eq!(c.violation.unwrap().0, "σ(1) = 1");
    }

    #[test]
    fn frobenius_on_gf4_swaps_the_generators() {
        let f = gf4();
        let s = Endomorphism::new(&f, &EndoSpec::Frobenius).unwrap();
        assert_eq!(s.apply(&Elem::Table(2)), Elem::Table(3));
        assert_eq!(s.apply(&Elem::Table(3)), Elem::Table(2));
        assert_eq!(s.index_map().unwrap().as_slice(), &[0, 1, 3, 2]);
    }

    #[test]
    fn short_table_is_not_total() {
        let r = zn(4).unwrap();
        assert!(Endomorphism::from_table(&r, "t", vec![0, 1, 2]).is_err());
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("m.txt");
        std::fs::write(&p, "0 1 2").unwrap();
        let err = Endomorphism::unchecked(&r, &EndoSpec::Table(p)).unwrap_err();
        assert!(err.to_string().contains("not total"), "{err}");
    }

    #[test]
    fn swap_on_unequal_factors_is_rejected() {
        let r = product(zn(2).unwrap(), zn(3).unwrap());
        assert!(Endomorphism::new(&r, &EndoSpec::Swap).is_err());
    }
}
