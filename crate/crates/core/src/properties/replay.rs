//! Witness replay from the ring expression and element literals alone.

use thiserror::Error;

use super::{Witness, WitnessKind};
use crate::dsl::{self, DslError};
use crate::kernel::{Elem, Endomorphism, Ring};
use crate::poly::{LaurentRing, SkewPolyRing};

#[derive(Debug, Error)]
pub enum ReplayError {
    #[error("witness ring: {0}")]
    Ring(#[from] DslError),
    #[error("witness does not typecheck: {0}")]
    Typecheck(String),
}

/// Outcome of re-evaluating each claimed equation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Replay {
    pub holds: bool,
    pub checks: Vec<(String, bool)>,
}

fn arity(kind: WitnessKind) -> Option<usize> {
    Some(match kind {
        WitnessKind::IReversibilityViolation
        | WitnessKind::ReversibilityViolation
        | WitnessKind::NonCentralIdempotent
        | WitnessKind::ArmendarizViolation => 2,
        WitnessKind::NontrivialIdempotent
        | WitnessKind::Nilpotent
        | WitnessKind::SigmaRigidViolation
        | WitnessKind::IdempotentDegreeViolation => 1,
        WitnessKind::EndomorphismViolation => return None,
    })
}

fn typecheck(msg: impl Into<String>) -> ReplayError {
    ReplayError::Typecheck(msg.into())
}

fn skew(ring: &Ring) -> Result<&SkewPolyRing, ReplayError> {
    ring.downcast::<SkewPolyRing>()
        .ok_or_else(|| typecheck(format!("{} is not a poly(R, σ) ring", ring.expr())))
}

/// Re-evaluates the witness's claim from scratch.
pub fn verify_witness(w: &Witness) -> Result<Replay, ReplayError> {
    let ring = dsl::ring(&w.ring)?;
    if w.kind == WitnessKind::EndomorphismViolation {
        return replay_endo(w, &ring);
    }
    if w.claim != w.kind.claim() {
        return Err(typecheck(format!("claim {:?} does not match kind {:?}", w.claim, w.kind)));
    }
    let n = arity(w.kind).expect("fixed arity");
    if w.elements.len() != n {
        return Err(typecheck(format!("expected {n} elements, found {}", w.elements.len())));
    }
    let els = w
        .elements
        .iter()
        .map(|t| ring.parse_elem(t).map_err(|e| typecheck(format!("`{t}`: {e}"))))
        .collect::<Result<Vec<Elem>, _>>()?;
    let r = &ring;
    let idem = |a: &Elem| r.mul(a, a) == *a;
    let results: Vec<bool> = match w.kind {
        WitnessKind::IReversibilityViolation => {
            let (ab, ba) = (r.mul(&els[0], &els[1]), r.mul(&els[1], &els[0]));
            vec![idem(&ab), !r.is_zero(&ab), !idem(&ba)]
        }
        WitnessKind::ReversibilityViolation => {
            vec![r.is_zero(&r.mul(&els[0], &els[1])), !r.is_zero(&r.mul(&els[1], &els[0]))]
        }
        WitnessKind::NontrivialIdempotent => {
            let e = &els[0];
            vec![idem(e), !r.is_zero(e), *e != r.one()]
        }
        WitnessKind::NonCentralIdempotent => {
            let (e, x) = (&els[0], &els[1]);
            vec![idem(e), r.mul(e, x) != r.mul(x, e)]
        }
        WitnessKind::Nilpotent => {
            let a = &els[0];
            vec![!r.is_zero(a), r.is_zero(&r.mul(a, a))]
        }
        WitnessKind::ArmendarizViolation => {
            let base = skew(r)?.base();
            let (f, g) = (els[0].coeffs(), els[1].coeffs());
            let cross = f.iter().any(|a| g.iter().any(|b| !base.is_zero(&base.mul(a, b))));
            vec![r.is_zero(&r.mul(&els[0], &els[1])), cross]
        }
        WitnessKind::SigmaRigidViolation => {
            let p = skew(r)?;
            let c = els[0].coeffs();
            if c.len() > 1 {
                return Err(typecheck("a sigma-rigid witness is a constant"));
            }
            let a = c.first().cloned().unwrap_or_else(|| p.base().zero());
            let prod = p.base().mul(&a, &p.sigma().apply(&a));
            vec![!p.base().is_zero(&a), p.base().is_zero(&prod)]
        }
        WitnessKind::IdempotentDegreeViolation => {
            let f = &els[0];
            let nonconstant = if r.downcast::<SkewPolyRing>().is_some() {
                f.coeffs().len() > 1
            } else if r.downcast::<LaurentRing>().is_some() {
                matches!(f, Elem::Laurent(lo, c) if !(*lo == 0 && c.len() <= 1))
            } else {
                return Err(typecheck(format!("{} is not a polynomial ring", r.expr())));
            };
            vec![idem(f), nonconstant]
        }
        WitnessKind::EndomorphismViolation => unreachable!("handled above"),
    };
    Ok(finish(&w.claim, results))
}

fn finish(claim: &[String], results: Vec<bool>) -> Replay {
    let checks: Vec<(String, bool)> = claim.iter().cloned().zip(results).collect();
    Replay {
        holds: checks.iter().all(|c| c.1),
        checks,
    }
}

fn replay_endo(w: &Witness, ring: &Ring) -> Result<Replay, ReplayError> {
    let [law, sigma] = w.claim.as_slice() else {
        return Err(typecheck("an endomorphism witness claims a law and `sigma = ...`"));
    };
    let spec_text = sigma
        .strip_prefix("sigma = ")
        .ok_or_else(|| typecheck("second claim must read `sigma = <endo>`"))?;
    let spec = dsl::parse_endo(spec_text)?;
    let map = Endomorphism::unchecked(ring, &spec).map_err(|e| typecheck(e.to_string()))?;
    let els = w
        .elements
        .iter()
        .map(|t| ring.parse_elem(t).map_err(|e| typecheck(format!("`{t}`: {e}"))))
        .collect::<Result<Vec<Elem>, _>>()?;
    let s = |a: &Elem| map.apply(a);
    let fails = match (law.as_str(), els.as_slice()) {
        ("σ(1) = 1", [_]) => s(&ring.one()) != ring.one(),
        ("σ(a+b) = σ(a)+σ(b)", [a, b]) => s(&ring.add(a, b)) != ring.add(&s(a), &s(b)),
        ("σ(ab) = σ(a)σ(b)", [a, b]) => s(&ring.mul(a, b)) != ring.mul(&s(a), &s(b)),
        _ => return Err(typecheck(format!("unknown law `{law}` for {} inputs", els.len()))),
    };
    Ok(Replay {
        holds: fails,
        checks: vec![(format!("{law} fails"), fails)],
    })
}
