//! Evaluation of ring expressions into rings.

use std::sync::Arc;

use super::parse::{MatrixKind, RingExpr};
use super::DslError;
use crate::constructions::{
    closure_ring, corner, dorroh, matrix::matrix_ring_checked, nagata, trivial_extension, DorrohCarrier,
    MatrixShape, Rng,
};
use crate::kernel::{
    ec_sequences, gf, gf4, integers, load_table_ring, product, quaternions, zn, Elem, EndoSpec, Endomorphism,
    Ring, RingError,
};
use crate::poly::{laurent_ring, skew_poly_ring, trunc_ring};

fn site(e: &RingExpr) -> impl Fn(RingError) -> DslError + '_ {
    move |source| DslError::Build {
        site: e.to_string(),
        source,
    }
}

fn literal(ring: &Ring, text: &str, e: &RingExpr) -> Result<Elem, DslError> {
    ring.parse_elem(text).map_err(|source| DslError::Literal {
        site: e.to_string(),
        text: text.to_string(),
        source,
    })
}

/// Resolves σ on `ring`, validating the endomorphism laws.
pub fn build_endo(ring: &Ring, spec: &EndoSpec) -> Result<Arc<Endomorphism>, RingError> {
    Endomorphism::new(ring, spec).map(Arc::new)
}

pub fn build(e: &RingExpr) -> Result<Ring, DslError> {
    let at = site(e);
    Ok(match e {
        RingExpr::Integers => integers(),
        RingExpr::Residues(m) => zn(*m).map_err(at)?,
        RingExpr::Field(4) => gf4(),
        RingExpr::Field(p) => gf(*p).map_err(at)?,
        RingExpr::Prod(a, b) => product(build(a)?, build(b)?),
        RingExpr::Matrix(kind, n, r) => {
            let shape = match kind {
                MatrixKind::Full => MatrixShape::full(*n),
                MatrixKind::Upper => MatrixShape::upper(*n),
                MatrixKind::ScalarDiagonal => MatrixShape::scalar_diagonal(*n),
                MatrixKind::Band => MatrixShape::band(*n),
            };
            matrix_ring_checked(shape, build(r)?).map_err(at)?
        }
        RingExpr::S3(r) => matrix_ring_checked(MatrixShape::s3(), build(r)?).map_err(at)?,
        RingExpr::S4(r) => matrix_ring_checked(MatrixShape::s4(), build(r)?).map_err(at)?,
        RingExpr::Triv(r) => trivial_extension(build(r)?),
        RingExpr::Quat(r) => quaternions(build(r)?).map_err(at)?,
        RingExpr::Dorroh(r, s, action) => {
            let carrier = match r.as_ref() {
                RingExpr::Rng(amb, gens) => {
                    let ambient = build(amb)?;
                    let gens = gens
                        .iter()
                        .map(|g| literal(&ambient, g, r))
                        .collect::<Result<Vec<_>, _>>()?;
                    DorrohCarrier::Rng(Rng::generated(&ambient, &gens).map_err(site(r))?)
                }
                other => DorrohCarrier::Ring(build(other)?),
            };
            dorroh(carrier, build(s)?, *action).map_err(at)?
        }
        RingExpr::Nagata(r, spec) => {
            let base = build(r)?;
            let sigma = build_endo(&base, spec).map_err(&at)?;
            nagata(base, sigma).map_err(at)?
        }
        RingExpr::SkewTrunc(r, spec, k, conv) => {
            let base = build(r)?;
            let sigma = build_endo(&base, spec).map_err(&at)?;
            trunc_ring(base, sigma, *k, *conv).map_err(at)?
        }
        RingExpr::Poly(r, spec) => {
            let base = build(r)?;
            let sigma = build_endo(&base, spec).map_err(&at)?;
            skew_poly_ring(base, sigma).map_err(at)?
        }
        RingExpr::Laurent(r) => laurent_ring(build(r)?),
        RingExpr::Corner(r, lit) => {
            let ambient = build(r)?;
            let idem = literal(&ambient, lit, e)?;
            corner(&ambient, &idem).map_err(at)?
        }
        RingExpr::Closure(r, gens) => {
            let ambient = build(r)?;
            let gens = gens
                .iter()
                .map(|g| literal(&ambient, g, e))
                .collect::<Result<Vec<_>, _>>()?;
            closure_ring(&ambient, &gens).map_err(at)?
        }
        RingExpr::Rng(..) => {
            return Err(at(RingError::construction(
                e.to_string(),
                "a generated rng has no unity; use it as the carrier of dorroh(...)",
            )))
        }
        RingExpr::EcSeq(r, len) => ec_sequences(build(r)?, *len).map_err(at)?,
        RingExpr::Table(path) => load_table_ring(path).map_err(at)?,
    })
}
