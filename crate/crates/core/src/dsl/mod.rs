//! The ring-expression language.
//!
//! ```text
//! ring := Z | Z<m> | GF<p> | prod(ring, ring) | M(n, ring) | T(n, ring)
//!       | D(n, ring) | V(n, ring) | S3(ring) | S4(ring) | triv(ring) | H(ring)
//!       | dorroh(ring, ring, hom|char) | nagata(ring, endo)
//!       | skewtrunc(ring, endo, k, left|right) | corner(ring, elem)
//!       | closure(ring, elem, ...) | rng(ring, elem, ...) | ecseq(ring, len)
//!       | table(path) | poly(ring, endo) | laurent(ring)
//! endo := id | swap | cw(endo, endo) | frob | shift | diagproj | etable(path)
//! ```
//!
//! `Z 6` and `GF 2` may be written with a space. `GF4` is the bundled
//! four-element field; other non-prime orders are rejected. `rng(...)` is
//! only accepted as the carrier of a Dorroh extension.

mod build;
mod parse;

use thiserror::Error;

use crate::kernel::{EndoSpec, LiteralError, Ring, RingError};

pub use build::{build, build_endo};
pub use parse::{MatrixKind, RingExpr};

#[derive(Debug, Error)]
pub enum DslError {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("in {site}: {source}")]
    Build {
        site: String,
        #[source]
        source: RingError,
    },
    #[error("in {site}: element `{text}`: {source}")]
    Literal {
        site: String,
        text: String,
        #[source]
        source: LiteralError,
    },
}

pub fn parse(text: &str) -> Result<RingExpr, DslError> {
    let mut p = parse::Parser::new(text);
    let e = p.ring()?;
    p.finish()?;
    Ok(e)
}

pub fn parse_endo(text: &str) -> Result<EndoSpec, DslError> {
    let mut p = parse::Parser::new(text);
    let e = p.endo()?;
    p.finish()?;
    Ok(e)
}

/// Parses and builds.
pub fn ring(text: &str) -> Result<Ring, DslError> {
    build(&parse(text)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spaced_residues_and_fields() {
        assert_eq!(parse("GF 2").unwrap(), RingExpr::Field(2));
        assert_eq!(parse("Z 6").unwrap(), RingExpr::Residues(6));
        assert_eq!(parse("Z").unwrap(), RingExpr::Integers);
        assert_eq!(parse("S4(GF 2)").unwrap().to_string(), "S4(GF2)");
        assert_eq!(parse("T(4, GF 2)").unwrap().to_string(), "T(4, GF2)");
    }

    #[test]
    fn sizes_of_built_rings() {
        assert_eq!(ring("D(5, Z2)").unwrap().size(), Some(2048));
        assert_eq!(ring("nagata(prod(Z3,Z3), swap)").unwrap().size(), Some(81));
        assert_eq!(ring("GF4").unwrap().size(), Some(4));
        assert_eq!(ring("corner(T(2, Z2), [[1, 0], [0, 0]])").unwrap().size(), Some(2));
    }

    #[test]
    fn errors_carry_positions_and_sites() {
        let e = ring("GF 6").unwrap_err();
        assert!(e.to_string().contains("not prime"), "{e}");
        match parse("prod(Z2,\n  Q3)").unwrap_err() {
            DslError::Syntax { line, column, .. } => assert_eq!((line, column), (2, 3)),
            other => panic!("{other}"),
        }
        let e = ring("nagata(M(2, Z2), id)").unwrap_err();
        assert!(e.to_string().starts_with("in nagata(M(2, Z2), id)"), "{e}");
        assert!(parse("T(3, Z2) x").is_err());
        assert!(ring("rng(Z4, 2)").is_err());
    }

    #[test]
    fn canonical_print_matches_ring_expr() {
        for s in [
            "triv(triv(prod(H(Z), H(Z))))",
            "dorroh(M(2, Z2), Z2, hom)",
            "skewtrunc(GF4, frob, 3, left)",
            "poly(prod(Z6, Z6), swap)",
            "laurent(Z6)",
            "ecseq(Z2, 4)",
            "V(3, Z6)",
        ] {
            assert_eq!(parse(s).unwrap().to_string(), s);
            assert_eq!(ring(s).unwrap().expr(), s);
        }
    }
}
