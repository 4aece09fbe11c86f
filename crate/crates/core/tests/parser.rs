//! The ring-expression corpus: printing, reparsing and error reporting.

mod common;

use ringlab::dsl::{self, DslError};

use common::CORPUS;

#[test]
fn corpus_round_trips() {
    assert_eq!(CORPUS.len(), 50);
    for s in CORPUS {
        let tree = dsl::parse(s).unwrap_or_else(|e| panic!("{s}: {e}"));
        let printed = tree.to_string();
        assert_eq!(dsl::parse(&printed).unwrap(), tree, "{s}");
        assert_eq!(dsl::parse(&printed).unwrap().to_string(), printed, "{s}");
    }
}

#[test]
fn built_rings_print_their_canonical_form() {
    for s in CORPUS {
        let r = dsl::ring(s).unwrap_or_else(|e| panic!("{s}: {e}"));
        assert_eq!(r.expr(), dsl::parse(s).unwrap().to_string(), "{s}");
    }
}

#[test]
fn syntax_errors_carry_line_and_column() {
    for (text, line, column) in [("prod(Z2,", 1, 9), ("prod(Z2, Z3", 1, 12), ("T(3,\n Zq)", 2, 2)] {
        match dsl::parse(text) {
            Err(DslError::Syntax { line: l, column: c, .. }) => assert_eq!((l, c), (line, column), "{text:?}"),
            other => panic!("{text:?}: {other:?}"),
        }
    }
}

#[test]
fn semantic_errors_name_the_construction() {
    for (text, needle) in [
        ("GF 6", "not prime"),
        ("nagata(M(2, Z2), id)", "commutative"),
        ("dorroh(Z4, Z2, char)", "dorroh(Z4, Z2, char)"),
    ] {
        let err = dsl::ring(text).err().unwrap_or_else(|| panic!("{text} built"));
        assert!(matches!(err, DslError::Build { .. }), "{text}: {err:?}");
        assert!(err.to_string().contains(needle), "{text}: {err}");
    }
}

#[test]
fn sizes_follow_the_construction_laws() {
    for (text, size) in [
        ("D(5, Z2)", 2048),
        ("nagata(prod(Z3, Z3), swap)", 81),
        ("triv(triv(Z4))", 256),
        ("dorroh(M(2, Z2), Z2, hom)", 32),
        ("skewtrunc(GF4, frob, 3, left)", 64),
        ("S4(GF 3)", 3u64.pow(8)),
        ("V(4, GF4)", 4u64.pow(4)),
        ("H(Z3)", 81),
    ] {
        assert_eq!(dsl::ring(text).unwrap().size(), Some(size), "{text}");
    }
}
