//! Library checks against definition-transcription oracles on every catalog
//! ring with at most 64 elements, plus the oracle values frozen once.

mod common;

use ringlab::dsl;
use ringlab::properties::{
    check_abelian, check_i_reversible, check_reduced, check_reversible, check_trivial_idempotents, idempotents,
    CheckOptions,
};
use ringlab::suite::catalog;

use common::*;

/// (ring, size, reversible, i-reversible, #idempotents, abelian, reduced),
/// computed by the oracles in `common`.
const FROZEN: &[(&str, u64, bool, bool, usize, bool, bool)] = &[
    ("Z1", 1, true, true, 1, true, true),
    ("Z2", 2, true, true, 2, true, true),
    ("Z3", 3, true, true, 2, true, true),
    ("Z4", 4, true, true, 2, true, false),
    ("Z6", 6, true, true, 4, true, true),
    ("Z8", 8, true, true, 2, true, false),
    ("Z9", 9, true, true, 2, true, false),
    ("GF4", 4, true, true, 2, true, true),
    ("GF5", 5, true, true, 2, true, true),
    ("prod(Z2, Z2)", 4, true, true, 4, true, true),
    ("prod(Z3, Z3)", 9, true, true, 4, true, true),
    ("T(2, Z2)", 8, false, true, 6, false, false),
    ("T(2, Z3)", 27, false, true, 8, false, false),
    ("T(3, Z2)", 64, false, false, 26, false, false),
    ("M(2, Z2)", 16, false, true, 8, false, false),
    ("D(3, Z2)", 16, false, true, 2, true, false),
    ("S3(GF2)", 32, false, true, 10, false, false),
    ("triv(Z4)", 16, true, true, 2, true, false),
    ("triv(Z6)", 36, true, true, 4, true, false),
    ("triv(triv(Z2))", 16, true, true, 2, true, false),
    ("dorroh(M(2, Z2), Z2, hom)", 32, false, false, 16, false, false),
    ("skewtrunc(GF4, frob, 3, left)", 64, true, true, 2, true, false),
];

fn small_catalog() -> Vec<&'static str> {
    catalog()
        .into_iter()
        .filter(|e| dsl::ring(e).unwrap().size().is_some_and(|n| n <= 64))
        .collect()
}

#[test]
fn frozen_table_covers_the_small_catalog() {
    let names: Vec<&str> = FROZEN.iter().map(|row| row.0).collect();
    assert_eq!(names, small_catalog());
}

#[test]
fn oracles_reproduce_frozen_values() {
    for &(e, size, rev, irev, idem, abelian, reduced) in FROZEN {
        let r = dsl::ring(e).unwrap();
        assert_eq!(r.size(), Some(size), "{e}");
        assert_eq!(oracle_reversible(&r), rev, "{e}");
        assert_eq!(oracle_i_reversible(&r), irev, "{e}");
        assert_eq!(oracle_idempotents(&r).len(), idem, "{e}");
        assert_eq!(oracle_abelian(&r), abelian, "{e}");
        assert_eq!(oracle_reduced(&r), reduced, "{e}");
    }
}

#[test]
fn library_matches_frozen_values() {
    let opts = CheckOptions::deterministic();
    for &(e, _, rev, irev, idem, abelian, reduced) in FROZEN {
        let r = dsl::ring(e).unwrap();
        assert_eq!(check_reversible(&r, &opts).unwrap().holds, rev, "reversible {e}");
        assert_eq!(check_i_reversible(&r, &opts).unwrap().holds, irev, "i-reversible {e}");
        assert_eq!(idempotents(&r, &opts).unwrap().len(), idem, "idempotents {e}");
        assert_eq!(check_trivial_idempotents(&r, &opts).unwrap().holds, idem <= 2, "trivial idempotents {e}");
        assert_eq!(check_abelian(&r, &opts).unwrap().holds, abelian, "abelian {e}");
        assert_eq!(check_reduced(&r, &opts).unwrap().holds, reduced, "reduced {e}");
    }
}

#[test]
fn idempotent_sets_agree_elementwise() {
    let opts = CheckOptions::deterministic();
    for e in small_catalog() {
        let r = dsl::ring(e).unwrap();
        let mut lib = idempotents(&r, &opts).unwrap();
        let mut oracle = oracle_idempotents(&r);
        lib.sort();
        oracle.sort();
        assert_eq!(lib, oracle, "{e}");
    }
}
