//! Registry coverage, the full suite run and the negative controls.

use std::collections::{BTreeSet, HashSet};

use ringlab::constructions::closure;
use ringlab::dsl;
use ringlab::kernel::Elem;
use ringlab::properties::{check_i_reversible, CheckOptions};
use ringlab::subring::{intermediate_subrings, Ambient, SubringBasis};
use ringlab::suite::{list_claims, negative_controls, registry, run_checks, run_suite, Status, EXPECTED_IDS};

#[test]
fn registry_covers_exactly_the_expected_ids() {
    let ids: Vec<&str> = registry().iter().map(|c| c.id).collect();
    assert_eq!(ids, EXPECTED_IDS);
    let out: Vec<String> = list_claims().into_iter().filter(|c| !c.in_scope).map(|c| c.claim).collect();
    assert_eq!(out, ["Eg-2.3", "Eg-5.2"]);
}

#[test]
fn full_suite_passes() {
    let report = run_suite(None, &CheckOptions::deterministic());
    print!("{}", report.table());
    assert!(report.pass);
    assert_eq!(report.count(Status::Pass), EXPECTED_IDS.len() - 2);
    assert_eq!(report.count(Status::OutOfScope), 2);
    for c in &report.claims {
        assert_eq!(c.witnesses.len(), c.witness_files.len());
        if c.status == Status::Pass {
            assert!(!c.detail.is_empty(), "{}", c.claim);
        }
    }
}

#[test]
fn negative_controls_all_fail() {
    let controls = negative_controls();
    assert!(controls.len() >= 3);
    let report = run_checks(&controls, &CheckOptions::deterministic());
    assert!(!report.pass);
    for c in &report.claims {
        assert_eq!(c.status, Status::Fail, "{}", c.claim);
    }
}

/// Subrings S with D_3(GF2) ⊊ S ⊆ T_3(GF2), found as closures of D_3
/// together with one or two further elements: the quotient has dimension 2,
/// so nothing more is needed.
fn intermediate_sets_by_closure() -> BTreeSet<Vec<Elem>> {
    let t3 = dsl::ring("T(3, GF2)").unwrap();
    let d3: Vec<Elem> = dsl::ring("D(3, GF2)").unwrap().elements().unwrap();
    let base: HashSet<Elem> = d3.iter().cloned().collect();
    let all = t3.elements().unwrap();
    let mut found = BTreeSet::new();
    for x in &all {
        for y in &all {
            let mut gens = d3.clone();
            gens.push(x.clone());
            gens.push(y.clone());
            let s = closure(&t3, &gens, true);
            if s != base {
                let mut v: Vec<Elem> = s.into_iter().collect();
                v.sort();
                found.insert(v);
            }
        }
    }
    found
}

#[test]
fn d3_intermediate_subrings_match_closure_oracle() {
    let t3 = dsl::ring("T(3, GF2)").unwrap();
    let amb = Ambient::new(&t3).unwrap();
    let base = SubringBasis::of_ring(&amb, &dsl::ring("D(3, GF2)").unwrap(), &CheckOptions::default()).unwrap();
    let subs = intermediate_subrings(&base).unwrap();
    let oracle = intermediate_sets_by_closure();
    assert_eq!(subs.len(), oracle.len());
    assert_eq!(subs.len(), 4);
    let mut listed = BTreeSet::new();
    let mut i_reversible = 0;
    for s in &subs {
        let r = s.ring().unwrap();
        let mut v = r.elements().unwrap();
        v.sort();
        listed.insert(v);
        if check_i_reversible(&r, &CheckOptions::deterministic()).unwrap().holds {
            i_reversible += 1;
        }
    }
    assert_eq!(listed, oracle);
    assert_eq!(i_reversible, 3);
}
