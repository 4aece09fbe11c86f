//! Fixed ring catalog for law checks, and claims that are meant to fail.

use super::{Checker, ClaimCheck};

/// Finite rings of sizes 1 to 2048 covering every construction.
pub fn catalog() -> Vec<&'static str> {
    vec![
        "Z1",
        "Z2",
        "Z3",
        "Z4",
        "Z6",
        "Z8",
        "Z9",
        "GF4",
        "GF5",
        "prod(Z2, Z2)",
        "prod(Z3, Z3)",
        "T(2, Z2)",
        "T(2, Z3)",
        "T(2, Z6)",
        "T(3, Z2)",
        "T(4, Z2)",
        "M(2, Z2)",
        "M(2, Z3)",
        "D(3, Z2)",
        "D(3, Z4)",
        "D(5, Z2)",
        "V(3, Z6)",
        "S3(GF2)",
        "S4(GF2)",
        "triv(Z4)",
        "triv(Z6)",
        "triv(prod(Z3, Z3))",
        "triv(triv(Z2))",
        "H(Z3)",
        "nagata(prod(Z3, Z3), swap)",
        "dorroh(M(2, Z2), Z2, hom)",
        "skewtrunc(GF4, frob, 3, left)",
    ]
}

/// Deliberately false claims; a sound suite reports each of them as failed.
pub fn negative_controls() -> Vec<ClaimCheck> {
    vec![
        ClaimCheck {
            id: "NC-1",
            anchor: "T(3, Z2) is i-reversible",
            proxy: None,
            checker: Checker::Run(|s| {
                s.prop("i-reversible", "T(3, Z2)", true);
            }),
        },
        ClaimCheck {
            id: "NC-2",
            anchor: "D(3, Z6) is i-reversible",
            proxy: None,
            checker: Checker::Run(|s| {
                s.prop("i-reversible", "D(3, Z6)", true);
            }),
        },
        ClaimCheck {
            id: "NC-3",
            anchor: "M(2, Z2) is reversible",
            proxy: None,
            checker: Checker::Run(|s| {
                s.prop("reversible", "M(2, Z2)", true);
            }),
        },
        ClaimCheck {
            id: "NC-4",
            anchor: "D(3, GF2) is maximal i-reversible in T(3, GF2)",
            proxy: None,
            checker: Checker::Run(|s| {
                s.maximal("D(3, GF2)", "T(3, GF2)", true);
            }),
        },
    ]
}
