//! Helpers shared by the integration tests: definition-transcription
//! oracles and the parser corpus.

#![allow(dead_code)]

use ringlab::kernel::{Elem, Ring};

/// Every ordered pair (a, b) with ab a nonzero idempotent also has ba
/// idempotent. Plain double loop over the element list.
pub fn oracle_i_reversible(r: &Ring) -> bool {
    let xs = r.elements().expect("finite");
    let zero = r.zero();
    xs.iter().all(|a| {
        xs.iter().all(|b| {
            let ab = r.mul(a, b);
            if ab == zero || r.mul(&ab, &ab) != ab {
                return true;
            }
            let ba = r.mul(b, a);
            r.mul(&ba, &ba) == ba
        })
    })
}

/// ab = 0 forces ba = 0.
pub fn oracle_reversible(r: &Ring) -> bool {
    let xs = r.elements().expect("finite");
    let zero = r.zero();
    xs.iter()
        .all(|a| xs.iter().all(|b| r.mul(a, b) != zero || r.mul(b, a) == zero))
}

pub fn oracle_idempotents(r: &Ring) -> Vec<Elem> {
    r.elements()
        .expect("finite")
        .into_iter()
        .filter(|e| r.mul(e, e) == *e)
        .collect()
}

pub fn oracle_abelian(r: &Ring) -> bool {
    let xs = r.elements().expect("finite");
    oracle_idempotents(r)
        .iter()
        .all(|e| xs.iter().all(|x| r.mul(e, x) == r.mul(x, e)))
}

pub fn oracle_reduced(r: &Ring) -> bool {
    let zero = r.zero();
    r.elements()
        .expect("finite")
        .iter()
        .all(|a| *a == zero || r.mul(a, a) != zero)
}

/// Fifty ring expressions covering every constructor of the DSL.
pub const CORPUS: &[&str] = &[
    "Z1",
    "Z2",
    "Z6",
    "Z12",
    "GF2",
    "GF 5",
    "GF4",
    "H(Z)",
    "H(Z3)",
    "prod(Z2, Z3)",
    "prod(prod(Z2, Z2), GF4)",
    "M(2, Z2)",
    "M(3, GF2)",
    "T(2, Z6)",
    "T(4, GF 3)",
    "D(3, Z4)",
    "D(5, Z2)",
    "V(3, Z6)",
    "V(4, GF4)",
    "S3(GF2)",
    "S4(GF 3)",
    "triv(Z4)",
    "triv(triv(Z2))",
    "triv(T(2, Z3))",
    "triv(triv(prod(H(Z), H(Z))))",
    "dorroh(M(2, Z2), Z2, hom)",
    "dorroh(prod(Z2, Z2), Z2, hom)",
    "dorroh(Z4, Z4, char)",
    "dorroh(rng(prod(Z2, T(2, Z2)), (1, [[0, 0], [0, 0]]), (0, [[0, 1], [0, 0]])), Z2, char)",
    "nagata(Z4, id)",
    "nagata(GF4, frob)",
    "nagata(prod(Z3, Z3), swap)",
    "nagata(prod(Z2, Z2), cw(id, id))",
    "skewtrunc(GF4, frob, 3, left)",
    "skewtrunc(prod(Z3, Z3), swap, 2, right)",
    "skewtrunc(Z6, id, 3, left)",
    "poly(Z4, id)",
    "poly(GF4, frob)",
    "poly(prod(Z2, Z2), swap)",
    "poly(triv(Z6), diagproj)",
    "poly(prod(Z2, triv(Z2)), cw(id, diagproj))",
    "poly(ecseq(Z2, 4), shift)",
    "laurent(Z6)",
    "laurent(D(3, Z2))",
    "ecseq(Z3, 2)",
    "corner(T(3, Z2), [[1, 0, 0], [0, 1, 0], [0, 0, 0]])",
    "closure(T(3, GF2), [[1, 0, 0], [0, 1, 0], [0, 0, 0]], [[0, 0, 1], [0, 0, 0], [0, 0, 0]])",
    "closure(T(2, Z4), [[0, 1], [0, 0]])",
    "prod(M(2, Z2), nagata(Z2, id))",
    "T(2, triv(Z2))",
];
