//! Property lookup by name, as used by the CLI and the claim registry.

use super::*;
use crate::kernel::Ring;
use crate::poly::{LaurentRing, SkewPolyRing};

/// Names accepted by [`check_property`].
pub const PROPERTIES: &[&str] = &[
    "reversible",
    "i-reversible",
    "abelian",
    "reduced",
    "trivial-idempotents",
    "constant-idempotents",
    "armendariz",
    "sigma-armendariz",
    "sigma-rigid",
    "endomorphism",
];

fn unsupported(name: &str, ring: &Ring, hint: &str) -> CheckError {
    CheckError::Unsupported(format!("`{name}` does not apply to {}: {hint}", ring.expr()))
}

/// Runs the named check on `ring`.
///
/// On `poly(R, σ)` and `laurent(R)` the polynomial checks scan degrees up to
/// `opts.budget.max_degree`; `armendariz` takes the coefficient ring R, while
/// `sigma-armendariz`, `sigma-rigid`, `constant-idempotents` and
/// `endomorphism` take `poly(R, σ)`.
pub fn check_property(name: &str, ring: &Ring, opts: &CheckOptions) -> Result<Verdict, CheckError> {
    let d = opts.budget.max_degree;
    if let Some(p) = ring.downcast::<SkewPolyRing>() {
        let sigma = p.sigma();
        return match name {
            "i-reversible" => scan_poly_i_reversible(sigma, d, opts),
            "constant-idempotents" => scan_poly_idempotents(sigma, d, opts).map(|r| r.0),
            "sigma-armendariz" => check_sigma_armendariz(sigma, d, opts),
            "sigma-rigid" => check_sigma_rigid(sigma, opts),
            "endomorphism" => Ok(validate_endo(sigma, opts)),
            "armendariz" => Err(unsupported(name, ring, "pass the coefficient ring instead")),
            _ => Err(unsupported(name, ring, "only bounded scans are available for polynomial rings")),
        };
    }
    if let Some(l) = ring.downcast::<LaurentRing>() {
        return match name {
            "i-reversible" => scan_laurent_i_reversible(l.base(), d, opts),
            _ => Err(unsupported(name, ring, "only i-reversible is scanned on Laurent rings")),
        };
    }
    match name {
        "reversible" => check_reversible(ring, opts),
        "i-reversible" => check_i_reversible(ring, opts),
        "abelian" => check_abelian(ring, opts),
        "reduced" => check_reduced(ring, opts),
        "trivial-idempotents" => check_trivial_idempotents(ring, opts),
        "armendariz" => check_armendariz(ring, d, opts),
        "constant-idempotents" | "sigma-armendariz" | "sigma-rigid" | "endomorphism" => {
            Err(unsupported(name, ring, "write the ring as poly(R, σ)"))
        }
        other => Err(CheckError::Unsupported(format!(
            "unknown property `{other}`; expected one of {}",
            PROPERTIES.join(", ")
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl;

    #[test]
    fn dispatch_by_ring_kind() {
        let mut opts = CheckOptions::deterministic();
        opts.budget.max_degree = 1;
        let v = check_property("i-reversible", &dsl::ring("poly(prod(Z6, Z6), swap)").unwrap(), &opts).unwrap();
        assert_eq!(v.property, "poly-i-reversible");
        assert!(!v.holds);
        let v = check_property("i-reversible", &dsl::ring("laurent(Z4)").unwrap(), &opts).unwrap();
        assert_eq!(v.property, "laurent-i-reversible");
        assert!(v.holds);
        assert!(check_property("sigma-rigid", &dsl::ring("Z4").unwrap(), &opts).is_err());
        assert!(check_property("frobnicate", &dsl::ring("Z4").unwrap(), &opts).is_err());
    }
}
