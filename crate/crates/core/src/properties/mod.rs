//! Decision procedures for ring properties on finite rings and on bounded
//! families of polynomials, with replayable witnesses.

mod named;
mod polyscan;
mod replay;
mod scan;

use std::time::Instant;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::kernel::RingError;

pub use named::{check_property, PROPERTIES};
pub use polyscan::{
    check_armendariz, check_sigma_armendariz, scan_laurent_i_reversible, scan_poly_i_reversible,
    scan_poly_idempotents,
};
pub use replay::{verify_witness, Replay, ReplayError};
pub use scan::{
    central_idempotents, check_abelian, check_i_reversible, check_reduced, check_reversible,
    check_sigma_rigid, check_trivial_idempotents, idempotents, validate_endo,
};

/// Environment variable that caps `max_pairs` for every run.
pub const BUDGET_ENV: &str = "RINGLAB_BUDGET_PAIRS";

/// Scan limits.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    /// Largest number of element pairs (or candidates) a scan may visit.
    pub max_pairs: u64,
    /// Largest polynomial degree in bounded scans.
    pub max_degree: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_pairs: 1 << 22,
            max_degree: 2,
        }
    }
}

impl Budget {
    /// Applies the global cap from [`BUDGET_ENV`], if set.
    pub fn capped_by_env(mut self) -> Budget {
        if let Some(cap) = std::env::var(BUDGET_ENV).ok().and_then(|v| v.trim().parse::<u64>().ok()) {
            self.max_pairs = self.max_pairs.min(cap);
        }
        self
    }

    pub(crate) fn require(&self, what: &str, needed: u128) -> Result<(), CheckError> {
        if needed > self.max_pairs as u128 {
            return Err(CheckError::Budget {
                what: what.to_string(),
                needed,
                limit: self.max_pairs as u128,
                flag: "--max-pairs",
            });
        }
        Ok(())
    }

    pub(crate) fn require_degree(&self, d: usize) -> Result<(), CheckError> {
        if d > self.max_degree {
            return Err(CheckError::Budget {
                what: "polynomial degree".into(),
                needed: d as u128,
                limit: self.max_degree as u128,
                flag: "--max-degree",
            });
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct CheckOptions {
    pub budget: Budget,
    /// Minimal-index witnesses and zeroed timings, for byte-stable output.
    pub deterministic: bool,
}

impl CheckOptions {
    pub fn deterministic() -> CheckOptions {
        CheckOptions {
            budget: Budget::default(),
            deterministic: true,
        }
    }
}

#[derive(Debug, Error)]
pub enum CheckError {
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error("budget exceeded: {what} needs {needed}, limit is {limit}; rerun with `{flag} {needed}`")]
    Budget {
        what: String,
        needed: u128,
        limit: u128,
        flag: &'static str,
    },
    #[error("{0}")]
    Unsupported(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum WitnessKind {
    IReversibilityViolation,
    ReversibilityViolation,
    NontrivialIdempotent,
    NonCentralIdempotent,
    Nilpotent,
    ArmendarizViolation,
    SigmaRigidViolation,
    IdempotentDegreeViolation,
    EndomorphismViolation,
}

impl WitnessKind {
    /// The equations a replayer confirms, in the order it checks them.
    pub fn claim(self) -> Vec<String> {
        let eqs: &[&str] = match self {
            WitnessKind::IReversibilityViolation => &["(ab)^2 = ab", "ab != 0", "(ba)^2 != ba"],
            WitnessKind::ReversibilityViolation => &["ab = 0", "ba != 0"],
            WitnessKind::NontrivialIdempotent => &["e^2 = e", "e != 0", "e != 1"],
            WitnessKind::NonCentralIdempotent => &["e^2 = e", "ex != xe"],
            WitnessKind::Nilpotent => &["a != 0", "a^2 = 0"],
            WitnessKind::ArmendarizViolation => &["fg = 0", "a_i b_j != 0 for some i, j"],
            WitnessKind::SigmaRigidViolation => &["a != 0", "a sigma(a) = 0"],
            WitnessKind::IdempotentDegreeViolation => &["f^2 = f", "deg f > 0"],
            WitnessKind::EndomorphismViolation => &["sigma is not a unital ring endomorphism"],
        };
        eqs.iter().map(|s| s.to_string()).collect()
    }
}

/// A replayable certificate that a property fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub kind: WitnessKind,
    /// Ring expression in which `elements` are literals.
    pub ring: String,
    pub elements: Vec<String>,
    pub claim: Vec<String>,
}

impl Witness {
    pub fn new(kind: WitnessKind, ring: String, elements: Vec<String>) -> Witness {
        Witness {
            kind,
            ring,
            elements,
            claim: kind.claim(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("witness serializes")
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stats {
    pub pairs_scanned: u64,
    pub millis: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub property: String,
    pub ring: String,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub proxy_note: Option<String>,
    /// How the verdict was reached: `exhaustive`, `vacuous`, `certificate`, ...
    pub method: String,
    pub stats: Stats,
}

/// Timer and bookkeeping shared by all checks.
pub(crate) struct Run {
    property: String,
    ring: String,
    start: Instant,
    deterministic: bool,
}

impl Run {
    pub(crate) fn new(property: &str, ring: String, opts: &CheckOptions) -> Run {
        Run {
            property: property.to_string(),
            ring,
            start: Instant::now(),
            deterministic: opts.deterministic,
        }
    }

    pub(crate) fn finish(
        self,
        witness: Option<Witness>,
        method: &str,
        pairs_scanned: u64,
        proxy_note: Option<String>,
    ) -> Verdict {
        let millis = if self.deterministic {
            0
        } else {
            self.start.elapsed().as_millis() as u64
        };
        Verdict {
            property: self.property,
            ring: self.ring,
            holds: witness.is_none(),
            witness,
            proxy_note,
            method: method.to_string(),
            stats: Stats {
                pairs_scanned,
                millis,
            },
        }
    }
}
