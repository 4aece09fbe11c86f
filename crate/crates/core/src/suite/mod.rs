//! The claim registry: every in-scope result mapped to executable checks on
//! concrete instances, with a traceable pass/fail report.

mod catalog;
mod registry;
mod steps;

use std::fmt::Write as _;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::properties::{CheckOptions, Witness};

pub use catalog::{catalog, negative_controls};
pub use registry::{registry, EXPECTED_IDS};
pub use steps::Steps;

pub enum Checker {
    Run(fn(&mut Steps)),
    OutOfScope(&'static str),
}

pub struct ClaimCheck {
    /// Opaque anchor id such as `Thm-2.6`.
    pub id: &'static str,
    pub anchor: &'static str,
    /// How the finite check stands in for the statement, when it does.
    pub proxy: Option<&'static str>,
    pub checker: Checker,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    Error,
    OutOfScope,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Error => "error",
            Status::OutOfScope => "out-of-scope",
        }
    }
}

/// One sub-assertion of a claim.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepOutcome {
    pub label: String,
    pub expected: bool,
    pub actual: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub error: Option<String>,
    /// Digest of the replayed witness behind `actual`, if any.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<String>,
}

impl StepOutcome {
    pub fn met(&self) -> bool {
        self.error.is_none() && self.actual == Some(self.expected)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ClaimOutcome {
    pub claim: String,
    pub anchor: String,
    pub status: Status,
    pub proxy: Option<String>,
    pub witnesses: Vec<String>,
    pub millis: u64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub reason: Option<String>,
    pub detail: Vec<StepOutcome>,
    /// The witnesses behind `witnesses`, in the same order.
    #[serde(skip)]
    pub witness_files: Vec<Witness>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SuiteReport {
    pub pass: bool,
    pub claims: Vec<ClaimOutcome>,
}

impl SuiteReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn count(&self, status: Status) -> usize {
        self.claims.iter().filter(|c| c.status == status).count()
    }

    /// Fixed-width summary, one row per claim.
    pub fn table(&self) -> String {
        let w = self.claims.iter().map(|c| c.claim.len()).max().unwrap_or(5).max(5);
        let mut out = format!("{:<w$}  {:<12}  {:>5}  {:>8}  {}\n", "claim", "status", "steps", "ms", "proxy");
        for c in &self.claims {
            let met = c.detail.iter().filter(|s| s.met()).count();
            let steps = if c.detail.is_empty() {
                "-".to_string()
            } else {
                format!("{met}/{}", c.detail.len())
            };
            let _ = writeln!(
                out,
                "{:<w$}  {:<12}  {:>5}  {:>8}  {}",
                c.claim,
                c.status.label(),
                steps,
                c.millis,
                c.proxy.as_deref().unwrap_or("-")
            );
            for s in c.detail.iter().filter(|s| !s.met()) {
                let got = match (&s.error, s.actual) {
                    (Some(e), _) => format!("error: {e}"),
                    (None, Some(a)) => format!("got {a}"),
                    (None, None) => "no result".into(),
                };
                let _ = writeln!(out, "{:<w$}    ! {} (expected {}, {got})", "", s.label, s.expected);
            }
        }
        let _ = writeln!(
            out,
            "{} pass, {} fail, {} error, {} out of scope: {}",
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::Error),
            self.count(Status::OutOfScope),
            if self.pass { "PASS" } else { "FAIL" }
        );
        out
    }
}

/// Catalog entry of [`list_claims`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimInfo {
    pub claim: String,
    pub anchor: String,
    pub proxy: Option<String>,
    pub in_scope: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub reason: Option<String>,
}

pub fn list_claims() -> Vec<ClaimInfo> {
    registry()
        .iter()
        .map(|c| ClaimInfo {
            claim: c.id.to_string(),
            anchor: c.anchor.to_string(),
            proxy: c.proxy.map(str::to_string),
            in_scope: matches!(c.checker, Checker::Run(_)),
            reason: match c.checker {
                Checker::OutOfScope(r) => Some(r.to_string()),
                Checker::Run(_) => None,
            },
        })
        .collect()
}

/// Comma-separated patterns; `*` matches any run of characters and a
/// pattern without `*` must match the whole id.
pub fn matches(filter: &str, id: &str) -> bool {
    filter.split(',').map(str::trim).any(|p| glob(p.as_bytes(), id.as_bytes()))
}

fn glob(p: &[u8], s: &[u8]) -> bool {
    match p.split_first() {
        None => s.is_empty(),
        Some((b'*', rest)) => (0..=s.len()).any(|k| glob(rest, &s[k..])),
        Some((c, rest)) => s.first() == Some(c) && glob(rest, &s[1..]),
    }
}

/// SHA-256 of the compact JSON form of `w`, hex encoded.
pub fn digest(w: &Witness) -> String {
    let json = serde_json::to_string(w).expect("witness serializes");
    hex::encode(Sha256::digest(json.as_bytes()))
}

pub fn run_suite(filter: Option<&str>, opts: &CheckOptions) -> SuiteReport {
    let checks: Vec<ClaimCheck> = registry()
        .into_iter()
        .filter(|c| filter.is_none_or(|f| matches(f, c.id)))
        .collect();
    run_checks(&checks, opts)
}

/// Runs claims in parallel; the report keeps the input order.
pub fn run_checks(checks: &[ClaimCheck], opts: &CheckOptions) -> SuiteReport {
    let claims: Vec<ClaimOutcome> = checks.par_iter().map(|c| run_claim(c, opts)).collect();
    SuiteReport {
        pass: claims
            .iter()
            .all(|c| matches!(c.status, Status::Pass | Status::OutOfScope)),
        claims,
    }
}

fn run_claim(c: &ClaimCheck, opts: &CheckOptions) -> ClaimOutcome {
    let start = Instant::now();
    let mut out = ClaimOutcome {
        claim: c.id.to_string(),
        anchor: c.anchor.to_string(),
        status: Status::OutOfScope,
        proxy: c.proxy.map(str::to_string),
        witnesses: Vec::new(),
        millis: 0,
        reason: None,
        detail: Vec::new(),
        witness_files: Vec::new(),
    };
    match c.checker {
        Checker::OutOfScope(reason) => out.reason = Some(reason.to_string()),
        Checker::Run(f) => {
            let mut steps = Steps::new(*opts);
            f(&mut steps);
            let (detail, witnesses) = steps.into_parts();
            out.status = if detail.iter().any(|s| s.error.is_some()) {
                Status::Error
            } else if !detail.is_empty() && detail.iter().all(StepOutcome::met) {
                Status::Pass
            } else {
                Status::Fail
            };
            out.witnesses = witnesses.iter().map(digest).collect();
            out.witness_files = witnesses;
            out.detail = detail;
        }
    }
    if !opts.deterministic {
        out.millis = start.elapsed().as_millis() as u64;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn filter_patterns() {
        assert!(matches("Thm-3.*", "Thm-3.13"));
        assert!(matches("Thm-3.1", "Thm-3.1"));
        assert!(!matches("Thm-3.1", "Thm-3.13"));
        assert!(matches("Eg-2.4, Thm-4.*", "Thm-4.6"));
        assert!(matches("*", "Cor-2.8"));
    }

    #[test]
    fn ids_are_unique_and_claims_listed() {
        let ids: Vec<&str> = registry().iter().map(|c| c.id).collect();
        let mut sorted = ids.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), ids.len());
        let listed = list_claims();
        let t39 = listed.iter().find(|c| c.claim == "Thm-3.9").unwrap();
        assert_eq!(t39.proxy.as_deref(), Some("instance-check-over-GF(2)"));
        let e23 = listed.iter().find(|c| c.claim == "Eg-2.3").unwrap();
        assert!(!e23.in_scope && e23.reason.is_some());
        let t54 = listed.iter().find(|c| c.claim == "Thm-5.4").unwrap();
        assert_eq!(t54.proxy.as_deref(), Some("bounded-degree"));
    }
}
