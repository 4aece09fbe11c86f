//! Sub-assertions recorded by a claim checker.

use super::StepOutcome;
use crate::constructions::{named_iso, verify_iso};
use crate::dsl;
use crate::kernel::Ring;
use crate::properties::{check_property, verify_witness, CheckError, CheckOptions, Verdict, Witness};
use crate::subring::{check_maximal_i_reversible, Certificate, MaximalityReport};

/// Collects step outcomes and the witnesses they rest on. A failing step
/// never aborts the checker; errors surface in the report.
pub struct Steps {
    opts: CheckOptions,
    out: Vec<StepOutcome>,
    witnesses: Vec<Witness>,
}

impl Steps {
    pub(crate) fn new(opts: CheckOptions) -> Steps {
        Steps {
            opts,
            out: Vec::new(),
            witnesses: Vec::new(),
        }
    }

    pub(crate) fn into_parts(self) -> (Vec<StepOutcome>, Vec<Witness>) {
        (self.out, self.witnesses)
    }

    pub fn opts(&self) -> &CheckOptions {
        &self.opts
    }

    fn push(&mut self, label: String, expected: bool, actual: Result<bool, String>, witness: Option<String>) {
        let (actual, error) = match actual {
            Ok(a) => (Some(a), None),
            Err(e) => (None, Some(e)),
        };
        self.out.push(StepOutcome {
            label,
            expected,
            actual,
            error,
            witness,
        });
    }

    /// Replays `w`; an unconfirmed witness is an error of the step it backs.
    fn attach(&mut self, w: &Witness) -> Result<String, String> {
        match verify_witness(w) {
            Ok(r) if r.holds => {
                let d = super::digest(w);
                if !self.witnesses.contains(w) {
                    self.witnesses.push(w.clone());
                }
                Ok(d)
            }
            Ok(r) => Err(format!("witness does not replay: {:?}", r.checks)),
            Err(e) => Err(format!("witness does not replay: {e}")),
        }
    }

    pub fn ring(&mut self, expr: &str) -> Option<Ring> {
        match dsl::ring(expr) {
            Ok(r) => Some(r),
            Err(e) => {
                self.push(format!("build {expr}"), true, Err(e.to_string()), None);
                None
            }
        }
    }

    /// A plain fact computed by the checker.
    pub fn fact(&mut self, label: impl Into<String>, expected: bool, actual: Result<bool, String>) {
        self.push(label.into(), expected, actual, None);
    }

    fn verdict(&mut self, label: String, expected: bool, v: Result<Verdict, CheckError>) -> Option<Verdict> {
        match v {
            Ok(v) => {
                let digest = match &v.witness {
                    Some(w) => match self.attach(w) {
                        Ok(d) => Some(d),
                        Err(e) => {
                            self.push(label, expected, Err(e), None);
                            return Some(v);
                        }
                    },
                    None => None,
                };
                self.push(label, expected, Ok(v.holds), digest);
                Some(v)
            }
            Err(e) => {
                self.push(label, expected, Err(e.to_string()), None);
                None
            }
        }
    }

    /// `prop` on the ring `expr`, scanning polynomial rings up to the run's
    /// degree bound.
    pub fn prop(&mut self, prop: &str, expr: &str, expected: bool) -> Option<Verdict> {
        let ring = self.ring(expr)?;
        let v = check_property(prop, &ring, &self.opts);
        self.verdict(format!("{prop} {expr}"), expected, v)
    }

    /// As [`Steps::prop`] with polynomial degree exactly `d`; refused if `d`
    /// exceeds the run's degree bound.
    pub fn prop_at(&mut self, prop: &str, expr: &str, d: usize, expected: bool) -> Option<Verdict> {
        let ring = self.ring(expr)?;
        let label = format!("{prop} {expr} (d = {d})");
        if let Err(e) = self.opts.budget.require_degree(d) {
            self.push(label, expected, Err(e.to_string()), None);
            return None;
        }
        let mut opts = self.opts;
        opts.budget.max_degree = d;
        let v = check_property(prop, &ring, &opts);
        self.verdict(label, expected, v)
    }

    pub fn iso(&mut self, map: &str, src: &str, dst: &str, expected: bool) {
        let label = format!("{src} ≅ {dst} via {map}");
        let (Some(s), Some(t)) = (self.ring(src), self.ring(dst)) else {
            return;
        };
        let r = named_iso(map, &s, &t)
            .and_then(|c| verify_iso(&c))
            .map(|r| r.holds)
            .map_err(|e| e.to_string());
        self.push(label, expected, r, None);
    }

    /// Replays an explicit witness; `expected` is whether its claim holds.
    pub fn replay(&mut self, label: impl Into<String>, w: &Witness, expected: bool) {
        let label = label.into();
        match verify_witness(w) {
            Ok(r) => {
                let digest = if r.holds { self.attach(w).ok() } else { None };
                self.push(label, expected, Ok(r.holds), digest);
            }
            Err(e) => self.push(label, expected, Err(e.to_string()), None),
        }
    }

    /// Maximality of `base` in `ambient`; every certificate witness is
    /// replayed and recorded.
    pub fn maximal(&mut self, base: &str, ambient: &str, expected: bool) -> Option<MaximalityReport> {
        let label = format!("{base} maximal i-reversible in {ambient}");
        let (b, a) = (self.ring(base)?, self.ring(ambient)?);
        let report = match check_maximal_i_reversible(&b, &a, &self.opts) {
            Ok(r) => r,
            Err(e) => {
                self.push(label, expected, Err(e.to_string()), None);
                return None;
            }
        };
        for e in &report.subrings {
            if let Certificate::NotIReversible { witness, .. } = &e.certificate {
                if let Err(err) = self.attach(witness) {
                    self.push(label, expected, Err(err), None);
                    return Some(report);
                }
            }
        }
        self.push(label, expected, Ok(report.maximal), None);
        Some(report)
    }
}
