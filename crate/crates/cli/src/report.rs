use std::fmt::Write as _;

use omatrix_core::diff::{im_partial_test, DiffOp, DiffPoly, Jets};
use omatrix_core::exact::Tensor;
use omatrix_core::poisson::PolyTensor;
use omatrix_core::report::RelationReport;
use serde::Serialize;

use crate::manifest::SCHEMA;

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Witness {
    pub at: String,
    pub value: String,
}

/// Accumulates the sub-results of one check.
#[derive(Clone, Debug)]
pub struct Verdict {
    holds: bool,
    failed: Vec<String>,
    notes: Vec<String>,
    witnesses: Vec<Witness>,
    limit: usize,
}

fn fmt_index(idx: &[usize]) -> String {
    let parts: Vec<String> = idx.iter().map(usize::to_string).collect();
    format!("[{}]", parts.join(","))
}

impl Verdict {
    pub fn new(limit: usize) -> Self {
        Self { holds: true, failed: Vec::new(), notes: Vec::new(), witnesses: Vec::new(), limit }
    }

    pub fn holds(&self) -> bool {
        self.holds
    }

    fn push(&mut self, label: &str, at: String, value: String) {
        if self.witnesses.len() < self.limit {
            self.witnesses.push(Witness { at: format!("{label} {at}"), value });
        }
    }

    /// Records a boolean sub-result.
    pub fn flag(&mut self, label: &str, ok: bool) -> bool {
        if !ok {
            self.holds = false;
            self.failed.push(label.to_string());
        }
        ok
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    pub fn tensor(&mut self, label: &str, t: &Tensor) -> bool {
        for (idx, v) in t.witnesses(self.limit) {
            self.push(label, fmt_index(&idx), v);
        }
        self.flag(label, t.is_zero())
    }

    pub fn relation(&mut self, label: &str, r: &RelationReport) -> bool {
        self.tensor(label, &r.defect)
    }

    pub fn polys(&mut self, label: &str, t: &PolyTensor, names: &[String]) -> bool {
        for (idx, v) in t.witnesses(self.limit, names) {
            self.push(label, fmt_index(&idx), v);
        }
        self.flag(label, t.is_zero())
    }

    /// Every component must vanish exactly.
    pub fn diff_exact(&mut self, label: &str, v: &[DiffPoly]) -> bool {
        for (i, p) in v.iter().enumerate().filter(|(_, p)| !p.is_zero()) {
            self.push(label, format!("[{i}]"), p.to_string());
        }
        self.flag(label, v.iter().all(DiffPoly::is_zero))
    }

    /// The density must lie in the image of `∂`.
    pub fn diff_exact_form(&mut self, label: &str, p: &DiffPoly, jets: &Jets) -> Result<bool, omatrix_core::Error> {
        let ok = im_partial_test(p, jets)?;
        if !ok {
            self.push(label, "[]".to_string(), p.to_string());
        }
        Ok(self.flag(label, ok))
    }

    pub fn diff_op(&mut self, label: &str, op: &DiffOp) -> bool {
        for (i, j, e) in op.nonzero() {
            self.push(label, format!("[{i},{j}]"), e.to_string());
        }
        self.flag(label, op.is_zero())
    }

    pub fn into_outcome(self) -> (bool, String, Vec<Witness>) {
        let mut detail = String::new();
        if !self.failed.is_empty() {
            detail.push_str("failed: ");
            detail.push_str(&self.failed.join(", "));
        }
        for n in &self.notes {
            if !detail.is_empty() {
                detail.push_str("; ");
            }
            detail.push_str(n);
        }
        (self.holds, detail, self.witnesses)
    }
}

#[derive(Clone, Copy, Debug, Serialize, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
    Error,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIP",
            Status::Error => "ERROR",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub verdict: Status,
    pub detail: String,
    pub witnesses: Vec<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_ms: Option<u64>,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub errors: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub manifest: String,
    pub seed: u64,
    pub max_jet_order: u32,
    pub witness_limit: usize,
    pub summary: Summary,
    pub checks: Vec<CheckResult>,
}

impl Report {
    pub fn new(manifest: String, seed: u64, max_jet_order: u32, witness_limit: usize, checks: Vec<CheckResult>) -> Self {
        let mut summary = Summary::default();
        for c in &checks {
            match c.verdict {
                Status::Pass => summary.passed += 1,
                Status::Fail => summary.failed += 1,
                Status::Skipped => summary.skipped += 1,
                Status::Error => summary.errors += 1,
            }
        }
        Self { schema: SCHEMA, manifest, seed, max_jet_order, witness_limit, summary, checks }
    }

    /// 0 when everything passed, 2 when any check refused its input,
    /// 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.summary.errors > 0 {
            2
        } else if self.summary.passed == self.checks.len() {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} ({}, seed {})", self.manifest, self.schema, self.seed);
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
        for c in &self.checks {
            let _ = write!(out, "{:<5} {:<width$}", c.verdict.label(), c.name);
            if let Some(ms) = c.wall_ms {
                let _ = write!(out, "  {ms} ms");
            }
            if !c.detail.is_empty() {
                let _ = write!(out, "  {}", c.detail);
            }
            out.push('\n');
            for w in &c.witnesses {
                let _ = writeln!(out, "      {} = {}", w.at, w.value);
            }
        }
        let s = &self.summary;
        let _ = writeln!(out, "{} passed, {} failed, {} skipped, {} errors", s.passed, s.failed, s.skipped, s.errors);
        out
    }
}
