//! Run reports and their JSON and text forms.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use lexc_core::elem::Elem;
use lexc_core::report::{CheckRecord, Evidence, Status};

use crate::config::{Format, RunConfig};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Engine {
    pub name: String,
    pub version: String,
}

impl Engine {
    pub fn current() -> Self {
        Engine { name: "lexc".into(), version: env!("CARGO_PKG_VERSION").into() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub id: String,
    /// False when the suite only ran as a dependency of another.
    pub requested: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub duration_ms: Option<u64>,
    pub records: Vec<CheckRecord>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Totals {
    pub checks: u64,
    pub pass: u64,
    pub fail: u64,
    pub skipped: u64,
    pub inconclusive: u64,
    pub cases: u64,
    pub excluded: u64,
    pub widened: u64,
}

impl Totals {
    pub fn of(suites: &[SuiteReport]) -> Self {
        let mut t = Totals::default();
        for r in suites.iter().flat_map(|s| &s.records) {
            t.checks += 1;
            t.cases += r.cases;
            t.excluded += r.excluded;
            t.widened += r.widened;
            match r.status {
                Status::Pass => t.pass += 1,
                Status::Fail => t.fail += 1,
                Status::Skipped => t.skipped += 1,
                Status::Inconclusive => t.inconclusive += 1,
            }
        }
        t
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunReport {
    pub schema_version: u32,
    pub engine: Engine,
    pub config: RunConfig,
    pub model: String,
    pub comonad: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    pub suites: Vec<SuiteReport>,
    pub totals: Totals,
}

impl RunReport {
    pub fn records(&self) -> impl Iterator<Item = &CheckRecord> {
        self.suites.iter().flat_map(|s| &s.records)
    }

    pub fn get(&self, id: &str) -> Option<&CheckRecord> {
        self.records().find(|r| r.id == id)
    }

    pub fn all_pass(&self) -> bool {
        self.records().all(|r| r.status == Status::Pass)
    }
}

pub fn emit_report(r: &RunReport, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(r).expect("reports serialize");
            s.push('\n');
            s
        }
        Format::Text => text(r),
    }
}

fn status(s: Status) -> &'static str {
    match s {
        Status::Pass => "pass",
        Status::Fail => "FAIL",
        Status::Skipped => "skip",
        Status::Inconclusive => "inconclusive",
    }
}

fn images(xs: &[Elem]) -> String {
    let parts: Vec<String> = xs.iter().map(Elem::to_string).collect();
    format!("{{{}}}", parts.join(", "))
}

fn counterexample(out: &mut String, r: &CheckRecord) {
    let Some(cx) = &r.counterexample else { return };
    let _ = writeln!(out, "    counterexample:");
    for o in &cx.objects {
        let elems: Vec<String> = o.carrier.iter().map(Elem::to_string).collect();
        let _ = writeln!(out, "      {} = {{{}}}", o.id, elems.join(", "));
    }
    match &cx.evidence {
        Evidence::Diagram { lhs, rhs, witness, lhs_image, rhs_image, grade } => {
            let _ = writeln!(out, "      lhs: {lhs}");
            let _ = writeln!(out, "      rhs: {rhs}");
            let _ = writeln!(out, "      at {witness}: lhs gives {}, rhs gives {}", images(lhs_image), images(rhs_image));
            if let Some(k) = grade {
                let _ = writeln!(out, "      grade {k}");
            }
        }
        Evidence::NotAHom { morphism } => {
            let _ = writeln!(out, "      {morphism} is not a morphism");
        }
        Evidence::NoMorphism { src, tgt } => {
            let _ = writeln!(out, "      no morphism {src} -> {tgt}");
        }
        Evidence::Error { message } => {
            let _ = writeln!(out, "      error: {message}");
        }
    }
}

fn text(r: &RunReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {}: {} with {}", r.engine.name, r.engine.version, r.model, r.comonad);
    for n in &r.notes {
        let _ = writeln!(out, "note: {n}");
    }
    for s in &r.suites {
        let tag = if s.requested { "" } else { " (dependency)" };
        match s.duration_ms {
            Some(ms) => {
                let _ = writeln!(out, "\n[{}]{tag} {ms} ms", s.id);
            }
            None => {
                let _ = writeln!(out, "\n[{}]{tag}", s.id);
            }
        }
        for rec in &s.records {
            let _ = write!(out, "  {:<12} {:<40} {:>8} cases", status(rec.status), rec.id, rec.cases);
            if rec.excluded > 0 {
                let _ = write!(out, ", {} excluded by grade", rec.excluded);
            }
            if rec.widened > 0 {
                let _ = write!(out, ", {} beyond grade", rec.widened);
            }
            out.push('\n');
            if let Some(n) = &rec.note {
                if rec.status != Status::Pass {
                    let _ = writeln!(out, "    {n}");
                }
            }
            counterexample(&mut out, rec);
        }
    }
    let t = &r.totals;
    out.push('\n');
    if r.all_pass() {
        let _ = writeln!(out, "ALL CHECKS PASSED ({} cases)", t.cases);
        if t.excluded + t.widened > 0 {
            let _ = writeln!(out, "{} excluded by grade, {} beyond grade", t.excluded, t.widened);
        }
    } else {
        let _ = writeln!(
            out,
            "{} passed, {} failed, {} skipped, {} inconclusive ({} cases, {} excluded by grade, {} beyond grade)",
            t.pass, t.fail, t.skipped, t.inconclusive, t.cases, t.excluded, t.widened
        );
    }
    out
}
