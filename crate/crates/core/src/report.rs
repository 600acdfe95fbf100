//! Per-check verdicts and replayable counterexamples.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::diagrams::eval::{compare, Comparison};
use crate::diagrams::notation::{parse_mor, parse_obj, Env};
use crate::diagrams::{Mor, NamedMor};
use crate::elem::Elem;
use crate::error::{Error, Result};
use crate::fincat::{Ctx, FinMorphism, FinObject, Obj};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
    Inconclusive,
}

/// A tabulated morphism referenced by name in a counterexample.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedRecord {
    pub name: String,
    pub src: String,
    pub tgt: String,
    pub pairs: Vec<(Elem, Elem)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Evidence {
    /// Two composites disagree at `witness`.
    Diagram {
        lhs: String,
        rhs: String,
        witness: Elem,
        lhs_image: Vec<Elem>,
        rhs_image: Vec<Elem>,
        grade: Option<usize>,
    },
    /// A named morphism fails the model's hom predicate.
    NotAHom { morphism: String },
    /// The model has no morphism `src -> tgt` at all.
    NoMorphism { src: String, tgt: String },
    /// The check aborted with an engine error.
    Error { message: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub objects: Vec<FinObject>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub named: Vec<NamedRecord>,
    pub evidence: Evidence,
}

fn base_objects(objs: &[Obj]) -> Vec<FinObject> {
    let mut bases = Vec::new();
    for o in objs {
        o.bases(&mut bases);
    }
    let mut out: Vec<FinObject> = bases.into_iter().map(|b| (*b).clone()).collect();
    out.sort();
    out.dedup();
    out
}

fn record(n: &NamedMor) -> NamedRecord {
    NamedRecord {
        name: n.name.clone(),
        src: n.mor.src.to_string(),
        tgt: n.mor.tgt.to_string(),
        pairs: n.mor.pairs().map(|(a, b)| (a.clone(), b.clone())).collect(),
    }
}

impl Counterexample {
    pub fn from_comparison(ctx: &Ctx, cmp: &Comparison) -> Option<Self> {
        let d = cmp.discrepancy.as_ref()?;
        let mut objs = Vec::new();
        cmp.lhs.objects(&mut objs);
        cmp.rhs.objects(&mut objs);
        let mut named = Vec::new();
        cmp.lhs.named_parts(&mut named);
        cmp.rhs.named_parts(&mut named);
        Some(Counterexample {
            objects: base_objects(&objs),
            named: named.iter().map(|n| record(n)).collect(),
            evidence: Evidence::Diagram {
                lhs: cmp.lhs.to_string(),
                rhs: cmp.rhs.to_string(),
                witness: d.witness.clone(),
                lhs_image: d.lhs.clone(),
                rhs_image: d.rhs.clone(),
                grade: ctx.grade,
            },
        })
    }

    pub fn not_a_hom(m: &NamedMor) -> Self {
        Counterexample {
            objects: base_objects(&[m.mor.src.clone(), m.mor.tgt.clone()]),
            named: vec![record(m)],
            evidence: Evidence::NotAHom { morphism: m.name.clone() },
        }
    }

    pub fn no_morphism(src: &Obj, tgt: &Obj) -> Self {
        Counterexample {
            objects: base_objects(&[src.clone(), tgt.clone()]),
            named: Vec::new(),
            evidence: Evidence::NoMorphism { src: src.to_string(), tgt: tgt.to_string() },
        }
    }

    pub fn error(e: &Error) -> Self {
        Counterexample { objects: Vec::new(), named: Vec::new(), evidence: Evidence::Error { message: e.to_string() } }
    }

    /// Rebuilds the parsing environment from the stored objects and tables.
    pub fn env(&self) -> Result<Env> {
        let mut env = Env::default();
        for o in &self.objects {
            o.validate()?;
            env.objects.insert(o.id.clone(), Obj::base(o.clone()));
        }
        for n in &self.named {
            let (src, tgt) = (parse_obj(&n.src, &env)?, parse_obj(&n.tgt, &env)?);
            let mor = FinMorphism::from_pairs(src, tgt, crate::fincat::MorKind::Relation, n.pairs.iter().cloned());
            env.morphisms.insert(n.name.clone(), Arc::new(NamedMor { name: n.name.clone(), mor }));
        }
        Ok(env)
    }

    /// Re-evaluates the evidence against a model and comonad. Returns `true`
    /// when the failure reproduces.
    pub fn replay(&self, ctx: &Ctx) -> Result<bool> {
        let env = self.env()?;
        match &self.evidence {
            Evidence::Diagram { lhs, rhs, grade, .. } => {
                let (l, r) = (parse_mor(lhs, &env)?, parse_mor(rhs, &env)?);
                let at = ctx.regraded(*grade);
                Ok(!compare(&at, at.wider(), &l, &r)?.holds())
            }
            Evidence::NotAHom { morphism } => {
                let m = env.morphisms.get(morphism).ok_or_else(|| Error::Unsupported(format!("no table {morphism}")))?;
                let kind = ctx.model.mor_kind();
                let m = FinMorphism::from_pairs(m.mor.src.clone(), m.mor.tgt.clone(), kind, m.mor.pairs().map(|(a, b)| (a.clone(), b.clone())));
                Ok(!ctx.model.is_hom(ctx, &m)?)
            }
            Evidence::NoMorphism { src, tgt } => {
                let (s, t) = (parse_obj(src, &env)?, parse_obj(tgt, &env)?);
                Ok(crate::fincat::homs::enumerate_homs(ctx, &s, &t)?.is_empty())
            }
            Evidence::Error { message } => Err(Error::Unsupported(format!("error evidence is not replayable: {message}"))),
        }
    }
}

fn is_zero(n: &u64) -> bool {
    *n == 0
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub id: String,
    pub status: Status,
    pub cases: u64,
    pub excluded: u64,
    /// Compared cases that needed a grade above the configured one.
    #[serde(default, skip_serializing_if = "is_zero")]
    pub widened: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub duration_ms: Option<u64>,
}

/// Accumulates comparisons for one check id, keeping the first failure.
#[derive(Clone, Debug)]
pub struct Check {
    pub id: String,
    pub cases: u64,
    pub excluded: u64,
    pub widened: u64,
    pub note: Option<String>,
    pub counterexample: Option<Counterexample>,
}

impl Check {
    pub fn new(id: impl Into<String>) -> Self {
        Check { id: id.into(), cases: 0, excluded: 0, widened: 0, note: None, counterexample: None }
    }

    pub fn failed(&self) -> bool {
        self.counterexample.is_some()
    }

    pub fn absorb(&mut self, ctx: &Ctx, cmp: &Comparison) {
        self.cases += cmp.checked as u64;
        self.excluded += cmp.excluded as u64;
        self.widened += cmp.widened as u64;
        if self.counterexample.is_none() {
            self.counterexample = Counterexample::from_comparison(ctx, cmp);
        }
    }

    /// Counts one non-diagrammatic case.
    pub fn tick(&mut self) {
        self.cases += 1;
    }

    pub fn fail(&mut self, cx: Counterexample) {
        self.counterexample.get_or_insert(cx);
    }

    pub fn finish(self) -> CheckRecord {
        let status = if self.counterexample.is_some() { Status::Fail } else { Status::Pass };
        CheckRecord {
            id: self.id,
            status,
            cases: self.cases,
            excluded: self.excluded,
            widened: self.widened,
            note: self.note,
            counterexample: self.counterexample,
            duration_ms: None,
        }
    }
}

impl CheckRecord {
    pub fn skipped(id: impl Into<String>, note: impl Into<String>) -> Self {
        CheckRecord {
            id: id.into(),
            status: Status::Skipped,
            cases: 0,
            excluded: 0,
            widened: 0,
            note: Some(note.into()),
            counterexample: None,
            duration_ms: None,
        }
    }

    /// A timeout is a skip and an exhausted size bound is inconclusive; any
    /// other error fails with the error as evidence.
    pub fn from_error(id: impl Into<String>, e: &Error) -> Self {
        if *e == Error::Timeout {
            return CheckRecord::skipped(id, "timeout");
        }
        if let Error::SizeBoundExceeded { .. } = e {
            return CheckRecord { status: Status::Inconclusive, ..CheckRecord::skipped(id, e.to_string()) };
        }
        CheckRecord {
            id: id.into(),
            status: Status::Fail,
            cases: 0,
            excluded: 0,
            widened: 0,
            note: None,
            counterexample: Some(Counterexample::error(e)),
            duration_ms: None,
        }
    }
}

/// A set of check records, merged by id and emitted in sorted order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomReport {
    pub records: Vec<CheckRecord>,
}

impl AxiomReport {
    pub fn push(&mut self, r: CheckRecord) {
        self.records.push(r);
    }

    pub fn extend(&mut self, other: AxiomReport) {
        self.records.extend(other.records);
    }

    /// Records sorted by id; a later record with a repeated id is dropped.
    pub fn canonical(&self) -> Vec<CheckRecord> {
        let mut by_id: BTreeMap<&str, &CheckRecord> = BTreeMap::new();
        for r in &self.records {
            by_id.entry(r.id.as_str()).or_insert(r);
        }
        by_id.into_values().cloned().collect()
    }

    pub fn get(&self, id: &str) -> Option<&CheckRecord> {
        self.records.iter().find(|r| r.id == id)
    }

    pub fn all_pass(&self) -> bool {
        self.records.iter().all(|r| r.status == Status::Pass)
    }

    pub fn any_fail(&self) -> bool {
        self.records.iter().any(|r| r.status == Status::Fail)
    }

    pub fn total_cases(&self) -> u64 {
        self.records.iter().map(|r| r.cases).sum()
    }

    pub fn total_excluded(&self) -> u64 {
        self.records.iter().map(|r| r.excluded).sum()
    }

    pub fn total_widened(&self) -> u64 {
        self.records.iter().map(|r| r.widened).sum()
    }
}

/// Runs one check body, turning an engine error into a failing record.
pub fn run_check(id: &str, body: impl FnOnce(&mut Check) -> Result<()>) -> CheckRecord {
    let mut c = Check::new(id);
    match body(&mut c) {
        Ok(()) => c.finish(),
        Err(e) => CheckRecord::from_error(id, &e),
    }
}

/// Compares two paths and folds the outcome into `check`. Graded contexts
/// compare against the next grade up.
pub fn commutes(check: &mut Check, ctx: &Ctx, lhs: &Mor, rhs: &Mor) -> Result<()> {
    let cmp = compare(ctx, ctx.wider(), lhs, rhs)?;
    check.absorb(ctx, &cmp);
    Ok(())
}
