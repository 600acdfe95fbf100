//! Builds the configured model and runs the selected suites.

use std::sync::Arc;
use std::time::{Duration, Instant};

use lexc_core::em::{
    check_adjunction, check_em_cartesian, check_em_symmetry_and_monoidal_adjunction, check_iff_characterization, check_prop2, check_prop3,
    compare_comonads, Adjunction, AdjunctionComonad, EmAdjunction, Extracted, SliceAdjunction, Stripped, Verdict, PROP3_IDS,
};
use lexc_core::fincat::laws::model_selfcheck;
use lexc_core::fincat::{Braiding, Ctx, Limits, Model};
use lexc_core::linexp::{ExpComonad, IdentityComonad, MutantComonad, MutantModel, Mutation, Suite};
use lexc_core::models::day::{check_day_cross_model, check_day_routes, CoendComonad, DayAdjunction};
use lexc_core::models::{DayModel, FinMonoid, SliceComonad, SliceModel, XRelComonad, XRelModel};
use lexc_core::report::{AxiomReport, CheckRecord, Status};

use crate::config::{self, validate, ConfigError, ModelSpec, Route, RunConfig, SCHEMA_VERSION};
use crate::report::{Engine, RunReport, SuiteReport, Totals};
use crate::suites::{all_for, plan, SuiteId};

/// Model-specific data some suites need beyond the [`Model`] trait.
#[derive(Clone, Copy)]
enum Kind<'a> {
    Slice(&'a SliceModel),
    XRel,
    Day(&'a DayModel),
}

struct Setup<'a> {
    model: Arc<dyn Model + 'a>,
    comonad: Arc<dyn ExpComonad + 'a>,
    grade: Option<usize>,
    kind: Kind<'a>,
    mutation: Option<Mutation>,
}

/// Runs every selected suite. Only configuration problems are errors;
/// check failures are recorded in the report.
pub fn run_checks(cfg: &RunConfig) -> Result<RunReport, ConfigError> {
    validate(cfg)?;
    with_setup(cfg, |s| execute(cfg, s))
}

/// Re-evaluates every counterexample in a report against the model and
/// comonad its config describes. Each entry is a check id and whether the
/// failure reproduced.
pub fn replay(report: &RunReport) -> Result<Vec<(String, lexc_core::Result<bool>)>, ConfigError> {
    let cfg = &report.config;
    validate(cfg)?;
    with_setup(cfg, |s| {
        let (model, comonad) = mutated(&s);
        let b = &cfg.bounds;
        let limits = Limits { max_carrier: b.max_carrier, max_hom_search: b.max_hom_search as u128 };
        let ctx = Ctx::new(&*model, Some(&*comonad)).with_grade(s.grade).with_limits(limits);
        report.records().filter_map(|r| Some((r.id.clone(), r.counterexample.as_ref()?.replay(&ctx)))).collect()
    })
}

fn with_setup<R>(cfg: &RunConfig, go: impl FnOnce(Setup) -> R) -> Result<R, ConfigError> {
    let mutation = cfg.mutate.as_deref().map(|m| m.parse::<Mutation>()).transpose().map_err(|e| ConfigError {
        field: "mutate".into(),
        line: None,
        column: None,
        message: e.to_string(),
    })?;
    let route = cfg.model.route();
    match &cfg.model {
        ModelSpec::SliceMonoid { monoid, .. } => {
            let m = Arc::new(SliceModel::new(config::monoid(monoid, "model.monoid")?));
            let adj = SliceAdjunction { unit: m.monoid.unit };
            let comonad: Arc<dyn ExpComonad + '_> = match route {
                Route::Adjunction => Arc::new(AdjunctionComonad::new(&adj)),
                Route::Identity => Arc::new(IdentityComonad::default()),
                _ => Arc::new(SliceComonad::new(&m)),
            };
            Ok(go(Setup { model: m.clone(), comonad, grade: None, kind: Kind::Slice(&m), mutation }))
        }
        ModelSpec::XrelGroup { group, degree, .. } => {
            let m = Arc::new(XRelModel::new(config::group(group, "model.group")?));
            let comonad: Arc<dyn ExpComonad + '_> = match route {
                Route::Identity => Arc::new(IdentityComonad::default()),
                _ => Arc::new(XRelComonad::new(&m)),
            };
            Ok(go(Setup { model: m.clone(), comonad, grade: Some(*degree), kind: Kind::XRel, mutation }))
        }
        ModelSpec::Day { base, .. } => {
            let m = Arc::new(config::day_model(base)?);
            let adj = DayAdjunction::new(&m);
            let comonad: Arc<dyn ExpComonad + '_> = match route {
                Route::Coend => Arc::new(CoendComonad::new(&m)),
                Route::Identity => Arc::new(IdentityComonad::default()),
                _ => Arc::new(AdjunctionComonad::new(&adj)),
            };
            Ok(go(Setup { model: m.clone(), comonad, grade: None, kind: Kind::Day(&m), mutation }))
        }
    }
}

/// The model and comonad with the configured mutation applied.
fn mutated<'a>(s: &Setup<'a>) -> (Arc<dyn Model + 'a>, Arc<dyn ExpComonad + 'a>) {
    let model: Arc<dyn Model + 'a> = match s.mutation {
        Some(mu) if mu.on_model() => Arc::new(MutantModel { inner: s.model.clone() }),
        _ => s.model.clone(),
    };
    let comonad: Arc<dyn ExpComonad + 'a> = match s.mutation {
        Some(mu) if !mu.on_model() => Arc::new(MutantComonad { inner: s.comonad.clone(), mutation: mu }),
        _ => s.comonad.clone(),
    };
    (model, comonad)
}

fn execute(cfg: &RunConfig, s: Setup) -> RunReport {
    let (model, comonad) = mutated(&s);
    let b = &cfg.bounds;
    let limits = Limits { max_carrier: b.max_carrier, max_hom_search: b.max_hom_search as u128 };
    let timeout = Duration::from_secs(b.timeout_secs);

    let discrete_day = matches!(s.kind, Kind::Day(d) if d.base.is_discrete() && d.xcat.len() == 1);
    let mut requested = Vec::new();
    for c in &cfg.checks {
        if c == "all" {
            requested.extend(all_for(cfg.model.kind(), model.braiding() != Braiding::None, discrete_day));
        } else {
            requested.push(c.parse::<SuiteId>().expect("validated"));
        }
    }

    let mut suites = Vec::new();
    for (id, asked) in plan(&requested) {
        let ctx = Ctx::new(&*model, Some(&*comonad)).with_grade(s.grade).with_limits(limits).with_deadline(Some(Instant::now() + timeout));
        let start = Instant::now();
        let records = run_suite(id, &ctx, s.kind, b.max_carrier).canonical();
        let duration_ms = b.timings.then(|| start.elapsed().as_millis() as u64);
        suites.push(SuiteReport { id: id.to_string(), requested: asked, duration_ms, records });
    }
    let mut notes = Vec::new();
    if let Kind::XRel = s.kind {
        notes.push("structure maps: engine-supplied".to_string());
    }
    if let Some(mu) = s.mutation {
        notes.push(format!("mutation: {mu}"));
    }
    RunReport {
        schema_version: SCHEMA_VERSION,
        engine: Engine::current(),
        config: cfg.clone(),
        model: model.name(),
        comonad: comonad.name(),
        notes,
        totals: Totals::of(&suites),
        suites,
    }
}

fn run_suite(id: SuiteId, ctx: &Ctx, kind: Kind, bound: usize) -> AxiomReport {
    match id {
        SuiteId::Selfcheck => model_selfcheck(ctx, bound),
        SuiteId::Comonad => Suite::new(ctx, bound).comonad(),
        SuiteId::Def2All => Suite::new(ctx, bound).def2(),
        SuiteId::Def2Cond(k) => single(Suite::new(ctx, bound).condition(k)),
        SuiteId::Derived => Suite::new(ctx, bound).derived(),
        SuiteId::Sym => {
            let agreement = if matches!(kind, Kind::XRel) { "xrel.sigma-vs-braiding" } else { "sym.prop4" };
            Suite::new(ctx, bound).symmetric(agreement)
        }
        SuiteId::EmCartesian => check_em_cartesian(ctx, bound),
        SuiteId::EmSymmetry => check_em_symmetry_and_monoidal_adjunction(ctx, bound),
        SuiteId::Thm5 => thm5(ctx, bound),
        SuiteId::Prop2 => check_prop2(ctx, bound),
        SuiteId::Prop3 => match kind {
            Kind::Slice(m) => check_prop3(ctx, m, bound),
            _ => AxiomReport { records: PROP3_IDS.iter().map(|id| CheckRecord::skipped(*id, "implemented for slice models only")).collect() },
        },
        SuiteId::AdjRoundTrip => round_trip(ctx, kind, bound),
        SuiteId::DayCoend => match kind {
            Kind::Day(d) => single(check_day_routes(d, bound)),
            _ => single(CheckRecord::skipped("day.coend", "not a Day model")),
        },
        SuiteId::DayCrossModel => match kind {
            Kind::Day(d) => single(cross_model(d, bound)),
            _ => single(CheckRecord::skipped("day.cross-model", "not a Day model")),
        },
    }
}

/// `ctx` with another comonad.
fn sibling<'a: 'b, 'b>(ctx: &Ctx<'a>, c: &'b dyn ExpComonad) -> Ctx<'b> {
    Ctx::new(ctx.model, Some(c)).with_grade(ctx.grade).with_limits(ctx.limits).with_deadline(ctx.deadline)
}

fn single(r: CheckRecord) -> AxiomReport {
    AxiomReport { records: vec![r] }
}

/// The iff check, plus `thm5.recovered` comparing the extracted `d`, `e`
/// with the supplied ones when both exist.
fn thm5(ctx: &Ctx, bound: usize) -> AxiomReport {
    let out = check_iff_characterization(ctx, bound);
    let mut r = out.report;
    let Ok(comonad) = ctx.comonad() else { return r };
    let rec = if out.verdict != Verdict::IsLinearExponential {
        CheckRecord::skipped("thm5.recovered", "nothing was extracted")
    } else if !comonad.has_comonoid() {
        CheckRecord::skipped("thm5.recovered", "no d, e supplied to compare with")
    } else {
        let stripped = Stripped { inner: comonad };
        let extracted = Extracted { inner: sibling(ctx, &stripped) };
        let ectx = sibling(ctx, &extracted);
        compare_comonads("thm5.recovered", &ectx, ctx, bound)
    };
    r.push(rec);
    r
}

/// The comonad induced by the model's adjunction against the one under test,
/// plus the adjunction's own laws.
fn round_trip(ctx: &Ctx, kind: Kind, bound: usize) -> AxiomReport {
    let mut r = AxiomReport::default();
    let mut go = |adj: &dyn Adjunction| {
        let fu = AdjunctionComonad::new(adj);
        let actx = sibling(ctx, &fu);
        r.push(compare_comonads("adj.round-trip", &actx, ctx, bound));
        r.extend(check_adjunction(&actx, adj, bound));
    };
    match kind {
        Kind::Slice(m) => go(&SliceAdjunction { unit: m.monoid.unit }),
        Kind::Day(d) => go(&DayAdjunction::new(d)),
        Kind::XRel => match ctx.comonad() {
            Ok(c) => go(&EmAdjunction::new(sibling(ctx, c))),
            Err(e) => r.push(CheckRecord::from_error("adj.round-trip", &e)),
        },
    }
    r
}

fn cross_model(d: &DayModel, bound: usize) -> CheckRecord {
    if !d.base.is_discrete() || d.xcat.len() != 1 {
        return CheckRecord::skipped("day.cross-model", "needs a discrete base and a one-point index");
    }
    match FinMonoid::new(&d.base.name, d.base.names.clone(), d.base.tensor.clone()) {
        Ok(m) => check_day_cross_model(d, &SliceModel::new(m), bound),
        Err(e) => CheckRecord::from_error("day.cross-model", &e),
    }
}

/// Exit status for a finished run: 1 when anything failed.
pub fn exit_code(r: &RunReport) -> i32 {
    if r.suites.iter().flat_map(|s| &s.records).any(|c| c.status == Status::Fail) {
        1
    } else {
        0
    }
}
