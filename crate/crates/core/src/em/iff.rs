//! Linear exponential structure from cartesian coalgebras and back: with
//! `d`, `e` given, the coalgebra tensor must be cartesian; with only the
//! monoidal comonad, `d`, `e` are recovered from the coalgebra category or
//! a witness shows that it is not cartesian.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::diagrams::Mor;
use crate::elem::Elem;
use crate::error::{Error, Result};
use crate::fincat::homs::enumerate_homs;
use crate::fincat::{Ctx, FinMorphism, MorKind, Obj};
use crate::linexp::{ExpComonad, Suite};
use crate::report::{AxiomReport, CheckRecord, Counterexample, Status};

use super::cartesian::{check_em_cartesian, EmCategory};
use super::coalgebra::{cofree, em_homs, em_product, em_unit, morphism_square, Coalgebra};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    IsLinearExponential,
    NotLinearExponential,
    Inconclusive,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::IsLinearExponential => "is linear exponential",
            Verdict::NotLinearExponential => "not linear exponential",
            Verdict::Inconclusive => "inconclusive within bound",
        })
    }
}

/// A comonad with its `d` and `e` hidden.
pub struct Stripped<'c> {
    pub inner: &'c dyn ExpComonad,
}

impl ExpComonad for Stripped<'_> {
    fn name(&self) -> String {
        format!("{}[no d, e]", self.inner.name())
    }

    fn bang_carrier(&self, ctx: &Ctx, a: &Obj) -> Result<Vec<Elem>> {
        self.inner.bang_carrier(ctx, a)
    }

    fn bang_value(&self, ctx: &Ctx, a: &Obj, x: &Elem) -> Result<u32> {
        self.inner.bang_value(ctx, a, x)
    }

    fn bang_act(&self, ctx: &Ctx, a: &Obj, g: u32, x: &Elem) -> Result<Elem> {
        self.inner.bang_act(ctx, a, g, x)
    }

    fn bang_restrict(&self, ctx: &Ctx, a: &Obj, x: &Elem, b: u32) -> Result<Option<Elem>> {
        self.inner.bang_restrict(ctx, a, x, b)
    }

    fn bang_map(&self, ctx: &Ctx, f: &Mor, x: &Elem) -> Result<Vec<Elem>> {
        self.inner.bang_map(ctx, f, x)
    }

    fn delta(&self, ctx: &Ctx, a: &Obj, x: &Elem) -> Result<Vec<Elem>> {
        self.inner.delta(ctx, a, x)
    }

    fn epsilon(&self, ctx: &Ctx, a: &Obj, x: &Elem) -> Result<Vec<Elem>> {
        self.inner.epsilon(ctx, a, x)
    }

    fn m(&self, ctx: &Ctx, a: &Obj, b: &Obj, x: &Elem) -> Result<Vec<Elem>> {
        self.inner.m(ctx, a, b, x)
    }

    fn m_unit(&self, ctx: &Ctx, x: &Elem) -> Result<Vec<Elem>> {
        self.inner.m_unit(ctx, x)
    }

    fn has_comonoid(&self) -> bool {
        false
    }

    fn graded(&self) -> bool {
        self.inner.graded()
    }
}

/// Projections of `p (x) p` forced by a terminal map `e_p`.
fn forced_projections(ctx: &Ctx, p: &Coalgebra, e_p: &FinMorphism) -> Result<(FinMorphism, FinMorphism)> {
    let a = &p.carrier;
    let e = Mor::named("e_P", e_p.clone());
    let pi1 = ctx.eval_path(&Mor::tensor(Mor::Id(a.clone()), e.clone()).then(Mor::RUnit(a.clone())))?;
    let pi2 = ctx.eval_path(&Mor::tensor(e, Mor::Id(a.clone())).then(Mor::LUnit(a.clone())))?;
    Ok((pi1, pi2))
}

/// Coalgebra morphisms `p -> p (x) p` whose composites with both forced
/// projections are the identity, found by choosing images pointwise.
pub fn diagonals(ctx: &Ctx, p: &Coalgebra, e_p: &FinMorphism) -> Result<Vec<FinMorphism>> {
    let a = &p.carrier;
    let aa = Obj::tensor(a.clone(), a.clone());
    let pp = em_product(ctx, p, p)?;
    let (pi1, pi2) = forced_projections(ctx, p, e_p)?;
    let kind = ctx.model.mor_kind();
    let (src, tgt) = (ctx.carrier(a)?, ctx.carrier(&aa)?);
    let mut options: Vec<Vec<Vec<Elem>>> = Vec::new();
    for x in src.iter() {
        let fits: Vec<&Elem> =
            tgt.iter().filter(|w| pi1.image(w).iter().all(|y| y == x) && pi2.image(w).iter().all(|y| y == x)).collect();
        let mut opts = Vec::new();
        match kind {
            MorKind::Function => {
                for w in fits {
                    if pi1.image(w) == [x.clone()] && pi2.image(w) == [x.clone()] {
                        opts.push(vec![w.clone()]);
                    }
                }
            }
            MorKind::Relation => {
                ctx.guard("diagonal candidates", 1u128 << fits.len().min(127))?;
                for mask in 1u64..(1u64 << fits.len()) {
                    let s: Vec<Elem> = (0..fits.len()).filter(|i| mask >> i & 1 == 1).map(|i| fits[i].clone()).collect();
                    let covers = |pi: &FinMorphism| s.iter().any(|w| !pi.image(w).is_empty());
                    if covers(&pi1) && covers(&pi2) {
                        opts.push(s);
                    }
                }
            }
        }
        options.push(opts);
    }
    let space: u128 = options.iter().map(|o| o.len() as u128).product();
    if space > ctx.limits.max_hom_search {
        return Err(Error::SizeBoundExceeded { what: format!("diagonal candidates on {a}"), size: space, limit: ctx.limits.max_hom_search });
    }
    let mut out = Vec::new();
    if options.iter().any(Vec::is_empty) {
        return Ok(out);
    }
    let mut pick = vec![0usize; options.len()];
    loop {
        ctx.check_time()?;
        let images = src.iter().zip(&pick).zip(&options).map(|((x, &i), o)| (x.clone(), o[i].clone()));
        let d = FinMorphism::from_images(a.clone(), aa.clone(), kind, images);
        if ctx.model.is_hom(ctx, &d)? && morphism_square(ctx, p, &pp, &Mor::named("d", d.clone()))?.holds() {
            out.push(d);
        }
        let mut i = 0;
        while i < pick.len() {
            pick[i] += 1;
            if pick[i] < options[i].len() {
                break;
            }
            pick[i] = 0;
            i += 1;
        }
        if i == pick.len() {
            break;
        }
    }
    Ok(out)
}

/// `(d_a, e_a)` read off the coalgebra category at `(!a, delta_a)`: `e_a`
/// is the unique coalgebra morphism to `(I, m_I)` and `d_a` the unique
/// pairing of two identities. `ctx` carries the bare monoidal comonad.
pub fn extract_at(ctx: &Ctx, a: &Obj) -> Result<(FinMorphism, FinMorphism)> {
    let cf = cofree(ctx, a)?;
    let es = em_homs(ctx, &cf, &em_unit(ctx)?)?;
    let [e] = es.as_slice() else {
        return Err(Error::Unsupported(format!("{} coalgebra morphisms !{a} -> I; no unique e", es.len())));
    };
    let ds = diagonals(ctx, &cf, e)?;
    let [d] = ds.as_slice() else {
        return Err(Error::Unsupported(format!("{} diagonal candidates on !{a}; no unique d", ds.len())));
    };
    Ok((d.clone(), e.clone()))
}

/// The monoidal comonad of `inner` with `d`, `e` supplied by extraction at
/// each object on demand.
pub struct Extracted<'a> {
    pub inner: Ctx<'a>,
}

impl Extracted<'_> {
    fn tables(&self, a: &Obj) -> Result<Arc<(FinMorphism, FinMorphism)>> {
        self.inner.memo("extracted-d-e", a, || extract_at(&self.inner, a))
    }
}

impl ExpComonad for Extracted<'_> {
    fn name(&self) -> String {
        format!("{}[extracted d, e]", self.inner.comonad().map(|c| c.name()).unwrap_or_default())
    }

    fn bang_carrier(&self, ctx: &Ctx, a: &Obj) -> Result<Vec<Elem>> {
        self.inner.comonad()?.bang_carrier(ctx, a)
    }

    fn bang_value(&self, ctx: &Ctx, a: &Obj, x: &Elem) -> Result<u32> {
        self.inner.comonad()?.bang_value(ctx, a, x)
    }

    fn bang_act(&self, ctx: &Ctx, a: &Obj, g: u32, x: &Elem) -> Result<Elem> {
        self.inner.comonad()?.bang_act(ctx, a, g, x)
    }

    fn bang_restrict(&self, ctx: &Ctx, a: &Obj, x: &Elem, b: u32) -> Result<Option<Elem>> {
        self.inner.comonad()?.bang_restrict(ctx, a, x, b)
    }

    fn bang_map(&self, ctx: &Ctx, f: &Mor, x: &Elem) -> Result<Vec<Elem>> {
        self.inner.comonad()?.bang_map(ctx, f, x)
    }

    fn delta(&self, ctx: &Ctx, a: &Obj, x: &Elem) -> Result<Vec<Elem>> {
        self.inner.comonad()?.delta(ctx, a, x)
    }

    fn epsilon(&self, ctx: &Ctx, a: &Obj, x: &Elem) -> Result<Vec<Elem>> {
        self.inner.comonad()?.epsilon(ctx, a, x)
    }

    fn m(&self, ctx: &Ctx, a: &Obj, b: &Obj, x: &Elem) -> Result<Vec<Elem>> {
        self.inner.comonad()?.m(ctx, a, b, x)
    }

    fn m_unit(&self, ctx: &Ctx, x: &Elem) -> Result<Vec<Elem>> {
        self.inner.comonad()?.m_unit(ctx, x)
    }

    fn d(&self, _ctx: &Ctx, a: &Obj, x: &Elem) -> Result<Vec<Elem>> {
        Ok(self.tables(a)?.0.image(x).to_vec())
    }

    fn e(&self, _ctx: &Ctx, a: &Obj, x: &Elem) -> Result<Vec<Elem>> {
        Ok(self.tables(a)?.1.image(x).to_vec())
    }

    fn graded(&self) -> bool {
        self.inner.comonad().map(|c| c.graded()).unwrap_or(false)
    }
}

/// Outcome of both directions with the records that justify it.
#[derive(Clone, Debug)]
pub struct IffOutcome {
    pub verdict: Verdict,
    pub report: AxiomReport,
}

fn no_coalgebra_morphism(ctx: &Ctx, src: &Obj, tgt: &Obj) -> Result<Counterexample> {
    if enumerate_homs(ctx, src, tgt)?.is_empty() {
        return Ok(Counterexample::no_morphism(src, tgt));
    }
    Ok(Counterexample::error(&Error::Unsupported(format!("morphisms {src} -> {tgt} exist but none is a coalgebra morphism"))))
}

/// Searches the sampled coalgebras for a reason the tensor cannot be the
/// product: a missing projection, a non-terminal unit, forced projections
/// that are not coalgebra morphisms, or a missing or ambiguous diagonal.
fn refute(ctx: &Ctx, bound: usize) -> Result<Option<(String, Counterexample)>> {
    let mut em = EmCategory::sample(ctx, bound)?;
    let n = em.objects.len();
    for i in 0..n {
        for j in 0..n {
            let (p, q) = (em.objects[i].clone(), em.objects[j].clone());
            let pq = em_product(ctx, &p, &q)?;
            for (k, target) in [(1, &p), (2, &q)] {
                if em_homs(ctx, &pq, target)?.is_empty() {
                    let why = format!("no projection {} -> {} (component {k})", pq.carrier, target.carrier);
                    return Ok(Some((why, no_coalgebra_morphism(ctx, &pq.carrier, &target.carrier)?)));
                }
            }
        }
    }
    let mut terminal = Vec::new();
    for k in 0..n {
        let hs = em.homs(k, 0)?.to_vec();
        let carrier = em.objects[k].carrier.clone();
        match hs.as_slice() {
            [] => return Ok(Some((format!("no coalgebra morphism {carrier} -> I"), no_coalgebra_morphism(ctx, &carrier, &Obj::Unit)?))),
            [e] => terminal.push(e.clone()),
            [h1, h2, ..] => {
                let cmp = crate::diagrams::compare(ctx, ctx.wider(), &Mor::named("h1", h1.clone()), &Mor::named("h2", h2.clone()))?;
                let cx = Counterexample::from_comparison(ctx, &cmp).expect("distinct morphisms differ");
                return Ok(Some((format!("{} coalgebra morphisms {carrier} -> I", hs.len()), cx)));
            }
        }
    }
    for (k, e) in terminal.iter().enumerate() {
        let p = em.objects[k].clone();
        let pp = em_product(ctx, &p, &p)?;
        let (pi1, pi2) = forced_projections(ctx, &p, e)?;
        for (name, pi) in [("pi1", pi1), ("pi2", pi2)] {
            let cmp = morphism_square(ctx, &pp, &p, &Mor::named(name, pi))?;
            if !cmp.holds() {
                let cx = Counterexample::from_comparison(ctx, &cmp).expect("failing comparison");
                return Ok(Some((format!("forced {name} on {} is not a coalgebra morphism", pp.carrier), cx)));
            }
        }
        let ds = diagonals(ctx, &p, e)?;
        if ds.len() != 1 {
            let why = format!("{} diagonals on {}", ds.len(), p.carrier);
            let cx = if ds.len() >= 2 {
                let cmp = crate::diagrams::compare(ctx, ctx.wider(), &Mor::named("d1", ds[0].clone()), &Mor::named("d2", ds[1].clone()))?;
                Counterexample::from_comparison(ctx, &cmp).expect("distinct morphisms differ")
            } else {
                Counterexample::error(&Error::Unsupported(why.clone()))
            };
            return Ok(Some((why, cx)));
        }
    }
    Ok(None)
}

fn suite_report(ctx: &Ctx, bound: usize) -> AxiomReport {
    let mut s = Suite::new(ctx, bound);
    let mut r = s.comonad();
    r.extend(s.def2());
    r.extend(check_em_cartesian(ctx, bound));
    r
}

fn first_failure(r: &AxiomReport) -> Option<CheckRecord> {
    r.canonical().into_iter().find(|rec| rec.status != Status::Pass)
}

/// Both directions on objects within `bound`. Records:
/// `thm5.direction-a`, `thm5.direction-b` and the overall `thm5.iff`.
pub fn check_iff_characterization(ctx: &Ctx, bound: usize) -> IffOutcome {
    let mut report = AxiomReport::default();
    let comonad = match ctx.comonad() {
        Ok(c) => c,
        Err(e) => {
            for id in ["thm5.direction-a", "thm5.direction-b", "thm5.iff"] {
                report.push(CheckRecord::from_error(id, &e));
            }
            return IffOutcome { verdict: Verdict::Inconclusive, report };
        }
    };

    let direction_a = if !comonad.has_comonoid() {
        CheckRecord::skipped("thm5.direction-a", "no d, e supplied")
    } else {
        let r = suite_report(ctx, bound);
        match first_failure(&r) {
            None => CheckRecord { note: Some("suite passes and coalgebras are cartesian".into()), ..pass("thm5.direction-a", &r) },
            Some(bad) if bad.id.starts_with("em.") => CheckRecord { id: "thm5.direction-a".into(), note: Some(format!("suite passes but {} fails", bad.id)), ..bad },
            Some(bad) => CheckRecord::skipped("thm5.direction-a", format!("{} fails, so the hypothesis does not hold", bad.id)),
        }
    };
    report.push(direction_a);

    let stripped = Stripped { inner: comonad };
    let sctx = Ctx::new(ctx.model, Some(&stripped)).with_grade(ctx.grade).with_limits(ctx.limits);
    let (verdict, direction_b) = match refute(&sctx, bound) {
        Err(e) => (Verdict::Inconclusive, CheckRecord { status: Status::Inconclusive, note: Some(e.to_string()), ..CheckRecord::skipped("thm5.direction-b", "") }),
        Ok(Some((why, cx))) => (
            Verdict::NotLinearExponential,
            CheckRecord { status: Status::Fail, cases: 1, note: Some(why), counterexample: Some(cx), ..CheckRecord::skipped("thm5.direction-b", "") },
        ),
        Ok(None) => {
            let extracted = Extracted { inner: Ctx::new(ctx.model, Some(&stripped)).with_grade(ctx.grade).with_limits(ctx.limits) };
            let ectx = Ctx::new(ctx.model, Some(&extracted)).with_grade(ctx.grade).with_limits(ctx.limits);
            let r = suite_report(&ectx, bound);
            match first_failure(&r) {
                None => (Verdict::IsLinearExponential, CheckRecord { note: Some("extracted d, e pass the suite".into()), ..pass("thm5.direction-b", &r) }),
                Some(bad) => (
                    Verdict::Inconclusive,
                    CheckRecord {
                        status: Status::Inconclusive,
                        note: Some(format!("extracted d, e: {} is {:?}", bad.id, bad.status)),
                        ..CheckRecord::skipped("thm5.direction-b", "")
                    },
                ),
            }
        }
    };
    let iff = CheckRecord {
        id: "thm5.iff".into(),
        status: match verdict {
            Verdict::IsLinearExponential => Status::Pass,
            Verdict::NotLinearExponential => Status::Fail,
            Verdict::Inconclusive => Status::Inconclusive,
        },
        cases: direction_b.cases,
        excluded: direction_b.excluded,
        widened: direction_b.widened,
        note: Some(match &direction_b.note {
            Some(why) if verdict != Verdict::IsLinearExponential => format!("{verdict}: {why}"),
            _ => verdict.to_string(),
        }),
        counterexample: direction_b.counterexample.clone(),
        duration_ms: None,
    };
    report.push(direction_b);
    report.push(iff);
    IffOutcome { verdict, report }
}

fn pass(id: &str, r: &AxiomReport) -> CheckRecord {
    CheckRecord { status: Status::Pass, cases: r.total_cases(), excluded: r.total_excluded(), widened: r.total_widened(), ..CheckRecord::skipped(id, "") }
}
