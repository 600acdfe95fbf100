//! Agreement checks for the Day model: the adjunction route against the
//! coend formula, and a discrete Day model against the slice model.

use std::collections::HashMap;
use std::sync::Arc;

use super::{untag, CoendComonad, DayAdjunction, DayModel};
use crate::diagrams::Mor;
use crate::elem::Elem;
use crate::em::{compare_comonads, AdjunctionComonad};
use crate::error::{Error, Result};
use crate::fincat::homs::enumerate_homs;
use crate::fincat::laws::sample;
use crate::fincat::{Ctx, FinMorphism, FinObject, Obj};
use crate::models::{SliceComonad, SliceModel};
use crate::report::{run_check, Check, CheckRecord, Counterexample};

/// `!` through the adjunction against `!` from the coend formula.
pub fn check_day_routes(day: &DayModel, bound: usize) -> CheckRecord {
    let adj = DayAdjunction::new(day);
    let fu = AdjunctionComonad::new(&adj);
    let coend = CoendComonad::new(day);
    let (l, r) = (Ctx::new(day, Some(&fu)), Ctx::new(day, Some(&coend)));
    compare_comonads("day.coend", &l, &r, bound)
}

/// The sliced set `o` as a presheaf on the discrete base.
pub fn presheaf_of(day: &DayModel, slice: &SliceModel, o: &FinObject) -> Result<FinObject> {
    let sctx = Ctx::new(slice, None);
    let so = Obj::Base(Arc::new(o.clone()));
    let mut carrier = Vec::with_capacity(o.len());
    for x in &o.carrier {
        carrier.push(Elem::tag(sctx.value(&so, x)?, x.clone()));
    }
    day.presheaf(o.id.clone(), carrier, |x, b| Err(Error::InvalidObject(format!("{x} has no restriction to {b} in a discrete base"))))
}

/// Day element to slice element, following the shape of the Day object.
fn to_slice(obj: &Obj, x: &Elem) -> Result<Elem> {
    Ok(match obj {
        Obj::Base(_) => untag(x)?.clone(),
        Obj::Unit => Elem::Star,
        Obj::Tensor(a, b) => {
            let (p, q) = untag(x)?.as_pair().ok_or_else(|| Error::NotInCarrier { elem: x.to_string(), obj: obj.to_string() })?;
            Elem::pair(to_slice(a, p)?, to_slice(b, q)?)
        }
        Obj::Bang(a) => to_slice(a, untag(untag(x)?)?)?,
    })
}

struct Translation {
    objects: HashMap<String, Obj>,
}

impl Translation {
    fn obj(&self, o: &Obj) -> Obj {
        match o {
            Obj::Base(b) => self.objects[&b.id].clone(),
            Obj::Unit => Obj::Unit,
            Obj::Tensor(a, b) => Obj::tensor(self.obj(a), self.obj(b)),
            Obj::Bang(a) => Obj::bang(self.obj(a)),
        }
    }

    fn hom(&self, sctx: &Ctx, f: &FinMorphism) -> Result<FinMorphism> {
        let mut pairs = Vec::new();
        for (x, y) in f.pairs() {
            pairs.push((Elem::tag(sctx.value(&f.src, x)?, x.clone()), Elem::tag(sctx.value(&f.tgt, y)?, y.clone())));
        }
        Ok(FinMorphism::from_pairs(self.obj(&f.src), self.obj(&f.tgt), f.kind, pairs))
    }
}

fn mismatch(c: &mut Check, msg: String) {
    c.note.get_or_insert_with(|| msg.clone());
    c.fail(Counterexample::error(&Error::Unsupported(msg)));
}

/// Tabulates `mor` in the Day model and compares every row with the slice
/// model after translation.
fn same_table(c: &mut Check, sctx: &Ctx, dctx: &Ctx, what: &str, smor: &Mor, dmor: &Mor) -> Result<()> {
    let table = dctx.eval_path(dmor)?;
    let (src, tgt) = (dmor.src()?, dmor.tgt()?);
    let domain = sctx.carrier(&smor.src()?)?;
    c.tick();
    if table.graph().len() != domain.len() {
        mismatch(c, format!("{what}: {} rows against {}", table.graph().len(), domain.len()));
        return Ok(());
    }
    for (x, ys) in table.graph() {
        c.tick();
        let sx = to_slice(&src, x)?;
        let mut got = ys.iter().map(|y| to_slice(&tgt, y)).collect::<Result<Vec<_>>>()?;
        got.sort();
        let want = sctx.image(smor, &sx)?;
        if got != want {
            mismatch(c, format!("{what} at {sx}: {got:?} against {want:?}"));
        }
    }
    Ok(())
}

/// Over a discrete base with a one-point index, the Day exponential and
/// the slice exponential have the same tables on every sampled object.
pub fn check_day_cross_model(day: &DayModel, slice: &SliceModel, bound: usize) -> CheckRecord {
    run_check("day.cross-model", |c| {
        let same_base = day.base.is_discrete() && day.base.names == slice.monoid.names && day.base.tensor == slice.monoid.table;
        if !same_base || day.xcat.len() != 1 {
            return Err(Error::Unsupported(format!("{} is not the discrete presheaf form of {}", day.base.name, slice.monoid.name)));
        }
        let adj = DayAdjunction::new(day);
        let fu = AdjunctionComonad::new(&adj);
        let dctx = Ctx::new(day, Some(&fu));
        let sc = SliceComonad::new(slice);
        let sctx = Ctx::new(slice, Some(&sc));
        let objs = sample(&sctx, bound);
        let mut tr = Translation { objects: HashMap::new() };
        for o in &objs {
            let Obj::Base(b) = o else { continue };
            tr.objects.insert(b.id.clone(), Obj::base(presheaf_of(day, slice, b)?));
        }
        same_table(c, &sctx, &dctx, "m_I", &Mor::MUnit, &Mor::MUnit)?;
        for a in &objs {
            let da = tr.obj(a);
            let (sb, db) = (Obj::bang(a.clone()), Obj::bang(da.clone()));
            let dcar = dctx.carrier(&db)?;
            let mut got = dcar.iter().map(|x| to_slice(&db, x)).collect::<Result<Vec<_>>>()?;
            got.sort();
            c.tick();
            if got != *sctx.carrier(&sb)? {
                mismatch(c, format!("carrier of {sb}"));
            }
            for x in dcar.iter() {
                c.tick();
                let (dv, sv) = (dctx.value(&db, x)?, sctx.value(&sb, &to_slice(&db, x)?)?);
                if dv != sv {
                    mismatch(c, format!("{x} in {db} lies over {dv}, valued {sv} in the slice model"));
                }
            }
            let pairs = [
                ("delta", Mor::Delta(a.clone()), Mor::Delta(da.clone())),
                ("eps", Mor::Eps(a.clone()), Mor::Eps(da.clone())),
                ("d", Mor::D(a.clone()), Mor::D(da.clone())),
                ("e", Mor::E(a.clone()), Mor::E(da.clone())),
            ];
            for (what, s, d) in pairs {
                same_table(c, &sctx, &dctx, &format!("{what}_{a}"), &s, &d)?;
            }
            for b in &objs {
                let dbb = tr.obj(b);
                same_table(c, &sctx, &dctx, &format!("m_{a},{b}"), &Mor::M(a.clone(), b.clone()), &Mor::M(da.clone(), dbb))?;
                for f in enumerate_homs(&sctx, a, b)? {
                    let df = tr.hom(&sctx, &f)?;
                    same_table(c, &sctx, &dctx, &format!("!f on {a} -> {b}"), &Mor::bang(Mor::named("f", f)), &Mor::bang(Mor::named("f", df)))?;
                }
            }
        }
        Ok(())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::day::day_preset;
    use crate::models::preset;
    use crate::report::Status;

    #[test]
    fn discrete_l3_agrees_with_the_slice_model() {
        let day = day_preset("L3").unwrap();
        let slice = SliceModel::new(preset("L3").unwrap());
        let r = check_day_cross_model(&day, &slice, 2);
        assert_eq!(r.status, Status::Pass, "{:?}", r.note);
        assert!(r.cases > 100);
    }

    #[test]
    fn ordered_base_is_not_a_slice_model() {
        let day = day_preset("L3a").unwrap();
        let slice = SliceModel::new(preset("L3").unwrap());
        assert_ne!(check_day_cross_model(&day, &slice, 1).status, Status::Pass);
    }

    #[test]
    fn both_routes_agree() {
        for name in ["L3", "L3a"] {
            let r = check_day_routes(&day_preset(name).unwrap(), 2);
            assert_eq!(r.status, Status::Pass, "{name}: {:?}", r.note);
        }
    }
}
