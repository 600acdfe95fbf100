use std::sync::Arc;

use lexc_core::em::{check_adjunction, check_em_cartesian, check_prop2, AdjunctionComonad};
use lexc_core::fincat::laws::model_selfcheck;
use lexc_core::fincat::{Ctx, Obj};
use lexc_core::linexp::{ExpComonad, MutantComonad, Mutation, Suite};
use lexc_core::models::day::{CoendComonad, DayAdjunction, MeetSemilattice};
use lexc_core::models::{day_preset, DayModel};
use lexc_core::report::{AxiomReport, Status};

fn full(s: &mut Suite) -> AxiomReport {
    let mut r = s.comonad();
    r.extend(s.def2());
    r.extend(s.derived());
    r
}

fn assert_all_pass(r: &AxiomReport) {
    for rec in r.canonical() {
        assert_eq!(rec.status, Status::Pass, "{} {:?} {:?}", rec.id, rec.note, rec.counterexample);
    }
}

#[test]
fn l3a_suite_through_the_adjunction() {
    let m = day_preset("L3a").unwrap();
    let adj = DayAdjunction::new(&m);
    let c = AdjunctionComonad::new(&adj);
    let ctx = Ctx::new(&m, Some(&c));
    let r = full(&mut Suite::new(&ctx, 2));
    assert_all_pass(&r);
    for k in 1..=8 {
        assert!(r.get(&format!("def2.cond{k}")).unwrap().cases > 0, "cond{k} vacuous");
    }
    assert_all_pass(&check_adjunction(&ctx, &adj, 2));
    assert_all_pass(&model_selfcheck(&ctx, 2));
}

#[test]
fn l3a_suite_through_the_coend() {
    let m = day_preset("L3a").unwrap();
    let c = CoendComonad::new(&m);
    let ctx = Ctx::new(&m, Some(&c));
    assert_all_pass(&full(&mut Suite::new(&ctx, 2)));
}

#[test]
fn l3a_em_category_is_cartesian() {
    let m = day_preset("L3a").unwrap();
    let adj = DayAdjunction::new(&m);
    let c = AdjunctionComonad::new(&adj);
    let ctx = Ctx::new(&m, Some(&c));
    assert_all_pass(&check_em_cartesian(&ctx, 1));
    assert_all_pass(&check_prop2(&ctx, 1));
}

#[test]
fn broken_m_is_caught_on_l3a() {
    let m = day_preset("L3a").unwrap();
    let inner: Arc<dyn ExpComonad + '_> = Arc::new(CoendComonad::new(&m));
    let mc = MutantComonad { inner, mutation: Mutation::BrokenM };
    let ctx = Ctx::new(&m, Some(&mc));
    let r = full(&mut Suite::new(&ctx, 2));
    let failed: Vec<_> = r.canonical().into_iter().filter(|r| r.status == Status::Fail).collect();
    assert!(!failed.is_empty());
    for rec in failed {
        assert!(rec.counterexample.as_ref().unwrap().replay(&ctx).unwrap(), "{} does not replay", rec.id);
    }
}

#[test]
fn one_point_index_at_the_unit() {
    let l3a = day_preset("L3a").unwrap();
    let e = l3a.base.unit;
    let m = DayModel::new(l3a.base.clone(), MeetSemilattice::point(), vec![e]).unwrap();
    let (a, b) = (m.base.index("a").unwrap(), m.base.index("b").unwrap());
    let g = m.object("G", &[("p", "e"), ("q", "e"), ("r", "a"), ("s", "b")], &[("p", "a", "r"), ("q", "a", "r"), ("s", "a", "r")]).unwrap();
    let c = CoendComonad::new(&m);
    let ctx = Ctx::new(&m, Some(&c));
    let bang = Obj::bang(Obj::base(g));
    let over = |k: u32| ctx.carrier(&bang).unwrap().iter().filter(|y| y.as_tag().unwrap().0 == k).count();
    // !G(c) is B(c, e) x G(e)
    assert_eq!(over(b), 0);
    assert_eq!(over(a), 2);
    assert_eq!(over(e), 2);
}
