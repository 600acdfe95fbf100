use std::sync::Arc;

use lexc_core::elem::Elem;
use lexc_core::fincat::{Ctx, FinMorphism, MorKind, Obj};
use lexc_core::linexp::{sigma, ExpComonad, IdentityComonad, MutantComonad, MutantModel, Mutation, Suite, MUTATIONS};
use lexc_core::models::{preset, SliceComonad, SliceModel};
use lexc_core::report::{AxiomReport, Status};

fn slice(name: &str) -> SliceModel {
    SliceModel::new(preset(name).unwrap())
}

fn full(s: &mut Suite) -> AxiomReport {
    let mut r = s.comonad();
    r.extend(s.def2());
    r.extend(s.derived());
    r
}

fn assert_all_pass(r: &AxiomReport) {
    for rec in r.canonical() {
        assert_eq!(rec.status, Status::Pass, "{} {:?}", rec.id, rec.counterexample);
        assert!(rec.counterexample.is_none());
    }
}

#[test]
fn l3_passes_everything_at_bound_three() {
    let m = slice("L3");
    let c = SliceComonad::new(&m);
    let ctx = Ctx::new(&m, Some(&c));
    let mut s = Suite::new(&ctx, 3);
    assert_eq!(s.objs.len(), 20);
    let r = full(&mut s);
    assert_all_pass(&r);
    for k in 1..=8 {
        assert!(r.get(&format!("def2.cond{k}")).unwrap().cases > 0);
    }
}

#[test]
fn z2_sigma_is_the_symmetry() {
    let m = slice("Z2");
    let c = SliceComonad::new(&m);
    let ctx = Ctx::new(&m, Some(&c));
    let mut s = Suite::new(&ctx, 3);
    let r = s.symmetric("sym.prop4");
    assert_eq!(r.get("sym.prop4").unwrap().status, Status::Pass);
    assert_eq!(r.get("sym.prop1").unwrap().status, Status::Pass);
}

#[test]
fn c3_appendix_composite_is_identity() {
    let m = slice("C3");
    let c = SliceComonad::new(&m);
    let ctx = Ctx::new(&m, Some(&c));
    let r = Suite::new(&ctx, 3).symmetric("sym.prop4");
    assert_all_pass(&r);
}

#[test]
fn sigma_on_unit_valued_objects_swaps_pairs() {
    let m = slice("Z2");
    let c = SliceComonad::new(&m);
    let ctx = Ctx::new(&m, Some(&c));
    let x = Obj::base(m.object("X", &[("x0", "e"), ("x1", "e")]).unwrap());
    let y = Obj::base(m.object("Y", &[("y0", "e"), ("y1", "s")]).unwrap());
    let got = sigma(&ctx, &x, &y).unwrap();
    // only y0 survives in !Y, so the oracle is the plain swap on {x0, x1} x {y0}
    let src = Obj::tensor(Obj::bang(x.clone()), Obj::bang(y.clone()));
    let tgt = Obj::tensor(Obj::bang(y), Obj::bang(x));
    let pairs = ["X.x0", "X.x1"].map(|a| (Elem::pair(Elem::sym(a), Elem::sym("Y.y0")), Elem::pair(Elem::sym("Y.y0"), Elem::sym(a))));
    assert_eq!(got, FinMorphism::from_pairs(src, tgt, MorKind::Function, pairs));
}

#[test]
fn sigma_with_empty_bang_is_empty() {
    let m = slice("Z2");
    let c = SliceComonad::new(&m);
    let ctx = Ctx::new(&m, Some(&c));
    let x = Obj::base(m.object("X", &[("x", "s")]).unwrap());
    let y = Obj::base(m.object("Y", &[("y", "e")]).unwrap());
    assert_eq!(sigma(&ctx, &x, &y).unwrap().pairs().count(), 0);
}

#[test]
fn every_comonad_mutation_is_caught_and_replays() {
    let m = slice("L3");
    for mu in MUTATIONS.into_iter().filter(|mu| !mu.on_model()) {
        let inner: Arc<dyn ExpComonad> = Arc::new(SliceComonad::new(&m));
        let mc = MutantComonad { inner, mutation: mu };
        let ctx = Ctx::new(&m, Some(&mc));
        let r = full(&mut Suite::new(&ctx, 2));
        let failed: Vec<_> = r.canonical().into_iter().filter(|r| r.status == Status::Fail).collect();
        assert!(!failed.is_empty(), "{mu} slipped through");
        for rec in failed {
            let cx = rec.counterexample.as_ref().unwrap_or_else(|| panic!("{mu}: {} has no counterexample", rec.id));
            assert!(cx.replay(&ctx).unwrap(), "{mu}: {} does not replay", rec.id);
        }
    }
}

#[test]
fn twisted_d_breaks_a_comonoid_condition() {
    let m = slice("T1");
    let inner: Arc<dyn ExpComonad> = Arc::new(SliceComonad::new(&m));
    let mc = MutantComonad { inner, mutation: Mutation::TwistedD };
    let ctx = Ctx::new(&m, Some(&mc));
    let mut s = Suite::new(&ctx, 2);
    let (c5, c6) = (s.condition(5), s.condition(6));
    assert!(c5.status == Status::Fail || c6.status == Status::Fail);
}

#[test]
fn identity_braiding_is_caught_in_a_symmetric_model() {
    let inner: Arc<dyn lexc_core::fincat::Model> = Arc::new(slice("Z2"));
    let mm = MutantModel { inner };
    let c = SliceComonad::new(&slice("Z2"));
    let ctx = Ctx::new(&mm, Some(&c));
    let r = Suite::new(&ctx, 2).symmetric("sym.prop4");
    let rec = r.get("sym.prop4").unwrap();
    assert_eq!(rec.status, Status::Fail);
    assert!(rec.counterexample.as_ref().unwrap().replay(&ctx).unwrap());
}

#[test]
fn identity_comonad_on_a_one_morphism_model() {
    let m = slice("T1");
    let c = IdentityComonad::default();
    let ctx = Ctx::new(&m, Some(&c));
    let mut s = Suite::new(&ctx, 0);
    assert_eq!(s.objs.len(), 1);
    assert_all_pass(&s.comonad());
}

#[test]
fn identity_comonad_is_monoidal_on_l3() {
    let m = slice("L3");
    let c = IdentityComonad::default();
    let ctx = Ctx::new(&m, Some(&c));
    assert_all_pass(&Suite::new(&ctx, 2).comonad());
}
