use std::sync::Arc;

use lexc_core::elem::Elem;
use lexc_core::fincat::laws::model_selfcheck;
use lexc_core::fincat::{Ctx, Obj};
use lexc_core::linexp::{sigma, ExpComonad, MutantComonad, Mutation, Suite};
use lexc_core::models::{preset, FinGroup, XRelComonad, XRelModel};
use lexc_core::report::Status;

fn xrel(name: &str) -> XRelModel {
    XRelModel::new(FinGroup::new(preset(name).unwrap()).unwrap())
}

#[test]
fn z2_full_suite_within_grade() {
    let m = xrel("Z2");
    let c = XRelComonad::new(&m);
    let ctx = Ctx::new(&m, Some(&c)).with_grade(Some(2));
    let mut r = model_selfcheck(&ctx, 2);
    let mut s = Suite::new(&ctx, 2);
    r.extend(s.comonad());
    r.extend(s.def2());
    r.extend(s.derived());
    r.extend(s.symmetric("xrel.sigma-vs-braiding"));
    for rec in r.canonical() {
        assert_eq!(rec.status, Status::Pass, "{} {:?}", rec.id, rec.counterexample);
    }
    assert!(r.get("def2.cond1").unwrap().cases > 0);
    assert!(r.get("comonad.coassoc").unwrap().cases > 0);
}

#[test]
fn s3_derived_properties_within_grade() {
    let m = xrel("S3");
    let c = XRelComonad::new(&m);
    let ctx = Ctx::new(&m, Some(&c)).with_grade(Some(2));
    let r = Suite::new(&ctx, 2).derived();
    for rec in r.canonical() {
        assert_eq!(rec.status, Status::Pass, "{}", rec.id);
    }
}

#[test]
fn sigma_matches_the_braiding_on_bang_objects() {
    let m = xrel("Z2");
    let c = XRelComonad::new(&m);
    let ctx = Ctx::new(&m, Some(&c)).with_grade(Some(2));
    let x = Obj::base(m.object("X", &["x", "y"], &["e", "e"], &[vec!["x", "y"], vec!["y", "x"]]).unwrap());
    let z = Obj::base(m.object("Z", &["z"], &["e"], &[vec!["z"], vec!["z"]]).unwrap());
    let got = sigma(&ctx, &x, &z).unwrap();
    // the braiding on !X (x) !Z acts by the grade e of multisets, so it is the plain swap
    let src = ctx.carrier(&Obj::tensor(Obj::bang(x), Obj::bang(z))).unwrap();
    assert_eq!(src.len(), 9);
    for p in src.iter() {
        let (u, v) = p.as_pair().unwrap();
        assert_eq!(got.image(p), &[Elem::pair(v.clone(), u.clone())]);
    }
}

#[test]
fn twisted_d_is_caught() {
    let m = xrel("Z2");
    let inner: Arc<dyn ExpComonad> = Arc::new(XRelComonad::new(&m));
    let mc = MutantComonad { inner, mutation: Mutation::TwistedD };
    let ctx = Ctx::new(&m, Some(&mc)).with_grade(Some(2));
    let mut s = Suite::new(&ctx, 1);
    let (c5, c6) = (s.condition(5), s.condition(6));
    assert!(c5.status == Status::Fail || c6.status == Status::Fail);
    let failing = if c6.status == Status::Fail { c6 } else { c5 };
    assert!(failing.counterexample.unwrap().replay(&ctx).unwrap());
}
