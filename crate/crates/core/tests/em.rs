use std::sync::Arc;

use lexc_core::em::{check_em_cartesian, check_em_symmetry_and_monoidal_adjunction, EmCategory};
use lexc_core::fincat::Ctx;
use lexc_core::linexp::{ExpComonad, MutantComonad, Mutation};
use lexc_core::models::{preset, SliceComonad, SliceModel};
use lexc_core::report::{AxiomReport, Status};

fn slice(name: &str) -> SliceModel {
    SliceModel::new(preset(name).unwrap())
}

fn assert_all_pass(r: &AxiomReport) {
    for rec in r.canonical() {
        assert_eq!(rec.status, Status::Pass, "{} {:?} {:?}", rec.id, rec.note, rec.counterexample);
        assert!(rec.cases > 0, "{} is vacuous", rec.id);
    }
}

#[test]
fn l3_coalgebras_are_the_unit_valued_sets() {
    let m = slice("L3");
    let c = SliceComonad::new(&m);
    let ctx = Ctx::new(&m, Some(&c));
    let em = EmCategory::sample(&ctx, 3).unwrap();
    // (I, m_I) plus one coalgebra per size 0..=3
    assert_eq!(em.objects.len(), 5);
}

#[test]
fn l3_em_category_is_cartesian_at_bound_three() {
    let m = slice("L3");
    let c = SliceComonad::new(&m);
    let ctx = Ctx::new(&m, Some(&c));
    assert_all_pass(&check_em_cartesian(&ctx, 3));
}

#[test]
fn l3_symmetry_lifts_at_bound_three() {
    let m = slice("L3");
    let c = SliceComonad::new(&m);
    let ctx = Ctx::new(&m, Some(&c));
    assert_all_pass(&check_em_symmetry_and_monoidal_adjunction(&ctx, 3));
}

#[test]
fn one_object_model_passes() {
    let m = slice("T1");
    let c = SliceComonad::new(&m);
    let ctx = Ctx::new(&m, Some(&c));
    let r = check_em_cartesian(&ctx, 0);
    for rec in r.canonical() {
        assert_eq!(rec.status, Status::Pass, "{}", rec.id);
    }
}

#[test]
fn dropped_e_breaks_the_cartesian_structure() {
    let m = slice("L3");
    let inner: Arc<dyn ExpComonad> = Arc::new(SliceComonad::new(&m));
    let mc = MutantComonad { inner, mutation: Mutation::DroppedENaturality };
    let ctx = Ctx::new(&m, Some(&mc));
    let r = check_em_cartesian(&ctx, 2);
    assert!(r.any_fail());
    for rec in r.canonical().into_iter().filter(|r| r.status == Status::Fail) {
        let cx = rec.counterexample.unwrap();
        if !matches!(cx.evidence, lexc_core::report::Evidence::Error { .. }) {
            assert!(cx.replay(&ctx).unwrap(), "{}", rec.id);
        }
    }
}

mod round_trip {
    use lexc_core::em::{check_adjunction, compare_comonads, AdjunctionComonad, EmAdjunction, IdentityAdjunction, SliceAdjunction};
    use lexc_core::fincat::Ctx;
    use lexc_core::linexp::{IdentityComonad, Suite};
    use lexc_core::models::{preset, FinGroup, SliceComonad, XRelComonad, XRelModel};
    use lexc_core::report::Status;

    use super::{assert_all_pass, slice};

    #[test]
    fn slice_adjunction_reproduces_the_direct_comonad() {
        let m = slice("L3");
        let adj = SliceAdjunction { unit: m.monoid.unit };
        let fu = AdjunctionComonad::new(&adj);
        let direct = SliceComonad::new(&m);
        let (actx, dctx) = (Ctx::new(&m, Some(&fu)), Ctx::new(&m, Some(&direct)));
        assert_all_pass(&check_adjunction(&actx, &adj, 3));
        let rec = compare_comonads("adj.round-trip", &actx, &dctx, 3);
        assert_eq!(rec.status, Status::Pass, "{:?}", rec.note);
        let mut s = Suite::new(&actx, 2);
        let mut r = s.comonad();
        r.extend(s.def2());
        assert_all_pass(&r);
    }

    #[test]
    fn identity_adjunction_is_the_diagonal_comonad() {
        let m = slice("T1");
        let fu = AdjunctionComonad::new(&IdentityAdjunction);
        let id = IdentityComonad { diagonal: true };
        let rec = compare_comonads("adj.round-trip", &Ctx::new(&m, Some(&fu)), &Ctx::new(&m, Some(&id)), 3);
        assert_eq!(rec.status, Status::Pass, "{:?}", rec.note);
    }

    #[test]
    fn coalgebra_adjunction_round_trips_on_l3() {
        let m = slice("L3");
        let direct = SliceComonad::new(&m);
        let adj = EmAdjunction::new(Ctx::new(&m, Some(&direct)));
        let fu = AdjunctionComonad::new(&adj);
        let actx = Ctx::new(&m, Some(&fu));
        assert_all_pass(&check_adjunction(&actx, &adj, 2));
        let rec = compare_comonads("adj.round-trip", &actx, &Ctx::new(&m, Some(&direct)), 3);
        assert_eq!(rec.status, Status::Pass, "{:?}", rec.note);
    }

    #[test]
    fn coalgebra_adjunction_round_trips_on_xrel_z2() {
        let m = XRelModel::new(FinGroup::new(preset("Z2").unwrap()).unwrap());
        let direct = XRelComonad::new(&m);
        let adj = EmAdjunction::new(Ctx::new(&m, Some(&direct)).with_grade(Some(2)));
        let fu = AdjunctionComonad::new(&adj);
        let actx = Ctx::new(&m, Some(&fu)).with_grade(Some(2));
        let rec = compare_comonads("adj.round-trip", &actx, &Ctx::new(&m, Some(&direct)).with_grade(Some(2)), 1);
        assert_eq!(rec.status, Status::Pass, "{:?}", rec.note);
    }
}

mod iff {
    use lexc_core::em::{check_iff_characterization, compare_comonads, Extracted, Stripped, Verdict};
    use lexc_core::fincat::Ctx;
    use lexc_core::linexp::IdentityComonad;
    use lexc_core::models::SliceComonad;
    use lexc_core::report::{Evidence, Status};

    use super::slice;

    #[test]
    fn stripped_slice_comonad_recovers_d_and_e() {
        let m = slice("L3");
        let direct = SliceComonad::new(&m);
        let stripped = Stripped { inner: &direct };
        let out = check_iff_characterization(&Ctx::new(&m, Some(&stripped)), 2);
        assert_eq!(out.verdict, Verdict::IsLinearExponential, "{:?}", out.report);
        assert_eq!(out.report.get("thm5.direction-a").unwrap().status, Status::Skipped);
        let extracted = Extracted { inner: Ctx::new(&m, Some(&stripped)) };
        let rec = compare_comonads("thm5.recovered", &Ctx::new(&m, Some(&extracted)), &Ctx::new(&m, Some(&direct)), 3);
        assert_eq!(rec.status, Status::Pass, "{:?}", rec.note);
    }

    #[test]
    fn direction_a_on_the_slice_comonad() {
        let m = slice("L3");
        let direct = SliceComonad::new(&m);
        let out = check_iff_characterization(&Ctx::new(&m, Some(&direct)), 2);
        assert_eq!(out.report.get("thm5.direction-a").unwrap().status, Status::Pass);
        assert_eq!(out.verdict, Verdict::IsLinearExponential);
    }

    #[test]
    fn identity_on_l3_is_not_linear_exponential() {
        let m = slice("L3");
        let id = IdentityComonad::default();
        let ctx = Ctx::new(&m, Some(&id));
        let out = check_iff_characterization(&ctx, 2);
        assert_eq!(out.verdict, Verdict::NotLinearExponential);
        let rec = out.report.get("thm5.iff").unwrap();
        assert_eq!(rec.status, Status::Fail);
        let cx = rec.counterexample.as_ref().unwrap();
        assert!(matches!(cx.evidence, Evidence::NoMorphism { .. }), "{:?} {:?}", rec.note, cx.evidence);
        assert!(cx.replay(&ctx).unwrap());
        assert!(rec.note.as_deref().unwrap().starts_with("not linear exponential: no projection"), "{:?}", rec.note);
    }

    #[test]
    fn identity_on_a_cartesian_model_is_linear_exponential() {
        let m = slice("T1");
        let id = IdentityComonad::default();
        let out = check_iff_characterization(&Ctx::new(&m, Some(&id)), 2);
        assert_eq!(out.verdict, Verdict::IsLinearExponential, "{:?}", out.report);
    }
}

mod props {
    use super::*;
    use lexc_core::em::{check_prop2, check_prop3};
    use lexc_core::fincat::Obj;

    #[test]
    fn products_under_bang_on_l3() {
        let m = slice("L3");
        let c = SliceComonad::new(&m);
        let ctx = Ctx::new(&m, Some(&c));
        assert_all_pass(&check_prop2(&ctx, 2));
    }

    #[test]
    fn cokleisli_category_on_l3() {
        let m = slice("L3");
        let c = SliceComonad::new(&m);
        let ctx = Ctx::new(&m, Some(&c));
        assert_all_pass(&check_prop3(&ctx, &m, 2));
    }

    #[test]
    fn currying_count_with_an_empty_factor() {
        // !(0 x Z) is empty, so exactly one map out; !0 -o Y is the terminal set.
        let m = slice("L3");
        let c = SliceComonad::new(&m);
        let ctx = Ctx::new(&m, Some(&c));
        let x = m.object("X", &[]).unwrap();
        let y = m.object("Y", &[("p", "e"), ("q", "e")]).unwrap();
        let hom = Obj::base(m.internal_hom(&x, &y, true).unwrap());
        let z = Obj::base(m.object("Z", &[("r", "e"), ("s", "e")]).unwrap());
        let homs = lexc_core::fincat::homs::enumerate_homs(&ctx, &Obj::bang(z), &hom).unwrap();
        assert_eq!(homs.len(), 1);
    }
}

#[test]
fn broken_m_breaks_products_under_bang() {
    let m = slice("L3");
    let inner: Arc<dyn ExpComonad> = Arc::new(SliceComonad::new(&m));
    let mc = MutantComonad { inner, mutation: Mutation::BrokenM };
    let ctx = Ctx::new(&m, Some(&mc));
    let r = lexc_core::em::check_prop2(&ctx, 2);
    let rec = r.get("prop2").unwrap();
    assert_eq!(rec.status, Status::Fail);
    assert!(rec.counterexample.as_ref().unwrap().replay(&ctx).unwrap());
}
