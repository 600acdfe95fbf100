use proptest::prelude::*;
use proptest::test_runner::Config;

use lexc_core::diagrams::Mor;
use lexc_core::em::{em_homs, enumerate_coalgebras, is_coalgebra_morphism};
use lexc_core::fincat::homs::{brute_force_homs, enumerate_homs};
use lexc_core::fincat::{compose, Ctx, Obj};
use lexc_core::linexp::Suite;
use lexc_core::models::{preset, SliceComonad, SliceModel};

fn l3() -> SliceModel {
    SliceModel::new(preset("L3").unwrap())
}

/// Brackets `leaves` by repeatedly splitting on `seed`, sprinkling units
/// on roughly two draws in five.
fn bracket(leaves: &[Obj], seed: &mut u64) -> Obj {
    let next = |s: &mut u64| {
        *s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        *s >> 33
    };
    let w = if leaves.len() == 1 {
        leaves[0].clone()
    } else {
        let k = 1 + (next(seed) as usize) % (leaves.len() - 1);
        Obj::tensor(bracket(&leaves[..k], seed), bracket(&leaves[k..], seed))
    };
    match next(seed) % 5 {
        0 => Obj::tensor(Obj::Unit, w),
        1 => Obj::tensor(w, Obj::Unit),
        _ => w,
    }
}

fn words(objs: &[Obj], picks: &[usize], seeds: [u64; 3]) -> [Obj; 3] {
    let leaves: Vec<Obj> = picks.iter().map(|i| objs[i % objs.len()].clone()).collect();
    seeds.map(|mut s| bracket(&leaves, &mut s))
}

#[test]
fn structural_isomorphisms_compose_coherently() {
    let m = l3();
    let ctx = Ctx::new(&m, None);
    let objs = Suite::new(&ctx, 1).objs;
    proptest!(Config::with_cases(64), |(picks in prop::collection::vec(0usize..8, 1..5), seeds in any::<[u64; 3]>())| {
        let [w1, w2, w3] = words(&objs, &picks, seeds);
        let direct = ctx.canonical_iso(&w1, &w3).unwrap();
        let via = compose(&ctx.canonical_iso(&w1, &w2).unwrap(), &ctx.canonical_iso(&w2, &w3).unwrap()).unwrap();
        prop_assert_eq!(&direct, &via);
        let src = ctx.carrier(&w1).unwrap();
        prop_assert!(direct.is_function_on(&src));
        let back = compose(&direct, &ctx.canonical_iso(&w3, &w1).unwrap()).unwrap();
        prop_assert!(back.pairs().all(|(a, b)| a == b));
    });
}

#[test]
fn inserted_isomorphisms_do_not_change_a_path() {
    let m = l3();
    let ctx = Ctx::new(&m, None);
    let objs = Suite::new(&ctx, 1).objs;
    proptest!(Config::with_cases(64), |(picks in prop::collection::vec(0usize..8, 1..5), seeds in any::<[u64; 3]>())| {
        let [w1, w2, w3] = words(&objs, &picks, seeds);
        let padded = ctx.eval_path(&Mor::Seq(vec![Mor::Id(w1.clone()), Mor::Id(w2), Mor::Id(w3.clone())])).unwrap();
        prop_assert_eq!(padded, ctx.canonical_iso(&w1, &w3).unwrap());
    });
}

#[test]
fn tensor_satisfies_the_exchange_law() {
    let m = l3();
    let ctx = Ctx::new(&m, None);
    let objs = Suite::new(&ctx, 1).objs;
    let hom = |a: &Obj, b: &Obj, i: usize| {
        let hs = enumerate_homs(&ctx, a, b).unwrap();
        (!hs.is_empty()).then(|| Mor::named("h", hs[i % hs.len()].clone()))
    };
    proptest!(Config::with_cases(64), |(o in any::<[usize; 6]>(), h in any::<[usize; 4]>())| {
        let [a, b, c, x, y, z] = o.map(|i| objs[i % objs.len()].clone());
        let (Some(f1), Some(f2), Some(g1), Some(g2)) = (hom(&a, &b, h[0]), hom(&b, &c, h[1]), hom(&x, &y, h[2]), hom(&y, &z, h[3])) else {
            return Ok(());
        };
        let lhs = Mor::tensor(f1.clone(), g1.clone()).then(Mor::tensor(f2.clone(), g2.clone()));
        let rhs = Mor::tensor(Mor::seq([f1, f2]), Mor::seq([g1, g2]));
        prop_assert_eq!(ctx.eval_path(&lhs).unwrap(), ctx.eval_path(&rhs).unwrap());
    });
}

#[test]
fn hom_enumeration_matches_brute_force() {
    let m = l3();
    let ctx = Ctx::new(&m, None);
    let objs = Suite::new(&ctx, 2).objs;
    proptest!(Config::with_cases(64), |(i in any::<usize>(), j in any::<usize>())| {
        let (a, b) = (&objs[i % objs.len()], &objs[j % objs.len()]);
        let mut fast = enumerate_homs(&ctx, a, b).unwrap();
        let mut slow = brute_force_homs(&ctx, a, b).unwrap();
        fast.sort();
        slow.sort();
        prop_assert_eq!(fast, slow);
    });
}

#[test]
fn coalgebra_morphisms_are_closed_under_composition() {
    let m = l3();
    let c = SliceComonad::new(&m);
    let ctx = Ctx::new(&m, Some(&c));
    let coalgs: Vec<_> = Suite::new(&ctx, 1).objs.iter().flat_map(|o| enumerate_coalgebras(&ctx, o).unwrap()).collect();
    assert!(!coalgs.is_empty());
    proptest!(Config::with_cases(48), |(p in any::<[usize; 3]>(), h in any::<[usize; 2]>())| {
        let [p, q, r] = p.map(|i| &coalgs[i % coalgs.len()]);
        let (pq, qr) = (em_homs(&ctx, p, q).unwrap(), em_homs(&ctx, q, r).unwrap());
        if pq.is_empty() || qr.is_empty() {
            return Ok(());
        }
        let f = compose(&pq[h[0] % pq.len()], &qr[h[1] % qr.len()]).unwrap();
        prop_assert!(is_coalgebra_morphism(&ctx, p, r, &f).unwrap());
    });
}
