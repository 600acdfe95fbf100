//! Finite products under `!` and the co-Kleisli category.

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::diagrams::Mor;
use crate::elem::Elem;
use crate::error::{Error, Result};
use crate::fincat::homs::enumerate_homs;
use crate::fincat::laws::sample;
use crate::fincat::{compose, Ctx, FinMorphism, FinObject, Obj, Payload, Product};
use crate::models::slice::{curry, uncurry};
use crate::models::SliceModel;
use crate::report::{commutes, run_check, AxiomReport, Check, Counterexample};

pub const PROP3_IDS: [&str; 3] = ["prop3.cartesian", "prop3.currying", "prop3.lolli-illol"];

fn product(ctx: &Ctx, a: &Obj, b: &Obj) -> Result<Product> {
    ctx.model.product(ctx, a, b).ok_or_else(|| Error::Unsupported(format!("{} declares no products", ctx.model.name())))?
}

fn terminal(ctx: &Ctx) -> Result<Obj> {
    ctx.model.terminal(ctx).ok_or_else(|| Error::Unsupported(format!("{} declares no terminal object", ctx.model.name())))?
}

/// `<f, g> : src -> p` for functional `f`, `g`.
pub fn pairing(ctx: &Ctx, p: &Product, src: &Obj, f: &Mor, g: &Mor) -> Result<FinMorphism> {
    let target = ctx.carrier(&p.obj)?;
    let mut images = Vec::new();
    for w in ctx.carrier(src)?.iter() {
        let (l, r) = (ctx.image(f, w)?, ctx.image(g, w)?);
        let z: Vec<Elem> = target.iter().filter(|z| p.pi1.image(z) == l.as_slice() && p.pi2.image(z) == r.as_slice()).cloned().collect();
        images.push((w.clone(), z));
    }
    Ok(FinMorphism::from_images(src.clone(), p.obj.clone(), ctx.model.mor_kind(), images))
}

/// `f x g : p -> q` between chosen products.
fn product_map(ctx: &Ctx, p: &Product, q: &Product, f: &Mor, g: &Mor) -> Result<FinMorphism> {
    let (pi1, pi2) = (Mor::named("pi1", p.pi1.clone()), Mor::named("pi2", p.pi2.clone()));
    pairing(ctx, q, &p.obj, &pi1.then(f.clone()), &pi2.then(g.clone()))
}

/// `phi : !X (x) !Y -> !(X x Y)`, the transpose of
/// `<r . (eps (x) e), l . (e (x) eps)>`, and its inverse
/// `psi = (!pi1 (x) !pi2) . d`.
pub fn prop2_maps(ctx: &Ctx, x: &Obj, y: &Obj) -> Result<(Product, FinMorphism, FinMorphism)> {
    let p = product(ctx, x, y)?;
    let (bx, by) = (Obj::bang(x.clone()), Obj::bang(y.clone()));
    let src = Obj::tensor(bx.clone(), by.clone());
    let left = Mor::tensor(Mor::Eps(x.clone()), Mor::E(y.clone())).then(Mor::RUnit(x.clone()));
    let right = Mor::tensor(Mor::E(x.clone()), Mor::Eps(y.clone())).then(Mor::LUnit(y.clone()));
    let pair = pairing(ctx, &p, &src, &left, &right)?;
    let phi = ctx.eval_path(&Mor::seq([
        Mor::tensor(Mor::Delta(x.clone()), Mor::Delta(y.clone())),
        Mor::M(bx, by),
        Mor::bang(Mor::named("pair", pair)),
    ]))?;
    let psi = ctx.eval_path(&Mor::D(p.obj.clone()).then(Mor::tensor(
        Mor::bang(Mor::named("pi1", p.pi1.clone())),
        Mor::bang(Mor::named("pi2", p.pi2.clone())),
    )))?;
    Ok((p, phi, psi))
}

fn unique_hom(ctx: &Ctx, a: &Obj, b: &Obj) -> Result<FinMorphism> {
    let hs = enumerate_homs(ctx, a, b)?;
    match <[FinMorphism; 1]>::try_from(hs) {
        Ok([h]) => Ok(h),
        Err(hs) => Err(Error::Unsupported(format!("{} morphisms {a} -> {b}, expected one", hs.len()))),
    }
}

fn prop2_body(ctx: &Ctx, bound: usize, c: &mut Check) -> Result<()> {
    let objs = sample(ctx, bound);
    let one = terminal(ctx)?;
    let to_one = Mor::named("to_one", unique_hom(ctx, &Obj::Unit, &one)?);
    let unit_iso = Mor::MUnit.then(Mor::bang(to_one));
    commutes(c, ctx, &unit_iso.clone().then(Mor::E(one.clone())), &Mor::Id(Obj::Unit))?;
    commutes(c, ctx, &Mor::E(one.clone()).then(unit_iso), &Mor::Id(Obj::bang(one)))?;
    let mut phis = Vec::new();
    for x in &objs {
        for y in &objs {
            let (p, phi, psi) = prop2_maps(ctx, x, y)?;
            let (phi_m, psi_m) = (Mor::named("phi", phi.clone()), Mor::named("psi", psi.clone()));
            commutes(c, ctx, &phi_m.clone().then(psi_m.clone()), &Mor::Id(phi.src.clone()))?;
            commutes(c, ctx, &psi_m.then(phi_m), &Mor::Id(Obj::bang(p.obj.clone())))?;
            phis.push((x.clone(), y.clone(), p, phi));
        }
    }
    let find = |x: &Obj, y: &Obj| phis.iter().find(|(a, b, _, _)| a == x && b == y).expect("sampled pair");
    for (x, y, p, phi) in &phis {
        for x2 in &objs {
            for f in enumerate_homs(ctx, x, x2)? {
                let f = Mor::named("f", f);
                let (_, _, p2, phi2) = find(x2, y);
                let fy = product_map(ctx, p, p2, &f, &Mor::Id(y.clone()))?;
                let l = Mor::tensor(Mor::bang(f.clone()), Mor::Id(Obj::bang(y.clone()))).then(Mor::named("phi2", phi2.clone()));
                let r = Mor::named("phi", phi.clone()).then(Mor::bang(Mor::named("fxid", fy)));
                commutes(c, ctx, &l, &r)?;
            }
        }
        for y2 in &objs {
            for g in enumerate_homs(ctx, y, y2)? {
                let g = Mor::named("g", g);
                let (_, _, p2, phi2) = find(x, y2);
                let xg = product_map(ctx, p, p2, &Mor::Id(x.clone()), &g)?;
                let l = Mor::tensor(Mor::Id(Obj::bang(x.clone())), Mor::bang(g.clone())).then(Mor::named("phi2", phi2.clone()));
                let r = Mor::named("phi", phi.clone()).then(Mor::bang(Mor::named("idxg", xg)));
                commutes(c, ctx, &l, &r)?;
            }
        }
    }
    let small = sample(ctx, 1);
    for x in &small {
        for y in &small {
            for z in &small {
                let (pxy, phi_xy, _) = prop2_maps(ctx, x, y)?;
                let (pyz, phi_yz, _) = prop2_maps(ctx, y, z)?;
                let (pxy_z, phi_xy_z, _) = prop2_maps(ctx, &pxy.obj, z)?;
                let (px_yz, phi_x_yz, _) = prop2_maps(ctx, x, &pyz.obj)?;
                let assoc = pairing(
                    ctx,
                    &px_yz,
                    &pxy_z.obj,
                    &Mor::named("p1", pxy_z.pi1.clone()).then(Mor::named("q1", pxy.pi1.clone())),
                    &Mor::named("yz", pairing(
                        ctx,
                        &pyz,
                        &pxy_z.obj,
                        &Mor::named("p1", pxy_z.pi1.clone()).then(Mor::named("q2", pxy.pi2.clone())),
                        &Mor::named("p2", pxy_z.pi2.clone()),
                    )?),
                )?;
                let (bx, by, bz) = (Obj::bang(x.clone()), Obj::bang(y.clone()), Obj::bang(z.clone()));
                let l = Mor::tensor(Mor::named("phi_xy", phi_xy), Mor::Id(bz.clone()))
                    .then(Mor::named("phi_xy_z", phi_xy_z))
                    .then(Mor::bang(Mor::named("assoc", assoc)));
                let r = Mor::seq([
                    Mor::Assoc(bx.clone(), by, bz),
                    Mor::tensor(Mor::Id(bx), Mor::named("phi_yz", phi_yz)),
                    Mor::named("phi_x_yz", phi_x_yz),
                ]);
                commutes(c, ctx, &l, &r)?;
            }
        }
    }
    Ok(())
}

/// `!X (x) !Y ~ !(X x Y)` and `I ~ !1`: both composites are identities,
/// naturality in each argument, and the associativity coherence on triples
/// of carriers at most one.
pub fn check_prop2(ctx: &Ctx, bound: usize) -> AxiomReport {
    let mut r = AxiomReport::default();
    r.push(run_check("prop2", |c| prop2_body(ctx, bound, c)));
    r
}

/// `!a` as a base object with the same elements and valuation.
fn materialise(ctx: &Ctx, a: &Obj, id: &str) -> Result<FinObject> {
    let ba = Obj::bang(a.clone());
    let carrier = ctx.carrier(&ba)?.to_vec();
    let values = carrier.iter().map(|x| ctx.value(&ba, x)).collect::<Result<Vec<_>>>()?;
    let o = FinObject { id: id.to_string(), carrier, payload: Payload::Valued { values } };
    o.validate()?;
    Ok(o)
}

fn object_id(o: &Obj) -> String {
    match o {
        Obj::Base(b) => b.id.clone(),
        other => other.to_string().chars().filter(|c| c.is_ascii_alphanumeric()).collect(),
    }
}

/// Co-Kleisli composite `g . !f . delta`.
fn kleisli(z: &Obj, f: &Mor, g: &Mor) -> Mor {
    Mor::seq([Mor::Delta(z.clone()), Mor::bang(f.clone()), g.clone()])
}

fn check_cokleisli_cartesian(ctx: &Ctx, bound: usize, c: &mut Check) -> Result<()> {
    let objs = sample(ctx, bound);
    let one = terminal(ctx)?;
    for z in &objs {
        let bz = Obj::bang(z.clone());
        c.tick();
        let to_one = enumerate_homs(ctx, &bz, &one)?;
        if to_one.len() != 1 {
            c.note.get_or_insert_with(|| format!("{} co-Kleisli maps {z} -> 1", to_one.len()));
            if to_one.is_empty() {
                c.fail(Counterexample::no_morphism(&bz, &one));
            } else {
                commutes(c, ctx, &Mor::named("h1", to_one[0].clone()), &Mor::named("h2", to_one[1].clone()))?;
            }
        }
        for x in &objs {
            for y in &objs {
                let p = product(ctx, x, y)?;
                let pi1 = Mor::Eps(p.obj.clone()).then(Mor::named("pi1", p.pi1.clone()));
                let pi2 = Mor::Eps(p.obj.clone()).then(Mor::named("pi2", p.pi2.clone()));
                let (fs, gs) = (enumerate_homs(ctx, &bz, x)?, enumerate_homs(ctx, &bz, y)?);
                for f in &fs {
                    for g in &gs {
                        let (f, g) = (Mor::named("f", f.clone()), Mor::named("g", g.clone()));
                        let pair = Mor::named("pair", pairing(ctx, &p, &bz, &f, &g)?);
                        commutes(c, ctx, &kleisli(z, &pair, &pi1), &f)?;
                        commutes(c, ctx, &kleisli(z, &pair, &pi2), &g)?;
                    }
                }
                for h in enumerate_homs(ctx, &bz, &p.obj)? {
                    let h = Mor::named("h", h);
                    let rebuilt = pairing(ctx, &p, &bz, &kleisli(z, &h, &pi1), &kleisli(z, &h, &pi2))?;
                    commutes(c, ctx, &Mor::named("rebuilt", rebuilt), &h)?;
                }
            }
        }
    }
    Ok(())
}

/// `hom_!(X x Z, Y) ~ hom_!(Z, !X -o Y)` through `phi` and currying.
fn check_currying(ctx: &Ctx, m: &SliceModel, bound: usize, c: &mut Check) -> Result<()> {
    let objs = sample(ctx, bound);
    for x in &objs {
        let bx = Arc::new(materialise(ctx, x, &format!("Bang_{}", object_id(x)))?);
        for z in &objs {
            let bz = Arc::new(materialise(ctx, z, &format!("Bang_{}", object_id(z)))?);
            let (p, phi, psi) = prop2_maps(ctx, x, z)?;
            let flat_src = Obj::tensor(Obj::Base(bx.clone()), Obj::Base(bz.clone()));
            let bang_src = phi.src.clone();
            for y in &objs {
                let Obj::Base(yb) = y else { continue };
                let hom = Obj::base(m.internal_hom(&bx, yb, true)?);
                let left = enumerate_homs(ctx, &Obj::bang(p.obj.clone()), y)?;
                let right: BTreeSet<FinMorphism> = enumerate_homs(ctx, &Obj::bang(z.clone()), &hom)?.into_iter().collect();
                c.tick();
                if left.len() != right.len() {
                    c.note.get_or_insert_with(|| format!("{} maps !({x} x {z}) -> {y} but {} maps !{z} -> !{x} -o {y}", left.len(), right.len()));
                    c.fail(Counterexample::error(&Error::Unsupported("currying is not a bijection".into())));
                    continue;
                }
                let mut seen = BTreeSet::new();
                for h in &left {
                    c.tick();
                    let k = compose(&phi, h)?.with_endpoints(flat_src.clone(), y.clone());
                    let curried = curry(&k, &hom, true, ctx, m)?.with_endpoints(Obj::bang(z.clone()), hom.clone());
                    if !right.contains(&curried) || !seen.insert(curried.clone()) {
                        c.note.get_or_insert_with(|| format!("curried map on !{z} -> !{x} -o {y} is not a fresh hom"));
                        c.fail(Counterexample::error(&Error::Unsupported("currying is not a bijection".into())));
                        continue;
                    }
                    let back = uncurry(&curried.clone().with_endpoints(Obj::Base(bz.clone()), hom.clone()), &Obj::Base(bx.clone()), &Obj::Base(bz.clone()), y, true, ctx)?
                        .with_endpoints(bang_src.clone(), y.clone());
                    commutes(c, ctx, &Mor::named("psi", psi.clone()).then(Mor::named("uncurried", back)), &Mor::named("h", h.clone()))?;
                }
            }
        }
    }
    Ok(())
}

/// Searches for mutually inverse co-Kleisli maps between `!X -o Y` and
/// `Y o- !X`.
fn check_lolli_illol(ctx: &Ctx, m: &SliceModel, bound: usize, c: &mut Check) -> Result<()> {
    let objs = sample(ctx, bound);
    for x in &objs {
        let bx = materialise(ctx, x, &format!("Bang_{}", object_id(x)))?;
        for y in &objs {
            let Obj::Base(yb) = y else { continue };
            let lolli = Obj::base(m.internal_hom(&bx, yb, true)?);
            let illol = Obj::base(m.internal_hom(&bx, yb, false)?);
            c.tick();
            let (fs, gs) = (enumerate_homs(ctx, &Obj::bang(lolli.clone()), &illol)?, enumerate_homs(ctx, &Obj::bang(illol.clone()), &lolli)?);
            let inverse = |f: &FinMorphism, g: &FinMorphism| -> Result<bool> {
                let (f, g) = (Mor::named("f", f.clone()), Mor::named("g", g.clone()));
                let there = ctx.eval_path(&kleisli(&lolli, &f, &g))? == ctx.eval_path(&Mor::Eps(lolli.clone()))?;
                let back = ctx.eval_path(&kleisli(&illol, &g, &f))? == ctx.eval_path(&Mor::Eps(illol.clone()))?;
                Ok(there && back)
            };
            let mut found = false;
            'search: for f in &fs {
                for g in &gs {
                    if inverse(f, g)? {
                        found = true;
                        break 'search;
                    }
                }
            }
            if !found {
                c.note.get_or_insert_with(|| format!("no co-Kleisli iso between {lolli} and {illol}"));
                c.fail(Counterexample::error(&Error::Unsupported("no co-Kleisli iso".into())));
            }
        }
    }
    Ok(())
}

/// Co-Kleisli products and terminal object, the currying bijection, and the
/// co-Kleisli iso between the two internal homs out of `!X`.
pub fn check_prop3(ctx: &Ctx, m: &SliceModel, bound: usize) -> AxiomReport {
    let mut r = AxiomReport::default();
    r.push(run_check(PROP3_IDS[0], |c| check_cokleisli_cartesian(ctx, bound, c)));
    r.push(run_check(PROP3_IDS[1], |c| check_currying(ctx, m, bound, c)));
    r.push(run_check(PROP3_IDS[2], |c| check_lolli_illol(ctx, m, bound, c)));
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::{preset, SliceComonad};

    #[test]
    fn empty_factor_gives_empty_sides() {
        let m = SliceModel::new(preset("L3").unwrap());
        let c = SliceComonad::new(&m);
        let ctx = Ctx::new(&m, Some(&c));
        let x = Obj::base(m.object("X", &[]).unwrap());
        let y = Obj::base(m.object("Y", &[("p", "e")]).unwrap());
        let (_, phi, psi) = prop2_maps(&ctx, &x, &y).unwrap();
        assert!(phi.is_empty() && psi.is_empty());
        assert!(ctx.carrier(&phi.src).unwrap().is_empty());
    }

    #[test]
    fn phi_pairs_unit_valued_elements() {
        let m = SliceModel::new(preset("L3").unwrap());
        let c = SliceComonad::new(&m);
        let ctx = Ctx::new(&m, Some(&c));
        let x = Obj::base(m.object("X", &[("p", "e"), ("q", "a")]).unwrap());
        let y = Obj::base(m.object("Y", &[("r", "e")]).unwrap());
        let (_, phi, _) = prop2_maps(&ctx, &x, &y).unwrap();
        let w = Elem::pair(Elem::sym("X.p"), Elem::sym("Y.r"));
        assert_eq!(phi.image(&w), &[w.clone()]);
        assert_eq!(phi.len(), 1);
    }
}
