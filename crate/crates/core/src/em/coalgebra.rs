//! Eilenberg-Moore coalgebras of a comonad, their morphisms and the
//! monoidal structure they inherit.

use crate::diagrams::{compare, Comparison, Mor};
use crate::error::{Error, Result};
use crate::fincat::homs::enumerate_homs;
use crate::fincat::{Ctx, FinMorphism, Obj};

/// `alpha : A -> !A` with `eps . alpha = id` and `!alpha . alpha = delta . alpha`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coalgebra {
    pub carrier: Obj,
    pub alpha: FinMorphism,
}

impl Coalgebra {
    /// The structure map as a named term.
    pub fn structure(&self, name: &str) -> Mor {
        Mor::named(name, self.alpha.clone())
    }
}

fn agree(ctx: &Ctx, l: &Mor, r: &Mor) -> Result<Comparison> {
    compare(ctx, ctx.wider(), l, r)
}

/// The two coalgebra laws, or the first comparison that fails.
pub fn coalgebra_laws(ctx: &Ctx, c: &Coalgebra) -> Result<Option<Comparison>> {
    let a = &c.carrier;
    let alpha = c.structure("alpha");
    for (l, r) in [
        (alpha.clone().then(Mor::Eps(a.clone())), Mor::Id(a.clone())),
        (alpha.clone().then(Mor::bang(alpha.clone())), alpha.clone().then(Mor::Delta(a.clone()))),
    ] {
        let cmp = agree(ctx, &l, &r)?;
        if !cmp.holds() {
            return Ok(Some(cmp));
        }
    }
    Ok(None)
}

/// All coalgebra structures on `a`.
pub fn enumerate_coalgebras(ctx: &Ctx, a: &Obj) -> Result<Vec<Coalgebra>> {
    let mut out = Vec::new();
    for alpha in enumerate_homs(ctx, a, &Obj::bang(a.clone()))? {
        ctx.check_time()?;
        let c = Coalgebra { carrier: a.clone(), alpha };
        if coalgebra_laws(ctx, &c)?.is_none() {
            out.push(c);
        }
    }
    Ok(out)
}

/// `beta . f = !f . alpha`, as a comparison.
pub fn morphism_square(ctx: &Ctx, p: &Coalgebra, q: &Coalgebra, f: &Mor) -> Result<Comparison> {
    agree(ctx, &f.clone().then(q.structure("beta")), &p.structure("alpha").then(Mor::bang(f.clone())))
}

pub fn is_coalgebra_morphism(ctx: &Ctx, p: &Coalgebra, q: &Coalgebra, f: &FinMorphism) -> Result<bool> {
    Ok(morphism_square(ctx, p, q, &Mor::named("f", f.clone()))?.holds())
}

/// Coalgebra morphisms `p -> q`, by filtering the hom-set of the carriers.
pub fn em_homs(ctx: &Ctx, p: &Coalgebra, q: &Coalgebra) -> Result<Vec<FinMorphism>> {
    let mut out = Vec::new();
    for f in enumerate_homs(ctx, &p.carrier, &q.carrier)? {
        if is_coalgebra_morphism(ctx, p, q, &f)? {
            out.push(f);
        }
    }
    Ok(out)
}

fn checked(ctx: &Ctx, c: Coalgebra, what: &str) -> Result<Coalgebra> {
    match coalgebra_laws(ctx, &c)? {
        None => Ok(c),
        Some(cmp) => Err(Error::InvalidCoalgebra(format!(
            "{what} on {}: laws fail at {:?}",
            c.carrier,
            cmp.discrepancy.map(|d| d.witness.to_string())
        ))),
    }
}

/// `(A (x) B, m_{A,B} . (alpha (x) beta))`, re-verified.
pub fn em_product(ctx: &Ctx, p: &Coalgebra, q: &Coalgebra) -> Result<Coalgebra> {
    let path = Mor::tensor(p.structure("alpha"), q.structure("beta")).then(Mor::M(p.carrier.clone(), q.carrier.clone()));
    let alpha = ctx.eval_path(&path)?;
    checked(ctx, Coalgebra { carrier: Obj::tensor(p.carrier.clone(), q.carrier.clone()), alpha }, "tensor of coalgebras")
}

/// `(I, m_I)`.
pub fn em_unit(ctx: &Ctx) -> Result<Coalgebra> {
    checked(ctx, Coalgebra { carrier: Obj::Unit, alpha: ctx.eval_path(&Mor::MUnit)? }, "unit coalgebra")
}

/// `(!X, delta_X)`.
pub fn cofree(ctx: &Ctx, x: &Obj) -> Result<Coalgebra> {
    checked(ctx, Coalgebra { carrier: Obj::bang(x.clone()), alpha: ctx.eval_path(&Mor::Delta(x.clone()))? }, "cofree coalgebra")
}

/// `d_P = (eps (x) eps) . d_A . alpha` and `e_P = e_A . alpha`.
pub fn induced_comonoid_terms(p: &Coalgebra) -> (Mor, Mor) {
    let a = &p.carrier;
    let d = Mor::seq([p.structure("alpha"), Mor::D(a.clone()), Mor::tensor(Mor::Eps(a.clone()), Mor::Eps(a.clone()))]);
    let e = p.structure("alpha").then(Mor::E(a.clone()));
    (d, e)
}

pub fn induced_comonoid(ctx: &Ctx, p: &Coalgebra) -> Result<(FinMorphism, FinMorphism)> {
    let (d, e) = induced_comonoid_terms(p);
    Ok((ctx.eval_path(&d)?, ctx.eval_path(&e)?))
}

/// Comonoid laws of the induced pair and that both maps are coalgebra
/// morphisms; returns the name of the first law that fails.
pub fn induced_comonoid_laws(ctx: &Ctx, p: &Coalgebra) -> Result<Option<(&'static str, Comparison)>> {
    let a = &p.carrier;
    let (d, e) = induced_comonoid(ctx, p)?;
    let (dm, em) = (Mor::named("d_P", d), Mor::named("e_P", e));
    let id = Mor::Id(a.clone());
    let pp = em_product(ctx, p, p)?;
    let unit = em_unit(ctx)?;
    let laws: Vec<(&'static str, Mor, Mor)> = vec![
        ("left counit", Mor::seq([dm.clone(), Mor::tensor(em.clone(), id.clone()), Mor::LUnit(a.clone())]), id.clone()),
        ("right counit", Mor::seq([dm.clone(), Mor::tensor(id.clone(), em.clone()), Mor::RUnit(a.clone())]), id.clone()),
        (
            "coassociativity",
            dm.clone().then(Mor::tensor(dm.clone(), id.clone())),
            dm.clone().then(Mor::tensor(id.clone(), dm.clone())),
        ),
    ];
    for (name, l, r) in laws {
        let cmp = agree(ctx, &l, &r)?;
        if !cmp.holds() {
            return Ok(Some((name, cmp)));
        }
    }
    let cmp = morphism_square(ctx, p, &pp, &dm)?;
    if !cmp.holds() {
        return Ok(Some(("d_P is a coalgebra morphism", cmp)));
    }
    let cmp = morphism_square(ctx, p, &unit, &em)?;
    if !cmp.holds() {
        return Ok(Some(("e_P is a coalgebra morphism", cmp)));
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::elem::Elem;
    use crate::models::{preset, SliceComonad, SliceModel};

    fn l3() -> SliceModel {
        SliceModel::new(preset("L3").unwrap())
    }

    #[test]
    fn unit_valued_objects_carry_one_coalgebra() {
        let m = l3();
        let c = SliceComonad::new(&m);
        let ctx = Ctx::new(&m, Some(&c));
        let a = Obj::base(m.object("A", &[("p", "e"), ("q", "e")]).unwrap());
        let cs = enumerate_coalgebras(&ctx, &a).unwrap();
        assert_eq!(cs.len(), 1);
        for x in ["A.p", "A.q"] {
            assert_eq!(cs[0].alpha.image(&Elem::sym(x)), &[Elem::sym(x)]);
        }
    }

    #[test]
    fn a_non_unit_element_rules_out_coalgebras() {
        let m = l3();
        let c = SliceComonad::new(&m);
        let ctx = Ctx::new(&m, Some(&c));
        let a = Obj::base(m.object("A", &[("p", "e"), ("q", "a")]).unwrap());
        assert!(enumerate_coalgebras(&ctx, &a).unwrap().is_empty());
    }

    #[test]
    fn empty_object_has_the_empty_coalgebra() {
        let m = l3();
        let c = SliceComonad::new(&m);
        let ctx = Ctx::new(&m, Some(&c));
        let a = Obj::base(m.object("A", &[]).unwrap());
        let cs = enumerate_coalgebras(&ctx, &a).unwrap();
        assert_eq!(cs.len(), 1);
        assert_eq!(cs[0].alpha.pairs().count(), 0);
    }

    #[test]
    fn induced_diagonal_is_literal() {
        let m = l3();
        let c = SliceComonad::new(&m);
        let ctx = Ctx::new(&m, Some(&c));
        let a = Obj::base(m.object("A", &[("p", "e"), ("q", "e")]).unwrap());
        let p = enumerate_coalgebras(&ctx, &a).unwrap().remove(0);
        let (d, e) = induced_comonoid(&ctx, &p).unwrap();
        for x in ["A.p", "A.q"] {
            let x = Elem::sym(x);
            assert_eq!(d.image(&x), &[Elem::pair(x.clone(), x.clone())]);
            assert_eq!(e.image(&x), &[Elem::Star]);
        }
        assert!(induced_comonoid_laws(&ctx, &p).unwrap().is_none());
    }

    #[test]
    fn product_of_sizes_two_and_three() {
        let m = l3();
        let c = SliceComonad::new(&m);
        let ctx = Ctx::new(&m, Some(&c));
        let a = Obj::base(m.object("A", &[("p", "e"), ("q", "e")]).unwrap());
        let b = Obj::base(m.object("B", &[("r", "e"), ("s", "e"), ("t", "e")]).unwrap());
        let p = enumerate_coalgebras(&ctx, &a).unwrap().remove(0);
        let q = enumerate_coalgebras(&ctx, &b).unwrap().remove(0);
        let pq = em_product(&ctx, &p, &q).unwrap();
        assert_eq!(pq.alpha.pairs().count(), 6);
        for (x, y) in pq.alpha.pairs() {
            assert_eq!(x, y);
        }
    }

    #[test]
    fn cofree_is_enumerated() {
        let m = l3();
        let c = SliceComonad::new(&m);
        let ctx = Ctx::new(&m, Some(&c));
        let x = Obj::base(m.object("X", &[("p", "e"), ("q", "a")]).unwrap());
        let bx = Obj::bang(x.clone());
        let cf = cofree(&ctx, &x).unwrap();
        assert!(enumerate_coalgebras(&ctx, &bx).unwrap().contains(&cf));
    }

    #[test]
    fn unit_coalgebra_squares_to_itself() {
        let m = l3();
        let c = SliceComonad::new(&m);
        let ctx = Ctx::new(&m, Some(&c));
        let u = em_unit(&ctx).unwrap();
        let uu = em_product(&ctx, &u, &u).unwrap();
        assert_eq!(uu.alpha.pairs().count(), 1);
        let (d, e) = induced_comonoid(&ctx, &u).unwrap();
        assert_eq!(d.image(&Elem::Star), &[Elem::pair(Elem::Star, Elem::Star)]);
        assert_eq!(e.image(&Elem::Star), &[Elem::Star]);
    }
}
