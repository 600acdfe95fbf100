//! Sets sliced over a finite monoid, and the comonad of unit-valued parts.

use std::sync::Arc;

use crate::diagrams::Mor;
use crate::elem::Elem;
use crate::error::{Error, Result};
use crate::fincat::homs::enumerate_homs;
use crate::fincat::{Braiding, Ctx, FinMorphism, FinObject, Model, MorKind, Obj, Payload, Product};
use crate::linexp::ExpComonad;
use crate::models::algebra::FinMonoid;
use crate::report::{run_check, CheckRecord, Counterexample};

/// Objects are sets with an `M`-valued valuation; morphisms are
/// valuation-preserving functions.
#[derive(Clone, Debug)]
pub struct SliceModel {
    pub monoid: FinMonoid,
}

impl SliceModel {
    pub fn new(monoid: FinMonoid) -> Self {
        SliceModel { monoid }
    }

    /// An object from `(token, monoid element name)` rows.
    pub fn object(&self, id: &str, rows: &[(&str, &str)]) -> Result<FinObject> {
        let rows = rows
            .iter()
            .map(|(t, v)| {
                let i = self.monoid.index(v).ok_or_else(|| Error::InvalidObject(format!("{id}: unknown monoid element {v}")))?;
                Ok((*t, i))
            })
            .collect::<Result<Vec<_>>>()?;
        FinObject::valued(id, &rows)
    }

    fn values(&self, o: &FinObject) -> Result<Vec<u32>> {
        match &o.payload {
            Payload::Valued { values } => Ok(values.clone()),
            _ => Err(Error::InvalidObject(format!("{} carries no valuation", o.id))),
        }
    }

    fn valued_object(&self, id: String, rows: Vec<(Elem, u32)>) -> Result<FinObject> {
        let mut rows = rows;
        rows.sort();
        rows.dedup();
        let (carrier, values) = rows.into_iter().unzip();
        let o = FinObject { id, carrier, payload: Payload::Valued { values } };
        o.validate()?;
        Ok(o)
    }

    /// `A -o B = {(x, f) : |f(a)| = |a| . x}` when `right`, otherwise
    /// `B o- A = {(x, f) : |f(a)| = x . |a|}`; in both cases `|(x, f)| = x`.
    /// Functions are encoded as bags of `(a, f(a))` pairs.
    pub fn internal_hom(&self, a: &FinObject, b: &FinObject, right: bool) -> Result<FinObject> {
        let (va, vb) = (self.values(a)?, self.values(b)?);
        let mut rows = Vec::new();
        for x in 0..self.monoid.len() as u32 {
            let choices: Vec<Vec<usize>> = va
                .iter()
                .map(|&v| {
                    let want = if right { self.monoid.mul(v, x) } else { self.monoid.mul(x, v) };
                    (0..b.len()).filter(|&j| vb[j] == want).collect()
                })
                .collect();
            let mut pick = vec![0usize; a.len()];
            if choices.iter().any(Vec::is_empty) {
                continue;
            }
            loop {
                let graph = a.carrier.iter().zip(&pick).zip(&choices).map(|((s, &k), c)| Elem::pair(s.clone(), b.carrier[c[k]].clone()));
                let f = Elem::bag(graph.collect());
                rows.push((Elem::pair(Elem::sym(&self.monoid.names[x as usize]), f), x));
                let mut i = 0;
                loop {
                    if i == pick.len() {
                        break;
                    }
                    pick[i] += 1;
                    if pick[i] < choices[i].len() {
                        break;
                    }
                    pick[i] = 0;
                    i += 1;
                }
                if i == pick.len() {
                    break;
                }
            }
        }
        let id = if right { format!("{}_lolli_{}", a.id, b.id) } else { format!("{}_illol_{}", b.id, a.id) };
        self.valued_object(id, rows)
    }

    /// Objects `a x b` (pullback over `M`) and `1 = (M, id)`.
    pub fn product_object(&self, a: &FinObject, b: &FinObject) -> Result<FinObject> {
        let (va, vb) = (self.values(a)?, self.values(b)?);
        let mut rows = Vec::new();
        for (i, x) in a.carrier.iter().enumerate() {
            for (j, y) in b.carrier.iter().enumerate() {
                if va[i] == vb[j] {
                    rows.push((Elem::pair(x.clone(), y.clone()), va[i]));
                }
            }
        }
        self.valued_object(format!("{}_x_{}", a.id, b.id), rows)
    }

    pub fn terminal_object(&self) -> Result<FinObject> {
        let rows = (0..self.monoid.len() as u32).map(|m| (Elem::sym(format!("One.{}", self.monoid.names[m as usize])), m)).collect();
        self.valued_object("One".into(), rows)
    }
}

fn base(o: &Obj) -> Result<&Arc<FinObject>> {
    match o {
        Obj::Base(b) => Ok(b),
        other => Err(Error::Unsupported(format!("{other} is not a base object"))),
    }
}

impl Model for SliceModel {
    fn name(&self) -> String {
        format!("slice-monoid/{}", self.monoid.name)
    }

    fn mor_kind(&self) -> MorKind {
        MorKind::Function
    }

    /// One object per multiset of valuations.
    fn sample_objects(&self, max_carrier: usize) -> Vec<Arc<FinObject>> {
        let n = self.monoid.len() as u32;
        let mut out = Vec::new();
        let mut stack: Vec<Vec<u32>> = vec![vec![]];
        while let Some(vals) = stack.pop() {
            let id = std::iter::once("V".to_string())
                .chain(vals.iter().map(|&v| self.monoid.names[v as usize].clone()))
                .collect::<Vec<_>>()
                .join("_");
            let tokens: Vec<String> = (0..vals.len()).map(|i| format!("x{i}")).collect();
            let rows: Vec<(&str, u32)> = tokens.iter().map(String::as_str).zip(vals.iter().copied()).collect();
            out.push(Arc::new(FinObject::valued(&id, &rows).expect("sampled object")));
            if vals.len() < max_carrier {
                let from = vals.last().copied().unwrap_or(0);
                for v in (from..n).rev() {
                    let mut next = vals.clone();
                    next.push(v);
                    stack.push(next);
                }
            }
        }
        out.sort_by(|a, b| (a.len(), &a.id).cmp(&(b.len(), &b.id)));
        out
    }

    fn value(&self, ctx: &Ctx, obj: &Obj, x: &Elem) -> Result<u32> {
        match obj {
            Obj::Base(o) => {
                let i = o.index_of(x).ok_or_else(|| Error::NotInCarrier { elem: x.to_string(), obj: o.id.clone() })?;
                Ok(self.values(o)?[i])
            }
            Obj::Unit => Ok(self.monoid.unit),
            Obj::Tensor(a, b) => {
                let (p, q) = x.as_pair().ok_or_else(|| Error::NotInCarrier { elem: x.to_string(), obj: obj.to_string() })?;
                Ok(self.monoid.mul(ctx.value(a, p)?, ctx.value(b, q)?))
            }
            Obj::Bang(_) => ctx.value(obj, x),
        }
    }

    fn is_hom(&self, ctx: &Ctx, m: &FinMorphism) -> Result<bool> {
        let (cs, ct) = (ctx.carrier(&m.src)?, ctx.carrier(&m.tgt)?);
        if !m.is_function_on(&cs) || !m.is_within(&cs, &ct) {
            return Ok(false);
        }
        for (a, b) in m.pairs() {
            if ctx.value(&m.src, a)? != ctx.value(&m.tgt, b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn braiding(&self) -> Braiding {
        if self.monoid.is_commutative() {
            Braiding::Symmetric
        } else {
            Braiding::None
        }
    }

    fn braid_image(&self, _ctx: &Ctx, _a: &Obj, _b: &Obj, x: &Elem, _inverse: bool) -> Result<Vec<Elem>> {
        if !self.monoid.is_commutative() {
            return Err(Error::Unsupported(format!("{} is not symmetric", self.name())));
        }
        let (p, q) = x.as_pair().ok_or_else(|| Error::NotInCarrier { elem: x.to_string(), obj: "a tensor".into() })?;
        Ok(vec![Elem::pair(q.clone(), p.clone())])
    }

    fn payload_laws(&self) -> Vec<(String, Option<String>)> {
        let recheck = FinMonoid::new(&self.monoid.name, self.monoid.names.clone(), self.monoid.table.clone());
        vec![(format!("monoid {} is associative and unital", self.monoid.name), recheck.err().map(|e| e.to_string()))]
    }

    fn product(&self, ctx: &Ctx, a: &Obj, b: &Obj) -> Option<Result<Product>> {
        Some((|| {
            let (oa, ob) = (base(a)?, base(b)?);
            let p = Obj::base(self.product_object(oa, ob)?);
            let carrier = ctx.carrier(&p)?;
            let proj = |first: bool| {
                let pairs = carrier.iter().map(|z| {
                    let (x, y) = z.as_pair().expect("product element");
                    (z.clone(), if first { x.clone() } else { y.clone() })
                });
                FinMorphism::from_pairs(p.clone(), if first { a.clone() } else { b.clone() }, MorKind::Function, pairs)
            };
            Ok(Product { obj: p.clone(), pi1: proj(true), pi2: proj(false) })
        })())
    }

    fn terminal(&self, _ctx: &Ctx) -> Option<Result<Obj>> {
        Some(self.terminal_object().map(Obj::base))
    }
}

/// `!A = {a : |a| = e}` with identity `delta`, inclusion `eps`, diagonal `d`
/// and constant `e`.
#[derive(Clone, Debug)]
pub struct SliceComonad {
    pub unit: u32,
}

impl SliceComonad {
    pub fn new(m: &SliceModel) -> Self {
        SliceComonad { unit: m.monoid.unit }
    }
}

impl ExpComonad for SliceComonad {
    fn name(&self) -> String {
        "slice-unit-part".into()
    }

    fn bang_carrier(&self, ctx: &Ctx, a: &Obj) -> Result<Vec<Elem>> {
        let mut out = Vec::new();
        for x in ctx.carrier(a)?.iter() {
            if ctx.value(a, x)? == self.unit {
                out.push(x.clone());
            }
        }
        Ok(out)
    }

    fn bang_value(&self, _ctx: &Ctx, _a: &Obj, _x: &Elem) -> Result<u32> {
        Ok(self.unit)
    }

    fn bang_map(&self, ctx: &Ctx, f: &Mor, x: &Elem) -> Result<Vec<Elem>> {
        ctx.image(f, x)
    }

    fn delta(&self, _ctx: &Ctx, _a: &Obj, x: &Elem) -> Result<Vec<Elem>> {
        Ok(vec![x.clone()])
    }

    fn epsilon(&self, _ctx: &Ctx, _a: &Obj, x: &Elem) -> Result<Vec<Elem>> {
        Ok(vec![x.clone()])
    }

    fn m(&self, _ctx: &Ctx, _a: &Obj, _b: &Obj, x: &Elem) -> Result<Vec<Elem>> {
        Ok(vec![x.clone()])
    }

    fn m_unit(&self, _ctx: &Ctx, x: &Elem) -> Result<Vec<Elem>> {
        Ok(vec![x.clone()])
    }

    fn d(&self, _ctx: &Ctx, _a: &Obj, x: &Elem) -> Result<Vec<Elem>> {
        Ok(vec![Elem::pair(x.clone(), x.clone())])
    }

    fn e(&self, _ctx: &Ctx, _a: &Obj, _x: &Elem) -> Result<Vec<Elem>> {
        Ok(vec![Elem::Star])
    }
}

pub(crate) fn curry(h: &FinMorphism, hom_obj: &Obj, left_var: bool, ctx: &Ctx, m: &SliceModel) -> Result<FinMorphism> {
    let (a, b) = h.src.as_tensor().ok_or_else(|| Error::Unsupported("curry needs a tensor source".into()))?;
    let (ca, cb) = (ctx.carrier(a)?, ctx.carrier(b)?);
    let (outer, inner, outer_obj) = if left_var { (&cb, &ca, b) } else { (&ca, &cb, a) };
    let mut pairs = Vec::new();
    for o in outer.iter() {
        let graph = inner
            .iter()
            .map(|i| {
                let arg = if left_var { Elem::pair(i.clone(), o.clone()) } else { Elem::pair(o.clone(), i.clone()) };
                let img = h.image(&arg).first().cloned().ok_or_else(|| Error::NotInCarrier { elem: arg.to_string(), obj: h.src.to_string() })?;
                Ok(Elem::pair(i.clone(), img))
            })
            .collect::<Result<Vec<_>>>()?;
        let x = ctx.value(outer_obj, o)?;
        pairs.push((o.clone(), Elem::pair(Elem::sym(&m.monoid.names[x as usize]), Elem::bag(graph))));
    }
    Ok(FinMorphism::from_pairs(outer_obj.clone(), hom_obj.clone(), MorKind::Function, pairs))
}

pub(crate) fn uncurry(g: &FinMorphism, a: &Obj, b: &Obj, c: &Obj, left_var: bool, ctx: &Ctx) -> Result<FinMorphism> {
    let src = Obj::tensor(a.clone(), b.clone());
    let mut pairs = Vec::new();
    for z in ctx.carrier(&src)?.iter() {
        let (x, y) = z.as_pair().expect("pair");
        let (outer, inner) = if left_var { (y, x) } else { (x, y) };
        let Some(fx) = g.image(outer).first() else { continue };
        let (_, f) = fx.as_pair().expect("hom element");
        let img = f.as_bag().and_then(|bag| bag.iter().find_map(|p| p.as_pair().filter(|(i, _)| *i == inner).map(|(_, v)| v.clone())));
        if let Some(v) = img {
            pairs.push((z.clone(), v));
        }
    }
    Ok(FinMorphism::from_pairs(src, c.clone(), MorKind::Function, pairs))
}

/// Both closure bijections `hom(A (x) B, C) ~ hom(B, A -o C)` and
/// `hom(A (x) B, C) ~ hom(A, C o- B)`, checked by explicit currying with
/// round trips, plus a non-symmetry witness for non-commutative monoids.
pub fn check_slice_biclosed(ctx: &Ctx, m: &SliceModel, bound: usize) -> CheckRecord {
    run_check("selfcheck.biclosed", |chk| {
        let objs = m.sample_objects(bound);
        for a in &objs {
            for b in &objs {
                for c in &objs {
                    ctx.check_time()?;
                    let (oa, ob, oc) = (Obj::Base(a.clone()), Obj::Base(b.clone()), Obj::Base(c.clone()));
                    let ab = Obj::tensor(oa.clone(), ob.clone());
                    let lhs = enumerate_homs(ctx, &ab, &oc)?;
                    for (left_var, hom_obj, var) in [
                        (true, Obj::base(m.internal_hom(a, c, true)?), &ob),
                        (false, Obj::base(m.internal_hom(b, c, false)?), &oa),
                    ] {
                        let rhs = enumerate_homs(ctx, var, &hom_obj)?;
                        chk.tick();
                        if lhs.len() != rhs.len() {
                            let f = lhs.first().or(rhs.first()).cloned();
                            chk.fail(match f {
                                Some(f) => Counterexample::not_a_hom(&crate::diagrams::NamedMor { name: "curried".into(), mor: f }),
                                None => Counterexample::no_morphism(var, &hom_obj),
                            });
                            continue;
                        }
                        for h in &lhs {
                            let g = curry(h, &hom_obj, left_var, ctx, m)?;
                            if !rhs.contains(&g) {
                                chk.fail(Counterexample::not_a_hom(&crate::diagrams::NamedMor { name: "curried".into(), mor: g }));
                                continue;
                            }
                            let back = uncurry(&g, &oa, &ob, &oc, left_var, ctx)?;
                            if back != *h {
                                chk.fail(Counterexample::not_a_hom(&crate::diagrams::NamedMor { name: "uncurried".into(), mor: back }));
                            }
                        }
                    }
                }
            }
        }
        if let Some((x, y)) = non_symmetry_witness(m) {
            let (a, b) = (Obj::base(m.object("P", &[("p", &x)])?), Obj::base(m.object("Q", &[("q", &y)])?));
            let (ab, ba) = (Obj::tensor(a.clone(), b.clone()), Obj::tensor(b, a));
            if enumerate_homs(ctx, &ab, &ba)?.is_empty() {
                chk.note = Some(format!("not symmetric: no morphism {ab} -> {ba} ({x}.{y} != {y}.{x})"));
            }
        }
        Ok(())
    })
}

/// Two monoid elements that do not commute.
pub fn non_symmetry_witness(m: &SliceModel) -> Option<(String, String)> {
    let n = m.monoid.len() as u32;
    (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .find(|&(a, b)| m.monoid.mul(a, b) != m.monoid.mul(b, a))
        .map(|(a, b)| (m.monoid.names[a as usize].clone(), m.monoid.names[b as usize].clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::algebra::preset;

    fn l3() -> SliceModel {
        SliceModel::new(preset("L3").unwrap())
    }

    #[test]
    fn bang_keeps_unit_valued_elements() {
        let m = l3();
        let c = SliceComonad::new(&m);
        let ctx = Ctx::new(&m, Some(&c));
        let a = Obj::base(m.object("A", &[("a1", "e"), ("a2", "a")]).unwrap());
        let bang = ctx.carrier(&Obj::bang(a)).unwrap();
        assert_eq!(*bang, vec![Elem::sym("A.a1")]);
    }

    #[test]
    fn tensor_valuation_multiplies() {
        let m = l3();
        let ctx = Ctx::new(&m, None);
        let x = Obj::base(m.object("X", &[("x", "a")]).unwrap());
        let y = Obj::base(m.object("Y", &[("y", "b")]).unwrap());
        let v = ctx.value(&Obj::tensor(x, y), &Elem::pair(Elem::sym("X.x"), Elem::sym("Y.y"))).unwrap();
        assert_eq!(m.monoid.names[v as usize], "a");
    }

    #[test]
    fn lollipop_over_a_group_has_one_point_per_function() {
        // |a| = g, |b| = h in C3 with g.x = h: x = g^-1 h, exactly one.
        let m = SliceModel::new(preset("C3").unwrap());
        for (g, h) in [("e", "g"), ("g", "g2"), ("g2", "e")] {
            let a = m.object("A", &[("a", g)]).unwrap();
            let b = m.object("B", &[("b", h)]).unwrap();
            let lolli = m.internal_hom(&a, &b, true).unwrap();
            assert_eq!(lolli.len(), 1);
        }
    }

    #[test]
    fn sample_counts_multisets() {
        // multisets of size <= 3 over 3 values: 1 + 3 + 6 + 10
        assert_eq!(l3().sample_objects(3).len(), 20);
        assert_eq!(l3().sample_objects(0).len(), 1);
    }

    #[test]
    fn homs_respect_valuations() {
        let m = SliceModel::new(preset("Z2").unwrap());
        let ctx = Ctx::new(&m, None);
        let a = Obj::base(m.object("A", &[("u", "e"), ("v", "s")]).unwrap());
        let b = Obj::base(m.object("B", &[("u", "e"), ("v", "s")]).unwrap());
        assert_eq!(enumerate_homs(&ctx, &a, &b).unwrap().len(), 1);
        let g = Obj::base(m.object("G", &[("x", "s")]).unwrap());
        let e = Obj::base(m.object("E", &[("y", "e")]).unwrap());
        assert!(enumerate_homs(&ctx, &g, &e).unwrap().is_empty());
        assert_eq!(enumerate_homs(&ctx, &e, &e).unwrap().len(), 1);
    }

    #[test]
    fn biclosed_on_l3() {
        let m = l3();
        let ctx = Ctx::new(&m, None);
        let r = check_slice_biclosed(&ctx, &m, 2);
        assert_eq!(r.status, crate::report::Status::Pass, "{r:?}");
        assert!(r.note.unwrap().contains("not symmetric"));
    }
}
