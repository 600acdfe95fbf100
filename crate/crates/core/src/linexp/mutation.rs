//! Deliberately broken variants of a comonad or model, used to show that the
//! axiom suite notices each kind of defect.

use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::diagrams::Mor;
use crate::elem::Elem;
use crate::error::{Error, Result};
use crate::fincat::{Braiding, Ctx, FinMorphism, FinObject, Kernel, Model, MorKind, Obj, Product};
use crate::linexp::ExpComonad;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mutation {
    /// `d x = (x, x')` with `x'` the next element of `!X`.
    TwistedD,
    /// `e` defined only on the least element of `!X`.
    DroppedENaturality,
    /// `m (x, y) = m (x', y)`.
    BrokenM,
    /// `delta` shifted on base objects only.
    NonCoassociativeDelta,
    /// `m_I` shifted along `!I`, or empty when `!I` has one element.
    WrongMUnit,
    /// The declared braiding acts as the identity on elements.
    IdentityBraiding,
}

pub const MUTATIONS: [Mutation; 6] = [
    Mutation::TwistedD,
    Mutation::DroppedENaturality,
    Mutation::BrokenM,
    Mutation::NonCoassociativeDelta,
    Mutation::WrongMUnit,
    Mutation::IdentityBraiding,
];

impl Mutation {
    pub fn id(self) -> &'static str {
        match self {
            Mutation::TwistedD => "twisted-d",
            Mutation::DroppedENaturality => "dropped-e-naturality",
            Mutation::BrokenM => "broken-m",
            Mutation::NonCoassociativeDelta => "non-coassociative-delta",
            Mutation::WrongMUnit => "wrong-m-unit",
            Mutation::IdentityBraiding => "identity-braiding",
        }
    }

    /// Whether the mutation lives in the model rather than the comonad.
    pub fn on_model(self) -> bool {
        self == Mutation::IdentityBraiding
    }
}

impl std::fmt::Display for Mutation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Mutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        MUTATIONS
            .into_iter()
            .find(|m| m.id() == s)
            .ok_or_else(|| Error::Unsupported(format!("unknown mutation {s}; expected one of {}", MUTATIONS.map(|m| m.id()).join(", "))))
    }
}

/// Cyclic successor of `x` in `carrier`.
fn next(carrier: &[Elem], x: &Elem) -> Elem {
    match carrier.iter().position(|y| y == x) {
        Some(i) => carrier[(i + 1) % carrier.len()].clone(),
        None => x.clone(),
    }
}

fn shift_all(ctx: &Ctx, obj: &Obj, xs: Vec<Elem>) -> Result<Vec<Elem>> {
    let carrier = ctx.carrier(obj)?;
    let mut out: Vec<Elem> = xs.iter().map(|x| next(&carrier, x)).collect();
    out.sort();
    out.dedup();
    Ok(out)
}

/// A comonad with one structure map corrupted.
pub struct MutantComonad<'a> {
    pub inner: Arc<dyn ExpComonad + 'a>,
    pub mutation: Mutation,
}

impl ExpComonad for MutantComonad<'_> {
    fn name(&self) -> String {
        format!("{}[{}]", self.inner.name(), self.mutation)
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
        let out = self.inner.delta(ctx, a, x)?;
        if self.mutation == Mutation::NonCoassociativeDelta && a.as_bang().is_none() {
            return shift_all(ctx, &Obj::bang(Obj::bang(a.clone())), out);
        }
        Ok(out)
    }

    fn epsilon(&self, ctx: &Ctx, a: &Obj, x: &Elem) -> Result<Vec<Elem>> {
        self.inner.epsilon(ctx, a, x)
    }

    fn m(&self, ctx: &Ctx, a: &Obj, b: &Obj, x: &Elem) -> Result<Vec<Elem>> {
        if self.mutation == Mutation::BrokenM {
            if let Some((p, q)) = x.as_pair() {
                let shifted = next(&ctx.carrier(&Obj::bang(a.clone()))?, p);
                return self.inner.m(ctx, a, b, &Elem::pair(shifted, q.clone()));
            }
            // tagged pairs: shift within the fibre of the left factor
            if let Some((c, (p, q))) = x.as_tag().and_then(|(c, pq)| Some((c, pq.as_pair()?))) {
                let ba = Obj::bang(a.clone());
                let v = ctx.value(&ba, p)?;
                let mut fibre = Vec::new();
                for y in ctx.carrier(&ba)?.iter() {
                    if ctx.value(&ba, y)? == v {
                        fibre.push(y.clone());
                    }
                }
                return self.inner.m(ctx, a, b, &Elem::tag(c, Elem::pair(next(&fibre, p), q.clone())));
            }
        }
        self.inner.m(ctx, a, b, x)
    }

    fn m_unit(&self, ctx: &Ctx, x: &Elem) -> Result<Vec<Elem>> {
        let out = self.inner.m_unit(ctx, x)?;
        if self.mutation == Mutation::WrongMUnit {
            let bang_i = Obj::bang(Obj::Unit);
            if ctx.carrier(&bang_i)?.len() <= 1 {
                return Ok(Vec::new());
            }
            return shift_all(ctx, &bang_i, out);
        }
        Ok(out)
    }

    fn has_comonoid(&self) -> bool {
        self.inner.has_comonoid()
    }

    fn d(&self, ctx: &Ctx, a: &Obj, x: &Elem) -> Result<Vec<Elem>> {
        if self.mutation == Mutation::TwistedD {
            let other = next(&ctx.carrier(&Obj::bang(a.clone()))?, x);
            return Ok(vec![Elem::pair(x.clone(), other)]);
        }
        self.inner.d(ctx, a, x)
    }

    fn e(&self, ctx: &Ctx, a: &Obj, x: &Elem) -> Result<Vec<Elem>> {
        if self.mutation == Mutation::DroppedENaturality {
            let carrier = ctx.carrier(&Obj::bang(a.clone()))?;
            if carrier.first() != Some(x) {
                return Ok(Vec::new());
            }
        }
        self.inner.e(ctx, a, x)
    }

    fn graded(&self) -> bool {
        self.inner.graded()
    }
}

/// A model whose braiding has been replaced by the identity on elements.
pub struct MutantModel<'a> {
    pub inner: Arc<dyn Model + 'a>,
}

impl Model for MutantModel<'_> {
    fn name(&self) -> String {
        format!("{}[{}]", self.inner.name(), Mutation::IdentityBraiding)
    }

    fn mor_kind(&self) -> MorKind {
        self.inner.mor_kind()
    }

    fn sample_objects(&self, max_carrier: usize) -> Vec<Arc<FinObject>> {
        self.inner.sample_objects(max_carrier)
    }

    fn carrier(&self, ctx: &Ctx, obj: &Obj) -> Result<Vec<Elem>> {
        self.inner.carrier(ctx, obj)
    }

    fn value(&self, ctx: &Ctx, obj: &Obj, x: &Elem) -> Result<u32> {
        self.inner.value(ctx, obj, x)
    }

    fn group_size(&self) -> u32 {
        self.inner.group_size()
    }

    fn act(&self, ctx: &Ctx, obj: &Obj, g: u32, x: &Elem) -> Result<Elem> {
        self.inner.act(ctx, obj, g, x)
    }

    fn restrict(&self, ctx: &Ctx, obj: &Obj, x: &Elem, b: u32) -> Result<Option<Elem>> {
        self.inner.restrict(ctx, obj, x, b)
    }

    fn is_hom(&self, ctx: &Ctx, m: &FinMorphism) -> Result<bool> {
        self.inner.is_hom(ctx, m)
    }

    fn enumerate_homs(&self, ctx: &Ctx, a: &Obj, b: &Obj) -> Option<Result<Vec<FinMorphism>>> {
        self.inner.enumerate_homs(ctx, a, b)
    }

    fn tensor_image(&self, ctx: &Ctx, src: (&Obj, &Obj), tgt: (&Obj, &Obj), x: &Elem, f: Kernel, g: Kernel) -> Result<Vec<Elem>> {
        self.inner.tensor_image(ctx, src, tgt, x, f, g)
    }

    fn assoc_image(&self, ctx: &Ctx, a: &Obj, b: &Obj, c: &Obj, x: &Elem, inverse: bool) -> Result<Elem> {
        self.inner.assoc_image(ctx, a, b, c, x, inverse)
    }

    fn lunit_image(&self, ctx: &Ctx, a: &Obj, x: &Elem, inverse: bool) -> Result<Elem> {
        self.inner.lunit_image(ctx, a, x, inverse)
    }

    fn runit_image(&self, ctx: &Ctx, a: &Obj, x: &Elem, inverse: bool) -> Result<Elem> {
        self.inner.runit_image(ctx, a, x, inverse)
    }

    fn braiding(&self) -> Braiding {
        self.inner.braiding()
    }

    fn braid_image(&self, _ctx: &Ctx, _a: &Obj, _b: &Obj, x: &Elem, _inverse: bool) -> Result<Vec<Elem>> {
        Ok(vec![x.clone()])
    }

    fn payload_laws(&self) -> Vec<(String, Option<String>)> {
        self.inner.payload_laws()
    }

    fn product(&self, ctx: &Ctx, a: &Obj, b: &Obj) -> Option<Result<Product>> {
        self.inner.product(ctx, a, b)
    }

    fn terminal(&self, ctx: &Ctx) -> Option<Result<Obj>> {
        self.inner.terminal(ctx)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_round_trip() {
        for m in MUTATIONS {
            assert_eq!(m.id().parse::<Mutation>().unwrap(), m);
        }
        assert!("nope".parse::<Mutation>().is_err());
    }

    #[test]
    fn next_cycles() {
        let c = [Elem::sym("a"), Elem::sym("b")];
        assert_eq!(next(&c, &c[0]), c[1]);
        assert_eq!(next(&c, &c[1]), c[0]);
    }
}
