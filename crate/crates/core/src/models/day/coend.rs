//! `!G(b) = coend over x of B(b, F x) x G(F x)`, computed directly from the
//! fibres of `G` and with structure maps written out pointwise.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::sync::Arc;

use super::{fiber, untag, DayModel};
use crate::diagrams::Mor;
use crate::elem::Elem;
use crate::error::{Error, Result};
use crate::fincat::{Ctx, Obj};
use crate::linexp::ExpComonad;

pub struct CoendComonad<'m> {
    pub model: &'m DayModel,
}

/// Components of the gluing graph on `(b, x, g)`, each named by its least
/// `Tag(x, g)`.
#[derive(Debug, Default)]
struct Components {
    carrier: Vec<Elem>,
    class: HashMap<(u32, Elem), Elem>,
}

fn malformed(x: &Elem, a: &Obj) -> Error {
    Error::NotInCarrier { elem: x.to_string(), obj: format!("!{a}") }
}

impl<'m> CoendComonad<'m> {
    pub fn new(model: &'m DayModel) -> Self {
        CoendComonad { model }
    }

    fn components(&self, ctx: &Ctx, a: &Obj) -> Result<Arc<Components>> {
        ctx.memo("day-coend", a, || {
            let (m, base, xcat) = (self.model, &self.model.base, &self.model.xcat);
            let mut nodes: BTreeMap<u32, BTreeSet<Elem>> = BTreeMap::new();
            for g in ctx.carrier(a)?.iter() {
                let c = fiber(g)?;
                for x in (0..xcat.len() as u32).filter(|&x| m.fx(x) == c) {
                    for b in base.down(c) {
                        nodes.entry(b).or_default().insert(Elem::tag(x, g.clone()));
                    }
                }
            }
            let mut out = Components::default();
            for (b, at_b) in nodes {
                let mut adj: HashMap<Elem, Vec<Elem>> = HashMap::new();
                for n in &at_b {
                    let (x, g) = (fiber(n)?, untag(n)?);
                    for y in (0..xcat.len() as u32).filter(|&y| y != x && xcat.le(y, x) && base.le(b, m.fx(y))) {
                        let gy = ctx.restrict(a, g, m.fx(y))?.ok_or_else(|| malformed(g, a))?;
                        let other = Elem::tag(y, gy);
                        adj.entry(n.clone()).or_default().push(other.clone());
                        adj.entry(other).or_default().push(n.clone());
                    }
                }
                let mut seen = BTreeSet::new();
                for start in &at_b {
                    if seen.contains(start) {
                        continue;
                    }
                    let mut comp = vec![start.clone()];
                    let mut queue = VecDeque::from([start.clone()]);
                    seen.insert(start.clone());
                    while let Some(n) = queue.pop_front() {
                        for o in adj.get(&n).into_iter().flatten() {
                            if seen.insert(o.clone()) {
                                comp.push(o.clone());
                                queue.push_back(o.clone());
                            }
                        }
                    }
                    let least = Elem::tag(b, comp.iter().min().expect("nonempty").clone());
                    for n in comp {
                        out.class.insert((b, n), least.clone());
                    }
                    out.carrier.push(least);
                }
            }
            out.carrier.sort();
            Ok(out)
        })
    }

    /// `[x, g]` in `!a` at `b`.
    fn class(&self, ctx: &Ctx, a: &Obj, b: u32, xg: &Elem) -> Result<Elem> {
        self.components(ctx, a)?.class.get(&(b, xg.clone())).cloned().ok_or_else(|| malformed(xg, a))
    }

    /// `(b, x, g)` of an element of `!a`.
    fn parts<'e>(y: &'e Elem, a: &Obj) -> Result<(u32, u32, &'e Elem)> {
        let (b, xg) = y.as_tag().ok_or_else(|| malformed(y, a))?;
        let (x, g) = xg.as_tag().ok_or_else(|| malformed(y, a))?;
        Ok((b, x, g))
    }
}

impl ExpComonad for CoendComonad<'_> {
    fn name(&self) -> String {
        format!("day-coend[{}]", self.model.xcat.name)
    }

    fn bang_carrier(&self, ctx: &Ctx, a: &Obj) -> Result<Vec<Elem>> {
        Ok(self.components(ctx, a)?.carrier.clone())
    }

    fn bang_value(&self, _ctx: &Ctx, _a: &Obj, y: &Elem) -> Result<u32> {
        fiber(y)
    }

    fn bang_restrict(&self, ctx: &Ctx, a: &Obj, y: &Elem, b: u32) -> Result<Option<Elem>> {
        if !self.model.base.le(b, fiber(y)?) {
            return Ok(None);
        }
        Ok(Some(self.class(ctx, a, b, untag(y)?)?))
    }

    fn bang_map(&self, ctx: &Ctx, f: &Mor, y: &Elem) -> Result<Vec<Elem>> {
        let (a, t) = (f.src()?, f.tgt()?);
        let (b, x, g) = Self::parts(y, &a)?;
        let mut out = BTreeSet::new();
        for h in ctx.image(f, g)? {
            out.insert(self.class(ctx, &t, b, &Elem::tag(x, h))?);
        }
        Ok(out.into_iter().collect())
    }

    /// `[x, g]_b |-> [x, [x, g]_(F x)]_b`
    fn delta(&self, ctx: &Ctx, a: &Obj, y: &Elem) -> Result<Vec<Elem>> {
        let (b, x, g) = Self::parts(y, a)?;
        let inner = self.class(ctx, a, self.model.fx(x), &Elem::tag(x, g.clone()))?;
        Ok(vec![self.class(ctx, &Obj::bang(a.clone()), b, &Elem::tag(x, inner))?])
    }

    /// `[x, g]_b |-> g|b`
    fn epsilon(&self, ctx: &Ctx, a: &Obj, y: &Elem) -> Result<Vec<Elem>> {
        let (b, _, g) = Self::parts(y, a)?;
        Ok(vec![ctx.restrict(a, g, b)?.ok_or_else(|| malformed(y, a))?])
    }

    /// `[x, g]_b1 (x) [x', h]_b2 |-> [z, (g|F z, h|F z)]_b` with `z = x /\ x'`.
    fn m(&self, ctx: &Ctx, a: &Obj, b: &Obj, y: &Elem) -> Result<Vec<Elem>> {
        let c = fiber(y)?;
        let (u, v) = untag(y)?.as_pair().ok_or_else(|| malformed(y, a))?;
        let ((_, x1, g), (_, x2, h)) = (Self::parts(u, a)?, Self::parts(v, b)?);
        let z = self.model.xcat.meet(x1, x2);
        let fz = self.model.fx(z);
        let gz = ctx.restrict(a, g, fz)?.ok_or_else(|| malformed(u, a))?;
        let hz = ctx.restrict(b, h, fz)?.ok_or_else(|| malformed(v, b))?;
        let ab = Obj::tensor(a.clone(), b.clone());
        let k = self.model.day_class(ctx, a, b, fz, &gz, &hz)?;
        Ok(vec![self.class(ctx, &ab, c, &Elem::tag(z, k))?])
    }

    /// `*_b |-> [top, *_I]_b`
    fn m_unit(&self, ctx: &Ctx, x: &Elem) -> Result<Vec<Elem>> {
        let top = Elem::tag(self.model.xcat.top, Elem::tag(self.model.base.unit, Elem::Star));
        Ok(vec![self.class(ctx, &Obj::Unit, fiber(x)?, &top)?])
    }

    /// `[x, g]_b |-> [w, w]_b` with `w = [x, g]_(F x)`.
    fn d(&self, ctx: &Ctx, a: &Obj, y: &Elem) -> Result<Vec<Elem>> {
        let (b, x, g) = Self::parts(y, a)?;
        let w = self.class(ctx, a, self.model.fx(x), &Elem::tag(x, g.clone()))?;
        let ba = Obj::bang(a.clone());
        Ok(vec![self.model.day_class(ctx, &ba, &ba, b, &w, &w)?])
    }

    fn e(&self, _ctx: &Ctx, _a: &Obj, y: &Elem) -> Result<Vec<Elem>> {
        Ok(vec![Elem::tag(fiber(y)?, Elem::Star)])
    }
}
