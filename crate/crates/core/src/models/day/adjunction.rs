//! `Lan_F -| (- . F)` between presheaves on the semilattice and presheaves
//! on the base. Elements of an `X`-presheaf are `Tag(x, _)`; `U a` holds
//! `Tag(x, g)` for `g` over `F x`, and a product holds `Tag(x, (p, q))`.

use std::collections::BTreeSet;
use std::sync::Arc;

use super::{fiber, untag, DayModel, Quotient};
use crate::diagrams::Mor;
use crate::elem::Elem;
use crate::em::{Adjunction, XKernel, XObj};
use crate::error::{Error, Result};
use crate::fincat::{Ctx, Obj};

pub struct DayAdjunction<'m> {
    pub model: &'m DayModel,
}

fn key(s: &XObj) -> Obj {
    match s {
        XObj::U(a) => Obj::bang(a.clone()),
        XObj::Prod(s, t) => Obj::tensor(key(s), key(t)),
        XObj::One => Obj::Unit,
    }
}

fn bad(x: &Elem, s: &XObj) -> Error {
    Error::NotInCarrier { elem: x.to_string(), obj: s.to_string() }
}

impl<'m> DayAdjunction<'m> {
    pub fn new(model: &'m DayModel) -> Self {
        DayAdjunction { model }
    }

    fn x_elems(&self, ctx: &Ctx, s: &XObj) -> Result<Vec<Elem>> {
        let xs = 0..self.model.xcat.len() as u32;
        Ok(match s {
            XObj::U(a) => {
                let mut out = Vec::new();
                for g in ctx.carrier(a)?.iter() {
                    let c = fiber(g)?;
                    out.extend(xs.clone().filter(|&x| self.model.fx(x) == c).map(|x| Elem::tag(x, g.clone())));
                }
                out
            }
            XObj::Prod(l, r) => {
                let (cl, cr) = (self.x_elems(ctx, l)?, self.x_elems(ctx, r)?);
                let mut out = Vec::new();
                for p in &cl {
                    for q in cr.iter().filter(|q| fiber(q).ok() == fiber(p).ok()) {
                        out.push(Elem::tag(fiber(p)?, Elem::pair(p.clone(), q.clone())));
                    }
                }
                out
            }
            XObj::One => xs.map(|x| Elem::tag(x, Elem::Star)).collect(),
        })
    }

    /// Restriction in `X` along `y <= fiber p`.
    fn x_restrict(&self, ctx: &Ctx, s: &XObj, p: &Elem, y: u32) -> Result<Elem> {
        Ok(match s {
            XObj::U(a) => {
                let g = untag(p)?;
                let fy = self.model.fx(y);
                Elem::tag(y, ctx.restrict(a, g, fy)?.ok_or_else(|| bad(p, s))?)
            }
            XObj::Prod(l, r) => {
                let (u, v) = untag(p)?.as_pair().ok_or_else(|| bad(p, s))?;
                Elem::tag(y, Elem::pair(self.x_restrict(ctx, l, u, y)?, self.x_restrict(ctx, r, v, y)?))
            }
            XObj::One => Elem::tag(y, Elem::Star),
        })
    }

    /// `(Lan_F s)(b)`: pairs `(b, p)` with `b <= F (fiber p)`, glued along
    /// restriction in `X`.
    fn lan(&self, ctx: &Ctx, s: &XObj) -> Result<Arc<Quotient>> {
        ctx.memo("day-lan", &key(s), || {
            let xc = self.x_elems(ctx, s)?;
            let base = &self.model.base;
            let mut raw = Vec::new();
            for p in &xc {
                let fp = self.model.fx(fiber(p)?);
                raw.extend(base.down(fp).map(|b| (b, p.clone())));
            }
            Quotient::by_union(raw, |b, p| {
                let x = fiber(p)?;
                let mut out = Vec::new();
                for y in (0..self.model.xcat.len() as u32).filter(|&y| y != x && self.model.xcat.le(y, x)) {
                    if base.le(b, self.model.fx(y)) {
                        out.push(self.x_restrict(ctx, s, p, y)?);
                    }
                }
                Ok(out)
            })
        })
    }

    fn lan_class(&self, ctx: &Ctx, s: &XObj, b: u32, p: &Elem) -> Result<Elem> {
        self.lan(ctx, s)?.get(b, p)
    }
}

fn sorted(xs: impl IntoIterator<Item = Elem>) -> Vec<Elem> {
    xs.into_iter().collect::<BTreeSet<_>>().into_iter().collect()
}

impl Adjunction for DayAdjunction<'_> {
    fn name(&self) -> String {
        format!("lan-along-F[{}]", self.model.xcat.name)
    }

    fn x_carrier(&self, ctx: &Ctx, s: &XObj) -> Result<Vec<Elem>> {
        self.x_elems(ctx, s)
    }

    fn f_carrier(&self, ctx: &Ctx, s: &XObj) -> Result<Vec<Elem>> {
        Ok(self.lan(ctx, s)?.carrier.clone())
    }

    fn f_value(&self, _ctx: &Ctx, _a: &Obj, y: &Elem) -> Result<u32> {
        fiber(y)
    }

    fn f_restrict(&self, ctx: &Ctx, a: &Obj, y: &Elem, b: u32) -> Result<Option<Elem>> {
        let c = fiber(y)?;
        if !self.model.base.le(b, c) {
            return Ok(None);
        }
        Ok(Some(self.lan_class(ctx, &XObj::u(a), b, untag(y)?)?))
    }

    fn f_map(&self, ctx: &Ctx, _s: &XObj, t: &XObj, h: XKernel, y: &Elem) -> Result<Vec<Elem>> {
        let b = fiber(y)?;
        let mut out = Vec::new();
        for q in h(untag(y)?)? {
            out.push(self.lan_class(ctx, t, b, &q)?);
        }
        Ok(sorted(out))
    }

    fn u_map(&self, ctx: &Ctx, f: &Mor, x: &Elem) -> Result<Vec<Elem>> {
        let i = fiber(x)?;
        Ok(sorted(ctx.image(f, untag(x)?)?.into_iter().map(|g| Elem::tag(i, g))))
    }

    fn unit(&self, ctx: &Ctx, s: &XObj, x: &Elem) -> Result<Vec<Elem>> {
        let i = fiber(x)?;
        Ok(vec![Elem::tag(i, self.lan_class(ctx, s, self.model.fx(i), x)?)])
    }

    fn counit(&self, ctx: &Ctx, a: &Obj, y: &Elem) -> Result<Vec<Elem>> {
        let b = fiber(y)?;
        let g = untag(untag(y)?)?;
        Ok(vec![ctx.restrict(a, g, b)?.ok_or_else(|| bad(y, &XObj::u(a)))?])
    }

    /// `[p]_b1 (x) [q]_b2 |-> [p|z, q|z]_b` with `z` the meet of their indices.
    fn phi(&self, ctx: &Ctx, s: &XObj, t: &XObj, y: &Elem) -> Result<Vec<Elem>> {
        let b = fiber(y)?;
        let (u, v) = untag(y)?.as_pair().ok_or_else(|| bad(y, s))?;
        let (p, q) = (untag(u)?, untag(v)?);
        let z = self.model.xcat.meet(fiber(p)?, fiber(q)?);
        let pq = Elem::tag(z, Elem::pair(self.x_restrict(ctx, s, p, z)?, self.x_restrict(ctx, t, q, z)?));
        Ok(vec![self.lan_class(ctx, &XObj::prod(s.clone(), t.clone()), b, &pq)?])
    }

    fn phi_inv(&self, ctx: &Ctx, s: &XObj, t: &XObj, y: &Elem) -> Result<Vec<Elem>> {
        let b = fiber(y)?;
        let w = untag(y)?;
        let (p, q) = untag(w)?.as_pair().ok_or_else(|| bad(y, s))?;
        let fz = self.model.fx(fiber(w)?);
        let (u, v) = (self.lan_class(ctx, s, fz, p)?, self.lan_class(ctx, t, fz, q)?);
        Ok(vec![self.model.day_class(ctx, &key(s), &key(t), b, &u, &v)?])
    }

    fn phi0(&self, ctx: &Ctx, x: &Elem) -> Result<Vec<Elem>> {
        let top = Elem::tag(self.model.xcat.top, Elem::Star);
        Ok(vec![self.lan_class(ctx, &XObj::One, fiber(x)?, &top)?])
    }

    fn phi0_inv(&self, _ctx: &Ctx, y: &Elem) -> Result<Vec<Elem>> {
        Ok(vec![Elem::tag(fiber(y)?, Elem::Star)])
    }

    fn mu(&self, ctx: &Ctx, a: &Obj, b: &Obj, x: &Elem) -> Result<Vec<Elem>> {
        let i = fiber(x)?;
        let (p, q) = untag(x)?.as_pair().ok_or_else(|| bad(x, &XObj::u(a)))?;
        let gh = self.model.day_class(ctx, a, b, self.model.fx(i), untag(p)?, untag(q)?)?;
        Ok(vec![Elem::tag(i, gh)])
    }

    fn mu0(&self, _ctx: &Ctx, x: &Elem) -> Result<Vec<Elem>> {
        let i = fiber(x)?;
        Ok(vec![Elem::tag(i, Elem::tag(self.model.fx(i), Elem::Star))])
    }

    fn diag(&self, _ctx: &Ctx, _s: &XObj, x: &Elem) -> Result<Vec<Elem>> {
        Ok(vec![Elem::tag(fiber(x)?, Elem::pair(x.clone(), x.clone()))])
    }

    fn term(&self, _ctx: &Ctx, _s: &XObj, x: &Elem) -> Result<Vec<Elem>> {
        Ok(vec![Elem::tag(fiber(x)?, Elem::Star)])
    }
}
