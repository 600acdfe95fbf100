//! The identity functor as a monoidal comonad on any model.

use crate::diagrams::Mor;
use crate::elem::Elem;
use crate::error::{Error, Result};
use crate::fincat::{Ctx, Obj};
use crate::linexp::ExpComonad;

/// `! = id` with every structure map the identity. With `diagonal` set it
/// also supplies `d x = (x, x)` and `e x = *`, which is only a morphism in
/// cartesian models.
#[derive(Clone, Copy, Debug, Default)]
pub struct IdentityComonad {
    pub diagonal: bool,
}

impl ExpComonad for IdentityComonad {
    fn name(&self) -> String {
        if self.diagonal { "identity+diagonal" } else { "identity" }.into()
    }

    fn bang_carrier(&self, ctx: &Ctx, a: &Obj) -> Result<Vec<Elem>> {
        Ok(ctx.carrier(a)?.to_vec())
    }

    fn bang_value(&self, ctx: &Ctx, a: &Obj, x: &Elem) -> Result<u32> {
        ctx.value(a, x)
    }

    fn bang_act(&self, ctx: &Ctx, a: &Obj, g: u32, x: &Elem) -> Result<Elem> {
        ctx.act(a, g, x)
    }

    fn bang_restrict(&self, ctx: &Ctx, a: &Obj, x: &Elem, b: u32) -> Result<Option<Elem>> {
        ctx.restrict(a, x, b)
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

    fn has_comonoid(&self) -> bool {
        self.diagonal
    }

    fn d(&self, _ctx: &Ctx, a: &Obj, x: &Elem) -> Result<Vec<Elem>> {
        if !self.diagonal {
            return Err(Error::Unsupported(format!("identity comonad supplies no d at {a}")));
        }
        Ok(vec![Elem::pair(x.clone(), x.clone())])
    }

    fn e(&self, _ctx: &Ctx, a: &Obj, _x: &Elem) -> Result<Vec<Elem>> {
        if !self.diagonal {
            return Err(Error::Unsupported(format!("identity comonad supplies no e at {a}")));
        }
        Ok(vec![Elem::Star])
    }
}
