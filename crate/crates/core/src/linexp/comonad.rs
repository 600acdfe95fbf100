//! The comonad interface consumed by the evaluator.
//!
//! Structure maps are given pointwise: each method returns the sorted image
//! of one element. Functional models return singleton images; relational
//! models may return any finite set.

use crate::diagrams::Mor;
use crate::elem::Elem;
use crate::error::{Error, Result};
use crate::fincat::{Ctx, Obj};

pub trait ExpComonad: Send + Sync {
    fn name(&self) -> String;

    /// Carrier of `!a`.
    fn bang_carrier(&self, ctx: &Ctx, a: &Obj) -> Result<Vec<Elem>>;

    fn bang_value(&self, ctx: &Ctx, a: &Obj, x: &Elem) -> Result<u32>;

    fn bang_act(&self, _ctx: &Ctx, _a: &Obj, _g: u32, x: &Elem) -> Result<Elem> {
        Ok(x.clone())
    }

    fn bang_restrict(&self, _ctx: &Ctx, _a: &Obj, _x: &Elem, _b: u32) -> Result<Option<Elem>> {
        Ok(None)
    }

    /// Image of `!f` at `x`, where `x` lies in `!src(f)`.
    fn bang_map(&self, ctx: &Ctx, f: &Mor, x: &Elem) -> Result<Vec<Elem>>;

    /// `delta_a : !a -> !!a`
    fn delta(&self, ctx: &Ctx, a: &Obj, x: &Elem) -> Result<Vec<Elem>>;

    /// `eps_a : !a -> a`
    fn epsilon(&self, ctx: &Ctx, a: &Obj, x: &Elem) -> Result<Vec<Elem>>;

    /// `m_{a,b} : !a (x) !b -> !(a (x) b)`
    fn m(&self, ctx: &Ctx, a: &Obj, b: &Obj, x: &Elem) -> Result<Vec<Elem>>;

    /// `m_I : I -> !I`
    fn m_unit(&self, ctx: &Ctx, x: &Elem) -> Result<Vec<Elem>>;

    /// Whether `d` and `e` are supplied (a bare monoidal comonad has neither).
    fn has_comonoid(&self) -> bool {
        true
    }

    /// `d_a : !a -> !a (x) !a`
    fn d(&self, _ctx: &Ctx, a: &Obj, _x: &Elem) -> Result<Vec<Elem>> {
        Err(Error::Unsupported(format!("{} supplies no d at {a}", self.name())))
    }

    /// `e_a : !a -> I`
    fn e(&self, _ctx: &Ctx, a: &Obj, _x: &Elem) -> Result<Vec<Elem>> {
        Err(Error::Unsupported(format!("{} supplies no e at {a}", self.name())))
    }

    /// Whether checks must run in graded (truncated) mode.
    fn graded(&self) -> bool {
        false
    }
}
