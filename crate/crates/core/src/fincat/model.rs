use std::any::Any;
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::diagrams::Mor;
use crate::elem::Elem;
use crate::error::{Error, Result};
use crate::fincat::morphism::{FinMorphism, MorKind};
use crate::fincat::object::{FinObject, Obj};
use crate::linexp::ExpComonad;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Braiding {
    None,
    Symmetric,
    Braided,
}

/// Size ceilings for exhaustive checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Limits {
    pub max_carrier: usize,
    pub max_hom_search: u128,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_carrier: 3, max_hom_search: 1_000_000 }
    }
}

/// Tensor images are computed from the images of the two factors.
pub type Kernel<'k> = &'k dyn Fn(&Elem) -> Result<Vec<Elem>>;

/// A finite concrete monoidal category. Every method that takes an [`Obj`]
/// is only ever called on non-`!` objects; `!` objects are answered by the
/// comonad attached to the [`Ctx`].
pub trait Model: Send + Sync {
    fn name(&self) -> String;

    fn mor_kind(&self) -> MorKind;

    /// All objects on canonical carriers of size `<= max_carrier`, one per
    /// isomorphism class of payload.
    fn sample_objects(&self, max_carrier: usize) -> Vec<Arc<FinObject>>;

    fn carrier(&self, ctx: &Ctx, obj: &Obj) -> Result<Vec<Elem>> {
        pair_carrier(ctx, obj)
    }

    /// Valuation, grade or fiber of an element, depending on the model.
    fn value(&self, _ctx: &Ctx, _obj: &Obj, _x: &Elem) -> Result<u32> {
        Ok(0)
    }

    /// Number of group elements acting on objects (1 when there is no action).
    fn group_size(&self) -> u32 {
        1
    }

    fn act(&self, _ctx: &Ctx, _obj: &Obj, _g: u32, x: &Elem) -> Result<Elem> {
        Ok(x.clone())
    }

    /// Presheaf restriction of `x` to the base object `b`.
    fn restrict(&self, _ctx: &Ctx, _obj: &Obj, _x: &Elem, _b: u32) -> Result<Option<Elem>> {
        Ok(None)
    }

    /// The model's hom predicate on a tabulated graph.
    fn is_hom(&self, ctx: &Ctx, m: &FinMorphism) -> Result<bool>;

    /// Optional specialised hom enumerator; the generic brute force is used otherwise.
    fn enumerate_homs(&self, _ctx: &Ctx, _a: &Obj, _b: &Obj) -> Option<Result<Vec<FinMorphism>>> {
        None
    }

    /// Image of `x` in `src.0 (x) src.1` under `f (x) g`, landing in `tgt.0 (x) tgt.1`.
    fn tensor_image(&self, _ctx: &Ctx, _src: (&Obj, &Obj), _tgt: (&Obj, &Obj), x: &Elem, f: Kernel, g: Kernel) -> Result<Vec<Elem>> {
        let (p, q) = x.as_pair().ok_or_else(|| not_pair(x))?;
        let (fp, gq) = (f(p)?, g(q)?);
        let mut out = Vec::with_capacity(fp.len() * gq.len());
        for u in &fp {
            for v in &gq {
                out.push(Elem::pair(u.clone(), v.clone()));
            }
        }
        out.sort();
        Ok(out)
    }

    /// `(a,b),c <-> a,(b,c)`; `inverse` runs right-to-left.
    fn assoc_image(&self, _ctx: &Ctx, _a: &Obj, _b: &Obj, _c: &Obj, x: &Elem, inverse: bool) -> Result<Elem> {
        let (l, r) = x.as_pair().ok_or_else(|| not_pair(x))?;
        if inverse {
            let (b, c) = r.as_pair().ok_or_else(|| not_pair(r))?;
            Ok(Elem::pair(Elem::pair(l.clone(), b.clone()), c.clone()))
        } else {
            let (a, b) = l.as_pair().ok_or_else(|| not_pair(l))?;
            Ok(Elem::pair(a.clone(), Elem::pair(b.clone(), r.clone())))
        }
    }

    /// `I (x) A -> A`.
    fn lunit_image(&self, _ctx: &Ctx, _a: &Obj, x: &Elem, inverse: bool) -> Result<Elem> {
        if inverse {
            Ok(Elem::pair(Elem::Star, x.clone()))
        } else {
            x.as_pair().map(|(_, a)| a.clone()).ok_or_else(|| not_pair(x))
        }
    }

    /// `A (x) I -> A`.
    fn runit_image(&self, _ctx: &Ctx, _a: &Obj, x: &Elem, inverse: bool) -> Result<Elem> {
        if inverse {
            Ok(Elem::pair(x.clone(), Elem::Star))
        } else {
            x.as_pair().map(|(a, _)| a.clone()).ok_or_else(|| not_pair(x))
        }
    }

    fn braiding(&self) -> Braiding {
        Braiding::None
    }

    fn braid_image(&self, _ctx: &Ctx, _a: &Obj, _b: &Obj, _x: &Elem, _inverse: bool) -> Result<Vec<Elem>> {
        Err(Error::Unsupported(format!("{} declares no braiding", self.name())))
    }

    /// Payload-level invariant scans (monoid laws, crossed-set compatibility,
    /// presheaf functoriality). Each entry is `(law id, witness on failure)`.
    fn payload_laws(&self) -> Vec<(String, Option<String>)> {
        Vec::new()
    }

    /// Finite products `(A x B, pi1, pi2)` when the model declares them.
    fn product(&self, _ctx: &Ctx, _a: &Obj, _b: &Obj) -> Option<Result<Product>> {
        None
    }

    /// Terminal object for the declared products.
    fn terminal(&self, _ctx: &Ctx) -> Option<Result<Obj>> {
        None
    }
}

/// A chosen product with its projections.
#[derive(Clone, Debug)]
pub struct Product {
    pub obj: Obj,
    pub pi1: FinMorphism,
    pub pi2: FinMorphism,
}

fn not_pair(x: &Elem) -> Error {
    Error::NotInCarrier { elem: x.to_string(), obj: "a tensor".into() }
}

/// Default carriers: stored for base objects, `{*}` for the unit and literal
/// pairs for tensors.
pub fn pair_carrier(ctx: &Ctx, obj: &Obj) -> Result<Vec<Elem>> {
    match obj {
        Obj::Base(o) => Ok(o.carrier.clone()),
        Obj::Unit => Ok(vec![Elem::Star]),
        Obj::Tensor(a, b) => {
            let (ca, cb) = (ctx.carrier(a)?, ctx.carrier(b)?);
            ctx.guard("tensor carrier", ca.len() as u128 * cb.len() as u128)?;
            let mut out = Vec::with_capacity(ca.len() * cb.len());
            for x in ca.iter() {
                for y in cb.iter() {
                    out.push(Elem::pair(x.clone(), y.clone()));
                }
            }
            Ok(out)
        }
        Obj::Bang(_) => ctx.carrier(obj).map(|c| c.to_vec()),
    }
}

const CARRIER_CEILING: u128 = 2_000_000;

/// Evaluation context: the ambient model, the comonad under test, the
/// truncation grade and the resource limits.
pub struct Ctx<'a> {
    pub model: &'a dyn Model,
    pub comonad: Option<&'a dyn ExpComonad>,
    pub grade: Option<usize>,
    pub limits: Limits,
    pub deadline: Option<Instant>,
    carriers: Mutex<HashMap<Obj, Arc<Vec<Elem>>>>,
    pub(crate) expansions: Mutex<HashMap<(u8, Obj, Obj), Arc<Mor>>>,
    pub(crate) images: Mutex<HashMap<(u8, Obj, Obj, Elem), Arc<[Elem]>>>,
    wider: OnceLock<Box<Ctx<'a>>>,
    memo: Mutex<HashMap<(&'static str, Obj), Arc<dyn Any + Send + Sync>>>,
}

impl<'a> Ctx<'a> {
    pub fn new(model: &'a dyn Model, comonad: Option<&'a dyn ExpComonad>) -> Self {
        Ctx {
            model,
            comonad,
            grade: None,
            limits: Limits::default(),
            deadline: None,
            carriers: Mutex::new(HashMap::new()),
            expansions: Mutex::new(HashMap::new()),
            images: Mutex::new(HashMap::new()),
            wider: OnceLock::new(),
            memo: Mutex::new(HashMap::new()),
        }
    }

    pub fn with_grade(mut self, grade: Option<usize>) -> Self {
        self.grade = grade;
        self
    }

    pub fn with_limits(mut self, limits: Limits) -> Self {
        self.limits = limits;
        self
    }

    pub fn with_deadline(mut self, deadline: Option<Instant>) -> Self {
        self.deadline = deadline;
        self
    }

    /// A fresh context sharing everything except the grade.
    pub fn regraded(&self, grade: Option<usize>) -> Ctx<'a> {
        Ctx::new(self.model, self.comonad)
            .with_grade(grade)
            .with_limits(self.limits)
            .with_deadline(self.deadline)
    }

    /// The context one grade up, shared across calls; `None` when ungraded.
    pub fn wider(&self) -> Option<&Ctx<'a>> {
        let k = self.grade?;
        Some(self.wider.get_or_init(|| Box::new(self.regraded(Some(k + 1)))))
    }

    pub fn comonad(&self) -> Result<&'a dyn ExpComonad> {
        self.comonad.ok_or(Error::NoComonad)
    }

    pub fn check_time(&self) -> Result<()> {
        match self.deadline {
            Some(d) if Instant::now() > d => Err(Error::Timeout),
            _ => Ok(()),
        }
    }

    pub fn guard(&self, what: &str, size: u128) -> Result<()> {
        if size > CARRIER_CEILING {
            return Err(Error::SizeBoundExceeded { what: what.into(), size, limit: CARRIER_CEILING });
        }
        Ok(())
    }

    /// Materialised, sorted carrier of any object (cached per context).
    pub fn carrier(&self, obj: &Obj) -> Result<Arc<Vec<Elem>>> {
        if let Some(c) = self.carriers.lock().unwrap().get(obj) {
            return Ok(c.clone());
        }
        self.check_time()?;
        let mut c = match obj {
            Obj::Bang(a) => self.comonad()?.bang_carrier(self, a)?,
            _ => self.model.carrier(self, obj)?,
        };
        c.sort();
        c.dedup();
        let c = Arc::new(c);
        self.carriers.lock().unwrap().insert(obj.clone(), c.clone());
        Ok(c)
    }

    /// Per-context cache for model-specific tables keyed by object.
    pub fn memo<T: Any + Send + Sync>(&self, key: &'static str, obj: &Obj, build: impl FnOnce() -> Result<T>) -> Result<Arc<T>> {
        let k = (key, obj.clone());
        if let Some(v) = self.memo.lock().unwrap().get(&k) {
            if let Ok(t) = v.clone().downcast::<T>() {
                return Ok(t);
            }
        }
        let v = Arc::new(build()?);
        self.memo.lock().unwrap().insert(k, v.clone());
        Ok(v)
    }

    pub fn contains(&self, obj: &Obj, x: &Elem) -> Result<bool> {
        Ok(self.carrier(obj)?.binary_search(x).is_ok())
    }

    pub fn value(&self, obj: &Obj, x: &Elem) -> Result<u32> {
        match obj {
            Obj::Bang(a) => self.comonad()?.bang_value(self, a, x),
            _ => self.model.value(self, obj, x),
        }
    }

    pub fn act(&self, obj: &Obj, g: u32, x: &Elem) -> Result<Elem> {
        match obj {
            Obj::Bang(a) => self.comonad()?.bang_act(self, a, g, x),
            _ => self.model.act(self, obj, g, x),
        }
    }

    pub fn restrict(&self, obj: &Obj, x: &Elem, b: u32) -> Result<Option<Elem>> {
        match obj {
            Obj::Bang(a) => self.comonad()?.bang_restrict(self, a, x, b),
            _ => self.model.restrict(self, obj, x, b),
        }
    }

    /// Whether an element stays inside the truncation grade.
    pub fn in_grade(&self, x: &Elem) -> bool {
        self.grade.is_none_or(|k| x.width() <= k)
    }
}
