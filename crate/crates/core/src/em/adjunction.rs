//! Comonads induced by monoidal adjunctions `F -| U` between a cartesian
//! category `X` and the model, with `! = F U`.

use std::fmt;

use crate::diagrams::Mor;
use crate::elem::Elem;
use crate::error::{Error, Result};
use crate::fincat::laws::sample;
use crate::fincat::{Ctx, Obj};
use crate::linexp::ExpComonad;
use crate::report::{run_check, AxiomReport, Check, CheckRecord, Counterexample};

/// Objects of `X` reachable from the construction: `U a`, binary products
/// and the terminal object.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum XObj {
    U(Obj),
    Prod(Box<XObj>, Box<XObj>),
    One,
}

impl XObj {
    pub fn u(a: &Obj) -> Self {
        XObj::U(a.clone())
    }

    pub fn prod(s: XObj, t: XObj) -> Self {
        XObj::Prod(Box::new(s), Box::new(t))
    }
}

impl fmt::Display for XObj {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            XObj::U(a) => write!(f, "U({a})"),
            XObj::Prod(s, t) => write!(f, "({s} x {t})"),
            XObj::One => f.write_str("1"),
        }
    }
}

/// Pointwise map between `X`-objects (or their `F`-images).
pub type XKernel<'k> = &'k dyn Fn(&Elem) -> Result<Vec<Elem>>;

/// A monoidal adjunction given pointwise. `F` is strong monoidal with
/// structure `phi : F s (x) F t -> F (s x t)` and `phi0 : I -> F 1`; `U` is
/// lax monoidal with `mu : U a x U b -> U (a (x) b)` and `mu0 : 1 -> U I`.
pub trait Adjunction: Send + Sync {
    fn name(&self) -> String;

    /// Elements of `s`.
    fn x_carrier(&self, ctx: &Ctx, s: &XObj) -> Result<Vec<Elem>>;

    /// Elements of `F s`.
    fn f_carrier(&self, ctx: &Ctx, s: &XObj) -> Result<Vec<Elem>>;

    /// Model annotation of `y` in `F U a`.
    fn f_value(&self, ctx: &Ctx, a: &Obj, y: &Elem) -> Result<u32>;

    fn f_act(&self, _ctx: &Ctx, _a: &Obj, _g: u32, y: &Elem) -> Result<Elem> {
        Ok(y.clone())
    }

    fn f_restrict(&self, _ctx: &Ctx, _a: &Obj, _y: &Elem, _b: u32) -> Result<Option<Elem>> {
        Ok(None)
    }

    /// `F h` at `y`, for `h : s -> t`.
    fn f_map(&self, ctx: &Ctx, s: &XObj, t: &XObj, h: XKernel, y: &Elem) -> Result<Vec<Elem>>;

    /// `U f` at `x`.
    fn u_map(&self, ctx: &Ctx, f: &Mor, x: &Elem) -> Result<Vec<Elem>>;

    /// `eta_s : s -> U F s`
    fn unit(&self, ctx: &Ctx, s: &XObj, x: &Elem) -> Result<Vec<Elem>>;

    /// `eps'_a : F U a -> a`
    fn counit(&self, ctx: &Ctx, a: &Obj, y: &Elem) -> Result<Vec<Elem>>;

    fn phi(&self, ctx: &Ctx, s: &XObj, t: &XObj, y: &Elem) -> Result<Vec<Elem>>;

    fn phi_inv(&self, ctx: &Ctx, s: &XObj, t: &XObj, y: &Elem) -> Result<Vec<Elem>>;

    fn phi0(&self, ctx: &Ctx, x: &Elem) -> Result<Vec<Elem>>;

    fn phi0_inv(&self, ctx: &Ctx, y: &Elem) -> Result<Vec<Elem>>;

    fn mu(&self, ctx: &Ctx, a: &Obj, b: &Obj, x: &Elem) -> Result<Vec<Elem>>;

    fn mu0(&self, ctx: &Ctx, x: &Elem) -> Result<Vec<Elem>>;

    /// Diagonal `s -> s x s` of `X`.
    fn diag(&self, ctx: &Ctx, s: &XObj, x: &Elem) -> Result<Vec<Elem>>;

    /// Terminal map `s -> 1` of `X`.
    fn term(&self, ctx: &Ctx, s: &XObj, x: &Elem) -> Result<Vec<Elem>>;

    fn graded(&self) -> bool {
        false
    }
}

fn flat(xs: Vec<Elem>, f: impl Fn(&Elem) -> Result<Vec<Elem>>) -> Result<Vec<Elem>> {
    let mut out = Vec::new();
    for x in &xs {
        out.extend(f(x)?);
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// `! = F U` with `delta = F eta U`, `eps = eps'`, `m = F mu . phi`,
/// `m_I = F mu0 . phi0`, `d = phi^-1 . F diag` and `e = phi0^-1 . F term`.
pub struct AdjunctionComonad<'j> {
    pub adj: &'j dyn Adjunction,
}

impl<'j> AdjunctionComonad<'j> {
    pub fn new(adj: &'j dyn Adjunction) -> Self {
        AdjunctionComonad { adj }
    }
}

impl ExpComonad for AdjunctionComonad<'_> {
    fn name(&self) -> String {
        format!("FU[{}]", self.adj.name())
    }

    fn bang_carrier(&self, ctx: &Ctx, a: &Obj) -> Result<Vec<Elem>> {
        self.adj.f_carrier(ctx, &XObj::u(a))
    }

    fn bang_value(&self, ctx: &Ctx, a: &Obj, x: &Elem) -> Result<u32> {
        self.adj.f_value(ctx, a, x)
    }

    fn bang_act(&self, ctx: &Ctx, a: &Obj, g: u32, x: &Elem) -> Result<Elem> {
        self.adj.f_act(ctx, a, g, x)
    }

    fn bang_restrict(&self, ctx: &Ctx, a: &Obj, x: &Elem, b: u32) -> Result<Option<Elem>> {
        self.adj.f_restrict(ctx, a, x, b)
    }

    fn bang_map(&self, ctx: &Ctx, f: &Mor, y: &Elem) -> Result<Vec<Elem>> {
        let (a, b) = (f.src()?, f.tgt()?);
        self.adj.f_map(ctx, &XObj::U(a), &XObj::U(b), &|x| self.adj.u_map(ctx, f, x), y)
    }

    fn delta(&self, ctx: &Ctx, a: &Obj, y: &Elem) -> Result<Vec<Elem>> {
        let ua = XObj::u(a);
        self.adj.f_map(ctx, &ua, &XObj::U(Obj::bang(a.clone())), &|x| self.adj.unit(ctx, &ua, x), y)
    }

    fn epsilon(&self, ctx: &Ctx, a: &Obj, y: &Elem) -> Result<Vec<Elem>> {
        self.adj.counit(ctx, a, y)
    }

    fn m(&self, ctx: &Ctx, a: &Obj, b: &Obj, y: &Elem) -> Result<Vec<Elem>> {
        let (ua, ub) = (XObj::u(a), XObj::u(b));
        let prod = XObj::prod(ua.clone(), ub.clone());
        let tgt = XObj::U(Obj::tensor(a.clone(), b.clone()));
        flat(self.adj.phi(ctx, &ua, &ub, y)?, |z| self.adj.f_map(ctx, &prod, &tgt, &|x| self.adj.mu(ctx, a, b, x), z))
    }

    fn m_unit(&self, ctx: &Ctx, x: &Elem) -> Result<Vec<Elem>> {
        flat(self.adj.phi0(ctx, x)?, |z| self.adj.f_map(ctx, &XObj::One, &XObj::U(Obj::Unit), &|x| self.adj.mu0(ctx, x), z))
    }

    fn d(&self, ctx: &Ctx, a: &Obj, y: &Elem) -> Result<Vec<Elem>> {
        let ua = XObj::u(a);
        let prod = XObj::prod(ua.clone(), ua.clone());
        let fd = self.adj.f_map(ctx, &ua, &prod, &|x| self.adj.diag(ctx, &ua, x), y)?;
        flat(fd, |z| self.adj.phi_inv(ctx, &ua, &ua, z))
    }

    fn e(&self, ctx: &Ctx, a: &Obj, y: &Elem) -> Result<Vec<Elem>> {
        let ua = XObj::u(a);
        let fe = self.adj.f_map(ctx, &ua, &XObj::One, &|x| self.adj.term(ctx, &ua, x), y)?;
        flat(fe, |z| self.adj.phi0_inv(ctx, z))
    }

    fn graded(&self) -> bool {
        self.adj.graded()
    }
}

/// Sets into sliced sets: `F S = S` with every valuation `e`, and
/// `U A = {a : |a| = e}`.
#[derive(Clone, Debug)]
pub struct SliceAdjunction {
    pub unit: u32,
}

/// `F = U = id` on a model whose tensor is cartesian on literal pairs.
#[derive(Clone, Copy, Debug, Default)]
pub struct IdentityAdjunction;

fn pairs_of(xs: &[Elem], ys: &[Elem]) -> Vec<Elem> {
    xs.iter().flat_map(|x| ys.iter().map(move |y| Elem::pair(x.clone(), y.clone()))).collect()
}

fn set_carrier(ctx: &Ctx, s: &XObj, keep: &dyn Fn(&Obj, &Elem) -> Result<bool>) -> Result<Vec<Elem>> {
    match s {
        XObj::U(a) => {
            let mut out = Vec::new();
            for x in ctx.carrier(a)?.iter() {
                if keep(a, x)? {
                    out.push(x.clone());
                }
            }
            Ok(out)
        }
        XObj::Prod(s, t) => Ok(pairs_of(&set_carrier(ctx, s, keep)?, &set_carrier(ctx, t, keep)?)),
        XObj::One => Ok(vec![Elem::Star]),
    }
}

macro_rules! literal_set_adjunction {
    () => {
        fn f_map(&self, _ctx: &Ctx, _s: &XObj, _t: &XObj, h: XKernel, y: &Elem) -> Result<Vec<Elem>> {
            h(y)
        }

        fn u_map(&self, ctx: &Ctx, f: &Mor, x: &Elem) -> Result<Vec<Elem>> {
            ctx.image(f, x)
        }

        fn unit(&self, _ctx: &Ctx, _s: &XObj, x: &Elem) -> Result<Vec<Elem>> {
            Ok(vec![x.clone()])
        }

        fn counit(&self, _ctx: &Ctx, _a: &Obj, y: &Elem) -> Result<Vec<Elem>> {
            Ok(vec![y.clone()])
        }

        fn phi(&self, _ctx: &Ctx, _s: &XObj, _t: &XObj, y: &Elem) -> Result<Vec<Elem>> {
            Ok(vec![y.clone()])
        }

        fn phi_inv(&self, _ctx: &Ctx, _s: &XObj, _t: &XObj, y: &Elem) -> Result<Vec<Elem>> {
            Ok(vec![y.clone()])
        }

        fn phi0(&self, _ctx: &Ctx, x: &Elem) -> Result<Vec<Elem>> {
            Ok(vec![x.clone()])
        }

        fn phi0_inv(&self, _ctx: &Ctx, _y: &Elem) -> Result<Vec<Elem>> {
            Ok(vec![Elem::Star])
        }

        fn mu(&self, _ctx: &Ctx, _a: &Obj, _b: &Obj, x: &Elem) -> Result<Vec<Elem>> {
            Ok(vec![x.clone()])
        }

        fn mu0(&self, _ctx: &Ctx, _x: &Elem) -> Result<Vec<Elem>> {
            Ok(vec![Elem::Star])
        }

        fn diag(&self, _ctx: &Ctx, _s: &XObj, x: &Elem) -> Result<Vec<Elem>> {
            Ok(vec![Elem::pair(x.clone(), x.clone())])
        }

        fn term(&self, _ctx: &Ctx, _s: &XObj, _x: &Elem) -> Result<Vec<Elem>> {
            Ok(vec![Elem::Star])
        }
    };
}

impl Adjunction for SliceAdjunction {
    fn name(&self) -> String {
        "sets-to-slices".into()
    }

    fn x_carrier(&self, ctx: &Ctx, s: &XObj) -> Result<Vec<Elem>> {
        set_carrier(ctx, s, &|a, x| Ok(ctx.value(a, x)? == self.unit))
    }

    fn f_carrier(&self, ctx: &Ctx, s: &XObj) -> Result<Vec<Elem>> {
        self.x_carrier(ctx, s)
    }

    fn f_value(&self, _ctx: &Ctx, _a: &Obj, _y: &Elem) -> Result<u32> {
        Ok(self.unit)
    }

    literal_set_adjunction!();
}

impl Adjunction for IdentityAdjunction {
    fn name(&self) -> String {
        "identity".into()
    }

    fn x_carrier(&self, ctx: &Ctx, s: &XObj) -> Result<Vec<Elem>> {
        set_carrier(ctx, s, &|_, _| Ok(true))
    }

    fn f_carrier(&self, ctx: &Ctx, s: &XObj) -> Result<Vec<Elem>> {
        self.x_carrier(ctx, s)
    }

    fn f_value(&self, ctx: &Ctx, a: &Obj, y: &Elem) -> Result<u32> {
        ctx.value(a, y)
    }

    fn f_act(&self, ctx: &Ctx, a: &Obj, g: u32, y: &Elem) -> Result<Elem> {
        ctx.act(a, g, y)
    }

    fn f_restrict(&self, ctx: &Ctx, a: &Obj, y: &Elem, b: u32) -> Result<Option<Elem>> {
        ctx.restrict(a, y, b)
    }

    literal_set_adjunction!();
}

/// The forgetful/cofree adjunction of a comonad: `X` is the coalgebra
/// category, `U a = (!a, delta_a)` and `F` forgets the structure. All maps
/// are computed in `inner`, whose comonad is the one being reconstructed.
pub struct EmAdjunction<'a> {
    pub inner: Ctx<'a>,
}

impl<'a> EmAdjunction<'a> {
    pub fn new(inner: Ctx<'a>) -> Self {
        EmAdjunction { inner }
    }

    /// `F s` as a model object.
    fn f_obj(s: &XObj) -> Obj {
        match s {
            XObj::U(a) => Obj::bang(a.clone()),
            XObj::Prod(s, t) => Obj::tensor(Self::f_obj(s), Self::f_obj(t)),
            XObj::One => Obj::Unit,
        }
    }

    /// Coalgebra structure of `s`.
    fn alpha(&self, s: &XObj, x: &Elem) -> Result<Vec<Elem>> {
        match s {
            XObj::U(a) => self.inner.image(&Mor::Delta(a.clone()), x),
            XObj::Prod(s1, t1) => {
                let (p, q) = x.as_pair().ok_or_else(|| Error::NotInCarrier { elem: x.to_string(), obj: s.to_string() })?;
                let (ap, aq) = (self.alpha(s1, p)?, self.alpha(t1, q)?);
                flat(pairs_of(&ap, &aq), |w| self.inner.image(&Mor::M(Self::f_obj(s1), Self::f_obj(t1)), w))
            }
            XObj::One => self.inner.image(&Mor::MUnit, x),
        }
    }
}

impl Adjunction for EmAdjunction<'_> {
    fn name(&self) -> String {
        format!("coalgebras[{}]", self.inner.comonad().map(|c| c.name()).unwrap_or_default())
    }

    fn x_carrier(&self, _ctx: &Ctx, s: &XObj) -> Result<Vec<Elem>> {
        Ok(self.inner.carrier(&Self::f_obj(s))?.to_vec())
    }

    fn f_carrier(&self, ctx: &Ctx, s: &XObj) -> Result<Vec<Elem>> {
        self.x_carrier(ctx, s)
    }

    fn f_value(&self, _ctx: &Ctx, a: &Obj, y: &Elem) -> Result<u32> {
        self.inner.value(&Obj::bang(a.clone()), y)
    }

    fn f_act(&self, _ctx: &Ctx, a: &Obj, g: u32, y: &Elem) -> Result<Elem> {
        self.inner.act(&Obj::bang(a.clone()), g, y)
    }

    fn f_restrict(&self, _ctx: &Ctx, a: &Obj, y: &Elem, b: u32) -> Result<Option<Elem>> {
        self.inner.restrict(&Obj::bang(a.clone()), y, b)
    }

    fn f_map(&self, _ctx: &Ctx, _s: &XObj, _t: &XObj, h: XKernel, y: &Elem) -> Result<Vec<Elem>> {
        h(y)
    }

    fn u_map(&self, _ctx: &Ctx, f: &Mor, x: &Elem) -> Result<Vec<Elem>> {
        self.inner.image(&Mor::bang(f.clone()), x)
    }

    fn unit(&self, _ctx: &Ctx, s: &XObj, x: &Elem) -> Result<Vec<Elem>> {
        self.alpha(s, x)
    }

    fn counit(&self, _ctx: &Ctx, a: &Obj, y: &Elem) -> Result<Vec<Elem>> {
        self.inner.image(&Mor::Eps(a.clone()), y)
    }

    fn phi(&self, _ctx: &Ctx, _s: &XObj, _t: &XObj, y: &Elem) -> Result<Vec<Elem>> {
        Ok(vec![y.clone()])
    }

    fn phi_inv(&self, _ctx: &Ctx, _s: &XObj, _t: &XObj, y: &Elem) -> Result<Vec<Elem>> {
        Ok(vec![y.clone()])
    }

    fn phi0(&self, _ctx: &Ctx, x: &Elem) -> Result<Vec<Elem>> {
        Ok(vec![x.clone()])
    }

    fn phi0_inv(&self, _ctx: &Ctx, y: &Elem) -> Result<Vec<Elem>> {
        Ok(vec![y.clone()])
    }

    /// Transpose of `eps (x) eps` along the cofree coalgebra on `a (x) b`.
    fn mu(&self, _ctx: &Ctx, a: &Obj, b: &Obj, x: &Elem) -> Result<Vec<Elem>> {
        let (ba, bb) = (Obj::bang(a.clone()), Obj::bang(b.clone()));
        let path = Mor::seq([
            Mor::tensor(Mor::Delta(a.clone()), Mor::Delta(b.clone())),
            Mor::M(ba, bb),
            Mor::bang(Mor::tensor(Mor::Eps(a.clone()), Mor::Eps(b.clone()))),
        ]);
        self.inner.image(&path, x)
    }

    fn mu0(&self, _ctx: &Ctx, x: &Elem) -> Result<Vec<Elem>> {
        self.inner.image(&Mor::MUnit, x)
    }

    /// Induced comonoid `(eps (x) eps) . d . alpha` of the coalgebra `s`.
    fn diag(&self, _ctx: &Ctx, s: &XObj, x: &Elem) -> Result<Vec<Elem>> {
        let a = Self::f_obj(s);
        let tail = Mor::D(a.clone()).then(Mor::tensor(Mor::Eps(a.clone()), Mor::Eps(a)));
        flat(self.alpha(s, x)?, |w| self.inner.image(&tail, w))
    }

    fn term(&self, _ctx: &Ctx, s: &XObj, x: &Elem) -> Result<Vec<Elem>> {
        let e = Mor::E(Self::f_obj(s));
        flat(self.alpha(s, x)?, |w| self.inner.image(&e, w))
    }

    fn graded(&self) -> bool {
        self.inner.comonad().map(|c| c.graded()).unwrap_or(false)
    }
}

fn adj_fail(c: &mut Check, msg: String) {
    c.note.get_or_insert_with(|| msg.clone());
    c.fail(Counterexample::error(&Error::InvalidAdjunction(msg)));
}

fn expect(c: &mut Check, what: impl FnOnce() -> String, got: Vec<Elem>, want: Vec<Elem>) {
    c.tick();
    if got != want {
        adj_fail(c, format!("{}: got {got:?}, expected {want:?}", what()));
    }
}

/// Triangle identities, invertibility of `phi` and `phi0`, and the mate
/// conditions, on `U a` for sampled `a` (and `1`). `ctx` must carry the
/// induced comonad.
pub fn check_adjunction(ctx: &Ctx, adj: &dyn Adjunction, bound: usize) -> AxiomReport {
    let objs = sample(ctx, bound);
    let mut r = AxiomReport::default();
    r.push(run_check("adj.triangles", |c| {
        for a in &objs {
            let ua = XObj::u(a);
            let uba = XObj::U(Obj::bang(a.clone()));
            for y in adj.f_carrier(ctx, &ua)? {
                let fy = adj.f_map(ctx, &ua, &uba, &|x| adj.unit(ctx, &ua, x), &y)?;
                let back = flat(fy, |z| adj.counit(ctx, &Obj::bang(a.clone()), z))?;
                expect(c, || format!("eps'_F . F eta at {y} in F{ua}"), back, vec![y.clone()]);
            }
            for x in adj.x_carrier(ctx, &ua)? {
                let back = flat(adj.unit(ctx, &ua, &x)?, |z| adj.u_map(ctx, &Mor::Eps(a.clone()), z))?;
                expect(c, || format!("U eps' . eta_U at {x} in {ua}"), back, vec![x.clone()]);
            }
        }
        Ok(())
    }));
    r.push(run_check("adj.strong", |c| {
        for a in &objs {
            for b in &objs {
                let (ua, ub) = (XObj::u(a), XObj::u(b));
                let day = Obj::tensor(Obj::bang(a.clone()), Obj::bang(b.clone()));
                for y in ctx.carrier(&day)?.iter() {
                    let back = flat(adj.phi(ctx, &ua, &ub, y)?, |z| adj.phi_inv(ctx, &ua, &ub, z))?;
                    expect(c, || format!("phi^-1 . phi at {y}"), back, vec![y.clone()]);
                }
                for z in adj.f_carrier(ctx, &XObj::prod(ua.clone(), ub.clone()))? {
                    let back = flat(adj.phi_inv(ctx, &ua, &ub, &z)?, |y| adj.phi(ctx, &ua, &ub, y))?;
                    expect(c, || format!("phi . phi^-1 at {z}"), back, vec![z.clone()]);
                }
            }
        }
        for x in ctx.carrier(&Obj::Unit)?.iter() {
            let back = flat(adj.phi0(ctx, x)?, |z| adj.phi0_inv(ctx, z))?;
            expect(c, || format!("phi0^-1 . phi0 at {x}"), back, vec![x.clone()]);
        }
        for z in adj.f_carrier(ctx, &XObj::One)? {
            let back = flat(adj.phi0_inv(ctx, &z)?, |x| adj.phi0(ctx, x))?;
            expect(c, || format!("phi0 . phi0^-1 at {z}"), back, vec![z.clone()]);
        }
        Ok(())
    }));
    r.push(run_check("adj.mate", |c| {
        let comonad = AdjunctionComonad::new(adj);
        for a in &objs {
            for b in &objs {
                let ab = Obj::tensor(a.clone(), b.clone());
                let eps = Mor::tensor(Mor::Eps(a.clone()), Mor::Eps(b.clone()));
                for y in ctx.carrier(&Obj::tensor(Obj::bang(a.clone()), Obj::bang(b.clone())))?.iter() {
                    let got = flat(comonad.m(ctx, a, b, y)?, |z| adj.counit(ctx, &ab, z))?;
                    expect(c, || format!("eps'_(a(x)b) . F mu . phi at {y}"), got, ctx.image(&eps, y)?);
                }
            }
        }
        for x in ctx.carrier(&Obj::Unit)?.iter() {
            let got = flat(comonad.m_unit(ctx, x)?, |z| adj.counit(ctx, &Obj::Unit, z))?;
            expect(c, || format!("eps'_I . F mu0 . phi0 at {x}"), got, vec![x.clone()]);
        }
        Ok(())
    }));
    r
}

/// `InvalidAdjunction` with the first failing law, if any.
pub fn validate_adjunction(ctx: &Ctx, adj: &dyn Adjunction, bound: usize) -> Result<()> {
    for rec in check_adjunction(ctx, adj, bound).canonical() {
        if rec.status != crate::report::Status::Pass {
            return Err(Error::InvalidAdjunction(format!("{}: {}", rec.id, rec.note.unwrap_or_default())));
        }
    }
    Ok(())
}

/// Tabulates `!a`, `delta`, `eps`, `d`, `e`, `m`, `m_I` and `!f` for sampled
/// objects and homs in both contexts and reports the first difference.
pub fn compare_comonads(id: &str, left: &Ctx, right: &Ctx, bound: usize) -> CheckRecord {
    run_check(id, |c| {
        let objs = sample(left, bound);
        let mut maps: Vec<(String, Mor)> = vec![("m_I".into(), Mor::MUnit)];
        let with_comonoid = left.comonad()?.has_comonoid() && right.comonad()?.has_comonoid();
        for a in &objs {
            let ba = Obj::bang(a.clone());
            let (l, r) = (left.carrier(&ba)?, right.carrier(&ba)?);
            c.tick();
            if l != r {
                adj_fail(c, format!("carriers of {ba} differ: {l:?} vs {r:?}"));
                return Ok(());
            }
            for x in l.iter() {
                c.tick();
                let (lv, rv) = (left.value(&ba, x)?, right.value(&ba, x)?);
                if lv != rv {
                    adj_fail(c, format!("value of {x} in {ba}: {lv} vs {rv}"));
                }
            }
            maps.push((format!("delta_{a}"), Mor::Delta(a.clone())));
            maps.push((format!("eps_{a}"), Mor::Eps(a.clone())));
            if with_comonoid {
                maps.push((format!("d_{a}"), Mor::D(a.clone())));
                maps.push((format!("e_{a}"), Mor::E(a.clone())));
            }
            for b in &objs {
                maps.push((format!("m_{a},{b}"), Mor::M(a.clone(), b.clone())));
                for f in crate::fincat::homs::enumerate_homs(left, a, b)? {
                    maps.push((format!("!f for f : {a} -> {b}"), Mor::bang(Mor::named("f", f))));
                }
            }
        }
        for (what, mor) in maps {
            let (l, r) = (left.eval_path(&mor)?, right.eval_path(&mor)?);
            c.tick();
            if l != r {
                adj_fail(c, format!("{what} differs"));
                return Ok(());
            }
        }
        Ok(())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::{preset, SliceComonad, SliceModel};
    use crate::report::Status;

    #[test]
    fn slice_adjunction_validates_on_l3() {
        let m = SliceModel::new(preset("L3").unwrap());
        let adj = SliceAdjunction { unit: m.monoid.unit };
        let fu = AdjunctionComonad::new(&adj);
        let ctx = Ctx::new(&m, Some(&fu));
        for rec in check_adjunction(&ctx, &adj, 2).canonical() {
            assert_eq!(rec.status, Status::Pass, "{} {:?}", rec.id, rec.note);
        }
    }

    #[test]
    fn identity_adjunction_gives_the_diagonal() {
        let m = SliceModel::new(preset("T1").unwrap());
        let fu = AdjunctionComonad::new(&IdentityAdjunction);
        let ctx = Ctx::new(&m, Some(&fu));
        let a = Obj::base(m.object("A", &[("p", "e"), ("q", "e")]).unwrap());
        let x = Elem::sym("A.p");
        assert_eq!(ctx.image(&Mor::D(a.clone()), &x).unwrap(), vec![Elem::pair(x.clone(), x.clone())]);
        assert_eq!(ctx.image(&Mor::E(a.clone()), &x).unwrap(), vec![Elem::Star]);
        assert_eq!(ctx.carrier(&Obj::bang(a.clone())).unwrap(), ctx.carrier(&a).unwrap());
    }

    #[test]
    fn a_broken_counit_is_rejected() {
        struct Bad(SliceAdjunction);
        impl Adjunction for Bad {
            fn name(&self) -> String {
                "bad".into()
            }
            fn x_carrier(&self, ctx: &Ctx, s: &XObj) -> Result<Vec<Elem>> {
                self.0.x_carrier(ctx, s)
            }
            fn f_carrier(&self, ctx: &Ctx, s: &XObj) -> Result<Vec<Elem>> {
                self.0.f_carrier(ctx, s)
            }
            fn f_value(&self, ctx: &Ctx, a: &Obj, y: &Elem) -> Result<u32> {
                self.0.f_value(ctx, a, y)
            }
            fn f_map(&self, ctx: &Ctx, s: &XObj, t: &XObj, h: XKernel, y: &Elem) -> Result<Vec<Elem>> {
                self.0.f_map(ctx, s, t, h, y)
            }
            fn u_map(&self, ctx: &Ctx, f: &Mor, x: &Elem) -> Result<Vec<Elem>> {
                self.0.u_map(ctx, f, x)
            }
            fn unit(&self, ctx: &Ctx, s: &XObj, x: &Elem) -> Result<Vec<Elem>> {
                self.0.unit(ctx, s, x)
            }
            fn counit(&self, _ctx: &Ctx, _a: &Obj, _y: &Elem) -> Result<Vec<Elem>> {
                Ok(Vec::new())
            }
            fn phi(&self, ctx: &Ctx, s: &XObj, t: &XObj, y: &Elem) -> Result<Vec<Elem>> {
                self.0.phi(ctx, s, t, y)
            }
            fn phi_inv(&self, ctx: &Ctx, s: &XObj, t: &XObj, y: &Elem) -> Result<Vec<Elem>> {
                self.0.phi_inv(ctx, s, t, y)
            }
            fn phi0(&self, ctx: &Ctx, x: &Elem) -> Result<Vec<Elem>> {
                self.0.phi0(ctx, x)
            }
            fn phi0_inv(&self, ctx: &Ctx, y: &Elem) -> Result<Vec<Elem>> {
                self.0.phi0_inv(ctx, y)
            }
            fn mu(&self, ctx: &Ctx, a: &Obj, b: &Obj, x: &Elem) -> Result<Vec<Elem>> {
                self.0.mu(ctx, a, b, x)
            }
            fn mu0(&self, ctx: &Ctx, x: &Elem) -> Result<Vec<Elem>> {
                self.0.mu0(ctx, x)
            }
            fn diag(&self, ctx: &Ctx, s: &XObj, x: &Elem) -> Result<Vec<Elem>> {
                self.0.diag(ctx, s, x)
            }
            fn term(&self, ctx: &Ctx, s: &XObj, x: &Elem) -> Result<Vec<Elem>> {
                self.0.term(ctx, s, x)
            }
        }
        let m = SliceModel::new(preset("L3").unwrap());
        let adj = Bad(SliceAdjunction { unit: m.monoid.unit });
        let fu = AdjunctionComonad::new(&adj);
        let ctx = Ctx::new(&m, Some(&fu));
        let r = check_adjunction(&ctx, &adj, 1);
        assert_eq!(r.get("adj.triangles").unwrap().status, Status::Fail);
        let direct = SliceComonad::new(&m);
        let dctx = Ctx::new(&m, Some(&direct));
        assert_eq!(compare_comonads("x", &ctx, &dctx, 1).status, Status::Fail);
    }
}
