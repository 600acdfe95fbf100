//! Presheaves on a finite monoidal poset under Day convolution, with the
//! exponential induced by a strong monoidal map out of a meet-semilattice.
//!
//! A presheaf element is `Tag(b, _)`, `b` being the base object it lives
//! over. Tensor and `!` elements are coend classes, stored as their least
//! representative.

pub mod adjunction;
pub mod base;
pub mod coend;
pub mod cross;

use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

use crate::elem::Elem;
use crate::error::{Error, Result};
use crate::fincat::{Braiding, Ctx, FinMorphism, FinObject, Kernel, Model, MorKind, Obj, Payload, Product};
use crate::models::algebra::preset;

pub use adjunction::DayAdjunction;
pub use base::{MeetSemilattice, MonoidalPoset};
pub use coend::CoendComonad;
pub use cross::{check_day_cross_model, check_day_routes, presheaf_of};

pub const DAY_PRESETS: [&str; 3] = ["L3", "L3a", "C2"];

/// Base, indexing semilattice `X` and `F : X -> B` on objects.
#[derive(Clone, Debug)]
pub struct DayModel {
    pub base: MonoidalPoset,
    pub xcat: MeetSemilattice,
    pub f: Vec<u32>,
}

/// Tag of a presheaf element.
pub(crate) fn fiber(x: &Elem) -> Result<u32> {
    x.as_tag().map(|(b, _)| b).ok_or_else(|| Error::NotInCarrier { elem: x.to_string(), obj: "a presheaf".into() })
}

pub(crate) fn untag(x: &Elem) -> Result<&Elem> {
    x.as_tag().map(|(_, inner)| inner).ok_or_else(|| Error::NotInCarrier { elem: x.to_string(), obj: "a presheaf".into() })
}

fn missing(x: &Elem, b: u32, obj: &Obj) -> Error {
    Error::NotInCarrier { elem: format!("{x} restricted to {b}"), obj: obj.to_string() }
}

/// Coend classes `(b, raw)` with least representatives; the carrier lists
/// `Tag(b, rep)`.
#[derive(Debug, Default)]
pub(crate) struct Quotient {
    pub carrier: Vec<Elem>,
    canon: HashMap<(u32, Elem), Elem>,
}

impl Quotient {
    pub fn get(&self, b: u32, raw: &Elem) -> Result<Elem> {
        self.canon
            .get(&(b, raw.clone()))
            .cloned()
            .ok_or_else(|| Error::NotInCarrier { elem: format!("{raw} at {b}"), obj: "a coend".into() })
    }

    /// Union-find over `raw`, merging each entry with its `links`.
    pub fn by_union(raw: Vec<(u32, Elem)>, links: impl Fn(u32, &Elem) -> Result<Vec<Elem>>) -> Result<Self> {
        let index: HashMap<&(u32, Elem), usize> = raw.iter().enumerate().map(|(i, k)| (k, i)).collect();
        let mut parent: Vec<usize> = (0..raw.len()).collect();
        fn root(p: &mut [usize], mut i: usize) -> usize {
            while p[i] != i {
                p[i] = p[p[i]];
                i = p[i];
            }
            i
        }
        for (i, (b, x)) in raw.iter().enumerate() {
            for y in links(*b, x)? {
                let j = *index.get(&(*b, y.clone())).ok_or_else(|| Error::NotInCarrier { elem: y.to_string(), obj: "a coend".into() })?;
                let (ri, rj) = (root(&mut parent, i), root(&mut parent, j));
                parent[ri.max(rj)] = ri.min(rj);
            }
        }
        let mut rep: HashMap<usize, usize> = HashMap::new();
        for i in 0..raw.len() {
            let r = root(&mut parent, i);
            let best = rep.entry(r).or_insert(i);
            if raw[i].1 < raw[*best].1 {
                *best = i;
            }
        }
        let mut q = Quotient::default();
        let mut carrier = BTreeSet::new();
        for i in 0..raw.len() {
            let (b, x) = &raw[i];
            let r = &raw[rep[&root(&mut parent, i)]].1;
            let e = Elem::tag(*b, r.clone());
            carrier.insert(e.clone());
            q.canon.insert((*b, x.clone()), e);
        }
        q.carrier = carrier.into_iter().collect();
        Ok(q)
    }
}

impl DayModel {
    /// Checks `F` is monotone with `F top = I` and `F (x /\ y) = F x (x) F y`.
    pub fn new(base: MonoidalPoset, xcat: MeetSemilattice, f: Vec<u32>) -> Result<Self> {
        if f.len() != xcat.len() || f.iter().any(|&b| b as usize >= base.len()) {
            return Err(Error::NotStrongMonoidal(format!("F must send each of the {} points of {} to a base object", xcat.len(), xcat.name)));
        }
        let (xn, bn) = (&xcat.names, &base.names);
        if f[xcat.top as usize] != base.unit {
            return Err(Error::NotStrongMonoidal(format!("F {} = {}, not the unit", xn[xcat.top as usize], bn[f[xcat.top as usize] as usize])));
        }
        for x in 0..xcat.len() as u32 {
            for y in 0..xcat.len() as u32 {
                let (fx, fy) = (f[x as usize], f[y as usize]);
                if xcat.le(x, y) && !base.le(fx, fy) {
                    return Err(Error::NotStrongMonoidal(format!("F is not monotone at {} <= {}", xn[x as usize], xn[y as usize])));
                }
                let fm = f[xcat.meet(x, y) as usize];
                if fm != base.mul(fx, fy) {
                    return Err(Error::NotStrongMonoidal(format!(
                        "F ({} /\\ {}) = {} but F {} (x) F {} = {}",
                        xn[x as usize],
                        xn[y as usize],
                        bn[fm as usize],
                        xn[x as usize],
                        xn[y as usize],
                        bn[base.mul(fx, fy) as usize]
                    )));
                }
            }
        }
        Ok(DayModel { base, xcat, f })
    }

    /// Discrete base, one-point `X` and `F top = I`.
    pub fn discrete(m: &crate::models::FinMonoid) -> Self {
        let base = MonoidalPoset::discrete(m);
        let f = vec![base.unit];
        DayModel { base, xcat: MeetSemilattice::point(), f }
    }

    pub fn fx(&self, x: u32) -> u32 {
        self.f[x as usize]
    }

    /// A presheaf from `(token, base object)` rows and `(token, base
    /// object, token)` restrictions, one for every strictly smaller object.
    pub fn object(&self, id: &str, rows: &[(&str, &str)], restrictions: &[(&str, &str, &str)]) -> Result<FinObject> {
        let b = |s: &str| self.base.index(s).ok_or_else(|| Error::InvalidObject(format!("{id}: unknown base object {s}")));
        let elem = |t: &str| Elem::sym(format!("{id}.{t}"));
        let mut fib = HashMap::new();
        let mut elems = Vec::new();
        for (t, s) in rows {
            fib.insert(*t, b(s)?);
            elems.push((elem(t), b(s)?));
        }
        let mut table = HashMap::new();
        for (t, s, u) in restrictions {
            let (ft, fu) = (
                *fib.get(t).ok_or_else(|| Error::InvalidObject(format!("{id}: unknown token {t}")))?,
                *fib.get(u).ok_or_else(|| Error::InvalidObject(format!("{id}: unknown token {u}")))?,
            );
            table.insert((Elem::tag(ft, elem(t)), b(s)?), Elem::tag(fu, elem(u)));
        }
        self.presheaf(id.to_string(), elems.into_iter().map(|(x, f)| Elem::tag(f, x)).collect(), |x, b| {
            table.get(&(x.clone(), b)).cloned().ok_or_else(|| Error::InvalidObject(format!("{id}: no restriction of {x} to {}", self.base.names[b as usize])))
        })
    }

    /// Builds and validates a presheaf from tagged elements and a
    /// restriction function queried for every `b < fiber`.
    pub(crate) fn presheaf(&self, id: String, mut carrier: Vec<Elem>, restrict: impl Fn(&Elem, u32) -> Result<Elem>) -> Result<FinObject> {
        carrier.sort();
        let n = carrier.len();
        let mut fib = Vec::with_capacity(n);
        let mut res = Vec::with_capacity(n);
        for x in &carrier {
            let c = fiber(x)?;
            if c as usize >= self.base.len() {
                return Err(Error::InvalidObject(format!("{id}: {x} lies over no base object")));
            }
            fib.push(c);
            let mut row = Vec::new();
            for b in self.base.down(c).filter(|&b| b != c) {
                let y = restrict(x, b)?;
                let j = carrier.binary_search(&y).map_err(|_| Error::InvalidObject(format!("{id}: restriction {y} of {x} is not an element")))?;
                if fiber(&y)? != b {
                    return Err(Error::InvalidObject(format!("{id}: restriction of {x} to {b} lies over {}", fiber(&y)?)));
                }
                row.push((b, j as u32));
            }
            res.push(row);
        }
        let o = FinObject { id, carrier, payload: Payload::Presheaf { fiber: fib, restrict: res } };
        o.validate()?;
        if let Some(w) = self.functoriality_failure(&o) {
            return Err(Error::InvalidObject(format!("{}: not functorial at {w}", o.id)));
        }
        Ok(o)
    }

    fn base_restrict(&self, o: &FinObject, x: &Elem, b: u32) -> Result<Option<Elem>> {
        let Payload::Presheaf { fiber: fib, restrict } = &o.payload else {
            return Err(Error::InvalidObject(format!("{} is not a presheaf", o.id)));
        };
        let i = o.index_of(x).ok_or_else(|| Error::NotInCarrier { elem: x.to_string(), obj: o.id.clone() })?;
        if b == fib[i] {
            return Ok(Some(x.clone()));
        }
        Ok(restrict[i].iter().find(|(c, _)| *c == b).map(|&(_, j)| o.carrier[j as usize].clone()))
    }

    /// First `(x, b', b)` with `x|b|b' != x|b'`, for `b' < b < fiber x`.
    fn functoriality_failure(&self, o: &FinObject) -> Option<String> {
        for x in &o.carrier {
            let c = fiber(x).ok()?;
            for b in self.base.down(c) {
                let xb = self.base_restrict(o, x, b).ok().flatten()?;
                for b2 in self.base.down(b) {
                    if self.base_restrict(o, &xb, b2).ok().flatten() != self.base_restrict(o, x, b2).ok().flatten() {
                        return Some(format!("{x} via {}", self.base.names[b as usize]));
                    }
                }
            }
        }
        None
    }

    /// Coend quotient for the Day tensor `a (x) b`.
    pub(crate) fn day(&self, ctx: &Ctx, a: &Obj, b: &Obj) -> Result<Arc<Quotient>> {
        let key = Obj::tensor(a.clone(), b.clone());
        ctx.memo("day-tensor", &key, || {
            let (ca, cb) = (ctx.carrier(a)?, ctx.carrier(b)?);
            ctx.guard("day tensor", ca.len() as u128 * cb.len() as u128 * self.base.len() as u128)?;
            let mut raw = Vec::new();
            for x in ca.iter() {
                let fx = fiber(x)?;
                for y in cb.iter() {
                    let t = self.base.mul(fx, fiber(y)?);
                    raw.extend(self.base.down(t).map(|c| (c, Elem::pair(x.clone(), y.clone()))));
                }
            }
            Quotient::by_union(raw, |c, p| {
                let (x, y) = p.as_pair().expect("raw pair");
                let (fx, fy) = (fiber(x)?, fiber(y)?);
                let mut out = Vec::new();
                for b1 in self.base.down(fx) {
                    for b2 in self.base.down(fy) {
                        if (b1, b2) != (fx, fy) && self.base.le(c, self.base.mul(b1, b2)) {
                            let x2 = ctx.restrict(a, x, b1)?.ok_or_else(|| missing(x, b1, a))?;
                            let y2 = ctx.restrict(b, y, b2)?.ok_or_else(|| missing(y, b2, b))?;
                            out.push(Elem::pair(x2, y2));
                        }
                    }
                }
                Ok(out)
            })
        })
    }

    /// The class of `(x, y)` in `(a (x) b)(c)`.
    pub(crate) fn day_class(&self, ctx: &Ctx, a: &Obj, b: &Obj, c: u32, x: &Elem, y: &Elem) -> Result<Elem> {
        self.day(ctx, a, b)?.get(c, &Elem::pair(x.clone(), y.clone()))
    }

    fn pair_of(x: &Elem) -> Result<(u32, &Elem, &Elem)> {
        let (c, inner) = x.as_tag().ok_or_else(|| Error::NotInCarrier { elem: x.to_string(), obj: "a Day tensor".into() })?;
        let (p, q) = inner.as_pair().ok_or_else(|| Error::NotInCarrier { elem: x.to_string(), obj: "a Day tensor".into() })?;
        Ok((c, p, q))
    }

    /// Every presheaf with at most `n` elements, up to isomorphism.
    fn presheaves(&self, n: usize) -> Vec<FinObject> {
        let nb = self.base.len();
        let pairs = self.base.strict_pairs();
        let mut sizes: Vec<Vec<usize>> = vec![vec![]];
        for _ in 0..nb {
            sizes = sizes.into_iter().flat_map(|s| (0..=n).map(move |k| [s.clone(), vec![k]].concat())).collect();
        }
        sizes.retain(|s| s.iter().sum::<usize>() <= n);
        sizes.sort_by_key(|s| (s.iter().sum::<usize>(), s.iter().enumerate().flat_map(|(b, &k)| std::iter::repeat_n(b, k)).collect::<Vec<_>>()));
        let mut out = Vec::new();
        for s in sizes {
            if pairs.iter().any(|&(c, b)| s[c as usize] > 0 && s[b as usize] == 0) {
                continue;
            }
            let tables = restriction_tables(&s, &pairs);
            let mut seen = BTreeSet::new();
            let mut shapes = Vec::new();
            for t in tables {
                if !functorial(&t, &s, &pairs, &self.base) {
                    continue;
                }
                if seen.insert(canonical(&t, &s, &pairs)) {
                    shapes.push(t);
                }
            }
            let stem = std::iter::once("G".to_string())
                .chain(s.iter().enumerate().flat_map(|(b, &k)| std::iter::repeat_n(self.base.names[b].clone(), k)))
                .collect::<Vec<_>>()
                .join("_");
            let many = shapes.len() > 1;
            for (k, t) in shapes.into_iter().enumerate() {
                let id = if many { format!("{stem}_r{k}") } else { stem.clone() };
                let name = |b: usize, i: usize| Elem::tag(b as u32, Elem::sym(format!("{id}.x{b}_{i}")));
                let carrier: Vec<Elem> = (0..nb).flat_map(|b| (0..s[b]).map(move |i| name(b, i))).collect();
                let o = self.presheaf(id.clone(), carrier, |x, b| {
                    let c = fiber(x)? as usize;
                    let Elem::Sym(tok) = untag(x)? else { unreachable!() };
                    let i: usize = tok.rsplit('_').next().and_then(|d| d.parse().ok()).expect("sample token");
                    let p = pairs.iter().position(|&(c2, b2)| c2 as usize == c && b2 == b).expect("strict pair");
                    Ok(name(b as usize, t[p][i]))
                });
                out.push(o.expect("sampled presheaf"));
            }
        }
        out
    }
}

/// All choices of maps `[s c] -> [s b]` for each strict pair.
fn restriction_tables(s: &[usize], pairs: &[(u32, u32)]) -> Vec<Vec<Vec<usize>>> {
    let mut tables: Vec<Vec<Vec<usize>>> = vec![vec![]];
    for &(c, b) in pairs {
        let (sc, sb) = (s[c as usize], s[b as usize]);
        let mut maps: Vec<Vec<usize>> = vec![vec![]];
        for _ in 0..sc {
            maps = maps.into_iter().flat_map(|m| (0..sb).map(move |j| [m.clone(), vec![j]].concat())).collect();
        }
        tables = tables.into_iter().flat_map(|t| maps.iter().map(move |m| [t.clone(), vec![m.clone()]].concat())).collect();
    }
    tables
}

fn functorial(t: &[Vec<usize>], s: &[usize], pairs: &[(u32, u32)], base: &MonoidalPoset) -> bool {
    let at = |c: u32, b: u32| pairs.iter().position(|&p| p == (c, b));
    for (p, &(c, b)) in pairs.iter().enumerate() {
        for (q, &(b1, b2)) in pairs.iter().enumerate() {
            if b1 != b || !base.le(b2, c) {
                continue;
            }
            let r = at(c, b2).expect("transitive");
            if (0..s[c as usize]).any(|i| t[q][t[p][i]] != t[r][i]) {
                return false;
            }
        }
    }
    true
}

/// Least relabelling of a restriction table under fibrewise permutations.
fn canonical(t: &[Vec<usize>], s: &[usize], pairs: &[(u32, u32)]) -> Vec<Vec<usize>> {
    fn perms(k: usize) -> Vec<Vec<usize>> {
        if k == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in perms(k - 1) {
            for pos in 0..k {
                let mut q = p.clone();
                q.insert(pos, k - 1);
                out.push(q);
            }
        }
        out
    }
    let mut choices: Vec<Vec<Vec<usize>>> = vec![vec![]];
    for &k in s {
        choices = choices.into_iter().flat_map(|c| perms(k).into_iter().map(move |p| [c.clone(), vec![p]].concat())).collect();
    }
    choices
        .iter()
        .map(|pi| {
            pairs
                .iter()
                .enumerate()
                .map(|(p, &(c, b))| {
                    let mut row = vec![0; s[c as usize]];
                    for (i, &j) in t[p].iter().enumerate() {
                        row[pi[c as usize][i]] = pi[b as usize][j];
                    }
                    row
                })
                .collect()
        })
        .min()
        .unwrap_or_default()
}

/// Named instances: `L3a` orders L3 by `a <= b`, `a <= e` and indexes `!`
/// by the two-point chain sent to `a <= e`; other names are discrete
/// monoid presets over the point.
pub fn day_preset(name: &str) -> Option<DayModel> {
    if name == "L3a" {
        let l3 = preset("L3")?;
        let base = MonoidalPoset::ordered("L3a", &l3, &[("a", "b"), ("a", "e")]).ok()?;
        let xcat = MeetSemilattice::ordered("chain2", &["bot", "top"], &[("bot", "top")]).ok()?;
        let f = vec![base.index("a")?, base.unit];
        return DayModel::new(base, xcat, f).ok();
    }
    preset(name).map(|m| DayModel::discrete(&m))
}

impl Model for DayModel {
    fn name(&self) -> String {
        format!("day-presheaf/{}/{}", self.base.name, self.xcat.name)
    }

    fn mor_kind(&self) -> MorKind {
        MorKind::Function
    }

    fn sample_objects(&self, max_carrier: usize) -> Vec<Arc<FinObject>> {
        self.presheaves(max_carrier).into_iter().map(Arc::new).collect()
    }

    fn carrier(&self, ctx: &Ctx, obj: &Obj) -> Result<Vec<Elem>> {
        match obj {
            Obj::Base(o) => Ok(o.carrier.clone()),
            Obj::Unit => Ok(self.base.down(self.base.unit).map(|b| Elem::tag(b, Elem::Star)).collect()),
            Obj::Tensor(a, b) => Ok(self.day(ctx, a, b)?.carrier.clone()),
            Obj::Bang(_) => ctx.carrier(obj).map(|c| c.to_vec()),
        }
    }

    fn value(&self, ctx: &Ctx, obj: &Obj, x: &Elem) -> Result<u32> {
        match obj {
            Obj::Bang(_) => ctx.value(obj, x),
            _ => fiber(x),
        }
    }

    fn restrict(&self, ctx: &Ctx, obj: &Obj, x: &Elem, b: u32) -> Result<Option<Elem>> {
        let c = fiber(x)?;
        if b == c {
            return Ok(Some(x.clone()));
        }
        if !self.base.le(b, c) {
            return Ok(None);
        }
        match obj {
            Obj::Base(o) => self.base_restrict(o, x, b),
            Obj::Unit => Ok(Some(Elem::tag(b, Elem::Star))),
            Obj::Tensor(l, r) => Ok(Some(self.day(ctx, l, r)?.get(b, untag(x)?)?)),
            Obj::Bang(_) => ctx.restrict(obj, x, b),
        }
    }

    /// Fibre-preserving natural maps.
    fn is_hom(&self, ctx: &Ctx, m: &FinMorphism) -> Result<bool> {
        let (cs, ct) = (ctx.carrier(&m.src)?, ctx.carrier(&m.tgt)?);
        if !m.is_function_on(&cs) || !m.is_within(&cs, &ct) {
            return Ok(false);
        }
        for (x, y) in m.pairs() {
            let c = fiber(x)?;
            if fiber(y)? != c {
                return Ok(false);
            }
            for b in self.base.down(c).filter(|&b| b != c) {
                let xb = ctx.restrict(&m.src, x, b)?.ok_or_else(|| missing(x, b, &m.src))?;
                let yb = ctx.restrict(&m.tgt, y, b)?.ok_or_else(|| missing(y, b, &m.tgt))?;
                if m.image(&xb) != [yb] {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    fn enumerate_homs(&self, ctx: &Ctx, a: &Obj, b: &Obj) -> Option<Result<Vec<FinMorphism>>> {
        Some((|| {
            let (ca, cb) = (ctx.carrier(a)?, ctx.carrier(b)?);
            let mut choices = Vec::with_capacity(ca.len());
            let mut space: u128 = 1;
            for x in ca.iter() {
                let c = fiber(x)?;
                let opts: Vec<&Elem> = cb.iter().filter(|y| fiber(y).ok() == Some(c)).collect();
                space = space.saturating_mul(opts.len() as u128);
                choices.push(opts);
            }
            if space > ctx.limits.max_hom_search {
                return Err(Error::SizeBoundExceeded { what: format!("homs {a} -> {b}"), size: space, limit: ctx.limits.max_hom_search });
            }
            let mut out = Vec::new();
            if space == 0 {
                return Ok(out);
            }
            let mut pick = vec![0usize; ca.len()];
            loop {
                ctx.check_time()?;
                let pairs = ca.iter().zip(&pick).zip(&choices).map(|((x, &i), o)| (x.clone(), o[i].clone()));
                let f = FinMorphism::from_pairs(a.clone(), b.clone(), MorKind::Function, pairs);
                if self.is_hom(ctx, &f)? {
                    out.push(f);
                }
                let mut i = 0;
                while i < pick.len() {
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
            Ok(out)
        })())
    }

    fn tensor_image(&self, ctx: &Ctx, _src: (&Obj, &Obj), tgt: (&Obj, &Obj), x: &Elem, f: Kernel, g: Kernel) -> Result<Vec<Elem>> {
        let (c, p, q) = Self::pair_of(x)?;
        let mut out = BTreeSet::new();
        for u in f(p)? {
            for v in g(q)? {
                out.insert(self.day_class(ctx, tgt.0, tgt.1, c, &u, &v)?);
            }
        }
        Ok(out.into_iter().collect())
    }

    fn assoc_image(&self, ctx: &Ctx, a: &Obj, b: &Obj, c: &Obj, x: &Elem, inverse: bool) -> Result<Elem> {
        let (t, l, r) = Self::pair_of(x)?;
        if inverse {
            let (_, y, z) = Self::pair_of(r)?;
            let xy = self.day_class(ctx, a, b, self.base.mul(fiber(l)?, fiber(y)?), l, y)?;
            self.day_class(ctx, &Obj::tensor(a.clone(), b.clone()), c, t, &xy, z)
        } else {
            let (_, w, y) = Self::pair_of(l)?;
            let yz = self.day_class(ctx, b, c, self.base.mul(fiber(y)?, fiber(r)?), y, r)?;
            self.day_class(ctx, a, &Obj::tensor(b.clone(), c.clone()), t, w, &yz)
        }
    }

    fn lunit_image(&self, ctx: &Ctx, a: &Obj, x: &Elem, inverse: bool) -> Result<Elem> {
        if inverse {
            return self.day_class(ctx, &Obj::Unit, a, fiber(x)?, &Elem::tag(self.base.unit, Elem::Star), x);
        }
        let (c, _, y) = Self::pair_of(x)?;
        ctx.restrict(a, y, c)?.ok_or_else(|| missing(y, c, a))
    }

    fn runit_image(&self, ctx: &Ctx, a: &Obj, x: &Elem, inverse: bool) -> Result<Elem> {
        if inverse {
            return self.day_class(ctx, a, &Obj::Unit, fiber(x)?, x, &Elem::tag(self.base.unit, Elem::Star));
        }
        let (c, y, _) = Self::pair_of(x)?;
        ctx.restrict(a, y, c)?.ok_or_else(|| missing(y, c, a))
    }

    fn braiding(&self) -> Braiding {
        if self.base.is_commutative() {
            Braiding::Symmetric
        } else {
            Braiding::None
        }
    }

    fn braid_image(&self, ctx: &Ctx, a: &Obj, b: &Obj, x: &Elem, inverse: bool) -> Result<Vec<Elem>> {
        if !self.base.is_commutative() {
            return Err(Error::Unsupported(format!("{} is not symmetric", self.name())));
        }
        let (c, p, q) = Self::pair_of(x)?;
        let (l, r) = if inverse { (a, b) } else { (b, a) };
        Ok(vec![self.day_class(ctx, l, r, c, q, p)?])
    }

    fn payload_laws(&self) -> Vec<(String, Option<String>)> {
        let base = MonoidalPoset::new(&self.base.name, self.base.names.clone(), self.base.leq.clone(), self.base.tensor.clone());
        let xcat = MeetSemilattice::new(&self.xcat.name, self.xcat.names.clone(), self.xcat.leq.clone());
        let f = DayModel::new(self.base.clone(), self.xcat.clone(), self.f.clone());
        vec![
            (format!("{} is a monoidal poset", self.base.name), base.err().map(|e| e.to_string())),
            (format!("{} is a meet-semilattice", self.xcat.name), xcat.err().map(|e| e.to_string())),
            ("F is strong monoidal".into(), f.err().map(|e| e.to_string())),
        ]
    }

    /// Pointwise product.
    fn product(&self, ctx: &Ctx, a: &Obj, b: &Obj) -> Option<Result<Product>> {
        Some((|| {
            let id = |o: &Obj| match o {
                Obj::Base(o) => Ok(o.id.clone()),
                other => Err(Error::Unsupported(format!("{other} is not a base object"))),
            };
            let (ca, cb) = (ctx.carrier(a)?, ctx.carrier(b)?);
            let mut carrier = Vec::new();
            for x in ca.iter() {
                for y in cb.iter() {
                    if fiber(x)? == fiber(y)? {
                        carrier.push(Elem::tag(fiber(x)?, Elem::pair(x.clone(), y.clone())));
                    }
                }
            }
            let o = self.presheaf(format!("{}_x_{}", id(a)?, id(b)?), carrier, |z, c| {
                let (x, y) = untag(z)?.as_pair().expect("product element");
                let xc = ctx.restrict(a, x, c)?.ok_or_else(|| missing(x, c, a))?;
                let yc = ctx.restrict(b, y, c)?.ok_or_else(|| missing(y, c, b))?;
                Ok(Elem::tag(c, Elem::pair(xc, yc)))
            })?;
            let p = Obj::base(o);
            let carrier = ctx.carrier(&p)?;
            let proj = |first: bool| {
                let pairs = carrier.iter().map(|z| {
                    let (x, y) = untag(z).expect("tagged").as_pair().expect("product element");
                    (z.clone(), if first { x.clone() } else { y.clone() })
                });
                FinMorphism::from_pairs(p.clone(), if first { a.clone() } else { b.clone() }, MorKind::Function, pairs)
            };
            Ok(Product { obj: p.clone(), pi1: proj(true), pi2: proj(false) })
        })())
    }

    fn terminal(&self, _ctx: &Ctx) -> Option<Result<Obj>> {
        let one = |b: u32| Elem::tag(b, Elem::sym(format!("One.{}", self.base.names[b as usize])));
        let carrier = (0..self.base.len() as u32).map(one).collect();
        Some(self.presheaf("One".into(), carrier, |_, b| Ok(one(b))).map(Obj::base))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagrams::Mor;
    use crate::fincat::homs::brute_force_homs;

    fn l3a() -> DayModel {
        day_preset("L3a").unwrap()
    }

    #[test]
    fn strong_monoidality_is_enforced() {
        let m = l3a();
        let e = m.base.unit;
        let err = DayModel::new(m.base.clone(), m.xcat.clone(), vec![e, e]).map(|_| ());
        assert!(err.is_ok());
        let b = m.base.index("b").unwrap();
        let err = DayModel::new(m.base.clone(), m.xcat.clone(), vec![b, e]).unwrap_err();
        assert!(matches!(err, Error::NotStrongMonoidal(_)), "{err}");
        let err = DayModel::new(m.base.clone(), m.xcat.clone(), vec![e, b]).unwrap_err();
        assert!(matches!(err, Error::NotStrongMonoidal(_)));
    }

    #[test]
    fn restrictions_must_compose() {
        let m = l3a();
        let ok = m.object("G", &[("p", "e"), ("q", "a")], &[("p", "a", "q")]);
        assert!(ok.is_ok());
        assert!(m.object("G", &[("p", "e")], &[]).is_err());
    }

    #[test]
    fn discrete_samples_match_valuation_multisets() {
        let m = day_preset("L3").unwrap();
        // multisets of size <= 2 over three fibres
        assert_eq!(m.sample_objects(2).len(), 1 + 3 + 6);
    }

    #[test]
    fn ordered_samples_respect_restrictions() {
        let m = l3a();
        let objs = m.sample_objects(2);
        // elements over e or b restrict to a
        assert!(objs.iter().all(|o| {
            let Payload::Presheaf { fiber, .. } = &o.payload else { return false };
            let has = |n: &str| fiber.contains(&m.base.index(n).unwrap());
            !(has("e") || has("b")) || has("a")
        }));
        let ids: BTreeSet<_> = objs.iter().map(|o| o.id.clone()).collect();
        assert_eq!(ids.len(), objs.len());
    }

    #[test]
    fn unit_tensor_is_the_identity_pointwise() {
        let m = l3a();
        let ctx = Ctx::new(&m, None);
        for o in m.sample_objects(2) {
            let h = Obj::Base(o);
            let l = ctx.eval_path(&Mor::LUnit(h.clone()).then(Mor::LUnitInv(h.clone()))).unwrap();
            assert_eq!(l, ctx.eval_path(&Mor::Id(Obj::tensor(Obj::Unit, h.clone()))).unwrap());
            let r = ctx.eval_path(&Mor::LUnitInv(h.clone()).then(Mor::LUnit(h.clone()))).unwrap();
            assert_eq!(r, ctx.eval_path(&Mor::Id(h.clone())).unwrap());
            for b in 0..m.base.len() as u32 {
                let n = |o: &Obj| ctx.carrier(o).unwrap().iter().filter(|x| fiber(x).unwrap() == b).count();
                assert_eq!(n(&Obj::tensor(Obj::Unit, h.clone())), n(&h));
            }
        }
    }

    #[test]
    fn coend_identifies_restricted_pairs() {
        // (G (x) G)(a) for G = {p over e, q = p|a}: (p, p), (p, q), (q, p), (q, q)
        // all meet at (q, q), since a <= a (x) a = a.
        let m = l3a();
        let ctx = Ctx::new(&m, None);
        let g = Obj::base(m.object("G", &[("p", "e"), ("q", "a")], &[("p", "a", "q")]).unwrap());
        let c = ctx.carrier(&Obj::tensor(g.clone(), g.clone())).unwrap();
        let a = m.base.index("a").unwrap();
        assert_eq!(c.iter().filter(|x| fiber(x).unwrap() == a).count(), 1);
        assert_eq!(c.len(), 2);
    }

    #[test]
    fn fibrewise_enumeration_matches_brute_force() {
        let m = l3a();
        let ctx = Ctx::new(&m, None);
        let objs = m.sample_objects(2);
        for a in &objs {
            for b in &objs {
                let (a, b) = (Obj::Base(a.clone()), Obj::Base(b.clone()));
                let fast = crate::fincat::homs::enumerate_homs(&ctx, &a, &b).unwrap();
                assert_eq!(fast, brute_force_homs(&ctx, &a, &b).unwrap());
            }
        }
    }

    #[test]
    fn product_and_terminal() {
        let m = l3a();
        let ctx = Ctx::new(&m, None);
        let g = Obj::base(m.object("G", &[("p", "e"), ("q", "a")], &[("p", "a", "q")]).unwrap());
        let p = m.product(&ctx, &g, &g).unwrap().unwrap();
        assert_eq!(ctx.carrier(&p.obj).unwrap().len(), 2);
        let one = m.terminal(&ctx).unwrap().unwrap();
        assert_eq!(crate::fincat::homs::enumerate_homs(&ctx, &g, &one).unwrap().len(), 1);
    }
}
