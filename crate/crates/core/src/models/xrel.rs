//! Crossed G-sets and equivariant, grade-preserving relations, with the
//! finite-multiset exponential truncated at a degree bound.

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::diagrams::Mor;
use crate::elem::{bag_splits, multisets, Elem};
use crate::error::{Error, Result};
use crate::fincat::{Braiding, Ctx, FinMorphism, FinObject, Model, MorKind, Obj, Payload};
use crate::linexp::ExpComonad;
use crate::models::algebra::{FinGroup, FinMonoid};

#[derive(Clone, Debug)]
pub struct XRelModel {
    pub group: FinGroup,
}

/// A transitive crossed G-set `G/H` whose base point has grade `c`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct OrbitType {
    size: usize,
    stabilizer: Vec<u32>,
    grade: u32,
}

impl XRelModel {
    pub fn new(group: FinGroup) -> Self {
        XRelModel { group }
    }

    fn names(&self) -> &[String] {
        &self.group.monoid.names
    }

    fn g(&self, name: &str) -> Result<u32> {
        self.group.monoid.index(name).ok_or_else(|| Error::InvalidObject(format!("{}: unknown element {name}", self.group.monoid.name)))
    }

    /// Builds a crossed G-set from tokens, grades and one action row per
    /// group element (`action[g][i]` is the token of `g . token_i`), and
    /// checks the action laws and `|g.x| = g |x| g^-1`.
    pub fn object(&self, id: &str, tokens: &[&str], grades: &[&str], action: &[Vec<&str>]) -> Result<FinObject> {
        let n = tokens.len();
        if grades.len() != n || action.len() != self.group.len() || action.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidObject(format!("{id}: need one grade per element and one action row per group element")));
        }
        let pos = |t: &str| tokens.iter().position(|s| *s == t).ok_or_else(|| Error::InvalidObject(format!("{id}: unknown element {t}")));
        let grade = grades.iter().map(|s| self.g(s)).collect::<Result<Vec<_>>>()?;
        let act = action.iter().map(|r| r.iter().map(|t| pos(t)).collect::<Result<Vec<_>>>()).collect::<Result<Vec<_>>>()?;
        self.build(id, tokens.iter().map(|s| s.to_string()).collect(), grade, act)
    }

    fn build(&self, id: &str, tokens: Vec<String>, grade: Vec<u32>, act: Vec<Vec<usize>>) -> Result<FinObject> {
        let n = tokens.len();
        let g = &self.group;
        let name = |i: usize| tokens[i].as_str();
        for i in 0..n {
            if act[g.unit() as usize][i] != i {
                return Err(Error::InvalidObject(format!("{id}: unit does not fix {}", name(i))));
            }
            for a in 0..g.len() as u32 {
                for b in 0..g.len() as u32 {
                    if act[a as usize][act[b as usize][i]] != act[g.mul(a, b) as usize][i] {
                        return Err(Error::InvalidObject(format!("{id}: action law fails at ({}, {}, {})", self.names()[a as usize], self.names()[b as usize], name(i))));
                    }
                }
                let j = act[a as usize][i];
                if grade[j] != g.conj(a, grade[i]) {
                    return Err(Error::InvalidObject(format!(
                        "{id}: crossed-set compatibility fails at ({}, {}): |g.x| = {} but g|x|g^-1 = {}",
                        self.names()[a as usize],
                        name(i),
                        self.names()[grade[j] as usize],
                        self.names()[g.conj(a, grade[i]) as usize]
                    )));
                }
            }
        }
        let elems: Vec<Elem> = tokens.iter().map(|t| Elem::sym(format!("{id}.{t}"))).collect();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| elems[a].cmp(&elems[b]));
        let mut new_index = vec![0u32; n];
        for (k, &i) in order.iter().enumerate() {
            new_index[i] = k as u32;
        }
        let carrier = order.iter().map(|&i| elems[i].clone()).collect();
        let grade = order.iter().map(|&i| grade[i]).collect();
        let action = act.iter().map(|row| order.iter().map(|&i| new_index[row[i]]).collect()).collect();
        let obj = FinObject { id: id.into(), carrier, payload: Payload::Crossed { grade, action } };
        obj.validate()?;
        Ok(obj)
    }

    fn subgroups(&self) -> Vec<Vec<u32>> {
        let n = self.group.len() as u32;
        let mut out = Vec::new();
        for mask in 0u32..(1 << n) {
            let h: Vec<u32> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
            if h.contains(&self.group.unit()) && h.iter().all(|&a| h.iter().all(|&b| h.contains(&self.group.mul(a, b)))) {
                out.push(h);
            }
        }
        out
    }

    fn conj_set(&self, g: u32, h: &[u32]) -> Vec<u32> {
        let mut v: Vec<u32> = h.iter().map(|&x| self.group.conj(g, x)).collect();
        v.sort();
        v
    }

    /// Transitive crossed G-sets up to isomorphism, of size `<= max`.
    fn orbit_types(&self, max: usize) -> Vec<OrbitType> {
        let g = &self.group;
        let mut out = BTreeSet::new();
        for h in self.subgroups() {
            let size = g.len() / h.len();
            if size > max {
                continue;
            }
            for c in 0..g.len() as u32 {
                if h.iter().any(|&x| g.conj(x, c) != c) {
                    continue;
                }
                let canon = (0..g.len() as u32)
                    .map(|k| OrbitType { size, stabilizer: self.conj_set(k, &h), grade: g.conj(k, c) })
                    .min()
                    .unwrap();
                out.insert(canon);
            }
        }
        out.into_iter().collect()
    }

    /// Cosets `k H` in discovery order with their representatives.
    fn cosets(&self, h: &[u32]) -> Vec<(u32, Vec<u32>)> {
        let g = &self.group;
        let mut out: Vec<(u32, Vec<u32>)> = Vec::new();
        let order = std::iter::once(g.unit()).chain((0..g.len() as u32).filter(|&k| k != g.unit()));
        for k in order {
            let mut coset: Vec<u32> = h.iter().map(|&x| g.mul(k, x)).collect();
            coset.sort();
            if !out.iter().any(|(_, c)| *c == coset) {
                out.push((k, coset));
            }
        }
        out
    }

    fn from_orbits(&self, types: &[&OrbitType]) -> Result<FinObject> {
        let g = &self.group;
        let mut id = "X".to_string();
        let (mut tokens, mut grade) = (Vec::new(), Vec::new());
        let mut act: Vec<Vec<usize>> = vec![Vec::new(); g.len()];
        for t in types {
            let mask: u32 = t.stabilizer.iter().map(|&x| 1 << x).sum();
            id.push_str(&format!("_{}h{}{}", t.size, mask, self.names()[t.grade as usize]));
            let offset = tokens.len();
            let cosets = self.cosets(&t.stabilizer);
            for (j, (k, _)) in cosets.iter().enumerate() {
                tokens.push(format!("x{}", offset + j));
                grade.push(g.conj(*k, t.grade));
            }
            for a in 0..g.len() as u32 {
                for (k, _) in &cosets {
                    let moved = g.mul(a, *k);
                    let j = cosets.iter().position(|(_, c)| c.contains(&moved)).expect("coset");
                    act[a as usize].push(offset + j);
                }
            }
        }
        self.build(&id, tokens, grade, act)
    }
}

fn crossed(o: &FinObject) -> Result<(&[u32], &[Vec<u32>])> {
    match &o.payload {
        Payload::Crossed { grade, action } => Ok((grade, action)),
        _ => Err(Error::InvalidObject(format!("{} is not a crossed G-set", o.id))),
    }
}

fn not_in(x: &Elem, obj: &Obj) -> Error {
    Error::NotInCarrier { elem: x.to_string(), obj: obj.to_string() }
}

/// Orbit of `x` under the group action, sorted.
fn orbit(ctx: &Ctx, obj: &Obj, x: &Elem) -> Result<Vec<Elem>> {
    let mut out = BTreeSet::new();
    for g in 0..ctx.model.group_size() {
        out.insert(ctx.act(obj, g, x)?);
    }
    Ok(out.into_iter().collect())
}

/// Least element of the orbit of `x`.
fn rep(ctx: &Ctx, obj: &Obj, x: &Elem) -> Result<Elem> {
    Ok(orbit(ctx, obj, x)?.swap_remove(0))
}

impl Model for XRelModel {
    fn name(&self) -> String {
        format!("xrel/{}", self.group.monoid.name)
    }

    fn mor_kind(&self) -> MorKind {
        MorKind::Relation
    }

    /// One object per isomorphism class, built from transitive pieces.
    fn sample_objects(&self, max_carrier: usize) -> Vec<Arc<FinObject>> {
        let types = self.orbit_types(max_carrier);
        let mut out = Vec::new();
        let mut stack: Vec<(Vec<usize>, usize)> = vec![(vec![], 0)];
        while let Some((picked, size)) = stack.pop() {
            let parts: Vec<&OrbitType> = picked.iter().map(|&i| &types[i]).collect();
            out.push(Arc::new(self.from_orbits(&parts).expect("sampled crossed set")));
            let from = picked.last().copied().unwrap_or(0);
            for (i, t) in types.iter().enumerate().skip(from) {
                if size + t.size <= max_carrier {
                    let mut next = picked.clone();
                    next.push(i);
                    stack.push((next, size + t.size));
                }
            }
        }
        out.sort_by(|a, b| (a.len(), &a.id).cmp(&(b.len(), &b.id)));
        out
    }

    fn value(&self, ctx: &Ctx, obj: &Obj, x: &Elem) -> Result<u32> {
        match obj {
            Obj::Base(o) => {
                let i = o.index_of(x).ok_or_else(|| not_in(x, obj))?;
                Ok(crossed(o)?.0[i])
            }
            Obj::Unit => Ok(self.group.unit()),
            Obj::Tensor(a, b) => {
                let (p, q) = x.as_pair().ok_or_else(|| not_in(x, obj))?;
                Ok(self.group.mul(ctx.value(a, p)?, ctx.value(b, q)?))
            }
            Obj::Bang(_) => ctx.value(obj, x),
        }
    }

    fn group_size(&self) -> u32 {
        self.group.len() as u32
    }

    fn act(&self, ctx: &Ctx, obj: &Obj, g: u32, x: &Elem) -> Result<Elem> {
        match obj {
            Obj::Base(o) => {
                let i = o.index_of(x).ok_or_else(|| not_in(x, obj))?;
                Ok(o.carrier[crossed(o)?.1[g as usize][i] as usize].clone())
            }
            Obj::Unit => Ok(Elem::Star),
            Obj::Tensor(a, b) => {
                let (p, q) = x.as_pair().ok_or_else(|| not_in(x, obj))?;
                Ok(Elem::pair(ctx.act(a, g, p)?, ctx.act(b, g, q)?))
            }
            Obj::Bang(_) => ctx.act(obj, g, x),
        }
    }

    fn is_hom(&self, ctx: &Ctx, m: &FinMorphism) -> Result<bool> {
        let (cs, ct) = (ctx.carrier(&m.src)?, ctx.carrier(&m.tgt)?);
        if !m.is_within(&cs, &ct) {
            return Ok(false);
        }
        for (x, y) in m.pairs() {
            if ctx.value(&m.src, x)? != ctx.value(&m.tgt, y)? {
                return Ok(false);
            }
            for g in 0..self.group_size() {
                let (gx, gy) = (ctx.act(&m.src, g, x)?, ctx.act(&m.tgt, g, y)?);
                if !m.image(&gx).contains(&gy) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Homs are exactly the unions of diagonal orbits of grade-matched pairs.
    fn enumerate_homs(&self, ctx: &Ctx, a: &Obj, b: &Obj) -> Option<Result<Vec<FinMorphism>>> {
        Some((|| {
            let (ca, cb) = (ctx.carrier(a)?, ctx.carrier(b)?);
            let pair_obj = Obj::tensor(a.clone(), b.clone());
            let mut orbits: Vec<Vec<Elem>> = Vec::new();
            let mut seen = BTreeSet::new();
            for x in ca.iter() {
                for y in cb.iter() {
                    if ctx.value(a, x)? != ctx.value(b, y)? {
                        continue;
                    }
                    let p = Elem::pair(x.clone(), y.clone());
                    if seen.contains(&p) {
                        continue;
                    }
                    let o = orbit(ctx, &pair_obj, &p)?;
                    seen.extend(o.iter().cloned());
                    orbits.push(o);
                }
            }
            let space = 1u128.checked_shl(orbits.len() as u32).unwrap_or(u128::MAX);
            if space > ctx.limits.max_hom_search {
                return Err(Error::SizeBoundExceeded { what: format!("homs {a} -> {b}"), size: space, limit: ctx.limits.max_hom_search });
            }
            let mut out = Vec::new();
            for mask in 0u64..(1u64 << orbits.len()) {
                let pairs = orbits
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .flat_map(|(_, o)| o.iter().map(|p| p.as_pair().map(|(x, y)| (x.clone(), y.clone())).expect("pair")));
                out.push(FinMorphism::from_pairs(a.clone(), b.clone(), MorKind::Relation, pairs));
            }
            Ok(out)
        })())
    }

    fn braiding(&self) -> Braiding {
        Braiding::Braided
    }

    /// `(x, y) |-> (|x|.y, x)`; the inverse sends `(u, v)` to `(v, |v|^-1.u)`.
    fn braid_image(&self, ctx: &Ctx, a: &Obj, b: &Obj, x: &Elem, inverse: bool) -> Result<Vec<Elem>> {
        let (p, q) = x.as_pair().ok_or_else(|| Error::NotInCarrier { elem: x.to_string(), obj: "a tensor".into() })?;
        Ok(vec![if inverse {
            let back = self.group.inv(ctx.value(a, q)?);
            Elem::pair(q.clone(), ctx.act(b, back, p)?)
        } else {
            Elem::pair(ctx.act(b, ctx.value(a, p)?, q)?, p.clone())
        }])
    }

    fn payload_laws(&self) -> Vec<(String, Option<String>)> {
        let m = &self.group.monoid;
        let recheck = FinMonoid::new(&m.name, m.names.clone(), m.table.clone()).and_then(FinGroup::new);
        vec![(format!("group {} is a group", m.name), recheck.err().map(|e| e.to_string()))]
    }
}

/// Relational multiset exponential: `!X` is the multisets of size at most the
/// context grade over the orbits of grade-`e` elements, named by their least
/// member.
#[derive(Clone, Debug)]
pub struct XRelComonad {
    pub unit: u32,
}

impl XRelComonad {
    pub fn new(m: &XRelModel) -> Self {
        XRelComonad { unit: m.group.unit() }
    }
}

fn grade(ctx: &Ctx) -> Result<usize> {
    match ctx.grade {
        Some(k) if k >= 1 => Ok(k),
        Some(k) => Err(Error::DegreeBoundTooSmall(k)),
        None => Err(Error::Unsupported("the multiset exponential needs a degree bound".into())),
    }
}

fn items(x: &Elem) -> Result<&[Elem]> {
    x.as_bag().ok_or_else(|| Error::NotInCarrier { elem: x.to_string(), obj: "a multiset".into() })
}

/// Every choice of one entry from each list, as a multiset.
fn choose_bags(options: &[Vec<Elem>]) -> Vec<Elem> {
    let mut out = vec![Vec::new()];
    for opts in options {
        let mut next = Vec::with_capacity(out.len() * opts.len());
        for prefix in &out {
            for o in opts {
                let mut p: Vec<Elem> = prefix.clone();
                p.push(o.clone());
                next.push(p);
            }
        }
        out = next;
    }
    let set: BTreeSet<Elem> = out.into_iter().map(Elem::bag).collect();
    set.into_iter().collect()
}

/// Unordered families of non-empty multisets summing to `items`.
fn multiset_partitions(items: &[Elem]) -> BTreeSet<Vec<Elem>> {
    let mut blocks: BTreeSet<Vec<Vec<Elem>>> = BTreeSet::from([vec![]]);
    for x in items {
        let mut next = BTreeSet::new();
        for bs in &blocks {
            for i in 0..=bs.len() {
                let mut b = bs.clone();
                if i == b.len() {
                    b.push(vec![x.clone()]);
                } else {
                    b[i].push(x.clone());
                    b[i].sort();
                }
                b.sort();
                next.insert(b);
            }
        }
        blocks = next;
    }
    blocks.into_iter().map(|bs| bs.into_iter().map(Elem::bag).collect()).collect()
}

fn distinct_permutations(items: &[Elem]) -> Vec<Vec<Elem>> {
    let mut v = items.to_vec();
    v.sort();
    let mut out = vec![v.clone()];
    // next lexicographic permutation
    loop {
        let Some(i) = (0..v.len().saturating_sub(1)).rev().find(|&i| v[i] < v[i + 1]) else { break };
        let j = (i + 1..v.len()).rev().find(|&j| v[i] < v[j]).unwrap();
        v.swap(i, j);
        v[i + 1..].reverse();
        out.push(v.clone());
    }
    out
}

impl ExpComonad for XRelComonad {
    fn name(&self) -> String {
        "xrel-multiset".into()
    }

    fn bang_carrier(&self, ctx: &Ctx, a: &Obj) -> Result<Vec<Elem>> {
        let k = grade(ctx)?;
        let mut support = BTreeSet::new();
        for x in ctx.carrier(a)?.iter() {
            if ctx.value(a, x)? == self.unit {
                support.insert(rep(ctx, a, x)?);
            }
        }
        let support: Vec<Elem> = support.into_iter().collect();
        let size = (support.len() as u128 + k as u128).pow(k as u32);
        ctx.guard(&format!("!{a}"), size)?;
        Ok(multisets(&support, k))
    }

    fn bang_value(&self, _ctx: &Ctx, _a: &Obj, _x: &Elem) -> Result<u32> {
        Ok(self.unit)
    }

    fn bang_map(&self, ctx: &Ctx, f: &Mor, x: &Elem) -> Result<Vec<Elem>> {
        let tgt = f.tgt()?;
        let options = items(x)?
            .iter()
            .map(|a| {
                let set: BTreeSet<Elem> = ctx.image(f, a)?.iter().map(|y| rep(ctx, &tgt, y)).collect::<Result<_>>()?;
                Ok(set.into_iter().collect())
            })
            .collect::<Result<Vec<Vec<Elem>>>>()?;
        Ok(choose_bags(&options))
    }

    fn delta(&self, ctx: &Ctx, _a: &Obj, x: &Elem) -> Result<Vec<Elem>> {
        let k = grade(ctx)?;
        let mut out = BTreeSet::new();
        for parts in multiset_partitions(items(x)?) {
            for empties in 0..=k.saturating_sub(parts.len()) {
                let mut family = parts.clone();
                family.extend(std::iter::repeat(Elem::bag(vec![])).take(empties));
                out.insert(Elem::bag(family));
            }
        }
        Ok(out.into_iter().collect())
    }

    fn epsilon(&self, ctx: &Ctx, a: &Obj, x: &Elem) -> Result<Vec<Elem>> {
        match items(x)? {
            [c] => orbit(ctx, a, c),
            _ => Ok(Vec::new()),
        }
    }

    fn m(&self, ctx: &Ctx, a: &Obj, b: &Obj, x: &Elem) -> Result<Vec<Elem>> {
        let (p, q) = x.as_pair().ok_or_else(|| Error::NotInCarrier { elem: x.to_string(), obj: "a tensor".into() })?;
        let (ms, ns) = (items(p)?, items(q)?);
        if ms.len() != ns.len() {
            return Ok(Vec::new());
        }
        let ab = Obj::tensor(a.clone(), b.clone());
        let mut out = BTreeSet::new();
        for perm in distinct_permutations(ns) {
            let options = ms
                .iter()
                .zip(&perm)
                .map(|(u, v)| {
                    let set: BTreeSet<Elem> = orbit(ctx, b, v)?.into_iter().map(|y| rep(ctx, &ab, &Elem::pair(u.clone(), y))).collect::<Result<_>>()?;
                    Ok(set.into_iter().collect())
                })
                .collect::<Result<Vec<Vec<Elem>>>>()?;
            out.extend(choose_bags(&options));
        }
        Ok(out.into_iter().collect())
    }

    fn m_unit(&self, ctx: &Ctx, _x: &Elem) -> Result<Vec<Elem>> {
        let k = grade(ctx)?;
        Ok((0..=k).map(|n| Elem::bag(vec![Elem::Star; n])).collect())
    }

    fn d(&self, _ctx: &Ctx, _a: &Obj, x: &Elem) -> Result<Vec<Elem>> {
        let mut v: Vec<Elem> = bag_splits(items(x)?).into_iter().map(|(l, r)| Elem::pair(l, r)).collect();
        v.sort();
        Ok(v)
    }

    fn e(&self, _ctx: &Ctx, _a: &Obj, x: &Elem) -> Result<Vec<Elem>> {
        Ok(if items(x)?.is_empty() { vec![Elem::Star] } else { Vec::new() })
    }

    fn graded(&self) -> bool {
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::algebra::preset;

    fn xrel(name: &str) -> XRelModel {
        XRelModel::new(FinGroup::new(preset(name).unwrap()).unwrap())
    }

    #[test]
    fn sample_counts_by_brute_force() {
        // Z2: empty (1), fixed points graded e or s (2 + 3 pairs), free orbit graded e or s (2)
        assert_eq!(xrel("Z2").sample_objects(2).len(), 8);
        // S3: empty, one or two trivial points, and S3/A3 graded e or r
        assert_eq!(xrel("S3").sample_objects(2).len(), 5);
    }

    #[test]
    fn incompatible_grades_are_rejected() {
        let m = xrel("Z2");
        let err = m.object("B", &["u", "v"], &["e", "s"], &[vec!["u", "v"], vec!["v", "u"]]).unwrap_err();
        assert!(err.to_string().contains("compatibility"), "{err}");
    }

    #[test]
    fn braiding_acts_by_the_left_grade() {
        let m = xrel("Z2");
        let ctx = Ctx::new(&m, None);
        let x = Obj::base(m.object("X", &["x"], &["s"], &[vec!["x"], vec!["x"]]).unwrap());
        let y = Obj::base(m.object("Y", &["u", "v"], &["e", "e"], &[vec!["u", "v"], vec!["v", "u"]]).unwrap());
        let got = m.braid_image(&ctx, &x, &y, &Elem::pair(Elem::sym("X.x"), Elem::sym("Y.u")), false).unwrap();
        assert_eq!(got, vec![Elem::pair(Elem::sym("Y.v"), Elem::sym("X.x"))]);
        let back = m.braid_image(&ctx, &x, &y, &got[0], true).unwrap();
        assert_eq!(back, vec![Elem::pair(Elem::sym("X.x"), Elem::sym("Y.u"))]);
    }

    #[test]
    fn bang_of_a_free_orbit() {
        let m = xrel("Z2");
        let c = XRelComonad::new(&m);
        let ctx = Ctx::new(&m, Some(&c)).with_grade(Some(2));
        let x = Obj::base(m.object("X", &["x", "y"], &["e", "e"], &[vec!["x", "y"], vec!["y", "x"]]).unwrap());
        let cls = Elem::sym("X.x");
        let want = vec![Elem::bag(vec![]), Elem::bag(vec![cls.clone()]), Elem::bag(vec![cls.clone(), cls])];
        let mut got = ctx.carrier(&Obj::bang(x)).unwrap().to_vec();
        got.sort();
        let mut want = want;
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn e_only_sees_the_empty_multiset() {
        let m = xrel("Z2");
        let c = XRelComonad::new(&m);
        let ctx = Ctx::new(&m, Some(&c)).with_grade(Some(2));
        let x = Obj::base(m.object("X", &["x"], &["e"], &[vec!["x"], vec!["x"]]).unwrap());
        for b in ctx.carrier(&Obj::bang(x.clone())).unwrap().iter() {
            let img = c.e(&ctx, &x, b).unwrap();
            assert_eq!(img.is_empty(), !b.as_bag().unwrap().is_empty());
        }
    }

    #[test]
    fn partitions_of_aab() {
        let (a, b) = (Elem::sym("a"), Elem::sym("b"));
        // {aab}, {a|ab}, {b|aa}, {a|a|b}
        assert_eq!(multiset_partitions(&[a.clone(), a, b]).len(), 4);
    }

    #[test]
    fn permutations_skip_repeats() {
        let (a, b) = (Elem::sym("a"), Elem::sym("b"));
        assert_eq!(distinct_permutations(&[a.clone(), a, b]).len(), 3);
    }

    #[test]
    fn degree_bound_zero_is_rejected() {
        let m = xrel("Z2");
        let c = XRelComonad::new(&m);
        let ctx = Ctx::new(&m, Some(&c)).with_grade(Some(0));
        assert!(matches!(ctx.carrier(&Obj::bang(Obj::Unit)), Err(Error::DegreeBoundTooSmall(0))));
    }
}
