use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::elem::Elem;
use crate::error::{Error, Result};
use crate::fincat::object::Obj;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MorKind {
    Function,
    Relation,
}

/// A tabulated morphism. The graph maps each source element to its sorted,
/// non-empty image; elements with empty image are absent. Equality is
/// endpoint plus graph equality.
#[derive(Clone)]
pub struct FinMorphism {
    pub src: Obj,
    pub tgt: Obj,
    pub kind: MorKind,
    graph: BTreeMap<Elem, Vec<Elem>>,
}

impl PartialEq for FinMorphism {
    fn eq(&self, other: &Self) -> bool {
        self.src == other.src && self.tgt == other.tgt && self.graph == other.graph
    }
}

impl Eq for FinMorphism {}

impl PartialOrd for FinMorphism {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FinMorphism {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (&self.src, &self.tgt, &self.graph).cmp(&(&other.src, &other.tgt, &other.graph))
    }
}

impl FinMorphism {
    pub fn from_pairs(src: Obj, tgt: Obj, kind: MorKind, pairs: impl IntoIterator<Item = (Elem, Elem)>) -> Self {
        let mut graph: BTreeMap<Elem, Vec<Elem>> = BTreeMap::new();
        for (a, b) in pairs {
            graph.entry(a).or_default().push(b);
        }
        for img in graph.values_mut() {
            img.sort();
            img.dedup();
        }
        FinMorphism { src, tgt, kind, graph }
    }

    pub fn from_images(src: Obj, tgt: Obj, kind: MorKind, images: impl IntoIterator<Item = (Elem, Vec<Elem>)>) -> Self {
        let pairs = images.into_iter().flat_map(|(a, img)| img.into_iter().map(move |b| (a.clone(), b)));
        Self::from_pairs(src, tgt, kind, pairs)
    }

    pub fn identity(obj: Obj, carrier: &[Elem], kind: MorKind) -> Self {
        Self::from_pairs(obj.clone(), obj, kind, carrier.iter().map(|x| (x.clone(), x.clone())))
    }

    pub fn image(&self, x: &Elem) -> &[Elem] {
        self.graph.get(x).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn pairs(&self) -> impl Iterator<Item = (&Elem, &Elem)> + '_ {
        self.graph.iter().flat_map(|(a, img)| img.iter().map(move |b| (a, b)))
    }

    pub fn graph(&self) -> &BTreeMap<Elem, Vec<Elem>> {
        &self.graph
    }

    pub fn len(&self) -> usize {
        self.graph.values().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.graph.is_empty()
    }

    /// Total and single-valued on the given source carrier.
    pub fn is_function_on(&self, src_carrier: &[Elem]) -> bool {
        self.graph.len() == src_carrier.len()
            && src_carrier.iter().all(|x| self.image(x).len() == 1)
    }

    /// Every pair references carrier elements.
    pub fn is_within(&self, src_carrier: &[Elem], tgt_carrier: &[Elem]) -> bool {
        self.pairs()
            .all(|(a, b)| src_carrier.binary_search(a).is_ok() && tgt_carrier.binary_search(b).is_ok())
    }

    pub fn with_endpoints(mut self, src: Obj, tgt: Obj) -> Self {
        self.src = src;
        self.tgt = tgt;
        self
    }

    pub fn transposed(&self) -> Self {
        Self::from_pairs(
            self.tgt.clone(),
            self.src.clone(),
            MorKind::Relation,
            self.pairs().map(|(a, b)| (b.clone(), a.clone())),
        )
    }
}

/// `g` after `f`, by relational composition of graphs.
pub fn compose(f: &FinMorphism, g: &FinMorphism) -> Result<FinMorphism> {
    if f.tgt != g.src {
        return Err(Error::MismatchedEndpoints { tgt: f.tgt.to_string(), src: g.src.to_string() });
    }
    let kind = if f.kind == MorKind::Function && g.kind == MorKind::Function {
        MorKind::Function
    } else {
        MorKind::Relation
    };
    let images = f.graph.iter().map(|(a, mid)| {
        let img: BTreeSet<Elem> = mid.iter().flat_map(|b| g.image(b).iter().cloned()).collect();
        (a.clone(), img.into_iter().collect())
    });
    Ok(FinMorphism::from_images(f.src.clone(), g.tgt.clone(), kind, images))
}

/// Tensor of tabulated morphisms on literal pair carriers:
/// `((a,c),(b,d))` for `(a,b)` in `f` and `(c,d)` in `g`.
pub fn tensor_mor(f: &FinMorphism, g: &FinMorphism) -> FinMorphism {
    let kind = if f.kind == MorKind::Function && g.kind == MorKind::Function {
        MorKind::Function
    } else {
        MorKind::Relation
    };
    let mut pairs = Vec::with_capacity(f.len() * g.len());
    for (a, b) in f.pairs() {
        for (c, d) in g.pairs() {
            pairs.push((Elem::pair(a.clone(), c.clone()), Elem::pair(b.clone(), d.clone())));
        }
    }
    FinMorphism::from_pairs(
        Obj::tensor(f.src.clone(), g.src.clone()),
        Obj::tensor(f.tgt.clone(), g.tgt.clone()),
        kind,
        pairs,
    )
}

impl fmt::Display for FinMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {} {{", self.src, self.tgt)?;
        for (i, (a, b)) in self.pairs().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{a}|->{b}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for FinMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::object::{FinObject, Payload};

    fn plain(id: &str, toks: &[&str]) -> Obj {
        let mut carrier: Vec<Elem> = toks.iter().map(Elem::sym).collect();
        carrier.sort();
        Obj::base(FinObject { id: id.into(), carrier, payload: Payload::Plain })
    }

    fn e(s: &str) -> Elem {
        Elem::sym(s)
    }

    #[test]
    fn one_point_chase() {
        let (a, b, c) = (plain("A", &["x"]), plain("B", &["y"]), plain("C", &["z"]));
        let f = FinMorphism::from_pairs(a.clone(), b.clone(), MorKind::Function, [(e("x"), e("y"))]);
        let g = FinMorphism::from_pairs(b, c.clone(), MorKind::Function, [(e("y"), e("z"))]);
        let h = compose(&f, &g).unwrap();
        assert_eq!(h, FinMorphism::from_pairs(a, c, MorKind::Function, [(e("x"), e("z"))]));
    }

    #[test]
    fn identity_is_neutral() {
        let a = plain("A", &["x", "x2"]);
        let b = plain("B", &["y"]);
        let f = FinMorphism::from_pairs(a.clone(), b, MorKind::Function, [(e("x"), e("y")), (e("x2"), e("y"))]);
        let id = FinMorphism::identity(a.clone(), &[e("x"), e("x2")], MorKind::Function);
        assert_eq!(compose(&id, &f).unwrap(), f);
    }

    #[test]
    fn relational_composition_matches_pairwise_oracle() {
        let (a, b, c) = (plain("A", &["x"]), plain("B", &["y1", "y2"]), plain("C", &["z"]));
        let r = FinMorphism::from_pairs(a.clone(), b.clone(), MorKind::Relation, [(e("x"), e("y1")), (e("x"), e("y2"))]);
        let s = FinMorphism::from_pairs(b, c.clone(), MorKind::Relation, [(e("y1"), e("z"))]);
        // oracle: {(a,c) | exists b. (a,b) in r and (b,c) in s}
        let mut oracle = Vec::new();
        for (x, y) in r.pairs() {
            for (y2, z) in s.pairs() {
                if y == y2 {
                    oracle.push((x.clone(), z.clone()));
                }
            }
        }
        let expected = FinMorphism::from_pairs(a, c, MorKind::Relation, oracle);
        assert_eq!(compose(&r, &s).unwrap(), expected);
        assert_eq!(expected.len(), 1);
    }

    #[test]
    fn mismatched_endpoints_rejected() {
        let (a, b) = (plain("A", &["x"]), plain("B", &["y"]));
        let f = FinMorphism::from_pairs(a.clone(), b.clone(), MorKind::Function, [(e("x"), e("y"))]);
        assert!(matches!(compose(&f, &f), Err(Error::MismatchedEndpoints { .. })));
    }

    #[test]
    fn tensor_unfolds() {
        let (a, b, u, v) = (plain("A", &["x"]), plain("B", &["y"]), plain("U", &["u"]), plain("V", &["v"]));
        let f = FinMorphism::from_pairs(a, b, MorKind::Function, [(e("x"), e("y"))]);
        let g = FinMorphism::from_pairs(u, v, MorKind::Function, [(e("u"), e("v"))]);
        let t = tensor_mor(&f, &g);
        assert_eq!(t.image(&Elem::pair(e("x"), e("u"))), &[Elem::pair(e("y"), e("v"))]);
    }
}
