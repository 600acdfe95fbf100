//! Element tokens of finite carriers.
//!
//! Every carrier in the engine is a sorted list of [`Elem`]s. Compound
//! objects never flatten their elements: a tensor element is a literal
//! pair, a multiset element is a sorted bag, and presheaf-valued
//! constructions tag their elements with the base object they live over.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Elem {
    /// A named atom, namespaced by the object that owns it.
    Sym(Arc<str>),
    /// The single element of the unit object.
    Star,
    Pair(Arc<(Elem, Elem)>),
    /// A finite multiset, kept sorted.
    Bag(Arc<[Elem]>),
    /// An element living over the base object with the given index.
    Tag(u32, Arc<Elem>),
}

impl Elem {
    pub fn sym(name: impl AsRef<str>) -> Self {
        Elem::Sym(Arc::from(name.as_ref()))
    }

    pub fn pair(a: Elem, b: Elem) -> Self {
        Elem::Pair(Arc::new((a, b)))
    }

    /// Builds a multiset; the input order is irrelevant.
    pub fn bag(mut items: Vec<Elem>) -> Self {
        items.sort();
        Elem::Bag(items.into())
    }

    pub fn tag(base: u32, inner: Elem) -> Self {
        Elem::Tag(base, Arc::new(inner))
    }

    pub fn as_pair(&self) -> Option<(&Elem, &Elem)> {
        match self {
            Elem::Pair(p) => Some((&p.0, &p.1)),
            _ => None,
        }
    }

    pub fn as_bag(&self) -> Option<&[Elem]> {
        match self {
            Elem::Bag(items) => Some(items),
            _ => None,
        }
    }

    pub fn as_tag(&self) -> Option<(u32, &Elem)> {
        match self {
            Elem::Tag(b, inner) => Some((*b, inner)),
            _ => None,
        }
    }

    /// Largest multiset size occurring anywhere inside the element.
    pub fn width(&self) -> usize {
        match self {
            Elem::Sym(_) | Elem::Star => 0,
            Elem::Pair(p) => p.0.width().max(p.1.width()),
            Elem::Bag(items) => items.iter().map(Elem::width).fold(items.len(), usize::max),
            Elem::Tag(_, inner) => inner.width(),
        }
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Elem::Sym(s) => f.write_str(s),
            Elem::Star => f.write_str("*"),
            Elem::Pair(p) => write!(f, "({},{})", p.0, p.1),
            Elem::Bag(items) => {
                f.write_str("[")?;
                for (i, x) in items.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{x}")?;
                }
                f.write_str("]")
            }
            Elem::Tag(b, inner) => write!(f, "{b}@{inner}"),
        }
    }
}

impl fmt::Debug for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Enumerates all multisets of size at most `max_size` over `support`.
/// The output is sorted and free of duplicates.
pub fn multisets(support: &[Elem], max_size: usize) -> Vec<Elem> {
    let mut support = support.to_vec();
    support.sort();
    support.dedup();
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn go(support: &[Elem], start: usize, left: usize, current: &mut Vec<Elem>, out: &mut Vec<Elem>) {
        out.push(Elem::Bag(current.clone().into()));
        if left == 0 {
            return;
        }
        for i in start..support.len() {
            current.push(support[i].clone());
            go(support, i, left - 1, current, out);
            current.pop();
        }
    }
    go(&support, 0, max_size, &mut current, &mut out);
    out.sort();
    out
}

/// Sum of multisets.
pub fn bag_sum<'a>(parts: impl IntoIterator<Item = &'a [Elem]>) -> Elem {
    let mut items = Vec::new();
    for p in parts {
        items.extend(p.iter().cloned());
    }
    Elem::bag(items)
}

/// All ordered splittings `(left, right)` of a multiset with `left + right = bag`.
pub fn bag_splits(bag: &[Elem]) -> Vec<(Elem, Elem)> {
    // Group equal items, then choose a multiplicity for the left side.
    let mut groups: Vec<(Elem, usize)> = Vec::new();
    for x in bag {
        match groups.last_mut() {
            Some((y, n)) if y == x => *n += 1,
            _ => groups.push((x.clone(), 1)),
        }
    }
    let mut out = Vec::new();
    let mut choice = vec![0usize; groups.len()];
    loop {
        let mut left = Vec::new();
        let mut right = Vec::new();
        for ((x, n), &k) in groups.iter().zip(&choice) {
            left.extend(std::iter::repeat(x.clone()).take(k));
            right.extend(std::iter::repeat(x.clone()).take(n - k));
        }
        out.push((Elem::bag(left), Elem::bag(right)));
        let mut i = 0;
        while i < groups.len() {
            if choice[i] < groups[i].1 {
                choice[i] += 1;
                break;
            }
            choice[i] = 0;
            i += 1;
        }
        if i == groups.len() {
            break;
        }
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bag_is_order_insensitive() {
        let a = Elem::sym("a");
        let b = Elem::sym("b");
        assert_eq!(Elem::bag(vec![a.clone(), b.clone()]), Elem::bag(vec![b, a]));
    }

    #[test]
    fn multisets_count_matches_stars_and_bars() {
        let support: Vec<Elem> = ["a", "b", "c"].iter().map(Elem::sym).collect();
        // sizes 0..=2 over 3 letters: 1 + 3 + 6
        assert_eq!(multisets(&support, 2).len(), 10);
        assert_eq!(multisets(&[], 3), vec![Elem::bag(vec![])]);
    }

    #[test]
    fn splits_of_aab() {
        let a = Elem::sym("a");
        let b = Elem::sym("b");
        let s = bag_splits(&[a.clone(), a.clone(), b.clone()]);
        // (0..=2 copies of a) x (0..=1 copies of b)
        assert_eq!(s.len(), 6);
        for (l, r) in &s {
            assert_eq!(bag_sum([l.as_bag().unwrap(), r.as_bag().unwrap()]), Elem::bag(vec![a.clone(), a.clone(), b.clone()]));
        }
    }

    #[test]
    fn width_is_max_nested_size() {
        let a = Elem::sym("a");
        let inner = Elem::bag(vec![a.clone(), a.clone(), a]);
        assert_eq!(Elem::bag(vec![inner.clone()]).width(), 3);
        assert_eq!(Elem::pair(Elem::Star, inner).width(), 3);
    }
}
