//! Tensor words and canonical coherence isomorphisms.
//!
//! A word is any [`Obj`]; its leaves are base objects and `!`-objects, and
//! unit leaves are deleted by normalisation. The normal form is right-nested
//! and unit-free, with the contents of every `!` normalised recursively.
//! Normalisation isomorphisms are built structurally from associators and
//! unitors, so they evaluate through the model on any carrier representation.

use crate::diagrams::Mor;
use crate::error::{Error, Result};
use crate::fincat::Obj;

/// Leaves of the normal form, in order.
pub fn leaves(w: &Obj) -> Vec<Obj> {
    let mut out = Vec::new();
    collect(w, &mut out);
    out
}

fn collect(w: &Obj, out: &mut Vec<Obj>) {
    match w {
        Obj::Unit => {}
        Obj::Tensor(a, b) => {
            collect(a, out);
            collect(b, out);
        }
        Obj::Bang(a) => out.push(Obj::bang(normal_form(a))),
        Obj::Base(_) => out.push(w.clone()),
    }
}

/// Right-nested unit-free form; `I` when there are no leaves.
pub fn normal_form(w: &Obj) -> Obj {
    right_nest(leaves(w))
}

fn right_nest(mut ls: Vec<Obj>) -> Obj {
    let Some(mut acc) = ls.pop() else { return Obj::Unit };
    while let Some(l) = ls.pop() {
        acc = Obj::tensor(l, acc);
    }
    acc
}

pub fn is_normal(w: &Obj) -> bool {
    *w == normal_form(w)
}

/// Two words are coherently isomorphic when their normal forms agree.
pub fn coherent(w1: &Obj, w2: &Obj) -> bool {
    normal_form(w1) == normal_form(w2)
}

/// The normalisation isomorphism `w -> normal_form(w)`.
pub fn normalize(w: &Obj) -> Mor {
    match w {
        Obj::Base(_) | Obj::Unit => Mor::Id(w.clone()),
        Obj::Bang(a) => {
            if is_normal(a) {
                Mor::Id(w.clone())
            } else {
                Mor::bang(normalize(a))
            }
        }
        Obj::Tensor(a, b) => {
            let (na, nb) = (normal_form(a), normal_form(b));
            let first = if is_normal(a) && is_normal(b) {
                Mor::Id(w.clone())
            } else {
                Mor::tensor(normalize(a), normalize(b))
            };
            first.then(merge(&na, &nb))
        }
    }
}

/// `x (x) y -> normal form` for normal `x`, `y`.
fn merge(x: &Obj, y: &Obj) -> Mor {
    match (x, y) {
        (Obj::Unit, _) => Mor::LUnit(y.clone()),
        (_, Obj::Unit) => Mor::RUnit(x.clone()),
        (Obj::Tensor(l, rest), _) => {
            let l = (**l).clone();
            let rest = (**rest).clone();
            let step = Mor::Assoc(l.clone(), rest.clone(), y.clone());
            let tail = merge(&rest, y);
            match tail {
                Mor::Id(_) => step,
                tail => step.then(Mor::tensor(Mor::Id(l), tail)),
            }
        }
        _ => Mor::Id(Obj::tensor(x.clone(), y.clone())),
    }
}

/// The structural isomorphism `w1 -> w2`, as a term.
pub fn canonical_iso(w1: &Obj, w2: &Obj) -> Result<Mor> {
    if w1 == w2 {
        return Ok(Mor::Id(w1.clone()));
    }
    if !coherent(w1, w2) {
        return Err(Error::IncompatibleWords(w1.to_string(), w2.to_string()));
    }
    Ok(normalize(w1).then(normalize(w2).inverse()?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::{FinObject, Payload};

    fn atom(id: &str) -> Obj {
        Obj::base(FinObject { id: id.into(), carrier: vec![], payload: Payload::Plain })
    }

    #[test]
    fn normal_forms() {
        let (a, b, c) = (atom("A"), atom("B"), atom("C"));
        let left = Obj::tensor(Obj::tensor(a.clone(), b.clone()), c.clone());
        let right = Obj::tensor(a.clone(), Obj::tensor(b.clone(), c.clone()));
        assert_eq!(normal_form(&left), right);
        assert_eq!(normal_form(&Obj::tensor(Obj::Unit, a.clone())), a);
        assert_eq!(normal_form(&Obj::tensor(Obj::Unit, Obj::Unit)), Obj::Unit);
        let bang = Obj::bang(Obj::tensor(Obj::Unit, a.clone()));
        assert_eq!(normal_form(&bang), Obj::bang(a));
    }

    #[test]
    fn single_associator() {
        let (a, b, c) = (atom("A"), atom("B"), atom("C"));
        let left = Obj::tensor(Obj::tensor(a.clone(), b.clone()), c.clone());
        let right = Obj::tensor(a.clone(), Obj::tensor(b.clone(), c.clone()));
        assert_eq!(canonical_iso(&left, &right).unwrap(), Mor::Assoc(a, b, c));
    }

    #[test]
    fn incompatible_words() {
        let (a, b) = (atom("A"), atom("B"));
        assert!(matches!(
            canonical_iso(&Obj::tensor(a.clone(), b.clone()), &Obj::tensor(b, a)),
            Err(Error::IncompatibleWords(..))
        ));
    }

    #[test]
    fn terms_are_well_typed() {
        let (a, b, c) = (atom("A"), atom("B"), atom("C"));
        let w = Obj::tensor(Obj::tensor(Obj::Unit, Obj::tensor(a.clone(), b.clone())), Obj::tensor(c, Obj::Unit));
        let n = normalize(&w);
        assert_eq!(n.src().unwrap(), w);
        assert_eq!(n.tgt().unwrap(), normal_form(&w));
    }
}
