//! Morphism terms (paths) over a model and a comonad.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fincat::{FinMorphism, Obj};

/// A tabulated morphism bound to a name for reporting.
#[derive(Clone, PartialEq, Eq)]
pub struct NamedMor {
    pub name: String,
    pub mor: FinMorphism,
}

#[derive(Clone, PartialEq, Eq)]
pub enum Mor {
    Id(Obj),
    Named(Arc<NamedMor>),
    /// Steps in application order: the first step is applied first.
    Seq(Vec<Mor>),
    Tensor(Arc<Mor>, Arc<Mor>),
    Assoc(Obj, Obj, Obj),
    AssocInv(Obj, Obj, Obj),
    LUnit(Obj),
    LUnitInv(Obj),
    RUnit(Obj),
    RUnitInv(Obj),
    Braid(Obj, Obj),
    BraidInv(Obj, Obj),
    /// Canonical coherence isomorphism between two bracketings.
    Coh(Obj, Obj),
    Bang(Arc<Mor>),
    Delta(Obj),
    Eps(Obj),
    M(Obj, Obj),
    MUnit,
    D(Obj),
    E(Obj),
    Sigma(Obj, Obj),
}

impl Mor {
    pub fn named(name: &str, mor: FinMorphism) -> Self {
        Mor::Named(Arc::new(NamedMor { name: name.to_string(), mor }))
    }

    pub fn tensor(f: Mor, g: Mor) -> Self {
        Mor::Tensor(Arc::new(f), Arc::new(g))
    }

    pub fn bang(f: Mor) -> Self {
        Mor::Bang(Arc::new(f))
    }

    /// Composite applying `steps` in order, flattening nested sequences and
    /// dropping identities.
    pub fn seq(steps: impl IntoIterator<Item = Mor>) -> Self {
        let mut out = Vec::new();
        let mut first_id = None;
        for s in steps {
            match s {
                Mor::Seq(inner) => out.extend(inner),
                Mor::Id(o) => {
                    first_id.get_or_insert(o);
                }
                other => out.push(other),
            }
        }
        match out.len() {
            0 => Mor::Id(first_id.unwrap_or(Obj::Unit)),
            1 => out.pop().unwrap(),
            _ => Mor::Seq(out),
        }
    }

    /// `self` then `next`.
    pub fn then(self, next: Mor) -> Self {
        Mor::seq([self, next])
    }

    pub fn src(&self) -> Result<Obj> {
        Ok(match self {
            Mor::Id(a) => a.clone(),
            Mor::Named(n) => n.mor.src.clone(),
            Mor::Seq(steps) => steps.first().map(Mor::src).transpose()?.unwrap_or(Obj::Unit),
            Mor::Tensor(f, g) => Obj::tensor(f.src()?, g.src()?),
            Mor::Assoc(a, b, c) => Obj::tensor(Obj::tensor(a.clone(), b.clone()), c.clone()),
            Mor::AssocInv(a, b, c) => Obj::tensor(a.clone(), Obj::tensor(b.clone(), c.clone())),
            Mor::LUnit(a) => Obj::tensor(Obj::Unit, a.clone()),
            Mor::RUnit(a) => Obj::tensor(a.clone(), Obj::Unit),
            Mor::LUnitInv(a) | Mor::RUnitInv(a) => a.clone(),
            Mor::Braid(a, b) => Obj::tensor(a.clone(), b.clone()),
            Mor::BraidInv(a, b) => Obj::tensor(b.clone(), a.clone()),
            Mor::Coh(w, _) => w.clone(),
            Mor::Bang(f) => Obj::bang(f.src()?),
            Mor::Delta(a) | Mor::Eps(a) | Mor::D(a) | Mor::E(a) => Obj::bang(a.clone()),
            Mor::M(a, b) | Mor::Sigma(a, b) => Obj::tensor(Obj::bang(a.clone()), Obj::bang(b.clone())),
            Mor::MUnit => Obj::Unit,
        })
    }

    pub fn tgt(&self) -> Result<Obj> {
        Ok(match self {
            Mor::Id(a) => a.clone(),
            Mor::Named(n) => n.mor.tgt.clone(),
            Mor::Seq(steps) => steps.last().map(Mor::tgt).transpose()?.unwrap_or(Obj::Unit),
            Mor::Tensor(f, g) => Obj::tensor(f.tgt()?, g.tgt()?),
            Mor::Assoc(a, b, c) => Obj::tensor(a.clone(), Obj::tensor(b.clone(), c.clone())),
            Mor::AssocInv(a, b, c) => Obj::tensor(Obj::tensor(a.clone(), b.clone()), c.clone()),
            Mor::LUnit(a) | Mor::RUnit(a) => a.clone(),
            Mor::LUnitInv(a) => Obj::tensor(Obj::Unit, a.clone()),
            Mor::RUnitInv(a) => Obj::tensor(a.clone(), Obj::Unit),
            Mor::Braid(a, b) => Obj::tensor(b.clone(), a.clone()),
            Mor::BraidInv(a, b) => Obj::tensor(a.clone(), b.clone()),
            Mor::Coh(_, w) => w.clone(),
            Mor::Bang(f) => Obj::bang(f.tgt()?),
            Mor::Delta(a) => Obj::bang(Obj::bang(a.clone())),
            Mor::Eps(a) => a.clone(),
            Mor::M(a, b) => Obj::bang(Obj::tensor(a.clone(), b.clone())),
            Mor::MUnit => Obj::bang(Obj::Unit),
            Mor::D(a) => Obj::tensor(Obj::bang(a.clone()), Obj::bang(a.clone())),
            Mor::E(_) => Obj::Unit,
            Mor::Sigma(a, b) => Obj::tensor(Obj::bang(b.clone()), Obj::bang(a.clone())),
        })
    }

    /// Inverse of a term built from structural isomorphisms only.
    pub fn inverse(&self) -> Result<Mor> {
        Ok(match self {
            Mor::Id(a) => Mor::Id(a.clone()),
            Mor::Seq(steps) => Mor::Seq(steps.iter().rev().map(Mor::inverse).collect::<Result<_>>()?),
            Mor::Tensor(f, g) => Mor::tensor(f.inverse()?, g.inverse()?),
            Mor::Assoc(a, b, c) => Mor::AssocInv(a.clone(), b.clone(), c.clone()),
            Mor::AssocInv(a, b, c) => Mor::Assoc(a.clone(), b.clone(), c.clone()),
            Mor::LUnit(a) => Mor::LUnitInv(a.clone()),
            Mor::LUnitInv(a) => Mor::LUnit(a.clone()),
            Mor::RUnit(a) => Mor::RUnitInv(a.clone()),
            Mor::RUnitInv(a) => Mor::RUnit(a.clone()),
            Mor::Braid(a, b) => Mor::BraidInv(a.clone(), b.clone()),
            Mor::BraidInv(a, b) => Mor::Braid(a.clone(), b.clone()),
            Mor::Coh(v, w) => Mor::Coh(w.clone(), v.clone()),
            Mor::Bang(f) => Mor::bang(f.inverse()?),
            other => return Err(Error::Unsupported(format!("{other} is not a structural isomorphism"))),
        })
    }

    /// Tabulated morphisms referenced by name inside the term.
    pub fn named_parts(&self, out: &mut Vec<Arc<NamedMor>>) {
        match self {
            Mor::Named(n) => {
                if !out.iter().any(|m| m.name == n.name) {
                    out.push(n.clone());
                }
            }
            Mor::Seq(steps) => steps.iter().for_each(|s| s.named_parts(out)),
            Mor::Tensor(f, g) => {
                f.named_parts(out);
                g.named_parts(out);
            }
            Mor::Bang(f) => f.named_parts(out),
            _ => {}
        }
    }

    /// Objects mentioned by the term (through its endpoints and indices).
    pub fn objects(&self, out: &mut Vec<Obj>) {
        let mut push = |o: &Obj| out.push(o.clone());
        match self {
            Mor::Id(a) | Mor::LUnit(a) | Mor::LUnitInv(a) | Mor::RUnit(a) | Mor::RUnitInv(a) => push(a),
            Mor::Delta(a) | Mor::Eps(a) | Mor::D(a) | Mor::E(a) => push(a),
            Mor::Assoc(a, b, c) | Mor::AssocInv(a, b, c) => {
                push(a);
                push(b);
                push(c);
            }
            Mor::Braid(a, b) | Mor::BraidInv(a, b) | Mor::Coh(a, b) | Mor::M(a, b) | Mor::Sigma(a, b) => {
                push(a);
                push(b);
            }
            Mor::Named(n) => {
                push(&n.mor.src);
                push(&n.mor.tgt);
            }
            Mor::MUnit => {}
            Mor::Seq(steps) => steps.iter().for_each(|s| s.objects(out)),
            Mor::Tensor(f, g) => {
                f.objects(out);
                g.objects(out);
            }
            Mor::Bang(f) => f.objects(out),
        }
    }
}

fn fmt_args(f: &mut fmt::Formatter<'_>, head: &str, args: &[&Obj]) -> fmt::Result {
    write!(f, "{head}[")?;
    for (i, a) in args.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{a}")?;
    }
    f.write_str("]")
}

/// Path notation. Composition is written right-to-left with ` . `, tensor
/// as `(f (x) g)`, functor action as `!f` or `!(...)`.
impl fmt::Display for Mor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mor::Id(a) => fmt_args(f, "id", &[a]),
            Mor::Named(n) => f.write_str(&n.name),
            Mor::Seq(steps) => {
                for (i, s) in steps.iter().rev().enumerate() {
                    if i > 0 {
                        f.write_str(" . ")?;
                    }
                    match s {
                        Mor::Seq(_) => write!(f, "({s})")?,
                        _ => write!(f, "{s}")?,
                    }
                }
                Ok(())
            }
            Mor::Tensor(a, b) => write!(f, "({a} (x) {b})"),
            Mor::Assoc(a, b, c) => fmt_args(f, "alpha", &[a, b, c]),
            Mor::AssocInv(a, b, c) => fmt_args(f, "alpha'", &[a, b, c]),
            Mor::LUnit(a) => fmt_args(f, "lambda", &[a]),
            Mor::LUnitInv(a) => fmt_args(f, "lambda'", &[a]),
            Mor::RUnit(a) => fmt_args(f, "rho", &[a]),
            Mor::RUnitInv(a) => fmt_args(f, "rho'", &[a]),
            Mor::Braid(a, b) => fmt_args(f, "c", &[a, b]),
            Mor::BraidInv(a, b) => fmt_args(f, "c'", &[a, b]),
            Mor::Coh(a, b) => write!(f, "coh[{a} -> {b}]"),
            Mor::Bang(g) => match &**g {
                Mor::Seq(_) => write!(f, "!({g})"),
                _ => write!(f, "!{g}"),
            },
            Mor::Delta(a) => fmt_args(f, "delta", &[a]),
            Mor::Eps(a) => fmt_args(f, "eps", &[a]),
            Mor::M(a, b) => fmt_args(f, "m", &[a, b]),
            Mor::MUnit => f.write_str("mI"),
            Mor::D(a) => fmt_args(f, "d", &[a]),
            Mor::E(a) => fmt_args(f, "e", &[a]),
            Mor::Sigma(a, b) => fmt_args(f, "sigma", &[a, b]),
        }
    }
}

impl fmt::Debug for Mor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
