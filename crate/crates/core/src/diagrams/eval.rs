//! Pointwise evaluation of paths, tabulation, and the commutation predicate.

use std::collections::BTreeSet;
use std::sync::Arc;

use rayon::prelude::*;

use crate::diagrams::coherence::{canonical_iso, coherent};
use crate::diagrams::Mor;
use crate::elem::Elem;
use crate::error::{Error, Result};
use crate::fincat::{Ctx, FinMorphism, Obj};
use crate::linexp::sigma::sigma_path;

impl Ctx<'_> {
    /// Type-checks a term, inserting canonical coherence isomorphisms at
    /// every junction whose endpoints differ only by bracketing or units.
    /// Inserted steps appear as `coh[..]` in the returned term.
    pub fn elaborate(&self, mor: &Mor) -> Result<Mor> {
        Ok(match mor {
            Mor::Seq(steps) => {
                let mut out: Vec<Mor> = Vec::with_capacity(steps.len());
                for (i, s) in steps.iter().enumerate() {
                    let s = self.elaborate(s)?;
                    if let Some(prev) = out.last() {
                        let (t, src) = (prev.tgt()?, s.src()?);
                        if t != src {
                            if !coherent(&t, &src) {
                                return Err(Error::IllFormedPath {
                                    index: i,
                                    detail: format!("{t} does not match {src}"),
                                });
                            }
                            out.push(Mor::Coh(t, src));
                        }
                    }
                    out.push(s);
                }
                Mor::Seq(out)
            }
            Mor::Tensor(f, g) => Mor::tensor(self.elaborate(f)?, self.elaborate(g)?),
            Mor::Bang(f) => Mor::bang(self.elaborate(f)?),
            other => other.clone(),
        })
    }

    fn expansion(&self, key: u8, a: &Obj, b: &Obj) -> Result<Arc<Mor>> {
        let k = (key, a.clone(), b.clone());
        if let Some(m) = self.expansions.lock().unwrap().get(&k) {
            return Ok(m.clone());
        }
        let m = match key {
            0 => canonical_iso(a, b)?,
            _ => self.elaborate(&sigma_path(a, b))?,
        };
        let m = Arc::new(m);
        self.expansions.lock().unwrap().insert(k, m.clone());
        Ok(m)
    }

    /// Memoised image of a primitive step, keyed by a step tag and its objects.
    fn cached(&self, tag: u8, a: &Obj, b: &Obj, x: &Elem, f: impl FnOnce() -> Result<Vec<Elem>>) -> Result<Vec<Elem>> {
        let k = (tag, a.clone(), b.clone(), x.clone());
        if let Some(v) = self.images.lock().unwrap().get(&k) {
            return Ok(v.to_vec());
        }
        let v = f()?;
        self.images.lock().unwrap().insert(k, v.as_slice().into());
        Ok(v)
    }

    /// Sorted image of one element under an (elaborated) term.
    pub fn image(&self, mor: &Mor, x: &Elem) -> Result<Vec<Elem>> {
        let model = self.model;
        Ok(match mor {
            Mor::Id(_) => vec![x.clone()],
            Mor::Named(n) => n.mor.image(x).to_vec(),
            Mor::Seq(steps) => {
                let mut current = vec![x.clone()];
                for s in steps {
                    let mut next = BTreeSet::new();
                    for y in &current {
                        next.extend(self.image(s, y)?);
                    }
                    current = next.into_iter().collect();
                    if current.is_empty() {
                        break;
                    }
                }
                current
            }
            Mor::Tensor(f, g) => {
                let (a, b, c, d) = (f.src()?, g.src()?, f.tgt()?, g.tgt()?);
                model.tensor_image(self, (&a, &b), (&c, &d), x, &|p| self.image(f, p), &|q| self.image(g, q))?
            }
            Mor::Assoc(a, b, c) => vec![model.assoc_image(self, a, b, c, x, false)?],
            Mor::AssocInv(a, b, c) => vec![model.assoc_image(self, a, b, c, x, true)?],
            Mor::LUnit(a) => vec![model.lunit_image(self, a, x, false)?],
            Mor::LUnitInv(a) => vec![model.lunit_image(self, a, x, true)?],
            Mor::RUnit(a) => vec![model.runit_image(self, a, x, false)?],
            Mor::RUnitInv(a) => vec![model.runit_image(self, a, x, true)?],
            Mor::Braid(a, b) => model.braid_image(self, a, b, x, false)?,
            Mor::BraidInv(a, b) => model.braid_image(self, a, b, x, true)?,
            Mor::Coh(a, b) => {
                let m = self.expansion(0, a, b)?;
                self.image(&m, x)?
            }
            Mor::Sigma(a, b) => self.cached(1, a, b, x, || {
                let m = self.expansion(1, a, b)?;
                self.image(&m, x)
            })?,
            Mor::Bang(f) => self.comonad()?.bang_map(self, f, x)?,
            Mor::Delta(a) => self.cached(2, a, &Obj::Unit, x, || self.comonad()?.delta(self, a, x))?,
            Mor::Eps(a) => self.comonad()?.epsilon(self, a, x)?,
            Mor::M(a, b) => self.cached(3, a, b, x, || self.comonad()?.m(self, a, b, x))?,
            Mor::MUnit => self.comonad()?.m_unit(self, x)?,
            Mor::D(a) => self.cached(4, a, &Obj::Unit, x, || self.comonad()?.d(self, a, x))?,
            Mor::E(a) => self.comonad()?.e(self, a, x)?,
        })
    }

    /// Evaluates a path to a tabulated morphism on the full source carrier.
    pub fn eval_path(&self, mor: &Mor) -> Result<FinMorphism> {
        let mor = self.elaborate(mor)?;
        let (src, tgt) = (mor.src()?, mor.tgt()?);
        let carrier = self.carrier(&src)?;
        let images = carrier
            .iter()
            .map(|x| {
                self.check_time()?;
                Ok((x.clone(), self.image(&mor, x)?))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(FinMorphism::from_images(src, tgt, self.model.mor_kind(), images))
    }

    /// Tabulates the canonical coherence isomorphism between two words.
    pub fn canonical_iso(&self, w1: &Obj, w2: &Obj) -> Result<FinMorphism> {
        self.eval_path(&canonical_iso(w1, w2)?)
    }
}

/// A source element on which two composites disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Discrepancy {
    pub witness: Elem,
    pub lhs: Vec<Elem>,
    pub rhs: Vec<Elem>,
}

#[derive(Clone, Debug)]
pub struct Comparison {
    /// The two composites after elaboration, with aligned endpoints.
    pub lhs: Mor,
    pub rhs: Mor,
    /// Source elements compared.
    pub checked: usize,
    /// Source elements skipped because truncation made them unstable.
    pub excluded: usize,
    /// Compared elements whose images at the context's own grade differ
    /// from the settled ones, so that their evaluation left that grade.
    pub widened: usize,
    pub discrepancy: Option<Discrepancy>,
}

impl Comparison {
    pub fn holds(&self) -> bool {
        self.discrepancy.is_none()
    }
}

/// Elaborates both composites and aligns their endpoints by coherence.
pub fn align(ctx: &Ctx, p1: &Mor, p2: &Mor) -> Result<(Mor, Mor)> {
    let p1 = ctx.elaborate(p1)?;
    let mut p2 = ctx.elaborate(p2)?;
    let (s1, s2) = (p1.src()?, p2.src()?);
    if s1 != s2 {
        if !coherent(&s1, &s2) {
            return Err(Error::EndpointMismatch(format!("sources {s1} and {s2}")));
        }
        p2 = Mor::Coh(s1, s2).then(p2);
    }
    let (t1, t2) = (p1.tgt()?, p2.tgt()?);
    if t1 != t2 {
        if !coherent(&t1, &t2) {
            return Err(Error::EndpointMismatch(format!("targets {t1} and {t2}")));
        }
        p2 = p2.then(Mor::Coh(t2, t1));
    }
    Ok((p1, p2))
}

/// Decides whether two paths agree as graphs on every source element.
pub fn diagram_commutes(ctx: &Ctx, p1: &Mor, p2: &Mor) -> Result<Comparison> {
    compare(ctx, None, p1, p2)
}

/// Compares two paths. With `wider` set (graded mode), images are first
/// taken at the context grade and then one grade up at a time, each time
/// restricted to in-grade targets, until two consecutive grades agree. An
/// element still moving at grade `2k + 1` is excluded and counted rather
/// than compared.
pub fn compare(ctx: &Ctx, wider: Option<&Ctx>, p1: &Mor, p2: &Mor) -> Result<Comparison> {
    enum Outcome {
        Same,
        Excluded,
        Differs(Discrepancy),
    }
    struct Settled {
        images: Option<(Vec<Elem>, Vec<Elem>)>,
        widened: bool,
    }
    let (lhs, rhs) = align(ctx, p1, p2)?;
    let carrier = ctx.carrier(&lhs.src()?)?;
    let cap = ctx.grade.map(|k| 2 * k + 1);
    let at = |c: &Ctx, x: &Elem| -> Result<(Vec<Elem>, Vec<Elem>)> {
        let keep = |v: Vec<Elem>| -> Vec<Elem> { v.into_iter().filter(|y| ctx.in_grade(y)).collect() };
        Ok((keep(c.image(&lhs, x)?), keep(c.image(&rhs, x)?)))
    };
    let settle = |x: &Elem| -> Result<Settled> {
        let mut cur = at(ctx, x)?;
        let Some(mut level) = wider else { return Ok(Settled { images: Some(cur), widened: false }) };
        let mut widened = false;
        loop {
            let next = at(level, x)?;
            if next == cur {
                return Ok(Settled { images: Some(cur), widened });
            }
            if level.grade >= cap {
                return Ok(Settled { images: None, widened: true });
            }
            cur = next;
            widened = true;
            level = level.wider().expect("graded context");
        }
    };
    let outcomes: Vec<Result<(Outcome, bool)>> = carrier
        .par_iter()
        .map(|x| {
            ctx.check_time()?;
            let s = settle(x)?;
            let o = match s.images {
                None => Outcome::Excluded,
                Some((l, r)) if l == r => Outcome::Same,
                Some((l, r)) => Outcome::Differs(Discrepancy { witness: x.clone(), lhs: l, rhs: r }),
            };
            Ok((o, s.widened))
        })
        .collect();
    let (mut excluded, mut widened) = (0, 0);
    let mut discrepancy = None;
    for o in outcomes {
        let (o, w) = o?;
        if w && !matches!(o, Outcome::Excluded) {
            widened += 1;
        }
        match o {
            Outcome::Same => {}
            Outcome::Excluded => excluded += 1,
            Outcome::Differs(d) => {
                discrepancy.get_or_insert(d);
            }
        }
    }
    Ok(Comparison { lhs, rhs, checked: carrier.len() - excluded, excluded, widened, discrepancy })
}
