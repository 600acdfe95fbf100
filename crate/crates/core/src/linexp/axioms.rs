//! The axiom suites: monoidal comonad laws, the eight linear exponential
//! conditions, derived properties and agreement with a declared braiding.

use crate::diagrams::{Mor, NamedMor};
use crate::error::Result;
use crate::fincat::laws::{sample, HomTable};
use crate::fincat::{Braiding, Ctx, FinMorphism, Obj};
use crate::linexp::sigma::{sigma_path, sigma_path_simplified};
use crate::report::{commutes, run_check, AxiomReport, Check, CheckRecord, Counterexample};

fn id(o: &Obj) -> Mor {
    Mor::Id(o.clone())
}

fn t(f: Mor, g: Mor) -> Mor {
    Mor::tensor(f, g)
}

fn b(o: &Obj) -> Obj {
    Obj::bang(o.clone())
}

fn tn(a: &Obj, c: &Obj) -> Obj {
    Obj::tensor(a.clone(), c.clone())
}

fn sigma(x: &Obj, y: &Obj) -> Mor {
    Mor::Sigma(x.clone(), y.clone())
}

fn m(x: &Obj, y: &Obj) -> Mor {
    Mor::M(x.clone(), y.clone())
}

/// `!X (x) !X`
pub fn delta_obj(x: &Obj) -> Obj {
    tn(&b(x), &b(x))
}

/// The monoidal structure of `X |-> !X (x) !X`:
/// `(m (x) m) . (id (x) sigma (x) id) : (!X (x) !X) (x) (!Y (x) !Y) -> !(X (x) Y) (x) !(X (x) Y)`.
pub fn delta_monoidal(x: &Obj, y: &Obj) -> Mor {
    Mor::seq([
        Mor::Coh(tn(&delta_obj(x), &delta_obj(y)), tn(&tn(&b(x), &tn(&b(x), &b(y))), &b(y))),
        t(t(id(&b(x)), sigma(x, y)), id(&b(y))),
        Mor::Coh(tn(&tn(&b(x), &tn(&b(y), &b(x))), &b(y)), tn(&tn(&b(x), &b(y)), &tn(&b(x), &b(y)))),
        t(m(x, y), m(x, y)),
    ])
}

/// Shared quantification data for one run: sampled objects and their homs.
pub struct Suite<'c, 'a> {
    pub ctx: &'c Ctx<'a>,
    pub objs: Vec<Obj>,
    homs: Option<HomTable>,
}

impl<'c, 'a> Suite<'c, 'a> {
    pub fn new(ctx: &'c Ctx<'a>, bound: usize) -> Self {
        Suite { ctx, objs: sample(ctx, bound), homs: None }
    }

    pub fn with_objects(ctx: &'c Ctx<'a>, objs: Vec<Obj>) -> Self {
        Suite { ctx, objs, homs: None }
    }

    fn homs(&mut self) -> Result<&HomTable> {
        if self.homs.is_none() {
            self.homs = Some(HomTable::build(self.ctx, &self.objs)?);
        }
        Ok(self.homs.as_ref().unwrap())
    }

    /// Every enumerated morphism between sampled objects as a named term.
    fn hom_terms(&mut self) -> Result<Vec<(Obj, Obj, Mor)>> {
        let objs = self.objs.clone();
        let table = self.homs()?;
        Ok(table.all().into_iter().map(|(i, j, f)| (objs[i].clone(), objs[j].clone(), Mor::named("f", f.clone()))).collect())
    }

    fn singles(&self, chk: &mut Check, law: impl Fn(&Obj) -> Vec<(Mor, Mor)>) -> Result<()> {
        for x in &self.objs {
            self.ctx.check_time()?;
            for (l, r) in law(x) {
                commutes(chk, self.ctx, &l, &r)?;
            }
        }
        Ok(())
    }

    fn pairs(&self, chk: &mut Check, law: impl Fn(&Obj, &Obj) -> Vec<(Mor, Mor)>) -> Result<()> {
        for x in &self.objs {
            for y in &self.objs {
                self.ctx.check_time()?;
                for (l, r) in law(x, y) {
                    commutes(chk, self.ctx, &l, &r)?;
                }
            }
        }
        Ok(())
    }

    fn triples(&self, chk: &mut Check, law: impl Fn(&Obj, &Obj, &Obj) -> Vec<(Mor, Mor)>) -> Result<()> {
        for x in &self.objs {
            for y in &self.objs {
                for z in &self.objs {
                    self.ctx.check_time()?;
                    for (l, r) in law(x, y, z) {
                        commutes(chk, self.ctx, &l, &r)?;
                    }
                }
            }
        }
        Ok(())
    }

    /// `law(f, a, b, c)` for every enumerated `f : a -> b` and sampled `c`.
    fn along_homs(&mut self, chk: &mut Check, law: impl Fn(&Mor, &Obj, &Obj, &Obj) -> Vec<(Mor, Mor)>) -> Result<()> {
        let homs = self.hom_terms()?;
        for (a, bb, f) in &homs {
            for c in &self.objs {
                self.ctx.check_time()?;
                for (l, r) in law(f, a, bb, c) {
                    commutes(chk, self.ctx, &l, &r)?;
                }
            }
        }
        Ok(())
    }

    /// Monoidal comonad laws.
    pub fn comonad(&mut self) -> AxiomReport {
        let mut r = AxiomReport::default();
        r.push(run_check("comonad.structure-homs", |chk| self.structure_homs(chk)));
        r.push(run_check("comonad.functor", |chk| {
            self.singles(chk, |x| vec![(Mor::bang(id(x)), id(&b(x)))])?;
            let (objs, ctx) = (self.objs.clone(), self.ctx);
            let table = self.homs()?;
            for i in 0..objs.len() {
                for j in 0..objs.len() {
                    for f in table.get(i, j) {
                        for k in 0..objs.len() {
                            ctx.check_time()?;
                            for g in table.get(j, k) {
                                let (fm, gm) = (Mor::named("f", f.clone()), Mor::named("g", g.clone()));
                                commutes(chk, ctx, &Mor::bang(fm.clone().then(gm.clone())), &Mor::bang(fm).then(Mor::bang(gm)))?;
                            }
                        }
                    }
                }
            }
            Ok(())
        }));
        r.push(run_check("comonad.delta-natural", |chk| {
            self.along_homs(chk, |f, a, bb, _| {
                vec![(Mor::bang(f.clone()).then(Mor::Delta(bb.clone())), Mor::Delta(a.clone()).then(Mor::bang(Mor::bang(f.clone()))))]
            })
        }));
        r.push(run_check("comonad.eps-natural", |chk| {
            self.along_homs(chk, |f, a, bb, _| vec![(Mor::bang(f.clone()).then(Mor::Eps(bb.clone())), Mor::Eps(a.clone()).then(f.clone()))])
        }));
        r.push(run_check("comonad.m-natural", |chk| {
            self.along_homs(chk, |f, a, bb, c| {
                vec![
                    (t(Mor::bang(f.clone()), id(&b(c))).then(m(bb, c)), m(a, c).then(Mor::bang(t(f.clone(), id(c))))),
                    (t(id(&b(c)), Mor::bang(f.clone())).then(m(c, bb)), m(c, a).then(Mor::bang(t(id(c), f.clone())))),
                ]
            })
        }));
        r.push(run_check("comonad.coassoc", |chk| {
            self.singles(chk, |x| vec![(Mor::Delta(x.clone()).then(Mor::Delta(b(x))), Mor::Delta(x.clone()).then(Mor::bang(Mor::Delta(x.clone()))))])
        }));
        r.push(run_check("comonad.counit", |chk| {
            self.singles(chk, |x| {
                vec![
                    (Mor::Delta(x.clone()).then(Mor::Eps(b(x))), id(&b(x))),
                    (Mor::Delta(x.clone()).then(Mor::bang(Mor::Eps(x.clone()))), id(&b(x))),
                ]
            })
        }));
        r.push(run_check("comonad.monoidal", |chk| {
            self.singles(chk, |x| {
                vec![
                    (Mor::seq([t(Mor::MUnit, id(&b(x))), m(&Obj::Unit, x), Mor::bang(Mor::LUnit(x.clone()))]), Mor::LUnit(b(x))),
                    (Mor::seq([t(id(&b(x)), Mor::MUnit), m(x, &Obj::Unit), Mor::bang(Mor::RUnit(x.clone()))]), Mor::RUnit(b(x))),
                ]
            })?;
            self.triples(chk, |x, y, z| {
                vec![(
                    Mor::seq([t(m(x, y), id(&b(z))), m(&tn(x, y), z), Mor::bang(Mor::Assoc(x.clone(), y.clone(), z.clone()))]),
                    Mor::seq([Mor::Assoc(b(x), b(y), b(z)), t(id(&b(x)), m(y, z)), m(x, &tn(y, z))]),
                )]
            })
        }));
        r.push(run_check("comonad.delta-monoidal", |chk| {
            commutes(chk, self.ctx, &Mor::MUnit.then(Mor::Delta(Obj::Unit)), &Mor::MUnit.then(Mor::bang(Mor::MUnit)))?;
            self.pairs(chk, |x, y| {
                vec![(
                    m(x, y).then(Mor::Delta(tn(x, y))),
                    Mor::seq([t(Mor::Delta(x.clone()), Mor::Delta(y.clone())), m(&b(x), &b(y)), Mor::bang(m(x, y))]),
                )]
            })
        }));
        r.push(run_check("comonad.eps-monoidal", |chk| {
            commutes(chk, self.ctx, &Mor::MUnit.then(Mor::Eps(Obj::Unit)), &id(&Obj::Unit))?;
            self.pairs(chk, |x, y| vec![(m(x, y).then(Mor::Eps(tn(x, y))), t(Mor::Eps(x.clone()), Mor::Eps(y.clone())))])
        }));
        r
    }

    /// Tabulated structure maps are morphisms of the model.
    fn structure_homs(&self, chk: &mut Check) -> Result<()> {
        let ctx = self.ctx;
        let comonoid = ctx.comonad()?.has_comonoid();
        let mut probe = |name: &str, term: Mor| -> Result<()> {
            let f: FinMorphism = ctx.eval_path(&term)?;
            chk.tick();
            if !ctx.model.is_hom(ctx, &f)? {
                chk.fail(Counterexample::not_a_hom(&NamedMor { name: name.into(), mor: f }));
            }
            Ok(())
        };
        probe("m_I", Mor::MUnit)?;
        for x in &self.objs {
            ctx.check_time()?;
            probe("delta", Mor::Delta(x.clone()))?;
            probe("eps", Mor::Eps(x.clone()))?;
            if comonoid {
                probe("d", Mor::D(x.clone()))?;
                probe("e", Mor::E(x.clone()))?;
            }
            for y in &self.objs {
                probe("m", m(x, y))?;
            }
        }
        Ok(())
    }

    /// Naturality of `d` and monoidal naturality of `e`.
    pub fn comonoid_maps(&mut self) -> AxiomReport {
        let mut r = AxiomReport::default();
        r.push(run_check("def2.d-natural", |chk| {
            self.along_homs(chk, |f, a, bb, _| {
                vec![(Mor::bang(f.clone()).then(Mor::D(bb.clone())), Mor::D(a.clone()).then(t(Mor::bang(f.clone()), Mor::bang(f.clone()))))]
            })
        }));
        r.push(run_check("def2.e-natural", |chk| {
            self.along_homs(chk, |f, a, bb, _| vec![(Mor::bang(f.clone()).then(Mor::E(bb.clone())), Mor::E(a.clone()))])?;
            commutes(chk, self.ctx, &Mor::MUnit.then(Mor::E(Obj::Unit)), &id(&Obj::Unit))?;
            self.pairs(chk, |x, y| vec![(m(x, y).then(Mor::E(tn(x, y))), t(Mor::E(x.clone()), Mor::E(y.clone())).then(Mor::LUnit(Obj::Unit)))])
        }));
        r
    }

    /// Condition `k` of the linear exponential axioms, `1 <= k <= 8`.
    pub fn condition(&mut self, k: u8) -> CheckRecord {
        let id_str = format!("def2.cond{k}");
        run_check(&id_str, |chk| match k {
            1 => self.triples(chk, |x, y, z| {
                let xy = tn(x, y);
                let yz = tn(y, z);
                vec![(
                    t(delta_monoidal(x, y), id(&delta_obj(z))).then(delta_monoidal(&xy, z)),
                    t(id(&delta_obj(x)), delta_monoidal(y, z)).then(delta_monoidal(x, &yz)),
                )]
            }),
            2 => self.pairs(chk, |x, y| {
                vec![(sigma(&b(x), &b(y)).then(m(&b(y), &b(x))), m(&b(x), &b(y)).then(Mor::bang(sigma(x, y))))]
            }),
            3 => self.pairs(chk, |x, y| vec![(sigma(x, y).then(sigma(y, x)), id(&tn(&b(x), &b(y))))]),
            4 => self.triples(chk, |x, y, z| {
                let bxy = tn(&b(x), &b(y));
                vec![(
                    Mor::seq([
                        t(t(Mor::Delta(x.clone()), Mor::Delta(y.clone())), id(&b(z))),
                        t(m(&b(x), &b(y)), id(&b(z))),
                        sigma(&bxy, z),
                        t(id(&b(z)), Mor::Eps(bxy.clone())),
                    ]),
                    t(id(&b(x)), sigma(y, z)).then(t(sigma(x, z), id(&b(y)))),
                )]
            }),
            5 => {
                commutes(chk, self.ctx, &Mor::MUnit.then(Mor::D(Obj::Unit)), &t(Mor::MUnit, Mor::MUnit))?;
                self.pairs(chk, |x, y| {
                    vec![(
                        t(Mor::D(x.clone()), Mor::D(y.clone())).then(delta_monoidal(x, y)),
                        m(x, y).then(Mor::D(tn(x, y))),
                    )]
                })
            }
            6 => self.singles(chk, |x| {
                let bx = b(x);
                vec![
                    (Mor::seq([Mor::D(x.clone()), t(Mor::E(x.clone()), id(&bx)), Mor::LUnit(bx.clone())]), id(&bx)),
                    (Mor::seq([Mor::D(x.clone()), t(id(&bx), Mor::E(x.clone())), Mor::RUnit(bx.clone())]), id(&bx)),
                    (Mor::D(x.clone()).then(t(Mor::D(x.clone()), id(&bx))), Mor::D(x.clone()).then(t(id(&bx), Mor::D(x.clone())))),
                ]
            }),
            7 => self.singles(chk, |x| {
                vec![
                    (
                        Mor::seq([Mor::D(x.clone()), t(Mor::Delta(x.clone()), Mor::Delta(x.clone())), m(&b(x), &b(x))]),
                        Mor::Delta(x.clone()).then(Mor::bang(Mor::D(x.clone()))),
                    ),
                    (Mor::E(x.clone()).then(Mor::MUnit), Mor::Delta(x.clone()).then(Mor::bang(Mor::E(x.clone())))),
                ]
            }),
            8 => self.singles(chk, |x| {
                vec![
                    (Mor::Delta(x.clone()).then(Mor::D(b(x))), Mor::D(x.clone()).then(t(Mor::Delta(x.clone()), Mor::Delta(x.clone())))),
                    (Mor::Delta(x.clone()).then(Mor::E(b(x))), Mor::E(x.clone())),
                ]
            }),
            _ => Err(crate::error::Error::Unsupported(format!("no condition {k}"))),
        })
    }

    pub fn def2(&mut self) -> AxiomReport {
        let mut r = self.comonoid_maps();
        for k in 1..=8 {
            r.push(self.condition(k));
        }
        r
    }

    /// Consequences of the axioms, each reported separately.
    pub fn derived(&mut self) -> AxiomReport {
        let mut r = AxiomReport::default();
        r.push(run_check("derived.cocommutative", |chk| {
            self.singles(chk, |x| vec![(Mor::D(x.clone()).then(sigma(x, x)), Mor::D(x.clone()))])
        }));
        r.push(run_check("derived.sigma-natural", |chk| {
            self.along_homs(chk, |f, a, bb, c| {
                let bf = Mor::bang(f.clone());
                vec![
                    (t(bf.clone(), id(&b(c))).then(sigma(bb, c)), sigma(a, c).then(t(id(&b(c)), bf.clone()))),
                    (t(id(&b(c)), bf.clone()).then(sigma(c, bb)), sigma(c, a).then(t(bf, id(&b(c))))),
                ]
            })
        }));
        r.push(run_check("derived.delta-monoidal", |chk| {
            let unit2 = t(Mor::MUnit, Mor::MUnit);
            self.singles(chk, |x| {
                let dx = delta_obj(x);
                vec![
                    (
                        Mor::seq([t(unit2.clone(), id(&dx)), delta_monoidal(&Obj::Unit, x), t(Mor::bang(Mor::LUnit(x.clone())), Mor::bang(Mor::LUnit(x.clone())))]),
                        Mor::LUnit(dx.clone()),
                    ),
                    (
                        Mor::seq([t(id(&dx), unit2.clone()), delta_monoidal(x, &Obj::Unit), t(Mor::bang(Mor::RUnit(x.clone())), Mor::bang(Mor::RUnit(x.clone())))]),
                        Mor::RUnit(dx.clone()),
                    ),
                ]
            })?;
            self.along_homs(chk, |f, a, bb, c| {
                let df = t(Mor::bang(f.clone()), Mor::bang(f.clone()));
                let dc = id(&delta_obj(c));
                vec![
                    (t(df.clone(), dc.clone()).then(delta_monoidal(bb, c)), delta_monoidal(a, c).then(t(Mor::bang(t(f.clone(), id(c))), Mor::bang(t(f.clone(), id(c)))))),
                    (t(dc, df).then(delta_monoidal(c, bb)), delta_monoidal(c, a).then(t(Mor::bang(t(id(c), f.clone())), Mor::bang(t(id(c), f.clone()))))),
                ]
            })
        }));
        r.push(run_check("derived.d-monoidal", |chk| {
            commutes(chk, self.ctx, &Mor::MUnit.then(Mor::D(Obj::Unit)), &t(Mor::MUnit, Mor::MUnit))?;
            self.pairs(chk, |x, y| {
                vec![(t(Mor::D(x.clone()), Mor::D(y.clone())).then(delta_monoidal(x, y)), m(x, y).then(Mor::D(tn(x, y))))]
            })
        }));
        r.push(run_check("derived.sigma-routes", |chk| self.pairs(chk, |x, y| vec![(sigma(x, y), sigma_path_simplified(x, y))])));
        r
    }

    /// `sigma` agrees with the declared symmetry or braiding on `!`-objects,
    /// and the composite with the inverse swap is the identity.
    pub fn symmetric(&mut self, agreement_id: &str) -> AxiomReport {
        let mut r = AxiomReport::default();
        let declared = self.ctx.model.braiding();
        if declared == Braiding::None {
            r.push(CheckRecord::skipped(agreement_id, "model declares no symmetry or braiding"));
            r.push(CheckRecord::skipped("sym.prop1", "model declares no symmetry or braiding"));
            return r;
        }
        r.push(run_check(agreement_id, |chk| self.pairs(chk, |x, y| vec![(sigma(x, y), Mor::Braid(b(x), b(y)))])));
        r.push(run_check("sym.prop1", |chk| {
            self.pairs(chk, |x, y| {
                let back = match declared {
                    Braiding::Symmetric => Mor::Braid(b(y), b(x)),
                    _ => Mor::BraidInv(b(x), b(y)),
                };
                vec![(sigma_path(x, y).then(back), id(&tn(&b(x), &b(y))))]
            })
        }));
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::FinObject;

    fn atom(id: &str) -> Obj {
        Obj::base(FinObject { id: id.into(), carrier: vec![], payload: crate::fincat::Payload::Plain })
    }

    #[test]
    fn delta_monoidal_is_well_typed() {
        let (x, y) = (atom("X"), atom("Y"));
        let p = delta_monoidal(&x, &y);
        assert_eq!(p.src().unwrap(), tn(&delta_obj(&x), &delta_obj(&y)));
        assert_eq!(p.tgt().unwrap(), delta_obj(&tn(&x, &y)));
    }
}
