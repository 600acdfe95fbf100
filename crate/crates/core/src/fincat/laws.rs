//! Self-check suites for the category and monoidal laws of a model.

use std::collections::HashMap;

use crate::diagrams::Mor;
use crate::elem::Elem;
use crate::error::Result;
use crate::fincat::homs::{brute_force_homs, enumerate_homs};
use crate::fincat::{compose, Braiding, Ctx, FinMorphism, Obj};
use crate::report::{commutes, run_check, AxiomReport, Check, CheckRecord, Counterexample, Evidence};

/// Sampled base objects with carriers of size `<= bound`.
pub fn sample(ctx: &Ctx, bound: usize) -> Vec<Obj> {
    ctx.model.sample_objects(bound).into_iter().map(Obj::Base).collect()
}

/// Hom-sets between sampled objects, computed once.
pub struct HomTable {
    homs: HashMap<(usize, usize), Vec<FinMorphism>>,
}

impl HomTable {
    pub fn build(ctx: &Ctx, objs: &[Obj]) -> Result<Self> {
        let mut homs = HashMap::new();
        for (i, a) in objs.iter().enumerate() {
            for (j, b) in objs.iter().enumerate() {
                homs.insert((i, j), enumerate_homs(ctx, a, b)?);
            }
        }
        Ok(HomTable { homs })
    }

    pub fn get(&self, i: usize, j: usize) -> &[FinMorphism] {
        self.homs.get(&(i, j)).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Every enumerated morphism with the indices of its endpoints.
    pub fn all(&self) -> Vec<(usize, usize, &FinMorphism)> {
        let mut keys: Vec<_> = self.homs.keys().copied().collect();
        keys.sort();
        keys.into_iter().flat_map(|(i, j)| self.get(i, j).iter().map(move |f| (i, j, f))).collect()
    }
}

fn graph_mismatch(name: &str, lhs: &FinMorphism, rhs: &FinMorphism) -> Option<Counterexample> {
    if lhs == rhs {
        return None;
    }
    let witness = lhs
        .graph()
        .keys()
        .chain(rhs.graph().keys())
        .find(|x| lhs.image(x) != rhs.image(x))
        .cloned()
        .unwrap_or(Elem::Star);
    let mut objects = Vec::new();
    lhs.src.bases(&mut objects);
    lhs.tgt.bases(&mut objects);
    let mut objects: Vec<_> = objects.into_iter().map(|o| (*o).clone()).collect();
    objects.sort();
    objects.dedup();
    Some(Counterexample {
        objects,
        named: Vec::new(),
        evidence: Evidence::Diagram {
            lhs: format!("{name} (lhs)"),
            rhs: format!("{name} (rhs)"),
            lhs_image: lhs.image(&witness).to_vec(),
            rhs_image: rhs.image(&witness).to_vec(),
            witness,
            grade: None,
        },
    })
}

pub type ComposeFn<'f> = &'f dyn Fn(&FinMorphism, &FinMorphism) -> Result<FinMorphism>;

/// Identity and associativity of composition over every composable triple
/// of enumerated morphisms between sampled objects.
pub fn check_category_laws(ctx: &Ctx, bound: usize) -> CheckRecord {
    check_category_laws_with(ctx, bound, &compose)
}

pub fn check_category_laws_with(ctx: &Ctx, bound: usize, comp: ComposeFn) -> CheckRecord {
    run_check("selfcheck.category", |chk| {
        let objs = sample(ctx, bound);
        let table = HomTable::build(ctx, &objs)?;
        let kind = ctx.model.mor_kind();
        let ids: Vec<FinMorphism> =
            objs.iter().map(|o| Ok(FinMorphism::identity(o.clone(), &ctx.carrier(o)?, kind))).collect::<Result<_>>()?;
        for (i, j, f) in table.all() {
            chk.tick();
            if let Some(cx) = graph_mismatch("id . f = f", &comp(&ids[i], f)?, f) {
                chk.fail(cx);
            }
            if let Some(cx) = graph_mismatch("f . id = f", &comp(f, &ids[j])?, f) {
                chk.fail(cx);
            }
        }
        let n = objs.len();
        for a in 0..n {
            for b in 0..n {
                for f in table.get(a, b) {
                    for c in 0..n {
                        for g in table.get(b, c) {
                            let fg = comp(f, g)?;
                            for d in 0..n {
                                ctx.check_time()?;
                                for h in table.get(c, d) {
                                    chk.tick();
                                    if let Some(cx) = graph_mismatch("h . (g . f) = (h . g) . f", &comp(&fg, h)?, &comp(f, &comp(g, h)?)?) {
                                        chk.fail(cx);
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    })
}

fn id(o: &Obj) -> Mor {
    Mor::Id(o.clone())
}

fn t(f: Mor, g: Mor) -> Mor {
    Mor::tensor(f, g)
}

fn named(f: &FinMorphism) -> Mor {
    Mor::named("f", f.clone())
}

/// Structural isomorphisms of a model are homs of that model.
fn structural_homs(chk: &mut Check, ctx: &Ctx, objs: &[Obj]) -> Result<()> {
    let mut probe = |m: Mor| -> Result<()> {
        let f = ctx.eval_path(&m)?;
        chk.tick();
        if !ctx.model.is_hom(ctx, &f)? {
            chk.fail(Counterexample::not_a_hom(&crate::diagrams::NamedMor { name: "structural".into(), mor: f }));
        }
        Ok(())
    };
    for a in objs {
        probe(Mor::LUnit(a.clone()))?;
        probe(Mor::RUnit(a.clone()))?;
        for b in objs {
            for c in objs {
                probe(Mor::Assoc(a.clone(), b.clone(), c.clone()))?;
            }
        }
    }
    Ok(())
}

/// Bifunctoriality of the tensor, naturality and invertibility of the
/// associator and unitors, pentagon and triangle.
pub fn check_monoidal_laws(ctx: &Ctx, bound: usize) -> CheckRecord {
    run_check("selfcheck.monoidal", |chk| {
        let objs = sample(ctx, bound);
        let table = HomTable::build(ctx, &objs)?;
        structural_homs(chk, ctx, &objs)?;
        let homs = table.all();
        for &(i, j, f) in &homs {
            let (a, a2) = (&objs[i], &objs[j]);
            let fm = named(f);
            for &(k, l, g) in &homs {
                let (b, b2) = (&objs[k], &objs[l]);
                let gm = Mor::named("g", g.clone());
                let both = t(fm.clone(), gm.clone());
                commutes(chk, ctx, &both, &t(fm.clone(), id(b)).then(t(id(a2), gm.clone())))?;
                commutes(chk, ctx, &both, &t(id(a), gm.clone()).then(t(fm.clone(), id(b2))))?;
            }
            commutes(chk, ctx, &t(id(&Obj::Unit), fm.clone()).then(Mor::LUnit(a2.clone())), &Mor::LUnit(a.clone()).then(fm.clone()))?;
            commutes(chk, ctx, &t(fm.clone(), id(&Obj::Unit)).then(Mor::RUnit(a2.clone())), &Mor::RUnit(a.clone()).then(fm.clone()))?;
            for b in &objs {
                for c in &objs {
                    ctx.check_time()?;
                    let (ab, bc) = (b.clone(), c.clone());
                    commutes(
                        chk,
                        ctx,
                        &t(t(fm.clone(), id(b)), id(c)).then(Mor::Assoc(a2.clone(), ab.clone(), bc.clone())),
                        &Mor::Assoc(a.clone(), ab.clone(), bc.clone()).then(t(fm.clone(), t(id(b), id(c)))),
                    )?;
                    commutes(
                        chk,
                        ctx,
                        &t(t(id(b), fm.clone()), id(c)).then(Mor::Assoc(ab.clone(), a2.clone(), bc.clone())),
                        &Mor::Assoc(ab.clone(), a.clone(), bc.clone()).then(t(id(b), t(fm.clone(), id(c)))),
                    )?;
                    commutes(
                        chk,
                        ctx,
                        &t(t(id(b), id(c)), fm.clone()).then(Mor::Assoc(ab.clone(), bc.clone(), a2.clone())),
                        &Mor::Assoc(ab.clone(), bc.clone(), a.clone()).then(t(id(b), t(id(c), fm.clone()))),
                    )?;
                }
            }
        }
        for a in &objs {
            let ia = id(a);
            commutes(chk, ctx, &Mor::LUnit(a.clone()).then(Mor::LUnitInv(a.clone())), &id(&Obj::tensor(Obj::Unit, a.clone())))?;
            commutes(chk, ctx, &Mor::LUnitInv(a.clone()).then(Mor::LUnit(a.clone())), &ia)?;
            commutes(chk, ctx, &Mor::RUnit(a.clone()).then(Mor::RUnitInv(a.clone())), &id(&Obj::tensor(a.clone(), Obj::Unit)))?;
            commutes(chk, ctx, &Mor::RUnitInv(a.clone()).then(Mor::RUnit(a.clone())), &ia)?;
            for b in &objs {
                commutes(
                    chk,
                    ctx,
                    &Mor::Assoc(a.clone(), Obj::Unit, b.clone()).then(t(id(a), Mor::LUnit(b.clone()))),
                    &t(Mor::RUnit(a.clone()), id(b)),
                )?;
                for c in &objs {
                    ctx.check_time()?;
                    let (a_, b_, c_) = (a.clone(), b.clone(), c.clone());
                    let left = Obj::tensor(Obj::tensor(a_.clone(), b_.clone()), c_.clone());
                    let right = Obj::tensor(a_.clone(), Obj::tensor(b_.clone(), c_.clone()));
                    commutes(chk, ctx, &Mor::Assoc(a_.clone(), b_.clone(), c_.clone()).then(Mor::AssocInv(a_.clone(), b_.clone(), c_.clone())), &id(&left))?;
                    commutes(chk, ctx, &Mor::AssocInv(a_.clone(), b_.clone(), c_.clone()).then(Mor::Assoc(a_.clone(), b_.clone(), c_.clone())), &id(&right))?;
                    for d in &objs {
                        let ab = Obj::tensor(a_.clone(), b_.clone());
                        let cd = Obj::tensor(c_.clone(), d.clone());
                        let bc = Obj::tensor(b_.clone(), c_.clone());
                        let lhs = Mor::Assoc(ab, c_.clone(), d.clone()).then(Mor::Assoc(a_.clone(), b_.clone(), cd));
                        let rhs = Mor::seq([
                            t(Mor::Assoc(a_.clone(), b_.clone(), c_.clone()), id(d)),
                            Mor::Assoc(a_.clone(), bc, d.clone()),
                            t(id(&a_), Mor::Assoc(b_.clone(), c_.clone(), d.clone())),
                        ]);
                        commutes(chk, ctx, &lhs, &rhs)?;
                    }
                }
            }
        }
        Ok(())
    })
}

/// Naturality, hexagons and invertibility of a declared braiding. A braided
/// model with a witness to `c . c != id` is noted as braided, not symmetric.
pub fn check_braiding_laws(ctx: &Ctx, bound: usize) -> Option<CheckRecord> {
    let declared = ctx.model.braiding();
    if declared == Braiding::None {
        return None;
    }
    Some(run_check("selfcheck.braiding", |chk| {
        let objs = sample(ctx, bound);
        let table = HomTable::build(ctx, &objs)?;
        let c = |a: &Obj, b: &Obj| Mor::Braid(a.clone(), b.clone());
        for &(i, j, f) in &table.all() {
            let (a, a2) = (&objs[i], &objs[j]);
            let fm = named(f);
            for b in &objs {
                commutes(chk, ctx, &t(fm.clone(), id(b)).then(c(a2, b)), &c(a, b).then(t(id(b), fm.clone())))?;
                commutes(chk, ctx, &t(id(b), fm.clone()).then(c(b, a2)), &c(b, a).then(t(fm.clone(), id(b))))?;
            }
        }
        let mut unsymmetric = None;
        for a in &objs {
            for b in &objs {
                ctx.check_time()?;
                let ab = Obj::tensor(a.clone(), b.clone());
                commutes(chk, ctx, &c(a, b).then(Mor::BraidInv(a.clone(), b.clone())), &id(&ab))?;
                commutes(chk, ctx, &Mor::BraidInv(a.clone(), b.clone()).then(c(a, b)), &id(&Obj::tensor(b.clone(), a.clone())))?;
                let twice = c(a, b).then(c(b, a));
                match declared {
                    Braiding::Symmetric => commutes(chk, ctx, &twice, &id(&ab))?,
                    _ => {
                        if unsymmetric.is_none() && !crate::diagrams::eval::diagram_commutes(ctx, &twice, &id(&ab))?.holds() {
                            unsymmetric = Some(format!("{a}, {b}"));
                        }
                    }
                }
                for z in &objs {
                    let (a_, b_, c_) = (a.clone(), b.clone(), z.clone());
                    let h1l = Mor::seq([
                        Mor::Assoc(a_.clone(), b_.clone(), c_.clone()),
                        c(&a_, &Obj::tensor(b_.clone(), c_.clone())),
                        Mor::Assoc(b_.clone(), c_.clone(), a_.clone()),
                    ]);
                    let h1r = Mor::seq([
                        t(c(&a_, &b_), id(&c_)),
                        Mor::Assoc(b_.clone(), a_.clone(), c_.clone()),
                        t(id(&b_), c(&a_, &c_)),
                    ]);
                    commutes(chk, ctx, &h1l, &h1r)?;
                    let h2l = Mor::seq([
                        Mor::AssocInv(a_.clone(), b_.clone(), c_.clone()),
                        c(&Obj::tensor(a_.clone(), b_.clone()), &c_),
                        Mor::AssocInv(c_.clone(), a_.clone(), b_.clone()),
                    ]);
                    let h2r = Mor::seq([
                        t(id(&a_), c(&b_, &c_)),
                        Mor::AssocInv(a_.clone(), c_.clone(), b_.clone()),
                        t(c(&a_, &c_), id(&b_)),
                    ]);
                    commutes(chk, ctx, &h2l, &h2r)?;
                }
            }
        }
        if declared == Braiding::Braided {
            chk.note = Some(match unsymmetric {
                Some(w) => format!("braided, not symmetric (c . c != id at {w})"),
                None => "braided; c . c = id on all sampled pairs".into(),
            });
        }
        Ok(())
    }))
}

/// The model's hom enumerator agrees with filtering the full map or
/// relation space, wherever that space is small enough to scan.
pub fn check_hom_enumeration(ctx: &Ctx, bound: usize) -> CheckRecord {
    run_check("selfcheck.homs", |chk| {
        let objs = sample(ctx, bound);
        for a in &objs {
            for b in &objs {
                ctx.check_time()?;
                let Ok(brute) = brute_force_homs(ctx, a, b) else { continue };
                let listed = enumerate_homs(ctx, a, b)?;
                chk.tick();
                if brute != listed {
                    let extra = listed.iter().find(|f| !brute.contains(f)).or_else(|| brute.iter().find(|f| !listed.contains(f)));
                    let f = extra.cloned().unwrap_or_else(|| brute[0].clone());
                    chk.fail(Counterexample::not_a_hom(&crate::diagrams::NamedMor { name: "enumerated".into(), mor: f }));
                }
            }
        }
        Ok(())
    })
}

pub fn check_payload(ctx: &Ctx) -> CheckRecord {
    run_check("selfcheck.payload", |chk| {
        for (law, witness) in ctx.model.payload_laws() {
            chk.tick();
            if let Some(w) = witness {
                chk.fail(Counterexample {
                    objects: Vec::new(),
                    named: Vec::new(),
                    evidence: Evidence::Error { message: format!("{law}: {w}") },
                });
            }
        }
        Ok(())
    })
}

/// All model self-checks.
pub fn model_selfcheck(ctx: &Ctx, bound: usize) -> AxiomReport {
    let mut r = AxiomReport::default();
    r.push(check_payload(ctx));
    r.push(check_hom_enumeration(ctx, bound));
    r.push(check_category_laws(ctx, bound));
    r.push(check_monoidal_laws(ctx, bound));
    if let Some(b) = check_braiding_laws(ctx, bound) {
        r.push(b);
    }
    r
}
