//! Cartesian structure of the coalgebra category, its lifted symmetry, and
//! the monoidality of the forgetful/cofree adjunction.

use std::collections::HashMap;

use crate::diagrams::Mor;
use crate::error::Result;
use crate::fincat::laws::sample;
use crate::fincat::{Ctx, FinMorphism, Obj};
use crate::report::{commutes, run_check, AxiomReport, Check, CheckRecord, Counterexample};

use super::coalgebra::{
    cofree, em_homs, em_product, em_unit, enumerate_coalgebras, induced_comonoid, induced_comonoid_laws, morphism_square, Coalgebra,
};

pub const CARTESIAN_IDS: [&str; 6] = [
    "em.cartesian.coalgebras",
    "em.cartesian.composition",
    "em.cartesian.projections",
    "em.cartesian.pairing",
    "em.cartesian.uniqueness",
    "em.cartesian.terminal",
];

pub const SYMMETRY_IDS: [&str; 4] = ["em.symmetry.lift", "em.symmetry.involutive", "em.symmetry.natural", "em.symmetry.monoidal-adjunction"];

/// The coalgebras on sampled carriers, with memoised hom-sets.
pub struct EmCategory<'c, 'a> {
    pub ctx: &'c Ctx<'a>,
    /// Index 0 is `(I, m_I)`.
    pub objects: Vec<Coalgebra>,
    homs: HashMap<(usize, usize), Vec<FinMorphism>>,
}

impl<'c, 'a> EmCategory<'c, 'a> {
    pub fn sample(ctx: &'c Ctx<'a>, bound: usize) -> Result<Self> {
        let mut objects = vec![em_unit(ctx)?];
        for a in sample(ctx, bound) {
            objects.extend(enumerate_coalgebras(ctx, &a)?);
        }
        Ok(EmCategory { ctx, objects, homs: HashMap::new() })
    }

    pub fn homs(&mut self, i: usize, j: usize) -> Result<&[FinMorphism]> {
        if !self.homs.contains_key(&(i, j)) {
            let hs = em_homs(self.ctx, &self.objects[i], &self.objects[j])?;
            self.homs.insert((i, j), hs);
        }
        Ok(&self.homs[&(i, j)])
    }

    pub fn hom_count(&mut self) -> Result<usize> {
        let n = self.objects.len();
        let mut total = 0;
        for i in 0..n {
            for j in 0..n {
                total += self.homs(i, j)?.len();
            }
        }
        Ok(total)
    }
}

fn named(name: &str, f: &FinMorphism) -> Mor {
    Mor::named(name, f.clone())
}

struct Projections {
    product: Coalgebra,
    pi1: Mor,
    pi2: Mor,
}

fn projections(ctx: &Ctx, p: &Coalgebra, q: &Coalgebra) -> Result<Projections> {
    let (a, b) = (&p.carrier, &q.carrier);
    let (_, e_p) = induced_comonoid(ctx, p)?;
    let (_, e_q) = induced_comonoid(ctx, q)?;
    let pi1 = ctx.eval_path(&Mor::tensor(Mor::Id(a.clone()), named("e_Q", &e_q)).then(Mor::RUnit(a.clone())))?;
    let pi2 = ctx.eval_path(&Mor::tensor(named("e_P", &e_p), Mor::Id(b.clone())).then(Mor::LUnit(b.clone())))?;
    Ok(Projections { product: em_product(ctx, p, q)?, pi1: named("pi1", &pi1), pi2: named("pi2", &pi2) })
}

fn diagonal(ctx: &Ctx, z: &Coalgebra) -> Result<Mor> {
    Ok(named("d_Z", &induced_comonoid(ctx, z)?.0))
}

fn check_objects(em: &mut EmCategory, c: &mut Check) -> Result<()> {
    let ctx = em.ctx;
    for p in &em.objects {
        c.tick();
        if let Some((law, cmp)) = induced_comonoid_laws(ctx, p)? {
            c.note.get_or_insert_with(|| format!("induced comonoid on {}: {law} fails", p.carrier));
            c.absorb(ctx, &cmp);
        }
    }
    for x in sample(ctx, 1) {
        let cf = cofree(ctx, &x)?;
        c.tick();
        if !enumerate_coalgebras(ctx, &cf.carrier)?.contains(&cf) {
            c.note.get_or_insert_with(|| format!("cofree coalgebra on {x} missing from enumeration"));
            c.fail(Counterexample::error(&crate::error::Error::InvalidCoalgebra(format!("cofree on {x}"))));
        }
    }
    Ok(())
}

fn check_composition(em: &mut EmCategory, c: &mut Check) -> Result<()> {
    let ctx = em.ctx;
    let n = em.objects.len();
    for i in 0..n {
        for j in 0..n {
            let fs = em.homs(i, j)?.to_vec();
            for k in 0..n {
                let gs = em.homs(j, k)?.to_vec();
                for f in &fs {
                    for g in &gs {
                        let comp = named("f", f).then(named("g", g));
                        c.absorb(ctx, &morphism_square(ctx, &em.objects[i], &em.objects[k], &comp)?);
                    }
                }
            }
        }
    }
    Ok(())
}

fn check_projections(em: &mut EmCategory, c: &mut Check) -> Result<()> {
    let ctx = em.ctx;
    let n = em.objects.len();
    for i in 0..n {
        for j in 0..n {
            let (p, q) = (em.objects[i].clone(), em.objects[j].clone());
            let pr = projections(ctx, &p, &q)?;
            c.absorb(ctx, &morphism_square(ctx, &pr.product, &p, &pr.pi1)?);
            c.absorb(ctx, &morphism_square(ctx, &pr.product, &q, &pr.pi2)?);
        }
    }
    Ok(())
}

fn check_pairing(em: &mut EmCategory, c: &mut Check) -> Result<()> {
    let ctx = em.ctx;
    let n = em.objects.len();
    for i in 0..n {
        for j in 0..n {
            let (p, q) = (em.objects[i].clone(), em.objects[j].clone());
            let pr = projections(ctx, &p, &q)?;
            for k in 0..n {
                let z = em.objects[k].clone();
                let d_z = diagonal(ctx, &z)?;
                let (fs, gs) = (em.homs(k, i)?.to_vec(), em.homs(k, j)?.to_vec());
                for f in &fs {
                    for g in &gs {
                        let (f, g) = (named("f", f), named("g", g));
                        let pair = d_z.clone().then(Mor::tensor(f.clone(), g.clone()));
                        c.absorb(ctx, &morphism_square(ctx, &z, &pr.product, &pair)?);
                        commutes(c, ctx, &pair.clone().then(pr.pi1.clone()), &f)?;
                        commutes(c, ctx, &pair.then(pr.pi2.clone()), &g)?;
                    }
                }
            }
        }
    }
    Ok(())
}

fn check_uniqueness(em: &mut EmCategory, c: &mut Check) -> Result<()> {
    let ctx = em.ctx;
    let n = em.objects.len();
    for i in 0..n {
        for j in 0..n {
            let pr = projections(ctx, &em.objects[i], &em.objects[j])?;
            for k in 0..n {
                let z = &em.objects[k];
                let d_z = diagonal(ctx, z)?;
                for h in em_homs(ctx, z, &pr.product)? {
                    let h = named("h", &h);
                    let rebuilt = d_z.clone().then(Mor::tensor(h.clone().then(pr.pi1.clone()), h.clone().then(pr.pi2.clone())));
                    commutes(c, ctx, &rebuilt, &h)?;
                }
            }
        }
    }
    Ok(())
}

fn check_terminal(em: &mut EmCategory, c: &mut Check) -> Result<()> {
    let ctx = em.ctx;
    for k in 0..em.objects.len() {
        let z = em.objects[k].clone();
        let (_, e_z) = induced_comonoid(ctx, &z)?;
        c.absorb(ctx, &morphism_square(ctx, &z, &em.objects[0], &named("e_Z", &e_z))?);
        let hs = em.homs(k, 0)?.to_vec();
        c.tick();
        match hs.as_slice() {
            [] => {
                c.note.get_or_insert_with(|| format!("no coalgebra morphism {} -> I", z.carrier));
                if crate::fincat::homs::enumerate_homs(ctx, &z.carrier, &Obj::Unit)?.is_empty() {
                    c.fail(Counterexample::no_morphism(&z.carrier, &Obj::Unit));
                }
            }
            [_] => {}
            [h1, h2, ..] => {
                c.note.get_or_insert_with(|| format!("{} coalgebra morphisms {} -> I", hs.len(), z.carrier));
                commutes(c, ctx, &named("h1", h1), &named("h2", h2))?;
            }
        }
    }
    Ok(())
}

type Body = fn(&mut EmCategory, &mut Check) -> Result<()>;

fn run_all(ctx: &Ctx, bound: usize, ids: &[&str], bodies: &[Body]) -> AxiomReport {
    let mut r = AxiomReport::default();
    let mut em = match EmCategory::sample(ctx, bound) {
        Ok(em) => em,
        Err(e) => {
            for id in ids {
                r.push(CheckRecord::from_error(*id, &e));
            }
            return r;
        }
    };
    for (id, body) in ids.iter().zip(bodies) {
        let mut rec = run_check(id, |c| body(&mut em, c));
        if rec.note.is_none() && rec.status == crate::report::Status::Pass && *id == ids[0] {
            rec.note = em.hom_count().ok().map(|h| format!("{} coalgebras, {h} morphisms", em.objects.len()));
        }
        r.push(rec);
    }
    r
}

/// Projections, pairings, uniqueness over enumerated morphisms into each
/// product, and terminality of `(I, m_I)`, for coalgebras on carriers
/// within `bound`.
pub fn check_em_cartesian(ctx: &Ctx, bound: usize) -> AxiomReport {
    run_all(ctx, bound, &CARTESIAN_IDS, &[check_objects, check_composition, check_projections, check_pairing, check_uniqueness, check_terminal])
}

/// `s_{P,Q} = (eps_B (x) eps_A) . sigma_{A,B} . (alpha (x) beta)`.
fn lifted_sigma(p: &Coalgebra, q: &Coalgebra, pn: &str, qn: &str) -> Mor {
    let (a, b) = (&p.carrier, &q.carrier);
    Mor::seq([
        Mor::tensor(p.structure(pn), q.structure(qn)),
        Mor::Sigma(a.clone(), b.clone()),
        Mor::tensor(Mor::Eps(b.clone()), Mor::Eps(a.clone())),
    ])
}

fn check_lift(em: &mut EmCategory, c: &mut Check) -> Result<()> {
    let ctx = em.ctx;
    for p in &em.objects {
        for q in &em.objects {
            let s = lifted_sigma(p, q, "alpha", "beta");
            c.absorb(ctx, &morphism_square(ctx, &em_product(ctx, p, q)?, &em_product(ctx, q, p)?, &s)?);
        }
    }
    Ok(())
}

fn check_involutive(em: &mut EmCategory, c: &mut Check) -> Result<()> {
    let ctx = em.ctx;
    for p in &em.objects {
        for q in &em.objects {
            let round = lifted_sigma(p, q, "alpha", "beta").then(lifted_sigma(q, p, "beta", "alpha"));
            commutes(c, ctx, &round, &Mor::Id(Obj::tensor(p.carrier.clone(), q.carrier.clone())))?;
        }
    }
    Ok(())
}

fn check_natural(em: &mut EmCategory, c: &mut Check) -> Result<()> {
    let ctx = em.ctx;
    let n = em.objects.len();
    for i in 0..n {
        for i2 in 0..n {
            let fs = em.homs(i, i2)?.to_vec();
            for j in 0..n {
                let (p, p2, q) = (&em.objects[i], &em.objects[i2], &em.objects[j]);
                let b = &q.carrier;
                for f in &fs {
                    let f = named("f", f);
                    let l = Mor::tensor(f.clone(), Mor::Id(b.clone())).then(lifted_sigma(p2, q, "gamma", "beta"));
                    let r = lifted_sigma(p, q, "alpha", "beta").then(Mor::tensor(Mor::Id(b.clone()), f.clone()));
                    commutes(c, ctx, &l, &r)?;
                    let l = Mor::tensor(Mor::Id(b.clone()), f.clone()).then(lifted_sigma(q, p2, "beta", "gamma"));
                    let r = lifted_sigma(q, p, "beta", "alpha").then(Mor::tensor(f.clone(), Mor::Id(b.clone())));
                    commutes(c, ctx, &l, &r)?;
                }
            }
        }
    }
    Ok(())
}

/// The cofree functor's `m`, `m_I` are coalgebra morphisms and the counit of
/// the adjunction respects them.
fn check_monoidal_adjunction(em: &mut EmCategory, c: &mut Check) -> Result<()> {
    let ctx = em.ctx;
    let objs = sample(ctx, 2);
    let bang = |x: &Obj| Obj::bang(x.clone());
    commutes(c, ctx, &Mor::MUnit.then(Mor::Delta(Obj::Unit)), &Mor::MUnit.then(Mor::bang(Mor::MUnit)))?;
    commutes(c, ctx, &Mor::MUnit.then(Mor::Eps(Obj::Unit)), &Mor::Id(Obj::Unit))?;
    for x in &objs {
        for y in &objs {
            let xy = Obj::tensor(x.clone(), y.clone());
            let m = Mor::M(x.clone(), y.clone());
            let l = m.clone().then(Mor::Delta(xy.clone()));
            let r = Mor::seq([Mor::tensor(Mor::Delta(x.clone()), Mor::Delta(y.clone())), Mor::M(bang(x), bang(y)), Mor::bang(m.clone())]);
            commutes(c, ctx, &l, &r)?;
            commutes(c, ctx, &m.then(Mor::Eps(xy)), &Mor::tensor(Mor::Eps(x.clone()), Mor::Eps(y.clone())))?;
        }
    }
    Ok(())
}

/// The symmetry lifted to coalgebras: a coalgebra morphism, self-inverse and
/// natural; plus monoidality of the comonadic adjunction.
pub fn check_em_symmetry_and_monoidal_adjunction(ctx: &Ctx, bound: usize) -> AxiomReport {
    run_all(ctx, bound, &SYMMETRY_IDS, &[check_lift, check_involutive, check_natural, check_monoidal_adjunction])
}
