//! The derived swap `sigma_{X,Y} : !X (x) !Y -> !Y (x) !X`.

use crate::diagrams::Mor;
use crate::error::Result;
use crate::fincat::{Ctx, FinMorphism, Obj};

/// `!X (x) !Y -> !Y`, erasing the left factor.
fn drop_left(a: &Obj, b: &Obj) -> Mor {
    Mor::tensor(Mor::E(a.clone()), Mor::Id(Obj::bang(b.clone()))).then(Mor::LUnit(Obj::bang(b.clone())))
}

/// `!X (x) !Y -> !X`, erasing the right factor.
fn drop_right(a: &Obj, b: &Obj) -> Mor {
    Mor::tensor(Mor::Id(Obj::bang(a.clone())), Mor::E(b.clone())).then(Mor::RUnit(Obj::bang(a.clone())))
}

/// The five-step composite
/// `(eps (x) eps) . (!(lambda . (e (x) id)) (x) !(rho . (id (x) e))) . d . m . (delta (x) delta)`.
pub fn sigma_path(a: &Obj, b: &Obj) -> Mor {
    let (ba, bb) = (Obj::bang(a.clone()), Obj::bang(b.clone()));
    Mor::seq([
        Mor::tensor(Mor::Delta(a.clone()), Mor::Delta(b.clone())),
        Mor::M(ba.clone(), bb.clone()),
        Mor::D(Obj::tensor(ba.clone(), bb.clone())),
        Mor::tensor(Mor::bang(drop_left(a, b)), Mor::bang(drop_right(a, b))),
        Mor::tensor(Mor::Eps(bb), Mor::Eps(ba)),
    ])
}

/// The same composite with the outer counits pushed inside by naturality of
/// `eps`: `((lambda . (e (x) id)) (x) (rho . (id (x) e))) . (eps (x) eps) . d . m . (delta (x) delta)`.
pub fn sigma_path_simplified(a: &Obj, b: &Obj) -> Mor {
    let (ba, bb) = (Obj::bang(a.clone()), Obj::bang(b.clone()));
    let pair = Obj::tensor(ba.clone(), bb.clone());
    Mor::seq([
        Mor::tensor(Mor::Delta(a.clone()), Mor::Delta(b.clone())),
        Mor::M(ba, bb),
        Mor::D(pair.clone()),
        Mor::tensor(Mor::Eps(pair.clone()), Mor::Eps(pair)),
        Mor::tensor(drop_left(a, b), drop_right(a, b)),
    ])
}

/// Tabulated `sigma_{X,Y}`.
pub fn sigma(ctx: &Ctx, a: &Obj, b: &Obj) -> Result<FinMorphism> {
    ctx.eval_path(&Mor::Sigma(a.clone(), b.clone()))
}
