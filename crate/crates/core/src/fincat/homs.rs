//! Exhaustive hom-set enumeration.

use crate::elem::Elem;
use crate::error::{Error, Result};
use crate::fincat::{Ctx, FinMorphism, MorKind, Obj};

fn search_space(kind: MorKind, n_src: usize, n_tgt: usize) -> u128 {
    match kind {
        MorKind::Function => (n_tgt as u128).checked_pow(n_src as u32).unwrap_or(u128::MAX),
        MorKind::Relation => 1u128.checked_shl((n_src * n_tgt) as u32).unwrap_or(u128::MAX),
    }
}

/// Every morphism `a -> b` accepted by the model's hom predicate, sorted.
/// Uses the model's own enumerator when it has one.
pub fn enumerate_homs(ctx: &Ctx, a: &Obj, b: &Obj) -> Result<Vec<FinMorphism>> {
    if let Some(r) = ctx.model.enumerate_homs(ctx, a, b) {
        let mut v = r?;
        v.sort();
        v.dedup();
        return Ok(v);
    }
    brute_force_homs(ctx, a, b)
}

/// Filters the full function or relation space by the hom predicate.
pub fn brute_force_homs(ctx: &Ctx, a: &Obj, b: &Obj) -> Result<Vec<FinMorphism>> {
    let (ca, cb) = (ctx.carrier(a)?, ctx.carrier(b)?);
    let kind = ctx.model.mor_kind();
    let space = search_space(kind, ca.len(), cb.len());
    if space > ctx.limits.max_hom_search {
        return Err(Error::SizeBoundExceeded { what: format!("homs {a} -> {b}"), size: space, limit: ctx.limits.max_hom_search });
    }
    let mut out = Vec::new();
    match kind {
        MorKind::Function => {
            if cb.is_empty() && !ca.is_empty() {
                return Ok(out);
            }
            let mut choice = vec![0usize; ca.len()];
            loop {
                ctx.check_time()?;
                let pairs = ca.iter().zip(&choice).map(|(x, &i)| (x.clone(), cb[i].clone()));
                let f = FinMorphism::from_pairs(a.clone(), b.clone(), kind, pairs);
                if ctx.model.is_hom(ctx, &f)? {
                    out.push(f);
                }
                if !advance(&mut choice, cb.len()) {
                    break;
                }
            }
        }
        MorKind::Relation => {
            let cells: Vec<(&Elem, &Elem)> = ca.iter().flat_map(|x| cb.iter().map(move |y| (x, y))).collect();
            for mask in 0u64..(1u64 << cells.len()) {
                if mask & 0xfff == 0 {
                    ctx.check_time()?;
                }
                let pairs = cells
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, (x, y))| ((*x).clone(), (*y).clone()));
                let f = FinMorphism::from_pairs(a.clone(), b.clone(), kind, pairs);
                if ctx.model.is_hom(ctx, &f)? {
                    out.push(f);
                }
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Odometer step over `digits` in base `base`; false once it wraps.
fn advance(digits: &mut [usize], base: usize) -> bool {
    for d in digits.iter_mut() {
        *d += 1;
        if *d < base {
            return true;
        }
        *d = 0;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn odometer_visits_every_word() {
        let mut d = vec![0; 3];
        let mut n = 1;
        while advance(&mut d, 2) {
            n += 1;
        }
        assert_eq!(n, 8);
    }

    #[test]
    fn spaces() {
        assert_eq!(search_space(MorKind::Function, 3, 2), 8);
        assert_eq!(search_space(MorKind::Function, 0, 0), 1);
        assert_eq!(search_space(MorKind::Relation, 2, 2), 16);
    }
}
