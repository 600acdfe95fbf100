//! Finite monoidal posets (thin monoidal categories) and meet-semilattices.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::models::algebra::FinMonoid;

fn check_order(name: &str, names: &[String], leq: &[Vec<bool>]) -> Result<()> {
    let n = names.len();
    if leq.len() != n || leq.iter().any(|row| row.len() != n) {
        return Err(Error::InvalidObject(format!("{name}: order is not {n}x{n}")));
    }
    for a in 0..n {
        if !leq[a][a] {
            return Err(Error::InvalidObject(format!("{name}: {} is not <= itself", names[a])));
        }
        for b in 0..n {
            if a != b && leq[a][b] && leq[b][a] {
                return Err(Error::InvalidObject(format!("{name}: {} and {} are distinct but equivalent", names[a], names[b])));
            }
            for c in 0..n {
                if leq[a][b] && leq[b][c] && !leq[a][c] {
                    return Err(Error::InvalidObject(format!("{name}: order is not transitive at {}", names[b])));
                }
            }
        }
    }
    Ok(())
}

/// Reflexive-transitive closure of `(a, b)` pairs read as `a <= b`.
fn closure(name: &str, names: &[String], below: &[(&str, &str)]) -> Result<Vec<Vec<bool>>> {
    let n = names.len();
    let idx = |s: &str| names.iter().position(|m| m == s).ok_or_else(|| Error::InvalidObject(format!("{name}: unknown element {s}")));
    let mut leq = vec![vec![false; n]; n];
    for (i, row) in leq.iter_mut().enumerate() {
        row[i] = true;
    }
    for (a, b) in below {
        leq[idx(a)?][idx(b)?] = true;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if leq[i][k] && leq[k][j] {
                    leq[i][j] = true;
                }
            }
        }
    }
    Ok(leq)
}

/// A monoid with a partial order making the multiplication monotone; the
/// arrows `a -> b` are the pairs `a <= b`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonoidalPoset {
    pub name: String,
    pub names: Vec<String>,
    /// `leq[a][b]` iff `a <= b`.
    pub leq: Vec<Vec<bool>>,
    /// `tensor[a][b] = a (x) b`
    pub tensor: Vec<Vec<u32>>,
    pub unit: u32,
}

impl MonoidalPoset {
    pub fn new(name: &str, names: Vec<String>, leq: Vec<Vec<bool>>, tensor: Vec<Vec<u32>>) -> Result<Self> {
        let m = FinMonoid::new(name, names, tensor)?;
        check_order(name, &m.names, &leq)?;
        let n = m.len();
        for a in 0..n {
            for a2 in (0..n).filter(|&a2| leq[a][a2]) {
                for b in 0..n {
                    for b2 in (0..n).filter(|&b2| leq[b][b2]) {
                        if !leq[m.table[a][b] as usize][m.table[a2][b2] as usize] {
                            return Err(Error::InvalidObject(format!(
                                "{name}: tensor is not monotone at {} <= {}, {} <= {}",
                                m.names[a], m.names[a2], m.names[b], m.names[b2]
                            )));
                        }
                    }
                }
            }
        }
        Ok(MonoidalPoset { name: m.name, names: m.names, leq, tensor: m.table, unit: m.unit })
    }

    /// `m` as a discrete monoidal category.
    pub fn discrete(m: &FinMonoid) -> Self {
        let n = m.len();
        let leq = (0..n).map(|a| (0..n).map(|b| a == b).collect()).collect();
        MonoidalPoset { name: m.name.clone(), names: m.names.clone(), leq, tensor: m.table.clone(), unit: m.unit }
    }

    /// `m` ordered by the closure of the given `(a, b)` pairs, read `a <= b`.
    pub fn ordered(name: &str, m: &FinMonoid, below: &[(&str, &str)]) -> Result<Self> {
        let leq = closure(name, &m.names, below)?;
        MonoidalPoset::new(name, m.names.clone(), leq, m.table.clone())
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn le(&self, a: u32, b: u32) -> bool {
        self.leq[a as usize][b as usize]
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.tensor[a as usize][b as usize]
    }

    pub fn index(&self, name: &str) -> Option<u32> {
        self.names.iter().position(|n| n == name).map(|i| i as u32)
    }

    pub fn is_discrete(&self) -> bool {
        (0..self.len() as u32).all(|a| (0..self.len() as u32).all(|b| a == b || !self.le(a, b)))
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.len() as u32).all(|a| (0..self.len() as u32).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Objects `<= c`, `c` included.
    pub fn down(&self, c: u32) -> impl Iterator<Item = u32> + '_ {
        (0..self.len() as u32).filter(move |&b| self.le(b, c))
    }

    /// Pairs `b < c`, ordered by `c` then `b`.
    pub fn strict_pairs(&self) -> Vec<(u32, u32)> {
        let n = self.len() as u32;
        (0..n).flat_map(|c| (0..n).filter(move |&b| b != c).map(move |b| (c, b))).filter(|&(c, b)| self.le(b, c)).collect()
    }
}

/// A finite poset with a top element and all binary meets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MeetSemilattice {
    pub name: String,
    pub names: Vec<String>,
    pub leq: Vec<Vec<bool>>,
    pub top: u32,
    pub meet: Vec<Vec<u32>>,
}

impl MeetSemilattice {
    pub fn new(name: &str, names: Vec<String>, leq: Vec<Vec<bool>>) -> Result<Self> {
        check_order(name, &names, &leq)?;
        let n = names.len();
        let top = (0..n)
            .find(|&t| (0..n).all(|x| leq[x][t]))
            .ok_or_else(|| Error::InvalidObject(format!("{name}: no top element")))? as u32;
        let mut meet = vec![vec![0u32; n]; n];
        for x in 0..n {
            for y in 0..n {
                let lower: Vec<usize> = (0..n).filter(|&z| leq[z][x] && leq[z][y]).collect();
                let m = lower
                    .iter()
                    .copied()
                    .find(|&z| lower.iter().all(|&w| leq[w][z]))
                    .ok_or_else(|| Error::InvalidObject(format!("{name}: {} and {} have no meet", names[x], names[y])))?;
                meet[x][y] = m as u32;
            }
        }
        Ok(MeetSemilattice { name: name.into(), names, leq, top, meet })
    }

    pub fn ordered(name: &str, names: &[&str], below: &[(&str, &str)]) -> Result<Self> {
        let names: Vec<String> = names.iter().map(|s| s.to_string()).collect();
        let leq = closure(name, &names, below)?;
        MeetSemilattice::new(name, names, leq)
    }

    /// The one-element semilattice.
    pub fn point() -> Self {
        MeetSemilattice::new("pt", vec!["top".into()], vec![vec![true]]).expect("point")
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn le(&self, x: u32, y: u32) -> bool {
        self.leq[x as usize][y as usize]
    }

    pub fn meet(&self, x: u32, y: u32) -> u32 {
        self.meet[x as usize][y as usize]
    }

    pub fn index(&self, name: &str) -> Option<u32> {
        self.names.iter().position(|n| n == name).map(|i| i as u32)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::preset;

    #[test]
    fn ordered_l3_is_monotone() {
        let l3 = preset("L3").unwrap();
        let b = MonoidalPoset::ordered("L3a", &l3, &[("a", "b"), ("a", "e")]).unwrap();
        let (e, a) = (b.index("e").unwrap(), b.index("a").unwrap());
        assert!(b.le(a, e) && !b.le(e, a));
        assert!(!b.is_discrete() && !b.is_commutative());
        assert_eq!(b.strict_pairs().len(), 2);
    }

    #[test]
    fn non_monotone_order_is_rejected() {
        let l3 = preset("L3").unwrap();
        // b <= e would need b . a = b <= e . a = a
        assert!(MonoidalPoset::ordered("bad", &l3, &[("b", "e")]).is_err());
    }

    #[test]
    fn chain_meets() {
        let s = MeetSemilattice::ordered("ch", &["bot", "mid", "top"], &[("bot", "mid"), ("mid", "top")]).unwrap();
        assert_eq!(s.top, 2);
        assert_eq!(s.meet(1, 2), 1);
        assert_eq!(s.meet(0, 2), 0);
    }

    #[test]
    fn antichain_has_no_top() {
        let names = vec!["x".to_string(), "y".to_string()];
        let leq = vec![vec![true, false], vec![false, true]];
        assert!(MeetSemilattice::new("ac", names, leq).is_err());
    }
}
