//! Finite monoids and groups given by multiplication tables.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite monoid; elements are indices into `names`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FinMonoid {
    pub name: String,
    pub names: Vec<String>,
    /// `table[a][b] = a . b`
    pub table: Vec<Vec<u32>>,
    pub unit: u32,
}

impl FinMonoid {
    /// Validates shape, unit and associativity by exhaustive scan.
    pub fn new(name: &str, names: Vec<String>, table: Vec<Vec<u32>>) -> Result<Self> {
        let n = names.len();
        if n == 0 {
            return Err(Error::InvalidObject(format!("{name}: empty monoid")));
        }
        if table.len() != n || table.iter().any(|row| row.len() != n || row.iter().any(|&c| c as usize >= n)) {
            return Err(Error::InvalidObject(format!("{name}: table is not {n}x{n} over its elements")));
        }
        for (i, a) in names.iter().enumerate() {
            if names[..i].contains(a) {
                return Err(Error::InvalidObject(format!("{name}: duplicate element {a}")));
            }
        }
        let unit = (0..n as u32)
            .find(|&u| (0..n).all(|a| table[u as usize][a] == a as u32 && table[a][u as usize] == a as u32))
            .ok_or_else(|| Error::InvalidObject(format!("{name}: no two-sided unit")))?;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let ab_c = table[table[a][b] as usize][c];
                    let a_bc = table[a][table[b][c] as usize];
                    if ab_c != a_bc {
                        return Err(Error::InvalidObject(format!(
                            "{name}: not associative at ({}, {}, {})",
                            names[a], names[b], names[c]
                        )));
                    }
                }
            }
        }
        Ok(FinMonoid { name: name.into(), names, table, unit })
    }

    /// Builds from element names and a table of element names.
    pub fn from_names(name: &str, names: &[&str], rows: &[&[&str]]) -> Result<Self> {
        let idx = |s: &str| {
            names
                .iter()
                .position(|n| *n == s)
                .map(|i| i as u32)
                .ok_or_else(|| Error::InvalidObject(format!("{name}: unknown element {s}")))
        };
        let table = rows.iter().map(|r| r.iter().map(|s| idx(s)).collect::<Result<Vec<_>>>()).collect::<Result<_>>()?;
        FinMonoid::new(name, names.iter().map(|s| s.to_string()).collect(), table)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.table[a as usize][b as usize]
    }

    pub fn index(&self, name: &str) -> Option<u32> {
        self.names.iter().position(|n| n == name).map(|i| i as u32)
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.len() as u32;
        (0..n).all(|a| (0..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn inverse(&self, a: u32) -> Option<u32> {
        (0..self.len() as u32).find(|&b| self.mul(a, b) == self.unit && self.mul(b, a) == self.unit)
    }

    pub fn is_group(&self) -> bool {
        (0..self.len() as u32).all(|a| self.inverse(a).is_some())
    }
}

/// A finite group: a monoid in which every element is invertible.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinGroup {
    pub monoid: FinMonoid,
    inverses: Vec<u32>,
}

impl FinGroup {
    pub fn new(monoid: FinMonoid) -> Result<Self> {
        let inverses = (0..monoid.len() as u32)
            .map(|a| {
                monoid
                    .inverse(a)
                    .ok_or_else(|| Error::InvalidObject(format!("{}: {} has no inverse", monoid.name, monoid.names[a as usize])))
            })
            .collect::<Result<_>>()?;
        Ok(FinGroup { monoid, inverses })
    }

    pub fn len(&self) -> usize {
        self.monoid.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monoid.is_empty()
    }

    pub fn unit(&self) -> u32 {
        self.monoid.unit
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.monoid.mul(a, b)
    }

    pub fn inv(&self, a: u32) -> u32 {
        self.inverses[a as usize]
    }

    /// `g a g^-1`
    pub fn conj(&self, g: u32, a: u32) -> u32 {
        self.mul(self.mul(g, a), self.inv(g))
    }
}

fn cyclic(name: &str, names: &[&str]) -> FinMonoid {
    let n = names.len();
    let table = (0..n).map(|a| (0..n).map(|b| ((a + b) % n) as u32).collect()).collect();
    FinMonoid::new(name, names.iter().map(|s| s.to_string()).collect(), table).expect("cyclic group")
}

/// Permutations of three points, composed right to left.
fn s3() -> FinMonoid {
    let perms: [[usize; 3]; 6] = [[0, 1, 2], [1, 2, 0], [2, 0, 1], [1, 0, 2], [0, 2, 1], [2, 1, 0]];
    let names = ["e", "r", "r2", "s", "sr", "sr2"];
    let find = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap() as u32;
    let table = perms
        .iter()
        .map(|p| perms.iter().map(|q| find([p[q[0]], p[q[1]], p[q[2]]])).collect())
        .collect();
    FinMonoid::new("S3", names.iter().map(|s| s.to_string()).collect(), table).expect("S3")
}

pub const PRESETS: &[&str] = &["C2", "C3", "L3", "S3", "Z2", "T1"];

/// A shipped monoid by name.
pub fn preset(name: &str) -> Option<FinMonoid> {
    Some(match name {
        "C2" => cyclic("C2", &["e", "g"]),
        "C3" => cyclic("C3", &["e", "g", "g2"]),
        "Z2" => cyclic("Z2", &["e", "s"]),
        "T1" => cyclic("T1", &["e"]),
        "S3" => s3(),
        "L3" => FinMonoid::from_names("L3", &["e", "a", "b"], &[&["e", "a", "b"], &["a", "a", "a"], &["b", "b", "b"]])
            .expect("L3"),
        _ => return None,
    })
}

pub fn preset_description(name: &str) -> &'static str {
    match name {
        "C2" => "cyclic group of order 2 {e, g}",
        "C3" => "cyclic group of order 3 {e, g, g2}",
        "L3" => "left-zero band {a, b} with adjoined unit e (a.b = a, b.a = b)",
        "S3" => "symmetric group on three points",
        "Z2" => "integers mod 2 {e, s}",
        "T1" => "trivial monoid {e}",
        _ => "",
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn presets_are_valid() {
        for p in PRESETS {
            let m = preset(p).unwrap();
            assert_eq!(m.names[m.unit as usize], "e");
        }
    }

    #[test]
    fn l3_is_left_zero() {
        let m = preset("L3").unwrap();
        let (a, b) = (m.index("a").unwrap(), m.index("b").unwrap());
        assert_eq!(m.mul(a, b), a);
        assert_eq!(m.mul(b, a), b);
        assert!(!m.is_commutative());
        assert!(!m.is_group());
    }

    #[test]
    fn s3_is_a_noncommutative_group() {
        let g = FinGroup::new(preset("S3").unwrap()).unwrap();
        assert!(!g.monoid.is_commutative());
        let r = g.monoid.index("r").unwrap();
        let r2 = g.monoid.index("r2").unwrap();
        assert_eq!(g.mul(r, r), r2);
        assert_eq!(g.inv(r), r2);
    }

    #[test]
    fn non_associative_table_names_the_triple() {
        // (x.x).y = y.y = y but x.(x.y) = x.e = x
        let err = FinMonoid::from_names("bad", &["e", "x", "y"], &[&["e", "x", "y"], &["x", "y", "e"], &["y", "y", "y"]])
            .unwrap_err();
        assert!(err.to_string().contains("not associative"), "{err}");
    }

    #[test]
    fn missing_unit_is_rejected() {
        assert!(FinMonoid::from_names("nu", &["x", "y"], &[&["x", "x"], &["y", "y"]]).is_err());
    }
}
