use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::elem::Elem;
use crate::error::{Error, Result};

/// Per-element annotations carried by a base object. Vectors are aligned
/// with the (sorted) carrier.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Payload {
    Plain,
    /// Valuation into a monoid (by element index).
    Valued { values: Vec<u32> },
    /// Crossed G-set: grade `|x|` and action table `action[g][i] = index of g.x`.
    Crossed { grade: Vec<u32>, action: Vec<Vec<u32>> },
    /// Presheaf on a finite poset, flattened: `fiber[i]` is the base object
    /// element `i` lives over, `restrict[i]` lists `(b, j)` meaning the
    /// restriction of `i` to `b <= fiber[i]` is element `j`.
    Presheaf { fiber: Vec<u32>, restrict: Vec<Vec<(u32, u32)>> },
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FinObject {
    pub id: String,
    pub carrier: Vec<Elem>,
    pub payload: Payload,
}

/// Hashes the identifier and size only; equal objects agree on both.
impl std::hash::Hash for FinObject {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.id.hash(state);
        self.carrier.len().hash(state);
    }
}

impl FinObject {
    /// Builds an object from `(token, annotation)` rows, sorting the carrier.
    /// Tokens are namespaced by `id`.
    pub fn valued(id: &str, values: &[(&str, u32)]) -> Result<Self> {
        let mut rows: Vec<(Elem, u32)> = values
            .iter()
            .map(|(t, v)| (Elem::sym(format!("{id}.{t}")), *v))
            .collect();
        rows.sort();
        let (carrier, values) = rows.into_iter().unzip();
        let obj = FinObject { id: id.to_string(), carrier, payload: Payload::Valued { values } };
        obj.validate()?;
        Ok(obj)
    }

    /// Checks the structural invariants: identifier syntax, strictly sorted
    /// distinct carrier, and a payload covering every element.
    pub fn validate(&self) -> Result<()> {
        if self.id.is_empty() || !self.id.chars().all(is_ident_char) || self.id == "I" {
            return Err(Error::InvalidObject(format!("bad object id {:?}", self.id)));
        }
        if self.carrier.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidObject(format!("{}: carrier not sorted/distinct", self.id)));
        }
        let n = self.carrier.len();
        let ok = match &self.payload {
            Payload::Plain => true,
            Payload::Valued { values } => values.len() == n,
            Payload::Crossed { grade, action } => {
                grade.len() == n && action.iter().all(|row| row.len() == n && row.iter().all(|&j| (j as usize) < n))
            }
            Payload::Presheaf { fiber, restrict } => {
                fiber.len() == n
                    && restrict.len() == n
                    && restrict.iter().flatten().all(|&(_, j)| (j as usize) < n)
            }
        };
        if !ok {
            return Err(Error::InvalidObject(format!("{}: payload does not annotate every element", self.id)));
        }
        Ok(())
    }

    pub fn index_of(&self, x: &Elem) -> Option<usize> {
        self.carrier.binary_search(x).ok()
    }

    pub fn len(&self) -> usize {
        self.carrier.len()
    }

    pub fn is_empty(&self) -> bool {
        self.carrier.is_empty()
    }
}

pub(crate) fn is_ident_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_' || c == '\''
}

/// Object expressions: base objects closed under the unit, tensor and `!`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Obj {
    Base(Arc<FinObject>),
    Unit,
    Tensor(Arc<Obj>, Arc<Obj>),
    Bang(Arc<Obj>),
}

impl Obj {
    pub fn base(o: FinObject) -> Self {
        Obj::Base(Arc::new(o))
    }

    pub fn tensor(a: Obj, b: Obj) -> Self {
        Obj::Tensor(Arc::new(a), Arc::new(b))
    }

    pub fn bang(a: Obj) -> Self {
        Obj::Bang(Arc::new(a))
    }

    /// Left-nested tensor of a non-empty list.
    pub fn tensor_all(items: impl IntoIterator<Item = Obj>) -> Self {
        let mut it = items.into_iter();
        let first = it.next().unwrap_or(Obj::Unit);
        it.fold(first, Obj::tensor)
    }

    pub fn as_tensor(&self) -> Option<(&Obj, &Obj)> {
        match self {
            Obj::Tensor(a, b) => Some((a, b)),
            _ => None,
        }
    }

    pub fn as_bang(&self) -> Option<&Obj> {
        match self {
            Obj::Bang(a) => Some(a),
            _ => None,
        }
    }

    /// Base objects occurring in the expression, deduplicated by id.
    pub fn bases(&self, out: &mut Vec<Arc<FinObject>>) {
        match self {
            Obj::Base(o) => {
                if !out.iter().any(|p| p.id == o.id) {
                    out.push(o.clone());
                }
            }
            Obj::Unit => {}
            Obj::Tensor(a, b) => {
                a.bases(out);
                b.bases(out);
            }
            Obj::Bang(a) => a.bases(out),
        }
    }
}

impl fmt::Display for Obj {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Obj::Base(o) => f.write_str(&o.id),
            Obj::Unit => f.write_str("I"),
            Obj::Tensor(a, b) => write!(f, "({a} (x) {b})"),
            Obj::Bang(a) => write!(f, "!{a}"),
        }
    }
}

impl fmt::Debug for Obj {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn valued_sorts_and_validates() {
        let o = FinObject::valued("A", &[("b", 1), ("a", 0)]).unwrap();
        o.validate().unwrap();
        assert_eq!(o.carrier[0], Elem::sym("A.a"));
        assert_eq!(o.payload, Payload::Valued { values: vec![0, 1] });
    }

    #[test]
    fn rejects_duplicate_tokens_and_short_payload() {
        let dup = FinObject {
            id: "A".into(),
            carrier: vec![Elem::sym("x"), Elem::sym("x")],
            payload: Payload::Plain,
        };
        assert!(dup.validate().is_err());
        let short = FinObject {
            id: "A".into(),
            carrier: vec![Elem::sym("x")],
            payload: Payload::Valued { values: vec![] },
        };
        assert!(short.validate().is_err());
    }

    #[test]
    fn display_nests() {
        let a = Obj::base(FinObject::valued("A", &[]).unwrap());
        let t = Obj::bang(Obj::tensor(a.clone(), Obj::Unit));
        assert_eq!(t.to_string(), "!(A (x) I)");
    }
}
