//! Parser for the textual path notation produced by `Display for Mor`.
//!
//! ```text
//! mor    := term ( "." term )*            composition, rightmost step first
//! term   := "!" term                      functor action
//!         | "(" mor ( "(x)" mor )* ")"    grouping / left-nested tensor
//!         | "mI"
//!         | KEY "[" obj ( "," obj )* "]"
//!         | "coh" "[" obj "->" obj "]"
//!         | NAME                          tabulated morphism from the environment
//! KEY    := id | alpha | alpha' | lambda | lambda' | rho | rho' | c | c'
//!         | delta | eps | m | d | e | sigma
//! obj    := oterm ( "(x)" oterm )*        left-nested tensor
//! oterm  := "I" | ID | "!" oterm | "(" obj ")"
//! ```

use std::collections::HashMap;
use std::sync::Arc;

use crate::diagrams::mor::{Mor, NamedMor};
use crate::error::{Error, Result};
use crate::fincat::object::is_ident_char;
use crate::fincat::Obj;

/// Names the parser resolves: base objects by id, tabulated morphisms by name.
#[derive(Clone, Default)]
pub struct Env {
    pub objects: HashMap<String, Obj>,
    pub morphisms: HashMap<String, Arc<NamedMor>>,
}

impl Env {
    /// Collects every base object and named morphism a term mentions.
    pub fn from_terms<'a>(terms: impl IntoIterator<Item = &'a Mor>) -> Self {
        let mut env = Env::default();
        for t in terms {
            let mut objs = Vec::new();
            t.objects(&mut objs);
            let mut bases = Vec::new();
            for o in &objs {
                o.bases(&mut bases);
            }
            for b in bases {
                env.objects.insert(b.id.clone(), Obj::Base(b));
            }
            let mut named = Vec::new();
            t.named_parts(&mut named);
            for n in named {
                env.morphisms.insert(n.name.clone(), n);
            }
        }
        env
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    LParen,
    RParen,
    LBrack,
    RBrack,
    Comma,
    Dot,
    Bang,
    Otimes,
    Arrow,
}

fn lex(s: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            ' ' | '\t' | '\n' => {
                i += 1;
                continue;
            }
            '(' if bytes.get(i + 1) == Some(&'x') && bytes.get(i + 2) == Some(&')') => {
                i += 3;
                Tok::Otimes
            }
            '(' => {
                i += 1;
                Tok::LParen
            }
            ')' => {
                i += 1;
                Tok::RParen
            }
            '[' => {
                i += 1;
                Tok::LBrack
            }
            ']' => {
                i += 1;
                Tok::RBrack
            }
            ',' => {
                i += 1;
                Tok::Comma
            }
            '.' => {
                i += 1;
                Tok::Dot
            }
            '!' => {
                i += 1;
                Tok::Bang
            }
            '-' if bytes.get(i + 1) == Some(&'>') => {
                i += 2;
                Tok::Arrow
            }
            c if is_ident_char(c) => {
                while i < bytes.len() && is_ident_char(bytes[i]) {
                    i += 1;
                }
                Tok::Ident(bytes[start..i].iter().collect())
            }
            other => return Err(Error::Parse { pos: i, msg: format!("unexpected character {other:?}") }),
        };
        out.push((start, tok));
    }
    Ok(out)
}

struct Parser<'e> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    env: &'e Env,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map(|(p, _)| *p).unwrap_or(usize::MAX)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.here(), msg: msg.into() })
    }

    fn expect(&mut self, t: Tok) -> Result<()> {
        if self.peek() == Some(&t) {
            self.pos += 1;
            Ok(())
        } else {
            self.err(format!("expected {t:?}"))
        }
    }

    fn ident(&mut self) -> Result<String> {
        match self.peek() {
            Some(Tok::Ident(s)) => {
                let s = s.clone();
                self.pos += 1;
                Ok(s)
            }
            _ => self.err("expected identifier"),
        }
    }

    fn obj(&mut self) -> Result<Obj> {
        let mut acc = self.oterm()?;
        while self.peek() == Some(&Tok::Otimes) {
            self.pos += 1;
            acc = Obj::tensor(acc, self.oterm()?);
        }
        Ok(acc)
    }

    fn oterm(&mut self) -> Result<Obj> {
        match self.peek() {
            Some(Tok::Bang) => {
                self.pos += 1;
                Ok(Obj::bang(self.oterm()?))
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let o = self.obj()?;
                self.expect(Tok::RParen)?;
                Ok(o)
            }
            Some(Tok::Ident(_)) => {
                let name = self.ident()?;
                if name == "I" {
                    return Ok(Obj::Unit);
                }
                match self.env.objects.get(&name) {
                    Some(o) => Ok(o.clone()),
                    None => self.err(format!("unknown object {name}")),
                }
            }
            _ => self.err("expected object"),
        }
    }

    fn objs(&mut self, n: usize) -> Result<Vec<Obj>> {
        self.expect(Tok::LBrack)?;
        let mut out = vec![self.obj()?];
        while out.len() < n {
            self.expect(Tok::Comma)?;
            out.push(self.obj()?);
        }
        self.expect(Tok::RBrack)?;
        Ok(out)
    }

    fn mor(&mut self) -> Result<Mor> {
        let mut terms = vec![self.term()?];
        while self.peek() == Some(&Tok::Dot) {
            self.pos += 1;
            terms.push(self.term()?);
        }
        if terms.len() == 1 {
            return Ok(terms.pop().unwrap());
        }
        terms.reverse();
        Ok(Mor::Seq(terms))
    }

    fn term(&mut self) -> Result<Mor> {
        match self.peek() {
            Some(Tok::Bang) => {
                self.pos += 1;
                Ok(Mor::bang(self.term()?))
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let mut acc = self.mor()?;
                while self.peek() == Some(&Tok::Otimes) {
                    self.pos += 1;
                    acc = Mor::tensor(acc, self.mor()?);
                }
                self.expect(Tok::RParen)?;
                Ok(acc)
            }
            Some(Tok::Ident(_)) => {
                let name = self.ident()?;
                let bracketed = self.peek() == Some(&Tok::LBrack);
                let one = |p: &mut Self| p.objs(1).map(|mut v| v.remove(0));
                let two = |p: &mut Self| p.objs(2).map(|v| (v[0].clone(), v[1].clone()));
                match (name.as_str(), bracketed) {
                    ("mI", _) => Ok(Mor::MUnit),
                    ("id", true) => Ok(Mor::Id(one(self)?)),
                    ("alpha", true) | ("alpha'", true) => {
                        let v = self.objs(3)?;
                        let (a, b, c) = (v[0].clone(), v[1].clone(), v[2].clone());
                        Ok(if name == "alpha" { Mor::Assoc(a, b, c) } else { Mor::AssocInv(a, b, c) })
                    }
                    ("lambda", true) => Ok(Mor::LUnit(one(self)?)),
                    ("lambda'", true) => Ok(Mor::LUnitInv(one(self)?)),
                    ("rho", true) => Ok(Mor::RUnit(one(self)?)),
                    ("rho'", true) => Ok(Mor::RUnitInv(one(self)?)),
                    ("c", true) => two(self).map(|(a, b)| Mor::Braid(a, b)),
                    ("c'", true) => two(self).map(|(a, b)| Mor::BraidInv(a, b)),
                    ("delta", true) => Ok(Mor::Delta(one(self)?)),
                    ("eps", true) => Ok(Mor::Eps(one(self)?)),
                    ("m", true) => two(self).map(|(a, b)| Mor::M(a, b)),
                    ("d", true) => Ok(Mor::D(one(self)?)),
                    ("e", true) => Ok(Mor::E(one(self)?)),
                    ("sigma", true) => two(self).map(|(a, b)| Mor::Sigma(a, b)),
                    ("coh", true) => {
                        self.expect(Tok::LBrack)?;
                        let a = self.obj()?;
                        self.expect(Tok::Arrow)?;
                        let b = self.obj()?;
                        self.expect(Tok::RBrack)?;
                        Ok(Mor::Coh(a, b))
                    }
                    (_, false) => match self.env.morphisms.get(&name) {
                        Some(n) => Ok(Mor::Named(n.clone())),
                        None => self.err(format!("unknown morphism {name}")),
                    },
                    _ => self.err(format!("unknown structure map {name}")),
                }
            }
            _ => self.err("expected morphism"),
        }
    }
}

pub fn parse_mor(text: &str, env: &Env) -> Result<Mor> {
    let mut p = Parser { toks: lex(text)?, pos: 0, env };
    let m = p.mor()?;
    if p.pos != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(m)
}

pub fn parse_obj(text: &str, env: &Env) -> Result<Obj> {
    let mut p = Parser { toks: lex(text)?, pos: 0, env };
    let o = p.obj()?;
    if p.pos != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(o)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::{FinObject, Payload};
    use crate::linexp::sigma::sigma_path;

    fn atom(id: &str) -> Obj {
        Obj::base(FinObject { id: id.into(), carrier: vec![], payload: Payload::Plain })
    }

    #[test]
    fn sigma_round_trips() {
        let (x, y) = (atom("X"), atom("Y"));
        let s = sigma_path(&x, &y);
        let text = s.to_string();
        assert_eq!(
            text,
            "(eps[!Y] (x) eps[!X]) . (!(lambda[!Y] . (e[X] (x) id[!Y])) (x) !(rho[!X] . (id[!X] (x) e[Y]))) \
             . d[(!X (x) !Y)] . m[!X,!Y] . (delta[X] (x) delta[Y])"
        );
        let env = Env::from_terms([&s]);
        let back = parse_mor(&text, &env).unwrap();
        assert_eq!(back, s);
        assert_eq!(back.to_string(), text);
    }

    #[test]
    fn objects_parse() {
        let mut env = Env::default();
        env.objects.insert("A".into(), atom("A"));
        let o = parse_obj("!(A (x) I) (x) !!A", &env).unwrap();
        assert_eq!(o, Obj::tensor(Obj::bang(Obj::tensor(atom("A"), Obj::Unit)), Obj::bang(Obj::bang(atom("A")))));
    }

    #[test]
    fn errors_report_position() {
        let env = Env::default();
        assert!(matches!(parse_mor("delta[Q]", &env), Err(Error::Parse { .. })));
        assert!(matches!(parse_mor("mI mI", &env), Err(Error::Parse { .. })));
        assert!(matches!(parse_mor("(mI", &env), Err(Error::Parse { .. })));
    }
}
