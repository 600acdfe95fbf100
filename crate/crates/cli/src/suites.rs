//! Suite ids, their dependencies and the order they run in.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SuiteId {
    Selfcheck,
    Comonad,
    Def2Cond(u8),
    Def2All,
    Derived,
    Sym,
    EmCartesian,
    EmSymmetry,
    Thm5,
    Prop2,
    Prop3,
    AdjRoundTrip,
    DayCoend,
    DayCrossModel,
}

/// Every id accepted in a config, `all` aside.
pub const SUITE_IDS: &[&str] = &[
    "selfcheck",
    "comonad",
    "def2.all",
    "def2.cond1",
    "def2.cond2",
    "def2.cond3",
    "def2.cond4",
    "def2.cond5",
    "def2.cond6",
    "def2.cond7",
    "def2.cond8",
    "derived",
    "sym",
    "sym.prop1",
    "sym.prop4",
    "xrel.sigma-vs-braiding",
    "em.cartesian",
    "em.symmetry",
    "thm5.iff",
    "prop2",
    "prop3",
    "adj.round-trip",
    "day.coend",
    "day.cross-model",
];

impl FromStr for SuiteId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Ok(match s {
            "selfcheck" => SuiteId::Selfcheck,
            "comonad" => SuiteId::Comonad,
            "def2.all" => SuiteId::Def2All,
            "derived" => SuiteId::Derived,
            "sym" | "sym.prop1" | "sym.prop4" | "xrel.sigma-vs-braiding" => SuiteId::Sym,
            "em.cartesian" => SuiteId::EmCartesian,
            "em.symmetry" => SuiteId::EmSymmetry,
            "thm5.iff" => SuiteId::Thm5,
            "prop2" => SuiteId::Prop2,
            "prop3" => SuiteId::Prop3,
            "adj.round-trip" => SuiteId::AdjRoundTrip,
            "day.coend" => SuiteId::DayCoend,
            "day.cross-model" => SuiteId::DayCrossModel,
            _ => match s.strip_prefix("def2.cond").and_then(|k| k.parse::<u8>().ok()) {
                Some(k @ 1..=8) => SuiteId::Def2Cond(k),
                _ if s == "all" => return Err("all is expanded per model and has no single suite".into()),
                _ => return Err(format!("unknown check id {s}; expected all or one of {}", SUITE_IDS.join(", "))),
            },
        })
    }
}

impl fmt::Display for SuiteId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SuiteId::Selfcheck => f.write_str("selfcheck"),
            SuiteId::Comonad => f.write_str("comonad"),
            SuiteId::Def2Cond(k) => write!(f, "def2.cond{k}"),
            SuiteId::Def2All => f.write_str("def2.all"),
            SuiteId::Derived => f.write_str("derived"),
            SuiteId::Sym => f.write_str("sym"),
            SuiteId::EmCartesian => f.write_str("em.cartesian"),
            SuiteId::EmSymmetry => f.write_str("em.symmetry"),
            SuiteId::Thm5 => f.write_str("thm5.iff"),
            SuiteId::Prop2 => f.write_str("prop2"),
            SuiteId::Prop3 => f.write_str("prop3"),
            SuiteId::AdjRoundTrip => f.write_str("adj.round-trip"),
            SuiteId::DayCoend => f.write_str("day.coend"),
            SuiteId::DayCrossModel => f.write_str("day.cross-model"),
        }
    }
}

impl SuiteId {
    pub fn deps(self) -> &'static [SuiteId] {
        use SuiteId::*;
        match self {
            Selfcheck => &[],
            Comonad | AdjRoundTrip | DayCoend | DayCrossModel | Thm5 => &[Selfcheck],
            Def2Cond(_) | Def2All | EmCartesian => &[Comonad],
            Derived | Sym | Prop2 | Prop3 => &[Def2All],
            EmSymmetry => &[EmCartesian],
        }
    }
}

/// `all` for a model kind. `sym` is left out when the model declares no
/// symmetry or braiding, and the coalgebra suites for the graded model,
/// which has no terminal object.
pub fn all_for(kind: &str, braided: bool, discrete_day: bool) -> Vec<SuiteId> {
    use SuiteId::*;
    let mut out = vec![Selfcheck, Comonad, Def2All, Derived, AdjRoundTrip];
    if braided {
        out.push(Sym);
    }
    match kind {
        "slice-monoid" => out.extend([EmCartesian, EmSymmetry, Thm5, Prop2, Prop3]),
        "xrel-group" => {}
        _ => {
            out.extend([EmCartesian, EmSymmetry, Thm5, Prop2, DayCoend]);
            if discrete_day {
                out.push(DayCrossModel);
            }
        }
    }
    out
}

/// The selection closed under dependencies, in run order, each marked with
/// whether it was asked for.
pub fn plan(requested: &[SuiteId]) -> Vec<(SuiteId, bool)> {
    let asked: BTreeSet<SuiteId> = requested.iter().copied().collect();
    let mut all = BTreeSet::new();
    let mut todo: Vec<SuiteId> = requested.to_vec();
    while let Some(s) = todo.pop() {
        if all.insert(s) {
            todo.extend(s.deps());
        }
    }
    // a single condition is subsumed once the whole of def2 runs
    if all.contains(&SuiteId::Def2All) {
        all.retain(|s| !matches!(s, SuiteId::Def2Cond(_)));
    }
    all.into_iter().map(|s| (s, asked.contains(&s) || (s == SuiteId::Def2All && asked.iter().any(|a| matches!(a, SuiteId::Def2Cond(_)))))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_round_trip() {
        for s in SUITE_IDS {
            let id: SuiteId = s.parse().unwrap();
            if !matches!(*s, "sym.prop1" | "sym.prop4" | "xrel.sigma-vs-braiding") {
                assert_eq!(id.to_string(), *s);
            }
        }
        assert!("def2.cond9".parse::<SuiteId>().is_err());
        assert!("def2.cond0".parse::<SuiteId>().is_err());
    }

    #[test]
    fn em_cartesian_pulls_in_its_dependencies() {
        let p = plan(&[SuiteId::EmCartesian]);
        assert_eq!(p, vec![(SuiteId::Selfcheck, false), (SuiteId::Comonad, false), (SuiteId::EmCartesian, true)]);
    }

    #[test]
    fn single_conditions_stay_single() {
        let p = plan(&[SuiteId::Def2Cond(5)]);
        assert_eq!(p.last(), Some(&(SuiteId::Def2Cond(5), true)));
        let p = plan(&[SuiteId::Def2Cond(5), SuiteId::Derived]);
        assert!(p.iter().all(|(s, _)| !matches!(s, SuiteId::Def2Cond(_))));
        assert!(p.contains(&(SuiteId::Def2All, true)));
    }
}
