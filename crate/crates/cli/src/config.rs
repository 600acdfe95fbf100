//! Run configuration: JSON ingestion and validation.

use std::fmt;
use std::path::PathBuf;

use serde::{Deserialize, Serialize};

use lexc_core::linexp::Mutation;
use lexc_core::models::day::{MeetSemilattice, MonoidalPoset};
use lexc_core::models::{day_preset, preset, DayModel, FinGroup, FinMonoid};

use crate::suites::SuiteId;

pub const SCHEMA_VERSION: u32 = 1;

/// A configuration problem, reported with exit code 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConfigError {
    /// Dotted path of the offending field, empty for syntax errors.
    pub field: String,
    pub line: Option<usize>,
    pub column: Option<usize>,
    pub message: String,
}

impl ConfigError {
    fn at(field: impl Into<String>, message: impl Into<String>) -> Self {
        ConfigError { field: field.into(), line: None, column: None, message: message.into() }
    }
}

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("config error")?;
        if let Some(l) = self.line {
            write!(f, " at line {l}")?;
            if let Some(c) = self.column {
                write!(f, ", column {c}")?;
            }
        }
        if !self.field.is_empty() {
            write!(f, " in {}", self.field)?;
        }
        write!(f, ": {}", self.message)
    }
}

impl std::error::Error for ConfigError {}

fn default_schema() -> u32 {
    SCHEMA_VERSION
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    #[serde(default = "default_schema")]
    pub schema_version: u32,
    pub model: ModelSpec,
    pub checks: Vec<String>,
    #[serde(default)]
    pub bounds: Bounds,
    #[serde(default)]
    pub output: OutputSpec,
    /// Echoed only; every shipped check is exhaustive.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mutate: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct Bounds {
    pub max_carrier: usize,
    pub max_hom_search: u64,
    pub timeout_secs: u64,
    /// Adds per-check durations to the report, which makes it vary between runs.
    pub timings: bool,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds { max_carrier: 3, max_hom_search: 1_000_000, timeout_secs: 600, timings: false }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    #[default]
    Text,
}

impl std::str::FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "json" => Ok(Format::Json),
            "text" => Ok(Format::Text),
            _ => Err(format!("unknown format {s}; expected json or text")),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct OutputSpec {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub report: Option<PathBuf>,
    pub format: Format,
}

/// A preset name or an inline table of element names.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AlgebraSpec {
    Preset(String),
    Inline(InlineTable),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InlineTable {
    #[serde(default = "inline_name")]
    pub name: String,
    pub elements: Vec<String>,
    pub table: Vec<Vec<String>>,
}

fn inline_name() -> String {
    "inline".into()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum DayBaseSpec {
    Preset(String),
    Inline(InlineDay),
}

/// `order` pairs read `[a, b]` as `a <= b` and are closed reflexively and
/// transitively. `f` lists the image of each index element in order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InlineDay {
    pub monoid: AlgebraSpec,
    #[serde(default)]
    pub order: Vec<[String; 2]>,
    pub index: IndexSpec,
    pub f: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IndexSpec {
    #[serde(default = "index_name")]
    pub name: String,
    pub elements: Vec<String>,
    #[serde(default)]
    pub order: Vec<[String; 2]>,
}

fn index_name() -> String {
    "X".into()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Route {
    /// The comonad written out directly for the model.
    Direct,
    /// Induced by the model's adjunction.
    Adjunction,
    /// The coend formula (Day model only).
    Coend,
    /// The identity comonad with diagonal `d` and terminal `e`.
    Identity,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum ModelSpec {
    SliceMonoid {
        monoid: AlgebraSpec,
        #[serde(default = "direct")]
        comonad: Route,
    },
    XrelGroup {
        group: AlgebraSpec,
        #[serde(default = "default_degree")]
        degree: usize,
        #[serde(default = "direct")]
        comonad: Route,
    },
    Day {
        base: DayBaseSpec,
        #[serde(default = "adjunction")]
        comonad: Route,
    },
}

fn direct() -> Route {
    Route::Direct
}

fn adjunction() -> Route {
    Route::Adjunction
}

fn default_degree() -> usize {
    2
}

pub const MODEL_KINDS: &[(&str, &str, &[&str])] = &[
    ("slice-monoid", "sets sliced over a finite monoid", &["direct", "adjunction", "identity"]),
    ("xrel-group", "crossed G-sets and relations, checked up to a degree bound", &["direct", "identity"]),
    ("day", "presheaves on a finite monoidal poset with the Day tensor", &["adjunction", "coend", "identity"]),
];

impl ModelSpec {
    pub fn kind(&self) -> &'static str {
        match self {
            ModelSpec::SliceMonoid { .. } => "slice-monoid",
            ModelSpec::XrelGroup { .. } => "xrel-group",
            ModelSpec::Day { .. } => "day",
        }
    }

    pub fn route(&self) -> Route {
        match self {
            ModelSpec::SliceMonoid { comonad, .. } | ModelSpec::XrelGroup { comonad, .. } | ModelSpec::Day { comonad, .. } => *comonad,
        }
    }
}

pub fn monoid(spec: &AlgebraSpec, field: &str) -> Result<FinMonoid, ConfigError> {
    match spec {
        AlgebraSpec::Preset(name) => preset(name).ok_or_else(|| ConfigError::at(field, format!("unknown preset {name}"))),
        AlgebraSpec::Inline(t) => {
            let names: Vec<&str> = t.elements.iter().map(String::as_str).collect();
            let rows: Vec<Vec<&str>> = t.table.iter().map(|r| r.iter().map(String::as_str).collect()).collect();
            let rows: Vec<&[&str]> = rows.iter().map(Vec::as_slice).collect();
            FinMonoid::from_names(&t.name, &names, &rows).map_err(|e| ConfigError::at(field, e.to_string()))
        }
    }
}

pub fn group(spec: &AlgebraSpec, field: &str) -> Result<FinGroup, ConfigError> {
    FinGroup::new(monoid(spec, field)?).map_err(|e| ConfigError::at(field, e.to_string()))
}

fn pairs(p: &[[String; 2]]) -> Vec<(&str, &str)> {
    p.iter().map(|[a, b]| (a.as_str(), b.as_str())).collect()
}

pub fn day_model(spec: &DayBaseSpec) -> Result<DayModel, ConfigError> {
    match spec {
        DayBaseSpec::Preset(name) => day_preset(name).ok_or_else(|| ConfigError::at("model.base", format!("unknown preset {name}"))),
        DayBaseSpec::Inline(d) => {
            let m = monoid(&d.monoid, "model.base.monoid")?;
            let base = MonoidalPoset::ordered(&m.name, &m, &pairs(&d.order)).map_err(|e| ConfigError::at("model.base.order", e.to_string()))?;
            let names: Vec<&str> = d.index.elements.iter().map(String::as_str).collect();
            let xcat = MeetSemilattice::ordered(&d.index.name, &names, &pairs(&d.index.order))
                .map_err(|e| ConfigError::at("model.base.index", e.to_string()))?;
            let f = d
                .f
                .iter()
                .map(|b| base.index(b).ok_or_else(|| ConfigError::at("model.base.f", format!("unknown base object {b}"))))
                .collect::<Result<Vec<_>, _>>()?;
            DayModel::new(base, xcat, f).map_err(|e| ConfigError::at("model.base.f", e.to_string()))
        }
    }
}

/// Parses and validates a configuration, resolving every name it mentions.
pub fn parse_config(text: &str) -> Result<RunConfig, ConfigError> {
    let cfg: RunConfig = serde_json::from_str(text).map_err(|e| ConfigError {
        field: String::new(),
        line: Some(e.line()),
        column: Some(e.column()),
        message: e.to_string(),
    })?;
    validate(&cfg)?;
    Ok(cfg)
}

pub fn validate(cfg: &RunConfig) -> Result<(), ConfigError> {
    if cfg.schema_version != SCHEMA_VERSION {
        return Err(ConfigError::at("schema_version", format!("unsupported version {}; this engine reads {SCHEMA_VERSION}", cfg.schema_version)));
    }
    let route = cfg.model.route();
    let allowed = MODEL_KINDS.iter().find(|(k, _, _)| *k == cfg.model.kind()).map(|(_, _, r)| *r).unwrap_or_default();
    let route_name = serde_json::to_value(route).ok().and_then(|v| v.as_str().map(str::to_owned)).unwrap_or_default();
    if !allowed.contains(&route_name.as_str()) {
        return Err(ConfigError::at("model.comonad", format!("{} models support {}, not {route_name}", cfg.model.kind(), allowed.join(", "))));
    }
    match &cfg.model {
        ModelSpec::SliceMonoid { monoid: m, .. } => {
            monoid(m, "model.monoid")?;
        }
        ModelSpec::XrelGroup { group: g, degree, .. } => {
            group(g, "model.group")?;
            if *degree == 0 {
                return Err(ConfigError::at("model.degree", "degree bound must be positive"));
            }
        }
        ModelSpec::Day { base, .. } => {
            day_model(base)?;
        }
    }
    if cfg.checks.is_empty() {
        return Err(ConfigError::at("checks", "no checks selected"));
    }
    for (i, c) in cfg.checks.iter().enumerate().filter(|(_, c)| *c != "all") {
        c.parse::<SuiteId>().map_err(|e| ConfigError::at(format!("checks[{i}]"), e))?;
    }
    let b = &cfg.bounds;
    if b.max_carrier == 0 || b.max_hom_search == 0 || b.timeout_secs == 0 {
        return Err(ConfigError::at("bounds", "bounds must be positive"));
    }
    if let Some(m) = &cfg.mutate {
        m.parse::<Mutation>().map_err(|e| ConfigError::at("mutate", e.to_string()))?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_config_gets_defaults() {
        let cfg = parse_config(r#"{"model":{"kind":"slice-monoid","monoid":"L3"},"checks":["def2.all"]}"#).unwrap();
        assert_eq!(cfg.schema_version, 1);
        assert_eq!(cfg.bounds, Bounds::default());
        assert_eq!(cfg.bounds.max_carrier, 3);
        assert_eq!(cfg.bounds.max_hom_search, 1_000_000);
        assert_eq!(cfg.output.format, Format::Text);
        assert_eq!(cfg.model.route(), Route::Direct);
    }

    #[test]
    fn unknown_check_is_rejected() {
        let e = parse_config(r#"{"model":{"kind":"slice-monoid","monoid":"L3"},"checks":["def2.cond9"]}"#).unwrap_err();
        assert_eq!(e.field, "checks[0]");
        assert!(e.message.contains("def2.cond9"));
    }

    #[test]
    fn syntax_errors_carry_a_position() {
        let e = parse_config("{\n  \"model\": ,\n}").unwrap_err();
        assert_eq!(e.line, Some(2));
    }

    #[test]
    fn route_must_suit_the_model() {
        let e = parse_config(r#"{"model":{"kind":"slice-monoid","monoid":"L3","comonad":"coend"},"checks":["def2.all"]}"#).unwrap_err();
        assert_eq!(e.field, "model.comonad");
    }

    #[test]
    fn inline_day_base() {
        let text = r#"{"model":{"kind":"day","base":{"monoid":"L3","order":[["a","b"],["a","e"]],
            "index":{"elements":["bot","top"],"order":[["bot","top"]]},"f":["a","e"]}},"checks":["day.coend"]}"#;
        let cfg = parse_config(text).unwrap();
        let ModelSpec::Day { base, .. } = &cfg.model else { panic!() };
        assert_eq!(day_model(base).unwrap().xcat.len(), 2);
    }

    #[test]
    fn day_index_must_be_strong_monoidal() {
        let text = r#"{"model":{"kind":"day","base":{"monoid":"L3","order":[["a","b"],["a","e"]],
            "index":{"elements":["bot","top"],"order":[["bot","top"]]},"f":["b","e"]}},"checks":["day.coend"]}"#;
        let e = parse_config(text).unwrap_err();
        assert_eq!(e.field, "model.base.f");
    }
}
