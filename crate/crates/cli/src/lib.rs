//! Command-line front end for the lexc engine: configuration, orchestration
//! and reporting.

pub mod config;
pub mod report;
pub mod run;
pub mod suites;

pub use config::{parse_config, ConfigError, Format, ModelSpec, Route, RunConfig, SCHEMA_VERSION};
pub use report::{emit_report, RunReport, SuiteReport, Totals};
pub use run::{exit_code, replay, run_checks};
pub use suites::SuiteId;
