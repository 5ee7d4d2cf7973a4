//! Driver for `qcanon-core`: run configuration, the on-disk table cache,
//! deterministic JSON reports and the verification suites behind the
//! `qcanon` binary.

pub mod cache;
pub mod commands;
pub mod config;
pub mod report;
pub mod suites;

pub use cache::DiskCache;
pub use commands::{cmd_basis, cmd_reparam, cmd_verify, ReparamOutput};
pub use config::{RunConfig, WordSel};
pub use report::{Case, Report, Summary, SCHEMA_VERSION};
pub use suites::Suite;
