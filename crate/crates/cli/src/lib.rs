//! Command-line front end: an expression language for the algebras in
//! `qhopf-core`, JSON reports, and the verification suites behind
//! `qhopf verify`.

pub mod commands;
pub mod eval;
pub mod expr;
pub mod params;
pub mod report;
pub mod suites;

pub use commands::{run, run_args, Cli, Command};
pub use report::Output;
