//! Experiment harness around `robmax-core`: config files, dataset IO,
//! seeded experiment runs with adversarial evaluation, bound certification,
//! and plot-ready CSV emission. The `robmax` binary is a thin wrapper over
//! this library so tests can drive every pipeline in-process.

pub mod certify;
pub mod config;
pub mod csvio;
pub mod dataio;
mod error;
pub mod objective;
pub mod output;
pub mod plotdata;
pub mod runner;

pub use error::CliError;
