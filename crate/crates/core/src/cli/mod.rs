pub mod config;
pub mod parse;
pub mod render;
mod run;

pub use run::{default_params, run_command, CommandOutput, EXIT_DOMAIN, EXIT_OK, EXIT_USAGE};
