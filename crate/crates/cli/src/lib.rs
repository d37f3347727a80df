//! Command-line front end for the `css-entropy` library.

pub mod args;
pub mod error;
mod run;

pub use args::{parse_args, Command, RunConfig};
pub use error::CliError;
pub use run::{main_with, run};
