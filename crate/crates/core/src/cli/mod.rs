//! Command-line front end: expression parser, argument model and dispatch.

mod args;
mod dispatch;
mod parser;

pub use args::{CheckName, Cli, ClosedCommand, Command, Format, ScenariosCommand};
pub use dispatch::{evaluate, evaluate_args, run, Evaluation, Output, EXIT_FALSE, EXIT_INPUT, EXIT_OK, SEED_ENV};
pub use parser::{parse_poly, ParseError, MAX_EXPONENT};
