//! Command-line front end for `nnq-core`: group specifications, table renderers and the `nnq`
//! subcommands.

pub mod cli;
pub mod input;
pub mod render;

pub use cli::{run, Check, Command, Invocation, Outcome};
pub use render::{parse_json, render, Format};
