//! Library surface of the command-line driver; the binary in `main.rs` is a
//! thin argument-parsing layer over these functions, and the acceptance
//! battery drives them directly.

pub mod command;
pub mod laws;
pub mod report;
pub mod workspace;

pub use command::Outcome;
pub use laws::{run_suite, LawsCfg, SUITES};
pub use report::{Format, Report};
pub use workspace::{parse_workspace, CliError, Workspace};
