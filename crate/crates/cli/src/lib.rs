//! Command-line front end for `aluffi-core`: job files, dispatch, reports and the acceptance suite.

pub mod acceptance;
pub mod input;
pub mod oracle;
pub mod report;
pub mod run;

pub use input::{parse_input, parse_input_with, AluffiOp, Command, IdealOp, JobSpec, Options};
pub use report::{Report, Status};
pub use run::run;

use aluffi_core::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERDICT: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_LIMIT: i32 = 3;

/// Exit code for a library error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::ResourceExhausted { .. } => EXIT_LIMIT,
        _ => EXIT_INPUT,
    }
}
