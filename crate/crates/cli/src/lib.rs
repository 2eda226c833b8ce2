//! Library surface of the command-line tool, exposed so integration tests
//! can drive the full pipeline in-process.

pub mod parse;
pub mod report;
pub mod run;
