//! Graph expressions, law verification and counterexample search on top of
//! `domlex`.

pub mod commands;
pub mod describe;
pub mod error;
pub mod expr;
pub mod hunt;
pub mod report;
pub mod verify;

pub use error::CliError;
pub use expr::GraphExpr;
