//! Library side of the `posetlab` binary: expression parsing, evaluation,
//! rendering, and the verification suite.

pub mod commands;
pub mod dot;
pub mod eval;
pub mod expr;
pub mod report;
pub mod suite;
