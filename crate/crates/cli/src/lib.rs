//! Parsers and command handlers behind the `chromix` binary.

pub mod commands;
pub mod parse;
