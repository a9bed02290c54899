//! Command-line front end: configuration, emitters, figure presets and the
//! invariant registry.

pub mod config;
pub mod emit;
pub mod figures;
pub mod parse;
pub mod strip;
pub mod verify;
