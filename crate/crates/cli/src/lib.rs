//! Command line front end and file formats for `bnlimit-core`.

pub mod cli;
pub mod fixtures;
pub mod format;
pub mod g23;
pub mod parallel;
pub mod render;
