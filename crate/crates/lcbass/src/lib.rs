//! File formats, reports, the result cache and the command-line driver
//! around `lcbass-core`.

pub mod cache;
pub mod cli;
pub mod input;
pub mod report;
