//! File formats, reports and command dispatch for the homnambu CLI.

pub mod format;
pub mod report;
pub mod run;
