//! File formats, parallel drivers and the command line for `skewcode-core`.

pub mod cli;
pub mod config;
pub mod driver;
pub mod parallel;
pub mod report;
pub mod selfcheck;
pub mod table1;
