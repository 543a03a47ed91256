//! Library surface of the decomposition-search CLI, exposed so the
//! integration and acceptance suites can drive the pieces directly.

pub mod catalog;
pub mod checkpoint;
pub mod config;
pub mod fixtures;
pub mod report;
pub mod runner;
