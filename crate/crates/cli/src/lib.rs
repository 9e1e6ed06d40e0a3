//! Report format shared by the `catalan` binary and its tests.

pub mod report;
