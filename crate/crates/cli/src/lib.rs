//! Support library for the `glaisher` binary: the sweep verifier and its
//! report types live here so integration tests can drive them directly.

pub mod report;

pub use report::{render_text, run_sweep, CellReport, SweepRanges, VerifyReport};
