//! File formats, random corpora, sweeps and reports around `ccl-core`.

pub mod gen;
pub mod io;
pub mod json;
pub mod report;
pub mod sweep;

pub use ccl_core;
