//! File formats, bundled fixtures, verification suites and the command
//! line for [`khalg_core`].

pub mod cli;
pub mod fixtures;
pub mod format;
pub mod formula;
pub mod matrix;
pub mod source;
pub mod suites;
