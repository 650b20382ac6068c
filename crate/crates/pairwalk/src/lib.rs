//! File formats, reports, parallel surveys and the command line for
//! [`pairwalk_core`].

pub mod cli;
pub mod graph6;
pub mod parallel;
pub mod report;

pub use pairwalk_core;
