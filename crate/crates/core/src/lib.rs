//! Exact simulation of a two-qubit algorithm that decides whether a Boolean
//! function `f: {0,1}² → {0,1}` has an even or odd number of ones using two
//! oracle calls, plus the entanglement, NMR-observability and query-count
//! analysis around it.

pub mod algorithms;
pub mod cli;
pub mod entanglement;
mod error;
pub mod json;
pub mod nmr;
pub mod oracles;
pub mod quantum;
pub mod report;
pub mod verify;

pub use error::{Error, Result};
