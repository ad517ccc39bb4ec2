//! Command-line front end for `ccc-forge-core`: parameter grids, parallel
//! enumeration, verification reports and text exports.

#![forbid(unsafe_code)]

pub mod app;
pub mod error;
pub mod grid;
pub mod limits;
pub mod parallel;
pub mod verify;

pub use error::CliError;
