//! Trace codes `C_{D(α)}` over odd prime fields and their constant-composition
//! subcodes, built by exhaustive enumeration and checked against closed forms.
//!
//! Everything here is pure arithmetic: the crate is `no_std` and only needs
//! `alloc`. IO, threading and the command line live in the `ccc-forge` crate.
//!
//! Module map:
//!
//! - [`field`]: `F_p` and `F_{p^m}` arithmetic, traces, element enumeration.
//! - [`poly`]: polynomials over `F_p`, irreducibility, canonical moduli.
//! - [`cyclotomic`]: exact elements of `Z[ζ_p]`.
//! - [`characters`]: quadratic characters, Gauss sums and the other exact
//!   character sums.
//! - [`codes`]: defining sets, codewords, weight distributions and their
//!   predicted tables.
//! - [`ccc`]: constant-composition subcodes, their predicted parameters and
//!   the LFVC bound.
//! - [`report`]: verification entries shared by all checks.
#![no_std]
#![forbid(unsafe_code)]
// `(m + 1) / 2` is kept as written in the closed forms.
#![allow(clippy::manual_div_ceil)]

extern crate alloc;

pub mod ccc;
pub mod characters;
pub mod codes;
pub mod cyclotomic;
mod error;
pub mod field;
mod params;
pub mod poly;
pub mod report;

pub use cyclotomic::CyclotomicInt;
pub use error::{Error, Result};
pub use field::{ExtField, FieldElement};
pub use params::{is_prime, Parameters, DESK_MAX_Q};
