//! Exact arithmetic for up-down Markov chains on Young diagrams with a Jack
//! parameter.
//!
//! The crate builds, over exact rationals:
//!
//! - Young diagrams, their levels, and the one-box-displacement graph
//!   ([`partition`]);
//! - Kerov interlacing coordinates and the closed-form down/up transition
//!   probabilities ([`kerov`]);
//! - the stationary level measures generated by the up kernel ([`zmeasure`]);
//! - up-down transition matrices, rescaled generators, exact spectra, and
//!   seeded Monte Carlo samplers ([`chain`]);
//! - the filtered algebra of regular functions on diagrams: generating
//!   series, evaluation, interpolation, and top-degree symbols ([`regular`]);
//! - formal second-order differential operators in moment coordinates, their
//!   exact matrices on filtered subspaces, spectra, and degenerate limits
//!   ([`generator`]);
//! - the Thoma simplex, moment coordinates, and the diagram embedding
//!   ([`thoma`]);
//! - a standard-tableau counting oracle ([`oracle`]), a named verification
//!   suite ([`verify`]), and the CLI plumbing behind the `young-updown`
//!   binary ([`cli`]).
//!
//! Everything downstream of a partition and a rational Jack parameter is
//! exact; floating point only enters Monte Carlo sampling and explicitly
//! float-valued report columns.
//!
//! Start with the runnable examples (`cargo run --example probs`, etc.) for a
//! tour of each capability.

pub mod chain;
pub mod cli;
pub mod generator;
pub mod kerov;
pub mod linalg;
pub mod mpoly;
pub mod oracle;
pub mod partition;
pub mod polynomial;
pub mod rational;
pub mod regular;
pub mod series;
pub mod thoma;
pub mod verify;
pub mod zmeasure;

pub use kerov::{JackTheta, KerovCoords, Params, SeriesClass};
pub use partition::{Direction, Partition};
pub use rational::Rat;
