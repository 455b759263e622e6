//! Exact counting and bijections for two-row (and experimentally m-row)
//! weakly increasing matrices.
//!
//! Three independent counting routes are provided and cross-checked:
//!
//! * closed product formulas ([`exactcount::count_wim_closed`],
//!   [`exactcount::count_kekule_closed`]),
//! * perfect matchings (Kekulé structures) of hexagon-shaped benzenoids
//!   ([`benzenoid`]), linked to matrices through pulse decompositions
//!   ([`wim::pulse_decompose`]),
//! * non-intersecting lattice paths and their path-count determinant
//!   ([`lattice`], [`exactcount::count_wim_lgv`]).
//!
//! The [`cli`] module exposes everything through the `wimlab` binary.

pub mod benzenoid;
pub mod cli;
pub mod error;
pub mod exactcount;
pub mod lattice;
pub mod wim;

pub use error::{Error, Result};
pub use exactcount::{BigCount, GridPoint};
pub use wim::{PulseChain, PulsePair, WIMatrix};
