//! Hypervolume computation toolkit for multiobjective optimization.
//!
//! The hypervolume indicator of a point set is the measure of the region it
//! dominates relative to a reference corner — the union of the axis-aligned
//! boxes spanned by the reference corner and each point. This crate
//! computes it four ways:
//!
//! - [`hypervolume`]: exact, by pivot divide and conquer over hyperoctants
//!   (the workhorse; see [`quick`]),
//! - [`ie_volume`]: exact, by inclusion–exclusion over subsets (the
//!   reference oracle, capped at 25 points),
//! - [`sweep2d_volume`]: exact, by a 2D strip sweep,
//! - [`mc_estimate`]: randomized `±epsilon` estimation in the Karp–Luby
//!   style.
//!
//! All four register by name in [`algo`], so callers can pick a strategy at
//! runtime. [`dataset`] generates seeded benchmark fronts and [`io`] reads
//! and writes the `#`-separated front file format.

pub mod algo;
pub mod dataset;
pub mod error;
pub mod geometry;
pub mod io;
pub mod oracles;
pub mod quick;
mod rng;

pub use algo::{algorithm_names, create, AlgoParams, HvAlgorithm, HvOutcome};
pub use dataset::{gen_front, Family, GenSpec};
pub use error::{Error, Result};
pub use geometry::{
    box_volume, canonicalize, dominates, filter_nondominated, CanonicalizeReport, Frame, Front,
    Orientation, Point,
};
pub use io::{read_fronts, read_fronts_path, write_front, write_front_path, RawFront};
pub use oracles::{ie_volume, mc_estimate, sample_budget, sweep2d_volume, McConfig};
pub use quick::{hypervolume, select_pivot, split_octants, OctantLabel, QhvConfig, RecursionStats};
