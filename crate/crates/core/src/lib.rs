//! Rank and orbit classification of zero-one arrays of shape 2×2×2 and
//! 2×2×2×2.
//!
//! Arrays are packed into integers ([`ArrayCode`]) so that numeric order is
//! lexicographic order of flattenings. [`stratify`] sorts every array of a
//! shape by exact tensor rank over one of three additions ([`Semiring`]);
//! [`symmetry`] splits the GF(2) strata into orbits of the change-of-basis
//! groups and picks canonical forms; [`reporting`] turns all of it into
//! tables and checks them against [`reporting::expected`].

pub mod array;
pub mod cache;
pub mod error;
pub mod reporting;
pub mod semiring;
pub mod stratify;
pub mod symmetry;

pub use array::{
    flatten, ones_count, outer_product, rank_one_arrays, render_mat, unflatten, ArrayCode, Shape,
    Vec2,
};
pub use error::{Error, Result};
pub use semiring::{combine, Semiring};
pub use stratify::{rank_distribution, rank_of, stratify, RankShare, RankTable};
pub use symmetry::{
    act_axis, act_permutation, classify, large_orbit, orbit_split, small_orbit, AxisPermutation,
    Group, GroupElement, OrbitRecord, SplitEntry,
};
