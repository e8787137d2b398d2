//! Rooted combinatorial maps on orientable surfaces.
//!
//! The crate provides:
//!
//! - [`map`]: the permutation encoding of rooted maps, duals, canonical codes
//!   and a text codec ([`codec`]);
//! - [`enumerate`]: exhaustive generation of all rooted maps with a given
//!   number of edges, with face/genus/degree filters;
//! - [`explore`]: the clockwise exploration of a planar map, its corner
//!   labelling, discoveries and the dual DFS tree;
//! - [`bijections`]: the cut-and-slide bijection, leaf retraction and the
//!   generalized Rémy bijection, each with its exact inverse;
//! - [`counting`]: big-integer recurrence tables with provenance tracking;
//! - [`identities`]: the catalog of counting identities, each checked
//!   exactly against enumeration-backed tables;
//! - [`twofaces`]: trisections and tripod surgery on two-faced precubic maps
//!   of arbitrary genus.
//!
//! See the `examples/` directory for runnable walkthroughs of each part, and
//! the `maps` binary for a command-line front end.

pub mod bijections;
pub mod cli;
pub mod codec;
pub mod counting;
pub mod enumerate;
pub mod explore;
pub mod identities;
mod loose;
pub mod map;
pub mod twofaces;

pub use map::{CornerSlot, Dart, DegreeProfile, FaceId, Mark, RootedMap, VertexId};
