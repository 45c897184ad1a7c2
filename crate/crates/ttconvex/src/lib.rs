//! Combinatorial dynamics of free group automorphisms.
//!
//! The crate works with automorphisms of finitely generated free groups and
//! with graph self-maps (train track style representatives) carrying a
//! filtration into strata. On top of the word/path machinery it provides
//! growth classification, legality and Nielsen path analysis, bounded
//! cancellation constants, mapping-torus hallway simulation, and the
//! measurement of the coarse-convexity constant of an automorphism orbit:
//! how `|phi^i(w)|` compares against `|w| + |phi^N(w)|` for `0 <= i <= N`.
//!
//! Everything is deterministic: randomized sweeps take explicit seeds, and
//! reductions over parallel iterators use order-independent merges.

pub mod rle;

pub mod fgword;
pub mod graphmap;
pub mod legality;
pub mod growth;
pub mod cancellation;
pub mod hallway;
pub mod convexity;

pub mod fixtures;
pub mod limits;
pub mod report;

pub use fgword::{Alphabet, Automorphism, CyclicWord, OrbitMode, ReducedWord, WordError};
pub use limits::ResourceLimits;
