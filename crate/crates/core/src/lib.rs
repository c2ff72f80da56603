//! Finite semitopologies and semiframes: point-set analysis of quorum
//! structures, their algebraic duals, and the round trips between them.

pub mod elemset;
pub mod consensus;
pub mod duality;
pub mod error;
pub mod fixtures;
pub mod graphs;
pub mod io;
pub mod pointset;
pub mod random;
pub mod regularity;
pub mod report;
pub mod semifilter;
pub mod semiframe;
pub mod semitopology;

pub use elemset::ElemSet;
pub use consensus::{check_consensus, continuity_points, find_splitting, ConsensusReport, Splitting, ValueAssignment};
pub use duality::{
    frame_roundtrip, space_roundtrip, AbstractPoint, FrameMap, FrameMapWitness, SoberWitness, SpaceMap,
    SpatialWitness, Spectrum,
};
pub use error::{Error, Result};
pub use graphs::{IntersectionGraph, StraddleGraph};
pub use pointset::{PointSet, MAX_POINTS};
pub use regularity::{Grade, PointClassification, SpaceReport, TopenPartition};
pub use semifilter::{FilterWitness, Semifilter};
pub use semiframe::{Origin, Semiframe};
pub use semitopology::{NeighbourhoodFamily, Semitopology, DEFAULT_OPENS_CAP};

/// The opens semiframe of a semitopology.
pub fn fr(space: &Semitopology) -> Semiframe {
    Semiframe::of_space(space)
}
