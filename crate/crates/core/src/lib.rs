//! Splitting type loci of k-gonal curves through k-uniform displacement
//! tableaux, k-cores and the poset of C-vectors.

pub mod closed_form;
pub mod cvector;
pub mod error;
pub mod guard;
pub mod modulus;
pub mod partition;
pub mod poset;
pub mod splitting;
pub mod tableau;
pub mod tropical;

pub use closed_form::{
    closed_form_alpha, family_grid, Family, FiveShape, FourShape, Six2Shape, Six3Shape,
    FAMILY_NAMES,
};
pub use cvector::CVector;
pub use error::{Error, Result};
pub use guard::Guards;
pub use modulus::Modulus;
pub use partition::{partitions_of, BoxCoord, Partition};
pub use poset::{
    build_hasse, build_hasse_with, count_maximal_chains, enumerate_maximal_chains,
    enumerate_maximal_chains_with, ChainCount, ChainCounter, HasseDiagram, HasseEdge, HasseNode,
    MaximalChains,
};
pub use splitting::{RankJump, SplittingType};
pub use tableau::{
    cycle_out, cycle_out_toward, enumerate_k_uniform, enumerate_k_uniform_with, hook_length_count,
    phi, restamp, saturate, saturation, swap, KUniformTableaux, MaximalChain, Saturation, Tableau,
};
pub use tropical::{
    colex_subsets, connectivity_check, locus_cardinality, locus_dimension, splitting_locus,
    splitting_locus_stream, splitting_locus_with, torus_contains, torus_from_tableau, ChainOfLoops,
    ColexSubsets, LocusTorus, SplittingLocus, Torus,
};
