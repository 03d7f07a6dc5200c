//! Chain complexes of groups and quandles, cochains and homology.

pub mod cochain;
pub mod delta;
pub mod formal;
pub mod group;
pub mod homology;
pub mod rack;

pub use cochain::{
    coboundary, hom_to_inhom_cochain, inhom_to_hom_cochain, is_coboundary, is_cocycle, is_degenerate, is_normalized,
    tuple_at, CochainDomain, CochainTable, Complex,
};
pub use delta::{delta_boundary, delta_coinvariants};
pub use formal::{Coefficients, ComplexKind, FormalChain};
pub use group::{group_boundary, hom_to_inhom, inhom_to_hom, normalize_group};
pub use homology::{quandle_homology, HomologyCoefficients, HomologyResult};
pub use rack::{normalize, normalize_quandle, rack_boundary};
