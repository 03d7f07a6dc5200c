//! Cyclic branched covers of knots and Dijkgraaf–Witten sums.

pub mod cycle;
pub mod lens;
pub mod presentation;

pub use cycle::{branched_cover_cycle, evaluate_group_cocycle, is_group_cycle};
pub use lens::{dw_lens, dw_lens_triangulation, torus_lens_comparison, Comparison, DwResult};
pub use presentation::{
    cyclic_cover_presentation, restrict_representation, wirtinger, Abelianization, CoverRepresentation, GroupPresentation,
    Word,
};
