//! Finite quandles, the inner action and conjugation quandles.

pub mod conj;
#[allow(clippy::module_inception)]
pub mod quandle;
pub mod word;

pub use conj::{
    cocycle_identity_holds, compute_section, conj_quandle, correct_section, lifted_inverse, lifted_operation, ConjQuandleContext,
    Section,
};
pub use quandle::{Axiom, AxiomReport, FiniteQuandle, QuandleTag};
pub use word::{inner_action, QuandleWord};

/// Maps R_p to Conj(h) ⊂ D_2p: element k goes to h x^k (group index p + k).
pub fn dihedral_embedding(p: usize) -> Vec<usize> {
    (0..p).map(|k| p + k).collect()
}
