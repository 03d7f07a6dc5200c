//! Explicit cocycles and the maps that move them between complexes.

pub mod average;
pub mod cyclic;
pub mod phi;
pub mod psi;
pub mod theta;
pub mod transfer;

pub use average::{average_negation, delta_conditions, is_invariant, DeltaConditions};
pub use cyclic::{b1, b2, cup_product, d, d_value, lemma_closed_form, lemma_sum, CyclicCocycle, CyclicKind};
pub use phi::{phi, phi_pullback};
pub use psi::{psi, psi_pullback};
pub use theta::{theta, theta_value, ThetaVariant};
pub use transfer::{is_left_invariant, is_right_invariant, right_invariantize, tilde_section_cocycle, transfer_d2p};
