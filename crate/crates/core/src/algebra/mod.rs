//! Finite groups and exact integer linear algebra.

pub mod abelian;
pub mod group;
pub mod group_ring;
pub mod linsolve;
pub mod matrix;
pub mod snf;

pub use abelian::{AbelianElem, AbelianPresentation, AbelianSubgroup};
pub use group::{Centralizer, FiniteGroup};
pub use group_ring::GroupRingValue;
pub use linsolve::{solve_linear_over_abelian, solve_mod};
pub use matrix::IntMatrix;
pub use snf::{invariant_factors, smith_normal_form, SmithForm};
