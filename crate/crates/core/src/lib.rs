//! Exact computations with quandle cocycles.
//!
//! The crate covers finite groups and quandles, the group, rack, quandle and
//! Δ chain complexes, explicit cocycles of cyclic and dihedral groups and
//! the maps transporting them to quandle cocycles, shadow cocycle invariants
//! of knot diagrams given as PD codes, group cycles of cyclic branched
//! covers, and Dijkgraaf–Witten sums for lens spaces.
//!
//! Everything is computed over ℤ or ℤ/m with dense tables; there is no
//! floating point anywhere.

pub mod algebra;
pub mod chain;
pub mod cocycle;
pub mod cover;
pub mod error;
pub mod knot;
pub mod limits;
pub mod par;
pub mod quandle;

pub use error::{Error, Result};
