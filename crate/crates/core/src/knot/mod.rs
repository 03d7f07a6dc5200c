//! Knot diagrams, colorings and shadow cocycle invariants.

pub mod coloring;
pub mod diagram;
pub mod library;
pub mod moves;
pub mod pd;
pub mod shadow;

pub use coloring::{
    act_on_shadow, complete_region_coloring, enumerate_arc_colorings, enumerate_shadow_colorings, is_arc_coloring,
    is_shadow_coloring, ArcColoring, RegionColoring, ShadowColoring,
};
pub use diagram::{Crossing, KnotDiagram};
pub use library::{builtin, torus_2p, BUILTIN_NAMES};
pub use moves::{r1_kink, r2_finger};
pub use pd::{parse_pd, parse_tuples};
pub use shadow::{evaluate_cocycle_on_cycle, shadow_cocycle_invariant, shadow_cycle, shadow_values, ColoringValue};
