//! Built-in diagrams.

use super::diagram::KnotDiagram;
use super::pd::parse_pd;
use crate::error::{bail, Result};

const UNKNOT: &str = include_str!("../../data/unknot.pd");
const TREFOIL: &str = include_str!("../../data/trefoil.pd");
const TREFOIL_ALT: &str = include_str!("../../data/trefoil_alt.pd");
const FIGURE_EIGHT: &str = include_str!("../../data/fig8.pd");
const FIGURE_EIGHT_R2: &str = include_str!("../../data/fig8_r2.pd");

/// Names accepted by [`builtin`].
pub const BUILTIN_NAMES: [&str; 5] = ["unknot", "trefoil", "trefoil_alt", "fig8", "fig8_r2"];

pub fn builtin(name: &str) -> Result<KnotDiagram> {
    let text = match name {
        "unknot" => UNKNOT,
        "trefoil" => TREFOIL,
        "trefoil_alt" => TREFOIL_ALT,
        "fig8" | "figure-eight" => FIGURE_EIGHT,
        "fig8_r2" => FIGURE_EIGHT_R2,
        _ => {
            if let Some(p) = name.strip_prefix("torus:") {
                let p = p.parse().map_err(|_| crate::Error::Parse(format!("bad torus parameter {p:?}")))?;
                return torus_2p(p);
            }
            bail!(InvalidParameter, "unknown diagram {name:?}; known: {}, torus:p", BUILTIN_NAMES.join(", "))
        }
    };
    parse_pd(text)
}

/// The standard (2,p)-torus diagram: crossing k is X[2k+1, 2k+p+1, 2k+2, 2k+p+2] mod 2p.
pub fn torus_2p(p: usize) -> Result<KnotDiagram> {
    if p < 3 || p % 2 == 0 {
        bail!(InvalidParameter, "(2,p)-torus knots need odd p >= 3, got {p}");
    }
    let m = 2 * p;
    let pd: Vec<[usize; 4]> =
        (0..p).map(|k| [(2 * k) % m + 1, (2 * k + p) % m + 1, (2 * k + 1) % m + 1, (2 * k + p + 1) % m + 1]).collect();
    KnotDiagram::from_pd(&pd)
}
