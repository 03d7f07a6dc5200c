//! The shadow cycle C(S) and the shadow cocycle invariant.

use super::coloring::{complete_region_coloring, enumerate_arc_colorings, ShadowColoring};
use super::diagram::KnotDiagram;
use crate::algebra::{AbelianElem, GroupRingValue};
use crate::chain::{Coefficients, CochainDomain, CochainTable, ComplexKind, FormalChain};
use crate::error::{bail, Result};
use crate::par;
use crate::quandle::FiniteQuandle;

/// Σ_c ε_c (r_c; x_c, y_c), a quandle 2-chain with Y = X coefficients.
///
/// r_c is the region left of both strands, y_c the over color, and x_c the
/// under color on the side of that region: incoming when ε_c = +1, outgoing
/// when ε_c = −1.
pub fn shadow_cycle(d: &KnotDiagram, s: &ShadowColoring) -> FormalChain {
    let mut chain = FormalChain::with_coefficients(ComplexKind::Quandle, Coefficients::Set, 2);
    for (c, cr) in d.crossings().iter().enumerate() {
        let eps = cr.epsilon();
        let under = if eps > 0 { cr.under_in } else { cr.under_out };
        let r = s.regions[d.source_region(c)];
        let x = s.arcs[d.arc_of_edge(under)];
        let y = s.arcs[d.arc_of_edge(cr.over_in)];
        chain.add_term(vec![r, x, y], i64::from(eps));
    }
    chain
}

/// ⟨f, C⟩ = Σ ε_c f(r_c, x_c, y_c).
pub fn evaluate_cocycle_on_cycle(f: &CochainTable, chain: &FormalChain) -> Result<AbelianElem> {
    if f.domain() != CochainDomain::Quandle || f.degree() != 3 {
        bail!(InvalidParameter, "shadow cycles pair with quandle 3-cochains");
    }
    f.evaluate_chain(chain)
}

/// Per arc coloring: the coloring, and the values ⟨f, C(S)⟩ over the region
/// colorings that were summed (one for connected quandles, |X| otherwise).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoringValue {
    pub arcs: Vec<usize>,
    pub values: Vec<AbelianElem>,
}

/// The per-coloring data behind [`shadow_cocycle_invariant`].
pub fn shadow_values(d: &KnotDiagram, q: &FiniteQuandle, f: &CochainTable) -> Result<Vec<ColoringValue>> {
    if f.base() != q.order() {
        bail!(InvalidParameter, "cocycle is defined on {} elements but the quandle has {}", f.base(), q.order());
    }
    if f.domain() != CochainDomain::Quandle || f.degree() != 3 {
        bail!(InvalidParameter, "shadow invariants need a quandle 3-cocycle");
    }
    let seeds: Vec<usize> = if q.is_connected() { vec![0] } else { q.elements().collect() };
    let colorings = enumerate_arc_colorings(d, q);
    par::map_slice(&colorings, |arcs| {
        let values = seeds
            .iter()
            .map(|&seed| {
                let regions = complete_region_coloring(d, q, arcs, 0, seed)?;
                let s = ShadowColoring { arcs: arcs.clone(), regions };
                evaluate_cocycle_on_cycle(f, &shadow_cycle(d, &s))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ColoringValue { arcs: arcs.clone(), values })
    })
    .into_iter()
    .collect()
}

/// (1/|X|) Σ_S t^{⟨f, C(S)⟩} in ℤ[A].
///
/// For connected X every arc coloring has |X| region colorings with equal
/// values, so one seed per arc coloring is used.
pub fn shadow_cocycle_invariant(d: &KnotDiagram, q: &FiniteQuandle, f: &CochainTable) -> Result<GroupRingValue> {
    let per = shadow_values(d, q, f)?;
    let mut total = GroupRingValue::zero(f.values().clone());
    for cv in &per {
        for v in &cv.values {
            total.add_term(v.clone(), 1);
        }
    }
    if q.is_connected() {
        return Ok(total);
    }
    match total.exact_div(q.order() as i64) {
        Some(v) => Ok(v),
        None => bail!(Internal, "shadow sum {total} is not divisible by |X| = {}", q.order()),
    }
}
