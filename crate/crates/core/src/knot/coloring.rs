//! Arc, region and shadow colorings.

use super::diagram::KnotDiagram;
use crate::error::{bail, Result};
use crate::par;
use crate::quandle::FiniteQuandle;

/// Color of each arc.
pub type ArcColoring = Vec<usize>;
/// Color of each region.
pub type RegionColoring = Vec<usize>;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ShadowColoring {
    pub arcs: ArcColoring,
    pub regions: RegionColoring,
}

/// under-out = under-in *^ε over at every crossing.
pub fn is_arc_coloring(d: &KnotDiagram, q: &FiniteQuandle, a: &[usize]) -> bool {
    a.len() == d.arc_count()
        && a.iter().all(|&x| x < q.order())
        && (0..d.crossing_count()).all(|c| {
            let (i, j, k) = d.crossing_arcs(c);
            q.op_signed(a[i], a[j], d.crossings()[c].epsilon()) == a[k]
        })
}

/// Fills forced arc colors; false on a contradiction.
fn propagate(d: &KnotDiagram, q: &FiniteQuandle, colors: &mut [Option<usize>]) -> bool {
    loop {
        let mut changed = false;
        for c in 0..d.crossing_count() {
            let (i, j, k) = d.crossing_arcs(c);
            let eps = d.crossings()[c].epsilon();
            match (colors[i], colors[j], colors[k]) {
                (Some(x), Some(y), Some(z)) => {
                    if q.op_signed(x, y, eps) != z {
                        return false;
                    }
                }
                (Some(x), Some(y), None) => {
                    colors[k] = Some(q.op_signed(x, y, eps));
                    changed = true;
                }
                (None, Some(y), Some(z)) => {
                    colors[i] = Some(q.op_signed(z, y, -eps));
                    changed = true;
                }
                _ => {}
            }
        }
        if !changed {
            return true;
        }
    }
}

fn extend(d: &KnotDiagram, q: &FiniteQuandle, colors: Vec<Option<usize>>, out: &mut Vec<ArcColoring>) {
    let mut colors = colors;
    if !propagate(d, q, &mut colors) {
        return;
    }
    match colors.iter().position(Option::is_none) {
        None => out.push(colors.into_iter().map(Option::unwrap).collect()),
        Some(free) => {
            for v in q.elements() {
                let mut next = colors.clone();
                next[free] = Some(v);
                extend(d, q, next, out);
            }
        }
    }
}

/// All arc colorings, sorted lexicographically by arc index.
///
/// Branches on the lowest uncolored arc and propagates the crossing relations;
/// the branches for the first arc run in parallel.
pub fn enumerate_arc_colorings(d: &KnotDiagram, q: &FiniteQuandle) -> Vec<ArcColoring> {
    let arcs = d.arc_count();
    let mut all = par::flat_map_range(q.order(), |v| {
        let mut colors = vec![None; arcs];
        colors[0] = Some(v);
        let mut out = Vec::new();
        extend(d, q, colors, &mut out);
        out
    });
    all.sort();
    all
}

/// Region colors from one seed: R(right of an edge) = R(left) * (edge color).
///
/// Every edge is checked afterwards; a failure means the quandle or the
/// diagram data is broken.
pub fn complete_region_coloring(
    d: &KnotDiagram,
    q: &FiniteQuandle,
    a: &[usize],
    seed_region: usize,
    seed_color: usize,
) -> Result<RegionColoring> {
    if seed_region >= d.region_count() || seed_color >= q.order() {
        bail!(InvalidParameter, "seed ({seed_region}, {seed_color}) out of range");
    }
    if a.len() != d.arc_count() {
        bail!(InvalidParameter, "arc coloring has {} entries for {} arcs", a.len(), d.arc_count());
    }
    let edges: Vec<(usize, usize, usize)> = (1..=d.edge_count())
        .map(|e| {
            let (l, r) = d.edge_sides(e);
            (l, r, a[d.arc_of_edge(e)])
        })
        .collect();
    let mut regions = vec![None; d.region_count()];
    regions[seed_region] = Some(seed_color);
    let mut stack = vec![seed_region];
    while let Some(reg) = stack.pop() {
        let col = regions[reg].unwrap();
        for &(l, r, x) in &edges {
            let next = if l == reg && regions[r].is_none() {
                Some((r, q.op(col, x)))
            } else if r == reg && regions[l].is_none() {
                Some((l, q.inv_op(col, x)))
            } else {
                None
            };
            if let Some((n, c)) = next {
                regions[n] = Some(c);
                stack.push(n);
            }
        }
    }
    let Some(regions) = regions.into_iter().collect::<Option<Vec<_>>>() else {
        bail!(Internal, "region adjacency graph is disconnected");
    };
    if let Some(&(l, r, x)) = edges.iter().find(|&&(l, r, x)| q.op(regions[l], x) != regions[r]) {
        bail!(Internal, "region coloring inconsistent across an edge between regions {l} and {r} colored {x}");
    }
    Ok(regions)
}

pub fn is_shadow_coloring(d: &KnotDiagram, q: &FiniteQuandle, s: &ShadowColoring) -> bool {
    is_arc_coloring(d, q, &s.arcs)
        && s.regions.len() == d.region_count()
        && (1..=d.edge_count()).all(|e| {
            let (l, r) = d.edge_sides(e);
            q.op(s.regions[l], s.arcs[d.arc_of_edge(e)]) == s.regions[r]
        })
}

/// S*a: every arc and region color acted on by a.
pub fn act_on_shadow(q: &FiniteQuandle, s: &ShadowColoring, a: usize) -> ShadowColoring {
    ShadowColoring {
        arcs: s.arcs.iter().map(|&x| q.op(x, a)).collect(),
        regions: s.regions.iter().map(|&x| q.op(x, a)).collect(),
    }
}

/// Every shadow coloring: each arc coloring with region 0 seeded by each color.
pub fn enumerate_shadow_colorings(d: &KnotDiagram, q: &FiniteQuandle) -> Result<Vec<ShadowColoring>> {
    let mut out = Vec::new();
    for arcs in enumerate_arc_colorings(d, q) {
        for c in q.elements() {
            let regions = complete_region_coloring(d, q, &arcs, 0, c)?;
            out.push(ShadowColoring { arcs: arcs.clone(), regions });
        }
    }
    Ok(out)
}
