//! Reidemeister I and II moves on PD codes.

use std::collections::BTreeMap;

use super::diagram::KnotDiagram;
use crate::error::{bail, Result};

/// Subdivides the chosen edges into three pieces each and relabels so that
/// labels stay consecutive along the knot.
struct Relabel {
    labels: BTreeMap<(usize, usize), usize>,
}

impl Relabel {
    fn new(edges: usize, split: &[usize]) -> Self {
        let mut labels = BTreeMap::new();
        let mut next = 1;
        for e in 1..=edges {
            let pieces = if split.contains(&e) { 3 } else { 1 };
            for k in 0..pieces {
                labels.insert((e, k), next);
                next += 1;
            }
        }
        Relabel { labels }
    }

    fn get(&self, e: usize, piece: usize) -> usize {
        self.labels[&(e, piece)]
    }

    /// Relabels an old crossing; the split edge keeps piece 0 where it
    /// leaves a crossing and piece 2 where it arrives.
    fn crossing(&self, d: &KnotDiagram, c: usize, split: &[usize]) -> [usize; 4] {
        let x = d.pd()[c];
        let cr = d.crossings()[c];
        let mut out = [0; 4];
        for i in 0..4 {
            let arriving = i == 0 || i == cr.over_in_pos;
            let piece = if split.contains(&x[i]) && arriving { 2 } else { 0 };
            out[i] = self.get(x[i], piece);
        }
        out
    }
}

/// Adds a kink on edge `e` (1-based). `kind` picks the local picture, with
/// a, b, c the three pieces of e in order:
/// 0: X[a,b,b,c], 1: X[a,c,b,b] (under first); 2: X[b,b,c,a], 3: X[b,a,c,b] (over first).
pub fn r1_kink(d: &KnotDiagram, e: usize, kind: u8) -> Result<KnotDiagram> {
    if kind > 3 {
        bail!(InvalidParameter, "kink kind must be 0..=3, got {kind}");
    }
    if d.crossing_count() == 0 {
        // a and c coincide on the crossingless circle
        let (a, b, c) = (1, 2, 1);
        return KnotDiagram::from_pd(&[kink_tuple(kind, a, b, c)]);
    }
    if e == 0 || e > d.edge_count() {
        bail!(InvalidParameter, "edge {e} out of range 1..={}", d.edge_count());
    }
    let rl = Relabel::new(d.edge_count(), &[e]);
    let mut pd: Vec<[usize; 4]> = (0..d.crossing_count()).map(|c| rl.crossing(d, c, &[e])).collect();
    pd.push(kink_tuple(kind, rl.get(e, 0), rl.get(e, 1), rl.get(e, 2)));
    KnotDiagram::from_pd(&pd)
}

fn kink_tuple(kind: u8, a: usize, b: usize, c: usize) -> [usize; 4] {
    match kind {
        0 => [a, b, b, c],
        1 => [a, c, b, b],
        2 => [b, b, c, a],
        _ => [b, a, c, b],
    }
}

/// Pushes a finger of edge `over` across region `face` and over edge `under`,
/// creating two crossings. Both edges must border the face.
pub fn r2_finger(d: &KnotDiagram, over: usize, under: usize, face: usize) -> Result<KnotDiagram> {
    let edges = d.edge_count();
    if d.crossing_count() == 0 {
        bail!(InvalidParameter, "R2 moves need at least one crossing; apply a kink first");
    }
    if over == under || over == 0 || under == 0 || over > edges || under > edges {
        bail!(InvalidParameter, "R2 needs two distinct edges in 1..={edges}, got {over} and {under}");
    }
    let side = |e: usize| -> Result<bool> {
        let (l, r) = d.edge_sides(e);
        match (l == face, r == face) {
            (true, false) => Ok(true),
            (false, true) => Ok(false),
            _ => bail!(InvalidParameter, "edge {e} does not border region {face} on exactly one side"),
        }
    };
    let (face_left_of_under, mut face_left_of_over) = (side(under)?, side(over)?);
    if !face_left_of_under {
        face_left_of_over = !face_left_of_over;
    }
    let rl = Relabel::new(edges, &[over, under]);
    let (o, u) = (|k| rl.get(over, k), |k| rl.get(under, k));
    let (mut p, mut q) = if face_left_of_over {
        ([u(1), o(1), u(2), o(0)], [u(0), o(1), u(1), o(2)])
    } else {
        ([u(0), o(1), u(1), o(0)], [u(1), o(1), u(2), o(2)])
    };
    if !face_left_of_under {
        for t in [&mut p, &mut q] {
            t.swap(1, 3);
        }
    }
    let mut pd: Vec<[usize; 4]> = (0..d.crossing_count()).map(|c| rl.crossing(d, c, &[over, under])).collect();
    pd.push(p);
    pd.push(q);
    KnotDiagram::from_pd(&pd)
}
