//! Knot diagrams from PD codes: crossings, arcs and regions.

use std::fmt;

use serde_json::Value;

use crate::error::{bail, Error, Result};

/// One crossing of a PD code, with edge labels (1-based) for each strand end.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Crossing {
    pub under_in: usize,
    pub under_out: usize,
    pub over_in: usize,
    pub over_out: usize,
    /// PD position (1 or 3) of the incoming over edge.
    pub over_in_pos: usize,
}

impl Crossing {
    /// Standard writhe sign: +1 when the over strand runs from position 3 to 1.
    pub fn writhe(&self) -> i8 {
        if self.over_in_pos == 3 {
            1
        } else {
            -1
        }
    }

    /// The sign ε_c used by colorings and shadow cycles: the negated writhe.
    ///
    /// ε = +1 means under-out = under-in * over.
    pub fn epsilon(&self) -> i8 {
        -self.writhe()
    }
}

/// A single-component knot diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnotDiagram {
    pd: Vec<[usize; 4]>,
    crossings: Vec<Crossing>,
    /// arc of each edge, indexed by label − 1
    edge_arc: Vec<usize>,
    arc_count: usize,
    /// region at corner k (between positions k and k+1) of each crossing
    corners: Vec<[usize; 4]>,
    /// (left, right) regions of each edge, indexed by label − 1
    edge_sides: Vec<(usize, usize)>,
    region_count: usize,
}

fn succ(e: usize, edges: usize) -> usize {
    e % edges + 1
}

impl KnotDiagram {
    /// The crossingless diagram: one arc, two regions (0 on the left).
    pub fn unknot() -> Self {
        KnotDiagram {
            pd: vec![],
            crossings: vec![],
            edge_arc: vec![0],
            arc_count: 1,
            corners: vec![],
            edge_sides: vec![(0, 1)],
            region_count: 2,
        }
    }

    /// Builds a diagram from PD tuples, checking orientation, planarity and
    /// that the code describes a knot.
    pub fn from_pd(pd: &[[usize; 4]]) -> Result<Self> {
        let n = pd.len();
        if n == 0 {
            return Ok(Self::unknot());
        }
        let edges = 2 * n;
        let mut occ: Vec<Vec<(usize, usize)>> = vec![Vec::new(); edges];
        for (c, x) in pd.iter().enumerate() {
            for (i, &e) in x.iter().enumerate() {
                if e == 0 || e > edges {
                    bail!(Parse, "crossing {} (X{x:?}): label {e} outside 1..{edges}", c + 1);
                }
                occ[e - 1].push((c, i));
            }
        }
        if let Some(e) = occ.iter().position(|o| o.len() != 2) {
            bail!(Parse, "edge {} appears {} times; each label must appear exactly twice", e + 1, occ[e].len());
        }
        let mut crossings = Vec::with_capacity(n);
        for (c, x) in pd.iter().enumerate() {
            let bad = || Error::Parse(format!("crossing {} (X{x:?}) is inconsistent with a knot orientation", c + 1));
            if x[2] != succ(x[0], edges) {
                return Err(bad());
            }
            let over_in_pos = if edges == 2 {
                // a one-crossing diagram: the under-out edge must return as the over-in edge
                if x[1] == x[2] {
                    1
                } else if x[3] == x[2] {
                    3
                } else {
                    return Err(bad());
                }
            } else if x[3] == succ(x[1], edges) {
                1
            } else if x[1] == succ(x[3], edges) {
                3
            } else {
                return Err(bad());
            };
            let (over_in, over_out) = if over_in_pos == 1 { (x[1], x[3]) } else { (x[3], x[1]) };
            crossings.push(Crossing { under_in: x[0], under_out: x[2], over_in, over_out, over_in_pos });
        }
        // each edge leaves one crossing and enters another
        let incoming = |c: usize, i: usize| i == 0 || i == crossings[c].over_in_pos;
        for (e, o) in occ.iter().enumerate() {
            let ins = o.iter().filter(|&&(c, i)| incoming(c, i)).count();
            if ins != 1 {
                bail!(Parse, "edge {} is not oriented consistently at crossing {}", e + 1, o[0].0 + 1);
            }
        }

        // arcs: edges joined through over-passes
        let mut parent: Vec<usize> = (0..edges).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for cr in &crossings {
            let (a, b) = (find(&mut parent, cr.over_in - 1), find(&mut parent, cr.over_out - 1));
            parent[a.max(b)] = a.min(b);
        }
        let mut arc_of_root = vec![usize::MAX; edges];
        let mut edge_arc = vec![0; edges];
        let mut arc_count = 0;
        for (e, slot) in edge_arc.iter_mut().enumerate() {
            let r = find(&mut parent, e);
            if arc_of_root[r] == usize::MAX {
                arc_of_root[r] = arc_count;
                arc_count += 1;
            }
            *slot = arc_of_root[r];
        }

        // faces: corner k continues along the edge at position k+1 to its
        // other end (c2, j), where the face occupies corner j
        let mut corners = vec![[usize::MAX; 4]; n];
        let mut region_count = 0;
        for c in 0..n {
            for k in 0..4 {
                if corners[c][k] != usize::MAX {
                    continue;
                }
                let (mut cc, mut kk) = (c, k);
                while corners[cc][kk] == usize::MAX {
                    corners[cc][kk] = region_count;
                    let pos = (kk + 1) % 4;
                    let e = pd[cc][pos];
                    let &(c2, j) = occ[e - 1].iter().find(|&&t| t != (cc, pos)).unwrap();
                    cc = c2;
                    kk = j;
                }
                region_count += 1;
            }
        }
        if region_count != n + 2 {
            bail!(Parse, "PD code is not planar: {n} crossings give {region_count} faces instead of {}", n + 2);
        }
        let mut edge_sides = vec![(0, 0); edges];
        for (e, o) in occ.iter().enumerate() {
            let &(c, j) = o.iter().find(|&&(c, i)| incoming(c, i)).unwrap();
            edge_sides[e] = (corners[c][(j + 3) % 4], corners[c][j]);
        }
        Ok(KnotDiagram { pd: pd.to_vec(), crossings, edge_arc, arc_count, corners, edge_sides, region_count })
    }

    pub fn pd(&self) -> &[[usize; 4]] {
        &self.pd
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    /// Number of edges (2n, or 1 for the unknot).
    pub fn edge_count(&self) -> usize {
        self.edge_arc.len()
    }

    pub fn arc_count(&self) -> usize {
        self.arc_count
    }

    pub fn region_count(&self) -> usize {
        self.region_count
    }

    /// Arc containing the edge with 1-based label `e`.
    pub fn arc_of_edge(&self, e: usize) -> usize {
        self.edge_arc[e - 1]
    }

    /// (left, right) regions of the edge with 1-based label `e`.
    pub fn edge_sides(&self, e: usize) -> (usize, usize) {
        self.edge_sides[e - 1]
    }

    /// Region at corner k (between PD positions k and k+1) of crossing c.
    pub fn corner_region(&self, c: usize, k: usize) -> usize {
        self.corners[c][k]
    }

    /// (under-in arc, over arc, under-out arc) of crossing c.
    pub fn crossing_arcs(&self, c: usize) -> (usize, usize, usize) {
        let cr = &self.crossings[c];
        (self.arc_of_edge(cr.under_in), self.arc_of_edge(cr.over_in), self.arc_of_edge(cr.under_out))
    }

    /// The region left of both strands at crossing c.
    pub fn source_region(&self, c: usize) -> usize {
        let k = if self.crossings[c].epsilon() > 0 { 3 } else { 2 };
        self.corners[c][k]
    }

    /// V − E + F.
    pub fn euler_characteristic(&self) -> i64 {
        if self.crossings.is_empty() {
            return 2;
        }
        let v = self.crossings.len() as i64;
        v - 2 * v + self.region_count as i64
    }

    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|c| i64::from(c.writhe())).sum()
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(&self.pd).expect("PD tuples serialize")
    }
}

impl fmt::Display for KnotDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pd.is_empty() {
            return write!(f, "unknot");
        }
        let parts: Vec<String> = self.pd.iter().map(|x| format!("X[{},{},{},{}]", x[0], x[1], x[2], x[3])).collect();
        write!(f, "{}", parts.join(" "))
    }
}
