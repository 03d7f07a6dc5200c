//! Wirtinger presentations and presentations of cyclic covers.

use num_traits::{One, Zero};
use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::{invariant_factors, FiniteGroup, IntMatrix};
use crate::error::{bail, Result};
use crate::knot::{ArcColoring, KnotDiagram};

/// A word as (generator, ±1) letters.
pub type Word = Vec<(usize, i8)>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupPresentation {
    pub generators: Vec<String>,
    pub relators: Vec<Word>,
}

/// ℤ^rank ⊕ ⊕ ℤ/tᵢ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Abelianization {
    pub rank: usize,
    pub torsion: Vec<u64>,
}

impl std::fmt::Display for Abelianization {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts: Vec<String> = (0..self.rank).map(|_| "Z".to_string()).collect();
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

impl GroupPresentation {
    pub fn word_to_string(&self, w: &Word) -> String {
        if w.is_empty() {
            return "1".into();
        }
        w.iter()
            .map(|&(g, e)| if e > 0 { self.generators[g].clone() } else { format!("{}^-1", self.generators[g]) })
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Exponent-sum matrix reduced by Smith normal form.
    pub fn abelianization(&self) -> Result<Abelianization> {
        let n = self.generators.len();
        let mut m = IntMatrix::zeros(self.relators.len(), n);
        for (r, w) in self.relators.iter().enumerate() {
            for &(g, e) in w {
                m.add_to(r, g, i64::from(e));
            }
        }
        let factors = invariant_factors(&m);
        let mut torsion = Vec::new();
        for f in &factors {
            if !f.is_one() && !f.is_zero() {
                let Ok(t) = u64::try_from(f.magnitude().clone()) else { bail!(ResourceLimit, "torsion coefficient {f} too large") };
                torsion.push(t);
            }
        }
        Ok(Abelianization { rank: n - factors.len(), torsion })
    }

    /// True iff every relator evaluates to the identity under `values`.
    pub fn holds_in(&self, g: &FiniteGroup, values: &[usize]) -> bool {
        self.relators.iter().all(|w| {
            w.iter().fold(g.id(), |acc, &(x, e)| g.mul(acc, if e > 0 { values[x] } else { g.inv(values[x]) })) == g.id()
        })
    }

    pub fn to_json(&self) -> Value {
        json!({
            "generators": self.generators,
            "relators": self.relators.iter().map(|w| self.word_to_string(w)).collect::<Vec<_>>(),
        })
    }
}

/// (i, j, k) with x_k = x_j⁻¹ x_i x_j at crossing c.
fn relation_arcs(d: &KnotDiagram, c: usize) -> (usize, usize, usize) {
    let (under_in, over, under_out) = d.crossing_arcs(c);
    if d.crossings()[c].epsilon() > 0 {
        (under_in, over, under_out)
    } else {
        (under_out, over, under_in)
    }
}

/// One generator per arc and one relator x_k⁻¹ x_j⁻¹ x_i x_j per crossing.
pub fn wirtinger(d: &KnotDiagram) -> GroupPresentation {
    let generators = (1..=d.arc_count()).map(|i| format!("x{i}")).collect();
    let relators = (0..d.crossing_count())
        .map(|c| {
            let (i, j, k) = relation_arcs(d, c);
            vec![(k, -1), (j, -1), (i, 1), (j, 1)]
        })
        .collect();
    GroupPresentation { generators, relators }
}

/// Generators x_{i,s} (arc i, sheet s = 0..l−1; index i·l + s) with
/// x_{k,s} = x_{j,s−1}⁻¹ x_{i,s−1} x_{j,s} and x_{1,s} = 1 for s ≤ l − 2; the
/// branched cover also kills x_{1,l−1}.
pub fn cyclic_cover_presentation(d: &KnotDiagram, l: usize, branched: bool) -> Result<GroupPresentation> {
    if l < 2 {
        bail!(InvalidParameter, "cover fold must be at least 2, got {l}");
    }
    let gen = |i: usize, s: usize| i * l + s;
    let generators =
        (1..=d.arc_count()).flat_map(|i| (0..l).map(move |s| format!("x{i}_{s}"))).collect::<Vec<_>>();
    let mut relators = Vec::new();
    for c in 0..d.crossing_count() {
        let (i, j, k) = relation_arcs(d, c);
        for s in 0..l {
            let prev = (s + l - 1) % l;
            relators.push(vec![(gen(k, s), -1), (gen(j, prev), -1), (gen(i, prev), 1), (gen(j, s), 1)]);
        }
    }
    let killed = if branched { l } else { l - 1 };
    for s in 0..killed {
        relators.push(vec![(gen(0, s), 1)]);
    }
    Ok(GroupPresentation { generators, relators })
}

/// ρ(x_{i,s}) = ρ(x₁)^{s−1} ρ(x_i) ρ(x₁)^{−s}, as a grid [arc][sheet].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverRepresentation {
    pub l: usize,
    pub values: Vec<Vec<usize>>,
}

impl CoverRepresentation {
    pub fn flat(&self) -> Vec<usize> {
        self.values.iter().flatten().copied().collect()
    }
}

/// Restricts the representation of an arc coloring (by group elements via
/// `embedding`) to the l-fold cover, checking every lifted relation.
pub fn restrict_representation(
    d: &KnotDiagram,
    g: &FiniteGroup,
    embedding: &[usize],
    arcs: &ArcColoring,
    l: usize,
) -> Result<CoverRepresentation> {
    let rho: Vec<usize> = arcs.iter().map(|&a| embedding[a]).collect();
    if !wirtinger(d).holds_in(g, &rho) {
        bail!(InvalidParameter, "arc coloring does not give a representation of the knot group");
    }
    let r1 = rho[0];
    if g.pow(r1, l as i64) != g.id() {
        bail!(AssumptionViolated, "rho(x1)^{l} is not the identity");
    }
    let values: Vec<Vec<usize>> = rho
        .iter()
        .map(|&ri| (0..l).map(|s| g.mul(g.mul(g.pow(r1, s as i64 - 1), ri), g.pow(r1, -(s as i64)))).collect())
        .collect();
    let rep = CoverRepresentation { l, values };
    if !cyclic_cover_presentation(d, l, true)?.holds_in(g, &rep.flat()) {
        bail!(Internal, "lifted Wirtinger relations fail for the restricted representation");
    }
    Ok(rep)
}
