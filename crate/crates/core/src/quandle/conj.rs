//! Conjugation quandles Conj(h) ⊂ G and the section machinery.
//!
//! Quandle elements are the conjugates of h sorted by group index. A section
//! picks for each element x a group element s(x) with s(x)⁻¹ h s(x) = x; the
//! lifted operation g₁ ⊛ g₂ = h⁻¹ g₁ g₂⁻¹ h g₂ descends to x*y, and
//! c(x, y) = (s(x) ⊛ s(y)) s(x*y)⁻¹ lies in Z(h).

use crate::algebra::{solve_linear_over_abelian, AbelianSubgroup, FiniteGroup, IntMatrix};
use crate::error::{bail, Result};

use super::quandle::{FiniteQuandle, QuandleTag};

/// g₁ ⊛ g₂ = h⁻¹ g₁ g₂⁻¹ h g₂.
pub fn lifted_operation(g: &FiniteGroup, h: usize, g1: usize, g2: usize) -> usize {
    let t = g.mul(g.mul(g.inv(h), g1), g.inv(g2));
    g.mul(g.mul(t, h), g2)
}

/// Inverse of `· ⊛ g₂`: h g₁ g₂⁻¹ h⁻¹ g₂.
pub fn lifted_inverse(g: &FiniteGroup, h: usize, g1: usize, g2: usize) -> usize {
    let t = g.mul(g.mul(h, g1), g.inv(g2));
    g.mul(g.mul(t, g.inv(h)), g2)
}

/// A section of G → Conj(h) and its Z(h)-valued defect.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Section {
    /// s(x) for each quandle element.
    pub section: Vec<usize>,
    /// c(x, y) as group elements, row-major m×m.
    pub cocycle: Vec<usize>,
    /// True iff c is identically the identity.
    pub corrected: bool,
}

/// Conj(h) with its group data.
#[derive(Clone, Debug)]
pub struct ConjQuandleContext {
    pub group: FiniteGroup,
    pub h: usize,
    /// Order of h.
    pub l: usize,
    /// Group element of each quandle element.
    pub elements: Vec<usize>,
    index: Vec<Option<usize>>,
    pub centralizer: Vec<usize>,
    pub centralizer_coords: Option<AbelianSubgroup>,
    pub section: Section,
}

impl ConjQuandleContext {
    pub fn quandle_index(&self, g: usize) -> Option<usize> {
        self.index.get(g).copied().flatten()
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn s(&self, x: usize) -> usize {
        self.section.section[x]
    }

    pub fn c(&self, x: usize, y: usize) -> usize {
        self.section.cocycle[x * self.order() + y]
    }

    /// Replaces the section, recomputing its cocycle.
    pub fn with_section(&self, section: Vec<usize>) -> Result<Self> {
        let q = self.quandle();
        let sec = evaluate_section(&self.group, self.h, &q, &self.elements, &self.index, section)?;
        Ok(ConjQuandleContext { section: sec, ..self.clone() })
    }

    /// The quandle table, rebuilt from the group.
    pub fn quandle(&self) -> FiniteQuandle {
        build_table(&self.group, self.h, &self.elements, &self.index)
    }
}

fn build_table(g: &FiniteGroup, h: usize, elements: &[usize], index: &[Option<usize>]) -> FiniteQuandle {
    let tag = QuandleTag::Conj { group: g.name().to_string(), h: g.label(h).to_string() };
    FiniteQuandle::conj_from_fn(elements.len(), |x, y| index[g.conj(elements[x], elements[y])].unwrap(), tag)
}

/// Conj(h) with the conjugation operation x*y = y⁻¹ x y.
///
/// The context carries the lowest-index section, corrected by
/// [`compute_section`] when Z(h) is abelian and the correction exists.
pub fn conj_quandle(g: &FiniteGroup, h: usize) -> Result<(FiniteQuandle, ConjQuandleContext)> {
    if h >= g.order() {
        bail!(InvalidParameter, "element {h} is not in a group of order {}", g.order());
    }
    let elements = g.conjugacy_class(h);
    let mut index = vec![None; g.order()];
    for (i, &e) in elements.iter().enumerate() {
        index[e] = Some(i);
    }
    let q = build_table(g, h, &elements, &index);
    let cent = g.centralizer(h);
    let section = if cent.abelian {
        compute_section(g, h)?
    } else {
        evaluate_section(g, h, &q, &elements, &index, initial_section(g, h, &elements))?
    };
    let ctx = ConjQuandleContext {
        group: g.clone(),
        h,
        l: g.element_order(h),
        elements,
        index,
        centralizer: cent.elements,
        centralizer_coords: cent.presentation,
        section,
    };
    Ok((q, ctx))
}

/// Lowest group index in each coset Z(h)g.
fn initial_section(g: &FiniteGroup, h: usize, elements: &[usize]) -> Vec<usize> {
    elements
        .iter()
        .map(|&x| g.elements().find(|&a| g.conj(h, a) == x).expect("x is a conjugate of h"))
        .collect()
}

fn evaluate_section(
    g: &FiniteGroup,
    h: usize,
    q: &FiniteQuandle,
    elements: &[usize],
    index: &[Option<usize>],
    section: Vec<usize>,
) -> Result<Section> {
    let m = elements.len();
    if section.len() != m {
        bail!(InvalidParameter, "section has {} entries for {m} quandle elements", section.len());
    }
    for (x, &s) in section.iter().enumerate() {
        if s >= g.order() || index[g.conj(h, s)] != Some(x) {
            bail!(InvalidInput, "s({x}) = {s} does not project to quandle element {x}");
        }
    }
    let mut cocycle = Vec::with_capacity(m * m);
    for x in 0..m {
        for y in 0..m {
            let lifted = lifted_operation(g, h, section[x], section[y]);
            cocycle.push(g.mul(lifted, g.inv(section[q.op(x, y)])));
        }
    }
    let corrected = cocycle.iter().all(|&c| c == g.id());
    Ok(Section { section, cocycle, corrected })
}

/// c(x,z)·c(x*y,z)⁻¹·c(x,y)⁻¹·c(x*z,y*z) = 1 and c(x,x) = 1 for all x, y, z.
pub fn cocycle_identity_holds(ctx: &ConjQuandleContext) -> bool {
    let g = &ctx.group;
    let q = ctx.quandle();
    let m = ctx.order();
    (0..m).all(|x| g.id() == ctx.c(x, x))
        && crate::par::all(m, |x| {
            (0..m).all(|y| {
                (0..m).all(|z| {
                    let a = g.mul(ctx.c(x, z), g.inv(ctx.c(q.op(x, y), z)));
                    let b = g.mul(g.inv(ctx.c(x, y)), ctx.c(q.op(x, z), q.op(y, z)));
                    g.mul(a, b) == g.id()
                })
            })
        })
}

/// Picks the lowest-index section, computes c, and tries to make c trivial
/// by solving c(x,y) = b(x) b(x*y)⁻¹ for b : X → Z(h).
pub fn compute_section(g: &FiniteGroup, h: usize) -> Result<Section> {
    let cent = g.centralizer(h);
    let Some(z) = cent.presentation else {
        bail!(
            AssumptionViolated,
            "the centralizer of {} has order {} and is not abelian",
            g.label(h),
            cent.elements.len()
        );
    };
    let elements = g.conjugacy_class(h);
    let mut index = vec![None; g.order()];
    for (i, &e) in elements.iter().enumerate() {
        index[e] = Some(i);
    }
    let q = build_table(g, h, &elements, &index);
    let initial = evaluate_section(g, h, &q, &elements, &index, initial_section(g, h, &elements))?;
    correct(g, h, &q, &elements, &index, &z, initial)
}

/// Tries to trivialise the cocycle of the context's current section.
pub fn correct_section(ctx: &ConjQuandleContext) -> Result<Section> {
    let Some(z) = &ctx.centralizer_coords else {
        bail!(AssumptionViolated, "the centralizer of {} is not abelian", ctx.group.label(ctx.h));
    };
    let q = ctx.quandle();
    correct(&ctx.group, ctx.h, &q, &ctx.elements, &ctx.index, z, ctx.section.clone())
}

fn correct(
    g: &FiniteGroup,
    h: usize,
    q: &FiniteQuandle,
    elements: &[usize],
    index: &[Option<usize>],
    z: &AbelianSubgroup,
    initial: Section,
) -> Result<Section> {
    if initial.corrected {
        return Ok(initial);
    }
    let m = elements.len();
    // one row per pair (x, y): b(x) − b(x*y) = c(x, y)
    let mut a = IntMatrix::zeros(m * m, m);
    let mut rhs = Vec::with_capacity(m * m);
    for x in 0..m {
        for y in 0..m {
            let r = x * m + y;
            a.add_to(r, x, 1);
            a.add_to(r, q.op(x, y), -1);
            let c = initial.cocycle[r];
            match z.coords(c) {
                Some(v) => rhs.push(v.clone()),
                None => bail!(Internal, "c({x},{y}) = {} is not in Z(h)", g.label(c)),
            }
        }
    }
    match solve_linear_over_abelian(&a, &rhs, &z.presentation)? {
        Some(b) => {
            let corrected: Vec<usize> = (0..m)
                .map(|x| g.mul(g.inv(z.element(&b[x])), initial.section[x]))
                .collect();
            let sec = evaluate_section(g, h, q, elements, index, corrected)?;
            if !sec.corrected {
                bail!(Internal, "corrected section still has a nontrivial cocycle");
            }
            Ok(sec)
        }
        None => Ok(initial),
    }
}
