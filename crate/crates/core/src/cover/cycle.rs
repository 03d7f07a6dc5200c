//! The group 3-cycle of a cyclic branched cover built from shadow colorings.

use crate::algebra::{AbelianElem, FiniteGroup};
use crate::chain::{group_boundary, hom_to_inhom, normalize_group, CochainDomain, CochainTable, ComplexKind, FormalChain};
use crate::cocycle::phi;
use crate::error::{bail, Result};
use crate::knot::{act_on_shadow, shadow_cycle, KnotDiagram, ShadowColoring};
use crate::quandle::ConjQuandleContext;

/// Σ_{k<l} ι φ(C(S * a^k)) with ι(x₀,…,x₃) = (s(x₀),…,s(x₃)), l the order of h.
///
/// `a` must be the color of some arc of S; `base` is the basepoint of φ.
pub fn branched_cover_cycle(
    d: &KnotDiagram,
    s: &ShadowColoring,
    a: usize,
    ctx: &ConjQuandleContext,
    base: usize,
) -> Result<FormalChain> {
    if !ctx.section.corrected {
        bail!(AssumptionViolated, "the section of Conj(h) has a nontrivial cocycle c");
    }
    if !s.arcs.contains(&a) && d.crossing_count() > 0 {
        bail!(InvalidParameter, "element {a} is not the color of an arc");
    }
    let q = ctx.quandle();
    let mut delta = FormalChain::new(ComplexKind::Delta, 3);
    let mut cur = s.clone();
    for _ in 0..ctx.l {
        delta.add_assign_scaled(&phi(&shadow_cycle(d, &cur), &q, base)?, 1);
        cur = act_on_shadow(&q, &cur, a);
    }
    let mut out = FormalChain::new(ComplexKind::GroupHom, 3);
    for (lab, c) in delta.terms() {
        out.add_term(lab.iter().map(|&x| ctx.s(x)).collect(), c);
    }
    Ok(out)
}

/// True iff the homogeneous chain is a cycle in the normalized complex
/// (checked on its inhomogeneous image).
pub fn is_group_cycle(chain: &FormalChain, g: &FiniteGroup) -> Result<bool> {
    let inhom = normalize_group(&hom_to_inhom(chain, g)?, g);
    Ok(normalize_group(&group_boundary(&inhom, g)?, g).is_zero())
}

/// ⟨f, chain⟩ for a homogeneous or inhomogeneous cochain f on a homogeneous chain.
pub fn evaluate_group_cocycle(f: &CochainTable, chain: &FormalChain, g: &FiniteGroup) -> Result<AbelianElem> {
    if chain.kind() != ComplexKind::GroupHom {
        bail!(InvalidParameter, "expected a homogeneous group chain");
    }
    match f.domain() {
        CochainDomain::GroupHom => f.evaluate_chain(chain),
        CochainDomain::GroupInhom => f.evaluate_chain(&hom_to_inhom(chain, g)?),
        other => bail!(InvalidParameter, "cannot pair a {other:?} cochain with a group chain"),
    }
}
