//! Transfer from ℤ/p to D_2p and the section construction on Conj(h).

use crate::algebra::FiniteGroup;
use crate::chain::{CochainDomain, CochainTable};
use crate::error::{bail, Result};
use crate::quandle::ConjQuandleContext;

/// f′(g₀,…,g_n) = f(r g₀,…) + f(−r g₀,…) with r(x^i) = i, r(hx^i) = −i.
///
/// `f` is a homogeneous cochain of ℤ/p; the result lives on
/// [`FiniteGroup::dihedral`]`(p)`.
pub fn transfer_d2p(f: &CochainTable, p: usize) -> Result<CochainTable> {
    if p % 2 == 0 {
        bail!(InvalidParameter, "transfer to D_2p needs odd p, got {p}");
    }
    if f.domain() != CochainDomain::GroupHom || f.base() != p {
        bail!(InvalidParameter, "expected a homogeneous cochain of Z/{p}");
    }
    let r = |g: usize| if g < p { g } else { (p - (g - p)) % p };
    CochainTable::from_fn(CochainDomain::GroupHom, f.degree(), 2 * p, f.values().clone(), &format!("tr({})", f.kind()), |t| {
        let a: Vec<usize> = t.iter().map(|&g| r(g)).collect();
        let b: Vec<usize> = a.iter().map(|&x| (p - x) % p).collect();
        f.values().add(f.get(&a), f.get(&b)).into_iter().map(|x| x as i64).collect()
    })
}

/// g(x₀,…,x_k) = f(x₀⁻¹,…,x_k⁻¹).
pub fn right_invariantize(f: &CochainTable, g: &FiniteGroup) -> Result<CochainTable> {
    if f.domain() != CochainDomain::GroupHom || f.base() != g.order() {
        bail!(InvalidParameter, "expected a homogeneous cochain of {}", g.name());
    }
    CochainTable::from_fn(CochainDomain::GroupHom, f.degree(), f.base(), f.values().clone(), &format!("inv({})", f.kind()), |t| {
        let a: Vec<usize> = t.iter().map(|&x| g.inv(x)).collect();
        f.get(&a).iter().map(|&x| x as i64).collect()
    })
}

/// f(x₀h,…,x_kh) = f(x₀,…,x_k) for all h.
pub fn is_right_invariant(f: &CochainTable, g: &FiniteGroup) -> bool {
    translation_invariant(f, g, |x, h| g.mul(x, h))
}

/// f(hx₀,…,hx_k) = f(x₀,…,x_k) for all h.
pub fn is_left_invariant(f: &CochainTable, g: &FiniteGroup) -> bool {
    translation_invariant(f, g, |x, h| g.mul(h, x))
}

fn translation_invariant(f: &CochainTable, g: &FiniteGroup, act: impl Fn(usize, usize) -> usize + Sync) -> bool {
    let arity = f.arity();
    crate::par::all(f.len(), |i| {
        let t = crate::chain::tuple_at(i, f.base(), arity);
        g.elements().all(|h| {
            let moved: Vec<usize> = t.iter().map(|&x| act(x, h)).collect();
            f.get(&moved) == f.get(&t)
        })
    })
}

/// f̃(x₀,…,x_k) = Σ_{i<l} f(hⁱ s(x₀),…,hⁱ s(x_k)) as a Δ cochain on Conj(h).
///
/// f should be right-invariant; the section must be corrected.
pub fn tilde_section_cocycle(ctx: &ConjQuandleContext, f: &CochainTable) -> Result<CochainTable> {
    if !ctx.section.corrected {
        bail!(AssumptionViolated, "the section of Conj(h) has a nontrivial cocycle c");
    }
    let g = &ctx.group;
    if f.domain() != CochainDomain::GroupHom || f.base() != g.order() {
        bail!(InvalidParameter, "expected a homogeneous cochain of {}", g.name());
    }
    let powers: Vec<usize> = (0..ctx.l).map(|i| g.pow(ctx.h, i as i64)).collect();
    let v = f.values();
    CochainTable::from_fn(CochainDomain::Delta, f.degree(), ctx.order(), v.clone(), &format!("sec({})", f.kind()), |t| {
        let mut acc = v.zero();
        for &hi in &powers {
            let args: Vec<usize> = t.iter().map(|&x| g.mul(hi, ctx.s(x))).collect();
            acc = v.add(&acc, f.get(&args));
        }
        acc.into_iter().map(|x| x as i64).collect()
    })
}
