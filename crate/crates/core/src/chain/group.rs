//! Bar complex of a finite group with trivial coefficients.

use super::formal::{ComplexKind, FormalChain};
use crate::algebra::FiniteGroup;
use crate::error::{bail, Result};

/// Boundary in the inhomogeneous (trivial ℤ) or homogeneous complex.
///
/// ∂[g₁|…|g_n] = [g₂|…|g_n] + Σ_{i=1}^{n−1} (−1)^i [⋯|g_i g_{i+1}|⋯] + (−1)^n [g₁|…|g_{n−1}]
pub fn group_boundary(chain: &FormalChain, g: &FiniteGroup) -> Result<FormalChain> {
    let n = chain.degree();
    match chain.kind() {
        ComplexKind::GroupInhom => {
            let mut out = FormalChain::new(ComplexKind::GroupInhom, n.saturating_sub(1));
            if n == 0 {
                return Ok(out);
            }
            for (l, c) in chain.terms() {
                out.add_term(l[1..].to_vec(), c);
                for i in 0..n - 1 {
                    let mut t = Vec::with_capacity(n - 1);
                    t.extend_from_slice(&l[..i]);
                    t.push(g.mul(l[i], l[i + 1]));
                    t.extend_from_slice(&l[i + 2..]);
                    out.add_term(t, sign(i + 1) * c);
                }
                out.add_term(l[..n - 1].to_vec(), sign(n) * c);
            }
            Ok(out)
        }
        ComplexKind::GroupHom => Ok(face_boundary(chain)),
        other => bail!(InvalidParameter, "group boundary applied to a {other:?} chain"),
    }
}

/// Σ (−1)^i (x₀,…,x̂_i,…,x_n), shared by the homogeneous and Δ complexes.
pub(crate) fn face_boundary(chain: &FormalChain) -> FormalChain {
    let n = chain.degree();
    let mut out = FormalChain::new(chain.kind(), n.saturating_sub(1));
    if n == 0 {
        return out;
    }
    for (l, c) in chain.terms() {
        for i in 0..=n {
            let mut t = l.clone();
            t.remove(i);
            out.add_term(t, sign(i) * c);
        }
    }
    out
}

#[inline]
pub(crate) fn sign(i: usize) -> i64 {
    if i % 2 == 0 {
        1
    } else {
        -1
    }
}

/// (g₀,…,g_n) ↦ [g₀⁻¹g₁|…|g_{n−1}⁻¹g_n].
pub fn hom_to_inhom(chain: &FormalChain, g: &FiniteGroup) -> Result<FormalChain> {
    if chain.kind() != ComplexKind::GroupHom {
        bail!(InvalidParameter, "expected a homogeneous group chain, got {:?}", chain.kind());
    }
    let mut out = FormalChain::new(ComplexKind::GroupInhom, chain.degree());
    for (l, c) in chain.terms() {
        out.add_term(l.windows(2).map(|w| g.mul(g.inv(w[0]), w[1])).collect(), c);
    }
    Ok(out)
}

/// [g₁|…|g_n] ↦ (1, g₁, g₁g₂, …, g₁⋯g_n).
pub fn inhom_to_hom(chain: &FormalChain, g: &FiniteGroup) -> Result<FormalChain> {
    if chain.kind() != ComplexKind::GroupInhom {
        bail!(InvalidParameter, "expected an inhomogeneous group chain, got {:?}", chain.kind());
    }
    let mut out = FormalChain::new(ComplexKind::GroupHom, chain.degree());
    for (l, c) in chain.terms() {
        let mut t = Vec::with_capacity(l.len() + 1);
        let mut acc = g.id();
        t.push(acc);
        for &x in l {
            acc = g.mul(acc, x);
            t.push(acc);
        }
        out.add_term(t, c);
    }
    Ok(out)
}

/// Drops [⋯|1|⋯] (inhomogeneous) or (⋯,g,g,⋯) (homogeneous) terms.
pub fn normalize_group(chain: &FormalChain, g: &FiniteGroup) -> FormalChain {
    match chain.kind() {
        ComplexKind::GroupInhom => chain.filter(|l| !l.contains(&g.id())),
        _ => normalize_adjacent(chain),
    }
}

/// Drops terms with two equal neighbours.
pub(crate) fn normalize_adjacent(chain: &FormalChain) -> FormalChain {
    chain.filter(|l| l.windows(2).all(|w| w[0] != w[1]))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bar_boundary_examples() {
        let d6 = FiniteGroup::dihedral(3).unwrap();
        let (a, b) = (1, 4);
        let c = FormalChain::from_terms(ComplexKind::GroupInhom, Default::default(), 2, [(1, vec![a, b])]).unwrap();
        let d = group_boundary(&c, &d6).unwrap();
        let expected = FormalChain::from_terms(
            ComplexKind::GroupInhom,
            Default::default(),
            1,
            [(1, vec![b]), (-1, vec![d6.mul(a, b)]), (1, vec![a])],
        )
        .unwrap();
        assert_eq!(d, expected);
        let one = FormalChain::from_terms(ComplexKind::GroupInhom, Default::default(), 2, [(1, vec![0, 0])]).unwrap();
        assert_eq!(group_boundary(&one, &d6).unwrap().coefficient(&[0]), 1);
        let c3 = FormalChain::from_terms(ComplexKind::GroupInhom, Default::default(), 3, [(1, vec![1, 3, 5])]).unwrap();
        assert!(group_boundary(&group_boundary(&c3, &d6).unwrap(), &d6).unwrap().is_zero());
    }

    #[test]
    fn conversions() {
        let d6 = FiniteGroup::dihedral(3).unwrap();
        let (a, b) = (4, 2);
        let hom = FormalChain::from_terms(ComplexKind::GroupHom, Default::default(), 2, [(1, vec![0, a, d6.mul(a, b)])])
            .unwrap();
        let inhom = hom_to_inhom(&hom, &d6).unwrap();
        assert_eq!(inhom.coefficient(&[a, b]), 1);
        assert_eq!(inhom_to_hom(&inhom, &d6).unwrap(), hom);
        let diag = FormalChain::from_terms(ComplexKind::GroupHom, Default::default(), 2, [(1, vec![5, 5, 5])]).unwrap();
        assert_eq!(hom_to_inhom(&diag, &d6).unwrap().coefficient(&[0, 0]), 1);
        let n = FormalChain::from_terms(ComplexKind::GroupInhom, Default::default(), 2, [(1, vec![0, 3]), (2, vec![3, 4])])
            .unwrap();
        assert_eq!(normalize_group(&n, &d6).len(), 1);
    }
}
