//! The chain map ψ from the rack complex of Conj(h) to the bar complex of G.

use crate::chain::{hom_to_inhom_cochain, Coefficients, CochainDomain, CochainTable, ComplexKind, FormalChain};
use crate::error::{bail, Result};
use crate::limits::MAX_PSI_DEGREE;
use crate::quandle::FiniteQuandle;

/// All permutations of 0..n with their signs, in lexicographic order.
pub fn signed_permutations(n: usize) -> Vec<(i64, Vec<usize>)> {
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        let inversions = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| perm[i] > perm[j]).count();
        out.push((if inversions % 2 == 0 { 1 } else { -1 }, perm.clone()));
        let Some(i) = (1..n).rev().find(|&i| perm[i - 1] < perm[i]) else { break };
        let j = (i..n).rev().find(|&j| perm[j] > perm[i - 1]).unwrap();
        perm.swap(i - 1, j);
        perm[i..].reverse();
    }
    out
}

/// y_{σ,i} = x_{σ(i)} * x_{σ(j)} * ⋯ over j < i with σ(j) > σ(i), taken in
/// increasing σ(j).
fn psi_row(q: &FiniteQuandle, xs: &[usize], sigma: &[usize]) -> Vec<usize> {
    (0..xs.len())
        .map(|i| {
            let mut later: Vec<usize> = sigma[..i].iter().copied().filter(|&s| s > sigma[i]).collect();
            later.sort_unstable();
            later.iter().fold(xs[sigma[i]], |acc, &s| q.op(acc, xs[s]))
        })
        .collect()
}

fn check_degree(n: usize) -> Result<()> {
    if n > MAX_PSI_DEGREE {
        bail!(ResourceLimit, "psi in degree {n} needs {n}! terms per tuple; the cap is degree {MAX_PSI_DEGREE}");
    }
    Ok(())
}

/// ψ(x₁,…,x_n) = Σ_σ sgn σ [y_{σ,1}|…|y_{σ,n}], mapped into G by `embedding`.
pub fn psi(chain: &FormalChain, q: &FiniteQuandle, embedding: &[usize]) -> Result<FormalChain> {
    if !matches!(chain.kind(), ComplexKind::Rack | ComplexKind::Quandle) || chain.coefficients() != Coefficients::Trivial {
        bail!(InvalidParameter, "psi needs a rack chain with trivial coefficients");
    }
    if embedding.len() != q.order() {
        bail!(InvalidParameter, "embedding has {} entries for a quandle of order {}", embedding.len(), q.order());
    }
    let n = chain.degree();
    check_degree(n)?;
    let perms = signed_permutations(n);
    let mut out = FormalChain::new(ComplexKind::GroupInhom, n);
    for (l, c) in chain.terms() {
        for (s, sigma) in &perms {
            let label = psi_row(q, l, sigma).into_iter().map(|y| embedding[y]).collect();
            out.add_term(label, s * c);
        }
    }
    Ok(out)
}

/// (ψ*f)(x₁,…,x_k) = ⟨f, ψ(x₁,…,x_k)⟩ for a group cochain f (either form).
pub fn psi_pullback(
    f: &CochainTable,
    group: &crate::algebra::FiniteGroup,
    q: &FiniteQuandle,
    embedding: &[usize],
) -> Result<CochainTable> {
    let f = match f.domain() {
        CochainDomain::GroupInhom => f.clone(),
        CochainDomain::GroupHom => hom_to_inhom_cochain(f, group)?,
        _ => bail!(InvalidParameter, "psi pullback needs a group cochain"),
    };
    if f.base() != group.order() || embedding.len() != q.order() {
        bail!(InvalidParameter, "cochain, group and embedding sizes disagree");
    }
    let k = f.degree();
    check_degree(k)?;
    let perms = signed_permutations(k);
    let v = f.values();
    CochainTable::from_fn(CochainDomain::Quandle, k, q.order(), v.clone(), &format!("psi*({})", f.kind()), |t| {
        let mut acc = v.zero();
        for (s, sigma) in &perms {
            let args: Vec<usize> = psi_row(q, t, sigma).into_iter().map(|y| embedding[y]).collect();
            acc = if *s > 0 { v.add(&acc, f.get(&args)) } else { v.sub(&acc, f.get(&args)) };
        }
        acc.into_iter().map(|x| x as i64).collect()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutations() {
        let p = signed_permutations(3);
        assert_eq!(p.len(), 6);
        assert_eq!(p[1], (-1, vec![0, 2, 1]));
        assert_eq!(p.iter().map(|x| x.0).sum::<i64>(), 0);
        assert_eq!(signed_permutations(0).len(), 1);
    }

    #[test]
    fn degree_two() {
        let q = FiniteQuandle::dihedral(5).unwrap();
        let emb: Vec<usize> = (0..5).collect();
        let mut c = FormalChain::new(ComplexKind::Rack, 2);
        c.add_term(vec![1, 3], 1);
        let got = psi(&c, &q, &emb).unwrap();
        let mut want = FormalChain::new(ComplexKind::GroupInhom, 2);
        want.add_term(vec![1, 3], 1);
        want.add_term(vec![3, q.op(1, 3)], -1);
        assert_eq!(got, want);
    }
}
