//! The chain map φ from the rack complex with Y = X coefficients to C^Δ.

use super::average::is_invariant;
use crate::chain::{Coefficients, CochainDomain, CochainTable, ComplexKind, FormalChain};
use crate::error::{bail, Result};
use crate::quandle::FiniteQuandle;

/// The 2ⁿ signed terms of φ(r ⊗ (x₁,…,x_n)) with basepoint q.
///
/// For ι ⊂ {1..n}: r(ι) = r * x_{i₁} * x_{i₂} ⋯ over the chosen indices in
/// order, x(ι, i) = x_i acted on by the chosen x_j with j > i. The sign is
/// (−1)^{n+|ι|}; see the crate README for why the (−1)^n factor is there.
pub fn phi_terms(q: &FiniteQuandle, base: usize, r: usize, xs: &[usize]) -> Vec<(i64, Vec<usize>)> {
    let n = xs.len();
    let mut out = Vec::with_capacity(1 << n);
    for mask in 0u32..(1 << n) {
        let mut label = Vec::with_capacity(n + 2);
        label.push(base);
        let mut ri = r;
        for (i, &x) in xs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                ri = q.op(ri, x);
            }
        }
        label.push(ri);
        for i in 0..n {
            let mut xi = xs[i];
            for (j, &xj) in xs.iter().enumerate().skip(i + 1) {
                if mask >> j & 1 == 1 {
                    xi = q.op(xi, xj);
                }
            }
            label.push(xi);
        }
        let parity = n + mask.count_ones() as usize;
        out.push((if parity % 2 == 0 { 1 } else { -1 }, label));
    }
    out
}

/// φ applied to a rack or quandle chain with Y = X coefficients.
pub fn phi(chain: &FormalChain, q: &FiniteQuandle, base: usize) -> Result<FormalChain> {
    if !matches!(chain.kind(), ComplexKind::Rack | ComplexKind::Quandle) || chain.coefficients() != Coefficients::Set {
        bail!(InvalidParameter, "phi needs a rack chain with Y = X coefficients");
    }
    if base >= q.order() {
        bail!(InvalidParameter, "basepoint {base} is not in a quandle of order {}", q.order());
    }
    let mut out = FormalChain::new(ComplexKind::Delta, chain.degree() + 1);
    for (l, c) in chain.terms() {
        for (s, label) in phi_terms(q, base, l[0], &l[1..]) {
            out.add_term(label, s * c);
        }
    }
    Ok(out)
}

/// (φ*f)(r, x₁,…,x_{k−1}) = ⟨f, φ(r ⊗ (x₁,…,x_{k−1}))⟩ for a Δ k-cochain f.
///
/// The result is a quandle k-cochain with the region color first.
pub fn phi_pullback(f: &CochainTable, q: &FiniteQuandle, base: usize) -> Result<CochainTable> {
    if f.domain() != CochainDomain::Delta || f.base() != q.order() {
        bail!(InvalidParameter, "phi pullback needs a Δ cochain on the quandle");
    }
    if f.degree() == 0 {
        bail!(InvalidParameter, "phi pullback needs degree at least 1");
    }
    if base >= q.order() {
        bail!(InvalidParameter, "basepoint {base} is not in a quandle of order {}", q.order());
    }
    if !is_invariant(f, q) {
        bail!(InvalidInput, "cochain is not invariant under the diagonal quandle action");
    }
    let v = f.values();
    CochainTable::from_fn(CochainDomain::Quandle, f.degree(), q.order(), v.clone(), &format!("phi*({})", f.kind()), |t| {
        let mut acc = v.zero();
        for (s, label) in phi_terms(q, base, t[0], &t[1..]) {
            acc = if s > 0 { v.add(&acc, f.get(&label)) } else { v.sub(&acc, f.get(&label)) };
        }
        acc.into_iter().map(|x| x as i64).collect()
    })
}
