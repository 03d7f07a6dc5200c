//! Rack and quandle complexes, with trivial or Y = X coefficients.

use super::formal::{Coefficients, ComplexKind, FormalChain};
use super::group::{normalize_adjacent, sign};
use crate::error::{bail, Result};
use crate::quandle::FiniteQuandle;

/// ∂(r; x₁,…,x_n) = Σ_{i=1}^n (−1)^i [(r; …x̂_i…) − (r*x_i; x₁*x_i,…,x_{i−1}*x_i, x_{i+1},…,x_n)]
///
/// With trivial coefficients the r slot is absent. Quandle chains are
/// normalized before and after differentiation.
pub fn rack_boundary(chain: &FormalChain, q: &FiniteQuandle) -> Result<FormalChain> {
    let quandle = match chain.kind() {
        ComplexKind::Rack => false,
        ComplexKind::Quandle => true,
        other => bail!(InvalidParameter, "rack boundary applied to a {other:?} chain"),
    };
    let input = if quandle { normalize_quandle(chain) } else { chain.clone() };
    let n = chain.degree();
    let off = usize::from(chain.coefficients() == Coefficients::Set);
    let mut out = FormalChain::with_coefficients(chain.kind(), chain.coefficients(), n.saturating_sub(1));
    if n == 0 {
        return Ok(out);
    }
    for (l, c) in input.terms() {
        for i in 1..=n {
            let xi = l[off + i - 1];
            let s = sign(i) * c;
            let mut face = l.clone();
            face.remove(off + i - 1);
            out.add_term(face, s);
            let mut acted = Vec::with_capacity(l.len() - 1);
            if off == 1 {
                acted.push(q.op(l[0], xi));
            }
            acted.extend(l[off..off + i - 1].iter().map(|&x| q.op(x, xi)));
            acted.extend_from_slice(&l[off + i..]);
            out.add_term(acted, -s);
        }
    }
    Ok(if quandle { normalize_quandle(&out) } else { out })
}

/// Drops terms with x_i = x_{i+1} (the coefficient slot is ignored).
pub fn normalize_quandle(chain: &FormalChain) -> FormalChain {
    let off = usize::from(chain.coefficients() == Coefficients::Set);
    chain.filter(|l| l[off..].windows(2).all(|w| w[0] != w[1]))
}

/// Normalization dispatched on the complex tag.
pub fn normalize(chain: &FormalChain, group: Option<&crate::algebra::FiniteGroup>) -> Result<FormalChain> {
    Ok(match chain.kind() {
        ComplexKind::GroupInhom => match group {
            Some(g) => super::group::normalize_group(chain, g),
            None => bail!(InvalidParameter, "normalizing an inhomogeneous chain needs its group"),
        },
        ComplexKind::GroupHom | ComplexKind::Delta => normalize_adjacent(chain),
        ComplexKind::Quandle => normalize_quandle(chain),
        ComplexKind::Rack => chain.clone(),
    })
}
