//! Averaging a cyclic-group cocycle over negation, and the Δ-side conditions.

use crate::chain::{is_cocycle, CochainDomain, CochainTable, Complex};
use crate::error::{bail, Result};
use crate::par;
use crate::quandle::FiniteQuandle;

/// f̃(x₀,…,x_k) = f(x₀,…,x_k) + f(−x₀,…,−x_k) for a homogeneous cochain of ℤ/p.
///
/// The result is a Δ cochain on R_p (elements are residues). f is expected to
/// be normalized; that is not checked here.
pub fn average_negation(f: &CochainTable) -> Result<CochainTable> {
    if f.domain() != CochainDomain::GroupHom {
        bail!(InvalidParameter, "average_negation expects a homogeneous group cochain");
    }
    let p = f.base();
    let neg = |t: &[usize]| t.iter().map(|&x| (p - x) % p).collect::<Vec<_>>();
    CochainTable::from_fn(CochainDomain::Delta, f.degree(), p, f.values().clone(), &format!("avg({})", f.kind()), |t| {
        let v = f.values().add(f.get(t), f.get(&neg(t)));
        v.into_iter().map(|x| x as i64).collect()
    })
}

/// f(x₀*y,…,x_k*y) = f(x₀,…,x_k) for every tuple and every y.
pub fn is_invariant(f: &CochainTable, q: &FiniteQuandle) -> bool {
    if f.base() != q.order() {
        return false;
    }
    let arity = f.arity();
    par::all(f.len(), |i| {
        let t = crate::chain::tuple_at(i, f.base(), arity);
        q.elements().all(|y| {
            let acted: Vec<usize> = t.iter().map(|&x| q.op(x, y)).collect();
            f.get(&acted) == f.get(&t)
        })
    })
}

/// The three conditions a Δ cochain must meet before pulling back along φ.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DeltaConditions {
    /// δf = 0
    pub cocycle: bool,
    /// invariance under the diagonal right action
    pub invariant: bool,
    /// f vanishes when two adjacent arguments agree
    pub normalized: bool,
}

impl DeltaConditions {
    pub fn all(&self) -> bool {
        self.cocycle && self.invariant && self.normalized
    }
}

pub fn delta_conditions(f: &CochainTable, q: &FiniteQuandle) -> Result<DeltaConditions> {
    if f.domain() != CochainDomain::Delta {
        bail!(InvalidParameter, "expected a Δ cochain");
    }
    let cx = Complex::Delta(q.order());
    Ok(DeltaConditions {
        cocycle: is_cocycle(f, &cx)?,
        invariant: is_invariant(f, q),
        normalized: crate::chain::is_normalized(f, &cx),
    })
}
