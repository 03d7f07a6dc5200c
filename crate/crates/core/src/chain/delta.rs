//! The Δ complex of a quandle: simplices (x₀,…,x_n) with X acting diagonally.

use super::formal::{ComplexKind, FormalChain};
use super::group::face_boundary;
use crate::error::{bail, Result};

/// Simplicial boundary Σ (−1)^i (x₀,…,x̂_i,…,x_n).
pub fn delta_boundary(chain: &FormalChain) -> Result<FormalChain> {
    if chain.kind() != ComplexKind::Delta {
        bail!(InvalidParameter, "delta boundary applied to a {:?} chain", chain.kind());
    }
    Ok(face_boundary(chain))
}

/// Image in the coinvariants C^Δ ⊗_{G_X} ℤ: each tuple is replaced by the
/// least of its images under `perms` (which must form a group containing
/// the identity).
pub fn delta_coinvariants(chain: &FormalChain, perms: &[Vec<usize>]) -> FormalChain {
    chain.map_labels(|l| perms.iter().map(|p| l.iter().map(|&x| p[x]).collect::<Vec<_>>()).min().unwrap())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let c = FormalChain::from_terms(ComplexKind::Delta, Default::default(), 2, [(1, vec![0, 1, 2])]).unwrap();
        let d = delta_boundary(&c).unwrap();
        assert_eq!(d.coefficient(&[1, 2]), 1);
        assert_eq!(d.coefficient(&[0, 2]), -1);
        assert_eq!(d.coefficient(&[0, 1]), 1);
        let c = FormalChain::from_terms(ComplexKind::Delta, Default::default(), 3, [(1, vec![0, 1, 2, 3])]).unwrap();
        assert!(delta_boundary(&delta_boundary(&c).unwrap()).unwrap().is_zero());
        let c = FormalChain::from_terms(ComplexKind::Delta, Default::default(), 1, [(1, vec![2, 2])]).unwrap();
        assert!(super::super::rack::normalize(&delta_boundary(&c).unwrap(), None).unwrap().is_zero());
    }
}
