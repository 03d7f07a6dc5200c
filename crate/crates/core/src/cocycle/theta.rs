//! The 3-cocycle θ_p of the dihedral quandle R_p.

use super::cyclic::d_value;
use crate::chain::{CochainDomain, CochainTable};
use crate::error::{bail, Result};

/// Which scalar multiplies the bracket.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ThetaVariant {
    /// 2z (d(y−x, z−y) + d(y−x, y−z)), any p ≥ 3
    Double,
    /// z (d(y−x, z−y) + d(y−x, y−z)), odd p only
    Single,
}

/// θ(x, y, z) as an integer before reduction mod p; x is the region color.
pub fn theta_value(p: usize, variant: ThetaVariant, x: usize, y: usize, z: usize) -> i64 {
    let (x, y, z) = (x as i64, y as i64, z as i64);
    let bracket = d_value(p, y - x, z - y) + d_value(p, y - x, y - z);
    let factor = match variant {
        ThetaVariant::Double => 2,
        ThetaVariant::Single => 1,
    };
    factor * z * bracket
}

/// θ_p as a ℤ/p-valued quandle 3-cochain on R_p.
pub fn theta(p: usize, variant: ThetaVariant) -> Result<CochainTable> {
    if p < 3 {
        bail!(InvalidParameter, "theta needs p >= 3, got {p}");
    }
    if variant == ThetaVariant::Single && p % 2 == 0 {
        bail!(InvalidParameter, "the single-factor theta is only defined for odd p, got {p}");
    }
    let kind = match variant {
        ThetaVariant::Double => format!("theta:{p}"),
        ThetaVariant::Single => format!("theta-odd:{p}"),
    };
    CochainTable::from_fn_mod(CochainDomain::Quandle, 3, p, p as u64, &kind, |t| {
        theta_value(p, variant, t[0], t[1], t[2])
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn values() {
        let t = theta(5, ThetaVariant::Double).unwrap();
        assert_eq!(t.get_mod(&[0, 1, 3]), 3);
        for a in 0..5 {
            for b in 0..5 {
                assert_eq!(t.get_mod(&[a, a, b]), 0);
                assert_eq!(t.get_mod(&[a, b, b]), 0);
            }
        }
        assert!(theta(4, ThetaVariant::Single).is_err());
        assert!(theta(4, ThetaVariant::Double).is_ok());
    }
}
