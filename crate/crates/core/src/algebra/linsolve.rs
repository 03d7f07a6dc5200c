//! Linear systems A·x = b over a product of cyclic groups.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::abelian::{AbelianElem, AbelianPresentation};
use super::matrix::IntMatrix;
use super::snf::{smith_normal_form, SmithForm};
use crate::error::{bail, Result};

/// Solves `a · x = b` where `b` and the unknowns live in `target`.
///
/// The system splits into one congruence system per cyclic factor; each is
/// decided through the Smith form of `a`, computed once.
pub fn solve_linear_over_abelian(
    a: &IntMatrix,
    b: &[AbelianElem],
    target: &AbelianPresentation,
) -> Result<Option<Vec<AbelianElem>>> {
    if b.len() != a.rows() {
        bail!(InvalidParameter, "right-hand side has {} entries for {} rows", b.len(), a.rows());
    }
    if let Some(bad) = b.iter().position(|e| !target.is_valid(e)) {
        bail!(InvalidParameter, "right-hand side entry {bad} is not an element of the target group");
    }
    let snf = smith_normal_form(a);
    let mut x = vec![target.zero(); a.cols()];
    for (k, &m) in target.moduli().iter().enumerate() {
        let rhs: Vec<i64> = b.iter().map(|e| e[k] as i64).collect();
        match solve_with(&snf, &rhs, m) {
            Some(sol) => {
                for (xi, s) in x.iter_mut().zip(sol) {
                    xi[k] = s;
                }
            }
            None => return Ok(None),
        }
    }
    Ok(Some(x))
}

/// Solves `a · x ≡ b (mod m)`.
pub fn solve_mod(a: &IntMatrix, b: &[i64], m: u64) -> Result<Option<Vec<u64>>> {
    if b.len() != a.rows() {
        bail!(InvalidParameter, "right-hand side has {} entries for {} rows", b.len(), a.rows());
    }
    if m == 0 {
        bail!(InvalidParameter, "modulus must be positive");
    }
    Ok(solve_with(&smith_normal_form(a), b, m))
}

fn solve_with(snf: &SmithForm, b: &[i64], m: u64) -> Option<Vec<u64>> {
    let modulus = BigInt::from(m);
    let bb: Vec<BigInt> = b.iter().map(|&v| BigInt::from(v)).collect();
    let ub = snf.u.mul_vec(&bb).expect("dimensions checked");
    let cols = snf.v.rows();
    let mut y = vec![BigInt::zero(); cols];
    for (i, rhs) in ub.iter().enumerate() {
        let rhs = rhs.mod_floor(&modulus);
        let d = if i < cols { snf.d.get(i, i).clone() } else { BigInt::zero() };
        if d.is_zero() {
            if !rhs.is_zero() {
                return None;
            }
            continue;
        }
        // d·y ≡ rhs (mod m)
        let g = d.gcd(&modulus);
        if !rhs.is_multiple_of(&g) {
            return None;
        }
        let m_red = &modulus / &g;
        let d_red = (&d / &g).mod_floor(&m_red);
        let inv = mod_inverse(&d_red, &m_red);
        y[i] = ((&rhs / &g) * inv).mod_floor(&m_red);
    }
    let x = snf.v.mul_vec(&y).expect("dimensions checked");
    Some(x.iter().map(|v| v.mod_floor(&modulus).to_u64().unwrap()).collect())
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> BigInt {
    if *m == BigInt::from(1) {
        return BigInt::zero();
    }
    let e = a.extended_gcd(m);
    debug_assert_eq!(e.gcd, BigInt::from(1));
    e.x.mod_floor(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: &[Vec<i64>]) -> IntMatrix {
        IntMatrix::from_rows(rows).unwrap()
    }

    #[test]
    fn spec_examples() {
        let z5 = AbelianPresentation::cyclic(5);
        assert_eq!(solve_linear_over_abelian(&mat(&[vec![1]]), &[vec![3]], &z5).unwrap(), Some(vec![vec![3]]));
        let z4 = AbelianPresentation::cyclic(4);
        assert_eq!(solve_linear_over_abelian(&mat(&[vec![2]]), &[vec![1]], &z4).unwrap(), None);
        let x = solve_linear_over_abelian(&mat(&[vec![2]]), &[vec![2]], &z4).unwrap().unwrap();
        assert!(x == vec![vec![1]] || x == vec![vec![3]]);
        assert!(solve_linear_over_abelian(&mat(&[vec![2]]), &[], &z4).is_err());
    }

    #[test]
    fn multi_factor_and_zero_rows() {
        let a = AbelianPresentation::new(vec![2, 3]);
        let m = mat(&[vec![1, 1], vec![0, 0]]);
        let sol = solve_linear_over_abelian(&m, &[vec![1, 2], vec![0, 0]], &a).unwrap().unwrap();
        assert_eq!(a.add(&sol[0], &sol[1]), vec![1, 2]);
        assert!(solve_linear_over_abelian(&m, &[vec![1, 2], vec![1, 0]], &a).unwrap().is_none());
    }
}
