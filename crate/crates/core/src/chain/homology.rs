//! Homology of the normalized quandle complex with trivial coefficients.

use num_traits::ToPrimitive;
use serde::Serialize;

use super::cochain::tuple_at;
use super::group::sign;
use crate::algebra::{invariant_factors, IntMatrix};
use crate::error::{bail, Result};
use crate::limits::max_matrix_entries;
use crate::par;
use crate::quandle::FiniteQuandle;

/// ℤ or 𝔽_p.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HomologyCoefficients {
    Integers,
    Field(u64),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyResult {
    pub degree: usize,
    pub coefficients: String,
    /// Free rank (over ℤ) or dimension (over 𝔽_p).
    pub rank: usize,
    /// Invariant factors > 1, a divisibility chain; empty over a field.
    pub torsion: Vec<u64>,
    /// Dimension over 𝔽_p; `None` over ℤ.
    pub dim: Option<usize>,
}

/// Non-degenerate n-tuples (no equal neighbours) in lexicographic order.
pub fn nondegenerate_tuples(m: usize, n: usize) -> Vec<Vec<usize>> {
    let count = (0..n).try_fold(1usize, |a, _| a.checked_mul(m)).unwrap_or(usize::MAX);
    (0..count).map(|i| tuple_at(i, m, n)).filter(|t| t.windows(2).all(|w| w[0] != w[1])).collect()
}

fn basis_size(m: usize, n: usize) -> usize {
    if n == 0 {
        1
    } else {
        m * (m - 1).pow(n as u32 - 1)
    }
}

/// Matrix of ∂_n : C_n → C_{n−1} (rows indexed by (n−1)-tuples).
pub fn quandle_boundary_matrix(q: &FiniteQuandle, n: usize) -> Result<Vec<Vec<(usize, i64)>>> {
    let m = q.order();
    let rows = basis_size(m, n.saturating_sub(1));
    let cols = if n == 0 { 0 } else { basis_size(m, n) };
    if rows.saturating_mul(cols) > max_matrix_entries() {
        bail!(ResourceLimit, "boundary matrix {rows}x{cols} for degree {n} exceeds the size cap");
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let basis = nondegenerate_tuples(m, n);
    let index_of = |t: &[usize]| -> Option<usize> {
        if t.windows(2).any(|w| w[0] == w[1]) {
            return None;
        }
        // rank of t among non-degenerate tuples of its length
        let mut idx = 0;
        for (k, &x) in t.iter().enumerate() {
            let rest = (m - 1).pow((t.len() - k - 1) as u32);
            let digit = if k == 0 { x } else if x > t[k - 1] { x - 1 } else { x };
            idx += digit * rest;
        }
        Some(idx)
    };
    Ok(par::map_slice(&basis, |t| {
        let mut col: Vec<(usize, i64)> = Vec::new();
        for i in 1..=n {
            let xi = t[i - 1];
            let mut face = t.clone();
            face.remove(i - 1);
            let mut acted: Vec<usize> = t[..i - 1].iter().map(|&x| q.op(x, xi)).collect();
            acted.extend_from_slice(&t[i..]);
            for (s, u) in [(sign(i), face), (-sign(i), acted)] {
                if let Some(r) = index_of(&u) {
                    col.push((r, s));
                }
            }
        }
        col.sort_unstable();
        let mut merged: Vec<(usize, i64)> = Vec::with_capacity(col.len());
        for (r, s) in col {
            match merged.last_mut() {
                Some((lr, ls)) if *lr == r => *ls += s,
                _ => merged.push((r, s)),
            }
        }
        merged.retain(|&(_, s)| s != 0);
        merged
    }))
}

fn dense(cols: &[Vec<(usize, i64)>], rows: usize) -> IntMatrix {
    let mut a = IntMatrix::zeros(rows, cols.len());
    for (j, col) in cols.iter().enumerate() {
        for &(i, s) in col {
            a.add_to(i, j, s);
        }
    }
    a
}

/// Rank over 𝔽_p by Gaussian elimination.
pub fn rank_mod_p(cols: &[Vec<(usize, i64)>], rows: usize, p: u64) -> usize {
    let mut mat: Vec<Vec<u64>> = cols
        .iter()
        .map(|col| {
            let mut v = vec![0u64; rows];
            for &(i, s) in col {
                v[i] = (v[i] + s.rem_euclid(p as i64) as u64) % p;
            }
            v
        })
        .collect();
    let mut rank = 0;
    for r in 0..rows {
        let Some(piv) = (rank..mat.len()).find(|&j| mat[j][r] != 0) else { continue };
        mat.swap(rank, piv);
        let inv = mod_pow(mat[rank][r], p - 2, p);
        let pivot_col = mat[rank].clone();
        for v in mat.iter_mut().skip(rank + 1) {
            if v[r] != 0 {
                let f = v[r] * inv % p;
                for (a, &b) in v.iter_mut().zip(&pivot_col).skip(r) {
                    *a = (*a + p - f * b % p) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn mod_pow(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

/// H_n of the normalized quandle complex with trivial coefficients.
pub fn quandle_homology(q: &FiniteQuandle, n: usize, coefficients: HomologyCoefficients) -> Result<HomologyResult> {
    let m = q.order();
    let d_n = quandle_boundary_matrix(q, n)?;
    let d_next = quandle_boundary_matrix(q, n + 1)?;
    let c_n = basis_size(m, n);
    let c_prev = basis_size(m, n.saturating_sub(1));
    match coefficients {
        HomologyCoefficients::Field(p) => {
            if !is_prime(p) {
                bail!(InvalidParameter, "field coefficients need a prime, got {p}");
            }
            let r_n = if n == 0 { 0 } else { rank_mod_p(&d_n, c_prev, p) };
            let r_next = rank_mod_p(&d_next, c_n, p);
            let dim = c_n - r_n - r_next;
            Ok(HomologyResult { degree: n, coefficients: format!("F{p}"), rank: dim, torsion: vec![], dim: Some(dim) })
        }
        HomologyCoefficients::Integers => {
            let r_n = if n == 0 { 0 } else { invariant_factors(&dense(&d_n, c_prev)).len() };
            let factors = invariant_factors(&dense(&d_next, c_n));
            let rank = c_n - r_n - factors.len();
            let mut torsion = Vec::new();
            for f in factors {
                let f = f.to_u64().ok_or_else(|| crate::Error::Internal("torsion coefficient exceeds u64".into()))?;
                if f > 1 {
                    torsion.push(f);
                }
            }
            Ok(HomologyResult { degree: n, coefficients: "Z".into(), rank, torsion, dim: None })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn indexing_matches_enumeration() {
        let r4 = FiniteQuandle::dihedral(4).unwrap();
        let cols = quandle_boundary_matrix(&r4, 3).unwrap();
        assert_eq!(cols.len(), 4 * 3 * 3);
        assert_eq!(nondegenerate_tuples(4, 2).len(), 12);
    }

    #[test]
    fn trivial_quandle_homology() {
        // every boundary vanishes: H_n is free on the non-degenerate tuples
        let t = FiniteQuandle::trivial(3).unwrap();
        let h = quandle_homology(&t, 2, HomologyCoefficients::Integers).unwrap();
        assert_eq!((h.rank, h.torsion.clone()), (6, vec![]));
    }
}
