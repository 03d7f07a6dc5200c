//! The cocycles b₁, b₂, d of ℤ/p and their cup products.

use std::fmt;

use crate::chain::{CochainDomain, CochainTable};
use crate::error::{bail, Result};

/// How a cyclic-group cocycle was built.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CyclicKind {
    B1,
    B2,
    D,
    Cup(Box<CyclicKind>, Box<CyclicKind>),
}

impl fmt::Display for CyclicKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CyclicKind::B1 => write!(f, "b1"),
            CyclicKind::B2 => write!(f, "b2"),
            CyclicKind::D => write!(f, "d"),
            CyclicKind::Cup(a, b) => write!(f, "({a}∪{b})"),
        }
    }
}

/// An inhomogeneous ℤ/p-valued cocycle of ℤ/p.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicCocycle {
    pub p: usize,
    pub kind: CyclicKind,
    pub table: CochainTable,
}

impl CyclicCocycle {
    pub fn degree(&self) -> usize {
        self.table.degree()
    }

    pub fn eval(&self, args: &[usize]) -> u64 {
        let reduced: Vec<usize> = args.iter().map(|&a| a % self.p).collect();
        self.table.get_mod(&reduced)
    }

    /// The same cocycle in homogeneous form f(x₀,…,x_n) = F[x₁−x₀|…].
    pub fn homogeneous(&self) -> Result<CochainTable> {
        let g = crate::algebra::FiniteGroup::cyclic(self.p)?;
        crate::chain::inhom_to_hom_cochain(&self.table, &g)
    }
}

fn check_p(p: usize) -> Result<()> {
    if p < 3 {
        bail!(InvalidParameter, "cyclic cocycles need p >= 3, got {p}");
    }
    Ok(())
}

/// 1 if x̄ + ȳ ≥ p, else 0.
pub fn b2_value(p: usize, x: i64, y: i64) -> i64 {
    let (x, y) = (x.rem_euclid(p as i64), y.rem_euclid(p as i64));
    i64::from(x + y >= p as i64)
}

/// d(x, y) = b₂(x, y) − b₂(−x, −y) ∈ {−1, 0, 1}.
pub fn d_value(p: usize, x: i64, y: i64) -> i64 {
    b2_value(p, x, y) - b2_value(p, -x, -y)
}

pub fn b1(p: usize) -> Result<CyclicCocycle> {
    check_p(p)?;
    let table = CochainTable::from_fn_mod(CochainDomain::GroupInhom, 1, p, p as u64, "b1", |t| t[0] as i64)?;
    Ok(CyclicCocycle { p, kind: CyclicKind::B1, table })
}

pub fn b2(p: usize) -> Result<CyclicCocycle> {
    check_p(p)?;
    let table = CochainTable::from_fn_mod(CochainDomain::GroupInhom, 2, p, p as u64, "b2", |t| {
        b2_value(p, t[0] as i64, t[1] as i64)
    })?;
    Ok(CyclicCocycle { p, kind: CyclicKind::B2, table })
}

pub fn d(p: usize) -> Result<CyclicCocycle> {
    check_p(p)?;
    let table = CochainTable::from_fn_mod(CochainDomain::GroupInhom, 2, p, p as u64, "d", |t| {
        d_value(p, t[0] as i64, t[1] as i64)
    })?;
    Ok(CyclicCocycle { p, kind: CyclicKind::D, table })
}

/// (f∪g)[x₁|…|x_{k+l}] = f[x₁|…|x_k] · g[x_{k+1}|…|x_{k+l}].
pub fn cup_product(f: &CyclicCocycle, g: &CyclicCocycle) -> Result<CyclicCocycle> {
    if f.p != g.p {
        bail!(InvalidParameter, "cup product of cocycles mod {} and mod {}", f.p, g.p);
    }
    let (k, l, p) = (f.degree(), g.degree(), f.p);
    let kind = CyclicKind::Cup(Box::new(f.kind.clone()), Box::new(g.kind.clone()));
    let table = CochainTable::from_fn_mod(CochainDomain::GroupInhom, k + l, p, p as u64, &kind.to_string(), |t| {
        (f.table.get_mod(&t[..k]) * g.table.get_mod(&t[k..])) as i64
    })?;
    Ok(CyclicCocycle { p, kind, table })
}

/// Σ_{i=0}^{p−1} i · d(iy, y) reduced mod p.
pub fn lemma_sum(p: usize, y: usize) -> u64 {
    let s: i64 = (0..p as i64).map(|i| i * d_value(p, i * y as i64, y as i64)).sum();
    s.rem_euclid(p as i64) as u64
}

/// −y for odd p; p/2 − y for even p and y ≠ 0; 0 for y = 0.
pub fn lemma_closed_form(p: usize, y: usize) -> u64 {
    let p_i = p as i64;
    let v = if y % p == 0 {
        0
    } else if p % 2 == 1 {
        -(y as i64)
    } else {
        p_i / 2 - y as i64
    };
    v.rem_euclid(p_i) as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_examples() {
        let p = 5;
        assert_eq!(b2(p).unwrap().eval(&[3, 4]), 1);
        assert_eq!(d_value(p, 1, 2), -1);
        assert_eq!(d_value(p, 2, 4), 1);
        assert_eq!(d_value(p, 1, 4), 0);
        assert_eq!(d_value(p, 3, 0), 0);
        for x in 0..5 {
            for y in 0..5 {
                assert_eq!(d_value(p, -x, -y), -d_value(p, x, y));
            }
        }
        let c = cup_product(&b1(5).unwrap(), &b2(5).unwrap()).unwrap();
        assert_eq!(c.eval(&[1, 3, 4]), 1);
        assert_eq!(c.eval(&[0, 3, 4]), 0);
        assert_eq!(c.kind.to_string(), "(b1∪b2)");
    }

    #[test]
    fn lemma_examples() {
        assert_eq!(lemma_sum(5, 2), 3);
        assert_eq!(lemma_sum(5, 0), 0);
        assert_eq!(lemma_sum(4, 1), 1);
        assert_eq!(lemma_closed_form(4, 1), 1);
    }
}
