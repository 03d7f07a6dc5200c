//! Finite abelian groups as products of cyclic factors.

use std::collections::VecDeque;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use super::group::FiniteGroup;
use super::matrix::IntMatrix;
use super::snf::smith_normal_form;

/// An element: one residue per cyclic factor.
pub type AbelianElem = Vec<u64>;

/// ℤ/m₁ ⊕ … ⊕ ℤ/m_r. The empty list is the trivial group.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AbelianPresentation {
    moduli: Vec<u64>,
}

impl AbelianPresentation {
    /// Factors equal to 1 are dropped.
    pub fn new(moduli: Vec<u64>) -> Self {
        AbelianPresentation { moduli: moduli.into_iter().filter(|&m| m != 1).collect() }
    }

    pub fn cyclic(m: u64) -> Self {
        Self::new(vec![m])
    }

    pub fn trivial() -> Self {
        Self::new(Vec::new())
    }

    pub fn moduli(&self) -> &[u64] {
        &self.moduli
    }

    pub fn rank(&self) -> usize {
        self.moduli.len()
    }

    pub fn order(&self) -> u64 {
        self.moduli.iter().product()
    }

    /// The single modulus of a cyclic group (1 for the trivial group).
    pub fn as_cyclic(&self) -> Option<u64> {
        match self.moduli.as_slice() {
            [] => Some(1),
            [m] => Some(*m),
            _ => None,
        }
    }

    pub fn zero(&self) -> AbelianElem {
        vec![0; self.moduli.len()]
    }

    pub fn is_valid(&self, a: &[u64]) -> bool {
        a.len() == self.moduli.len() && a.iter().zip(&self.moduli).all(|(x, m)| x < m)
    }

    pub fn is_zero(&self, a: &[u64]) -> bool {
        a.iter().all(|&x| x == 0)
    }

    pub fn add(&self, a: &[u64], b: &[u64]) -> AbelianElem {
        a.iter().zip(b).zip(&self.moduli).map(|((x, y), m)| (x + y) % m).collect()
    }

    pub fn neg(&self, a: &[u64]) -> AbelianElem {
        a.iter().zip(&self.moduli).map(|(x, m)| (m - x) % m).collect()
    }

    pub fn sub(&self, a: &[u64], b: &[u64]) -> AbelianElem {
        self.add(a, &self.neg(b))
    }

    pub fn scale(&self, a: &[u64], k: i64) -> AbelianElem {
        a.iter().zip(&self.moduli).map(|(&x, &m)| reduce_i128(x as i128 * k as i128, m)).collect()
    }

    /// Reduces integer coordinates into canonical residues.
    pub fn from_ints(&self, v: &[i64]) -> AbelianElem {
        v.iter().zip(&self.moduli).map(|(&x, &m)| reduce_i128(x as i128, m)).collect()
    }

    /// Mixed-radix index of an element, first factor least significant.
    pub fn index_of(&self, a: &[u64]) -> usize {
        let mut idx = 0usize;
        for (x, m) in a.iter().zip(&self.moduli).rev() {
            idx = idx * *m as usize + *x as usize;
        }
        idx
    }

    pub fn element_at(&self, mut idx: usize) -> AbelianElem {
        self.moduli
            .iter()
            .map(|&m| {
                let r = idx % m as usize;
                idx /= m as usize;
                r as u64
            })
            .collect()
    }
}

pub(crate) fn reduce_i128(x: i128, m: u64) -> u64 {
    x.rem_euclid(m as i128) as u64
}

/// An abelian subgroup of a [`FiniteGroup`] identified with a product of
/// cyclic groups.
#[derive(Clone, Debug)]
pub struct AbelianSubgroup {
    pub elements: Vec<usize>,
    pub presentation: AbelianPresentation,
    coords: Vec<Option<AbelianElem>>,
    by_index: Vec<usize>,
}

impl AbelianSubgroup {
    /// `elements` must form an abelian subgroup of `g`.
    ///
    /// Generators are chosen greedily by index; the relation lattice comes
    /// from the Cayley graph (Schreier relations) and is diagonalised by SNF.
    pub fn new(g: &FiniteGroup, elements: &[usize]) -> Self {
        let mut gens: Vec<usize> = Vec::new();
        let mut span = vec![false; g.order()];
        span[g.id()] = true;
        for &e in elements {
            if !span[e] {
                gens.push(e);
                span = closure(g, &gens);
            }
        }
        let k = gens.len();
        // BFS spanning tree: word[z] = exponent vector reaching z
        let mut word: Vec<Option<Vec<i64>>> = vec![None; g.order()];
        word[g.id()] = Some(vec![0; k]);
        let mut queue = VecDeque::from([g.id()]);
        let mut order = Vec::new();
        while let Some(z) = queue.pop_front() {
            order.push(z);
            for (i, &gi) in gens.iter().enumerate() {
                let y = g.mul(z, gi);
                if word[y].is_none() {
                    let mut w = word[z].clone().unwrap();
                    w[i] += 1;
                    word[y] = Some(w);
                    queue.push_back(y);
                }
            }
        }
        let mut rel_rows: Vec<Vec<i64>> = Vec::new();
        for &z in &order {
            for (i, &gi) in gens.iter().enumerate() {
                let y = g.mul(z, gi);
                let mut r = word[z].clone().unwrap();
                r[i] += 1;
                for (a, b) in r.iter_mut().zip(word[y].as_ref().unwrap()) {
                    *a -= b;
                }
                if r.iter().any(|&x| x != 0) {
                    rel_rows.push(r);
                }
            }
        }
        let (moduli, transform) = if k == 0 {
            (Vec::new(), IntMatrix::zeros(0, 0))
        } else {
            let rel = if rel_rows.is_empty() {
                IntMatrix::zeros(1, k)
            } else {
                IntMatrix::from_rows(&rel_rows).expect("rectangular relations")
            };
            let s = smith_normal_form(&rel);
            let diag: Vec<u64> = (0..k)
                .map(|j| if j < s.d.rows() { s.d.get(j, j).to_u64().unwrap_or(0) } else { 0 })
                .collect();
            assert!(diag.iter().all(|&d| d > 0), "finite subgroup must have full-rank relations");
            (diag, s.v)
        };
        let keep: Vec<usize> = (0..k).filter(|&j| moduli[j] > 1).collect();
        let presentation = AbelianPresentation::new(keep.iter().map(|&j| moduli[j]).collect());
        let mut coords = vec![None; g.order()];
        let mut by_index = vec![usize::MAX; presentation.order() as usize];
        for &z in &order {
            let w = word[z].as_ref().unwrap();
            let c: AbelianElem = keep
                .iter()
                .map(|&j| {
                    let s: BigInt = (0..k).map(|i| transform.get(i, j) * w[i]).sum();
                    s.mod_floor(&BigInt::from(moduli[j])).to_u64().unwrap()
                })
                .collect();
            by_index[presentation.index_of(&c)] = z;
            coords[z] = Some(c);
        }
        debug_assert!(by_index.iter().all(|&z| z != usize::MAX));
        let mut elements = elements.to_vec();
        elements.sort_unstable();
        AbelianSubgroup { elements, presentation, coords, by_index }
    }

    /// Coordinates of a subgroup element; `None` outside the subgroup.
    pub fn coords(&self, g: usize) -> Option<&AbelianElem> {
        self.coords.get(g).and_then(Option::as_ref)
    }

    pub fn element(&self, c: &[u64]) -> usize {
        self.by_index[self.presentation.index_of(c)]
    }

    pub fn contains(&self, g: usize) -> bool {
        self.coords(g).is_some()
    }
}

fn closure(g: &FiniteGroup, gens: &[usize]) -> Vec<bool> {
    let mut seen = vec![false; g.order()];
    seen[g.id()] = true;
    let mut stack = vec![g.id()];
    while let Some(z) = stack.pop() {
        for &x in gens {
            let y = g.mul(z, x);
            if !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    seen
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_hom(g: &FiniteGroup, s: &AbelianSubgroup) {
        assert_eq!(s.presentation.order() as usize, s.elements.len());
        for &a in &s.elements {
            for &b in &s.elements {
                let lhs = s.coords(g.mul(a, b)).unwrap().clone();
                let rhs = s.presentation.add(s.coords(a).unwrap(), s.coords(b).unwrap());
                assert_eq!(lhs, rhs);
            }
            assert_eq!(s.element(s.coords(a).unwrap()), a);
        }
    }

    #[test]
    fn decompositions() {
        let z6 = FiniteGroup::cyclic(6).unwrap();
        let all: Vec<usize> = z6.elements().collect();
        let s = AbelianSubgroup::new(&z6, &all);
        assert_eq!(s.presentation.moduli(), &[6]);
        check_hom(&z6, &s);

        let z2 = FiniteGroup::cyclic(2).unwrap();
        let z4 = FiniteGroup::cyclic(4).unwrap();
        let p = FiniteGroup::direct_product(&z2, &z4).unwrap();
        let all: Vec<usize> = p.elements().collect();
        let s = AbelianSubgroup::new(&p, &all);
        assert_eq!(s.presentation.moduli(), &[2, 4]);
        check_hom(&p, &s);

        let d6 = FiniteGroup::dihedral(3).unwrap();
        let c = d6.centralizer(3);
        check_hom(&d6, c.presentation.as_ref().unwrap());
        let t = AbelianSubgroup::new(&d6, &[0]);
        assert_eq!(t.presentation.order(), 1);
    }

    #[test]
    fn arithmetic() {
        let a = AbelianPresentation::new(vec![1, 4, 3]);
        assert_eq!(a.moduli(), &[4, 3]);
        assert_eq!(a.add(&[3, 2], &[2, 2]), vec![1, 1]);
        assert_eq!(a.neg(&[1, 0]), vec![3, 0]);
        assert_eq!(a.scale(&[1, 1], -1), vec![3, 2]);
        for i in 0..12 {
            assert_eq!(a.index_of(&a.element_at(i)), i);
        }
    }
}
