//! Finite quandles as operation tables.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{bail, Error, Result};

/// Where a quandle table came from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum QuandleTag {
    Dihedral(usize),
    Conj { group: String, h: String },
    Trivial(usize),
    Custom,
}

impl fmt::Display for QuandleTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuandleTag::Dihedral(p) => write!(f, "dihedral:{p}"),
            QuandleTag::Conj { group, h } => write!(f, "conj:{group}:{h}"),
            QuandleTag::Trivial(m) => write!(f, "trivial:{m}"),
            QuandleTag::Custom => write!(f, "custom"),
        }
    }
}

/// A finite quandle on `0..order`; `op(x, y)` is x*y.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteQuandle {
    order: usize,
    op: Vec<usize>,
    inv_op: Vec<usize>,
    tag: QuandleTag,
}

/// Which quandle axiom failed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axiom {
    /// x*x = x
    Idempotence,
    /// *y is a bijection
    RightInvertibility,
    /// (x*y)*z = (x*z)*(y*z)
    SelfDistributivity,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AxiomReport {
    Pass,
    /// First violation in scan order; `witness` holds the offending elements.
    Fail { axiom: Axiom, witness: Vec<usize> },
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        matches!(self, AxiomReport::Pass)
    }
}

impl FiniteQuandle {
    /// Builds a table without checking the axioms. Entries of `inv_op` for a
    /// column that is not a bijection are left as `usize::MAX`.
    pub fn from_table_unchecked(table: &[Vec<usize>], tag: QuandleTag) -> Result<Self> {
        let m = table.len();
        let mut op = Vec::with_capacity(m * m);
        for (x, row) in table.iter().enumerate() {
            if row.len() != m {
                bail!(InvalidParameter, "row {x} has length {} (expected {m})", row.len());
            }
            if let Some(&bad) = row.iter().find(|&&v| v >= m) {
                bail!(InvalidParameter, "entry {bad} out of range in row {x}");
            }
            op.extend_from_slice(row);
        }
        let mut inv_op = vec![usize::MAX; m * m];
        for y in 0..m {
            for x in 0..m {
                let z = op[x * m + y];
                if inv_op[z * m + y] == usize::MAX {
                    inv_op[z * m + y] = x;
                }
            }
        }
        Ok(FiniteQuandle { order: m, op, inv_op, tag })
    }

    /// Builds a table and rejects it unless Q1–Q3 hold.
    pub fn from_table(table: &[Vec<usize>], tag: QuandleTag) -> Result<Self> {
        let q = Self::from_table_unchecked(table, tag)?;
        match q.check_axioms() {
            AxiomReport::Pass => Ok(q),
            AxiomReport::Fail { axiom, witness } => {
                Err(Error::InvalidInput(format!("quandle axiom {axiom:?} fails at {witness:?}")))
            }
        }
    }

    fn from_fn(m: usize, f: impl Fn(usize, usize) -> usize, tag: QuandleTag) -> Self {
        let table: Vec<Vec<usize>> = (0..m).map(|x| (0..m).map(|y| f(x, y)).collect()).collect();
        Self::from_table_unchecked(&table, tag).expect("well-formed table")
    }

    /// R_p: x*y = 2y − x mod p.
    pub fn dihedral(p: usize) -> Result<Self> {
        if p < 3 {
            bail!(InvalidParameter, "dihedral quandle needs p >= 3, got {p}");
        }
        Ok(Self::from_fn(p, |x, y| (2 * y + p - x) % p, QuandleTag::Dihedral(p)))
    }

    /// x*y = x on m elements.
    pub fn trivial(m: usize) -> Result<Self> {
        if m == 0 {
            bail!(InvalidParameter, "trivial quandle needs at least one element");
        }
        Ok(Self::from_fn(m, |x, _| x, QuandleTag::Trivial(m)))
    }

    pub(crate) fn conj_from_fn(m: usize, f: impl Fn(usize, usize) -> usize, tag: QuandleTag) -> Self {
        Self::from_fn(m, f, tag)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn tag(&self) -> &QuandleTag {
        &self.tag
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    /// x*y
    #[inline]
    pub fn op(&self, x: usize, y: usize) -> usize {
        self.op[x * self.order + y]
    }

    /// x*⁻¹y
    #[inline]
    pub fn inv_op(&self, x: usize, y: usize) -> usize {
        self.inv_op[x * self.order + y]
    }

    /// x*^ε y for ε = ±1.
    #[inline]
    pub fn op_signed(&self, x: usize, y: usize, eps: i8) -> usize {
        if eps >= 0 {
            self.op(x, y)
        } else {
            self.inv_op(x, y)
        }
    }

    /// Exhaustive Q1, then Q2, then Q3 scan.
    pub fn check_axioms(&self) -> AxiomReport {
        let m = self.order;
        if let Some(x) = (0..m).find(|&x| self.op(x, x) != x) {
            return AxiomReport::Fail { axiom: Axiom::Idempotence, witness: vec![x] };
        }
        for y in 0..m {
            let mut seen = vec![false; m];
            for x in 0..m {
                let z = self.op(x, y);
                if seen[z] {
                    return AxiomReport::Fail { axiom: Axiom::RightInvertibility, witness: vec![y, z] };
                }
                seen[z] = true;
            }
        }
        let bad = crate::par::find_first(m, |x| {
            for y in 0..m {
                let xy = self.op(x, y);
                for z in 0..m {
                    if self.op(xy, z) != self.op(self.op(x, z), self.op(y, z)) {
                        return Some(vec![x, y, z]);
                    }
                }
            }
            None
        });
        match bad {
            Some(witness) => AxiomReport::Fail { axiom: Axiom::SelfDistributivity, witness },
            None => AxiomReport::Pass,
        }
    }

    /// The permutation x ↦ x*y.
    pub fn right_translation(&self, y: usize) -> Vec<usize> {
        (0..self.order).map(|x| self.op(x, y)).collect()
    }

    /// Orbits under the inner action, each sorted, ordered by least element.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let m = self.order;
        let mut comp = vec![usize::MAX; m];
        let mut out = Vec::new();
        for start in 0..m {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            comp[start] = id;
            let mut orbit = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(x) = queue.pop_front() {
                for y in 0..m {
                    for z in [self.op(x, y), self.inv_op(x, y)] {
                        if comp[z] == usize::MAX {
                            comp[z] = id;
                            orbit.push(z);
                            queue.push_back(z);
                        }
                    }
                }
            }
            orbit.sort_unstable();
            out.push(orbit);
        }
        out
    }

    /// True iff the inner action is transitive.
    pub fn is_connected(&self) -> bool {
        self.orbits().len() == 1
    }

    /// True iff y ↦ (*y) is injective (distinct columns of the table).
    pub fn is_faithful(&self) -> bool {
        let cols: BTreeSet<Vec<usize>> = (0..self.order).map(|y| self.right_translation(y)).collect();
        cols.len() == self.order
    }

    /// True iff the automorphism group acts transitively.
    pub fn is_homogeneous(&self) -> bool {
        (1..self.order).all(|t| self.automorphism_sending(0, t).is_some())
    }

    /// Some automorphism mapping `a` to `b`, found by backtracking.
    pub fn automorphism_sending(&self, a: usize, b: usize) -> Option<Vec<usize>> {
        let m = self.order;
        let mut map = vec![usize::MAX; m];
        let mut used = vec![false; m];
        if !self.extend(&mut map, &mut used, a, b) {
            return None;
        }
        self.search(&mut map, &mut used).then_some(map)
    }

    fn search(&self, map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let Some(x) = map.iter().position(|&v| v == usize::MAX) else { return true };
        for v in 0..self.order {
            if used[v] {
                continue;
            }
            let (saved_map, saved_used) = (map.clone(), used.clone());
            if self.extend(map, used, x, v) && self.search(map, used) {
                return true;
            }
            *map = saved_map;
            *used = saved_used;
        }
        false
    }

    /// Assigns x ↦ v and closes under φ(a*b) = φ(a)*φ(b); false on conflict.
    fn extend(&self, map: &mut [usize], used: &mut [bool], x: usize, v: usize) -> bool {
        let mut pending = vec![(x, v)];
        while let Some((x, v)) = pending.pop() {
            if map[x] != usize::MAX {
                if map[x] != v {
                    return false;
                }
                continue;
            }
            if used[v] {
                return false;
            }
            map[x] = v;
            used[v] = true;
            for (y, &my) in map.iter().enumerate() {
                if my == usize::MAX {
                    continue;
                }
                pending.push((self.op(x, y), self.op(v, my)));
                pending.push((self.op(y, x), self.op(my, v)));
            }
        }
        true
    }

    /// All permutations in the group generated by the right translations.
    pub fn inner_group(&self, cap: usize) -> Result<Vec<Vec<usize>>> {
        let gens: Vec<Vec<usize>> = (0..self.order).map(|y| self.right_translation(y)).collect();
        let id: Vec<usize> = (0..self.order).collect();
        let mut seen: BTreeSet<Vec<usize>> = BTreeSet::from([id.clone()]);
        let mut queue = VecDeque::from([id]);
        while let Some(p) = queue.pop_front() {
            for g in &gens {
                let q: Vec<usize> = p.iter().map(|&i| g[i]).collect();
                if seen.insert(q.clone()) {
                    if seen.len() > cap {
                        bail!(ResourceLimit, "inner automorphism group exceeds {cap} elements");
                    }
                    queue.push_back(q);
                }
            }
        }
        Ok(seen.into_iter().collect())
    }

    pub fn to_json(&self) -> Value {
        let rows: Vec<Vec<usize>> = (0..self.order).map(|x| (0..self.order).map(|y| self.op(x, y)).collect()).collect();
        json!({ "order": self.order, "op": rows, "tag": self.tag.to_string() })
    }

    /// Reads `{"order": m, "op": [[...]], "tag": "..."}` and checks the axioms.
    pub fn from_json(v: &Value) -> Result<Self> {
        let rows: Vec<Vec<usize>> = serde_json::from_value(v.get("op").cloned().unwrap_or(Value::Null))
            .map_err(|e| Error::Parse(format!("quandle table: {e}")))?;
        if let Some(m) = v.get("order").and_then(Value::as_u64) {
            if m as usize != rows.len() {
                bail!(Parse, "order {m} does not match table with {} rows", rows.len());
            }
        }
        Self::from_table(&rows, QuandleTag::Custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dihedral_examples() {
        let r5 = FiniteQuandle::dihedral(5).unwrap();
        assert_eq!(r5.op(1, 3), 0);
        assert_eq!(r5.op(r5.op(1, 3), 3), 1);
        assert_eq!(FiniteQuandle::dihedral(3).unwrap().op(0, 1), 2);
        assert!(r5.check_axioms().passed());
        assert!(FiniteQuandle::dihedral(2).is_err());
        for x in 0..5 {
            for y in 0..5 {
                assert_eq!(r5.inv_op(x, y), r5.op(x, y));
            }
        }
    }

    #[test]
    fn axiom_reports() {
        assert!(FiniteQuandle::trivial(4).unwrap().check_axioms().passed());
        let bad = FiniteQuandle::from_table_unchecked(&[vec![0, 0], vec![0, 1]], QuandleTag::Custom).unwrap();
        assert!(matches!(bad.check_axioms(), AxiomReport::Fail { axiom: Axiom::RightInvertibility, .. }));
        let bad = FiniteQuandle::from_table_unchecked(&[vec![1, 0], vec![1, 1]], QuandleTag::Custom).unwrap();
        assert_eq!(bad.check_axioms(), AxiomReport::Fail { axiom: Axiom::Idempotence, witness: vec![0] });
        // Q1 and Q2 hold but Q3 fails
        let t = vec![vec![0, 2, 1], vec![1, 1, 0], vec![2, 0, 2]];
        let q = FiniteQuandle::from_table_unchecked(&t, QuandleTag::Custom).unwrap();
        assert!(matches!(q.check_axioms(), AxiomReport::Fail { axiom: Axiom::SelfDistributivity, .. }));
    }

    #[test]
    fn predicates() {
        let r5 = FiniteQuandle::dihedral(5).unwrap();
        assert!(r5.is_connected() && r5.is_faithful() && r5.is_homogeneous());
        let r4 = FiniteQuandle::dihedral(4).unwrap();
        assert!(!r4.is_connected());
        assert_eq!(r4.orbits(), vec![vec![0, 2], vec![1, 3]]);
        assert!(!r4.is_faithful());
        let t = FiniteQuandle::trivial(3).unwrap();
        assert!(!t.is_connected() && t.is_homogeneous() && !t.is_faithful());
        assert_eq!(r5.inner_group(1000).unwrap().len(), 10);
    }

    #[test]
    fn json_round_trip() {
        let r3 = FiniteQuandle::dihedral(3).unwrap();
        let back = FiniteQuandle::from_json(&r3.to_json()).unwrap();
        assert_eq!(back.right_translation(1), r3.right_translation(1));
    }
}
