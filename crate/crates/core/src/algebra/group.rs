//! Finite groups stored as dense multiplication tables.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::abelian::AbelianSubgroup;
use crate::error::{bail, Result};
use crate::limits::MAX_GROUP_ORDER;

/// A finite group on elements `0..order`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiniteGroup {
    order: usize,
    mul: Vec<usize>,
    id: usize,
    inv: Vec<usize>,
    labels: Vec<String>,
    generators: BTreeMap<String, usize>,
    name: String,
}

/// Result of [`FiniteGroup::centralizer`].
#[derive(Clone, Debug)]
pub struct Centralizer {
    /// Elements commuting with `h`, sorted by index.
    pub elements: Vec<usize>,
    pub abelian: bool,
    /// Cyclic decomposition, present iff the centralizer is abelian.
    pub presentation: Option<AbelianSubgroup>,
}

impl FiniteGroup {
    /// Builds a group from a full multiplication table, checking the axioms.
    ///
    /// Associativity is checked exhaustively for orders up to 200.
    pub fn from_table(name: &str, table: Vec<Vec<usize>>, labels: Option<Vec<String>>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            bail!(InvalidParameter, "empty multiplication table");
        }
        if n > MAX_GROUP_ORDER {
            bail!(ResourceLimit, "group order {n} exceeds cap {MAX_GROUP_ORDER}");
        }
        let mut mul = Vec::with_capacity(n * n);
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                bail!(InvalidParameter, "row {i} has length {} (expected {n})", row.len());
            }
            for &v in row {
                if v >= n {
                    bail!(InvalidParameter, "entry {v} out of range in row {i}");
                }
                mul.push(v);
            }
        }
        let id = (0..n)
            .find(|&e| (0..n).all(|g| mul[e * n + g] == g && mul[g * n + e] == g));
        let Some(id) = id else {
            bail!(InvalidParameter, "table has no two-sided identity");
        };
        let mut inv = vec![usize::MAX; n];
        for g in 0..n {
            match (0..n).find(|&k| mul[g * n + k] == id && mul[k * n + g] == id) {
                Some(k) => inv[g] = k,
                None => bail!(InvalidParameter, "element {g} has no inverse"),
            }
        }
        let labels = labels.unwrap_or_else(|| (0..n).map(|i| i.to_string()).collect());
        if labels.len() != n {
            bail!(InvalidParameter, "expected {n} labels, got {}", labels.len());
        }
        let g = FiniteGroup { order: n, mul, id, inv, labels, generators: BTreeMap::new(), name: name.to_string() };
        if n <= 200 {
            if let Some((a, b, c)) = g.associativity_counterexample() {
                bail!(InvalidParameter, "table is not associative at ({a},{b},{c})");
            }
        }
        Ok(g)
    }

    fn from_fn(name: &str, n: usize, f: impl Fn(usize, usize) -> usize, labels: Vec<String>) -> Result<Self> {
        let table = (0..n).map(|a| (0..n).map(|b| f(a, b)).collect()).collect();
        Self::from_table(name, table, Some(labels))
    }

    /// The cyclic group ℤ/p with element k labeled `k`.
    pub fn cyclic(p: usize) -> Result<Self> {
        if p < 2 {
            bail!(InvalidParameter, "cyclic group needs p >= 2, got {p}");
        }
        let labels = (0..p).map(|k| k.to_string()).collect();
        let mut g = Self::from_fn(&format!("Z{p}"), p, |a, b| (a + b) % p, labels)?;
        g.generators.insert("1".into(), 1);
        Ok(g)
    }

    /// The dihedral group of order 2p; h^e x^i is stored at index e*p + i.
    pub fn dihedral(p: usize) -> Result<Self> {
        if p < 3 {
            bail!(InvalidParameter, "dihedral group needs p >= 3, got {p}");
        }
        let labels = (0..2 * p)
            .map(|g| {
                let (e, i) = (g / p, g % p);
                match (e, i) {
                    (0, 0) => "1".to_string(),
                    (0, 1) => "x".to_string(),
                    (0, _) => format!("x{i}"),
                    (_, 0) => "h".to_string(),
                    (_, 1) => "hx".to_string(),
                    (_, _) => format!("hx{i}"),
                }
            })
            .collect();
        // (h^e1 x^i)(h^e2 x^j) = h^(e1+e2) x^(±i + j), sign − when e2 = 1
        let mul = |a: usize, b: usize| {
            let (e1, i) = (a / p, a % p);
            let (e2, j) = (b / p, b % p);
            let i = if e2 == 1 { (p - i) % p } else { i };
            ((e1 + e2) % 2) * p + (i + j) % p
        };
        let mut g = Self::from_fn(&format!("D{}", 2 * p), 2 * p, mul, labels)?;
        g.generators.insert("h".into(), p);
        g.generators.insert("x".into(), 1);
        Ok(g)
    }

    /// The symmetric group on `n` letters, elements in lexicographic order of
    /// their image lists; composition is "apply left factor first".
    pub fn symmetric(n: usize) -> Result<Self> {
        if n == 0 || n > 6 {
            bail!(InvalidParameter, "symmetric group supported for 1 <= n <= 6, got {n}");
        }
        let perms = permutations(n);
        let index: BTreeMap<Vec<usize>, usize> = perms.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let labels = perms
            .iter()
            .map(|p| p.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(""))
            .collect();
        let table = perms
            .iter()
            .map(|a| perms.iter().map(|b| index[&a.iter().map(|&k| b[k]).collect::<Vec<_>>()]).collect())
            .collect();
        Self::from_table(&format!("S{n}"), table, Some(labels))
    }

    /// Direct product; (a, b) is stored at index a * |H| + b.
    pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> Result<Self> {
        let m = h.order;
        let n = g.order * m;
        if n > MAX_GROUP_ORDER {
            bail!(ResourceLimit, "group order {n} exceeds cap {MAX_GROUP_ORDER}");
        }
        let labels = (0..n).map(|k| format!("({},{})", g.label(k / m), h.label(k % m))).collect();
        Self::from_fn(
            &format!("{}x{}", g.name, h.name),
            n,
            |a, b| g.mul(a / m, b / m) * m + h.mul(a % m, b % m),
            labels,
        )
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn id(&self) -> usize {
        self.id
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    /// a⁻¹ b a
    #[inline]
    pub fn conj(&self, b: usize, a: usize) -> usize {
        self.mul(self.mul(self.inv(a), b), a)
    }

    pub fn pow(&self, g: usize, k: i64) -> usize {
        let base = if k < 0 { self.inv(g) } else { g };
        let mut acc = self.id;
        for _ in 0..k.unsigned_abs() {
            acc = self.mul(acc, base);
        }
        acc
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut k = 1;
        let mut acc = g;
        while acc != self.id {
            acc = self.mul(acc, g);
            k += 1;
        }
        k
    }

    pub fn label(&self, g: usize) -> &str {
        &self.labels[g]
    }

    /// Looks an element up by label (`x^2` is accepted for `x2`).
    pub fn element_by_label(&self, label: &str) -> Option<usize> {
        let clean: String = label.chars().filter(|c| *c != '^').collect();
        self.labels.iter().position(|l| *l == clean).or_else(|| self.generators.get(&clean).copied())
    }

    pub fn generator(&self, name: &str) -> Option<usize> {
        self.generators.get(name).copied()
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn is_abelian(&self) -> bool {
        self.is_abelian_subset(&self.elements().collect::<Vec<_>>())
    }

    pub fn is_abelian_subset(&self, elems: &[usize]) -> bool {
        elems.iter().all(|&a| elems.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    /// First triple violating associativity, if any.
    pub fn associativity_counterexample(&self) -> Option<(usize, usize, usize)> {
        let n = self.order;
        crate::par::find_first(n, |a| {
            for b in 0..n {
                let ab = self.mul(a, b);
                for c in 0..n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Some((a, b, c));
                    }
                }
            }
            None
        })
    }

    /// Checks associativity, identity and inverse axioms exhaustively.
    pub fn axioms_hold(&self) -> bool {
        self.associativity_counterexample().is_none()
            && self.elements().all(|g| {
                self.mul(self.id, g) == g
                    && self.mul(g, self.id) == g
                    && self.mul(g, self.inv(g)) == self.id
                    && self.mul(self.inv(g), g) == self.id
            })
    }

    /// Z(h) = { g : gh = hg }, with a cyclic decomposition when abelian.
    pub fn centralizer(&self, h: usize) -> Centralizer {
        let elements: Vec<usize> = self.elements().filter(|&g| self.mul(g, h) == self.mul(h, g)).collect();
        let abelian = self.is_abelian_subset(&elements);
        let presentation = abelian.then(|| AbelianSubgroup::new(self, &elements));
        Centralizer { elements, abelian, presentation }
    }

    /// { g⁻¹ h g }, sorted by index.
    pub fn conjugacy_class(&self, h: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self.elements().map(|g| self.conj(h, g)).collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                rec(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_examples() {
        let z5 = FiniteGroup::cyclic(5).unwrap();
        assert_eq!(z5.mul(3, 4), 2);
        let z3 = FiniteGroup::cyclic(3).unwrap();
        assert_eq!(z3.inv(2), 1);
        assert!(matches!(FiniteGroup::cyclic(1), Err(crate::Error::InvalidParameter(_))));
    }

    #[test]
    fn dihedral_examples() {
        let d6 = FiniteGroup::dihedral(3).unwrap();
        assert_eq!(d6.order(), 6);
        let d10 = FiniteGroup::dihedral(5).unwrap();
        let hx2 = d10.element_by_label("hx2").unwrap();
        let hx3 = d10.element_by_label("hx^3").unwrap();
        assert_eq!(d10.mul(hx2, hx3), d10.element_by_label("x").unwrap());
        assert_eq!(d10.inv(hx2), hx2);
        let (h, x) = (d10.generator("h").unwrap(), d10.generator("x").unwrap());
        assert_eq!(d10.pow(h, 2), d10.id());
        assert_eq!(d10.pow(x, 5), d10.id());
        assert_eq!(d10.mul(d10.mul(h, x), d10.mul(h, x)), d10.id());
        assert!(FiniteGroup::dihedral(2).is_err());
    }

    #[test]
    fn centralizers_and_classes() {
        let d6 = FiniteGroup::dihedral(3).unwrap();
        let h = d6.generator("h").unwrap();
        assert_eq!(d6.centralizer(h).elements, vec![0, h]);
        assert_eq!(d6.conjugacy_class(h), vec![3, 4, 5]);
        assert_eq!(d6.conjugacy_class(d6.id()), vec![d6.id()]);
        let d10 = FiniteGroup::dihedral(5).unwrap();
        assert_eq!(d10.centralizer(1).elements, vec![0, 1, 2, 3, 4]);
        assert_eq!(d10.conjugacy_class(5), vec![5, 6, 7, 8, 9]);
        let z5 = FiniteGroup::cyclic(5).unwrap();
        assert_eq!(z5.centralizer(2).elements.len(), 5);
    }

    #[test]
    fn symmetric_and_products() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        assert_eq!(s3.order(), 6);
        assert!(!s3.is_abelian());
        let p = FiniteGroup::direct_product(&s3, &s3).unwrap();
        assert!(p.axioms_hold());
        // (transposition, 1) commutes with {1,t} x S3, which is non-abelian
        let t = s3.element_by_label("102").unwrap();
        let c = p.centralizer(t * 6 + s3.id());
        assert_eq!(c.elements.len(), 12);
        assert!(!c.abelian && c.presentation.is_none());
    }

    #[test]
    fn rejects_bad_tables() {
        let bad = vec![vec![0, 1], vec![1, 1]];
        assert!(FiniteGroup::from_table("bad", bad, None).is_err());
    }
}
