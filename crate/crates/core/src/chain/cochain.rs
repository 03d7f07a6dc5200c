//! Dense cochain tables, coboundaries and coboundary solving.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use super::formal::FormalChain;
use super::group::sign;
use crate::algebra::{solve_linear_over_abelian, AbelianElem, AbelianPresentation, FiniteGroup, IntMatrix};
use crate::error::{bail, Error, Result};
use crate::limits::max_matrix_entries;
use crate::par;
use crate::quandle::FiniteQuandle;

/// How the arguments of a cochain are read.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CochainDomain {
    /// f[g₁|…|g_n]
    GroupInhom,
    /// f(g₀,…,g_n)
    GroupHom,
    /// f(x₁,…,x_n) on the quandle complex with trivial coefficients
    Quandle,
    /// f(x₀,…,x_n)
    Delta,
}

impl CochainDomain {
    pub fn arity(self, degree: usize) -> usize {
        match self {
            CochainDomain::GroupInhom | CochainDomain::Quandle => degree,
            CochainDomain::GroupHom | CochainDomain::Delta => degree + 1,
        }
    }
}

/// The structure a coboundary is taken over.
#[derive(Clone, Copy, Debug)]
pub enum Complex<'a> {
    Group(&'a FiniteGroup),
    Quandle(&'a FiniteQuandle),
    /// Δ cochains only need the size of the underlying set.
    Delta(usize),
}

impl Complex<'_> {
    fn base(&self) -> usize {
        match self {
            Complex::Group(g) => g.order(),
            Complex::Quandle(q) => q.order(),
            Complex::Delta(n) => *n,
        }
    }
}

/// A cochain stored as a dense table indexed lexicographically by argument tuple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CochainTable {
    domain: CochainDomain,
    degree: usize,
    base: usize,
    values: AbelianPresentation,
    table: Vec<u64>,
    kind: String,
}

fn tuple_count(base: usize, arity: usize) -> Result<usize> {
    let mut n: usize = 1;
    for _ in 0..arity {
        n = n.checked_mul(base).ok_or_else(|| Error::ResourceLimit("cochain table size overflows".into()))?;
    }
    if n > max_matrix_entries().max(1 << 24) {
        bail!(ResourceLimit, "cochain table with {n} entries exceeds the size cap");
    }
    Ok(n)
}

/// The tuple at a lexicographic index.
pub fn tuple_at(mut idx: usize, base: usize, arity: usize) -> Vec<usize> {
    let mut t = vec![0; arity];
    for slot in t.iter_mut().rev() {
        *slot = idx % base;
        idx /= base;
    }
    t
}

impl CochainTable {
    /// Tabulates `f` on every argument tuple; values are reduced into `values`.
    pub fn from_fn<F>(
        domain: CochainDomain,
        degree: usize,
        base: usize,
        values: AbelianPresentation,
        kind: &str,
        f: F,
    ) -> Result<Self>
    where
        F: Fn(&[usize]) -> Vec<i64> + Sync + Send,
    {
        let arity = domain.arity(degree);
        let count = tuple_count(base, arity)?;
        let rank = values.rank();
        let rows = par::map_range(count, |i| {
            let v = f(&tuple_at(i, base, arity));
            values.from_ints(&v)
        });
        let mut table = Vec::with_capacity(count * rank);
        for r in rows {
            table.extend(r);
        }
        Ok(CochainTable { domain, degree, base, values, table, kind: kind.to_string() })
    }

    /// ℤ/m-valued table from an integer-valued function.
    pub fn from_fn_mod<F>(domain: CochainDomain, degree: usize, base: usize, m: u64, kind: &str, f: F) -> Result<Self>
    where
        F: Fn(&[usize]) -> i64 + Sync + Send,
    {
        Self::from_fn(domain, degree, base, AbelianPresentation::cyclic(m), kind, |t| vec![f(t)])
    }

    pub fn zero(domain: CochainDomain, degree: usize, base: usize, values: AbelianPresentation) -> Result<Self> {
        let count = tuple_count(base, domain.arity(degree))?;
        let table = vec![0; count * values.rank()];
        Ok(CochainTable { domain, degree, base, values, table, kind: "zero".into() })
    }

    pub fn domain(&self) -> CochainDomain {
        self.domain
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn base(&self) -> usize {
        self.base
    }

    pub fn arity(&self) -> usize {
        self.domain.arity(self.degree)
    }

    pub fn values(&self) -> &AbelianPresentation {
        &self.values
    }

    pub fn kind(&self) -> &str {
        &self.kind
    }

    pub fn with_kind(mut self, kind: &str) -> Self {
        self.kind = kind.to_string();
        self
    }

    pub fn len(&self) -> usize {
        tuple_count(self.base, self.arity()).unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn index(&self, t: &[usize]) -> usize {
        debug_assert_eq!(t.len(), self.arity());
        t.iter().fold(0, |acc, &x| acc * self.base + x)
    }

    pub fn get(&self, t: &[usize]) -> &[u64] {
        let r = self.values.rank();
        let i = self.index(t) * r;
        &self.table[i..i + r]
    }

    /// Value in ℤ/m for cyclic value groups (0 for the trivial group).
    pub fn get_mod(&self, t: &[usize]) -> u64 {
        self.get(t).first().copied().unwrap_or(0)
    }

    pub fn modulus(&self) -> Option<u64> {
        self.values.as_cyclic()
    }

    pub fn is_zero(&self) -> bool {
        self.table.iter().all(|&v| v == 0)
    }

    /// Σ coef · f(label) over a chain whose labels are argument tuples.
    pub fn evaluate_chain(&self, chain: &FormalChain) -> Result<AbelianElem> {
        if chain.expected_label_len() != self.arity() {
            bail!(
                InvalidParameter,
                "chain labels have length {} but the cochain takes {} arguments",
                chain.expected_label_len(),
                self.arity()
            );
        }
        let mut acc = self.values.zero();
        for (l, c) in chain.terms() {
            if let Some(&bad) = l.iter().find(|&&x| x >= self.base) {
                bail!(InvalidParameter, "label entry {bad} out of range");
            }
            acc = self.values.add(&acc, &self.values.scale(self.get(l), c));
        }
        Ok(acc)
    }

    /// Pointwise linear combination Σ kᵢ fᵢ of tables of identical shape.
    pub fn combination(parts: &[(i64, &CochainTable)], kind: &str) -> Result<Self> {
        let Some((_, first)) = parts.first() else { bail!(InvalidParameter, "empty combination") };
        for (_, f) in parts {
            if f.domain != first.domain || f.degree != first.degree || f.base != first.base || f.values != first.values {
                bail!(InvalidParameter, "cochains of different shapes cannot be combined");
            }
        }
        let mut out = (*first).clone().with_kind(kind);
        let r = out.values.rank();
        for i in 0..out.table.len() / r.max(1) {
            let mut acc = out.values.zero();
            for (k, f) in parts {
                acc = out.values.add(&acc, &out.values.scale(&f.table[i * r..(i + 1) * r], *k));
            }
            out.table[i * r..(i + 1) * r].copy_from_slice(&acc);
        }
        Ok(out)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "schema": 1,
            "domain": self.domain,
            "degree": self.degree,
            "base": self.base,
            "values": self.values.moduli(),
            "kind": self.kind,
            "table": self.table,
        })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        #[derive(Deserialize)]
        struct Raw {
            domain: CochainDomain,
            degree: usize,
            base: usize,
            values: Vec<u64>,
            #[serde(default)]
            kind: String,
            table: Vec<u64>,
        }
        let raw: Raw = serde_json::from_value(v.clone()).map_err(|e| Error::Parse(format!("cochain JSON: {e}")))?;
        let values = AbelianPresentation::new(raw.values);
        let count = tuple_count(raw.base, raw.domain.arity(raw.degree))?;
        if raw.table.len() != count * values.rank() {
            bail!(Parse, "cochain table has {} entries, expected {}", raw.table.len(), count * values.rank());
        }
        for (i, chunk) in raw.table.chunks(values.rank().max(1)).enumerate() {
            if values.rank() > 0 && !values.is_valid(chunk) {
                bail!(Parse, "cochain entry {i} is not a reduced residue vector");
            }
        }
        Ok(CochainTable { domain: raw.domain, degree: raw.degree, base: raw.base, values, table: raw.table, kind: raw.kind })
    }
}

/// (δf)(t) = Σ sign · f(args) over the returned pairs; `t` has the arity of
/// degree n+1 and each `args` the arity of degree n.
fn delta_terms(domain: CochainDomain, cx: &Complex, t: &[usize]) -> Vec<(i64, Vec<usize>)> {
    let mut out = Vec::new();
    match domain {
        CochainDomain::GroupInhom => {
            let Complex::Group(g) = cx else { unreachable!("checked by caller") };
            let k = t.len();
            if k == 0 {
                return out;
            }
            out.push((1, t[1..].to_vec()));
            for i in 0..k - 1 {
                let mut s = Vec::with_capacity(k - 1);
                s.extend_from_slice(&t[..i]);
                s.push(g.mul(t[i], t[i + 1]));
                s.extend_from_slice(&t[i + 2..]);
                out.push((sign(i + 1), s));
            }
            out.push((sign(k), t[..k - 1].to_vec()));
        }
        CochainDomain::GroupHom | CochainDomain::Delta => {
            for i in 0..t.len() {
                let mut s = t.to_vec();
                s.remove(i);
                out.push((sign(i), s));
            }
        }
        CochainDomain::Quandle => {
            let Complex::Quandle(q) = cx else { unreachable!("checked by caller") };
            for i in 1..=t.len() {
                let xi = t[i - 1];
                let mut face = t.to_vec();
                face.remove(i - 1);
                out.push((sign(i), face));
                let mut acted: Vec<usize> = t[..i - 1].iter().map(|&x| q.op(x, xi)).collect();
                acted.extend_from_slice(&t[i..]);
                out.push((-sign(i), acted));
            }
        }
    }
    out
}

fn check_complex(domain: CochainDomain, base: usize, cx: &Complex) -> Result<()> {
    let ok = matches!(
        (domain, cx),
        (CochainDomain::GroupInhom | CochainDomain::GroupHom, Complex::Group(_))
            | (CochainDomain::Quandle, Complex::Quandle(_))
            | (CochainDomain::Delta, _)
    );
    if !ok {
        bail!(InvalidParameter, "a {domain:?} cochain cannot be differentiated over {cx:?}");
    }
    if cx.base() != base {
        bail!(InvalidParameter, "cochain is defined on {base} elements but the complex has {}", cx.base());
    }
    Ok(())
}

fn delta_value(f: &CochainTable, cx: &Complex, t: &[usize]) -> AbelianElem {
    let v = &f.values;
    let mut acc = v.zero();
    for (s, args) in delta_terms(f.domain, cx, t) {
        let x = f.get(&args);
        acc = if s > 0 { v.add(&acc, x) } else { v.sub(&acc, x) };
    }
    acc
}

/// δf as a table of degree n+1.
pub fn coboundary(f: &CochainTable, cx: &Complex) -> Result<CochainTable> {
    check_complex(f.domain, f.base, cx)?;
    CochainTable::from_fn(f.domain, f.degree + 1, f.base, f.values.clone(), &format!("d({})", f.kind), |t| {
        delta_value(f, cx, t).into_iter().map(|x| x as i64).collect()
    })
}

/// True iff δf vanishes on every tuple.
pub fn is_cocycle(f: &CochainTable, cx: &Complex) -> Result<bool> {
    check_complex(f.domain, f.base, cx)?;
    let arity = f.domain.arity(f.degree + 1);
    let count = tuple_count(f.base, arity)?;
    let chunk = f.base.max(1);
    Ok(par::all(count.div_ceil(chunk), |c| {
        (c * chunk..((c + 1) * chunk).min(count)).all(|i| f.values.is_zero(&delta_value(f, cx, &tuple_at(i, f.base, arity))))
    }))
}

/// True iff the tuple lies in the degenerate subcomplex.
pub fn is_degenerate(domain: CochainDomain, cx: &Complex, t: &[usize]) -> bool {
    match (domain, cx) {
        (CochainDomain::GroupInhom, Complex::Group(g)) => t.contains(&g.id()),
        _ => t.windows(2).any(|w| w[0] == w[1]),
    }
}

/// True iff f vanishes on all degenerate tuples.
pub fn is_normalized(f: &CochainTable, cx: &Complex) -> bool {
    (0..f.len()).all(|i| {
        let t = tuple_at(i, f.base, f.arity());
        !is_degenerate(f.domain, cx, &t) || f.values.is_zero(f.get(&t))
    })
}

/// Homogeneous f ↦ F[g₁|…|g_n] = f(1, g₁, g₁g₂, …).
pub fn hom_to_inhom_cochain(f: &CochainTable, g: &FiniteGroup) -> Result<CochainTable> {
    if f.domain != CochainDomain::GroupHom {
        bail!(InvalidParameter, "expected a homogeneous cochain");
    }
    CochainTable::from_fn(CochainDomain::GroupInhom, f.degree, f.base, f.values.clone(), &f.kind, |t| {
        let mut args = Vec::with_capacity(t.len() + 1);
        let mut acc = g.id();
        args.push(acc);
        for &x in t {
            acc = g.mul(acc, x);
            args.push(acc);
        }
        f.get(&args).iter().map(|&x| x as i64).collect()
    })
}

/// Inhomogeneous F ↦ f(g₀,…,g_n) = F[g₀⁻¹g₁|…|g_{n−1}⁻¹g_n].
pub fn inhom_to_hom_cochain(f: &CochainTable, g: &FiniteGroup) -> Result<CochainTable> {
    if f.domain != CochainDomain::GroupInhom {
        bail!(InvalidParameter, "expected an inhomogeneous cochain");
    }
    CochainTable::from_fn(CochainDomain::GroupHom, f.degree, f.base, f.values.clone(), &f.kind, |t| {
        let args: Vec<usize> = t.windows(2).map(|w| g.mul(g.inv(w[0]), w[1])).collect();
        f.get(&args).iter().map(|&x| x as i64).collect()
    })
}

/// Solves δg = f; returns a witness g (of degree n − 1) or `None`.
///
/// Normalized f are solved on the normalized subcomplex. Homogeneous group
/// cochains are solved in inhomogeneous form (f must be left-invariant) and
/// the witness is converted back.
pub fn is_coboundary(f: &CochainTable, cx: &Complex) -> Result<Option<CochainTable>> {
    check_complex(f.domain, f.base, cx)?;
    if f.degree == 0 {
        bail!(InvalidParameter, "degree-0 cochains have no coboundary equation");
    }
    if f.domain == CochainDomain::GroupHom {
        let Complex::Group(g) = cx else { unreachable!() };
        let inhom = hom_to_inhom_cochain(f, g)?;
        if inhom_to_hom_cochain(&inhom, g)? != *f {
            bail!(InvalidInput, "homogeneous cochain is not left-invariant");
        }
        return is_coboundary(&inhom, cx)?.map(|w| inhom_to_hom_cochain(&w, g)).transpose();
    }
    let normalized = is_normalized(f, cx);
    let keep = |t: &[usize]| !normalized || !is_degenerate(f.domain, cx, t);
    let row_arity = f.arity();
    let col_arity = f.domain.arity(f.degree - 1);
    let rows: Vec<Vec<usize>> =
        (0..f.len()).map(|i| tuple_at(i, f.base, row_arity)).filter(|t| keep(t)).collect();
    let col_count = tuple_count(f.base, col_arity)?;
    let cols: Vec<Vec<usize>> = (0..col_count).map(|i| tuple_at(i, f.base, col_arity)).filter(|t| keep(t)).collect();
    if rows.len().saturating_mul(cols.len()) > max_matrix_entries() {
        bail!(ResourceLimit, "coboundary system {}x{} exceeds the size cap", rows.len(), cols.len());
    }
    let mut col_index = vec![usize::MAX; col_count];
    for (j, t) in cols.iter().enumerate() {
        col_index[t.iter().fold(0, |a, &x| a * f.base + x)] = j;
    }
    let entries = par::map_slice(&rows, |t| delta_terms(f.domain, cx, t));
    let mut a = IntMatrix::zeros(rows.len(), cols.len());
    for (i, terms) in entries.iter().enumerate() {
        for (s, args) in terms {
            let j = col_index[args.iter().fold(0, |a, &x| a * f.base + x)];
            if j != usize::MAX {
                a.add_to(i, j, *s);
            }
        }
    }
    let rhs: Vec<AbelianElem> = rows.iter().map(|t| f.get(t).to_vec()).collect();
    let Some(sol) = solve_linear_over_abelian(&a, &rhs, &f.values)? else { return Ok(None) };
    let mut w = CochainTable::zero(f.domain, f.degree - 1, f.base, f.values.clone())?;
    let r = w.values.rank();
    for (t, v) in cols.iter().zip(sol) {
        let i = w.index(t) * r;
        w.table[i..i + r].copy_from_slice(&v);
    }
    let w = w.with_kind(&format!("witness({})", f.kind));
    if coboundary(&w, cx)?.table != f.table {
        bail!(Internal, "coboundary witness does not reproduce the cochain");
    }
    Ok(Some(w))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_is_not_a_cocycle() {
        let z5 = FiniteGroup::cyclic(5).unwrap();
        let f = CochainTable::from_fn_mod(CochainDomain::GroupInhom, 1, 5, 5, "x^2", |t| (t[0] * t[0]) as i64).unwrap();
        assert!(!is_cocycle(&f, &Complex::Group(&z5)).unwrap());
        let id = CochainTable::from_fn_mod(CochainDomain::GroupInhom, 1, 5, 5, "x", |t| t[0] as i64).unwrap();
        assert!(is_cocycle(&id, &Complex::Group(&z5)).unwrap());
    }

    #[test]
    fn zero_is_a_coboundary() {
        let r3 = FiniteQuandle::dihedral(3).unwrap();
        let f = CochainTable::zero(CochainDomain::Quandle, 2, 3, AbelianPresentation::cyclic(3)).unwrap();
        let w = is_coboundary(&f, &Complex::Quandle(&r3)).unwrap().unwrap();
        assert!(w.is_zero());
    }

    #[test]
    fn coboundaries_are_found() {
        let z4 = FiniteGroup::cyclic(4).unwrap();
        let cx = Complex::Group(&z4);
        let g = CochainTable::from_fn_mod(CochainDomain::GroupInhom, 1, 4, 4, "g", |t| (3 * t[0] * t[0] + 1) as i64)
            .unwrap();
        let dg = coboundary(&g, &cx).unwrap();
        assert!(is_cocycle(&dg, &cx).unwrap());
        assert!(is_coboundary(&dg, &cx).unwrap().is_some());
        let hom = inhom_to_hom_cochain(&dg, &z4).unwrap();
        assert_eq!(hom_to_inhom_cochain(&hom, &z4).unwrap(), dg);
        assert!(is_coboundary(&hom, &cx).unwrap().is_some());
    }

    #[test]
    fn json_round_trip() {
        let f = CochainTable::from_fn_mod(CochainDomain::Delta, 1, 3, 3, "t", |t| (t[0] + 2 * t[1]) as i64).unwrap();
        assert_eq!(CochainTable::from_json(&f.to_json()).unwrap(), f);
    }
}
