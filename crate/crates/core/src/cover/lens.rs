//! Dijkgraaf–Witten sums for lens spaces and the torus-knot comparison.

use serde_json::{json, Value};

use crate::algebra::GroupRingValue;
use crate::chain::{CochainDomain, CochainTable};
use crate::cocycle::{b1, b2, cup_product, theta, ThetaVariant};
use crate::error::{bail, Result};
use crate::knot::{shadow_cocycle_invariant, torus_2p};
use crate::quandle::FiniteQuandle;

/// Both evaluations of the lens-space sum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DwResult {
    pub p: usize,
    pub q: i64,
    pub triangulation: GroupRingValue,
    /// Σ_a t^{−qa²}; the closed form for b₁∪b₂.
    pub closed_form: GroupRingValue,
}

impl DwResult {
    pub fn agree(&self) -> bool {
        self.triangulation == self.closed_form
    }

    pub fn to_json(&self) -> Value {
        json!({
            "schema": 1,
            "p": self.p,
            "q": self.q,
            "triangulation": self.triangulation.to_json(),
            "closed_form": self.closed_form.to_json(),
            "agree": self.agree(),
        })
    }
}

/// Σ_a t^{Σ_i f[a | ia+b | −qa]} for an inhomogeneous 3-cochain f of ℤ/p.
pub fn dw_lens_triangulation(p: usize, q: i64, f: &CochainTable, b: usize) -> Result<GroupRingValue> {
    if f.domain() != CochainDomain::GroupInhom || f.degree() != 3 || f.base() != p {
        bail!(InvalidParameter, "lens sums need an inhomogeneous 3-cochain of Z/{p}");
    }
    let Some(m) = f.values().as_cyclic() else { bail!(InvalidParameter, "lens sums need cyclic values") };
    let mut out = GroupRingValue::zero(f.values().clone());
    let pi = p as i64;
    for a in 0..pi {
        let c = (-q * a).rem_euclid(pi) as usize;
        let mut total = 0u64;
        for i in 0..pi {
            let u = ((i * a + b as i64).rem_euclid(pi)) as usize;
            total = (total + f.get_mod(&[a as usize, u, c])) % m;
        }
        out.add_term(vec![total], 1);
    }
    Ok(out)
}

/// The lens-space sum for f = b₁∪b₂ by both paths (b = 0).
pub fn dw_lens(p: usize, q: i64) -> Result<DwResult> {
    let f = cup_product(&b1(p)?, &b2(p)?)?;
    let triangulation = dw_lens_triangulation(p, q, &f.table, 0)?;
    let closed_form = GroupRingValue::from_exponents(p as u64, (0..p as i64).map(|a| (-q * a * a, 1)));
    Ok(DwResult { p, q, triangulation, closed_form })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comparison {
    pub p: usize,
    pub shadow: GroupRingValue,
    pub dw: GroupRingValue,
    pub constant: i64,
}

impl Comparison {
    pub fn matches(&self) -> bool {
        self.shadow == self.dw.scaled(self.constant)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "schema": 1,
            "p": self.p,
            "shadow": self.shadow.to_json(),
            "dw": self.dw.to_json(),
            "constant": self.constant,
            "match": self.matches(),
        })
    }
}

/// Shadow invariant of the (2,p)-torus knot with θ_p against p · DW(L(p,1)).
pub fn torus_lens_comparison(p: usize) -> Result<Comparison> {
    if p % 2 == 0 || p < 3 {
        bail!(InvalidParameter, "the comparison needs odd p >= 3, got {p}");
    }
    let q = FiniteQuandle::dihedral(p)?;
    let shadow = shadow_cocycle_invariant(&torus_2p(p)?, &q, &theta(p, ThetaVariant::Double)?)?;
    let dw = dw_lens(p, 1)?.triangulation;
    Ok(Comparison { p, shadow, dw, constant: p as i64 })
}
