//! Elements of the group ring ℤ[A] for a finite abelian group A.

use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Map, Value};

use super::abelian::{AbelianElem, AbelianPresentation};

/// A finitely supported map A → ℤ; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupRingValue {
    group: AbelianPresentation,
    coeffs: BTreeMap<AbelianElem, i64>,
}

impl GroupRingValue {
    pub fn zero(group: AbelianPresentation) -> Self {
        GroupRingValue { group, coeffs: BTreeMap::new() }
    }

    /// Σ coeff·t^exp in ℤ[ℤ/m], exponents reduced mod m.
    pub fn from_exponents(m: u64, terms: impl IntoIterator<Item = (i64, i64)>) -> Self {
        let group = AbelianPresentation::cyclic(m);
        let mut v = Self::zero(group.clone());
        for (e, c) in terms {
            v.add_term(group.from_ints(&[e]), c);
        }
        v
    }

    pub fn group(&self) -> &AbelianPresentation {
        &self.group
    }

    pub fn add_term(&mut self, elem: AbelianElem, coeff: i64) {
        debug_assert!(self.group.is_valid(&elem));
        if coeff == 0 {
            return;
        }
        let c = self.coeffs.get(&elem).copied().unwrap_or(0) + coeff;
        if c == 0 {
            self.coeffs.remove(&elem);
        } else {
            self.coeffs.insert(elem, c);
        }
    }

    pub fn coefficient(&self, elem: &[u64]) -> i64 {
        self.coeffs.get(elem).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&AbelianElem, i64)> {
        self.coeffs.iter().map(|(k, &v)| (k, v))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Augmentation: the sum of all coefficients.
    pub fn total(&self) -> i64 {
        self.coeffs.values().sum()
    }

    pub fn scaled(&self, k: i64) -> Self {
        let mut out = Self::zero(self.group.clone());
        for (e, c) in &self.coeffs {
            out.add_term(e.clone(), c * k);
        }
        out
    }

    /// Coefficient-wise exact division; `None` if some coefficient is not divisible.
    pub fn exact_div(&self, k: i64) -> Option<Self> {
        if k == 0 || self.coeffs.values().any(|c| c % k != 0) {
            return None;
        }
        let mut out = Self::zero(self.group.clone());
        for (e, c) in &self.coeffs {
            out.add_term(e.clone(), c / k);
        }
        Some(out)
    }

    pub fn sum(&self, other: &Self) -> Self {
        assert_eq!(self.group, other.group, "group ring values over different groups");
        let mut out = self.clone();
        for (e, c) in &other.coeffs {
            out.add_term(e.clone(), *c);
        }
        out
    }

    fn key(&self, e: &[u64]) -> String {
        e.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
    }

    /// `{"0": n0, "2": n2, ...}`, keys ordered by element.
    pub fn values_json(&self) -> Value {
        let mut m = Map::new();
        for (e, c) in &self.coeffs {
            m.insert(self.key(e), json!(c));
        }
        Value::Object(m)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "group": self.group.moduli(),
            "values": self.values_json(),
            "polynomial": self.to_string(),
        })
    }
}

impl fmt::Display for GroupRingValue {
    /// Renders as a polynomial in t (t₁, t₂, … for several cyclic factors).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let single = self.group.rank() <= 1;
        for (n, (e, &c)) in self.coeffs.iter().enumerate() {
            let monomial: String = e
                .iter()
                .enumerate()
                .filter(|(_, &x)| x != 0)
                .map(|(i, &x)| {
                    let var = if single { "t".to_string() } else { format!("t{}", i + 1) };
                    if x == 1 {
                        var
                    } else {
                        format!("{var}^{x}")
                    }
                })
                .collect::<Vec<_>>()
                .join(" ");
            let sign = if c < 0 { "-" } else { "+" };
            if n == 0 {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let a = c.unsigned_abs();
            match (monomial.is_empty(), a) {
                (true, _) => write!(f, "{a}")?,
                (false, 1) => write!(f, "{monomial}")?,
                (false, _) => write!(f, "{a}{monomial}")?,
            }
        }
        Ok(())
    }
}
