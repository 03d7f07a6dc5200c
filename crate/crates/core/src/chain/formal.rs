//! Integer formal sums of labeled tuples.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{bail, Error, Result};

/// Which complex a chain lives in; fixes how labels are read.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ComplexKind {
    /// [g₁|…|g_n]
    GroupInhom,
    /// (g₀,…,g_n)
    GroupHom,
    /// (y; x₁,…,x_n), no normalization
    Rack,
    /// (y; x₁,…,x_n), degenerate tuples killed
    Quandle,
    /// (x₀,…,x_n)
    Delta,
}

/// Coefficient slot of rack/quandle chains.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Coefficients {
    /// Y = {*}: labels are (x₁,…,x_n).
    #[default]
    Trivial,
    /// Y = X: labels are (y, x₁,…,x_n).
    Set,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormalChain {
    kind: ComplexKind,
    coefficients: Coefficients,
    degree: usize,
    terms: BTreeMap<Vec<usize>, i64>,
}

impl FormalChain {
    pub fn new(kind: ComplexKind, degree: usize) -> Self {
        Self::with_coefficients(kind, Coefficients::Trivial, degree)
    }

    pub fn with_coefficients(kind: ComplexKind, coefficients: Coefficients, degree: usize) -> Self {
        let coefficients = match kind {
            ComplexKind::Rack | ComplexKind::Quandle => coefficients,
            _ => Coefficients::Trivial,
        };
        FormalChain { kind, coefficients, degree, terms: BTreeMap::new() }
    }

    /// Expected tuple length for a given complex and degree.
    pub fn label_len(kind: ComplexKind, coefficients: Coefficients, degree: usize) -> usize {
        match kind {
            ComplexKind::GroupInhom => degree,
            ComplexKind::GroupHom | ComplexKind::Delta => degree + 1,
            ComplexKind::Rack | ComplexKind::Quandle => match coefficients {
                Coefficients::Trivial => degree,
                Coefficients::Set => degree + 1,
            },
        }
    }

    pub fn from_terms(
        kind: ComplexKind,
        coefficients: Coefficients,
        degree: usize,
        terms: impl IntoIterator<Item = (i64, Vec<usize>)>,
    ) -> Result<Self> {
        let mut c = Self::with_coefficients(kind, coefficients, degree);
        for (coef, label) in terms {
            c.try_add_term(label, coef)?;
        }
        Ok(c)
    }

    /// An empty chain of the same complex and degree.
    pub fn empty_like(&self) -> Self {
        Self::with_coefficients(self.kind, self.coefficients, self.degree)
    }

    pub fn kind(&self) -> ComplexKind {
        self.kind
    }

    pub fn coefficients(&self) -> Coefficients {
        self.coefficients
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn expected_label_len(&self) -> usize {
        Self::label_len(self.kind, self.coefficients, self.degree)
    }

    pub fn try_add_term(&mut self, label: Vec<usize>, coef: i64) -> Result<()> {
        if label.len() != self.expected_label_len() {
            bail!(
                InvalidParameter,
                "label {label:?} has length {} but a degree-{} {:?} chain needs {}",
                label.len(),
                self.degree,
                self.kind,
                self.expected_label_len()
            );
        }
        self.add_term(label, coef);
        Ok(())
    }

    /// Adds `coef · label`, combining and dropping zeros.
    pub fn add_term(&mut self, label: Vec<usize>, coef: i64) {
        debug_assert_eq!(label.len(), self.expected_label_len());
        if coef == 0 {
            return;
        }
        match self.terms.get_mut(&label) {
            Some(c) => {
                *c += coef;
                if *c == 0 {
                    self.terms.remove(&label);
                }
            }
            None => {
                self.terms.insert(label, coef);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, i64)> {
        self.terms.iter().map(|(l, &c)| (l, c))
    }

    pub fn coefficient(&self, label: &[usize]) -> i64 {
        self.terms.get(label).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn check_compatible(&self, other: &Self) {
        assert!(
            self.kind == other.kind && self.coefficients == other.coefficients && self.degree == other.degree,
            "incompatible chains"
        );
    }

    pub fn add_assign_scaled(&mut self, other: &Self, k: i64) {
        self.check_compatible(other);
        for (l, c) in other.terms() {
            self.add_term(l.clone(), c * k);
        }
    }

    pub fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign_scaled(other, 1);
        out
    }

    pub fn minus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign_scaled(other, -1);
        out
    }

    pub fn scaled(&self, k: i64) -> Self {
        let mut out = self.empty_like();
        out.add_assign_scaled(self, k);
        out
    }

    /// Relabels every term (terms landing on the same label are combined).
    pub fn map_labels(&self, mut f: impl FnMut(&[usize]) -> Vec<usize>) -> Self {
        let mut out = self.empty_like();
        for (l, c) in self.terms() {
            out.add_term(f(l), c);
        }
        out
    }

    /// Keeps only terms satisfying `keep`.
    pub fn filter(&self, mut keep: impl FnMut(&[usize]) -> bool) -> Self {
        let mut out = self.empty_like();
        for (l, c) in self.terms() {
            if keep(l) {
                out.add_term(l.clone(), c);
            }
        }
        out
    }

    /// Reinterprets the chain in another complex with the same label shape.
    pub fn retagged(&self, kind: ComplexKind) -> Self {
        let mut out = Self::with_coefficients(kind, self.coefficients, self.degree);
        assert_eq!(out.expected_label_len(), self.expected_label_len(), "label shapes differ");
        out.terms = self.terms.clone();
        out
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self.terms().map(|(l, c)| json!({"coef": c, "label": l})).collect();
        json!({
            "schema": 1,
            "complex": self.kind,
            "coefficients": self.coefficients,
            "degree": self.degree,
            "terms": terms,
        })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let field = |name: &str| v.get(name).cloned().ok_or_else(|| Error::Parse(format!("chain JSON lacks `{name}`")));
        let kind: ComplexKind = serde_json::from_value(field("complex")?).map_err(|e| Error::Parse(e.to_string()))?;
        let coefficients: Coefficients = match v.get("coefficients") {
            Some(c) => serde_json::from_value(c.clone()).map_err(|e| Error::Parse(e.to_string()))?,
            None => Coefficients::Trivial,
        };
        let degree = field("degree")?.as_u64().ok_or_else(|| Error::Parse("degree must be an integer".into()))? as usize;
        #[derive(Deserialize)]
        struct Term {
            coef: i64,
            label: Vec<usize>,
        }
        let terms: Vec<Term> = serde_json::from_value(field("terms")?).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_terms(kind, coefficients, degree, terms.into_iter().map(|t| (t.coef, t.label)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn combining_and_json() {
        let mut c = FormalChain::new(ComplexKind::GroupInhom, 2);
        c.add_term(vec![1, 2], 3);
        c.add_term(vec![1, 2], -3);
        assert!(c.is_zero());
        c.add_term(vec![2, 1], 2);
        assert!(c.try_add_term(vec![1], 1).is_err());
        let back = FormalChain::from_json(&c.to_json()).unwrap();
        assert_eq!(back, c);
    }
}
