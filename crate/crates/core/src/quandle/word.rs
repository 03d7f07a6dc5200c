//! Words in the associated group acting on a quandle.

use serde::{Deserialize, Serialize};

use super::quandle::FiniteQuandle;
use crate::error::{bail, Result};

/// x₁^ε₁ ⋯ x_n^ε_n, acting on the right: x·w = (⋯((x *^ε₁ x₁) *^ε₂ x₂)⋯).
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuandleWord(pub Vec<(usize, i8)>);

impl QuandleWord {
    pub fn new(letters: Vec<(usize, i8)>) -> Self {
        QuandleWord(letters)
    }

    pub fn inverse(&self) -> Self {
        QuandleWord(self.0.iter().rev().map(|&(x, e)| (x, -e)).collect())
    }

    pub fn apply(&self, q: &FiniteQuandle, x: usize) -> usize {
        self.0.iter().fold(x, |acc, &(y, e)| q.op_signed(acc, y, e))
    }
}

/// The permutation x ↦ x·w.
pub fn inner_action(q: &FiniteQuandle, w: &QuandleWord) -> Result<Vec<usize>> {
    if let Some(&(bad, e)) = w.0.iter().find(|&&(y, e)| y >= q.order() || (e != 1 && e != -1)) {
        bail!(InvalidParameter, "word letter ({bad}, {e}) is not valid for a quandle of order {}", q.order());
    }
    Ok(q.elements().map(|x| w.apply(q, x)).collect())
}
