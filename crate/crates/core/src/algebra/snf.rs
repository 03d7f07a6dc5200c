//! Smith normal form over ℤ.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::matrix::IntMatrix;

/// `u * m * v == d` with `u`, `v` unimodular and `d` diagonal, d₁ | d₂ | …
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl SmithForm {
    /// Diagonal entries d₁, d₂, … (length min(rows, cols)).
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.d.rows().min(self.d.cols())).map(|i| self.d.get(i, i).clone()).collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|d| !d.is_zero()).count()
    }
}

/// Full decomposition with transforms.
pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let mut d = m.clone();
    let mut u = Some(IntMatrix::identity(m.rows()));
    let mut v = Some(IntMatrix::identity(m.cols()));
    reduce(&mut d, &mut u, &mut v);
    SmithForm { u: u.unwrap(), d, v: v.unwrap() }
}

/// Nonzero invariant factors only; skips transform bookkeeping.
pub fn invariant_factors(m: &IntMatrix) -> Vec<BigInt> {
    let mut d = m.clone();
    reduce(&mut d, &mut None, &mut None);
    (0..d.rows().min(d.cols())).map(|i| d.get(i, i).clone()).filter(|x| !x.is_zero()).collect()
}

/// Nearest-integer quotient, keeping remainders small.
fn round_div(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = a.div_mod_floor(b);
    // r carries the sign of b; stepping once more halves |r| when it is large
    let twice: BigInt = &r * 2;
    if twice.abs() > b.abs() {
        q + 1
    } else {
        q
    }
}

fn reduce(a: &mut IntMatrix, u: &mut Option<IntMatrix>, v: &mut Option<IntMatrix>) {
    let (rows, cols) = (a.rows(), a.cols());
    let swap_rows = |a: &mut IntMatrix, u: &mut Option<IntMatrix>, i: usize, j: usize| {
        a.swap_rows(i, j);
        if let Some(u) = u {
            u.swap_rows(i, j);
        }
    };
    let swap_cols = |a: &mut IntMatrix, v: &mut Option<IntMatrix>, i: usize, j: usize| {
        a.swap_cols(i, j);
        if let Some(v) = v {
            v.swap_cols(i, j);
        }
    };
    let row_op = |a: &mut IntMatrix, u: &mut Option<IntMatrix>, dst: usize, src: usize, q: &BigInt| {
        a.add_row_multiple(dst, src, q);
        if let Some(u) = u {
            u.add_row_multiple(dst, src, q);
        }
    };
    let col_op = |a: &mut IntMatrix, v: &mut Option<IntMatrix>, dst: usize, src: usize, q: &BigInt| {
        a.add_col_multiple(dst, src, q);
        if let Some(v) = v {
            v.add_col_multiple(dst, src, q);
        }
    };

    for t in 0..rows.min(cols) {
        // smallest nonzero entry of the trailing block becomes the pivot
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                let x = a.get(i, j);
                if !x.is_zero() && best.map_or(true, |(bi, bj)| x.abs() < a.get(bi, bj).abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        swap_rows(a, u, t, pi);
        swap_cols(a, v, t, pj);

        loop {
            let mut clean = true;
            for i in t + 1..rows {
                if !a.get(i, t).is_zero() {
                    let q = -round_div(a.get(i, t), a.get(t, t));
                    row_op(a, u, i, t, &q);
                    clean &= a.get(i, t).is_zero();
                }
            }
            for j in t + 1..cols {
                if !a.get(t, j).is_zero() {
                    let q = -round_div(a.get(t, j), a.get(t, t));
                    col_op(a, v, j, t, &q);
                    clean &= a.get(t, j).is_zero();
                }
            }
            if !clean {
                // move the smallest remainder in row/column t onto the pivot
                let mut best = (t, t);
                for i in t + 1..rows {
                    let x = a.get(i, t);
                    if !x.is_zero() && x.abs() < a.get(best.0, best.1).abs() {
                        best = (i, t);
                    }
                }
                for j in t + 1..cols {
                    let x = a.get(t, j);
                    if !x.is_zero() && x.abs() < a.get(best.0, best.1).abs() {
                        best = (t, j);
                    }
                }
                swap_rows(a, u, t, best.0);
                swap_cols(a, v, t, best.1);
                continue;
            }
            // divisibility: fold an offending row into row t and repeat
            let p = a.get(t, t).clone();
            let offending = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !a.get(i, j).is_multiple_of(&p)));
            match offending {
                Some(i) => row_op(a, u, t, i, &BigInt::from(1)),
                None => break,
            }
        }
        if a.get(t, t).is_negative() {
            a.negate_row(t);
            if let Some(u) = u {
                u.negate_row(t);
            }
        }
    }
}
