#![allow(dead_code)]

use qcocycle::chain::{Coefficients, ComplexKind, FormalChain};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// A chain with a few random terms and small coefficients.
pub fn random_chain(rng: &mut StdRng, kind: ComplexKind, coefficients: Coefficients, degree: usize, base: usize) -> FormalChain {
    let mut c = FormalChain::with_coefficients(kind, coefficients, degree);
    let len = FormalChain::label_len(kind, coefficients, degree);
    for _ in 0..rng.gen_range(1..=4) {
        let label: Vec<usize> = (0..len).map(|_| rng.gen_range(0..base)).collect();
        c.add_term(label, rng.gen_range(-3..=3));
    }
    c
}
