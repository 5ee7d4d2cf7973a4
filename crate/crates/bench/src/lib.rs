//! Fixed workloads shared by the benchmarks.

use qcanon_core::algebra::exponents_of_weight;
use qcanon_core::tropical::ParamVector;
use qcanon_core::weyl::{reduced_words_w0, Root, Word};

/// The first and last reduced words for `w0` in a rank.
pub fn end_words(rank: usize) -> (Word, Word) {
    let words = reduced_words_w0(rank).expect("rank within range");
    (
        words.first().unwrap().clone(),
        words.last().unwrap().clone(),
    )
}

/// Every exponent of `weight` over `w`.
pub fn exponents(w: &Word, weight: &[i64]) -> Vec<ParamVector> {
    exponents_of_weight(&w.roots().expect("reduced word"), &Root(weight.to_vec()))
}
