#![allow(dead_code)]

use cactus::affine_cactus::generators;
use cactus::{CactusWord, Permutation};
use proptest::prelude::*;

pub fn word_in(n: usize, max_len: usize) -> impl Strategy<Value = CactusWord> {
    let gens = generators(n);
    prop::collection::vec(0..gens.len(), 0..=max_len)
        .prop_map(move |idx| CactusWord::new(n, idx.into_iter().map(|k| gens[k]).collect()).unwrap())
}

pub fn word(ns: std::ops::RangeInclusive<usize>, max_len: usize) -> impl Strategy<Value = CactusWord> {
    ns.prop_flat_map(move |n| word_in(n, max_len))
}

pub fn word_pair(
    ns: std::ops::RangeInclusive<usize>,
    max_len: usize,
) -> impl Strategy<Value = (CactusWord, CactusWord)> {
    ns.prop_flat_map(move |n| (word_in(n, max_len), word_in(n, max_len)))
}

pub fn permutation(ns: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Permutation> {
    ns.prop_flat_map(|n| Just((1..=n).collect::<Vec<usize>>()).prop_shuffle())
        .prop_map(|v| Permutation::from_images(v).unwrap())
}
