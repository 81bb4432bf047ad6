#![allow(dead_code)]

use std::collections::BTreeMap;

use equichoose::{Color, Coloring, KAssignment};
use rand::seq::index::sample;
use rand::Rng;

pub fn random_list<R: Rng>(rng: &mut R, k: usize, universe: usize) -> Vec<Color> {
    sample(rng, universe, k).into_iter().map(|c| Color(c as u32)).collect()
}

pub fn random_assignment<R: Rng>(rng: &mut R, n: usize, m: usize, k: usize, universe: usize) -> KAssignment {
    let up = (0..n).map(|_| random_list(rng, k, universe)).collect();
    let a = (0..m).map(|_| random_list(rng, k, universe)).collect();
    KAssignment::new(k, up, a).unwrap()
}

/// `K_{2,m}` with disjoint lists on side A'. With `universe = 2k` the second
/// list is the complement of the first.
pub fn random_disjoint_k2m<R: Rng>(rng: &mut R, m: usize, k: usize, universe: usize) -> KAssignment {
    assert!(universe >= 2 * k);
    let perm = sample(rng, universe, 2 * k).into_vec();
    let first = perm[..k].iter().map(|&c| Color(c as u32)).collect();
    let second = perm[k..].iter().map(|&c| Color(c as u32)).collect();
    let a = (0..m).map(|_| random_list(rng, k, universe)).collect();
    KAssignment::new(k, vec![first, second], a).unwrap()
}

/// `K_{2,m}` with disjoint lists on A' where every list on A takes about
/// half its colors from each of them, maximising pair co-occurrence.
pub fn adversarial_k2m<R: Rng>(rng: &mut R, m: usize, k: usize) -> KAssignment {
    let first: Vec<Color> = (0..k as u32).map(Color).collect();
    let second: Vec<Color> = (k as u32..2 * k as u32).map(Color).collect();
    let a = (0..m)
        .map(|_| {
            let from_first = k / 2 + rng.gen_range(0..=k % 2);
            let mut l: Vec<Color> = sample(rng, k, from_first).into_iter().map(|i| first[i]).collect();
            l.extend(sample(rng, k, k - from_first).into_iter().map(|i| second[i]));
            l
        })
        .collect();
    KAssignment::new(k, vec![first, second], a).unwrap()
}

pub fn class_sizes(coloring: &Coloring) -> BTreeMap<Color, usize> {
    let mut sizes = BTreeMap::new();
    for &c in coloring.colors_uprime.iter().chain(&coloring.colors_a) {
        *sizes.entry(c).or_default() += 1;
    }
    sizes
}
