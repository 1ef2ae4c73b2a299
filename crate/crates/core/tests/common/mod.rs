#![allow(dead_code)]

use numsg::{GapsList, GeneratorList};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Every numerical semigroup with Frobenius number at most 14, from the
/// subset-enumeration oracle.
pub fn gaps_corpus() -> Vec<GapsList> {
    numsg_oracle::enumerate_semigroups(14)
        .into_iter()
        .map(|g| GapsList::new(g).expect("oracle semigroups are valid"))
        .collect()
}

/// Random coprime generator lists: 1 to 4 generators, each in `1..=25`.
pub fn coprime_generator_corpus(count: usize, seed: u64) -> Vec<GeneratorList> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let len = rng.gen_range(1..=4);
        let raw: Vec<u64> = (0..len).map(|_| rng.gen_range(1..=25)).collect();
        if let Ok(gens) = GeneratorList::normalize(raw, true) {
            out.push(gens);
        }
    }
    out
}

/// Nonzero members `n <= conductor + 2`.
pub fn small_nonzero_members(gaps: &GapsList) -> impl Iterator<Item = u64> + '_ {
    (1..=gaps.conductor() + 2).filter(|&n| gaps.is_member(n))
}
