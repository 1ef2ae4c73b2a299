//! From a finite generating set to small elements and gaps.
//!
//! Linear combinations of the generators are enumerated by walking the index
//! lists of [`crate::enumerator`]. Every combination built from index lists
//! shorter than `i` is produced before the first list of length `i`, whose
//! combination is `i * min(gens)`. Once the sorted list of combinations holds
//! `min(gens)` consecutive values starting at or below that cutoff, the start
//! of the run is the conductor.

use std::fmt;

use crate::apery::apery;
use crate::enumerator::{IndexList, LgenStream};
use crate::error::{Error, Result};
use crate::gaps::{GapsList, SmallElements};

/// Nonempty, strictly ascending list of positive generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GeneratorList(Vec<u64>);

impl GeneratorList {
    /// Sorts and deduplicates `raw`. With `require_coprime`, also rejects
    /// lists whose gcd is not 1, since those generate a submonoid with
    /// infinitely many gaps.
    pub fn normalize(mut raw: Vec<u64>, require_coprime: bool) -> Result<Self> {
        if raw.is_empty() {
            return Err(Error::Empty);
        }
        if raw.contains(&0) {
            return Err(Error::ContainsZero);
        }
        raw.sort_unstable();
        raw.dedup();
        let gens = GeneratorList(raw);
        if require_coprime {
            gens.ensure_coprime()?;
        }
        Ok(gens)
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn min(&self) -> u64 {
        self.0[0]
    }

    pub fn max(&self) -> u64 {
        self.0[self.0.len() - 1]
    }

    /// Largest index a multiplicity index list may use.
    pub fn index_bound(&self) -> usize {
        self.0.len() - 1
    }

    pub fn gcd(&self) -> u64 {
        self.0.iter().fold(0, |acc, &g| num_integer::gcd(acc, g))
    }

    fn ensure_coprime(&self) -> Result<()> {
        match self.gcd() {
            1 => Ok(()),
            g => Err(Error::NotCoprime(g)),
        }
    }

    /// Sum of the generators selected by `indices`, with repetition.
    pub fn combination(&self, indices: &[usize]) -> Result<u64> {
        indices.iter().try_fold(0u64, |acc, &i| {
            acc.checked_add(self.0[i]).ok_or(Error::Overflow)
        })
    }

    /// Endless stream of linear combinations, one per index list in
    /// enumeration order.
    pub fn combinations(&self) -> impl Iterator<Item = Result<u64>> + '_ {
        LgenStream::new(self.index_bound()).map(move |l| self.combination(l.indices()))
    }
}

impl AsRef<[u64]> for GeneratorList {
    fn as_ref(&self) -> &[u64] {
        &self.0
    }
}

impl fmt::Display for GeneratorList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        crate::fmt_list(f, &self.0)
    }
}

/// The `n`-th linear combination of `gens`. Not monotonic in `n`.
pub fn mgen(gens: &GeneratorList, n: usize) -> Result<u64> {
    let indices = crate::enumerator::lgen(gens.index_bound(), n);
    gens.combination(indices.indices())
}

/// Index of the first element `x <= limit` of the ascending list `list` such
/// that `x, x + 1, .., x + run - 1` all occur in `list`.
pub fn consecutive_values(list: &[u64], run: u64, limit: u64) -> Option<usize> {
    let mut expected = 0;
    let mut count = 0;
    for (i, &x) in list.iter().enumerate() {
        if x == expected {
            count += 1;
        } else if x <= limit {
            count = 1;
        } else {
            return None;
        }
        if count == run {
            return Some(i + 1 - run as usize);
        }
        expected = x + 1;
    }
    None
}

/// Members of the semigroup generated by `gens` up to its conductor.
///
/// Runs until a run of `min(gens)` consecutive members is found, which
/// coprimality guarantees. `max_iterations` caps the number of rounds, one
/// round per index-list length.
pub fn small_elements_from_generators(
    gens: &GeneratorList,
    max_iterations: Option<u64>,
) -> Result<SmallElements> {
    gens.ensure_coprime()?;
    let m = gens.min();
    let mut se = Vec::new();
    let mut cursor = IndexList::empty(gens.index_bound());
    let mut round: u64 = 1;
    loop {
        if let Some(cap) = max_iterations {
            if round > cap {
                return Err(Error::IterationCapExceeded(cap));
            }
        }
        while (cursor.len() as u64) < round {
            se.push(gens.combination(cursor.indices())?);
            cursor.advance();
        }
        let cutoff = round.checked_mul(m).ok_or(Error::Overflow)?;
        assert_eq!(
            gens.combination(cursor.indices())?,
            cutoff,
            "first index list of length {round} must be all zeros"
        );
        se.push(cutoff);
        cursor.advance();
        se.sort_unstable();
        se.dedup();
        if let Some(p) = consecutive_values(&se, m, cutoff) {
            se.truncate(p + 1);
            return Ok(SmallElements::from_sorted_unchecked(se));
        }
        round += 1;
    }
}

/// Gaps list of the numerical semigroup generated by `gens`.
pub fn gaps_from_generators(gens: &GeneratorList, max_iterations: Option<u64>) -> Result<GapsList> {
    small_elements_from_generators(gens, max_iterations).map(|se| se.to_gaps())
}

/// A generating set read off the Apéry set with respect to the multiplicity:
/// its nonzero elements together with the multiplicity itself.
///
/// Not minimal in general.
pub fn generating_set_from_gaps(gaps: &GapsList) -> GeneratorList {
    let m = gaps.multiplicity();
    let mut gens: Vec<u64> = apery(gaps, m)
        .into_vec()
        .into_iter()
        .filter(|&w| w != 0)
        .collect();
    gens.push(m);
    GeneratorList::normalize(gens, false).expect("multiplicity is nonzero")
}
