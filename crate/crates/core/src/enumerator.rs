//! Enumeration of descending index lists.
//!
//! A descending list over `0..=m` is a multiset of generator indices, i.e. a
//! linear combination of `m + 1` generators with nonnegative coefficients.
//! [`IndexList::advance`] steps through every such list exactly once,
//! starting from the empty list, with lengths never decreasing.

use std::fmt;

use crate::error::{Error, Result};

/// Descending list of indices, each at most `bound`.
///
/// Equality ignores the bound.
#[derive(Debug, Clone, Eq)]
pub struct IndexList {
    indices: Vec<usize>,
    bound: usize,
}

impl PartialEq for IndexList {
    fn eq(&self, other: &Self) -> bool {
        self.indices == other.indices
    }
}

impl IndexList {
    pub fn new(indices: Vec<usize>, bound: usize) -> Result<Self> {
        if let Some(index) = indices.windows(2).position(|w| w[0] < w[1]) {
            return Err(Error::NotDescending { index: index + 1 });
        }
        if let Some(&index) = indices.first().filter(|&&h| h > bound) {
            return Err(Error::IndexOutOfBound { index, bound });
        }
        Ok(IndexList { indices, bound })
    }

    pub fn empty(bound: usize) -> Self {
        IndexList {
            indices: Vec::new(),
            bound,
        }
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    /// Replaces the list by its successor: the leftmost entry below the bound
    /// is incremented and every entry to its left is set to the new value.
    /// When every entry sits at the bound, the list becomes all zeros and one
    /// longer.
    pub fn advance(&mut self) {
        match self.indices.iter().position(|&h| h < self.bound) {
            Some(j) => {
                let v = self.indices[j] + 1;
                self.indices[..=j].fill(v);
            }
            None => {
                self.indices.fill(0);
                self.indices.push(0);
            }
        }
        // the recursive formulation has a rule for an empty successor that
        // never fires
        debug_assert!(!self.indices.is_empty());
    }

    pub fn successor(&self) -> Self {
        let mut next = self.clone();
        next.advance();
        next
    }
}

impl fmt::Display for IndexList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        crate::fmt_list(f, &self.indices)
    }
}

/// The `n`-th list produced from the empty list by repeated successors.
pub fn lgen(m: usize, n: usize) -> IndexList {
    LgenStream::new(m)
        .nth(n)
        .expect("the enumeration is infinite")
}

/// Cursor over the enumeration of index lists with bound `m`. The first item
/// is the empty list and each pull costs one successor step.
#[derive(Debug, Clone)]
pub struct LgenStream {
    current: IndexList,
}

impl LgenStream {
    pub fn new(m: usize) -> Self {
        LgenStream {
            current: IndexList::empty(m),
        }
    }

    /// The list the next call to `next` will yield.
    pub fn peek(&self) -> &IndexList {
        &self.current
    }
}

impl Iterator for LgenStream {
    type Item = IndexList;

    fn next(&mut self) -> Option<IndexList> {
        let out = self.current.clone();
        self.current.advance();
        Some(out)
    }
}

/// Number of entries of `list` that are at least `i`.
pub fn count_ge(i: usize, list: &[usize]) -> usize {
    list.iter().filter(|&&x| x >= i).count()
}

/// Tuple `(count_ge(0, list), .., count_ge(n, list))`, compared
/// lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LexKey(Vec<usize>);

impl LexKey {
    pub fn counts(&self) -> &[usize] {
        &self.0
    }
}

pub fn lex_key(n: usize, list: &[usize]) -> LexKey {
    LexKey((0..=n).map(|i| count_ge(i, list)).collect())
}
