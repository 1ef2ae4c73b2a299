//! Apéry sets.
//!
//! Over the naturals the Apéry set of `M` with respect to `n` is taken as
//! `{x in M : n <= x implies x - n is a gap}`, which avoids negative
//! differences. When `n` is a nonzero member it holds exactly one element per
//! residue class mod `n`, the least member of that class.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::gaps::{GapsList, SmallElements};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AperyList {
    elements: Vec<u64>,
    modulus: u64,
}

impl AperyList {
    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn to_set(&self) -> BTreeSet<u64> {
        self.elements.iter().copied().collect()
    }

    /// Whether both lists hold the same elements, ignoring order.
    pub fn same_elements(&self, other: &AperyList) -> bool {
        self.to_set() == other.to_set()
    }

    pub fn into_vec(self) -> Vec<u64> {
        self.elements
    }
}

impl fmt::Display for AperyList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        crate::fmt_list(f, &self.elements)
    }
}

/// Apéry set of the semigroup with gaps `gaps` with respect to `n`.
///
/// Takes `[0, .., n - 1]` followed by every gap shifted up by `n`, then drops
/// the gaps. The output keeps that order, so it is ascending below `n` and
/// ascending again among the shifted gaps, but not sorted overall.
///
/// Defined for every `n`. With `n = 0` the result is empty; with `n` a nonzero
/// gap it is the set described in the module docs but carries no cardinality
/// guarantee.
pub fn apery(gaps: &GapsList, n: u64) -> AperyList {
    let shifted = gaps
        .as_slice()
        .iter()
        .map(|&g| g.checked_add(n).expect("shifted gap overflows u64"));
    let elements = (0..n)
        .chain(shifted)
        .filter(|&x| gaps.is_member(x))
        .collect();
    AperyList {
        elements,
        modulus: n,
    }
}

/// First element of `list` congruent to `a` mod `n`, or failing that the least
/// natural above the last element (at least 0 if `list` is empty) in that class.
pub fn find_mod(list: &[u64], n: u64, a: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::ZeroModulus);
    }
    let residue = a % n;
    if let Some(&x) = list.iter().find(|&&x| x % n == residue) {
        return Ok(x);
    }
    let start = match list.last() {
        Some(&last) => last.checked_add(1).ok_or(Error::Overflow)?,
        None => 0,
    };
    let start_residue = start % n;
    let offset = if residue >= start_residue {
        residue - start_residue
    } else {
        n - (start_residue - residue)
    };
    start.checked_add(offset).ok_or(Error::Overflow)
}

/// Apéry set of the semigroup with small elements `se` with respect to a
/// nonzero member `n`, listed by residue class `0, 1, .., n - 1`.
///
/// Every natural past the conductor is a member, so the least member of each
/// class is either among the small elements or the first class
/// representative past the conductor.
pub fn apery_residue(se: &SmallElements, n: u64) -> Result<AperyList> {
    if n == 0 || !se.is_member(n) {
        return Err(Error::NotANonzeroMember(n));
    }
    let elements = (0..n)
        .map(|a| find_mod(se.as_slice(), n, a))
        .collect::<Result<_>>()?;
    Ok(AperyList {
        elements,
        modulus: n,
    })
}

/// Unique decomposition `a = coefficient * n + apery_element` of a member `a`
/// over a nonzero member `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Decomposition {
    pub coefficient: u64,
    pub apery_element: u64,
}

pub fn apery_decompose(gaps: &GapsList, n: u64, a: u64) -> Result<Decomposition> {
    if n == 0 || gaps.is_gap(n) {
        return Err(Error::NotANonzeroMember(n));
    }
    if gaps.is_gap(a) {
        return Err(Error::NotAMember(a));
    }
    let w = apery(gaps, n)
        .into_vec()
        .into_iter()
        .find(|&w| w % n == a % n)
        .expect("Apéry set meets every residue class");
    // w is the least member in the class of a, so w <= a
    debug_assert!(w <= a);
    Ok(Decomposition {
        coefficient: (a - w) / n,
        apery_element: w,
    })
}
