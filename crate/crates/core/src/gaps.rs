//! The gaps-list representation of a numerical semigroup and its scalar
//! invariants.
//!
//! A numerical semigroup `M` is stored as the ascending list of naturals it
//! misses. Every natural above the largest gap belongs to `M`, so the list
//! determines the semigroup completely.

use std::fmt;

use crate::error::{Error, Result};

/// Sorted, duplicate-free list of the gaps of a numerical semigroup.
///
/// The empty list is the full monoid of naturals.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct GapsList(Vec<u64>);

impl GapsList {
    /// Validates `raw` as a gaps list.
    ///
    /// The list must be strictly ascending, must not contain 0, and its
    /// complement must be closed under addition. The first violation is
    /// reported, scanning gaps in ascending order and, for each gap `g`,
    /// the summands `a` of `g = a + (g - a)` in ascending order.
    pub fn new(raw: Vec<u64>) -> Result<Self> {
        if let Some(index) = raw.windows(2).position(|w| w[0] >= w[1]) {
            return Err(Error::NotSorted { index: index + 1 });
        }
        if raw.first() == Some(&0) {
            return Err(Error::ContainsZero);
        }
        if let Some((gap, summand)) = first_closure_violation(&raw) {
            return Err(Error::NotClosed { gap, summand });
        }
        Ok(GapsList(raw))
    }

    /// The full monoid of naturals.
    pub fn empty() -> Self {
        GapsList(Vec::new())
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<u64> {
        self.0
    }

    pub fn is_gap(&self, x: u64) -> bool {
        self.0.binary_search(&x).is_ok()
    }

    pub fn is_member(&self, x: u64) -> bool {
        !self.is_gap(x)
    }

    /// Number of gaps.
    pub fn genus(&self) -> usize {
        self.0.len()
    }

    /// Least nonzero member, found as the first integer from 1 that breaks
    /// the leading run of consecutive gaps.
    pub fn multiplicity(&self) -> u64 {
        find_gap(1, &self.0)
    }

    /// Largest gap plus one, or 0 for the full monoid.
    pub fn conductor(&self) -> u64 {
        match self.0.last() {
            Some(&max) => max.checked_add(1).expect("conductor overflows u64"),
            None => 0,
        }
    }

    /// Largest gap; absent for the full monoid, whose Frobenius number
    /// would be -1.
    pub fn frobenius(&self) -> Option<u64> {
        self.0.last().copied()
    }

    /// Members from 0 up to and including the conductor.
    pub fn small_elements(&self) -> SmallElements {
        let elements = (0..=self.conductor())
            .filter(|&x| self.is_member(x))
            .collect();
        SmallElements(elements)
    }

    /// Inverse of [`GapsList::small_elements`].
    pub fn from_small_elements(se: &SmallElements) -> Self {
        let mut members = se.0.iter().copied().peekable();
        let mut gaps = Vec::new();
        for x in 0..=se.conductor() {
            if members.peek() == Some(&x) {
                members.next();
            } else {
                gaps.push(x);
            }
        }
        GapsList(gaps)
    }

    pub fn invariants(&self) -> InvariantReport {
        InvariantReport {
            multiplicity: self.multiplicity(),
            conductor: self.conductor(),
            frobenius: self.frobenius(),
            genus: self.genus(),
            small_elements: self.small_elements(),
        }
    }
}

impl AsRef<[u64]> for GapsList {
    fn as_ref(&self) -> &[u64] {
        &self.0
    }
}

impl fmt::Display for GapsList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        crate::fmt_list(f, &self.0)
    }
}

// For each gap g, walk the nonzero non-gaps a < g in ascending order. A
// non-gap a whose partner g - a is also a non-gap is a violation; otherwise
// g - a is a gap, which bounds the walk by the genus.
fn first_closure_violation(gaps: &[u64]) -> Option<(u64, u64)> {
    let is_gap = |x: u64| gaps.binary_search(&x).is_ok();
    for &g in gaps {
        let mut below = gaps.iter().copied().peekable();
        let mut a = 1;
        while a < g {
            while below.peek().is_some_and(|&b| b < a) {
                below.next();
            }
            if below.peek() == Some(&a) {
                a += 1;
                continue;
            }
            if !is_gap(g - a) {
                return Some((g, a));
            }
            a += 1;
        }
    }
    None
}

/// Starting from `x`, skips the leading elements of `list` that continue the
/// run `x, x + 1, ...` and returns the first integer not matched.
///
/// On an ascending list of gaps with `x = 1` this is the multiplicity.
pub fn find_gap(x: u64, list: &[u64]) -> u64 {
    let mut x = x;
    for &head in list {
        if head != x {
            break;
        }
        x = x.checked_add(1).expect("find_gap overflows u64");
    }
    x
}

/// Builds the gaps list of the semigroup decided by `member`, given a
/// witness `a` with `a` and `a + 1` both members.
///
/// Two consecutive members force every `n >= (a - 1)(a + 1)` into the
/// semigroup, so only naturals below that bound are tested. The predicate
/// is trusted to describe a submonoid; the result is still run through
/// [`GapsList::new`], so a predicate that is not closed under addition
/// below the bound is rejected.
pub fn gaps_from_membership<F>(member: F, a: u64) -> Result<GapsList>
where
    F: Fn(u64) -> bool,
{
    let next = a.checked_add(1).ok_or(Error::Overflow)?;
    for witness in [a, next] {
        if !member(witness) {
            return Err(Error::WitnessInvalid { witness });
        }
    }
    let bound = a
        .saturating_sub(1)
        .checked_mul(next)
        .ok_or(Error::Overflow)?;
    GapsList::new((0..bound).filter(|&x| !member(x)).collect())
}

/// Members of a numerical semigroup from 0 through the conductor, ascending.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SmallElements(Vec<u64>);

impl SmallElements {
    /// Checks that `raw` is ascending, starts at 0, and is the small-elements
    /// list of some numerical semigroup.
    pub fn new(raw: Vec<u64>) -> Result<Self> {
        if let Some(index) = raw.windows(2).position(|w| w[0] >= w[1]) {
            return Err(Error::NotSorted { index: index + 1 });
        }
        if raw.first() != Some(&0) {
            return Err(Error::MissingZero);
        }
        if let [.., before, last] = raw[..] {
            if before + 1 == last {
                return Err(Error::PastConductor(last));
            }
        }
        let se = SmallElements(raw);
        GapsList::new(GapsList::from_small_elements(&se).into_vec())?;
        Ok(se)
    }

    pub(crate) fn from_sorted_unchecked(raw: Vec<u64>) -> Self {
        debug_assert_eq!(raw.first(), Some(&0));
        SmallElements(raw)
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<u64> {
        self.0
    }

    /// The last small element.
    pub fn conductor(&self) -> u64 {
        *self.0.last().expect("small elements always contain 0")
    }

    pub fn is_member(&self, x: u64) -> bool {
        x > self.conductor() || self.0.binary_search(&x).is_ok()
    }

    pub fn to_gaps(&self) -> GapsList {
        GapsList::from_small_elements(self)
    }
}

impl AsRef<[u64]> for SmallElements {
    fn as_ref(&self) -> &[u64] {
        &self.0
    }
}

impl fmt::Display for SmallElements {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        crate::fmt_list(f, &self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantReport {
    pub multiplicity: u64,
    pub conductor: u64,
    pub frobenius: Option<u64>,
    pub genus: usize,
    pub small_elements: SmallElements,
}
