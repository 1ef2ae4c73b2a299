//! Brute-force reference implementations.
//!
//! Everything here is deliberately naive and shares no code with `numsg`.
//! Inputs are plain slices so the oracles never depend on the library's own
//! validation or normalization logic.

use std::collections::BTreeSet;

/// Members of the monoid generated by `gens` up to and including `bound`,
/// computed by the classic coin-problem table.
pub fn reachable_set(gens: &[u64], bound: u64) -> BTreeSet<u64> {
    let size = bound as usize + 1;
    let mut reach = vec![false; size];
    reach[0] = true;
    for x in 1..size {
        reach[x] = gens
            .iter()
            .any(|&g| g != 0 && (g as usize) <= x && reach[x - g as usize]);
    }
    reach
        .iter()
        .enumerate()
        .filter(|(_, &r)| r)
        .map(|(x, _)| x as u64)
        .collect()
}

/// Gaps of the monoid generated by `gens`, assuming the generators are coprime.
///
/// Everything at or above the Frobenius bound `(a - 1)(b - 1)` for the two
/// smallest generators is reachable, so a table up to the square of the
/// largest generator is always enough.
pub fn gaps_of_generated(gens: &[u64]) -> Vec<u64> {
    let max = gens.iter().copied().max().unwrap_or(0);
    let bound = max * max + max;
    let reach = reachable_set(gens, bound);
    (0..=bound).filter(|x| !reach.contains(x)).collect()
}

/// All descending lists over `0..=m` of length at most `max_len`, ordered by
/// length and then lexicographically.
pub fn enumerate_gelists(m: usize, max_len: usize) -> Vec<Vec<usize>> {
    fn extend(
        prefix: &mut Vec<usize>,
        ceiling: usize,
        remaining: usize,
        out: &mut Vec<Vec<usize>>,
    ) {
        out.push(prefix.clone());
        if remaining == 0 {
            return;
        }
        for v in 0..=ceiling {
            prefix.push(v);
            extend(prefix, v, remaining - 1, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), m, max_len, &mut out);
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

/// `{x <= bound : x not a gap and (n <= x implies x - n is a gap)}`.
pub fn apery_naive(gaps: &[u64], n: u64, bound: u64) -> BTreeSet<u64> {
    let is_gap = |x: u64| gaps.contains(&x);
    (0..=bound)
        .filter(|&x| !is_gap(x) && (x < n || is_gap(x - n)))
        .collect()
}

/// Whether the complement of `gaps` is closed under addition, by checking
/// every pair of non-gaps whose sum does not exceed the largest gap.
pub fn complement_is_closed(gaps: &[u64]) -> bool {
    if gaps.contains(&0) {
        return false;
    }
    let max = match gaps.iter().max() {
        Some(&m) => m,
        None => return true,
    };
    let members: Vec<u64> = (1..=max).filter(|x| !gaps.contains(x)).collect();
    for &a in &members {
        for &b in &members {
            if a + b <= max && gaps.contains(&(a + b)) {
                return false;
            }
        }
    }
    true
}

/// Every numerical semigroup whose gaps all lie in `1..=max_frobenius`,
/// given as ascending gaps lists. Found by testing every subset.
pub fn enumerate_semigroups(max_frobenius: u64) -> Vec<Vec<u64>> {
    assert!(max_frobenius < 24, "subset enumeration is exponential");
    let mut out = Vec::new();
    for mask in 0u64..(1 << max_frobenius) {
        let gaps: Vec<u64> = (1..=max_frobenius)
            .filter(|x| mask & (1 << (x - 1)) != 0)
            .collect();
        if complement_is_closed(&gaps) {
            out.push(gaps);
        }
    }
    out
}

pub fn binomial(n: u64, k: u64) -> u64 {
    assert!(k <= n);
    let k = k.min(n - k);
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reachable_examples() {
        let set = |v: &[u64]| v.iter().copied().collect::<BTreeSet<_>>();
        assert_eq!(
            reachable_set(&[4, 7, 10], 14),
            set(&[0, 4, 7, 8, 10, 11, 12, 14])
        );
        assert_eq!(reachable_set(&[1], 3), set(&[0, 1, 2, 3]));
        assert_eq!(reachable_set(&[2, 3], 5), set(&[0, 2, 3, 4, 5]));
    }

    #[test]
    fn reachable_prefix_consistency() {
        let big = reachable_set(&[5, 8, 11], 120);
        for b in [0, 7, 33, 60, 119] {
            let small = reachable_set(&[5, 8, 11], b);
            let restricted: BTreeSet<u64> = big.range(..=b).copied().collect();
            assert_eq!(small, restricted);
        }
    }

    #[test]
    fn gelists_examples() {
        assert_eq!(
            enumerate_gelists(1, 2),
            vec![vec![], vec![0], vec![1], vec![0, 0], vec![1, 0], vec![1, 1]]
        );
        assert_eq!(enumerate_gelists(0, 1), vec![vec![], vec![0]]);
        assert_eq!(
            enumerate_gelists(2, 1),
            vec![vec![], vec![0], vec![1], vec![2]]
        );
    }

    #[test]
    fn gelists_count_matches_multisets() {
        for m in 0..5u64 {
            for len in 0..6u64 {
                // multisets of size <= len over m + 1 symbols = C(len + m + 1, m + 1)
                let expected = binomial(len + m + 1, m + 1);
                assert_eq!(
                    enumerate_gelists(m as usize, len as usize).len() as u64,
                    expected
                );
            }
        }
    }

    #[test]
    fn apery_naive_examples() {
        let set = |v: &[u64]| v.iter().copied().collect::<BTreeSet<_>>();
        assert_eq!(
            apery_naive(&[1, 2, 3, 5, 6, 9, 13], 4, 30),
            set(&[0, 7, 10, 17])
        );
        assert_eq!(apery_naive(&[], 3, 10), set(&[0, 1, 2]));
        assert_eq!(apery_naive(&[1], 2, 10), set(&[0, 3]));
    }

    #[test]
    fn apery_naive_stable_in_bound() {
        let gaps = [1, 2, 3, 5, 6, 9, 13];
        let base = apery_naive(&gaps, 4, 18);
        for bound in 19..60 {
            let wider = apery_naive(&gaps, 4, bound);
            assert_eq!(base, wider.range(..=18).copied().collect());
        }
    }

    #[test]
    fn closure_and_enumeration() {
        assert!(complement_is_closed(&[1, 2, 3, 5, 6, 9, 13]));
        assert!(complement_is_closed(&[]));
        assert!(!complement_is_closed(&[2]));
        // counts of numerical semigroups by Frobenius number: 1, 1, 2, 2, 5, 4, 11
        let all = enumerate_semigroups(7);
        let by_frob = |f: u64| {
            all.iter()
                .filter(|g| g.last().copied().unwrap_or(0) == f)
                .count()
        };
        assert_eq!(by_frob(0), 1);
        assert_eq!(
            (1..=7).map(by_frob).collect::<Vec<_>>(),
            vec![1, 1, 2, 2, 5, 4, 11]
        );
    }

    #[test]
    fn gaps_of_generated_examples() {
        assert_eq!(gaps_of_generated(&[4, 7, 10]), vec![1, 2, 3, 5, 6, 9, 13]);
        assert_eq!(gaps_of_generated(&[2, 3]), vec![1]);
        assert!(gaps_of_generated(&[1]).is_empty());
    }
}
