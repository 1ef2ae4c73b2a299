mod common;

use std::collections::BTreeSet;

use numsg::enumerator::{count_ge, lex_key, lgen, IndexList, LgenStream};
use numsg::{
    apery, apery_decompose, apery_residue, find_gap, gaps_from_generators,
    generating_set_from_gaps, mgen, GapsList, GeneratorList,
};
use numsg_oracle::{apery_naive, complement_is_closed, reachable_set};
use proptest::collection::{btree_set, vec};
use proptest::prelude::*;

fn ascending_list(max: u64, len: usize) -> impl Strategy<Value = Vec<u64>> {
    btree_set(0..max, 0..len).prop_map(|s| s.into_iter().collect())
}

fn descending_list(bound: usize, len: usize) -> impl Strategy<Value = Vec<usize>> {
    vec(0..=bound, 0..len).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    })
}

fn coprime_gens() -> impl Strategy<Value = GeneratorList> {
    vec(1u64..=25, 1..=4).prop_filter_map("generators must be coprime", |raw| {
        GeneratorList::normalize(raw, true).ok()
    })
}

proptest! {
    #[test]
    fn find_gap_is_at_least_start(x in 0u64..50, list in vec(0u64..60, 0..20)) {
        prop_assert!(x <= find_gap(x, &list));
    }

    #[test]
    fn find_gap_not_in_list(x in 0u64..20, list in ascending_list(40, 20)) {
        let list: Vec<u64> = list.into_iter().filter(|&v| v >= x).collect();
        prop_assert!(!list.contains(&find_gap(x, &list)));
    }

    #[test]
    fn find_gap_skips_only_list_elements(x in 0u64..20, list in ascending_list(40, 25)) {
        let result = find_gap(x, &list);
        for n in x..result {
            prop_assert!(list.contains(&n));
        }
    }

    #[test]
    fn validation_matches_brute_force_closure(subset in btree_set(1u64..=16, 0..12)) {
        let raw: Vec<u64> = subset.into_iter().collect();
        prop_assert_eq!(GapsList::new(raw.clone()).is_ok(), complement_is_closed(&raw));
    }

    #[test]
    fn successor_stays_in_range_and_grows_by_at_most_one(
        (bound, list) in (0usize..6).prop_flat_map(|b| (Just(b), descending_list(b, 8)))
    ) {
        let list = IndexList::new(list, bound).unwrap();
        let next = list.successor();
        prop_assert!(IndexList::new(next.indices().to_vec(), bound).is_ok());
        prop_assert!(next.len() == list.len() || next.len() == list.len() + 1);
    }

    #[test]
    fn successor_of_saturated_prefix(
        (m, n, k, suffix) in (1usize..=4, 0usize..=4).prop_flat_map(|(m, n)| {
            (0..m).prop_flat_map(move |k| (Just(m), Just(n), Just(k), descending_list(k, 5)))
        })
    ) {
        let mut input = vec![m; n];
        input.push(k);
        input.extend(&suffix);
        let mut expected = vec![k + 1; n + 1];
        expected.extend(&suffix);
        let list = IndexList::new(input, m).unwrap();
        let next = list.successor();
        prop_assert_eq!(next.indices(), &expected[..]);
    }

    #[test]
    fn mgen_at_least_length_times_min(gens in coprime_gens(), k in 0usize..400) {
        let len = lgen(gens.index_bound(), k).len() as u64;
        prop_assert!(mgen(&gens, k).unwrap() >= len * gens.min());
    }

    #[test]
    fn generated_gaps_match_reachability(gens in coprime_gens()) {
        let gaps = gaps_from_generators(&gens, None).unwrap();
        let bound = gaps.conductor() + 2 * gens.max();
        let reach = reachable_set(gens.as_slice(), bound);
        for x in 0..=bound {
            prop_assert_eq!(gaps.is_member(x), reach.contains(&x), "x = {}", x);
        }
    }

    #[test]
    fn count_ge_zero_is_length(list in vec(0usize..10, 0..20)) {
        prop_assert_eq!(count_ge(0, &list), list.len());
    }
}

#[test]
fn lgen_sound() {
    for m in 0..=5 {
        for (n, list) in LgenStream::new(m).take(5001).enumerate() {
            assert!(
                IndexList::new(list.indices().to_vec(), m).is_ok(),
                "lgen({m}, {n}) = {list}"
            );
        }
    }
}

#[test]
fn lgen_lengths_never_decrease() {
    for m in 0..=4 {
        let lengths: Vec<usize> = LgenStream::new(m).take(3000).map(|l| l.len()).collect();
        assert!(lengths.windows(2).all(|w| w[1] == w[0] || w[1] == w[0] + 1));
    }
}

#[test]
fn lex_keys_strictly_increase() {
    for m in 0..=3 {
        let keys: Vec<_> = LgenStream::new(m)
            .take(2002)
            .map(|l| lex_key(m, l.indices()))
            .collect();
        for (n, w) in keys.windows(2).enumerate() {
            assert!(w[0] < w[1], "m = {m}, n = {n}: {:?} !< {:?}", w[0], w[1]);
        }
    }
}

#[test]
fn lgen_complete_on_short_lists() {
    for m in 0..=3 {
        let expected = numsg_oracle::enumerate_gelists(m, 4);
        let produced: Vec<Vec<usize>> = LgenStream::new(m)
            .take(expected.len())
            .map(|l| l.indices().to_vec())
            .collect();
        let distinct: BTreeSet<_> = produced.iter().cloned().collect();
        assert_eq!(distinct.len(), produced.len());
        assert_eq!(distinct, expected.into_iter().collect());
    }
}

#[test]
fn multiplicity_is_least_nonzero_member() {
    for gaps in common::gaps_corpus() {
        let scan = (1..).find(|&k| !gaps.as_slice().contains(&k)).unwrap();
        assert_eq!(gaps.multiplicity(), scan, "{gaps}");
    }
}

#[test]
fn small_elements_round_trip() {
    for gaps in common::gaps_corpus() {
        let se = gaps.small_elements();
        assert_eq!(se.to_gaps(), gaps);
        let again = numsg::SmallElements::new(se.as_slice().to_vec()).unwrap();
        assert_eq!(again.to_gaps().small_elements(), se);
    }
}

#[test]
fn conductor_sits_on_the_boundary() {
    for gaps in common::gaps_corpus() {
        let c = gaps.conductor();
        assert!(gaps.is_member(c));
        if !gaps.as_slice().is_empty() {
            assert!(gaps.is_gap(c - 1));
            assert_eq!(gaps.frobenius(), Some(c - 1));
        }
        let report = gaps.invariants();
        assert_eq!(report.genus, gaps.as_slice().len());
        assert_eq!(report.small_elements.conductor(), c);
    }
}

#[test]
fn apery_matches_direct_filter() {
    for gaps in common::gaps_corpus() {
        for n in 0..=gaps.conductor() + 3 {
            let bound = gaps.conductor() + n + 1;
            let got: BTreeSet<u64> = apery(&gaps, n).to_set();
            assert_eq!(
                got,
                apery_naive(gaps.as_slice(), n, bound),
                "{gaps}, n = {n}"
            );
            assert!(got.iter().all(|&x| x <= bound));
        }
    }
}

#[test]
fn apery_algorithms_agree() {
    for gaps in common::gaps_corpus() {
        let se = gaps.small_elements();
        for n in common::small_nonzero_members(&gaps) {
            let direct = apery(&gaps, n);
            let residue = apery_residue(&se, n).unwrap();
            assert!(direct.same_elements(&residue), "{gaps}, n = {n}");
            for (r, &w) in residue.elements().iter().enumerate() {
                assert_eq!(w % n, r as u64);
            }
        }
    }
}

#[test]
fn apery_with_multiplicity_generates() {
    for gaps in common::gaps_corpus() {
        for n in common::small_nonzero_members(&gaps) {
            let mut raw = apery(&gaps, n).into_vec();
            raw.retain(|&w| w != 0);
            raw.push(n);
            let gens = GeneratorList::normalize(raw, true).unwrap();
            assert_eq!(gaps_from_generators(&gens, None).unwrap(), gaps);
        }
        let gens = generating_set_from_gaps(&gaps);
        assert_eq!(gaps_from_generators(&gens, None).unwrap(), gaps);
    }
}

#[test]
fn decomposition_over_multiplicity() {
    for gaps in common::gaps_corpus().into_iter().step_by(7) {
        let n = gaps.multiplicity();
        for a in (0..=gaps.conductor() + 2 * n).filter(|&a| gaps.is_member(a)) {
            let d = apery_decompose(&gaps, n, a).unwrap();
            assert_eq!(d.coefficient * n + d.apery_element, a);
        }
    }
}

#[test]
fn mgen_reaches_every_small_member() {
    let corpus = [
        vec![4, 7, 10],
        vec![3, 5],
        vec![5, 6, 7, 8, 9],
        vec![11, 13],
        vec![1],
        vec![6, 10, 15],
    ];
    for raw in corpus {
        let gens = GeneratorList::normalize(raw, true).unwrap();
        let reach = reachable_set(gens.as_slice(), 60);
        // every x < |lgen(k)| * min is produced before index k
        let k = LgenStream::new(gens.index_bound())
            .position(|l| l.len() as u64 * gens.min() > 60)
            .unwrap();
        let produced: BTreeSet<u64> = (0..k).map(|n| mgen(&gens, n).unwrap()).collect();
        for x in &reach {
            assert!(produced.contains(x), "{gens}: {x} not produced");
        }
    }
}

#[test]
fn mgen_is_not_monotonic() {
    let gens = GeneratorList::normalize(vec![4, 7, 10], true).unwrap();
    assert_eq!(mgen(&gens, 3).unwrap(), 10);
    assert_eq!(mgen(&gens, 4).unwrap(), 8);
}
