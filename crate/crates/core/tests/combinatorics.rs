use std::collections::BTreeMap;

use confmc_core::arith::{factorial, rat};
use confmc_core::partitions::{
    coefficient_a, coefficient_a_graph_oracle, connected_sum_b, enumerate_ordered_partitions, enumerate_partitions,
    enumerate_refinements, SetPartition,
};
use confmc_core::Rational;
use proptest::prelude::*;

/// Bell numbers from the Bell triangle.
fn bell_triangle(k: usize) -> Vec<u64> {
    let mut bells = vec![1u64];
    let mut row = vec![1u64];
    for _ in 1..=k {
        let mut next = vec![*row.last().unwrap()];
        for x in &row {
            let v = next.last().unwrap() + x;
            next.push(v);
        }
        bells.push(next[0]);
        row = next;
    }
    bells
}

#[test]
fn partition_counts_are_bell_numbers() {
    let bells = bell_triangle(12);
    for k in 1..=10 {
        let parts = enumerate_partitions(k).unwrap();
        assert_eq!(parts.len() as u64, bells[k], "k = {k}");
        let mut sorted = parts.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), parts.len());
    }
}

#[test]
fn block_profile_counts() {
    for k in 1..=6 {
        let mut counts: BTreeMap<Vec<usize>, u64> = BTreeMap::new();
        for p in enumerate_partitions(k).unwrap() {
            let mut profile: Vec<usize> = p.blocks().iter().map(Vec::len).collect();
            profile.sort_unstable();
            *counts.entry(profile).or_default() += 1;
        }
        for (profile, count) in counts {
            // k! / Π_i (i!)^{n_i} n_i!
            let mut mult: BTreeMap<usize, usize> = BTreeMap::new();
            for s in &profile {
                *mult.entry(*s).or_default() += 1;
            }
            let mut denom = rat(1);
            for (size, n) in mult {
                for _ in 0..n {
                    denom *= factorial(size);
                }
                denom *= factorial(n);
            }
            assert_eq!(Rational::from_integer(count.into()), factorial(k) / denom, "k = {k}, {profile:?}");
        }
    }
}

#[test]
fn connected_sums_closed_form() {
    for k in 1..=8 {
        let sign = if k % 2 == 1 { rat(1) } else { rat(-1) };
        assert_eq!(connected_sum_b(k).unwrap(), sign * factorial(k - 1), "k = {k}");
    }
}

#[test]
fn ordered_counts_are_sums_of_block_factorials() {
    for k in 1..=7 {
        let expected: Rational = enumerate_partitions(k).unwrap().iter().map(|p| factorial(p.len())).sum();
        let got = enumerate_ordered_partitions(k).unwrap().len();
        assert_eq!(Rational::from_integer(got.into()), expected, "k = {k}");
    }
}

#[test]
fn ordered_partitions_of_two_in_order() {
    let text: Vec<String> = enumerate_ordered_partitions(2).unwrap().iter().map(ToString::to_string).collect();
    assert_eq!(text, ["1,2", "1|2", "2|1"]);
}

#[test]
fn closed_form_matches_graph_sum_at_six() {
    for p in enumerate_partitions(6).unwrap() {
        assert_eq!(coefficient_a(&p), coefficient_a_graph_oracle(&p).unwrap(), "{p}");
    }
}

fn partition_strategy() -> impl Strategy<Value = SetPartition> {
    (1usize..=6).prop_flat_map(|k| {
        let parts = enumerate_partitions(k).unwrap();
        (0..parts.len()).prop_map(move |i| parts[i].clone())
    })
}

proptest! {
    #[test]
    fn refinements_are_exactly_the_finer_partitions(p in partition_strategy()) {
        let refinements = enumerate_refinements(&p).unwrap();
        let finer: Vec<SetPartition> = enumerate_partitions(p.k())
            .unwrap()
            .into_iter()
            .filter(|q| q.refines(&p))
            .collect();
        let mut sorted = refinements.clone();
        sorted.sort();
        let mut expected = finer;
        expected.sort();
        prop_assert_eq!(sorted, expected);
    }

    #[test]
    fn text_form_round_trips(p in partition_strategy()) {
        prop_assert_eq!(p.to_string().parse::<SetPartition>().unwrap(), p);
    }
}
