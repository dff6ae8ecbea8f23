//! Strip generation against the recurrences and the sequence filter.

use std::collections::HashSet;

use num_bigint::BigUint;
use proptest::prelude::*;
use tatami::strip::{brute_filter_count, render_strip_schematic, BRUTE_FORCE_GUARD};
use tatami::{count_strip, feature_alphabet, gen_strip, Bond, StripCovering};

#[test]
fn initial_values() {
    for r in 2..=10usize {
        assert_eq!(count_strip(r, 0).unwrap().total, BigUint::from(2u32));
        let one = count_strip(r, 1).unwrap();
        assert_eq!(one.total, BigUint::from(4 * r));
        assert_eq!(one.vertical, BigUint::from(4 * r - 2));
    }
}

#[test]
fn generation_matches_recurrence_and_filter() {
    for r in 2..=8usize {
        for n in 0..=6usize {
            let (mut vertical, mut horizontal) = (0u64, 0u64);
            gen_strip(r, n, |c| match c.leftmost_bond() {
                Bond::Vertical => vertical += 1,
                Bond::Horizontal => horizontal += 1,
            })
            .unwrap();
            let want = count_strip(r, n).unwrap();
            assert_eq!(BigUint::from(vertical), want.vertical, "r={r} n={n}");
            assert_eq!(BigUint::from(horizontal), want.horizontal, "r={r} n={n}");
            if (4 * r as u128).pow(n as u32) <= BRUTE_FORCE_GUARD {
                assert_eq!(brute_filter_count(r, n).unwrap(), want.total, "r={r} n={n}");
            }
        }
    }
}

#[test]
fn small_generation_is_distinct() {
    let mut seen = HashSet::new();
    let count = gen_strip(3, 4, |c| assert!(seen.insert(c.to_string()))).unwrap();
    assert_eq!(BigUint::from(count), count_strip(3, 4).unwrap().total);
}

fn covering_strategy() -> impl Strategy<Value = (usize, Vec<usize>)> {
    (2usize..9).prop_flat_map(|r| (Just(r), proptest::collection::vec(0..4 * r, 1..10)))
}

proptest! {
    #[test]
    fn codes_round_trip((r, raw) in covering_strategy()) {
        let alphabet = feature_alphabet(r).unwrap();
        let codes: HashSet<usize> = alphabet.iter().map(|f| f.code).collect();
        prop_assert_eq!(codes, (0..4 * r).collect::<HashSet<_>>());

        // Keep the longest valid prefix of the raw sequence.
        let mut valid = vec![raw[0]];
        for &c in &raw[1..] {
            if alphabet[*valid.last().unwrap()].right_bond() == alphabet[c].left_bond() {
                valid.push(c);
            }
        }
        let s = StripCovering::from_codes(r, &valid).unwrap();
        prop_assert_eq!(s.codes().collect::<Vec<_>>(), valid.clone());
        let text = s.to_string();
        let listed: Vec<usize> = text
            .split(" ; ")
            .nth(1)
            .unwrap()
            .split(',')
            .map(|t| t.parse().unwrap())
            .collect();
        prop_assert_eq!(listed, valid);

        let art = render_strip_schematic(&s, 2).unwrap();
        prop_assert_eq!(art.lines().count(), r);
        prop_assert!(art.lines().all(|l| l.chars().count() == 2 + 3 * s.features().len()));
    }
}
