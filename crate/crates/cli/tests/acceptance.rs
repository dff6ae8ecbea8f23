//! Acceptance suite: every criterion runs in order and reports one line.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use tatami::bench::{regression_points, PinnedConstants};
use tatami::ksum::triangular;
use tatami::oracle::{count_coverings, enumerate_coverings, OracleQuery};
use tatami::square::{count_vd_all, max_diagonal_sum, parse_vh};
use tatami::strip::{brute_filter_count, BRUTE_FORCE_GUARD};
use tatami::{
    count_strip, gen_ksum, gen_strip, gen_vh, init_c4, render_square, Bond, Covering, TileKind,
    VhElement,
};

fn tatami_cli(args: &[&str]) -> String {
    let out = Command::new(env!("CARGO_BIN_EXE_tatami"))
        .args(args)
        .output()
        .expect("binary runs");
    assert!(out.status.success(), "tatami {args:?} failed");
    String::from_utf8(out.stdout).unwrap()
}

fn elements(n: usize, k: u64) -> Vec<VhElement> {
    let mut out = Vec::new();
    gen_vh(n, k, |v| out.push(v.to_element())).unwrap();
    out
}

fn within(start: Instant, limit: Duration, what: &str) {
    let spent = start.elapsed();
    assert!(spent <= limit, "{what} took {spent:?}, limit {limit:?}");
}

/// The reference listing, star marking the dominant diagonal, sets in the
/// listing's own element order.
const REFERENCE_LISTING: [&str; 24] = [
    "{6*}{1}{}",
    "{}{6*}{1}",
    "{5*}{1}{1}",
    "{1}{5*}{1}",
    "{5*}{2}{}",
    "{}{5*}{2}",
    "{4*}{}{2,1}",
    "{2,1}{4*}{}",
    "{4*}{1}{2}",
    "{2}{4*}{1}",
    "{4*}{2}{1}",
    "{1}{4*}{2}",
    "{4*}{3}{}",
    "{4*}{1,2}{}",
    "{}{4*}{3}",
    "{}{4*}{1,2}",
    "B{1}{1,2,3}",
    "B{2}{2,3}",
    "B{3}{1,3}",
    "B{1,2}{1,3}",
    "B{1,3}{3}",
    "B{1,3}{1,2}",
    "B{2,3}{2}",
    "B{1,2,3}{1}",
];

/// Sorts the numbers inside each brace group.
fn canonical(text: &str) -> String {
    let mut out = String::new();
    let mut rest = text;
    while let Some(open) = rest.find('{') {
        out.push_str(&rest[..=open]);
        let close = open + rest[open..].find('}').unwrap();
        let body = &rest[open + 1..close];
        let mut nums: Vec<u32> = body
            .trim_end_matches('*')
            .split(',')
            .filter(|s| !s.is_empty())
            .map(|s| s.parse().unwrap())
            .collect();
        nums.sort_unstable();
        let joined: Vec<String> = nums.iter().map(u32::to_string).collect();
        out.push_str(&joined.join(","));
        if body.ends_with('*') {
            out.push('*');
        }
        out.push('}');
        rest = &rest[close + 1..];
    }
    out.push_str(rest);
    out
}

fn vd_8_7_listing() {
    let start = Instant::now();
    assert_eq!(tatami_cli(&["square", "8", "7", "--count"]), "24\n");
    let listing = tatami_cli(&["square", "8", "7"]);
    within(start, Duration::from_secs(1), "VD(8,7)");

    let golden = include_str!("../../core/tests/golden/vd_8_7.txt");
    assert_eq!(listing, golden);

    let mut reference: BTreeMap<String, usize> = BTreeMap::new();
    for line in REFERENCE_LISTING {
        let e = parse_vh(&canonical(line), 8).unwrap();
        *reference.entry(e.to_string()).or_default() += 1;
    }
    let mut produced: BTreeMap<String, usize> = BTreeMap::new();
    for line in listing.lines() {
        *produced.entry(line.to_string()).or_default() += 1;
    }
    assert_eq!(produced, reference);
}

fn even_oracle_equivalence() {
    let start = Instant::now();
    for n in [2, 4, 6, 8] {
        let mut oracle = HashSet::new();
        enumerate_coverings(&OracleQuery::square(n), |c| {
            oracle.insert(c.serialize_tiles());
        })
        .unwrap();
        let mut rendered = HashSet::new();
        for k in 0..=max_diagonal_sum(n) {
            for e in elements(n, k) {
                let c = render_square(&e, n).unwrap();
                assert_eq!(c.count(TileKind::VDomino) as u64, k);
                assert!(
                    rendered.insert(c.serialize_tiles()),
                    "duplicate render of {e}"
                );
            }
        }
        assert_eq!(rendered, oracle, "n={n}");
    }
    within(start, Duration::from_secs(600), "even oracle equivalence");
}

fn odd_oracle_equivalence() {
    let start = Instant::now();
    for n in [3, 5, 7] {
        let hist = count_coverings(&OracleQuery::square(n)).unwrap();
        let counts = count_vd_all(n).unwrap();
        let mut produced = BTreeMap::new();
        for (k, c) in counts.iter().enumerate() {
            if c.to_string() != "0" {
                produced.insert(k, c.to_string());
            }
        }
        let expected: BTreeMap<usize, String> = hist
            .counts
            .iter()
            .map(|(&k, c)| (k, c.to_string()))
            .collect();
        assert_eq!(produced, expected, "n={n}");
    }
    within(start, Duration::from_secs(600), "odd oracle equivalence");
}

fn ten_by_thirteen() {
    let start = Instant::now();
    let hist = count_coverings(&OracleQuery::rect(10, 13).with_monominoes(0)).unwrap();
    assert_eq!(hist.total, 0);
    assert!(
        tatami_cli(&["oracle", "rect", "10", "13", "--monominoes", "0"]).ends_with("total 0\n")
    );
    within(start, Duration::from_secs(600), "10x13");
}

fn strip_counts() {
    let start = Instant::now();
    for r in 2..=10usize {
        assert_eq!(count_strip(r, 0).unwrap().total.to_string(), "2");
        assert_eq!(
            count_strip(r, 1).unwrap().total.to_string(),
            (4 * r).to_string()
        );
        assert_eq!(
            count_strip(r, 1).unwrap().vertical.to_string(),
            (4 * r - 2).to_string()
        );
    }
    for r in 2..=8usize {
        for n in 0..=6usize {
            let (mut v, mut h) = (0u64, 0u64);
            gen_strip(r, n, |c| match c.leftmost_bond() {
                Bond::Vertical => v += 1,
                Bond::Horizontal => h += 1,
            })
            .unwrap();
            let want = count_strip(r, n).unwrap();
            assert_eq!(v.to_string(), want.vertical.to_string(), "r={r} n={n}");
            assert_eq!(h.to_string(), want.horizontal.to_string(), "r={r} n={n}");
            if (4 * r as u128).pow(n as u32) <= BRUTE_FORCE_GUARD {
                assert_eq!(brute_filter_count(r, n).unwrap(), want.total, "r={r} n={n}");
            }
        }
    }
    within(start, Duration::from_secs(60), "strip counts");
}

fn ksum_exactness() {
    let start = Instant::now();
    for n in 0..=20usize {
        let mut by_sum = vec![HashSet::new(); triangular(n) as usize + 1];
        for mask in 0u32..1 << n {
            let sum: usize = (0..n).filter(|b| mask >> b & 1 == 1).map(|b| b + 1).sum();
            by_sum[sum].insert(mask);
        }
        let mut state = init_c4(n);
        let empty = state.cells().to_vec();
        for (k, expected) in by_sum.iter().enumerate() {
            let mut seen = HashSet::new();
            gen_ksum(&mut state, n, k as i64, |s| {
                let mask = s.iter().fold(0u32, |m, e| m | 1 << (e - 1));
                assert!(seen.insert(mask), "duplicate subset");
            })
            .unwrap();
            assert_eq!(&seen, expected, "n={n} k={k}");
            assert_eq!(state.cells(), empty.as_slice(), "state not restored");
        }
    }
    within(start, Duration::from_secs(60), "k-sum exactness");
}

fn cat_constants() {
    let start = Instant::now();
    let pins = PinnedConstants::load().unwrap();
    let mut failures = Vec::new();
    for point in regression_points() {
        let report = point.run(Some(pins.budget)).unwrap();
        let size = match point {
            tatami::bench::BenchTarget::Subsets { n, .. }
            | tatami::bench::BenchTarget::Square { n, .. } => n,
            tatami::bench::BenchTarget::Strip { r, n } => 4 * r + n,
        };
        assert!(
            report.preprocessing_steps <= 2 * size as u64 + 2,
            "{report}: preprocessing is not linear"
        );
        if let Err(msg) = pins.check(&report) {
            failures.push(msg);
        }
    }
    assert!(failures.is_empty(), "{failures:?}");
    within(start, Duration::from_secs(120), "CAT suite");
}

fn square_shape(c: &Covering, n: usize) {
    assert!(c.is_tatami());
    assert_eq!(c.count(TileKind::Monomino), n);
    assert_eq!(c.tile_at(1, 1).kind, TileKind::Monomino);
    assert_eq!(c.tile_at(1, n).kind, TileKind::Monomino);
}

fn structural_invariants() {
    for n in [2, 4, 6, 8, 10, 12] {
        let mut all = Vec::new();
        for k in 0..=max_diagonal_sum(n) {
            all.extend(elements(n, k));
        }
        let set: HashSet<&VhElement> = all.iter().collect();
        for e in &all {
            if let VhElement::Dominant { .. } = e {
                assert!(set.contains(&e.mirrored()), "{e} lacks its pair");
            }
            square_shape(&render_square(e, n).unwrap(), n);
        }
    }
    for n in [3, 5, 7, 9] {
        let mut all = Vec::new();
        for k in 0..=max_diagonal_sum(n) {
            all.extend(elements(n, k));
        }
        let set: HashSet<&VhElement> = all.iter().collect();
        for e in &all {
            if let VhElement::Dominant { .. } = e {
                assert!(set.contains(&e.mirrored()), "{e} lacks its pair");
            }
        }
    }
    for n in 2..=8 {
        enumerate_coverings(&OracleQuery::square(n), |c| square_shape(c, n)).unwrap();
    }
    let mut counts = HashMap::new();
    for (rows, cols) in [(3, 3), (4, 5), (5, 6), (6, 6)] {
        enumerate_coverings(&OracleQuery::rect(rows, cols), |c| {
            assert!(c.is_tatami());
            *counts.entry((rows, cols)).or_insert(0u64) += 1;
        })
        .unwrap();
    }
    assert!(counts.values().all(|&c| c > 0));
}

#[test]
fn acceptance_criteria() {
    let criteria: [(&str, fn()); 8] = [
        (
            "1 |VD(8,7)| = 24 and the listing matches the reference",
            vd_8_7_listing,
        ),
        (
            "2 even-n renders equal the oracle sets",
            even_oracle_equivalence,
        ),
        (
            "3 odd-n counts equal the oracle histograms",
            odd_oracle_equivalence,
        ),
        ("4 10x13 has no domino tatami covering", ten_by_thirteen),
        ("5 strip counts, generation and filter agree", strip_counts),
        (
            "6 k-sum generation is exact and restores state",
            ksum_exactness,
        ),
        (
            "7 step ratios within 10% of pinned constants",
            cat_constants,
        ),
        ("8 structural invariants", structural_invariants),
    ];
    let mut failed = Vec::new();
    for (name, check) in criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check));
        let verdict = if outcome.is_ok() { "PASS" } else { "FAIL" };
        // Written past the harness capture so the summary always shows.
        let mut out = std::io::stdout().lock();
        let _ = writeln!(out, "criterion {name}: {verdict} ({:.2?})", start.elapsed());
        if outcome.is_err() {
            failed.push(name);
        }
    }
    assert!(failed.is_empty(), "failed: {failed:?}");
}
