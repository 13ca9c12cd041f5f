//! The acceptance gate: one test per acceptance criterion, each printing a
//! single pass line when it holds. Everything here is exact; there are no
//! tolerances anywhere.

mod common;

use std::collections::BTreeSet;
use std::process::Command;
use zagreb::{
    bound_thm31, bound_thm32, bound_thm41, bound_thm42, c_n_p, c_n_s, canonical_form, decode_g6,
    encode_g6, enumerate_connected, k_n_p, k_n_s, lemma_suite, pi1, pi2, pi2_edge_form, read_g6,
    verify_all, ClassSpec, Theorem,
};

/// Connected graph counts by isomorphism class for n = 1..=8.
const CONNECTED_COUNTS: [usize; 8] = [1, 1, 2, 6, 21, 112, 853, 11117];

#[test]
fn criterion_1_exhaustive_theorem_verification() {
    let summary = verify_all(8).expect("n_max = 8 is supported");
    assert_eq!(summary.reports.len(), 60, "15 classes x 4 theorems");
    for report in &summary.reports {
        let where_ = format!("{} on {}", report.theorem, report.spec);
        assert!(report.bound_matches, "bound mismatch for {where_}");
        assert!(report.unique_extremal, "extremal tie for {where_}");
        assert!(report.extremal_is_named_graph, "wrong extremal graph for {where_}");
        assert!(report.pass, "failed report for {where_}");
    }
    assert!(summary.all_pass);

    // Spot checks against independently computed extremal values.
    let lookup = |theorem: Theorem, n: usize, k: usize| {
        summary
            .reports
            .iter()
            .find(|r| r.theorem == theorem && r.spec.n() == n && r.spec.k() == k)
            .expect("report exists")
    };
    assert_eq!(lookup(Theorem::T31, 5, 1).achieved.to_decimal(), "576");
    assert_eq!(lookup(Theorem::T41, 5, 1).achieved.to_decimal(), "11664");
    assert_eq!(lookup(Theorem::T42, 6, 2).achieved.to_decimal(), "61509375");
    assert_eq!(lookup(Theorem::T31, 6, 1).bound.to_decimal(), "2304");
    assert_eq!(lookup(Theorem::T41, 7, 2).bound.to_decimal(), "6553600");
    println!("criterion 1 PASS: all 60 theorem reports verified exactly up to n = 8");
}

#[test]
fn criterion_2_enumeration_counts() {
    for (i, &want) in CONNECTED_COUNTS.iter().enumerate() {
        let n = i + 1;
        let stream = enumerate_connected(n).expect("n <= 8");
        assert_eq!(stream.len(), want, "count mismatch at n = {n}");
    }

    // Independent cross-check: reduce every labeled connected graph to its
    // canonical form and compare the class sets, not just the counts.
    for n in 1..=6 {
        let brute: BTreeSet<_> = common::labeled_connected(n)
            .iter()
            .map(|g| canonical_form(g).expect("small graphs canonicalize"))
            .collect();
        let fast: BTreeSet<_> = enumerate_connected(n)
            .expect("n <= 8")
            .forms()
            .iter()
            .cloned()
            .collect();
        assert_eq!(brute, fast, "class sets differ at n = {n}");
    }
    println!("criterion 2 PASS: counts 1, 1, 2, 6, 21, 112, 853, 11117 and brute-force class sets match");
}

#[test]
fn criterion_3_lemma_direction_suites() {
    let report = lemma_suite(0xC0FFEE, 200).expect("suite runs");
    assert_eq!(report.checks.len(), 8);
    let randomized = [
        "cycle_splice_strict_decrease",
        "path_slide_weak_exchange",
        "hanging_tree_to_star",
        "pendent_path_relocation_disjunction",
        "pendent_path_concatenation",
        "endblock_merge_increase",
    ];
    for check in &report.checks {
        assert_eq!(check.violations, 0, "violations in {}", check.name);
        assert!(check.pass, "failed check {}", check.name);
        if randomized.contains(&check.name) {
            assert!(check.trials >= 200, "{} ran {} < 200 instances", check.name, check.trials);
        }
    }
    // The two exhaustive checks cover every instance in their stated scope,
    // far more than the randomized floor.
    let edge = report.checks.iter().find(|c| c.name == "edge_addition_monotonicity").unwrap();
    assert!(edge.trials > 200, "exhaustive non-edge scan is larger than this");
    let two = report.checks.iter().find(|c| c.name == "two_connected_extremes").unwrap();
    assert_eq!(two.trials, 538, "2-connected graphs with 3 <= n <= 7");
    assert!(report.all_pass);
    println!("criterion 3 PASS: zero violations across all eight direction checks");
}

#[test]
fn criterion_4_index_oracle_equivalence() {
    let mut graphs = 0;
    for n in 1..=7 {
        for g in enumerate_connected(n).expect("n <= 8").iter() {
            assert_eq!(pi2(&g), pi2_edge_form(&g), "pi2 forms differ on {:?}", g.edges());
            graphs += 1;
        }
    }
    assert_eq!(graphs, CONNECTED_COUNTS[..7].iter().sum::<usize>());
    println!("criterion 4 PASS: pi2 product forms agree on all {graphs} connected graphs up to n = 7");
}

#[test]
fn criterion_5_bridge_oracle_equivalence() {
    let mut graphs = 0;
    for n in 1..=7 {
        for g in enumerate_connected(n).expect("n <= 8").iter() {
            let mut fast = g.bridges().expect("connected");
            fast.sort_unstable();
            assert_eq!(fast, common::bridge_oracle(&g), "bridges differ on {:?}", g.edges());
            graphs += 1;
        }
    }
    println!("criterion 5 PASS: lowpoint bridges equal delete-and-test bridges on all {graphs} graphs up to n = 7");
}

#[test]
fn criterion_6_constructor_bound_consistency() {
    let classes = ClassSpec::all_up_to(30);
    assert_eq!(classes.len(), 378);
    for spec in classes {
        assert_eq!(pi1(&c_n_s(spec)), bound_thm31(spec), "T31 identity at {spec}");
        assert_eq!(pi2(&c_n_p(spec)), bound_thm32(spec), "T32 identity at {spec}");
        assert_eq!(pi1(&k_n_p(spec)), bound_thm41(spec), "T41 identity at {spec}");
        assert_eq!(pi2(&k_n_s(spec)), bound_thm42(spec), "T42 identity at {spec}");
    }
    println!("criterion 6 PASS: all four closed forms match their constructions on 378 classes up to n = 30");
}

#[test]
fn criterion_7_g6_round_trip() {
    for n in 1..=8 {
        for g in enumerate_connected(n).expect("n <= 8").iter() {
            let line = encode_g6(&g).expect("n <= 62");
            assert_eq!(decode_g6(&line).expect("own encoding decodes"), g);
        }
    }

    // Hand-derived records exercise the byte-exact direction independently
    // of the encoder.
    let valid = include_str!("fixtures/valid.g6");
    for record in valid.lines() {
        let g = decode_g6(record).expect("fixture records are valid");
        assert_eq!(encode_g6(&g).expect("n <= 62"), record, "re-encode changed bytes");
    }

    for bad in ["", "D", "Dhctrailing", "~?", "C ", "D?A"] {
        assert!(decode_g6(bad).is_err(), "accepted malformed record {bad:?}");
    }
    let err = read_g6(std::io::Cursor::new(include_str!("fixtures/malformed.g6")))
        .expect_err("malformed file rejected");
    assert!(err.to_string().contains("line 2"), "error should name the line: {err}");
    println!("criterion 7 PASS: graph6 round trips exactly and malformed records are rejected");
}

#[test]
fn criterion_8_worker_determinism() {
    let mut outputs = Vec::new();
    for workers in ["1", "2", "8"] {
        let out = Command::new(env!("CARGO_BIN_EXE_zagreb"))
            .args(["--workers", workers, "verify", "--n-max", "8"])
            .output()
            .expect("binary runs");
        assert!(out.status.success(), "workers={workers} exited {:?}", out.status.code());
        assert!(!out.stdout.is_empty());
        outputs.push(out.stdout);
    }
    assert_eq!(outputs[0], outputs[1], "workers 1 vs 2 differ");
    assert_eq!(outputs[0], outputs[2], "workers 1 vs 8 differ");
    println!("criterion 8 PASS: verify --n-max 8 stdout is byte-identical at workers 1, 2, 8");
}
