//! Acceptance suite: every structural claim the library rests on, checked
//! exactly against independent oracles.
//!
//! One test per criterion; each prints a `[PASS]` line (visible with
//! `cargo test --test acceptance -- --nocapture`). The exhaustive corpus
//! is every connected signed multigraph with up to 4 vertices and 5 edges
//! including all sign patterns, plus seeded random graphs with up to 6
//! edges.

use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use signed_flows::bonds::{
    bb_free_fvector, build_gt, check_homogeneous, coefficient_report, f0_broken, gt_formula,
    EdgeOrder,
};
use signed_flows::circuits::FundamentalSystem;
use signed_flows::error::Budget;
use signed_flows::families::{self, all_trees};
use signed_flows::flowpoly::{fd_polynomial, IntPolynomial};
use signed_flows::flows::{
    brute_force_flows, brute_force_flows_oriented, compose_flow, decompose_flow, enumerate_flows,
    flow_classes, total_flow_count, FlowVector,
};
use signed_flows::group::AbelianGroup;
use signed_flows::sgraph::{Sign, SignedGraph};
use std::collections::HashSet;

const BUDGET: Budget = Budget::DEFAULT;

fn group_panel() -> Vec<AbelianGroup> {
    [&[3u64][..], &[4], &[5], &[6], &[2, 2], &[2, 4]]
        .iter()
        .map(|p| AbelianGroup::new(p).unwrap())
        .collect()
}

fn groups_up_to_8() -> Vec<AbelianGroup> {
    [
        &[1u64][..],
        &[2],
        &[3],
        &[4],
        &[2, 2],
        &[5],
        &[6],
        &[2, 3],
        &[7],
        &[8],
        &[2, 4],
        &[2, 2, 2],
    ]
    .iter()
    .map(|p| AbelianGroup::new(p).unwrap())
    .collect()
}

/// Exhaustive corpus: all connected signed graphs, n <= 4, m <= 5.
fn exhaustive_corpus() -> Vec<SignedGraph> {
    families::all_connected_signed_graphs(4, 5)
}

/// At least 100 seeded random connected graphs with up to 6 edges.
fn random_corpus() -> Vec<SignedGraph> {
    let mut rng = StdRng::seed_from_u64(0x5f10_1abe);
    let mut out = Vec::new();
    while out.len() < 120 {
        let n = rng.gen_range(1..=5);
        let m = rng.gen_range(if n > 1 { n - 1 } else { 1 }..=6);
        let edges: Vec<(usize, usize, Sign)> = (0..m)
            .map(|_| {
                let u = rng.gen_range(0..n);
                let v = rng.gen_range(0..n);
                (u, v, if rng.gen_bool(0.5) { Sign::Negative } else { Sign::Positive })
            })
            .collect();
        let g = SignedGraph::from_edges(n, &edges).unwrap();
        if g.is_connected() {
            out.push(g);
        }
    }
    out
}

fn full_corpus() -> Vec<SignedGraph> {
    let mut corpus = exhaustive_corpus();
    corpus.extend(random_corpus());
    corpus
}

#[test]
fn criterion_01_worked_example_polynomials() {
    let start = std::time::Instant::now();
    for d in 0..=2u32 {
        let p = 1i64 << d;
        assert_eq!(
            fd_polynomial(&families::g1(), d, BUDGET).unwrap(),
            IntPolynomial::from_i64_coeffs(&[p - 1]),
            "digon, d = {d}"
        );
        assert_eq!(
            fd_polynomial(&families::g2(), d, BUDGET).unwrap(),
            IntPolynomial::from_i64_coeffs(&[1 - 2 * p, p]),
            "two negative loops, d = {d}"
        );
        assert_eq!(
            fd_polynomial(&families::g3(), d, BUDGET).unwrap(),
            IntPolynomial::from_i64_coeffs(&[1 - p, p - 1]),
            "negative + positive loop, d = {d}"
        );
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 1.0, "took {elapsed:?}");
    println!("[PASS] criterion 1: worked-example polynomials exact for d in 0..=2 ({elapsed:?})");
}

#[test]
fn criterion_02_polynomial_matches_brute_force_counts() {
    let corpus = full_corpus();
    let panel = group_panel();
    let mut checked = 0u64;
    for g in &corpus {
        for group in &panel {
            let poly = fd_polynomial(g, group.epsilon(), BUDGET).unwrap();
            let value = poly.evaluate(group.order() as i64);
            let oracle = brute_force_flows(g, group, true, BUDGET).unwrap().len();
            assert_eq!(
                value,
                BigInt::from(oracle),
                "{g:?} over Z{:?}",
                group.cyclic_orders()
            );
            checked += 1;
        }
    }
    println!(
        "[PASS] criterion 2: subset expansion equals brute-force nowhere-zero count on {} graph/group pairs",
        checked
    );
}

#[test]
fn criterion_03_flow_basis_generates_exactly_all_flows() {
    let corpus = full_corpus();
    let panel = group_panel();
    let mut checked = 0u64;
    for g in &corpus {
        if g.is_balanced() {
            continue;
        }
        let fs = FundamentalSystem::build(g).unwrap();
        let mn = (g.m() - g.n()) as u32;
        for group in &panel {
            let generated = enumerate_flows(&fs, group, BUDGET).unwrap();
            let expected = (1u128 << group.epsilon()) * (group.order() as u128).pow(mn);
            assert_eq!(generated.len() as u128, expected, "{g:?}");
            let distinct: HashSet<&FlowVector> = generated.iter().collect();
            assert_eq!(distinct.len(), generated.len(), "flows not pairwise distinct: {g:?}");
            let oracle =
                brute_force_flows_oriented(fs.graph(), fs.orientation(), group, false, BUDGET)
                    .unwrap();
            assert_eq!(oracle.len(), generated.len(), "{g:?}");
            assert!(oracle.iter().all(|f| distinct.contains(f)), "{g:?}");

            let classes = flow_classes(&fs, group, BUDGET).unwrap();
            assert_eq!(classes.len(), 1usize << group.epsilon(), "{g:?}");
            for (_, class) in &classes {
                assert_eq!(class.len() as u128, (group.order() as u128).pow(mn), "{g:?}");
            }
            checked += 1;
        }
    }
    println!(
        "[PASS] criterion 3: fundamental circuits generate exactly all flows, evenly classified ({checked} instances)"
    );
}

#[test]
fn criterion_04_total_count_on_multi_component_graphs() {
    let small: Vec<SignedGraph> = exhaustive_corpus()
        .into_iter()
        .filter(|g| g.m() <= 3 && g.n() <= 3)
        .collect();
    let balanced: Vec<&SignedGraph> = small.iter().filter(|g| g.is_balanced()).collect();
    let unbalanced: Vec<&SignedGraph> = small.iter().filter(|g| !g.is_balanced()).collect();
    let mut unions = Vec::new();
    for i in 0..12 {
        // mixed balanced/unbalanced pairs plus same-kind pairs
        unions.push(families::disjoint_union(
            balanced[i * 7 % balanced.len()],
            unbalanced[i * 11 % unbalanced.len()],
        ));
        unions.push(families::disjoint_union(
            unbalanced[i * 5 % unbalanced.len()],
            unbalanced[i * 13 % unbalanced.len()],
        ));
        unions.push(families::disjoint_union(
            balanced[i * 3 % balanced.len()],
            balanced[i * 17 % balanced.len()],
        ));
    }
    unions.push(families::disjoint_union(
        &families::disjoint_union(&families::g1(), &families::g2()),
        &families::positive_triangle(),
    ));
    let panel = group_panel();
    let mut checked = 0u64;
    for g in &unions {
        for group in &panel {
            if (group.order() as u128).pow(g.m() as u32) > BUDGET.0 as u128 {
                continue;
            }
            let closed = total_flow_count(g, group);
            let oracle = brute_force_flows(g, group, false, BUDGET).unwrap().len();
            assert_eq!(closed, oracle.into(), "{g:?} over Z{:?}", group.cyclic_orders());
            checked += 1;
        }
    }
    assert!(checked >= 150);
    println!(
        "[PASS] criterion 4: closed-form total flow count equals brute force on {} multi-component instances",
        checked
    );
}

#[test]
fn criterion_05_broken_bond_expansion_equals_subset_expansion() {
    let corpus = full_corpus();
    let mut rng = StdRng::seed_from_u64(0xb0bd);
    let mut checked = 0u64;
    for g in &corpus {
        let subset = fd_polynomial(g, 0, BUDGET).unwrap();
        let m = g.m();
        let mut orders = vec![EdgeOrder::identity(m)];
        for _ in 0..5 {
            let mut seq: Vec<usize> = (0..m).collect();
            seq.shuffle(&mut rng);
            orders.push(EdgeOrder::from_sequence(m, &seq).unwrap());
        }
        for order in &orders {
            assert_eq!(f0_broken(g, order, BUDGET).unwrap(), subset, "{g:?}");
            checked += 1;
        }
    }
    println!(
        "[PASS] criterion 5: broken-bond expansion equals subset expansion on {checked} graph/order pairs"
    );
}

#[test]
fn criterion_06_coefficient_interpretation() {
    let corpus = full_corpus();
    let mut checked = 0u64;
    let mut flagged: Vec<String> = Vec::new();
    for g in &corpus {
        if !g.is_connected() || g.is_balanced() {
            continue;
        }
        let order = EdgeOrder::identity(g.m());
        let report = coefficient_report(g, &order, BUDGET).unwrap();
        if !report.applicable {
            continue;
        }
        if !report.a1_matches_sigma {
            flagged.push(format!(
                "flagged finding: a_1 = {:?} but m - sigma = {} on {g:?}",
                report.fvector.get(1),
                g.m() - report.sigma
            ));
        }
        assert!(report.a0_is_one, "{g:?}");
        assert!(report.all_positive, "{g:?}");
        assert!(report.alternation_matches, "{g:?}");
        checked += 1;
    }
    for f in &flagged {
        println!("{f}");
    }
    assert!(flagged.is_empty(), "{} sigma mismatches flagged", flagged.len());
    println!(
        "[PASS] criterion 6: a_0 = 1, a_1 = m - sigma, positivity and alternation on {checked} admissible graphs"
    );
}

#[test]
fn criterion_07_homogeneous_complex() {
    let corpus = full_corpus();
    let mut checked = 0u64;
    for g in &corpus {
        if !g.is_connected() || g.is_balanced() {
            continue;
        }
        let order = EdgeOrder::identity(g.m());
        let f0 = f0_broken(g, &order, BUDGET).unwrap();
        if f0.is_zero() {
            continue;
        }
        let report = check_homogeneous(g, &order, BUDGET).unwrap();
        assert!(report.homogeneous, "{g:?} counterexample {:?}", report.counterexample);
        assert!(
            report.characterization_holds,
            "{g:?} counterexample {:?}",
            report.counterexample
        );
        // the f-vector lists the absolute coefficient values of F_0
        let fvector = bb_free_fvector(g, &order, BUDGET).unwrap();
        let top = report.top_dim;
        assert_eq!(fvector.len(), top + 1, "{g:?}");
        for (i, &a) in fvector.iter().enumerate() {
            let coeff = f0.coeff(top - i);
            let abs = if coeff < BigInt::from(0) { -coeff } else { coeff };
            assert_eq!(abs, BigInt::from(a), "{g:?} coefficient {i}");
        }
        checked += 1;
    }
    println!(
        "[PASS] criterion 7: bond-free complex homogeneous with the maximal-simplex characterization on {checked} graphs"
    );
}

#[test]
fn criterion_08_leaf_circuit_expansion_formula() {
    // the largest instance (star on 8 vertices, girth 3) has 2^28 subsets
    let budget = Budget(1 << 29);
    let mut checked = 0u64;
    for n in 2..=8 {
        for tree in all_trees(n) {
            let formula = gt_formula(&tree).unwrap();
            for girth in 1..=3usize {
                let (gt, order) = build_gt(&tree, girth).unwrap();
                let broken = f0_broken(&gt, &order, budget).unwrap();
                assert_eq!(broken, formula, "n={n} girth={girth}");
                let subset = fd_polynomial(&gt, 0, budget).unwrap();
                assert_eq!(subset, formula, "n={n} girth={girth}");
                checked += 1;
            }
        }
    }
    // spot values
    let path2 = SignedGraph::from_edges(2, &[(0, 1, Sign::Positive)]).unwrap();
    assert_eq!(gt_formula(&path2).unwrap(), IntPolynomial::from_i64_coeffs(&[-1, 1]));
    let star3 = SignedGraph::from_edges(
        4,
        &[(0, 1, Sign::Positive), (0, 2, Sign::Positive), (0, 3, Sign::Positive)],
    )
    .unwrap();
    assert_eq!(gt_formula(&star3).unwrap(), IntPolynomial::from_i64_coeffs(&[2, -3, 1]));
    println!(
        "[PASS] criterion 8: closed form = broken-bond = subset expansion on {checked} leaf-circuit graphs (trees up to 8 vertices, girths 1-3)"
    );
}

#[test]
fn criterion_09_decompose_compose_round_trip() {
    let graphs = [
        families::g1(),       // m - n = 0
        families::g2(),       // 1
        families::g4(),       // 1
        families::dumbbell(), // 1
        families::g5(),       // 2
        SignedGraph::from_edges(
            1,
            &[
                (0, 0, Sign::Negative),
                (0, 0, Sign::Negative),
                (0, 0, Sign::Negative),
                (0, 0, Sign::Negative),
            ],
        )
        .unwrap(), // 3
    ];
    let mut checked = 0u64;
    for g in &graphs {
        let fs = FundamentalSystem::build(g).unwrap();
        let cotree = fs.cotree().len();
        for group in groups_up_to_8() {
            // the full parameter grid
            let k = group.order();
            let involutions = group.involution_set();
            let mut coeff_idx = vec![0u64; cotree];
            loop {
                let coeffs: Vec<_> = coeff_idx.iter().map(|&i| group.element_at(i)).collect();
                for gamma in &involutions {
                    let flow = compose_flow(&fs, &group, gamma, &coeffs).unwrap();
                    let (back_gamma, back_coeffs) = decompose_flow(&fs, &group, &flow).unwrap();
                    assert_eq!(&back_gamma, gamma, "{g:?}");
                    assert_eq!(back_coeffs, coeffs, "{g:?}");
                    checked += 1;
                }
                let mut pos = cotree;
                loop {
                    if pos == 0 {
                        pos = usize::MAX;
                        break;
                    }
                    pos -= 1;
                    coeff_idx[pos] += 1;
                    if coeff_idx[pos] < k {
                        break;
                    }
                    coeff_idx[pos] = 0;
                }
                if pos == usize::MAX {
                    break;
                }
            }
        }
    }
    println!("[PASS] criterion 9: decompose(compose) is the identity on {checked} parameter points");
}

#[test]
fn criterion_10_count_invariance_under_switching_and_reorientation() {
    let corpus = exhaustive_corpus();
    let mut rng = StdRng::seed_from_u64(0xca11_ab1e);
    let groups = [AbelianGroup::new(&[3]).unwrap(), AbelianGroup::new(&[4]).unwrap()];
    let mut checked = 0u64;
    for (i, g) in corpus.iter().enumerate() {
        if i % 150 != 0 {
            continue;
        }
        for group in &groups {
            let base = brute_force_flows(g, group, true, BUDGET).unwrap().len();
            for _ in 0..3 {
                let set: Vec<bool> = (0..g.n()).map(|_| rng.gen_bool(0.5)).collect();
                let switched = g.switch_set(&set);
                let count = brute_force_flows(&switched, group, true, BUDGET).unwrap().len();
                assert_eq!(count, base, "{g:?} switched at {set:?}");
            }
            for _ in 0..2 {
                let e = rng.gen_range(0..g.m().max(1));
                if g.m() == 0 {
                    continue;
                }
                let d = g.default_orientation().reverse_edge(e);
                let count =
                    brute_force_flows_oriented(g, &d, group, true, BUDGET).unwrap().len();
                assert_eq!(count, base, "{g:?} reversed edge {e}");
            }
            checked += 1;
        }
    }
    assert!(checked >= 100);
    println!(
        "[PASS] criterion 10: nowhere-zero counts invariant under switching and re-orientation ({checked} instances)"
    );
}
