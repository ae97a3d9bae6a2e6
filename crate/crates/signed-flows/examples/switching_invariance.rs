//! Nowhere-zero flow counts are invariant under switching and under
//! re-orienting edges; this example exercises both on random graphs.
//!
//! ```bash
//! cargo run -p signed-flows --example switching_invariance
//! ```

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use signed_flows::error::Budget;
use signed_flows::flows::{brute_force_flows, brute_force_flows_oriented};
use signed_flows::group::AbelianGroup;
use signed_flows::sgraph::{Sign, SignedGraph};

fn random_connected(rng: &mut StdRng, n: usize, m: usize) -> SignedGraph {
    loop {
        let edges: Vec<(usize, usize, Sign)> = (0..m)
            .map(|_| {
                let u = rng.gen_range(0..n);
                let v = rng.gen_range(0..n);
                let sign = if rng.gen_bool(0.5) { Sign::Negative } else { Sign::Positive };
                (u, v, sign)
            })
            .collect();
        let g = SignedGraph::from_edges(n, &edges).unwrap();
        if g.is_connected() {
            return g;
        }
    }
}

fn main() {
    let budget = Budget::DEFAULT;
    let mut rng = StdRng::seed_from_u64(7);
    let z4 = AbelianGroup::new(&[4]).unwrap();

    for trial in 0..10 {
        let n = rng.gen_range(2..=4);
        let m = rng.gen_range(n - 1..=5).max(1);
        let g = random_connected(&mut rng, n, m);
        let base = brute_force_flows(&g, &z4, true, budget).unwrap().len();

        // a chain of random switchings
        let mut switched = g.clone();
        for _ in 0..5 {
            switched = switched.switch_at(rng.gen_range(0..g.n()));
        }
        let after_switch = brute_force_flows(&switched, &z4, true, budget).unwrap().len();

        // a random edge reversal
        let d = g.default_orientation().reverse_edge(rng.gen_range(0..g.m()));
        let after_reverse = brute_force_flows_oriented(&g, &d, &z4, true, budget).unwrap().len();

        assert_eq!(base, after_switch);
        assert_eq!(base, after_reverse);
        println!(
            "trial {trial}: n = {}, m = {}, nowhere-zero Z_4 flows = {base} (invariant)",
            g.n(),
            g.m()
        );
    }
}
