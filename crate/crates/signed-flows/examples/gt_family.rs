//! Replace every leaf of a tree by an unbalanced circuit and compare the
//! closed-form flow polynomial of the result against both expansions.
//!
//! ```bash
//! cargo run -p signed-flows --example gt_family
//! ```

use signed_flows::bonds::{build_gt, f0_broken, gt_formula};
use signed_flows::error::Budget;
use signed_flows::families::all_trees;
use signed_flows::flowpoly::fd_polynomial;

fn main() {
    let budget = Budget::DEFAULT;
    for n in 2..=6 {
        for tree in all_trees(n) {
            let formula = gt_formula(&tree).unwrap();
            for girth in 1..=3 {
                let (gt, order) = build_gt(&tree, girth).unwrap();
                let broken = f0_broken(&gt, &order, budget).unwrap();
                let subset = fd_polynomial(&gt, 0, budget).unwrap();
                assert_eq!(broken, formula);
                assert_eq!(subset, formula);
            }
            println!(
                "tree on {n} vertices, degrees {:?}: F_0(G_T, x) = {formula}",
                degree_sequence(&tree)
            );
        }
    }
    println!("\nclosed form, broken-bond expansion and subset expansion all agree");
}

fn degree_sequence(tree: &signed_flows::SignedGraph) -> Vec<usize> {
    let mut deg = vec![0usize; tree.n()];
    for e in tree.edges() {
        deg[e.u] += 1;
        deg[e.v] += 1;
    }
    deg.sort_unstable_by(|a, b| b.cmp(a));
    deg
}
