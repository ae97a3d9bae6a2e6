//! Enumerate bonds and broken bonds, build the complex of bond-free edge
//! sets, and recover the d = 0 flow polynomial from its f-vector.
//!
//! ```bash
//! cargo run -p signed-flows --example broken_bonds
//! ```

use signed_flows::bonds::{
    bb_free_fvector, broken_bonds, check_homogeneous, enumerate_bonds, f0_broken, sigma,
    EdgeOrder,
};
use signed_flows::error::Budget;
use signed_flows::families;
use signed_flows::flowpoly::fd_polynomial;

fn main() {
    let budget = Budget::DEFAULT;
    for (name, g) in [
        ("dumbbell", families::dumbbell()),
        ("three negative loops", families::g5()),
        ("digon with one negative edge", families::g1()),
    ] {
        let order = EdgeOrder::identity(g.m());
        println!("{name}  (m - n = {})", g.m() as i64 - g.n() as i64);
        let bonds = enumerate_bonds(&g, budget).unwrap();
        println!("  bonds: {:?}", bonds.iter().map(|b| b.edges.to_vec()).collect::<Vec<_>>());
        let brokens = broken_bonds(&g, &order, budget).unwrap();
        println!("  broken bonds: {:?}", brokens.iter().map(|b| b.to_vec()).collect::<Vec<_>>());
        let fvector = bb_free_fvector(&g, &order, budget).unwrap();
        println!("  f-vector of the bond-free complex: {fvector:?}");
        println!("  sigma = {}", sigma(&g, &order));

        // the two expansions of F_0 must agree
        let broken = f0_broken(&g, &order, budget).unwrap();
        let subset = fd_polynomial(&g, 0, budget).unwrap();
        assert_eq!(broken, subset);
        println!("  F_0(x) = {broken}");

        match check_homogeneous(&g, &order, budget) {
            Ok(report) => println!(
                "  homogeneous complex: top dim {}, {} maximal simplices\n",
                report.top_dim, report.maximal_count
            ),
            Err(e) => println!("  homogeneity not applicable: {e}\n"),
        }
    }
}
