//! Compute flow polynomials by subset expansion and check them against
//! brute-force nowhere-zero counts.
//!
//! ```bash
//! cargo run -p signed-flows --example flow_polynomial
//! ```

use signed_flows::error::Budget;
use signed_flows::families;
use signed_flows::flowpoly::fd_polynomial;
use signed_flows::flows::brute_force_flows;
use signed_flows::group::AbelianGroup;

fn main() {
    let budget = Budget::DEFAULT;
    let graphs = [
        ("digon with one negative edge", families::g1()),
        ("two negative loops", families::g2()),
        ("negative loop + positive loop", families::g3()),
        ("three negative loops", families::g5()),
        ("dumbbell", families::dumbbell()),
    ];

    for (name, g) in &graphs {
        println!("{name}  (n = {}, m = {})", g.n(), g.m());
        for d in 0..=2u32 {
            let p = fd_polynomial(g, d, budget).unwrap();
            println!("  F_{d}(x) = {p}");
        }
        println!();
    }

    // evaluating F_d at |G| counts the nowhere-zero flows whenever the
    // group has exactly d even cyclic factors
    let panel = [
        AbelianGroup::new(&[3]).unwrap(),
        AbelianGroup::new(&[4]).unwrap(),
        AbelianGroup::new(&[2, 2]).unwrap(),
        AbelianGroup::new(&[6]).unwrap(),
    ];
    println!("cross-check against brute force:");
    for (name, g) in &graphs {
        for group in &panel {
            let p = fd_polynomial(g, group.epsilon(), budget).unwrap();
            let value = p.evaluate(group.order() as i64);
            let oracle = brute_force_flows(g, group, true, budget).unwrap().len();
            assert_eq!(value, oracle.into());
            println!(
                "  {name}: Z[{:?}] -> {oracle} nowhere-zero flows (= F_{}({}))",
                group.cyclic_orders(),
                group.epsilon(),
                group.order()
            );
        }
    }
}
