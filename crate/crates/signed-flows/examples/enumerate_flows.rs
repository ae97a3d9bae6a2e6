//! Build the fundamental system of a signed graph, generate every flow
//! from it, and classify the flows by their order-2 root coefficient.
//!
//! ```bash
//! cargo run -p signed-flows --example enumerate_flows
//! ```

use signed_flows::circuits::FundamentalSystem;
use signed_flows::error::Budget;
use signed_flows::families;
use signed_flows::flows::{decompose_flow, enumerate_flows, flow_classes};
use signed_flows::group::AbelianGroup;

fn main() {
    let budget = Budget::DEFAULT;
    let g = families::g5();
    let fs = FundamentalSystem::build(&g).unwrap();

    println!("three negative loops at one vertex");
    println!("  spanning tree: {:?}", fs.tree().to_vec());
    println!("  root edge: {}", fs.root_edge());
    println!("  root circuit: {:?}", fs.root_circuit().to_vec());
    println!("  root vector g = {:?}", fs.root_vector().values());
    for c in fs.circuits() {
        println!(
            "  cotree edge {}: circuit {:?}, f = {:?}",
            c.edge,
            c.circuit.to_vec(),
            c.vector.values()
        );
    }
    assert!(fs.verify_circuit_vectors().passed());

    let z3 = AbelianGroup::new(&[3]).unwrap();
    let all = enumerate_flows(&fs, &z3, budget).unwrap();
    println!("\nZ_3 flows ({} = 2^0 * 3^2):", all.len());
    for f in &all {
        let (gamma, coeffs) = decompose_flow(&fs, &z3, f).unwrap();
        println!("  {:?}  = {:?} * g + {:?} on the cotree", f.values(), gamma, coeffs);
    }

    // with even group order the flows split into 2^epsilon equal classes
    let z2z4 = AbelianGroup::new(&[2, 4]).unwrap();
    let classes = flow_classes(&fs, &z2z4, budget).unwrap();
    println!("\nZ_2 x Z_4 flow classes:");
    for (gamma, class) in &classes {
        println!("  gamma = {gamma:?}: {} flows", class.len());
    }
    let total: usize = classes.iter().map(|(_, c)| c.len()).sum();
    assert_eq!(total, 4 * 64); // 2^epsilon * k^(m-n)
}
