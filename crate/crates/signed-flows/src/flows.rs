//! Group-valued flows: generation from the fundamental system, the
//! classification by order-2 root coefficients, decomposition, and the
//! brute-force oracle.
//!
//! Every flow of a connected unbalanced graph is `gamma * g + sum_e
//! gamma_e * f_e` with `gamma` of order dividing 2 and free coefficients
//! on the cotree, and the representation is unique. Flows are compared as
//! edge-value assignments under a fixed orientation; values produced under
//! another orientation of the same switching class transport over by
//! negating the edges whose orientation was reversed.

use crate::circuits::FundamentalSystem;
use crate::error::{Budget, Error, Result};
use crate::group::{AbelianGroup, GroupElement};
use crate::sgraph::{Orientation, SignedGraph};
use num_bigint::BigUint;

/// An edge-indexed assignment of group elements.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FlowVector {
    values: Vec<GroupElement>,
}

/// `k^e` saturated at the budget-breaking maximum.
fn pow_cost(k: u64, e: u32) -> u128 {
    (k as u128).checked_pow(e).unwrap_or(u128::MAX)
}

impl FlowVector {
    pub fn new(values: Vec<GroupElement>) -> FlowVector {
        FlowVector { values }
    }

    pub fn value(&self, e: usize) -> &GroupElement {
        &self.values[e]
    }

    pub fn values(&self) -> &[GroupElement] {
        &self.values
    }

    pub fn is_nowhere_zero(&self, group: &AbelianGroup) -> bool {
        self.values.iter().all(|v| !group.is_zero(v))
    }
}

/// `sum_e eta(v, e) * f(e) = 0` at every vertex.
pub fn check_conservation(
    g: &SignedGraph,
    d: &Orientation,
    group: &AbelianGroup,
    f: &FlowVector,
) -> bool {
    debug_assert_eq!(f.values.len(), g.m());
    for v in 0..g.n() {
        let mut sum = group.zero();
        for e in 0..g.m() {
            let eta = g.incidence_coefficient(d, v, e);
            if eta != 0 {
                sum = group.add(&sum, &group.scale(eta as i64, f.value(e)));
            }
        }
        if !group.is_zero(&sum) {
            return false;
        }
    }
    true
}

/// The flow `gamma * g + sum_e coeffs[e] * f_e` on the normalized graph of
/// the system. `gamma` must satisfy `2 * gamma = 0`; `coeffs` is aligned
/// with [`FundamentalSystem::cotree`].
pub fn compose_flow(
    fs: &FundamentalSystem,
    group: &AbelianGroup,
    gamma: &GroupElement,
    coeffs: &[GroupElement],
) -> Result<FlowVector> {
    if !group.contains(gamma) || coeffs.iter().any(|c| !group.contains(c)) {
        return Err(Error::GroupMismatch);
    }
    if !group.is_involution(gamma) {
        return Err(Error::NotInvolution);
    }
    if coeffs.len() != fs.cotree().len() {
        return Err(Error::Internal(format!(
            "expected {} coefficients, got {}",
            fs.cotree().len(),
            coeffs.len()
        )));
    }
    let m = fs.graph().m();
    let mut values = Vec::with_capacity(m);
    for e in 0..m {
        let mut val = group.scale(fs.root_vector().value(e) as i64, gamma);
        for (c, coeff) in fs.circuits().iter().zip(coeffs) {
            let entry = c.vector.value(e);
            if entry != 0 {
                val = group.add(&val, &group.scale(entry as i64, coeff));
            }
        }
        values.push(val);
    }
    let flow = FlowVector { values };
    debug_assert!(check_conservation(fs.graph(), fs.orientation(), group, &flow));
    Ok(flow)
}

/// Inverse of [`compose_flow`]: read the cotree coefficients straight off
/// the flow and recover `gamma` from the negative edges,
/// `gamma = f(e0) - sum of f over the other negative edges`.
pub fn decompose_flow(
    fs: &FundamentalSystem,
    group: &AbelianGroup,
    f: &FlowVector,
) -> Result<(GroupElement, Vec<GroupElement>)> {
    if f.values.len() != fs.graph().m() || f.values.iter().any(|v| !group.contains(v)) {
        return Err(Error::GroupMismatch);
    }
    if !check_conservation(fs.graph(), fs.orientation(), group, f) {
        return Err(Error::NotConservative);
    }
    let coeffs: Vec<GroupElement> = fs.cotree().iter().map(|&e| *f.value(e)).collect();
    let mut gamma = *f.value(fs.root_edge());
    for e in fs.graph().negative_edges().iter() {
        if e != fs.root_edge() {
            gamma = group.sub(&gamma, f.value(e));
        }
    }
    if !group.is_involution(&gamma) {
        return Err(Error::Internal("decomposed root coefficient is not of order 2".into()));
    }
    let back = compose_flow(fs, group, &gamma, &coeffs)?;
    if &back != f {
        return Err(Error::Internal("decomposition does not recompose to the input".into()));
    }
    Ok((gamma, coeffs))
}

/// All flows of the system's graph, enumerated as `gamma` runs over the
/// order-2 elements and the coefficients over the whole group. The result
/// has exactly `2^epsilon * k^(m - n)` pairwise-distinct entries.
pub fn enumerate_flows(
    fs: &FundamentalSystem,
    group: &AbelianGroup,
    budget: Budget,
) -> Result<Vec<FlowVector>> {
    let cotree = fs.cotree().len();
    let count = (1u128 << group.epsilon())
        .saturating_mul(pow_cost(group.order(), cotree as u32));
    budget.check(count)?;
    let mut out = Vec::with_capacity(count as usize);
    for gamma in group.involution_set() {
        let mut idx = vec![0u64; cotree];
        let mut coeffs = vec![group.zero(); cotree];
        'odometer: loop {
            out.push(compose_flow(fs, group, &gamma, &coeffs)?);
            // mixed-radix increment, last coordinate fastest
            let mut pos = cotree;
            loop {
                if pos == 0 {
                    break 'odometer;
                }
                pos -= 1;
                idx[pos] += 1;
                if idx[pos] < group.order() {
                    coeffs[pos] = group.element_at(idx[pos]);
                    break;
                }
                idx[pos] = 0;
                coeffs[pos] = group.zero();
            }
        }
    }
    Ok(out)
}

/// Flows grouped by their order-2 root coefficient, in element order.
/// The classes partition the flow set evenly into `k^(m - n)` each.
pub fn flow_classes(
    fs: &FundamentalSystem,
    group: &AbelianGroup,
    budget: Budget,
) -> Result<Vec<(GroupElement, Vec<FlowVector>)>> {
    let flows = enumerate_flows(fs, group, budget)?;
    let class_size = flows.len() / group.involution_set().len();
    let mut out: Vec<(GroupElement, Vec<FlowVector>)> = Vec::new();
    let mut it = flows.into_iter();
    for gamma in group.involution_set() {
        let class: Vec<FlowVector> = it.by_ref().take(class_size).collect();
        out.push((gamma, class));
    }
    Ok(out)
}

/// Enumerate all `|group|^m` assignments under `d` and keep the
/// conservative ones. Makes no use of fundamental circuits; this is the
/// independent oracle for every counting claim.
pub fn brute_force_flows_oriented(
    g: &SignedGraph,
    d: &Orientation,
    group: &AbelianGroup,
    nowhere_zero: bool,
    budget: Budget,
) -> Result<Vec<FlowVector>> {
    let k = group.order();
    budget.check(pow_cost(k, g.m() as u32))?;
    // per-vertex incidence lists make the conservation check cheap
    let mut incidence: Vec<Vec<(usize, i64)>> = vec![Vec::new(); g.n()];
    for (v, inc) in incidence.iter_mut().enumerate() {
        for e in 0..g.m() {
            let eta = g.incidence_coefficient(d, v, e);
            if eta != 0 {
                inc.push((e, eta as i64));
            }
        }
    }
    let mut out = Vec::new();
    let mut values = vec![group.zero(); g.m()];
    let mut idx = vec![0u64; g.m()];
    loop {
        let conservative = incidence.iter().all(|inc| {
            let mut sum = group.zero();
            for &(e, eta) in inc {
                // eta is one of +-1, +-2; repeated add beats generic scaling
                let v = &values[e];
                match eta {
                    1 => sum = group.add(&sum, v),
                    -1 => sum = group.sub(&sum, v),
                    2 => sum = group.add(&group.add(&sum, v), v),
                    -2 => sum = group.sub(&group.sub(&sum, v), v),
                    _ => sum = group.add(&sum, &group.scale(eta, v)),
                }
            }
            group.is_zero(&sum)
        });
        if conservative && (!nowhere_zero || values.iter().all(|v| !group.is_zero(v))) {
            out.push(FlowVector { values: values.clone() });
        }
        let mut pos = g.m();
        loop {
            if pos == 0 {
                return Ok(out);
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < k {
                values[pos] = group.element_at(idx[pos]);
                break;
            }
            idx[pos] = 0;
            values[pos] = group.zero();
        }
    }
}

/// [`brute_force_flows_oriented`] under the graph's default canonical
/// orientation (rooted at its smallest-id negative edge, if any).
pub fn brute_force_flows(
    g: &SignedGraph,
    group: &AbelianGroup,
    nowhere_zero: bool,
    budget: Budget,
) -> Result<Vec<FlowVector>> {
    brute_force_flows_oriented(g, &g.default_orientation(), group, nowhere_zero, budget)
}

/// Closed-form count of all flows (zero values allowed):
/// `2^(kappa * epsilon) * k^beta` over the whole graph.
pub fn total_flow_count(g: &SignedGraph, group: &AbelianGroup) -> BigUint {
    let kappa = g.kappa() as u32;
    let beta = g.beta() as u32;
    let two = BigUint::from(2u32);
    let k = BigUint::from(group.order());
    two.pow(kappa * group.epsilon()) * k.pow(beta)
}

/// Flows of a connected balanced graph, generated by the ordinary
/// fundamental circuits of a spanning tree: `k^(m - n + 1)` of them.
/// Returned on the input graph under its default orientation.
pub fn enumerate_balanced_flows(
    g: &SignedGraph,
    group: &AbelianGroup,
    budget: Budget,
) -> Result<Vec<FlowVector>> {
    let norm = g.normalize_positive_tree()?;
    if !norm.graph.negative_edges().is_empty() {
        return Err(Error::Unsupported("graph is unbalanced".into()));
    }
    let cotree: Vec<usize> = (0..g.m()).filter(|&e| !norm.tree.contains(e)).collect();
    budget.check(pow_cost(group.order(), cotree.len() as u32))?;

    // ordinary fundamental circuit vectors on the all-positive graph
    let d_norm = norm.graph.canonical_orientation(None)?;
    let mut vectors: Vec<Vec<i8>> = Vec::with_capacity(cotree.len());
    for &e in &cotree {
        let vec = ordinary_circuit_vector(&norm.graph, &d_norm, norm.tree, e)?;
        debug_assert!(
            crate::circuits::integer_conservation_violations(&norm.graph, &d_norm, &vec)
                .is_empty()
        );
        vectors.push(vec);
    }

    let d_orig = g.default_orientation();
    let mut out = Vec::new();
    let mut coeff_idx = vec![0u64; cotree.len()];
    loop {
        let mut values = vec![group.zero(); g.m()];
        for (vec, &ci) in vectors.iter().zip(&coeff_idx) {
            let coeff = group.element_at(ci);
            for (e, &entry) in vec.iter().enumerate() {
                if entry != 0 {
                    values[e] = group.add(&values[e], &group.scale(entry as i64, &coeff));
                }
            }
        }
        let on_norm = FlowVector { values };
        out.push(transport_flow(
            group,
            &on_norm,
            (&norm.graph, &d_norm),
            (g, &d_orig),
            &norm.switched,
        )?);
        let mut pos = cotree.len();
        loop {
            if pos == 0 {
                return Ok(out);
            }
            pos -= 1;
            coeff_idx[pos] += 1;
            if coeff_idx[pos] < group.order() {
                break;
            }
            coeff_idx[pos] = 0;
        }
    }
}

fn ordinary_circuit_vector(
    g: &SignedGraph,
    d: &Orientation,
    tree: crate::sgraph::EdgeSet,
    e: usize,
) -> Result<Vec<i8>> {
    // walk the tree circuit of e, orienting along e
    let ed = *g.edge(e);
    let mut values = vec![0i8; g.m()];
    values[e] = 1;
    if ed.is_loop() {
        return Ok(values);
    }
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); g.n()];
    for t in tree.iter() {
        let te = g.edge(t);
        adj[te.u].push((te.v, t));
        adj[te.v].push((te.u, t));
    }
    let (tail, head) = d.direction(g, e);
    // unique tree path head -> tail closes the walk
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; g.n()];
    let mut stack = vec![head];
    let mut seen = vec![false; g.n()];
    seen[head] = true;
    while let Some(u) = stack.pop() {
        for &(w, t) in &adj[u] {
            if !seen[w] {
                seen[w] = true;
                parent[w] = Some((u, t));
                stack.push(w);
            }
        }
    }
    let mut v = tail;
    while v != head {
        let (prev, t) = parent[v].ok_or(Error::Disconnected)?;
        // the walk passes prev -> v on its way back to the tail
        values[t] = if d.direction(g, t) == (prev, v) { 1 } else { -1 };
        v = prev;
    }
    Ok(values)
}

/// Re-express a flow given on `(from.0, from.1)` as a flow on `(to.0,
/// to.1)`, where `to.0` is obtained from `from.0` by switching at
/// `switched`. Edges whose half-edge pair is reversed between the two
/// orientations get negated values; a half-edge pattern that matches
/// neither indicates the graphs are not related by this switching.
pub fn transport_flow(
    group: &AbelianGroup,
    f: &FlowVector,
    from: (&SignedGraph, &Orientation),
    to: (&SignedGraph, &Orientation),
    switched: &[bool],
) -> Result<FlowVector> {
    let (from_g, from_d) = from;
    let (to_g, to_d) = to;
    if from_g.m() != to_g.m() || f.values.len() != from_g.m() {
        return Err(Error::Internal("transport between different edge sets".into()));
    }
    let expected = from_d.switched(from_g, switched);
    let mut values = Vec::with_capacity(f.values.len());
    for e in 0..from_g.m() {
        let want = to_d.taus(e);
        let have = expected.taus(e);
        if want == have {
            values.push(f.values[e]);
        } else if want == [-have[0], -have[1]] {
            values.push(group.neg(&f.values[e]));
        } else {
            return Err(Error::Internal(format!(
                "edge {e}: orientations are not switching-related"
            )));
        }
    }
    Ok(FlowVector { values })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::sgraph::Sign;
    use std::collections::HashSet;

    fn groups_upto_6() -> Vec<AbelianGroup> {
        [&[2][..], &[3], &[4], &[2, 2], &[5], &[6], &[2, 3]]
            .iter()
            .map(|p| AbelianGroup::new(p).unwrap())
            .collect()
    }

    #[test]
    fn compose_g5_example() {
        let fs = FundamentalSystem::build(&families::g5()).unwrap();
        let z3 = AbelianGroup::new(&[3]).unwrap();
        let f = compose_flow(&fs, &z3, &z3.zero(), &[z3.of(1), z3.of(1)]).unwrap();
        assert_eq!(f.values(), &[z3.of(2), z3.of(1), z3.of(1)]);
        let zero = compose_flow(&fs, &z3, &z3.zero(), &[z3.of(0), z3.of(0)]).unwrap();
        assert!(zero.values().iter().all(|v| z3.is_zero(v)));
    }

    #[test]
    fn compose_g1_example() {
        let fs = FundamentalSystem::build(&families::g1()).unwrap();
        let z2z2 = AbelianGroup::new(&[2, 2]).unwrap();
        let gamma = z2z2.element(&[1, 1]).unwrap();
        let f = compose_flow(&fs, &z2z2, &gamma, &[]).unwrap();
        assert!(check_conservation(fs.graph(), fs.orientation(), &z2z2, &f));
        assert_eq!(f.value(fs.root_edge()), &gamma);
    }

    #[test]
    fn compose_rejects_non_involution() {
        let fs = FundamentalSystem::build(&families::g5()).unwrap();
        let z3 = AbelianGroup::new(&[3]).unwrap();
        assert_eq!(
            compose_flow(&fs, &z3, &z3.of(1), &[z3.of(0), z3.of(0)]).unwrap_err(),
            Error::NotInvolution
        );
    }

    #[test]
    fn conservation_examples() {
        let g5 = families::g5();
        let d = g5.canonical_orientation(Some(0)).unwrap();
        let z3 = AbelianGroup::new(&[3]).unwrap();
        let bad = FlowVector::new(vec![z3.of(1), z3.of(1), z3.of(1)]);
        assert!(!check_conservation(&g5, &d, &z3, &bad));
        let good = FlowVector::new(vec![z3.of(2), z3.of(1), z3.of(1)]);
        assert!(check_conservation(&g5, &d, &z3, &good));
    }

    #[test]
    fn enumerate_counts() {
        let budget = Budget::DEFAULT;
        let z3 = AbelianGroup::new(&[3]).unwrap();
        let z2z2 = AbelianGroup::new(&[2, 2]).unwrap();
        let z4 = AbelianGroup::new(&[4]).unwrap();
        let fs5 = FundamentalSystem::build(&families::g5()).unwrap();
        assert_eq!(enumerate_flows(&fs5, &z3, budget).unwrap().len(), 9);
        let fs1 = FundamentalSystem::build(&families::g1()).unwrap();
        assert_eq!(enumerate_flows(&fs1, &z2z2, budget).unwrap().len(), 4);
        let fsd = FundamentalSystem::build(&families::dumbbell()).unwrap();
        assert_eq!(enumerate_flows(&fsd, &z3, budget).unwrap().len(), 3);
        let fs2 = FundamentalSystem::build(&families::g2()).unwrap();
        let classes = flow_classes(&fs2, &z4, budget).unwrap();
        assert_eq!(classes.len(), 2);
        assert!(classes.iter().all(|(_, c)| c.len() == 4));
    }

    #[test]
    fn classes_partition_evenly() {
        let budget = Budget::DEFAULT;
        for g in [families::g1(), families::g2(), families::g5(), families::dumbbell()] {
            let fs = FundamentalSystem::build(&g).unwrap();
            for grp in groups_upto_6() {
                let k = grp.order();
                let mn = (g.m() - g.n()) as u32;
                let classes = flow_classes(&fs, &grp, budget).unwrap();
                assert_eq!(classes.len(), 1 << grp.epsilon());
                let mut all = HashSet::new();
                for (_, class) in &classes {
                    assert_eq!(class.len() as u64, k.pow(mn));
                    for f in class {
                        assert!(all.insert(f.clone()), "classes overlap");
                    }
                }
            }
        }
    }

    #[test]
    fn enumeration_matches_brute_force() {
        // completeness of the circuit generation on the small corpus
        let budget = Budget::DEFAULT;
        for g in families::all_connected_signed_graphs(3, 4) {
            if g.is_balanced() {
                continue;
            }
            let fs = FundamentalSystem::build(&g).unwrap();
            for grp in groups_upto_6() {
                let structured: HashSet<FlowVector> =
                    enumerate_flows(&fs, &grp, budget).unwrap().into_iter().collect();
                let expected =
                    (1u64 << grp.epsilon()) * grp.order().pow((g.m() - g.n()) as u32);
                assert_eq!(structured.len() as u64, expected, "{g:?} {:?}", grp.cyclic_orders());
                // oracle on the system's own graph and orientation
                let direct: HashSet<FlowVector> = brute_force_flows_oriented(
                    fs.graph(),
                    fs.orientation(),
                    &grp,
                    false,
                    budget,
                )
                .unwrap()
                .into_iter()
                .collect();
                assert_eq!(structured, direct, "{g:?} {:?}", grp.cyclic_orders());
                // and transported onto the original input graph
                let transported: HashSet<FlowVector> = structured
                    .iter()
                    .map(|f| {
                        transport_flow(
                            &grp,
                            f,
                            (fs.graph(), fs.orientation()),
                            (&g, &g.default_orientation()),
                            fs.switched(),
                        )
                        .unwrap()
                    })
                    .collect();
                let oracle: HashSet<FlowVector> =
                    brute_force_flows(&g, &grp, false, budget).unwrap().into_iter().collect();
                assert_eq!(transported, oracle, "{g:?} {:?}", grp.cyclic_orders());
            }
        }
    }

    #[test]
    fn decompose_round_trip_examples() {
        let z3 = AbelianGroup::new(&[3]).unwrap();
        let fs = FundamentalSystem::build(&families::g5()).unwrap();
        let f = FlowVector::new(vec![z3.of(2), z3.of(1), z3.of(1)]);
        let (gamma, coeffs) = decompose_flow(&fs, &z3, &f).unwrap();
        assert!(z3.is_zero(&gamma));
        assert_eq!(coeffs, vec![z3.of(1), z3.of(1)]);

        let zero = FlowVector::new(vec![z3.zero(); 3]);
        let (gamma, coeffs) = decompose_flow(&fs, &z3, &zero).unwrap();
        assert!(z3.is_zero(&gamma));
        assert!(coeffs.iter().all(|c| z3.is_zero(c)));

        let bad = FlowVector::new(vec![z3.of(1), z3.of(1), z3.of(1)]);
        assert_eq!(decompose_flow(&fs, &z3, &bad).unwrap_err(), Error::NotConservative);

        let z2z2 = AbelianGroup::new(&[2, 2]).unwrap();
        let fs1 = FundamentalSystem::build(&families::g1()).unwrap();
        let gamma = z2z2.element(&[1, 1]).unwrap();
        let f = compose_flow(&fs1, &z2z2, &gamma, &[]).unwrap();
        let (back, coeffs) = decompose_flow(&fs1, &z2z2, &f).unwrap();
        assert_eq!(back, gamma);
        assert!(coeffs.is_empty());
    }

    #[test]
    fn decompose_round_trip_grid() {
        let budget = Budget::DEFAULT;
        for g in [families::g5(), families::dumbbell(), families::g2()] {
            let fs = FundamentalSystem::build(&g).unwrap();
            for grp in groups_upto_6() {
                for f in enumerate_flows(&fs, &grp, budget).unwrap() {
                    let (gamma, coeffs) = decompose_flow(&fs, &grp, &f).unwrap();
                    let back = compose_flow(&fs, &grp, &gamma, &coeffs).unwrap();
                    assert_eq!(back, f);
                }
            }
        }
    }

    #[test]
    fn brute_force_known_counts() {
        let budget = Budget::DEFAULT;
        let z3 = AbelianGroup::new(&[3]).unwrap();
        let z2z2 = AbelianGroup::new(&[2, 2]).unwrap();
        let z4 = AbelianGroup::new(&[4]).unwrap();
        assert_eq!(brute_force_flows(&families::g1(), &z3, true, budget).unwrap().len(), 0);
        assert_eq!(brute_force_flows(&families::g1(), &z2z2, true, budget).unwrap().len(), 3);
        assert_eq!(brute_force_flows(&families::g2(), &z4, true, budget).unwrap().len(), 5);
    }

    #[test]
    fn total_count_examples() {
        let z3 = AbelianGroup::new(&[3]).unwrap();
        let z5 = AbelianGroup::new(&[5]).unwrap();
        let z2z2 = AbelianGroup::new(&[2, 2]).unwrap();
        assert_eq!(total_flow_count(&families::g5(), &z3), BigUint::from(9u32));
        assert_eq!(total_flow_count(&families::positive_triangle(), &z5), BigUint::from(5u32));
        let double = families::disjoint_union(&families::g1(), &families::g1());
        assert_eq!(total_flow_count(&double, &z2z2), BigUint::from(16u32));
    }

    #[test]
    fn total_count_matches_brute_force() {
        let budget = Budget::DEFAULT;
        let mixed = families::disjoint_union(&families::positive_triangle(), &families::g2());
        for grp in [AbelianGroup::new(&[3]).unwrap(), AbelianGroup::new(&[4]).unwrap()] {
            let oracle = brute_force_flows(&mixed, &grp, false, budget).unwrap().len();
            assert_eq!(total_flow_count(&mixed, &grp), BigUint::from(oracle));
        }
    }

    #[test]
    fn balanced_enumeration_matches_brute_force() {
        let budget = Budget::DEFAULT;
        for g in families::all_connected_signed_graphs(4, 4) {
            if !g.is_balanced() {
                continue;
            }
            for grp in [AbelianGroup::new(&[3]).unwrap(), AbelianGroup::new(&[4]).unwrap()] {
                let structured: HashSet<FlowVector> =
                    enumerate_balanced_flows(&g, &grp, budget).unwrap().into_iter().collect();
                let oracle: HashSet<FlowVector> =
                    brute_force_flows(&g, &grp, false, budget).unwrap().into_iter().collect();
                assert_eq!(structured, oracle, "{g:?} {:?}", grp.cyclic_orders());
                assert_eq!(
                    structured.len() as u64,
                    grp.order().pow((g.m() + 1 - g.n()) as u32)
                );
            }
        }
    }

    #[test]
    fn nowhere_zero_count_invariant_under_reorientation_and_switching() {
        let budget = Budget::DEFAULT;
        let z4 = AbelianGroup::new(&[4]).unwrap();
        for g in [families::g2(), families::g4(), families::dumbbell()] {
            let d = g.default_orientation();
            let base = brute_force_flows_oriented(&g, &d, &z4, true, budget).unwrap().len();
            for e in 0..g.m() {
                let rd = d.reverse_edge(e);
                let count =
                    brute_force_flows_oriented(&g, &rd, &z4, true, budget).unwrap().len();
                assert_eq!(count, base);
            }
            for v in 0..g.n() {
                let sw = g.switch_at(v);
                let count = brute_force_flows(&sw, &z4, true, budget).unwrap().len();
                assert_eq!(count, base);
            }
        }
    }

    #[test]
    fn isomorphic_presentations_agree() {
        let budget = Budget::DEFAULT;
        let z6 = AbelianGroup::new(&[6]).unwrap();
        let z2z3 = AbelianGroup::new(&[2, 3]).unwrap();
        for g in [families::g2(), families::g5(), families::dumbbell()] {
            let a = brute_force_flows(&g, &z6, true, budget).unwrap().len();
            let b = brute_force_flows(&g, &z2z3, true, budget).unwrap().len();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn odd_order_polynomial_at_even_values() {
        // for a fixed order-2 element of a group of even order h, the flows
        // in its class number h^(m-n), the odd-order count evaluated at h
        let budget = Budget::DEFAULT;
        let g = families::g5();
        let fs = FundamentalSystem::build(&g).unwrap();
        for grp in [AbelianGroup::new(&[4]).unwrap(), AbelianGroup::new(&[2, 2]).unwrap()] {
            let h = grp.order();
            let mn = (g.m() - g.n()) as u32;
            for gamma in grp.involution_set() {
                let count = brute_force_flows_oriented(
                    fs.graph(),
                    fs.orientation(),
                    &grp,
                    false,
                    budget,
                )
                .unwrap()
                .into_iter()
                .filter(|f| decompose_flow(&fs, &grp, f).unwrap().0 == gamma)
                .count();
                assert_eq!(count as u64, h.pow(mn));
            }
        }
    }

    #[test]
    fn budget_errors() {
        let g = families::g5();
        let z3 = AbelianGroup::new(&[3]).unwrap();
        assert!(matches!(
            brute_force_flows(&g, &z3, false, Budget(10)),
            Err(Error::Budget { .. })
        ));
        let fs = FundamentalSystem::build(&g).unwrap();
        assert!(matches!(enumerate_flows(&fs, &z3, Budget(5)), Err(Error::Budget { .. })));
    }

    #[test]
    fn edgeless_graph_has_the_empty_flow() {
        let g = SignedGraph::from_edges(1, &[]).unwrap();
        let z3 = AbelianGroup::new(&[3]).unwrap();
        let flows = brute_force_flows(&g, &z3, true, Budget::DEFAULT).unwrap();
        assert_eq!(flows.len(), 1);
        assert_eq!(total_flow_count(&g, &z3), BigUint::from(1u32));
    }

    #[test]
    fn single_negative_edge_carries_no_flow() {
        // no circuit through it, so conservation forces the zero value
        let g = SignedGraph::from_edges(2, &[(0, 1, Sign::Negative)]).unwrap();
        let z3 = AbelianGroup::new(&[3]).unwrap();
        let flows = brute_force_flows(&g, &z3, false, Budget::DEFAULT).unwrap();
        assert_eq!(flows.len(), 1);
        assert_eq!(total_flow_count(&g, &z3), BigUint::from(1u32));
    }
}
