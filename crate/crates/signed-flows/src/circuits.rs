//! Fundamental directed circuits of a connected unbalanced signed graph.
//!
//! After switching so that a spanning tree `T` is all positive, the
//! smallest-id negative edge becomes the root edge `e0`. The signed rooted
//! tree `T0 = T + e0` contains exactly one circuit, the unbalanced root
//! circuit `C0`. Every remaining edge `e` closes a unique signed circuit
//! `C_e` inside `T0 + e`:
//!
//! * a positive cotree edge closes an ordinary (all-positive) circuit,
//! * a negative cotree edge closes either a balanced circuit through both
//!   `e0` and `e`, or a barbell: the two unbalanced circuits of `e0` and
//!   `e` joined by a (possibly trivial) tree path.
//!
//! Each circuit carries an integer edge vector `f_e` with `f_e(e) = 1`,
//! values of modulus 1 on circuit edges and 2 on the barbell path, chosen
//! so that integer conservation holds at every vertex. The root circuit
//! carries a `{-1, 0, 1}` vector `g` whose conservation defect is exactly
//! `2` at one chosen vertex, so `gamma * g` is a flow precisely when
//! `2 * gamma = 0`.

use crate::error::{Error, Result};
use crate::sgraph::{EdgeSet, Orientation, SignedGraph};

/// Integer edge vector with entries in `{-2, ..., 2}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CircuitVector {
    values: Vec<i8>,
}

impl CircuitVector {
    pub fn value(&self, e: usize) -> i8 {
        self.values[e]
    }

    pub fn values(&self) -> &[i8] {
        &self.values
    }

    pub fn support(&self) -> EdgeSet {
        EdgeSet::from_ids(
            self.values.iter().enumerate().filter(|(_, &v)| v != 0).map(|(i, _)| i),
        )
    }
}

/// Shape of a fundamental circuit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CircuitKind {
    /// All-positive circuit closed by a positive cotree edge.
    Ordinary,
    /// Balanced circuit through the root edge and one other negative edge.
    BalancedWithRoot,
    /// Two unbalanced circuits joined by a path; the path edges carry
    /// vector entries of modulus 2.
    Barbell { path: EdgeSet },
}

#[derive(Debug, Clone)]
pub struct FundamentalCircuit {
    /// The cotree edge that closes this circuit.
    pub edge: usize,
    /// Edge set of the signed circuit `C_e`.
    pub circuit: EdgeSet,
    pub kind: CircuitKind,
    /// The integer vector `f_e`.
    pub vector: CircuitVector,
}

/// Which vector a conservation failure refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VectorId {
    Root,
    Fundamental(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConservationFailure {
    pub vector: VectorId,
    pub vertex: usize,
    pub sum: i32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConservationReport {
    pub failures: Vec<ConservationFailure>,
}

impl ConservationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// The fundamental system of a connected unbalanced signed graph.
#[derive(Debug, Clone)]
pub struct FundamentalSystem {
    original: SignedGraph,
    normalized: SignedGraph,
    switched: Vec<bool>,
    orientation: Orientation,
    tree: EdgeSet,
    root_edge: usize,
    cotree: Vec<usize>,
    root_circuit: EdgeSet,
    root_vector: CircuitVector,
    circuits: Vec<FundamentalCircuit>,
}

struct TreePath {
    vertices: Vec<usize>,
    step_edges: Vec<usize>,
}

impl TreePath {
    fn edge_set(&self) -> EdgeSet {
        EdgeSet::from_ids(self.step_edges.iter().copied())
    }

    fn vertex_mask(&self) -> u64 {
        self.vertices.iter().fold(0u64, |acc, &v| acc | 1 << v)
    }
}

struct TreeFrame {
    parent_vertex: Vec<usize>,
    parent_edge: Vec<usize>,
    depth: Vec<usize>,
}

impl TreeFrame {
    fn build(g: &SignedGraph, tree: EdgeSet) -> TreeFrame {
        let n = g.n();
        let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
        for e in tree.iter() {
            let ed = g.edge(e);
            adj[ed.u].push((ed.v, e));
            adj[ed.v].push((ed.u, e));
        }
        let mut parent_vertex = vec![usize::MAX; n];
        let mut parent_edge = vec![usize::MAX; n];
        let mut depth = vec![0usize; n];
        let mut stack = vec![0usize];
        parent_vertex[0] = 0;
        while let Some(u) = stack.pop() {
            for &(w, e) in &adj[u] {
                if parent_vertex[w] == usize::MAX {
                    parent_vertex[w] = u;
                    parent_edge[w] = e;
                    depth[w] = depth[u] + 1;
                    stack.push(w);
                }
            }
        }
        TreeFrame { parent_vertex, parent_edge, depth }
    }

    /// Path from `u` to `v` along the tree, as the vertex sequence and the
    /// edge taken at each step.
    fn path(&self, u: usize, v: usize) -> TreePath {
        let mut left = vec![u];
        let mut left_edges = Vec::new();
        let mut right = vec![v];
        let mut right_edges = Vec::new();
        let (mut a, mut b) = (u, v);
        while self.depth[a] > self.depth[b] {
            left_edges.push(self.parent_edge[a]);
            a = self.parent_vertex[a];
            left.push(a);
        }
        while self.depth[b] > self.depth[a] {
            right_edges.push(self.parent_edge[b]);
            b = self.parent_vertex[b];
            right.push(b);
        }
        while a != b {
            left_edges.push(self.parent_edge[a]);
            a = self.parent_vertex[a];
            left.push(a);
            right_edges.push(self.parent_edge[b]);
            b = self.parent_vertex[b];
            right.push(b);
        }
        right.pop();
        left.extend(right.into_iter().rev());
        left_edges.extend(right_edges.into_iter().rev());
        TreePath { vertices: left, step_edges: left_edges }
    }
}

impl FundamentalSystem {
    /// Build the system: normalize, pick the root edge, orient under the
    /// root-extroverted convention, and derive every circuit vector.
    pub fn build(g: &SignedGraph) -> Result<FundamentalSystem> {
        let norm = g.normalize_positive_tree()?;
        let normalized = norm.graph;
        let negatives = normalized.negative_edges();
        let root_edge = negatives.iter().next().ok_or(Error::BalancedGraph)?;
        let orientation = normalized.canonical_orientation(Some(root_edge))?;
        let frame = TreeFrame::build(&normalized, norm.tree);

        let root = *normalized.edge(root_edge);
        let root_path = if root.is_loop() {
            TreePath { vertices: vec![root.u], step_edges: Vec::new() }
        } else {
            frame.path(root.u.min(root.v), root.u.max(root.v))
        };
        let root_circuit = root_path.edge_set().with(root_edge);
        let root_vector = build_root_vector(&normalized, &orientation, root_edge, &root_path);
        debug_assert!(
            mod2_conservation_violations(&normalized, &orientation, root_vector.values())
                .is_empty()
        );

        let mut cotree = Vec::new();
        let mut circuits = Vec::new();
        for e in 0..normalized.m() {
            if e == root_edge || norm.tree.contains(e) {
                continue;
            }
            cotree.push(e);
            circuits.push(fundamental_circuit(
                &normalized,
                &orientation,
                &frame,
                root_edge,
                &root_path,
                e,
            )?);
        }

        Ok(FundamentalSystem {
            original: g.clone(),
            normalized,
            switched: norm.switched,
            orientation,
            tree: norm.tree,
            root_edge,
            cotree,
            root_circuit,
            root_vector,
            circuits,
        })
    }

    /// The input graph as given.
    pub fn original_graph(&self) -> &SignedGraph {
        &self.original
    }

    /// The switching-equivalent graph the system lives on; its spanning
    /// tree is all positive.
    pub fn graph(&self) -> &SignedGraph {
        &self.normalized
    }

    /// Vertices switched by the normalization.
    pub fn switched(&self) -> &[bool] {
        &self.switched
    }

    /// Orientation with the root edge extroverted and all other negative
    /// edges introverted.
    pub fn orientation(&self) -> &Orientation {
        &self.orientation
    }

    pub fn tree(&self) -> EdgeSet {
        self.tree
    }

    pub fn root_edge(&self) -> usize {
        self.root_edge
    }

    /// Cotree `E \ (T + e0)` in ascending id order.
    pub fn cotree(&self) -> &[usize] {
        &self.cotree
    }

    pub fn root_circuit(&self) -> EdgeSet {
        self.root_circuit
    }

    pub fn root_vector(&self) -> &CircuitVector {
        &self.root_vector
    }

    pub fn circuits(&self) -> &[FundamentalCircuit] {
        &self.circuits
    }

    pub fn fundamental_circuit(&self, e: usize) -> Option<&FundamentalCircuit> {
        self.cotree.iter().position(|&c| c == e).map(|i| &self.circuits[i])
    }

    /// Check integer conservation of every `f_e` and mod-2 conservation of
    /// the root vector.
    pub fn verify_circuit_vectors(&self) -> ConservationReport {
        let mut failures = Vec::new();
        for c in &self.circuits {
            for (vertex, sum) in integer_conservation_violations(
                &self.normalized,
                &self.orientation,
                c.vector.values(),
            ) {
                failures.push(ConservationFailure {
                    vector: VectorId::Fundamental(c.edge),
                    vertex,
                    sum,
                });
            }
        }
        for (vertex, sum) in mod2_conservation_violations(
            &self.normalized,
            &self.orientation,
            self.root_vector.values(),
        ) {
            failures.push(ConservationFailure { vector: VectorId::Root, vertex, sum });
        }
        ConservationReport { failures }
    }
}

/// Vertices where the integer conservation sum of `values` is nonzero.
pub fn integer_conservation_violations(
    g: &SignedGraph,
    d: &Orientation,
    values: &[i8],
) -> Vec<(usize, i32)> {
    vertex_sums(g, d, values).into_iter().filter(|&(_, s)| s != 0).collect()
}

/// Vertices where the conservation sum of `values` is odd.
pub fn mod2_conservation_violations(
    g: &SignedGraph,
    d: &Orientation,
    values: &[i8],
) -> Vec<(usize, i32)> {
    vertex_sums(g, d, values).into_iter().filter(|&(_, s)| s.rem_euclid(2) != 0).collect()
}

fn vertex_sums(g: &SignedGraph, d: &Orientation, values: &[i8]) -> Vec<(usize, i32)> {
    let mut sums = vec![0i32; g.n()];
    for (e, &x) in values.iter().enumerate() {
        if x == 0 {
            continue;
        }
        let ed = g.edge(e);
        if ed.is_loop() {
            sums[ed.u] += g.incidence_coefficient(d, ed.u, e) * x as i32;
        } else {
            sums[ed.u] += g.incidence_coefficient(d, ed.u, e) * x as i32;
            sums[ed.v] += g.incidence_coefficient(d, ed.v, e) * x as i32;
        }
    }
    sums.into_iter().enumerate().collect()
}

/// The root vector: `g(e0) = 1`, the tree path of the root circuit directed
/// from the smaller-id endpoint of `e0` toward the larger so that the
/// terminal endpoint is the unique vertex with two incoming halves.
fn build_root_vector(
    g: &SignedGraph,
    d: &Orientation,
    root_edge: usize,
    root_path: &TreePath,
) -> CircuitVector {
    let mut values = vec![0i8; g.m()];
    values[root_edge] = 1;
    for j in 0..root_path.step_edges.len() {
        let e = root_path.step_edges[j];
        let walk = (root_path.vertices[j], root_path.vertices[j + 1]);
        values[e] = if d.direction(g, e) == walk { 1 } else { -1 };
    }
    CircuitVector { values }
}

fn fundamental_circuit(
    g: &SignedGraph,
    d: &Orientation,
    frame: &TreeFrame,
    root_edge: usize,
    root_path: &TreePath,
    e: usize,
) -> Result<FundamentalCircuit> {
    let ed = *g.edge(e);
    let own_path = if ed.is_loop() {
        TreePath { vertices: vec![ed.u], step_edges: Vec::new() }
    } else {
        frame.path(ed.u, ed.v)
    };

    let (circuit, kind, mags) = if !ed.sign.is_negative() {
        // ordinary circuit: the tree circuit of e
        let circuit = own_path.edge_set().with(e);
        (circuit, CircuitKind::Ordinary, unit_mags(g.m(), circuit, EdgeSet::EMPTY))
    } else {
        let shared = root_path.edge_set().intersection(own_path.edge_set());
        if !shared.is_empty() {
            // overlapping tree paths: one balanced circuit through e0 and e
            let sym = root_path.edge_set().symmetric_difference(own_path.edge_set());
            let circuit = sym.with(root_edge).with(e);
            (circuit, CircuitKind::BalancedWithRoot, unit_mags(g.m(), circuit, EdgeSet::EMPTY))
        } else {
            // barbell: root circuit + own circuit + connecting tree path
            let c0 = root_path.edge_set().with(root_edge);
            let ce = own_path.edge_set().with(e);
            let root_mask = root_path.vertex_mask();
            let own_mask = own_path.vertex_mask();
            let bridge = frame.path(g.edge(root_edge).u, ed.u);
            let x = (0..bridge.vertices.len())
                .rev()
                .find(|&j| root_mask >> bridge.vertices[j] & 1 == 1)
                .ok_or_else(|| Error::Internal("barbell bridge misses root circuit".into()))?;
            let y = (x..bridge.vertices.len())
                .find(|&j| own_mask >> bridge.vertices[j] & 1 == 1)
                .ok_or_else(|| Error::Internal("barbell bridge misses own circuit".into()))?;
            let path = EdgeSet::from_ids(bridge.step_edges[x..y].iter().copied());
            let circuit = c0.union(ce).union(path);
            (circuit, CircuitKind::Barbell { path }, unit_mags(g.m(), circuit, path))
        }
    };

    let values = solve_vector(g, d, circuit, &mags, e).ok_or_else(|| {
        Error::Internal(format!("no conservative vector for circuit of edge {e}"))
    })?;
    debug_assert!(integer_conservation_violations(g, d, &values).is_empty());
    let vector = CircuitVector { values };
    debug_assert_eq!(vector.support(), circuit);
    Ok(FundamentalCircuit { edge: e, circuit, kind, vector })
}

fn unit_mags(m: usize, support: EdgeSet, doubled: EdgeSet) -> Vec<i8> {
    let mut mags = vec![0i8; m];
    for e in support.iter() {
        mags[e] = if doubled.contains(e) { 2 } else { 1 };
    }
    mags
}

/// Solve for the unique conservative vector supported on `support` with
/// the prescribed entry moduli and `values[fixed] = +mags[fixed]`.
///
/// Propagates single-unknown vertex equations; when the support has a
/// second circuit reachable only through a junction (the barbell case) the
/// stall is resolved by branching on the sign of one edge and verifying.
fn solve_vector(
    g: &SignedGraph,
    d: &Orientation,
    support: EdgeSet,
    mags: &[i8],
    fixed: usize,
) -> Option<Vec<i8>> {
    let mut incident: Vec<Vec<(usize, i32)>> = Vec::new();
    let mut slot_of = vec![usize::MAX; g.n()];
    for e in support.iter() {
        let ed = g.edge(e);
        let ends: &[usize] = if ed.is_loop() { &[ed.u][..] } else { &[ed.u, ed.v][..] };
        for &v in ends {
            let eta = g.incidence_coefficient(d, v, e);
            if eta == 0 {
                continue;
            }
            if slot_of[v] == usize::MAX {
                slot_of[v] = incident.len();
                incident.push(Vec::new());
            }
            incident[slot_of[v]].push((e, eta));
        }
    }
    let mut values = vec![0i8; g.m()];
    let mut known = EdgeSet::singleton(fixed);
    values[fixed] = mags[fixed];
    try_solve(&incident, support, mags, &mut values, &mut known)
}

fn try_solve(
    incident: &[Vec<(usize, i32)>],
    support: EdgeSet,
    mags: &[i8],
    values: &mut [i8],
    known: &mut EdgeSet,
) -> Option<Vec<i8>> {
    loop {
        let mut changed = false;
        for inc in incident {
            let mut sum = 0i32;
            let mut unknowns = 0;
            let mut last = (0usize, 0i32);
            for &(e, eta) in inc {
                if known.contains(e) {
                    sum += eta * values[e] as i32;
                } else {
                    unknowns += 1;
                    last = (e, eta);
                }
            }
            match unknowns {
                0 => {
                    if sum != 0 {
                        return None;
                    }
                }
                1 => {
                    let (e, eta) = last;
                    if sum % eta != 0 {
                        return None;
                    }
                    let x = -sum / eta;
                    if x.abs() != mags[e] as i32 {
                        return None;
                    }
                    values[e] = x as i8;
                    known.insert(e);
                    changed = true;
                }
                _ => {}
            }
        }
        if !changed {
            break;
        }
    }
    let unresolved = support.difference(*known);
    match unresolved.iter().next() {
        None => Some(values.to_vec()),
        Some(e) => {
            for sign in [1i8, -1] {
                let mut v2 = values.to_vec();
                let mut k2 = known.with(e);
                v2[e] = sign * mags[e];
                if let Some(done) = try_solve(incident, support, mags, &mut v2, &mut k2) {
                    return Some(done);
                }
            }
            None
        }
    }
}
