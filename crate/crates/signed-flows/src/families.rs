//! Small named graphs and exhaustive generators used by the verification
//! suites and the examples.

use crate::sgraph::{Edge, Sign, SignedGraph};

/// Two vertices joined by a negative edge and a positive edge.
pub fn g1() -> SignedGraph {
    SignedGraph::from_edges(2, &[(0, 1, Sign::Negative), (0, 1, Sign::Positive)]).unwrap()
}

/// Two negative loops at a single vertex.
pub fn g2() -> SignedGraph {
    SignedGraph::from_edges(1, &[(0, 0, Sign::Negative), (0, 0, Sign::Negative)]).unwrap()
}

/// A negative loop and a positive loop at a single vertex.
pub fn g3() -> SignedGraph {
    SignedGraph::from_edges(1, &[(0, 0, Sign::Negative), (0, 0, Sign::Positive)]).unwrap()
}

/// Two vertices joined by two negative edges and one positive edge.
pub fn g4() -> SignedGraph {
    SignedGraph::from_edges(
        2,
        &[(0, 1, Sign::Negative), (0, 1, Sign::Negative), (0, 1, Sign::Positive)],
    )
    .unwrap()
}

/// Three negative loops at a single vertex.
pub fn g5() -> SignedGraph {
    SignedGraph::from_edges(
        1,
        &[(0, 0, Sign::Negative), (0, 0, Sign::Negative), (0, 0, Sign::Negative)],
    )
    .unwrap()
}

/// Negative loops at both ends of a positive edge.
pub fn dumbbell() -> SignedGraph {
    SignedGraph::from_edges(
        2,
        &[(0, 0, Sign::Negative), (1, 1, Sign::Negative), (0, 1, Sign::Positive)],
    )
    .unwrap()
}

/// All-positive triangle.
pub fn positive_triangle() -> SignedGraph {
    SignedGraph::from_edges(
        3,
        &[(0, 1, Sign::Positive), (1, 2, Sign::Positive), (0, 2, Sign::Positive)],
    )
    .unwrap()
}

/// Disjoint union; vertices of `b` are shifted past those of `a`.
pub fn disjoint_union(a: &SignedGraph, b: &SignedGraph) -> SignedGraph {
    let mut edges: Vec<Edge> = a.edges().to_vec();
    edges.extend(
        b.edges().iter().map(|e| Edge { u: e.u + a.n(), v: e.v + a.n(), sign: e.sign }),
    );
    SignedGraph::new(a.n() + b.n(), edges).unwrap()
}

/// Every connected signed multigraph with `1 <= n <= max_n` labeled
/// vertices and at most `max_m` edges, including all sign patterns.
///
/// Underlying multigraphs are enumerated as multisets over the possible
/// endpoint pairs (loops included), so each labeled multigraph appears
/// exactly once per sign pattern. Exponential; meant for small bounds.
pub fn all_connected_signed_graphs(max_n: usize, max_m: usize) -> Vec<SignedGraph> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let mut slots: Vec<(usize, usize)> = Vec::new();
        for u in 0..n {
            for v in u..n {
                slots.push((u, v));
            }
        }
        let mut multiset: Vec<usize> = Vec::new();
        enumerate_multisets(&slots, 0, max_m, &mut multiset, &mut |chosen| {
            let skeleton: Vec<(usize, usize, Sign)> =
                chosen.iter().map(|&s| (slots[s].0, slots[s].1, Sign::Positive)).collect();
            let g = SignedGraph::from_edges(n, &skeleton).unwrap();
            if !g.is_connected() {
                return;
            }
            let m = chosen.len();
            for signs in 0u64..1 << m {
                let edges: Vec<(usize, usize, Sign)> = skeleton
                    .iter()
                    .enumerate()
                    .map(|(i, &(u, v, _))| {
                        (u, v, if signs >> i & 1 == 1 { Sign::Negative } else { Sign::Positive })
                    })
                    .collect();
                out.push(SignedGraph::from_edges(n, &edges).unwrap());
            }
        });
    }
    out
}

fn enumerate_multisets(
    slots: &[(usize, usize)],
    from: usize,
    remaining: usize,
    chosen: &mut Vec<usize>,
    emit: &mut impl FnMut(&[usize]),
) {
    emit(chosen);
    if remaining == 0 {
        return;
    }
    for s in from..slots.len() {
        chosen.push(s);
        enumerate_multisets(slots, s, remaining - 1, chosen, emit);
        chosen.pop();
    }
}

/// All trees on `n` labeled vertices up to isomorphism, as all-positive
/// signed graphs. Enumerates Pruefer sequences and deduplicates by a
/// canonical rooted encoding at the tree center.
pub fn all_trees(n: usize) -> Vec<SignedGraph> {
    assert!((1..=8).contains(&n), "tree enumeration is sized for n <= 8");
    if n == 1 {
        return vec![SignedGraph::from_edges(1, &[]).unwrap()];
    }
    if n == 2 {
        return vec![SignedGraph::from_edges(2, &[(0, 1, Sign::Positive)]).unwrap()];
    }
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    let seq_len = n - 2;
    let total = (n as u64).pow(seq_len as u32);
    let mut prufer = vec![0usize; seq_len];
    for code in 0..total {
        let mut c = code;
        for slot in prufer.iter_mut() {
            *slot = (c % n as u64) as usize;
            c /= n as u64;
        }
        let edges = prufer_decode(n, &prufer);
        let key = canonical_tree_code(n, &edges);
        if seen.insert(key) {
            let signed: Vec<(usize, usize, Sign)> =
                edges.iter().map(|&(u, v)| (u, v, Sign::Positive)).collect();
            out.push(SignedGraph::from_edges(n, &signed).unwrap());
        }
    }
    out
}

fn prufer_decode(n: usize, seq: &[usize]) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; n];
    for &v in seq {
        degree[v] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &v in seq {
        let leaf = (0..n).find(|&u| degree[u] == 1).unwrap();
        edges.push((leaf.min(v), leaf.max(v)));
        degree[leaf] = 0;
        degree[v] -= 1;
    }
    let last: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    debug_assert_eq!(last.len(), 2);
    edges.push((last[0], last[1]));
    edges
}

/// AHU-style canonical code, rooted at the center (minimum over both
/// centers when the tree is bicentral).
fn canonical_tree_code(n: usize, edges: &[(usize, usize)]) -> String {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    let centers = tree_centers(n, &adj);
    centers.iter().map(|&c| ahu_encode(c, usize::MAX, &adj)).min().unwrap()
}

fn tree_centers(n: usize, adj: &[Vec<usize>]) -> Vec<usize> {
    let mut degree: Vec<usize> = adj.iter().map(|a| a.len()).collect();
    let mut removed = vec![false; n];
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        let mut next = Vec::new();
        for &v in &layer {
            removed[v] = true;
            remaining -= 1;
            for &w in &adj[v] {
                if !removed[w] {
                    degree[w] -= 1;
                    if degree[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        layer = next;
    }
    (0..n).filter(|&v| !removed[v]).collect()
}

fn ahu_encode(v: usize, parent: usize, adj: &[Vec<usize>]) -> String {
    let mut child_codes: Vec<String> =
        adj[v].iter().filter(|&&w| w != parent).map(|&w| ahu_encode(w, v, adj)).collect();
    child_codes.sort();
    format!("({})", child_codes.concat())
}
