//! Signed multigraphs: edge signs, switching, balance, components and
//! half-edge orientations.
//!
//! Vertices are `0..n`. Edges are stored in input order and the edge id is
//! the position in that order; the id order doubles as the default linear
//! order on the edge set. Loops and parallel edges are allowed. A circuit
//! is unbalanced when it carries an odd number of negative edges, and a
//! subgraph is balanced when it contains no unbalanced circuit.

use crate::dsu::ParityDsu;
use crate::error::{Error, Result};
use std::fmt;

/// Hard cap on edge count so edge sets fit in one machine word.
pub const MAX_EDGES: usize = 64;

/// Hard cap on vertex count so vertex sets fit in one machine word.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn is_negative(self) -> bool {
        matches!(self, Sign::Negative)
    }

    pub fn flipped(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Positive => '+',
            Sign::Negative => '-',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub sign: Sign,
}

impl Edge {
    pub fn is_loop(&self) -> bool {
        self.u == self.v
    }

    /// The endpoint other than `v`; `v` itself for loops.
    pub fn other(&self, v: usize) -> usize {
        if v == self.u {
            self.v
        } else {
            self.u
        }
    }

    pub fn touches(&self, v: usize) -> bool {
        self.u == v || self.v == v
    }
}

/// Set of edge ids as a bitmask. Graphs are capped at [`MAX_EDGES`] edges.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct EdgeSet(pub u64);

impl EdgeSet {
    pub const EMPTY: EdgeSet = EdgeSet(0);

    pub fn full(m: usize) -> EdgeSet {
        debug_assert!(m <= MAX_EDGES);
        if m == 64 {
            EdgeSet(u64::MAX)
        } else {
            EdgeSet((1u64 << m) - 1)
        }
    }

    pub fn singleton(e: usize) -> EdgeSet {
        EdgeSet(1u64 << e)
    }

    pub fn from_ids<I: IntoIterator<Item = usize>>(ids: I) -> EdgeSet {
        let mut s = EdgeSet::EMPTY;
        for e in ids {
            s.insert(e);
        }
        s
    }

    pub fn contains(self, e: usize) -> bool {
        self.0 >> e & 1 == 1
    }

    pub fn insert(&mut self, e: usize) {
        self.0 |= 1u64 << e;
    }

    pub fn remove(&mut self, e: usize) {
        self.0 &= !(1u64 << e);
    }

    pub fn with(self, e: usize) -> EdgeSet {
        EdgeSet(self.0 | 1u64 << e)
    }

    pub fn without(self, e: usize) -> EdgeSet {
        EdgeSet(self.0 & !(1u64 << e))
    }

    pub fn union(self, other: EdgeSet) -> EdgeSet {
        EdgeSet(self.0 | other.0)
    }

    pub fn intersection(self, other: EdgeSet) -> EdgeSet {
        EdgeSet(self.0 & other.0)
    }

    pub fn difference(self, other: EdgeSet) -> EdgeSet {
        EdgeSet(self.0 & !other.0)
    }

    pub fn symmetric_difference(self, other: EdgeSet) -> EdgeSet {
        EdgeSet(self.0 ^ other.0)
    }

    pub fn is_subset_of(self, other: EdgeSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        BitIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

struct BitIter(u64);

impl Iterator for BitIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let e = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(e)
        }
    }
}

/// Set of vertex ids as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn singleton(v: usize) -> VertexSet {
        VertexSet(1u64 << v)
    }

    pub fn from_ids<I: IntoIterator<Item = usize>>(ids: I) -> VertexSet {
        let mut s = VertexSet::EMPTY;
        for v in ids {
            s.0 |= 1u64 << v;
        }
        s
    }

    pub fn contains(self, v: usize) -> bool {
        self.0 >> v & 1 == 1
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        BitIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// A signed multigraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedGraph {
    n: usize,
    edges: Vec<Edge>,
}

/// Connected component: its vertices and the edge ids induced on them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub vertices: VertexSet,
    pub edges: EdgeSet,
    pub balanced: bool,
}

/// Component/balance summary of a spanning subgraph (all vertices kept).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SubgraphInfo {
    pub components: usize,
    pub balanced_components: usize,
}

impl SubgraphInfo {
    pub fn unbalanced_components(&self) -> usize {
        self.components - self.balanced_components
    }
}

/// Result of switching a graph so that a chosen spanning tree is all
/// positive.
#[derive(Debug, Clone)]
pub struct Normalized {
    /// The switched graph; every edge of `tree` is positive in it.
    pub graph: SignedGraph,
    /// Spanning tree as an edge set (empty for a single vertex).
    pub tree: EdgeSet,
    /// Vertices that were switched.
    pub switched: Vec<bool>,
}

impl SignedGraph {
    pub fn new(n: usize, edges: Vec<Edge>) -> Result<SignedGraph> {
        if edges.len() > MAX_EDGES {
            return Err(Error::TooManyEdges { edges: edges.len(), limit: MAX_EDGES });
        }
        if n > MAX_VERTICES {
            return Err(Error::Unsupported(format!(
                "at most {MAX_VERTICES} vertices are supported, got {n}"
            )));
        }
        for e in &edges {
            for v in [e.u, e.v] {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, vertex_count: n });
                }
            }
        }
        Ok(SignedGraph { n, edges })
    }

    /// Convenience constructor from `(u, v, sign)` triples.
    pub fn from_edges(n: usize, edges: &[(usize, usize, Sign)]) -> Result<SignedGraph> {
        SignedGraph::new(n, edges.iter().map(|&(u, v, sign)| Edge { u, v, sign }).collect())
    }

    /// Parse the line-oriented graph format:
    ///
    /// ```text
    /// # comment
    /// n 3
    /// e 0 1 +
    /// e 1 2 -
    /// ```
    ///
    /// The first non-comment line declares the vertex count; each following
    /// `e` line appends one edge, so the file order is the edge id order.
    pub fn parse(text: &str) -> Result<SignedGraph> {
        let mut n: Option<usize> = None;
        let mut edges: Vec<Edge> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let lineno = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let mut tok = line.split_whitespace();
            let head = tok.next().unwrap();
            let perr = |message: String| Error::Parse { line: lineno, message };
            match head {
                "n" => {
                    if n.is_some() {
                        return Err(perr("duplicate vertex-count line".into()));
                    }
                    let count = tok
                        .next()
                        .ok_or_else(|| perr("expected vertex count after 'n'".into()))?
                        .parse::<usize>()
                        .map_err(|_| perr("vertex count is not a number".into()))?;
                    if tok.next().is_some() {
                        return Err(perr("trailing tokens after vertex count".into()));
                    }
                    n = Some(count);
                }
                "e" => {
                    let n = n.ok_or_else(|| perr("edge line before vertex count".into()))?;
                    let mut vertex = |name: &str| -> Result<usize> {
                        let t = tok
                            .next()
                            .ok_or_else(|| perr(format!("expected {name} vertex")))?;
                        let v = t
                            .parse::<usize>()
                            .map_err(|_| perr(format!("{name} vertex is not a number")))?;
                        if v >= n {
                            return Err(perr(format!("vertex {v} out of range (n = {n})")));
                        }
                        Ok(v)
                    };
                    let u = vertex("first")?;
                    let v = vertex("second")?;
                    let sign = match tok.next() {
                        Some("+") => Sign::Positive,
                        Some("-") => Sign::Negative,
                        Some(other) => return Err(perr(format!("unknown sign '{other}'"))),
                        None => return Err(perr("expected edge sign".into())),
                    };
                    if tok.next().is_some() {
                        return Err(perr("trailing tokens after edge".into()));
                    }
                    if edges.len() == MAX_EDGES {
                        return Err(Error::TooManyEdges { edges: MAX_EDGES + 1, limit: MAX_EDGES });
                    }
                    edges.push(Edge { u, v, sign });
                }
                other => return Err(perr(format!("unknown directive '{other}'"))),
            }
        }
        let n = n.ok_or(Error::Parse { line: 0, message: "missing vertex-count line".into() })?;
        SignedGraph::new(n, edges)
    }

    /// Inverse of [`SignedGraph::parse`].
    pub fn to_text(&self) -> String {
        let mut out = format!("n {}\n", self.n);
        for e in &self.edges {
            out.push_str(&format!("e {} {} {}\n", e.u, e.v, e.sign.symbol()));
        }
        out
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edge(&self, e: usize) -> &Edge {
        &self.edges[e]
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn full_edge_set(&self) -> EdgeSet {
        EdgeSet::full(self.m())
    }

    pub fn check_edge(&self, e: usize) -> Result<()> {
        if e >= self.m() {
            Err(Error::EdgeOutOfRange { edge: e, edge_count: self.m() })
        } else {
            Ok(())
        }
    }

    pub fn negative_edges(&self) -> EdgeSet {
        EdgeSet::from_ids(
            self.edges.iter().enumerate().filter(|(_, e)| e.sign.is_negative()).map(|(i, _)| i),
        )
    }

    /// Component count and balance summary of the spanning subgraph with
    /// edge set `kept`. Isolated vertices count as balanced components.
    pub fn subgraph_info(&self, kept: EdgeSet) -> SubgraphInfo {
        let mut dsu = ParityDsu::new(self.n);
        for e in kept.iter() {
            let ed = &self.edges[e];
            dsu.add_edge(ed.u, ed.v, ed.sign.is_negative());
        }
        SubgraphInfo {
            components: dsu.components(),
            balanced_components: dsu.balanced_components(),
        }
    }

    /// Connected components of the whole graph, listed by smallest vertex.
    pub fn components(&self) -> Vec<Component> {
        self.components_of(self.full_edge_set())
    }

    /// Connected components of the spanning subgraph with edge set `kept`.
    /// Isolated vertices form their own (balanced) components.
    pub fn components_of(&self, kept: EdgeSet) -> Vec<Component> {
        let mut dsu = ParityDsu::new(self.n);
        for e in kept.iter() {
            let ed = &self.edges[e];
            dsu.add_edge(ed.u, ed.v, ed.sign.is_negative());
        }
        let mut index: Vec<Option<usize>> = vec![None; self.n];
        let mut comps: Vec<Component> = Vec::new();
        for v in 0..self.n {
            let r = dsu.root(v);
            let unbalanced = dsu.root_unbalanced(r);
            let idx = *index[r].get_or_insert_with(|| {
                comps.push(Component {
                    vertices: VertexSet::EMPTY,
                    edges: EdgeSet::EMPTY,
                    balanced: !unbalanced,
                });
                comps.len() - 1
            });
            comps[idx].vertices.0 |= 1 << v;
        }
        for e in kept.iter() {
            let idx = index[dsu.root(self.edges[e].u)].unwrap();
            comps[idx].edges.insert(e);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.subgraph_info(self.full_edge_set()).components == 1
    }

    /// A graph is balanced when no circuit has an odd number of negative
    /// edges; equivalently some vertex signing realizes all edge signs.
    pub fn is_balanced(&self) -> bool {
        self.is_balanced_subset(self.full_edge_set())
    }

    pub fn is_balanced_subset(&self, kept: EdgeSet) -> bool {
        let info = self.subgraph_info(kept);
        info.components == info.balanced_components
    }

    /// Number of unbalanced components.
    pub fn kappa(&self) -> usize {
        self.kappa_of(self.full_edge_set())
    }

    pub fn kappa_of(&self, kept: EdgeSet) -> usize {
        self.subgraph_info(kept).unbalanced_components()
    }

    /// Sum over components of `m - n + 1` (balanced) or `m - n` (unbalanced).
    pub fn beta(&self) -> usize {
        self.beta_of(self.full_edge_set())
    }

    pub fn beta_of(&self, kept: EdgeSet) -> usize {
        let info = self.subgraph_info(kept);
        // beta = |kept| - n + (#balanced components); never negative
        (kept.len() + info.balanced_components)
            .checked_sub(self.n)
            .expect("beta must be non-negative")
    }

    /// Flip the sign of every non-loop edge incident with `v`.
    pub fn switch_at(&self, v: usize) -> SignedGraph {
        let mut out = self.clone();
        for e in &mut out.edges {
            if e.is_loop() {
                continue;
            }
            if e.u == v || e.v == v {
                e.sign = e.sign.flipped();
            }
        }
        out
    }

    /// Switch simultaneously at every vertex in `set`; edges with exactly
    /// one endpoint in the set flip sign.
    pub fn switch_set(&self, set: &[bool]) -> SignedGraph {
        debug_assert_eq!(set.len(), self.n);
        let mut out = self.clone();
        for e in &mut out.edges {
            if set[e.u] ^ set[e.v] {
                e.sign = e.sign.flipped();
            }
        }
        out
    }

    /// Delete the edges in `set`. Vertices are retained; remaining edges are
    /// renumbered and the returned map sends new ids to old ids.
    pub fn delete_edges(&self, set: EdgeSet) -> Result<(SignedGraph, Vec<usize>)> {
        if let Some(bad) = set.iter().find(|&e| e >= self.m()) {
            return Err(Error::EdgeOutOfRange { edge: bad, edge_count: self.m() });
        }
        let mut edges = Vec::with_capacity(self.m() - set.len());
        let mut id_map = Vec::with_capacity(self.m() - set.len());
        for (i, e) in self.edges.iter().enumerate() {
            if !set.contains(i) {
                edges.push(*e);
                id_map.push(i);
            }
        }
        Ok((SignedGraph { n: self.n, edges }, id_map))
    }

    /// BFS spanning tree from vertex 0. At each vertex positive edges are
    /// tried before negative ones (less switching later), ties broken by
    /// smallest edge id. Errors when the graph is disconnected.
    fn bfs_tree(&self) -> Result<EdgeSet> {
        if self.n == 0 {
            return Ok(EdgeSet::EMPTY);
        }
        let mut incident: Vec<Vec<usize>> = vec![Vec::new(); self.n];
        for (i, e) in self.edges.iter().enumerate() {
            incident[e.u].push(i);
            if !e.is_loop() {
                incident[e.v].push(i);
            }
        }
        for list in &mut incident {
            list.sort_by_key(|&i| (self.edges[i].sign.is_negative(), i));
        }
        let mut visited = vec![false; self.n];
        let mut tree = EdgeSet::EMPTY;
        let mut queue = std::collections::VecDeque::new();
        visited[0] = true;
        queue.push_back(0usize);
        while let Some(u) = queue.pop_front() {
            for &i in &incident[u] {
                let w = self.edges[i].other(u);
                if !visited[w] {
                    visited[w] = true;
                    tree.insert(i);
                    queue.push_back(w);
                }
            }
        }
        if visited.iter().all(|&b| b) {
            Ok(tree)
        } else {
            Err(Error::Disconnected)
        }
    }

    /// Switch the graph so that a BFS spanning tree becomes all positive.
    ///
    /// Switching preserves the balance of every circuit, so all flow counts
    /// are unchanged; afterwards every negative edge lies outside the tree.
    pub fn normalize_positive_tree(&self) -> Result<Normalized> {
        let tree = self.bfs_tree()?;
        // s(v) = product of tree-edge signs on the path from vertex 0;
        // switching the negative side makes every tree edge positive.
        let mut sign_to_root = vec![false; self.n.max(1)];
        let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); self.n.max(1)];
        for i in tree.iter() {
            let e = &self.edges[i];
            adj[e.u].push((e.v, i));
            adj[e.v].push((e.u, i));
        }
        let mut seen = vec![false; self.n.max(1)];
        if self.n > 0 {
            let mut stack = vec![0usize];
            seen[0] = true;
            while let Some(u) = stack.pop() {
                for &(w, i) in &adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        sign_to_root[w] = sign_to_root[u] ^ self.edges[i].sign.is_negative();
                        stack.push(w);
                    }
                }
            }
        }
        let graph = self.switch_set(&sign_to_root);
        debug_assert!(tree.iter().all(|i| !graph.edge(i).sign.is_negative()));
        Ok(Normalized { graph, tree, switched: sign_to_root })
    }

    /// Canonical orientation: positive edges run from their smaller-id
    /// endpoint to the larger (loops get one ingoing and one outgoing half),
    /// the root edge is extroverted, every other negative edge introverted.
    pub fn canonical_orientation(&self, root_edge: Option<usize>) -> Result<Orientation> {
        if let Some(r) = root_edge {
            self.check_edge(r)?;
            if !self.edges[r].sign.is_negative() {
                return Err(Error::PositiveRootEdge(r));
            }
        }
        let taus = self
            .edges
            .iter()
            .enumerate()
            .map(|(i, e)| match e.sign {
                Sign::Positive => {
                    if e.u <= e.v {
                        [-1, 1]
                    } else {
                        [1, -1]
                    }
                }
                Sign::Negative => {
                    if root_edge == Some(i) {
                        [1, 1]
                    } else {
                        [-1, -1]
                    }
                }
            })
            .collect();
        Ok(Orientation { taus })
    }

    /// Canonical orientation rooted at the smallest-id negative edge (no
    /// root when the graph has none).
    pub fn default_orientation(&self) -> Orientation {
        let root = self.negative_edges().iter().next();
        self.canonical_orientation(root).expect("root is negative by construction")
    }

    /// Net conservation coefficient of edge `e` at vertex `v`: the sum of
    /// half-edge directions at `v` (`+1` in, `-1` out), so conservation at
    /// `v` reads `sum_e eta(v, e) * f(e) = 0`.
    pub fn incidence_coefficient(&self, d: &Orientation, v: usize, e: usize) -> i32 {
        let ed = &self.edges[e];
        let [tu, tv] = d.taus[e];
        let mut eta = 0i32;
        if ed.u == v {
            eta += tu as i32;
        }
        if ed.v == v {
            eta += tv as i32;
        }
        eta
    }

    /// All circuits (connected 2-regular edge subsets), by exhaustive
    /// subset enumeration. Exponential; intended for small test graphs.
    pub fn circuit_subsets(&self) -> Vec<EdgeSet> {
        let m = self.m();
        assert!(m <= 20, "circuit_subsets is an exhaustive helper for small graphs");
        let mut out = Vec::new();
        for mask in 1u64..(1u64 << m) {
            let set = EdgeSet(mask);
            if self.is_circuit(set) {
                out.push(set);
            }
        }
        out
    }

    /// Whether `set` induces a circuit: non-empty, connected, and every
    /// touched vertex has degree exactly 2 (a loop adds 2).
    pub fn is_circuit(&self, set: EdgeSet) -> bool {
        if set.is_empty() {
            return false;
        }
        let mut degree = vec![0usize; self.n];
        for e in set.iter() {
            let ed = &self.edges[e];
            degree[ed.u] += 1;
            degree[ed.v] += 1;
        }
        if degree.iter().any(|&d| d != 0 && d != 2) {
            return false;
        }
        let mut dsu = ParityDsu::new(self.n);
        for e in set.iter() {
            let ed = &self.edges[e];
            dsu.add_edge(ed.u, ed.v, false);
        }
        let touched: Vec<usize> = (0..self.n).filter(|&v| degree[v] > 0).collect();
        touched.iter().all(|&v| dsu.same_component(touched[0], v))
    }

    /// Number of negative edges in `set` is odd.
    pub fn is_unbalanced_circuit(&self, set: EdgeSet) -> bool {
        self.is_circuit(set)
            && set.iter().filter(|&e| self.edges[e].sign.is_negative()).count() % 2 == 1
    }

    /// Whether edge `e` is a cut edge (bridge) of the underlying multigraph.
    pub fn is_bridge(&self, e: usize) -> bool {
        if self.edges[e].is_loop() {
            return false;
        }
        let all = self.full_edge_set();
        self.subgraph_info(all.without(e)).components > self.subgraph_info(all).components
    }
}

/// A half-edge orientation.
///
/// Each edge stores the direction of its two half-edges as `(tau_u, tau_v)`
/// with `+1` pointing into the endpoint and `-1` pointing away. Positive
/// edges have opposite halves (an ordinary arrow); negative edges have equal
/// halves: `(+1, +1)` is extroverted, `(-1, -1)` introverted. Reversing an
/// edge flips both halves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orientation {
    taus: Vec<[i8; 2]>,
}

impl Orientation {
    pub fn taus(&self, e: usize) -> [i8; 2] {
        self.taus[e]
    }

    pub fn edge_count(&self) -> usize {
        self.taus.len()
    }

    /// Whether a negative edge is extroverted (both halves pointing out at
    /// the endpoints). Panics if the halves disagree, i.e. on positive edges.
    pub fn is_extroverted(&self, e: usize) -> bool {
        let [a, b] = self.taus[e];
        assert_eq!(a, b, "edge {e} is positive; it has a direction, not a state");
        a == 1
    }

    /// For a positive edge, the `(tail, head)` pair.
    pub fn direction(&self, graph: &SignedGraph, e: usize) -> (usize, usize) {
        let ed = graph.edge(e);
        let [tu, _] = self.taus[e];
        if tu == -1 {
            (ed.u, ed.v)
        } else {
            (ed.v, ed.u)
        }
    }

    /// New orientation with edge `e` reversed (both halves flipped).
    pub fn reverse_edge(&self, e: usize) -> Orientation {
        let mut out = self.clone();
        out.taus[e] = [-out.taus[e][0], -out.taus[e][1]];
        out
    }

    /// Check that the half-edge pattern matches the edge signs of `graph`.
    pub fn is_consistent_with(&self, graph: &SignedGraph) -> bool {
        self.taus.len() == graph.m()
            && graph.edges().iter().enumerate().all(|(i, e)| {
                let [a, b] = self.taus[i];
                match e.sign {
                    Sign::Positive => a * b == -1,
                    Sign::Negative => a * b == 1,
                }
            })
    }

    /// The orientation induced on the switched graph: flipping the halves at
    /// switched vertices keeps every conservation equation intact, so the
    /// flows of the two presentations coincide as edge-value assignments.
    pub fn switched(&self, graph: &SignedGraph, switched: &[bool]) -> Orientation {
        let taus = self
            .taus
            .iter()
            .enumerate()
            .map(|(i, &[tu, tv])| {
                let e = graph.edge(i);
                [if switched[e.u] { -tu } else { tu }, if switched[e.v] { -tv } else { tv }]
            })
            .collect();
        Orientation { taus }
    }
}
