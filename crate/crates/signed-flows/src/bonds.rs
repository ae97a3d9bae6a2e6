//! Bonds, broken bonds, the broken-bond expansion of `F_0`, and the
//! complex of bond-free edge sets.
//!
//! A cut is `[X, X^C] + E_X` for a non-empty vertex set `X` (including the
//! whole vertex set) and an inclusion-minimal `E_X` inside `X` whose
//! removal balances `G[X]`; a bond is an inclusion-minimal cut. Removing a
//! bond always creates a balanced component, and when no component of the
//! graph is balanced the bonds are exactly the inclusion-minimal edge sets
//! doing so, which gives a size-bounded enumeration fast enough for graphs
//! whose vertex-subset enumeration is out of reach.
//!
//! A broken bond is a bond minus its largest edge under a linear order.
//! The edge sets containing no broken bond form a simplicial complex whose
//! per-size counts are (up to sign) the coefficients of the `d = 0` flow
//! polynomial.

use crate::error::{Budget, Error, Result};
use crate::flowpoly::IntPolynomial;
use crate::sgraph::{EdgeSet, Sign, SignedGraph, VertexSet};
use num_bigint::BigInt;
use num_traits::Zero;
use std::collections::HashMap;

/// A linear order on the edges of a graph, as a rank per edge id. The
/// default order is the edge id order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeOrder {
    rank: Vec<usize>,
}

impl EdgeOrder {
    pub fn identity(m: usize) -> EdgeOrder {
        EdgeOrder { rank: (0..m).collect() }
    }

    /// Order given as the edge ids listed from smallest to largest.
    pub fn from_sequence(m: usize, seq: &[usize]) -> Result<EdgeOrder> {
        if seq.len() != m {
            return Err(Error::InvalidOrder(format!("expected {m} edge ids, got {}", seq.len())));
        }
        let mut rank = vec![usize::MAX; m];
        for (pos, &e) in seq.iter().enumerate() {
            if e >= m {
                return Err(Error::InvalidOrder(format!("edge id {e} out of range")));
            }
            if rank[e] != usize::MAX {
                return Err(Error::InvalidOrder(format!("edge id {e} listed twice")));
            }
            rank[e] = pos;
        }
        Ok(EdgeOrder { rank })
    }

    pub fn len(&self) -> usize {
        self.rank.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rank.is_empty()
    }

    pub fn rank(&self, e: usize) -> usize {
        self.rank[e]
    }

    /// The largest edge of a non-empty set under this order.
    pub fn max_edge(&self, set: EdgeSet) -> Option<usize> {
        set.iter().max_by_key(|&e| self.rank[e])
    }

    /// Edge ids from smallest to largest.
    pub fn sequence(&self) -> Vec<usize> {
        let mut seq: Vec<usize> = (0..self.rank.len()).collect();
        seq.sort_by_key(|&e| self.rank[e]);
        seq
    }
}

/// A bond together with one defining witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bond {
    pub edges: EdgeSet,
    /// Vertex set whose boundary and interior deletions form the bond.
    pub witness_x: VertexSet,
    /// The minimal balancing set inside `X`.
    pub witness_ex: EdgeSet,
}

/// All inclusion-minimal `E_X` inside `X` with `G[X] - E_X` balanced.
/// Returns `[{}]` when `G[X]` is already balanced.
pub fn minimal_balancing_sets(
    g: &SignedGraph,
    x: VertexSet,
    budget: Budget,
) -> Result<Vec<EdgeSet>> {
    if x.is_empty() {
        return Err(Error::Unsupported("X must be non-empty".into()));
    }
    let interior = edges_inside(g, x);
    let ids: Vec<usize> = interior.to_vec();
    budget.check(1u128 << ids.len())?;
    let mut minimal: Vec<EdgeSet> = Vec::new();
    for size in 0..=ids.len() {
        for_each_combination(ids.len(), size, &mut |chosen| {
            let set = EdgeSet::from_ids(chosen.iter().map(|&i| ids[i]));
            if minimal.iter().any(|&s| s.is_subset_of(set)) {
                return;
            }
            if g.is_balanced_subset(interior.difference(set)) {
                minimal.push(set);
            }
        });
    }
    Ok(minimal)
}

/// Edges with both endpoints in `x`.
fn edges_inside(g: &SignedGraph, x: VertexSet) -> EdgeSet {
    EdgeSet::from_ids(
        (0..g.m()).filter(|&e| {
            let ed = g.edge(e);
            x.contains(ed.u) && x.contains(ed.v)
        }),
    )
}

/// Edges with exactly one endpoint in `x`.
fn boundary_edges(g: &SignedGraph, x: VertexSet) -> EdgeSet {
    EdgeSet::from_ids(
        (0..g.m()).filter(|&e| {
            let ed = g.edge(e);
            x.contains(ed.u) ^ x.contains(ed.v)
        }),
    )
}

/// Every bond of `G`, by enumerating all non-empty vertex subsets
/// (including the full set) with all minimal balancing sets, then keeping
/// the inclusion-minimal cuts, deduplicated by edge set.
pub fn enumerate_bonds(g: &SignedGraph, budget: Budget) -> Result<Vec<Bond>> {
    let n = g.n();
    if n >= 32 {
        return Err(Error::Budget { required: 1u128 << n, limit: budget.0 });
    }
    let mut spent: u128 = 1u128 << n;
    budget.check(spent)?;
    let mut cuts: Vec<Bond> = Vec::new();
    let mut seen: HashMap<EdgeSet, usize> = HashMap::new();
    for mask in 1u64..(1u64 << n) {
        let x = VertexSet(mask);
        spent += 1u128 << edges_inside(g, x).len();
        budget.check(spent)?;
        let boundary = boundary_edges(g, x);
        for ex in minimal_balancing_sets(g, x, budget)? {
            let edges = boundary.union(ex);
            if edges.is_empty() || seen.contains_key(&edges) {
                continue;
            }
            seen.insert(edges, cuts.len());
            cuts.push(Bond { edges, witness_x: x, witness_ex: ex });
        }
    }
    Ok(keep_inclusion_minimal(cuts))
}

fn keep_inclusion_minimal(mut cuts: Vec<Bond>) -> Vec<Bond> {
    cuts.sort_by_key(|b| (b.edges.len(), b.edges));
    let mut minimal: Vec<Bond> = Vec::new();
    for cut in cuts {
        if !minimal.iter().any(|b| b.edges.is_subset_of(cut.edges)) {
            minimal.push(cut);
        }
    }
    minimal
}

/// Bonds with at most `max_size` edges, enumerated as the inclusion-minimal
/// edge sets whose removal leaves a balanced component. Sound only when no
/// component of `G` is balanced (checked).
pub fn bonds_of_size_at_most(
    g: &SignedGraph,
    max_size: usize,
    budget: Budget,
) -> Result<Vec<Bond>> {
    let full = g.full_edge_set();
    if g.subgraph_info(full).balanced_components != 0 {
        return Err(Error::Unsupported(
            "bounded bond enumeration needs every component unbalanced".into(),
        ));
    }
    let m = g.m();
    let max_size = max_size.min(m);
    let mut work: u128 = 0;
    for size in 1..=max_size {
        work += binomial(m, size);
    }
    budget.check(work)?;

    let creates_balanced = |removed: EdgeSet| -> bool {
        g.subgraph_info(full.difference(removed)).balanced_components > 0
    };
    let mut out: Vec<Bond> = Vec::new();
    for size in 1..=max_size {
        for_each_combination(m, size, &mut |chosen| {
            let b = EdgeSet::from_ids(chosen.iter().copied());
            if !creates_balanced(b) {
                return;
            }
            // minimality: the property is upward closed, so dropping any
            // single edge must lose it
            if b.iter().any(|e| creates_balanced(b.without(e))) {
                return;
            }
            // witness: the balanced component with the smallest vertex
            let comp = g
                .components_of(full.difference(b))
                .into_iter()
                .find(|c| c.balanced)
                .expect("a balanced component exists");
            let x = comp.vertices;
            out.push(Bond { edges: b, witness_x: x, witness_ex: b.intersection(edges_inside(g, x)) });
        });
    }
    out.sort_by_key(|b| (b.edges.len(), b.edges));
    Ok(out)
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

fn for_each_combination(n: usize, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        visit(&idx);
        // advance to the next k-combination of 0..n
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Every broken bond: each bond minus its largest edge, deduplicated.
/// May contain the empty set (a bond of size one).
pub fn broken_bonds(g: &SignedGraph, order: &EdgeOrder, budget: Budget) -> Result<Vec<EdgeSet>> {
    let bonds = enumerate_bonds(g, budget)?;
    Ok(break_bonds(&bonds, order))
}

fn break_bonds(bonds: &[Bond], order: &EdgeOrder) -> Vec<EdgeSet> {
    let mut out: Vec<EdgeSet> = bonds
        .iter()
        .map(|b| {
            let max = order.max_edge(b.edges).expect("bonds are non-empty");
            b.edges.without(max)
        })
        .collect();
    out.sort();
    out.dedup();
    out
}

/// Broken bonds sufficient to decide membership in the bond-free complex.
///
/// When every component is unbalanced, members have at most `m - n` edges
/// and any set one larger contains a broken bond of a bond with at most
/// `m - n + 1` edges, so the bounded enumeration is exact for this purpose.
fn brokens_for_complex(
    g: &SignedGraph,
    order: &EdgeOrder,
    budget: Budget,
) -> Result<Vec<EdgeSet>> {
    let info = g.subgraph_info(g.full_edge_set());
    if info.balanced_components == 0 && g.n() > 0 {
        let bonds = bonds_of_size_at_most(g, g.m() - g.n() + 1, budget)?;
        Ok(break_bonds(&bonds, order))
    } else {
        broken_bonds(g, order, budget)
    }
}

/// All edge sets containing no broken bond, in ascending bitmask order.
/// This family is closed under taking subsets.
pub fn complex_members(
    g: &SignedGraph,
    order: &EdgeOrder,
    budget: Budget,
) -> Result<Vec<EdgeSet>> {
    let brokens = brokens_for_complex(g, order, budget)?;
    if brokens.iter().any(|b| b.is_empty()) {
        return Ok(Vec::new());
    }
    // per-edge lists: adding e to a member can only complete a broken bond
    // through e
    let mut by_edge: Vec<Vec<EdgeSet>> = vec![Vec::new(); g.m()];
    for &b in &brokens {
        for e in b.iter() {
            by_edge[e].push(b);
        }
    }
    let mut members = Vec::new();
    let mut visits: u128 = 0;
    let mut stack = vec![(EdgeSet::EMPTY, 0usize)];
    while let Some((f, from)) = stack.pop() {
        visits += 1;
        budget.check(visits)?;
        members.push(f);
        for e in (from..g.m()).rev() {
            let extended = f.with(e);
            if by_edge[e].iter().all(|&b| !b.is_subset_of(extended)) {
                stack.push((extended, e + 1));
            }
        }
    }
    members.sort();
    Ok(members)
}

/// Counts of bond-free edge sets by cardinality. For a graph whose
/// components are all unbalanced the vector has `m - n + 1` entries;
/// otherwise it extends to the largest member.
pub fn bb_free_fvector(g: &SignedGraph, order: &EdgeOrder, budget: Budget) -> Result<Vec<u64>> {
    let members = complex_members(g, order, budget)?;
    let info = g.subgraph_info(g.full_edge_set());
    let len = if info.balanced_components == 0 && g.n() > 0 {
        g.m() - g.n() + 1
    } else {
        members.iter().map(|f| f.len()).max().unwrap_or(0) + 1
    };
    let mut counts = vec![0u64; len];
    for f in &members {
        counts[f.len()] += 1;
    }
    Ok(counts)
}

/// The `d = 0` flow polynomial by broken-bond cancellation:
/// the inclusion-exclusion sum restricted to bond-free sets,
/// `sum over F of (-1)^|F| x^beta(G - F)`.
pub fn f0_broken(g: &SignedGraph, order: &EdgeOrder, budget: Budget) -> Result<IntPolynomial> {
    let members = complex_members(g, order, budget)?;
    let mut coeffs = vec![BigInt::zero(); g.m() + g.n() + 1];
    for f in &members {
        let beta = g.beta_of(g.full_edge_set().difference(*f));
        if f.len() % 2 == 0 {
            coeffs[beta] += 1;
        } else {
            coeffs[beta] -= 1;
        }
    }
    Ok(IntPolynomial::from_coeffs(coeffs))
}

/// The number of edges `e` for which some larger edge `e'` satisfies one
/// of the pair conditions: one of the two is a cut edge and the removal
/// leaves a balanced component; the pair is an edge cut and the removal
/// leaves a balanced component; or the pair lies in one component whose
/// remainder after the removal is balanced.
pub fn sigma(g: &SignedGraph, order: &EdgeOrder) -> usize {
    let full = g.full_edge_set();
    let base_components = g.subgraph_info(full).components;
    let bridges: Vec<bool> = (0..g.m()).map(|e| g.is_bridge(e)).collect();
    let comps = g.components();
    let comp_of_edge: Vec<usize> = (0..g.m())
        .map(|e| comps.iter().position(|c| c.edges.contains(e)).unwrap())
        .collect();
    let mut count = 0usize;
    for e in 0..g.m() {
        let fires = (0..g.m()).any(|e2| {
            if order.rank(e2) <= order.rank(e) {
                return false;
            }
            let removed = EdgeSet::from_ids([e, e2]);
            let kept = full.difference(removed);
            let info = g.subgraph_info(kept);
            let has_balanced = info.balanced_components > 0;
            if (bridges[e] || bridges[e2]) && has_balanced {
                return true;
            }
            if info.components > base_components && has_balanced {
                return true;
            }
            if comp_of_edge[e] == comp_of_edge[e2] {
                let inside = comps[comp_of_edge[e]].edges.difference(removed);
                if g.is_balanced_subset(inside) {
                    return true;
                }
            }
            false
        });
        if fires {
            count += 1;
        }
    }
    count
}

/// Coefficient facts of the broken-bond expansion on a connected
/// unbalanced graph with nonzero `F_0`.
#[derive(Debug, Clone)]
pub struct CoefficientReport {
    /// Connected, unbalanced and `F_0` not identically zero.
    pub applicable: bool,
    pub fvector: Vec<u64>,
    pub sigma: usize,
    pub a0_is_one: bool,
    /// `a_1 = m - sigma`; a mismatch is reported, never silently dropped.
    pub a1_matches_sigma: bool,
    pub all_positive: bool,
    /// `F_0 = sum (-1)^i a_i x^(m-n-i)` exactly.
    pub alternation_matches: bool,
}

impl CoefficientReport {
    pub fn passed(&self) -> bool {
        self.applicable
            && self.a0_is_one
            && self.a1_matches_sigma
            && self.all_positive
            && self.alternation_matches
    }
}

/// Check the coefficient interpretation of `F_0` on `g`.
pub fn coefficient_report(
    g: &SignedGraph,
    order: &EdgeOrder,
    budget: Budget,
) -> Result<CoefficientReport> {
    let f0 = f0_broken(g, order, budget)?;
    let applicable = g.is_connected() && !g.is_balanced() && !f0.is_zero();
    let fvector = bb_free_fvector(g, order, budget)?;
    let s = sigma(g, order);
    if !applicable {
        return Ok(CoefficientReport {
            applicable,
            fvector,
            sigma: s,
            a0_is_one: false,
            a1_matches_sigma: false,
            all_positive: false,
            alternation_matches: false,
        });
    }
    let top = g.m() - g.n();
    let a0_is_one = fvector.first() == Some(&1);
    let a1_matches_sigma = if top == 0 {
        // no degree for a_1; nothing to compare
        true
    } else {
        fvector.get(1) == Some(&((g.m() - s) as u64))
    };
    let all_positive = fvector.iter().all(|&a| a > 0);
    let alternation_matches = (0..=top).all(|i| {
        let want = BigInt::from(fvector[i]) * if i % 2 == 0 { 1 } else { -1 };
        f0.coeff(top - i) == want
    });
    Ok(CoefficientReport {
        applicable,
        fvector,
        sigma: s,
        a0_is_one,
        a1_matches_sigma,
        all_positive,
        alternation_matches,
    })
}

#[derive(Debug, Clone)]
pub struct HomogeneityReport {
    /// Common dimension of the maximal simplices, `m - n`.
    pub top_dim: usize,
    pub member_count: usize,
    pub maximal_count: usize,
    /// Every maximal simplex has exactly `top_dim` edges.
    pub homogeneous: bool,
    /// Every maximal simplex leaves components with exactly one circuit
    /// each, all unbalanced.
    pub characterization_holds: bool,
    pub counterexample: Option<EdgeSet>,
}

impl HomogeneityReport {
    pub fn passed(&self) -> bool {
        self.homogeneous && self.characterization_holds
    }
}

/// Verify that the bond-free sets form a homogeneous complex of top
/// dimension `m - n` and that maximal members are exactly the sets whose
/// removal leaves one unbalanced circuit per component.
///
/// Requires a connected unbalanced graph admitting a nowhere-zero flow for
/// odd group orders (`F_0` nonzero).
pub fn check_homogeneous(
    g: &SignedGraph,
    order: &EdgeOrder,
    budget: Budget,
) -> Result<HomogeneityReport> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.is_balanced() {
        return Err(Error::BalancedGraph);
    }
    let members = complex_members(g, order, budget)?;
    if members.is_empty() {
        return Err(Error::Unsupported(
            "graph admits no nowhere-zero flow of odd order (empty complex)".into(),
        ));
    }
    let top_dim = g.m() - g.n();
    let member_set: std::collections::HashSet<EdgeSet> = members.iter().copied().collect();
    let mut homogeneous = true;
    let mut characterization_holds = true;
    let mut counterexample = None;
    let mut maximal_count = 0usize;
    for &f in &members {
        let is_maximal =
            (0..g.m()).all(|e| f.contains(e) || !member_set.contains(&f.with(e)));
        if !is_maximal {
            continue;
        }
        maximal_count += 1;
        if f.len() != top_dim {
            homogeneous = false;
            counterexample.get_or_insert(f);
            continue;
        }
        let comps = g.components_of(g.full_edge_set().difference(f));
        let unicyclic_unbalanced = comps
            .iter()
            .all(|c| c.edges.len() == c.vertices.len() && !c.balanced);
        if !unicyclic_unbalanced {
            characterization_holds = false;
            counterexample.get_or_insert(f);
        }
    }
    Ok(HomogeneityReport {
        top_dim,
        member_count: members.len(),
        maximal_count,
        homogeneous,
        characterization_holds,
        counterexample,
    })
}

#[derive(Debug, Clone)]
pub struct PropositionReport {
    /// Balanced graphs are skipped; the statement is about unbalanced ones.
    pub skipped: bool,
    pub passed: bool,
    pub counterexample: Option<EdgeSet>,
}

/// For every bond-free `F`, each component of `G - F` is unbalanced
/// (vacuous for balanced graphs).
pub fn proposition_check(
    g: &SignedGraph,
    order: &EdgeOrder,
    budget: Budget,
) -> Result<PropositionReport> {
    if g.is_balanced() {
        return Ok(PropositionReport { skipped: true, passed: true, counterexample: None });
    }
    let members = complex_members(g, order, budget)?;
    for f in members {
        let info = g.subgraph_info(g.full_edge_set().difference(f));
        if info.balanced_components > 0 {
            return Ok(PropositionReport { skipped: false, passed: false, counterexample: Some(f) });
        }
    }
    Ok(PropositionReport { skipped: false, passed: true, counterexample: None })
}

/// Replace every leaf of a tree by an unbalanced circuit with `girth`
/// edges (one negative edge each; girth 1 is a negative loop).
///
/// Returns the graph together with the edge order it was built in: all
/// circuit edges first (by leaf), then tree edges from the deepest up to
/// the root, so children always precede their father and circuit edges
/// precede tree edges.
pub fn build_gt(tree: &SignedGraph, girth: usize) -> Result<(SignedGraph, EdgeOrder)> {
    validate_tree(tree)?;
    if girth == 0 {
        return Err(Error::Unsupported("girth must be at least 1".into()));
    }
    let n = tree.n();
    let mut degree = vec![0usize; n];
    for e in tree.edges() {
        degree[e.u] += 1;
        degree[e.v] += 1;
    }
    let leaves: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();

    // internal vertices keep their relative order, then one circuit per leaf
    let mut new_id = vec![usize::MAX; n];
    let mut next = 0usize;
    for v in 0..n {
        if degree[v] > 1 {
            new_id[v] = next;
            next += 1;
        }
    }
    let mut edges: Vec<(usize, usize, Sign)> = Vec::new();
    for &leaf in &leaves {
        let attach = next;
        new_id[leaf] = attach;
        next += 1;
        if girth == 1 {
            edges.push((attach, attach, Sign::Negative));
        } else {
            let mut prev = attach;
            for _ in 0..girth - 1 {
                edges.push((prev, next, Sign::Positive));
                prev = next;
                next += 1;
            }
            edges.push((prev, attach, Sign::Negative));
        }
    }

    // root the tree at its smallest leaf; deeper edges come first
    let root = leaves[0];
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for (i, e) in tree.edges().iter().enumerate() {
        adj[e.u].push((e.v, i));
        adj[e.v].push((e.u, i));
    }
    let mut depth = vec![usize::MAX; n];
    depth[root] = 0;
    let mut queue = std::collections::VecDeque::from([root]);
    while let Some(u) = queue.pop_front() {
        for &(w, _) in &adj[u] {
            if depth[w] == usize::MAX {
                depth[w] = depth[u] + 1;
                queue.push_back(w);
            }
        }
    }
    let mut tree_edges: Vec<usize> = (0..tree.m()).collect();
    tree_edges
        .sort_by_key(|&i| (std::cmp::Reverse(depth[tree.edge(i).u].max(depth[tree.edge(i).v])), i));
    for &i in &tree_edges {
        let e = tree.edge(i);
        edges.push((new_id[e.u], new_id[e.v], Sign::Positive));
    }

    let graph = SignedGraph::from_edges(next, &edges)?;
    let order = EdgeOrder::identity(graph.m());
    Ok((graph, order))
}

fn validate_tree(tree: &SignedGraph) -> Result<()> {
    if tree.n() < 2 {
        return Err(Error::NotATree("need at least two vertices".into()));
    }
    if tree.m() != tree.n() - 1 {
        return Err(Error::NotATree(format!(
            "{} vertices need {} edges, found {}",
            tree.n(),
            tree.n() - 1,
            tree.m()
        )));
    }
    if !tree.is_connected() {
        return Err(Error::NotATree("not connected".into()));
    }
    Ok(())
}

/// Closed form for the `d = 0` flow polynomial of the leaf-circuit
/// expansion of a tree:
/// `(x - 1) * prod over branch vertices of sum_j (-1)^j C(d-1, j) x^(d-2-j)`
/// where `d` ranges over the degrees that are at least 3. Independent of
/// the girth used for the circuits.
pub fn gt_formula(tree: &SignedGraph) -> Result<IntPolynomial> {
    validate_tree(tree)?;
    let mut degree = vec![0usize; tree.n()];
    for e in tree.edges() {
        degree[e.u] += 1;
        degree[e.v] += 1;
    }
    let mut out = IntPolynomial::from_i64_coeffs(&[-1, 1]);
    for &d in degree.iter().filter(|&&d| d >= 3) {
        let mut coeffs = vec![BigInt::zero(); d - 1];
        for j in 0..=d - 2 {
            let c = BigInt::from(binomial(d - 1, j));
            coeffs[d - 2 - j] = if j % 2 == 0 { c } else { -c };
        }
        out = out.mul(&IntPolynomial::from_coeffs(coeffs));
    }
    Ok(out)
}
