//! Union-find over vertices with sign parity and per-component balance flags.
//!
//! The parity of a vertex is the product of edge signs on its path to the
//! component root. Adding an edge whose sign disagrees with the tracked
//! parities marks the component unbalanced, which matches the circuit
//! characterization of balance.

/// Plain parity DSU with path compression.
pub(crate) struct ParityDsu {
    parent: Vec<usize>,
    // parity relative to parent link; true = negative
    parity: Vec<bool>,
    rank: Vec<u8>,
    unbalanced: Vec<bool>,
    components: usize,
    balanced_components: usize,
}

impl ParityDsu {
    pub fn new(n: usize) -> Self {
        ParityDsu {
            parent: (0..n).collect(),
            parity: vec![false; n],
            rank: vec![0; n],
            unbalanced: vec![false; n],
            components: n,
            balanced_components: n,
        }
    }

    /// Root of `v` and the sign parity of the path from `v` to the root.
    pub fn find(&mut self, v: usize) -> (usize, bool) {
        if self.parent[v] == v {
            return (v, false);
        }
        let (root, par) = self.find(self.parent[v]);
        let total = par ^ self.parity[v];
        self.parent[v] = root;
        self.parity[v] = total;
        (root, total)
    }

    /// Add an edge between `u` and `v` with `negative` sign.
    pub fn add_edge(&mut self, u: usize, v: usize, negative: bool) {
        let (ru, pu) = self.find(u);
        let (rv, pv) = self.find(v);
        if ru == rv {
            // closes a circuit; unbalanced iff the sign product disagrees
            if (pu ^ pv) != negative && !self.unbalanced[ru] {
                self.unbalanced[ru] = true;
                self.balanced_components -= 1;
            }
            return;
        }
        let (big, small) = if self.rank[ru] >= self.rank[rv] { (ru, rv) } else { (rv, ru) };
        self.parent[small] = big;
        // parity so that parity(u) ^ parity(v) == negative holds afterwards
        let need = pu ^ pv ^ negative;
        self.parity[small] = need;
        if self.rank[big] == self.rank[small] {
            self.rank[big] += 1;
        }
        self.components -= 1;
        let was_bal_big = !self.unbalanced[big];
        let was_bal_small = !self.unbalanced[small];
        let merged_balanced = was_bal_big && was_bal_small;
        self.balanced_components -= (was_bal_big as usize) + (was_bal_small as usize);
        if merged_balanced {
            self.balanced_components += 1;
        } else {
            self.unbalanced[big] = true;
        }
    }

    pub fn components(&self) -> usize {
        self.components
    }

    pub fn balanced_components(&self) -> usize {
        self.balanced_components
    }

    pub fn root_unbalanced(&mut self, v: usize) -> bool {
        let (r, _) = self.find(v);
        self.unbalanced[r]
    }

    pub fn same_component(&mut self, u: usize, v: usize) -> bool {
        self.find(u).0 == self.find(v).0
    }

    pub fn root(&mut self, v: usize) -> usize {
        self.find(v).0
    }
}

enum Change {
    Merged { child: usize, parent_rank_bumped: bool, parent: usize, flagged_parent: bool },
    Flagged(usize),
    Nothing,
}

/// Parity DSU without path compression, supporting rollback.
///
/// Used by subset-expansion loops that walk a binary recursion tree over
/// edges; each `add_edge` is undone afterwards in LIFO order.
pub(crate) struct UndoDsu {
    parent: Vec<usize>,
    parity: Vec<bool>,
    rank: Vec<u8>,
    unbalanced: Vec<bool>,
    components: usize,
    balanced_components: usize,
    log: Vec<Change>,
}

impl UndoDsu {
    pub fn new(n: usize) -> Self {
        UndoDsu {
            parent: (0..n).collect(),
            parity: vec![false; n],
            rank: vec![0; n],
            unbalanced: vec![false; n],
            components: n,
            balanced_components: n,
            log: Vec::with_capacity(64),
        }
    }

    fn find(&self, mut v: usize) -> (usize, bool) {
        let mut par = false;
        while self.parent[v] != v {
            par ^= self.parity[v];
            v = self.parent[v];
        }
        (v, par)
    }

    pub fn add_edge(&mut self, u: usize, v: usize, negative: bool) {
        let (ru, pu) = self.find(u);
        let (rv, pv) = self.find(v);
        if ru == rv {
            if (pu ^ pv) != negative && !self.unbalanced[ru] {
                self.unbalanced[ru] = true;
                self.balanced_components -= 1;
                self.log.push(Change::Flagged(ru));
            } else {
                self.log.push(Change::Nothing);
            }
            return;
        }
        let (big, small) = if self.rank[ru] >= self.rank[rv] { (ru, rv) } else { (rv, ru) };
        self.parent[small] = big;
        self.parity[small] = pu ^ pv ^ negative;
        let bumped = self.rank[big] == self.rank[small];
        if bumped {
            self.rank[big] += 1;
        }
        self.components -= 1;
        let was_bal_big = !self.unbalanced[big];
        let was_bal_small = !self.unbalanced[small];
        self.balanced_components -= (was_bal_big as usize) + (was_bal_small as usize);
        let mut flagged_parent = false;
        if was_bal_big && was_bal_small {
            self.balanced_components += 1;
        } else if was_bal_big {
            self.unbalanced[big] = true;
            flagged_parent = true;
        }
        self.log.push(Change::Merged { child: small, parent_rank_bumped: bumped, parent: big, flagged_parent });
    }

    pub fn undo(&mut self) {
        match self.log.pop().expect("undo without matching add_edge") {
            Change::Nothing => {}
            Change::Flagged(r) => {
                self.unbalanced[r] = false;
                self.balanced_components += 1;
            }
            Change::Merged { child, parent_rank_bumped, parent, flagged_parent } => {
                self.parent[child] = child;
                self.parity[child] = false;
                if parent_rank_bumped {
                    self.rank[parent] -= 1;
                }
                if flagged_parent {
                    self.unbalanced[parent] = false;
                }
                self.components += 1;
                let bal_parent = !self.unbalanced[parent];
                let bal_child = !self.unbalanced[child];
                if flagged_parent {
                    // parent was balanced, child unbalanced before the merge
                    self.balanced_components += 1;
                } else {
                    let merged_was_balanced = bal_parent && bal_child;
                    if merged_was_balanced {
                        self.balanced_components -= 1;
                    }
                    self.balanced_components += (bal_parent as usize) + (bal_child as usize);
                }
            }
        }
    }

    pub fn components(&self) -> usize {
        self.components
    }

    pub fn balanced_components(&self) -> usize {
        self.balanced_components
    }
}
