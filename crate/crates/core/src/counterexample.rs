//! A 1-nested bipartite graph that is far from every half-graph.
//!
//! Side `B` holds the `2^k` leaves of a binary tree of depth `k`, indexed by
//! their binary value `n(s)`, so leaf order is index order. Side `A` holds the
//! `2^k - 1` internal tree nodes followed by one padding block `W_s` of
//! `2^(k+1) + 2k` vertices per leaf.

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::error::{Error, Result};

/// A bipartite graph with sides `A = 0..na` and `B = 0..nb`, stored as the
/// `A`-neighbourhood of each `B` vertex.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BipartiteGraph {
    na: usize,
    adj: Vec<FixedBitSet>,
}

impl BipartiteGraph {
    pub fn empty(na: usize, nb: usize) -> Self {
        BipartiteGraph {
            na,
            adj: vec![FixedBitSet::with_capacity(na); nb],
        }
    }

    /// Builds from `(a, b)` pairs; repeated pairs are merged.
    pub fn from_edges(na: usize, nb: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = BipartiteGraph::empty(na, nb);
        for &(a, b) in edges {
            if a >= na || b >= nb {
                return Err(Error::Input(format!("edge ({a}, {b}) out of range for {na}x{nb}")));
            }
            g.adj[b].insert(a);
        }
        Ok(g)
    }

    pub fn na(&self) -> usize {
        self.na
    }

    pub fn nb(&self) -> usize {
        self.adj.len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[b].contains(a)
    }

    pub(crate) fn set_edge(&mut self, a: usize, b: usize, present: bool) {
        self.adj[b].set(a, present);
    }

    /// Neighbours in `A` of the `B` vertex `b`.
    pub fn neighbors(&self, b: usize) -> &FixedBitSet {
        &self.adj[b]
    }

    pub fn degree(&self, b: usize) -> usize {
        self.adj[b].count_ones(..)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.count_ones(..)).sum()
    }

    /// Edges `(a, b)` sorted by `a`, then `b`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut e: Vec<(usize, usize)> = self
            .adj
            .iter()
            .enumerate()
            .flat_map(|(b, row)| row.ones().map(move |a| (a, b)))
            .collect();
        e.sort_unstable();
        e
    }
}

/// Least `t` such that `g` is t-nested on `(A, B)`.
pub fn min_nesting(g: &BipartiteGraph) -> usize {
    let nb = g.nb();
    let mut worst = 0;
    for u in 0..nb {
        for v in u + 1..nb {
            let a = g.adj[u].difference_count(&g.adj[v]);
            let b = g.adj[v].difference_count(&g.adj[u]);
            worst = worst.max(a.min(b));
        }
    }
    worst
}

/// True when every two `B` vertices have one with at most `t` neighbours missing from the other.
pub fn is_t_nested(g: &BipartiteGraph, t: usize) -> bool {
    min_nesting(g) <= t
}

/// Maximum over `B` vertices of the neighbourhood symmetric difference. `A` vertices are not counted.
pub fn bipartite_local_difference(g: &BipartiteGraph, h: &BipartiteGraph) -> Result<usize> {
    if g.na() != h.na() || g.nb() != h.nb() {
        return Err(Error::Input(format!(
            "bipartition mismatch: {}x{} vs {}x{}",
            g.na(),
            g.nb(),
            h.na(),
            h.nb()
        )));
    }
    Ok(g.adj
        .iter()
        .zip(&h.adj)
        .map(|(x, y)| x.symmetric_difference_count(y))
        .max()
        .unwrap_or(0))
}

/// Largest depth accepted by [`build_counterexample`].
pub const MAX_DEPTH: usize = 6;

#[derive(Clone, Debug)]
pub struct TreeCounterexample {
    k: usize,
    graph: BipartiteGraph,
}

impl TreeCounterexample {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn graph(&self) -> &BipartiteGraph {
        &self.graph
    }

    pub fn leaf_count(&self) -> usize {
        1 << self.k
    }

    pub fn internal_count(&self) -> usize {
        (1 << self.k) - 1
    }

    /// `|W_s| = 2^(k+1) + 2k`.
    pub fn block_size(&self) -> usize {
        (1 << (self.k + 1)) + 2 * self.k
    }

    /// `A` index of the internal node with `len` bits and binary value `value`.
    pub fn internal_index(&self, len: usize, value: usize) -> usize {
        debug_assert!(len < self.k && value < 1 << len);
        (1 << len) - 1 + value
    }

    /// `A` indices of the padding block of leaf `s`.
    pub fn block(&self, s: usize) -> std::ops::Range<usize> {
        let start = self.internal_count() + s * self.block_size();
        start..start + self.block_size()
    }

    /// Checks both leaf degree bounds:
    /// `|W_s|·n(s) <= deg(s) <= |W_s|·n(s) + 2^(k+1) - 1`.
    pub fn degree_bounds_ok(&self) -> bool {
        let w = self.block_size();
        (0..self.leaf_count()).all(|s| {
            let d = self.graph.degree(s);
            w * s <= d && d < w * s + (1 << (self.k + 1))
        })
    }

    /// For all leaves `s < s'`, at most one vertex of `A` is adjacent to `s`
    /// and not `s'`, and that vertex is internal.
    pub fn pair_witnesses_ok(&self) -> bool {
        let nb = self.leaf_count();
        let internal = self.internal_count();
        (0..nb).all(|s| {
            (s + 1..nb).all(|s2| {
                let mut private = self.graph.adj[s].difference(&self.graph.adj[s2]);
                match (private.next(), private.next()) {
                    (None, _) => true,
                    (Some(a), None) => a < internal,
                    _ => false,
                }
            })
        })
    }
}

/// How a leaf meets an internal node that is not one of its ancestors.
///
/// Both rules agree on ancestors: leaf `s` meets ancestor `s'` when the bit of
/// `s` right below `s'` is 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum InternalRule {
    /// Adjacent when the first node on the path to `s'` that leaves the path
    /// to `s` has label 0. For leaves `s < s'` only their deepest common
    /// ancestor is adjacent to `s` and not `s'`, which makes the graph 1-nested.
    #[default]
    PathLabel,
    /// Adjacent when the bit of `s` at the first disagreement is 0. Lower
    /// leaves then collect whole subtrees of private neighbours and the graph
    /// is not 1-nested for `k >= 2`.
    LeafBit,
}

fn leaf_meets_internal(k: usize, s: usize, len: usize, value: usize, rule: InternalRule) -> bool {
    let bit = |pos: usize| s >> (k - 1 - pos) & 1; // pos is 0-based from the root
    let node_bit = |pos: usize| value >> (len - 1 - pos) & 1;
    match (0..len).find(|&pos| bit(pos) != node_bit(pos)) {
        None => bit(len) == 0,
        Some(pos) => match rule {
            InternalRule::PathLabel => node_bit(pos) == 0,
            InternalRule::LeafBit => bit(pos) == 0,
        },
    }
}

/// Builds the depth-`k` counterexample. Leaf `s` is joined to all of `W_{s'}`
/// exactly when `n(s') < n(s)`, and to internal nodes by [`InternalRule::PathLabel`].
pub fn build_counterexample(k: usize) -> Result<TreeCounterexample> {
    build_counterexample_with(k, InternalRule::default())
}

pub fn build_counterexample_with(k: usize, rule: InternalRule) -> Result<TreeCounterexample> {
    if k == 0 {
        return Err(Error::Input("depth k must be positive".into()));
    }
    if k > MAX_DEPTH {
        return Err(Error::Resource(format!("depth {k} exceeds the limit {MAX_DEPTH}")));
    }
    let leaves = 1usize << k;
    let internal = leaves - 1;
    let block = (1usize << (k + 1)) + 2 * k;
    let na = internal + leaves * block;
    let mut graph = BipartiteGraph::empty(na, leaves);
    for s in 0..leaves {
        for len in 0..k {
            for value in 0..1usize << len {
                if leaf_meets_internal(k, s, len, value, rule) {
                    graph.set_edge((1 << len) - 1 + value, s, true);
                }
            }
        }
        graph.adj[s].insert_range(internal..internal + s * block);
    }
    Ok(TreeCounterexample { k, graph })
}

/// Result of the root-to-leaf adversary walk against a half-graph `H`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum WalkOutcome {
    /// The walk reached `leaf`; `disagreements` counts the path nodes whose
    /// adjacency to `leaf` differs between the counterexample and `H`.
    Witness {
        leaf: usize,
        path: Vec<usize>,
        disagreements: usize,
    },
    /// At internal node `node`, `H` joins the lower leaf `low` but not the
    /// higher leaf `high`, so `H` does not order leaves by `n(s)`.
    OrderViolation { node: usize, low: usize, high: usize },
}

/// Walks from the root: at each internal node `t_i`, step to the 0-child when
/// `H` misses `t_i` on every leaf below the 0-child, else to the 1-child when
/// `H` joins `t_i` to every leaf below the 1-child.
pub fn adversary_witness(gk: &TreeCounterexample, h: &BipartiteGraph) -> Result<WalkOutcome> {
    let g = gk.graph();
    if h.na() != g.na() || h.nb() != g.nb() {
        return Err(Error::Input("H does not share the counterexample's bipartition".into()));
    }
    if !is_t_nested(h, 0) {
        return Err(Error::Precondition("H is not 0-nested".into()));
    }
    let k = gk.k();
    let mut value = 0usize;
    let mut path = Vec::with_capacity(k);
    for len in 0..k {
        let node = gk.internal_index(len, value);
        path.push(node);
        let span = 1usize << (k - len - 1);
        let base = value << (k - len);
        let low = base..base + span;
        let high = base + span..base + 2 * span;
        if let Some(l) = low.clone().find(|&s| h.has_edge(node, s)) {
            match high.clone().find(|&s| !h.has_edge(node, s)) {
                Some(r) => return Ok(WalkOutcome::OrderViolation { node, low: l, high: r }),
                None => value = value << 1 | 1,
            }
        } else {
            value <<= 1;
        }
    }
    let leaf = value;
    let disagreements = path
        .iter()
        .filter(|&&node| g.has_edge(node, leaf) != h.has_edge(node, leaf))
        .count();
    Ok(WalkOutcome::Witness { leaf, path, disagreements })
}

/// Largest `|B|` accepted by [`oracle_min_halfgraph_distance`].
pub const MAX_ORACLE_B: usize = 5;
/// Largest distance [`oracle_min_halfgraph_distance`] searches for.
pub const MAX_ORACLE_DISTANCE: usize = 4;

/// Exact minimum bipartite local difference from `g` to a half-graph on the same sides.
///
/// A half-graph orders `B` so that neighbourhoods grow along the order; then
/// each `A` vertex is joined to a suffix of that order. For each order and
/// each candidate distance `d`, a dynamic programme over the per-`B` error
/// counts (each at most `d`) decides whether suffixes can be picked for all
/// `A` vertices.
pub fn oracle_min_halfgraph_distance(g: &BipartiteGraph) -> Result<usize> {
    nearest_half_graph(g).map(|(d, _)| d)
}

/// Like [`oracle_min_halfgraph_distance`], also returning a half-graph at that distance.
pub fn nearest_half_graph(g: &BipartiteGraph) -> Result<(usize, BipartiteGraph)> {
    let nb = g.nb();
    if nb > MAX_ORACLE_B {
        return Err(Error::Resource(format!("|B| = {nb} exceeds the oracle limit {MAX_ORACLE_B}")));
    }
    // Column pattern of each A vertex: bit b set when a ~ b.
    let patterns: Vec<u32> = (0..g.na())
        .map(|a| (0..nb).filter(|&b| g.has_edge(a, b)).fold(0, |acc, b| acc | 1 << b))
        .collect();
    let orders = permutations(nb);
    for d in 0..=MAX_ORACLE_DISTANCE {
        for order in &orders {
            if let Some(masks) = fit_suffixes(&patterns, order, d) {
                let mut h = BipartiteGraph::empty(g.na(), nb);
                for (a, mask) in masks.into_iter().enumerate() {
                    for b in (0..nb).filter(|&b| mask >> b & 1 == 1) {
                        h.set_edge(a, b, true);
                    }
                }
                return Ok((d, h));
            }
        }
    }
    Err(Error::Resource(format!(
        "half-graph distance exceeds the search cap {MAX_ORACLE_DISTANCE}"
    )))
}

/// Picks a suffix of `order` for every `A` vertex so that each `B` vertex
/// collects at most `d` mismatches, returning the chosen masks.
fn fit_suffixes(patterns: &[u32], order: &[usize], d: usize) -> Option<Vec<u32>> {
    let nb = order.len();
    let radix = d + 1;
    let states = radix.pow(nb as u32);
    let suffix_masks: Vec<u32> = (0..=nb)
        .map(|r| order[r..].iter().fold(0, |acc, &b| acc | 1 << b))
        .collect();
    // layers[k][state]: (previous state, suffix mask) reaching `state` after k A vertices.
    let mut layers: Vec<Vec<Option<(usize, u32)>>> = Vec::with_capacity(patterns.len() + 1);
    let mut start = vec![None; states];
    start[0] = Some((0, 0));
    layers.push(start);
    for &pat in patterns {
        let reach = layers.last().expect("start layer");
        let mut next = vec![None; states];
        for state in (0..states).filter(|&s| reach[s].is_some()) {
            'choice: for &suffix in &suffix_masks {
                let errors = suffix ^ pat;
                let mut code = state;
                let mut place = 1;
                for b in 0..nb {
                    if errors >> b & 1 == 1 {
                        if state / place % radix == d {
                            continue 'choice;
                        }
                        code += place;
                    }
                    place *= radix;
                }
                next[code].get_or_insert((state, suffix));
            }
        }
        if next.iter().all(Option::is_none) {
            return None;
        }
        layers.push(next);
    }
    let mut state = (0..states).find(|&s| layers[patterns.len()][s].is_some())?;
    let mut masks = vec![0; patterns.len()];
    for k in (1..=patterns.len()).rev() {
        let (prev, mask) = layers[k][state].expect("reachable state has a parent");
        masks[k - 1] = mask;
        state = prev;
    }
    Some(masks)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CounterexampleSizes {
    pub a: usize,
    pub b: usize,
    pub internal: usize,
    pub block: usize,
}

/// Machine-checked properties of one counterexample.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CounterexampleRecord {
    pub k: usize,
    pub sizes: CounterexampleSizes,
    pub nested_t: usize,
    pub degree_bounds_ok: bool,
    pub pair_witnesses_ok: bool,
    pub oracle_distance: Option<usize>,
}

impl CounterexampleRecord {
    pub fn new(gk: &TreeCounterexample, run_oracle: bool) -> Result<Self> {
        let oracle_distance = if run_oracle {
            Some(oracle_min_halfgraph_distance(gk.graph())?)
        } else {
            None
        };
        Ok(CounterexampleRecord {
            k: gk.k(),
            sizes: CounterexampleSizes {
                a: gk.graph().na(),
                b: gk.graph().nb(),
                internal: gk.internal_count(),
                block: gk.block_size(),
            },
            nested_t: min_nesting(gk.graph()),
            degree_bounds_ok: gk.degree_bounds_ok(),
            pair_witnesses_ok: gk.pair_witnesses_ok(),
            oracle_distance,
        })
    }
}
