//! Polynomial-delay, polynomial-space enumeration of maximal acyclic vertex
//! sets (equivalently, of minimal feedback vertex sets).
//!
//! The vertices are processed in index order `v_1, .., v_n`, and
//! `T_j = T[{v_1, .., v_j}]`. The implicit search tree has a node at level
//! `j` for certain maximal acyclic sets `J` of `T_j`:
//!
//! * if `J ∪ {v_{j+1}}` is acyclic, it is the only child;
//! * otherwise the children are `J` itself, followed by every set obtained
//!   by inserting `v_{j+1}` into the chain of `J` at position `z` and
//!   dropping the chain vertices that now disagree with it, provided the
//!   result is maximal acyclic in `T_{j+1}` and `J` is the
//!   lexicographically smallest maximal acyclic set of `T_j` containing the
//!   result minus `v_{j+1}`.
//!
//! Every maximal acyclic set of `T` labels exactly one leaf at level `n`.
//! A depth-first walk keeps only the root path and the unvisited children
//! of each node on it.

use std::cmp::Ordering;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_traits::One;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::tournament::Tournament;
use crate::vertex_set::VertexSet;

/// Lexicographic order on vertex sets: `X ≺ Y` iff at the smallest index
/// where membership differs, the vertex belongs to `X`.
#[derive(Clone, Copy, Debug, Default)]
pub struct LexOrder;

impl LexOrder {
    pub fn compare(&self, x: &VertexSet, y: &VertexSet) -> Ordering {
        x.lex_cmp(y)
    }

    pub fn precedes(&self, x: &VertexSet, y: &VertexSet) -> bool {
        self.compare(x, y) == Ordering::Less
    }
}

/// A node of the enumeration tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumNode {
    /// Number of processed vertices, `1..=n`.
    pub level: usize,
    /// A maximal acyclic vertex set of `T_level`.
    pub set: VertexSet,
    /// Members of `set` in topological order (each beats all later ones).
    pub chain: Vec<usize>,
}

impl EnumNode {
    /// The root: level 1, labelled `{v_1}`.
    pub fn root(t: &Tournament) -> Self {
        assert!(t.n() >= 1, "enumeration needs at least one vertex");
        EnumNode { level: 1, set: VertexSet::singleton(t.n(), 0), chain: vec![0] }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EnumOptions {
    /// Generate only insertion positions where `v_{j+1}` fits between its
    /// chain neighbours instead of every `z`. Never changes the output.
    pub prune_positions: bool,
    /// Process vertices in order of decreasing score. Changes only the
    /// output order; sets are reported in the original labelling.
    pub relabel_by_score: bool,
    /// Re-verify every generated child (maximality, chain order, and the
    /// parent rule against an exhaustive ≺-minimum for small levels).
    /// Panics on violation.
    pub debug_parent_check: bool,
}

/// Greedy lexicographically smallest maximal acyclic superset of `x` in `T_j`.
pub fn lex_smallest_extension(t: &Tournament, j: usize, x: &VertexSet) -> Result<VertexSet> {
    let within = VertexSet::prefix(t.n(), j);
    if !x.is_subset(&within) {
        return Err(Error::Precondition(format!("set {x:?} is not contained in T_{j}")));
    }
    if !t.is_acyclic_subset(x) {
        return Err(Error::Cyclic);
    }
    Ok(greedy_extension(t, j, x.clone()))
}

fn greedy_extension(t: &Tournament, j: usize, mut h: VertexSet) -> VertexSet {
    for v in 0..j {
        if !h.contains(v) && t.extends_acyclic(&h, v) {
            h.insert(v);
        }
    }
    h
}

/// The children of `node`, `J⁰` first and then the `J^z` by ascending `z`.
pub fn children(t: &Tournament, node: &EnumNode, opts: &EnumOptions) -> Vec<EnumNode> {
    let j = node.level;
    assert!(j < t.n(), "level-{j} node of an {}-vertex tournament has no children", t.n());
    let v = j; // v_{j+1} as a 0-based index
    let set = &node.set;
    let chain = &node.chain;

    // Position z (1-based, before chain[z-1]) splits the chain into the
    // vertices that must beat v and those v must beat.
    let beats_v: Vec<bool> = chain.iter().map(|&c| t.beats(c, v)).collect();

    if t.extends_acyclic(set, v) {
        let pos = beats_v.iter().take_while(|&&b| b).count();
        let mut chain = chain.clone();
        chain.insert(pos, v);
        return vec![EnumNode { level: j + 1, set: set.with(v), chain }];
    }

    let mut out = vec![EnumNode { level: j + 1, set: set.clone(), chain: chain.clone() }];
    let within = VertexSet::prefix(t.n(), j + 1);
    let len = chain.len();
    for z in 1..=len + 1 {
        if opts.prune_positions {
            let left_ok = z == 1 || beats_v[z - 2];
            let right_ok = z == len + 1 || !beats_v[z - 1];
            if !(left_ok && right_ok) {
                continue;
            }
        }
        let mut child_chain = Vec::with_capacity(len + 1);
        child_chain.extend(chain[..z - 1].iter().zip(&beats_v).filter(|(_, &b)| b).map(|(&c, _)| c));
        child_chain.push(v);
        child_chain.extend(chain[z - 1..].iter().zip(&beats_v[z - 1..]).filter(|(_, &b)| !b).map(|(&c, _)| c));
        let child_set = VertexSet::from_indices(t.n(), child_chain.iter().copied());

        if out[1..].iter().any(|c| c.set == child_set) {
            continue;
        }
        if !t.is_maximal_acyclic_within(&child_set, &within) {
            continue;
        }
        if greedy_extension(t, j, child_set.without(v)) != *set {
            continue;
        }
        out.push(EnumNode { level: j + 1, set: child_set, chain: child_chain });
    }

    if opts.debug_parent_check {
        check_children(t, node, &out);
    }
    out
}

fn check_children(t: &Tournament, node: &EnumNode, kids: &[EnumNode]) {
    let j = node.level;
    let within = VertexSet::prefix(t.n(), j + 1);
    // J⁰ plus at most ⌊j/2⌋ + 1 insertion positions
    assert!(
        kids.len() <= j / 2 + 2,
        "node at level {j} has {} children, more than floor(j/2)+2",
        kids.len()
    );
    for kid in kids {
        assert!(t.is_maximal_acyclic_within(&kid.set, &within), "child {:?} not maximal", kid.set);
        assert_eq!(t.topological_order(&kid.set).unwrap(), kid.chain, "child chain out of order");
        if kid.set.contains(j) {
            let base = kid.set.without(j);
            let parent = if j <= 16 {
                brute_force_lex_min_extension(t, j, &base)
            } else {
                greedy_extension(t, j, base)
            };
            assert_eq!(parent, node.set, "parent rule violated for child {:?}", kid.set);
        }
    }
}

/// Exhaustive ≺-minimum over all maximal acyclic supersets of `x` in `T_j`.
fn brute_force_lex_min_extension(t: &Tournament, j: usize, x: &VertexSet) -> VertexSet {
    let within = VertexSet::prefix(t.n(), j);
    let free: Vec<usize> = within.difference(x).iter().collect();
    let mut best: Option<VertexSet> = None;
    for mask in 0u64..(1u64 << free.len()) {
        let mut s = x.clone();
        for (i, &v) in free.iter().enumerate() {
            if mask >> i & 1 == 1 {
                s.insert(v);
            }
        }
        if t.is_maximal_acyclic_within(&s, &within) && best.as_ref().is_none_or(|b| s < *b) {
            best = Some(s);
        }
    }
    best.expect("every acyclic set has a maximal extension")
}

struct Frame {
    node: EnumNode,
    /// Unvisited children, last one next.
    pending: Vec<EnumNode>,
}

/// Counters collected while walking the tree.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TraversalStats {
    pub outputs: u64,
    pub tree_edges: u64,
    pub nodes: u64,
    /// Largest number of tree edges walked between two consecutive outputs
    /// (also counting the stretch before the first output and after the last).
    pub max_edges_between_outputs: u64,
    /// Peak number of node labels held at once: the root path plus the
    /// unvisited children of every node on it.
    pub peak_resident_labels: usize,
    /// Largest child count over branching nodes, with the level it occurred at.
    pub max_children: usize,
    pub max_children_level: usize,
    /// Branching nodes at level `j` with more than `⌊j/2⌋ + 1` children
    /// besides `J⁰`. Always zero if the insertion-position bound holds.
    pub child_cap_exceedances: u64,
    edges_since_output: u64,
    resident: usize,
}

/// Streaming depth-first walk over the enumeration tree. Yields every
/// maximal acyclic vertex set of the tournament exactly once.
pub struct MaximalAcyclicSets<'a> {
    tournament: std::borrow::Cow<'a, Tournament>,
    /// Maps processing positions back to original vertex indices when relabelled.
    relabel: Option<Vec<usize>>,
    opts: EnumOptions,
    stack: Vec<Frame>,
    stats: TraversalStats,
    started: bool,
}

impl<'a> MaximalAcyclicSets<'a> {
    pub fn new(t: &'a Tournament, opts: EnumOptions) -> Self {
        let (tournament, relabel) = if opts.relabel_by_score {
            let scores = t.scores();
            let mut order: Vec<usize> = (0..t.n()).collect();
            order.sort_by_key(|&v| (std::cmp::Reverse(scores[v]), v));
            (std::borrow::Cow::Owned(t.permuted(&order)), Some(order))
        } else {
            (std::borrow::Cow::Borrowed(t), None)
        };
        MaximalAcyclicSets { tournament, relabel, opts, stack: Vec::new(), stats: TraversalStats::default(), started: false }
    }

    pub fn stats(&self) -> &TraversalStats {
        &self.stats
    }

    fn push(&mut self, node: EnumNode) {
        let t = &*self.tournament;
        let pending = if node.level < t.n() {
            let mut kids = children(t, &node, &self.opts);
            // J⁰ is listed first exactly when the node branches
            if kids[0].set == node.set {
                let j = node.level;
                if kids.len() > self.stats.max_children {
                    self.stats.max_children = kids.len();
                    self.stats.max_children_level = j;
                }
                if kids.len() - 1 > j / 2 + 1 {
                    self.stats.child_cap_exceedances += 1;
                }
            }
            kids.reverse();
            kids
        } else {
            Vec::new()
        };
        self.stats.nodes += 1;
        self.stats.resident += 1 + pending.len();
        self.stats.peak_resident_labels = self.stats.peak_resident_labels.max(self.stats.resident);
        self.stack.push(Frame { node, pending });
    }

    fn edge(&mut self) {
        self.stats.tree_edges += 1;
        self.stats.edges_since_output += 1;
        self.stats.max_edges_between_outputs =
            self.stats.max_edges_between_outputs.max(self.stats.edges_since_output);
    }

    fn map_back(&self, set: VertexSet) -> VertexSet {
        match &self.relabel {
            None => set,
            Some(order) => VertexSet::from_indices(set.universe(), set.iter().map(|v| order[v])),
        }
    }
}

impl Iterator for MaximalAcyclicSets<'_> {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        if !self.started {
            self.started = true;
            if self.tournament.n() == 0 {
                return None;
            }
            let root = EnumNode::root(&self.tournament);
            self.push(root);
        }
        let n = self.tournament.n();
        loop {
            let frame = self.stack.last_mut()?;
            if frame.node.level == n {
                let leaf = self.stack.pop().expect("non-empty stack");
                self.stats.resident -= 1;
                self.stats.outputs += 1;
                self.stats.edges_since_output = 0;
                if !self.stack.is_empty() {
                    // the ascent away from the leaf belongs to the next gap
                    self.edge();
                }
                return Some(self.map_back(leaf.node.set));
            }
            match frame.pending.pop() {
                Some(child) => {
                    self.stats.resident -= 1;
                    self.edge();
                    self.push(child);
                }
                None => {
                    self.stack.pop();
                    self.stats.resident -= 1;
                    if !self.stack.is_empty() {
                        self.edge();
                    }
                }
            }
        }
    }
}

/// Streams every maximal acyclic (transitive) vertex set of `t`.
pub fn enumerate_maximal_acyclic(t: &Tournament) -> MaximalAcyclicSets<'_> {
    MaximalAcyclicSets::new(t, EnumOptions::default())
}

/// Streams every minimal feedback vertex set of `t`, in the same order as
/// [`enumerate_maximal_acyclic`] emits their complements.
pub fn enumerate_minimal_fvs(t: &Tournament) -> impl Iterator<Item = VertexSet> + '_ {
    enumerate_maximal_acyclic(t).map(|s| s.complement())
}

pub fn enumerate_minimal_fvs_with(t: &Tournament, opts: EnumOptions) -> impl Iterator<Item = VertexSet> + '_ {
    MaximalAcyclicSets::new(t, opts).map(|s| s.complement())
}

/// Number of leaves of the enumeration tree of `t`, without the product rule.
pub fn count_direct(t: &Tournament) -> u64 {
    if t.n() == 0 {
        return 1;
    }
    enumerate_maximal_acyclic(t).count() as u64
}

/// `f(T)`: the product over the strong factors of their own counts.
/// Factors are counted in parallel.
pub fn count_minimal_fvs(t: &Tournament) -> BigUint {
    count_minimal_fvs_with(t, EnumOptions::default())
}

pub fn count_minimal_fvs_with(t: &Tournament, opts: EnumOptions) -> BigUint {
    let factors = t.strong_factorization();
    factors
        .factors()
        .par_iter()
        .filter(|f| f.len() >= 3)
        .map(|f| {
            let (sub, _) = t.induced(f);
            BigUint::from(MaximalAcyclicSets::new(&sub, opts).count())
        })
        .reduce(BigUint::one, |a, b| a * b)
}

/// A minimum feedback vertex set: per strong factor, keep a largest
/// maximal acyclic set; the union of the per-factor complements is minimum.
pub fn min_fvs(t: &Tournament) -> VertexSet {
    let n = t.n();
    let mut fvs = VertexSet::empty(n);
    for f in t.strong_factorization().factors() {
        if f.len() < 3 {
            continue;
        }
        let (sub, map) = t.induced(f);
        let best = enumerate_maximal_acyclic(&sub)
            .max_by_key(|s| s.len())
            .expect("a tournament has at least one maximal acyclic set");
        fvs = fvs.union(&VertexSet::from_indices(n, best.complement().iter().map(|v| map[v])));
    }
    assert!(t.is_acyclic_subset(&fvs.complement()), "minimum FVS must leave an acyclic remainder");
    fvs
}

/// Vertices that are the source of at least one maximal transitive subtournament.
pub fn banks_winners(t: &Tournament) -> VertexSet {
    let mut winners = VertexSet::empty(t.n());
    for s in enumerate_maximal_acyclic(t) {
        let size = s.len();
        let source = s
            .iter()
            .find(|&v| t.score_within(v, &s) + 1 == size)
            .expect("a transitive set has a source");
        winners.insert(source);
    }
    winners
}

/// Delay and space measurements of one full traversal.
#[derive(Clone, Debug, PartialEq)]
pub struct DelayProfile {
    pub n: usize,
    pub stats: TraversalStats,
    pub total_time: Duration,
    pub max_output_time: Duration,
    pub mean_output_time: Duration,
}

impl DelayProfile {
    /// `2n`: a DFS between leaves at depth `n` ascends and descends at most `n` each.
    pub fn delay_bound(&self) -> u64 {
        2 * self.n as u64
    }

    /// `(n+1)(⌊n/2⌋+2)`: path nodes plus the children of each.
    pub fn space_bound(&self) -> usize {
        (self.n + 1) * (self.n / 2 + 2)
    }

    pub fn within_bounds(&self) -> bool {
        self.stats.max_edges_between_outputs <= self.delay_bound()
            && self.stats.peak_resident_labels <= self.space_bound()
    }
}

pub fn delay_profile(t: &Tournament) -> DelayProfile {
    delay_profile_with(t, EnumOptions::default())
}

pub fn delay_profile_with(t: &Tournament, opts: EnumOptions) -> DelayProfile {
    let mut it = MaximalAcyclicSets::new(t, opts);
    let start = Instant::now();
    let mut last = start;
    let mut max_output_time = Duration::ZERO;
    while it.next().is_some() {
        let now = Instant::now();
        max_output_time = max_output_time.max(now - last);
        last = now;
    }
    let total_time = start.elapsed();
    let stats = it.stats().clone();
    let mean_output_time = if stats.outputs > 0 {
        total_time / stats.outputs as u32
    } else {
        Duration::ZERO
    };
    DelayProfile { n: t.n(), stats, total_time, max_output_time, mean_output_time }
}
