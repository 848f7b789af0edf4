//! The tournament type and its structural queries.

use crate::error::{Error, Result};
use crate::score::ScoreSequence;
use crate::vertex_set::VertexSet;

/// A complete oriented graph on `n` vertices.
///
/// Stored as one out-neighbourhood bitset per vertex. Vertices are 0-based
/// indices internally and 1-based labels in all text I/O.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Tournament {
    out: Vec<VertexSet>,
}

impl Tournament {
    /// Builds a tournament by asking `u_beats_v(u, v)` once for every pair `u < v`.
    pub fn from_pairs(n: usize, mut u_beats_v: impl FnMut(usize, usize) -> bool) -> Self {
        let mut out = vec![VertexSet::empty(n); n];
        for u in 0..n {
            for v in u + 1..n {
                if u_beats_v(u, v) {
                    out[u].insert(v);
                } else {
                    out[v].insert(u);
                }
            }
        }
        let t = Tournament { out };
        debug_assert!(t.validate().is_ok());
        t
    }

    /// Builds a tournament from a full boolean adjacency matrix, rejecting
    /// anything that is not a tournament.
    pub fn from_matrix(rows: &[Vec<bool>]) -> Result<Self> {
        let n = rows.len();
        for (u, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotSquare { row: u + 1, len: row.len(), n });
            }
        }
        let out = rows
            .iter()
            .map(|row| VertexSet::from_indices(n, (0..n).filter(|&v| row[v])))
            .collect();
        let t = Tournament { out };
        t.validate()?;
        Ok(t)
    }

    /// Checks irreflexivity and that every pair carries exactly one arc.
    pub fn validate(&self) -> Result<()> {
        let n = self.n();
        for u in 0..n {
            if self.out[u].contains(u) {
                return Err(Error::Loop(u + 1));
            }
            for v in u + 1..n {
                let arcs = self.out[u].contains(v) as usize + self.out[v].contains(u) as usize;
                if arcs != 1 {
                    return Err(Error::BadPair { u: u + 1, v: v + 1, arcs });
                }
            }
        }
        Ok(())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.out.len()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    #[inline]
    pub fn beats(&self, u: usize, v: usize) -> bool {
        self.out[u].contains(v)
    }

    /// `N⁺(v)`.
    #[inline]
    pub fn out_neighbors(&self, v: usize) -> &VertexSet {
        &self.out[v]
    }

    /// `N⁻(v)`.
    pub fn in_neighbors(&self, v: usize) -> VertexSet {
        self.out[v].complement().without(v)
    }

    #[inline]
    pub fn score(&self, v: usize) -> usize {
        self.out[v].len()
    }

    /// Out-degrees indexed by vertex.
    pub fn scores(&self) -> Vec<usize> {
        self.out.iter().map(VertexSet::len).collect()
    }

    pub fn score_sequence(&self) -> ScoreSequence {
        let mut s = self.scores();
        s.sort_unstable();
        ScoreSequence::new(s).expect("out-degrees of a tournament form a valid score sequence")
    }

    /// The subtournament induced by `set`, with vertices renumbered in
    /// ascending order. The second component maps new indices to old ones.
    pub fn induced(&self, set: &VertexSet) -> (Tournament, Vec<usize>) {
        let map: Vec<usize> = set.iter().collect();
        let t = Tournament::from_pairs(map.len(), |a, b| self.beats(map[a], map[b]));
        (t, map)
    }

    /// Deletes vertex `v` and shifts the later vertices down by one.
    pub fn remove_vertex(&self, v: usize) -> Tournament {
        self.induced(&self.vertices().without(v)).0
    }

    /// Relabels so that new vertex `i` is old vertex `order[i]`.
    pub fn permuted(&self, order: &[usize]) -> Tournament {
        assert_eq!(order.len(), self.n());
        Tournament::from_pairs(self.n(), |a, b| self.beats(order[a], order[b]))
    }

    /// The tournament with every arc reversed.
    pub fn reverse(&self) -> Tournament {
        Tournament::from_pairs(self.n(), |u, v| self.beats(v, u))
    }

    /// Number of members of `set` that `v` beats.
    #[inline]
    pub fn score_within(&self, v: usize, set: &VertexSet) -> usize {
        self.out[v].intersection_len(set)
    }

    /// A tournament is transitive iff its scores are exactly `0..k`.
    pub fn is_acyclic_subset(&self, set: &VertexSet) -> bool {
        let k = set.len();
        let mut seen = VertexSet::empty(self.n().max(1));
        for v in set {
            let d = self.score_within(v, set);
            if d >= k || seen.contains(d) {
                return false;
            }
            seen.insert(d);
        }
        true
    }

    /// Whether `set ∪ {v}` is acyclic, assuming `set` already is.
    ///
    /// Adding `v` closes a cycle exactly when some out-neighbour of `v` in the
    /// set beats some in-neighbour of `v` in the set.
    #[inline]
    pub fn extends_acyclic(&self, set: &VertexSet, v: usize) -> bool {
        if set.contains(v) {
            return true;
        }
        let beaten = set.intersection(&self.out[v]);
        let beating = set.difference(&self.out[v]);
        beaten.iter().all(|a| !self.out[a].intersects(&beating))
    }

    /// `τ` on `set`: each vertex precedes exactly the vertices it beats.
    pub fn topological_order(&self, set: &VertexSet) -> Result<Vec<usize>> {
        if !self.is_acyclic_subset(set) {
            return Err(Error::Cyclic);
        }
        let mut order: Vec<usize> = set.iter().collect();
        order.sort_unstable_by_key(|&v| std::cmp::Reverse(self.score_within(v, set)));
        Ok(order)
    }

    /// Acyclic, and no further vertex can be added without creating a cycle.
    pub fn is_maximal_acyclic(&self, set: &VertexSet) -> bool {
        self.is_maximal_acyclic_within(set, &self.vertices())
    }

    /// Maximality relative to the subtournament induced by `within`.
    pub fn is_maximal_acyclic_within(&self, set: &VertexSet, within: &VertexSet) -> bool {
        self.is_acyclic_subset(set)
            && within
                .difference(set)
                .iter()
                .all(|v| !self.extends_acyclic(set, v))
    }

    /// Unique decomposition into strong components `S_1 + .. + S_r` where
    /// every vertex of an earlier factor beats every vertex of a later one.
    ///
    /// Sorting by score descending puts the factors in order; a factor ends
    /// after the top `k` vertices exactly when they beat all the others,
    /// i.e. when their scores sum to `C(k,2) + k(n-k)`.
    pub fn strong_factorization(&self) -> Factorization {
        let n = self.n();
        let scores = self.scores();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| std::cmp::Reverse(scores[v]));
        let mut factors = Vec::new();
        let mut current = VertexSet::empty(n);
        let mut sum = 0;
        for (i, &v) in order.iter().enumerate() {
            let k = i + 1;
            current.insert(v);
            sum += scores[v];
            if sum == k * (k - 1) / 2 + k * (n - k) {
                factors.push(std::mem::replace(&mut current, VertexSet::empty(n)));
            }
        }
        Factorization { factors }
    }

    pub fn is_strong(&self) -> bool {
        self.strong_factorization().len() == 1
    }

    /// A Hamiltonian path `v¹ → v² → … → vⁿ`, built by insertion.
    pub fn hamiltonian_path(&self) -> Vec<usize> {
        let mut path: Vec<usize> = Vec::with_capacity(self.n());
        for v in 0..self.n() {
            match path.iter().position(|&p| self.beats(v, p)) {
                Some(i) => path.insert(i, v),
                None => path.push(v),
            }
        }
        path
    }
}

/// Ordered strong components of a tournament.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    factors: Vec<VertexSet>,
}

impl Factorization {
    pub fn factors(&self) -> &[VertexSet] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Checks the partition, domination and strongness properties against `t`.
    pub fn validate(&self, t: &Tournament) -> Result<()> {
        let mut seen = VertexSet::empty(t.n());
        for f in &self.factors {
            if seen.intersects(f) {
                return Err(Error::Precondition("factors overlap".into()));
            }
            seen = seen.union(f);
            let (sub, _) = t.induced(f);
            if sub.strong_factorization().len() != 1 {
                return Err(Error::Precondition("factor is not strong".into()));
            }
        }
        if seen != t.vertices() {
            return Err(Error::Precondition("factors do not cover all vertices".into()));
        }
        for (k, earlier) in self.factors.iter().enumerate() {
            for later in &self.factors[k + 1..] {
                for u in earlier {
                    if !later.is_subset(t.out_neighbors(u)) {
                        return Err(Error::Precondition(
                            "an earlier factor does not dominate a later one".into(),
                        ));
                    }
                }
            }
        }
        Ok(())
    }
}
