//! Simple undirected graphs on vertices `0..n`.
//!
//! A [`Graph`] is immutable once built. Derived graphs (vertex deletion,
//! induced subgraphs, complements) are returned as new values, so graphs can
//! be shared freely between verification workers.

use std::collections::VecDeque;

use crate::error::GraphError;
use crate::VertexSet;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
    edges: usize,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: (0..n).map(|_| VertexSet::with_capacity(n)).collect(),
            edges: 0,
        }
    }

    /// Builds a graph from an edge list. Repeated edges collapse to one;
    /// loops and out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(GraphError::LoopEdge(u));
            }
            g.link(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from adjacency masks, one per vertex (`n <= 64`).
    /// Masks must be symmetric and loop-free.
    pub(crate) fn from_masks(masks: &[u64]) -> Self {
        let n = masks.len();
        debug_assert!(n <= 64);
        let mut edges = 0;
        let adj = masks
            .iter()
            .enumerate()
            .map(|(v, &m)| {
                debug_assert_eq!(m & (1 << v), 0);
                edges += m.count_ones() as usize;
                VertexSet::from_mask(m)
            })
            .collect();
        Graph {
            adj,
            edges: edges / 2,
        }
    }

    fn link(&mut self, u: usize, v: usize) {
        if self.adj[u].insert(v) {
            self.adj[v].insert(u);
            self.edges += 1;
        }
    }

    pub fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n() {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            })
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    /// N(v).
    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    /// N̄(v) = N(v) ∪ {v}.
    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        let mut s = self.adj[v].clone();
        s.insert(v);
        s
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Δ; zero for graphs without vertices.
    pub fn max_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n()).map(|v| self.degree(v)).collect()
    }

    pub fn is_regular(&self) -> bool {
        self.max_degree() == self.min_degree()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| {
            self.adj[u]
                .iter()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// Adjacency mask of `v`; only meaningful when `n <= 64`.
    #[inline]
    pub fn mask(&self, v: usize) -> u64 {
        self.adj[v].low_word()
    }

    pub fn masks(&self) -> Option<Vec<u64>> {
        (self.n() <= 64).then(|| (0..self.n()).map(|v| self.mask(v)).collect())
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    /// ⟨S⟩, together with the map from new ids to original ids. New ids follow
    /// the increasing order of `S`.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<(Graph, Vec<usize>), GraphError> {
        let keep: Vec<usize> = s.iter().collect();
        if let Some(&bad) = keep.iter().find(|&&v| v >= self.n()) {
            return Err(GraphError::VertexOutOfRange {
                vertex: bad,
                n: self.n(),
            });
        }
        let mut new_id = vec![usize::MAX; self.n()];
        for (i, &v) in keep.iter().enumerate() {
            new_id[v] = i;
        }
        let mut g = Graph::empty(keep.len());
        for (i, &v) in keep.iter().enumerate() {
            for w in self.adj[v].iter() {
                let j = new_id[w];
                if j != usize::MAX && i < j {
                    g.link(i, j);
                }
            }
        }
        Ok((g, keep))
    }

    /// G − u. Vertices above `u` shift down by one.
    pub fn remove_vertex(&self, u: usize) -> Result<Graph, GraphError> {
        self.check_vertex(u)?;
        let mut rest = self.vertices();
        rest.remove(u);
        Ok(self.induced_subgraph(&rest)?.0)
    }

    /// Adds one vertex adjacent to `neighbors`; the new vertex gets id `n`.
    pub fn with_vertex(&self, neighbors: &VertexSet) -> Result<Graph, GraphError> {
        let n = self.n();
        let mut g = Graph::empty(n + 1);
        for (u, v) in self.edges() {
            g.link(u, v);
        }
        for w in neighbors.iter() {
            g.check_vertex(w)?;
            if w == n {
                return Err(GraphError::LoopEdge(n));
            }
            g.link(w, n);
        }
        Ok(g)
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                if !self.has_edge(u, v) {
                    g.link(u, v);
                }
            }
        }
        g
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Graph, GraphError> {
        check_permutation(perm, self.n())?;
        let mut g = Graph::empty(self.n());
        for (u, v) in self.edges() {
            g.link(perm[u], perm[v]);
        }
        Ok(g)
    }

    /// Vertices reachable from `start` (inclusive).
    pub fn component_of(&self, start: usize) -> VertexSet {
        self.reachable_within(start, &self.vertices())
    }

    /// Vertices reachable from `start` without leaving `allowed`.
    pub fn reachable_within(&self, start: usize, allowed: &VertexSet) -> VertexSet {
        let mut seen = VertexSet::with_capacity(self.n());
        if !allowed.contains(start) {
            return seen;
        }
        seen.insert(start);
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for w in self.adj[v].iter() {
                if allowed.contains(w) && seen.insert(w) {
                    queue.push_back(w);
                }
            }
        }
        seen
    }

    /// True iff every vertex is reachable from vertex 0. Graphs with zero or
    /// one vertex are connected.
    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.component_of(0).len() == self.n()
    }

    /// Breadth-first distances from `source`; `None` for unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            let d = dist[v].unwrap_or(0);
            for w in self.adj[v].iter() {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Vertices whose removal disconnects a connected graph.
    pub fn cut_vertices(&self) -> VertexSet {
        let n = self.n();
        let mut cuts = VertexSet::with_capacity(n);
        if n <= 2 {
            return cuts;
        }
        let all = self.vertices();
        for v in 0..n {
            let mut rest = all.clone();
            rest.remove(v);
            let start = if v == 0 { 1 } else { 0 };
            if self.reachable_within(start, &rest).len() != n - 1 {
                cuts.insert(v);
            }
        }
        cuts
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges=", self.n())?;
        f.debug_list().entries(self.edges()).finish()?;
        write!(f, ")")
    }
}

pub(crate) fn check_permutation(perm: &[usize], n: usize) -> Result<(), GraphError> {
    if perm.len() != n {
        return Err(GraphError::NotAPermutation(n));
    }
    let mut seen = vec![false; n];
    for &p in perm {
        if p >= n || std::mem::replace(&mut seen[p], true) {
            return Err(GraphError::NotAPermutation(n));
        }
    }
    Ok(())
}

/// Named graphs used throughout tests, examples and the CLI.
pub mod families {
    use super::Graph;

    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.link(u, v);
            }
        }
        g
    }

    /// The cycle on `0..n` with edges `{i, i+1 mod n}`; needs `n >= 3`.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "a cycle needs at least three vertices");
        let mut g = Graph::empty(n);
        for i in 0..n {
            g.link(i, (i + 1) % n);
        }
        g
    }

    pub fn path(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        for i in 1..n {
            g.link(i - 1, i);
        }
        g
    }

    /// The wheel with a rim cycle on `0..rim` and hub `rim`. `wheel(5)` is W₆.
    pub fn wheel(rim: usize) -> Graph {
        cycle(rim)
            .with_vertex(&(0..rim).collect())
            .expect("rim vertices are in range")
    }

    pub fn star(leaves: usize) -> Graph {
        let mut g = Graph::empty(leaves + 1);
        for v in 1..=leaves {
            g.link(0, v);
        }
        g
    }

    /// The Petersen graph: outer 5-cycle `0..5`, spokes `{i, i+5}`, inner
    /// pentagram on `5..10`.
    pub fn petersen() -> Graph {
        let mut g = Graph::empty(10);
        for i in 0..5 {
            g.link(i, (i + 1) % 5);
            g.link(i, i + 5);
            g.link(5 + i, 5 + (i + 2) % 5);
        }
        g
    }

    /// Two disjoint edges, `{0, 1}` and `{2, 3}`.
    pub fn two_k2() -> Graph {
        Graph::from_edges(4, [(0, 1), (2, 3)]).expect("valid")
    }
}
