//! Vertex-weighted simple undirected graphs.

use std::sync::OnceLock;

use thiserror::Error;

use crate::bitlinalg::BitMatrix;
use crate::weight::Weight;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("edge endpoint {vertex} out of range for {n} vertices")]
    EndpointOutOfRange { vertex: usize, n: usize },
}

/// Simple undirected graph on vertices `0..n` with one weight per vertex.
///
/// Neighbor lists are kept sorted. A packed `n × n` adjacency matrix is
/// built on first use by the matrix-based algorithms and cached.
#[derive(Debug, Clone)]
pub struct WeightedGraph<W> {
    weights: Vec<W>,
    adj: Vec<Vec<usize>>,
    m: usize,
    dense: OnceLock<BitMatrix>,
}

impl<W: Weight> WeightedGraph<W> {
    pub fn new<I>(weights: Vec<W>, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let n = weights.len();
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for vertex in [u, v] {
                if vertex >= n {
                    return Err(GraphError::EndpointOutOfRange { vertex, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut m2 = 0;
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(GraphError::DuplicateEdge(u.min(w[0]), u.max(w[0])));
            }
            m2 += list.len();
        }
        Ok(WeightedGraph {
            weights,
            adj,
            m: m2 / 2,
            dense: OnceLock::new(),
        })
    }

    pub fn empty() -> Self {
        Self::new(Vec::new(), []).expect("empty graph is valid")
    }

    pub fn n(&self) -> usize {
        self.weights.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn weight(&self, v: usize) -> W {
        self.weights[v]
    }

    pub fn weights(&self) -> &[W] {
        &self.weights
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let (a, b) = if self.adj[u].len() <= self.adj[v].len() { (u, v) } else { (v, u) };
        self.adj[a].binary_search(&b).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Packed adjacency matrix, built on first call.
    pub fn dense_adjacency(&self) -> &BitMatrix {
        self.dense.get_or_init(|| {
            let n = self.n();
            let mut m = BitMatrix::zeros(n, n);
            for (u, list) in self.adj.iter().enumerate() {
                for &v in list {
                    m.set(u, v, true);
                }
            }
            m
        })
    }

    /// Same structure, weights transformed by `f`.
    pub fn map_weights<V: Weight>(&self, f: impl FnMut(W) -> V) -> WeightedGraph<V> {
        WeightedGraph {
            weights: self.weights.iter().copied().map(f).collect(),
            adj: self.adj.clone(),
            m: self.m,
            dense: self.dense.clone(),
        }
    }

    /// Exact sum of the weights of three vertices.
    pub fn weight_sum(&self, x: usize, y: usize, z: usize) -> W::Wide {
        self.weights[x].to_wide() + self.weights[y].to_wide() + self.weights[z].to_wide()
    }

    pub fn is_triangle(&self, x: usize, y: usize, z: usize) -> bool {
        let n = self.n();
        x < n && y < n && z < n && self.has_edge(x, y) && self.has_edge(y, z) && self.has_edge(x, z)
    }

    /// Builds the witness record for `(x, y, z)`.
    pub fn witness(&self, x: usize, y: usize, z: usize) -> TriangleWitness<W> {
        TriangleWitness {
            x,
            y,
            z,
            weight_sum: self.weight_sum(x, y, z),
        }
    }
}

impl<W: Weight> PartialEq for WeightedGraph<W> {
    fn eq(&self, other: &Self) -> bool {
        self.weights == other.weights && self.adj == other.adj
    }
}

impl<W: Weight> Eq for WeightedGraph<W> {}

/// A triangle together with the exact sum of its vertex weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangleWitness<W: Weight> {
    pub x: usize,
    pub y: usize,
    pub z: usize,
    pub weight_sum: W::Wide,
}

impl<W: Weight> TriangleWitness<W> {
    pub fn vertices(&self) -> [usize; 3] {
        [self.x, self.y, self.z]
    }

    /// Distinct vertices, all three edges present, and a correct sum.
    pub fn is_valid_in(&self, g: &WeightedGraph<W>) -> bool {
        self.x != self.y
            && self.y != self.z
            && self.x != self.z
            && g.is_triangle(self.x, self.y, self.z)
            && g.weight_sum(self.x, self.y, self.z) == self.weight_sum
    }
}

/// Subgraph induced by a vertex subset, renumbered densely in ascending
/// order of the original ids.
#[derive(Debug, Clone)]
pub struct InducedSubgraph<W> {
    pub graph: WeightedGraph<W>,
    /// New id to original id.
    pub original: Vec<usize>,
    /// Original id to new id.
    pub renumbered: Vec<Option<usize>>,
}

pub fn induced_subgraph<W: Weight>(g: &WeightedGraph<W>, set: &[usize]) -> InducedSubgraph<W> {
    let original = normalize_set(set);
    let mut renumbered = vec![None; g.n()];
    for (new, &old) in original.iter().enumerate() {
        renumbered[old] = Some(new);
    }
    let weights = original.iter().map(|&v| g.weight(v)).collect();
    let mut edges = Vec::new();
    for (new_u, &u) in original.iter().enumerate() {
        for &v in g.neighbors(u) {
            if let Some(new_v) = renumbered[v] {
                if new_u < new_v {
                    edges.push((new_u, new_v));
                }
            }
        }
    }
    let graph = WeightedGraph::new(weights, edges).expect("induced subgraph of a simple graph is simple");
    InducedSubgraph {
        graph,
        original,
        renumbered,
    }
}

/// Sorted, deduplicated copy of a vertex list.
pub(crate) fn normalize_set(set: &[usize]) -> Vec<usize> {
    let mut ids = set.to_vec();
    ids.sort_unstable();
    ids.dedup();
    ids
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(n: usize, weights: Vec<i64>) -> WeightedGraph<i64> {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        WeightedGraph::new(weights, edges).unwrap()
    }

    #[test]
    fn rejects_invalid_edges() {
        assert_eq!(WeightedGraph::new(vec![0i64, 0], [(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert_eq!(
            WeightedGraph::new(vec![0i64, 0], [(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert_eq!(
            WeightedGraph::new(vec![0i64, 0], [(0, 2)]),
            Err(GraphError::EndpointOutOfRange { vertex: 2, n: 2 })
        );
    }

    #[test]
    fn basic_queries() {
        let g = k(4, vec![1, 2, 3, 4]);
        assert_eq!(g.m(), 6);
        assert!(g.has_edge(3, 0));
        assert_eq!(g.edges().count(), 6);
        assert_eq!(g.weight_sum(0, 1, 3), 7);
        assert!(g.dense_adjacency().get(2, 1));
        assert!(!g.dense_adjacency().get(2, 2));
    }

    #[test]
    fn induced_identity_and_empty() {
        let g = k(4, vec![5, 6, 7, 8]);
        let all = induced_subgraph(&g, &[0, 1, 2, 3]);
        assert_eq!(all.graph, g);
        assert_eq!(all.original, vec![0, 1, 2, 3]);
        let none = induced_subgraph(&g, &[]);
        assert_eq!(none.graph.n(), 0);
        assert!(none.renumbered.iter().all(Option::is_none));
    }

    #[test]
    fn induced_three_of_k4_is_k3() {
        let g = k(4, vec![5, 6, 7, 8]);
        let sub = induced_subgraph(&g, &[3, 0, 2]);
        assert_eq!(sub.graph, k(3, vec![5, 7, 8]));
        assert_eq!(sub.renumbered[3], Some(2));
        assert_eq!(sub.renumbered[1], None);
    }

    #[test]
    fn witness_validation() {
        let g = k(3, vec![1, 2, -3]);
        let w = g.witness(0, 1, 2);
        assert_eq!(w.weight_sum, 0);
        assert!(w.is_valid_in(&g));
        let bad = TriangleWitness::<i64> { weight_sum: 1, ..w };
        assert!(!bad.is_valid_in(&g));
    }
}
