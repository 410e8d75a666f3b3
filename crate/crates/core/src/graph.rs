//! Immutable simple undirected graphs with stable vertex and edge indices.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

/// Index of a vertex, dense in `0..n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub usize);

/// Index of an edge, dense in `0..|E|`, assigned in input order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(pub usize);

impl VertexId {
    #[inline]
    pub fn index(self) -> usize {
        self.0
    }
}

impl EdgeId {
    #[inline]
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// An undirected edge stored canonically with `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Edge {
    pub id: EdgeId,
    pub u: VertexId,
    pub v: VertexId,
}

impl Edge {
    /// The endpoint opposite to `x`, or `None` if `x` is not an endpoint.
    pub fn other(&self, x: VertexId) -> Option<VertexId> {
        if x == self.u {
            Some(self.v)
        } else if x == self.v {
            Some(self.u)
        } else {
            None
        }
    }

    pub fn has_endpoint(&self, x: VertexId) -> bool {
        self.u == x || self.v == x
    }

    pub fn endpoints(&self) -> [VertexId; 2] {
        [self.u, self.v]
    }
}

/// Errors raised while constructing a graph. Pairs are reported as given
/// (0-indexed).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("edge ({u}, {v}) references a vertex outside 0..{n}")]
    VertexOutOfRange { u: usize, v: usize, n: usize },
}

/// A simple undirected graph. Immutable after construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adjacency: Vec<Vec<VertexId>>,
    incidence: Vec<Vec<EdgeId>>,
    index: HashMap<(usize, usize), EdgeId>,
}

impl Graph {
    /// Builds a graph on `n` vertices. Edge ids follow the order of `pairs`.
    pub fn new(n: usize, pairs: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut edges = Vec::with_capacity(pairs.len());
        let mut index = HashMap::with_capacity(pairs.len());
        let mut adjacency = vec![Vec::new(); n];
        let mut incidence = vec![Vec::new(); n];
        for (i, &(a, b)) in pairs.iter().enumerate() {
            if a >= n || b >= n {
                return Err(GraphError::VertexOutOfRange { u: a, v: b, n });
            }
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            let (u, v) = if a < b { (a, b) } else { (b, a) };
            let id = EdgeId(i);
            if index.insert((u, v), id).is_some() {
                return Err(GraphError::DuplicateEdge(a, b));
            }
            edges.push(Edge {
                id,
                u: VertexId(u),
                v: VertexId(v),
            });
            adjacency[u].push(VertexId(v));
            adjacency[v].push(VertexId(u));
            incidence[u].push(id);
            incidence[v].push(id);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        // incidence lists are filled in ascending id order already
        Ok(Graph {
            n,
            edges,
            adjacency,
            incidence,
            index,
        })
    }

    /// A graph on `n` vertices without edges.
    pub fn empty(n: usize) -> Self {
        Self::new(n, &[]).expect("edgeless graph is always valid")
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Number of elements of `V ∪ E`.
    pub fn element_count(&self) -> usize {
        self.n + self.edges.len()
    }

    pub fn vertices(&self) -> impl ExactSizeIterator<Item = VertexId> {
        (0..self.n).map(VertexId)
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> &Edge {
        &self.edges[id.0]
    }

    /// Sorted neighbors of `v`.
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adjacency[v.0]
    }

    /// Incident edge ids of `v`, ascending.
    pub fn incident_edges(&self, v: VertexId) -> &[EdgeId] {
        &self.incidence[v.0]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adjacency[v.0].len()
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        v.0 < self.n
    }

    pub fn contains_edge(&self, e: EdgeId) -> bool {
        e.0 < self.edges.len()
    }

    /// Looks up the edge joining `a` and `b`, in either orientation.
    pub fn find_edge(&self, a: VertexId, b: VertexId) -> Option<EdgeId> {
        let key = if a < b { (a.0, b.0) } else { (b.0, a.0) };
        self.index.get(&key).copied()
    }

    pub fn are_adjacent(&self, a: VertexId, b: VertexId) -> bool {
        self.find_edge(a, b).is_some()
    }

    /// Canonical `(u, v)` pairs in edge-id order.
    pub fn edge_pairs(&self) -> Vec<(usize, usize)> {
        self.edges.iter().map(|e| (e.u.0, e.v.0)).collect()
    }

    /// Vertices of degree zero, ascending.
    pub fn isolated_vertices(&self) -> Vec<VertexId> {
        self.vertices().filter(|&v| self.degree(v) == 0).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(x) = stack.pop() {
            for &y in &self.adjacency[x] {
                if !seen[y.0] {
                    seen[y.0] = true;
                    count += 1;
                    stack.push(y.0);
                }
            }
        }
        count == self.n
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k2_has_single_edge() {
        let g = Graph::new(2, &[(0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.edge(EdgeId(0)).u, VertexId(0));
        assert_eq!(g.find_edge(VertexId(1), VertexId(0)), Some(EdgeId(0)));
    }

    #[test]
    fn k3_adjacency_is_symmetric_and_sorted() {
        let g = Graph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(g.neighbors(VertexId(1)), &[VertexId(0), VertexId(2)]);
        for v in g.vertices() {
            for &w in g.neighbors(v) {
                assert!(g.neighbors(w).contains(&v));
            }
        }
        assert_eq!(g.incident_edges(VertexId(0)), &[EdgeId(0), EdgeId(2)]);
    }

    #[test]
    fn pairs_are_canonicalized() {
        let g = Graph::new(3, &[(2, 0)]).unwrap();
        let e = g.edge(EdgeId(0));
        assert_eq!((e.u, e.v), (VertexId(0), VertexId(2)));
    }

    #[test]
    fn construction_errors() {
        assert_eq!(Graph::new(3, &[(0, 0)]), Err(GraphError::SelfLoop(0)));
        assert_eq!(
            Graph::new(3, &[(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(1, 0))
        );
        assert_eq!(
            Graph::new(2, &[(0, 2)]),
            Err(GraphError::VertexOutOfRange { u: 0, v: 2, n: 2 })
        );
    }

    #[test]
    fn isolated_vertices_examples() {
        assert!(Graph::new(2, &[(0, 1)])
            .unwrap()
            .isolated_vertices()
            .is_empty());
        assert_eq!(
            Graph::empty(3).isolated_vertices(),
            vec![VertexId(0), VertexId(1), VertexId(2)]
        );
        assert_eq!(
            Graph::new(3, &[(0, 1)]).unwrap().isolated_vertices(),
            vec![VertexId(2)]
        );
    }
}
