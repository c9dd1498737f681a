//! Simple undirected graphs on at most [`VERTEX_CAP`] vertices, their
//! shortest-path metric and a few structural invariants.

mod distance;
mod format;
mod set;

pub use distance::{DistanceMatrix, UNREACHABLE};
pub use format::{read_graph, write_graph, ParseError};
pub use set::{Iter as VertexIter, VertexSet};

use std::collections::VecDeque;

use thiserror::Error;

/// Largest supported order. Vertex sets are single 64-bit masks.
pub const VERTEX_CAP: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    Empty,
    #[error("graph has {n} vertices, more than the supported {cap}")]
    TooLarge { n: usize, cap: usize },
    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    OutOfRange { u: usize, v: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("expected {expected} labels, got {got}")]
    LabelCount { expected: usize, got: usize },
}

/// A simple undirected graph with vertices `0..n`.
///
/// Adjacency is kept as one neighbour mask per vertex, so it is symmetric and
/// free of duplicates by construction. Labels are optional display text and
/// never take part in structural comparisons.
#[derive(Clone, Debug)]
pub struct Graph {
    adj: Vec<VertexSet>,
    labels: Option<Vec<String>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.adj == other.adj
    }
}

impl Eq for Graph {}

impl Graph {
    /// Builds a graph from an edge list. Repeated edges (in either
    /// orientation) are merged; loops and out-of-range endpoints are errors.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        Self::from_edges(n, edges.iter().copied())
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        if n > VERTEX_CAP {
            return Err(GraphError::TooLarge { n, cap: VERTEX_CAP });
        }
        let mut adj = vec![VertexSet::EMPTY; n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::OutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph { adj, labels: None })
    }

    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        Self::new(n, &[])
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, GraphError> {
        if labels.len() != self.order() {
            return Err(GraphError::LabelCount { expected: self.order(), got: labels.len() });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    /// Edges as `(u, v)` with `u < v`, in ascending lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, nb)| nb.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Label of `v`, falling back to its id.
    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    pub fn max_degree(&self) -> usize {
        (0..self.order()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn leaf_count(&self) -> usize {
        (0..self.order()).filter(|&v| self.degree(v) == 1).count()
    }

    /// Connected components as vertex sets, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::EMPTY;
        let mut out = Vec::new();
        for start in 0..self.order() {
            if seen.contains(start) {
                continue;
            }
            let mut comp = VertexSet::singleton(start);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let mut next = VertexSet::EMPTY;
                for v in frontier {
                    next = next.union(self.adj[v]);
                }
                frontier = next.difference(comp);
                comp = comp.union(frontier);
            }
            seen = seen.union(comp);
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Proper 2-colouring by BFS, if one exists. `true` marks the colour class
    /// not containing the smallest vertex of each component.
    pub fn two_colouring(&self) -> Option<Vec<bool>> {
        let n = self.order();
        let mut colour: Vec<Option<bool>> = vec![None; n];
        let mut queue = VecDeque::new();
        for s in 0..n {
            if colour[s].is_some() {
                continue;
            }
            colour[s] = Some(false);
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                let cu = colour[u].unwrap();
                for w in self.adj[u] {
                    match colour[w] {
                        None => {
                            colour[w] = Some(!cu);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cu => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(colour.into_iter().map(|c| c.unwrap()).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_colouring().is_some()
    }

    pub fn is_tree(&self) -> bool {
        self.size() + 1 == self.order() && self.is_connected()
    }
}

/// Summary of the structural quantities used throughout the crate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasicInvariants {
    pub is_connected: bool,
    pub is_bipartite: bool,
    pub is_tree: bool,
    pub max_degree: usize,
    pub leaf_count: usize,
    /// `None` for disconnected graphs.
    pub diameter: Option<u32>,
}

pub fn basic_invariants(g: &Graph) -> BasicInvariants {
    let is_connected = g.is_connected();
    let diameter = if is_connected { DistanceMatrix::new(g).diameter() } else { None };
    BasicInvariants {
        is_connected,
        is_bipartite: g.is_bipartite(),
        is_tree: g.is_tree(),
        max_degree: g.max_degree(),
        leaf_count: g.leaf_count(),
        diameter,
    }
}
