//! Immutable simple undirected graphs on dense vertex ids `0..n`.

use std::collections::VecDeque;

use crate::error::{Error, Result};

/// Simple undirected graph with sorted adjacency lists.
///
/// Construction rejects self-loops, duplicate edges and out-of-range ids.
/// Connectivity is not required here; analysis entry points check it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Graph {
    pub fn from_edges(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut adjacency = vec![Vec::new(); vertex_count];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= vertex_count {
                    return Err(Error::VertexOutOfRange {
                        vertex: w,
                        vertex_count,
                    });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for (u, list) in adjacency.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                let v = w[0];
                return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
            }
        }
        Ok(Graph {
            adjacency,
            edge_count: edges.len(),
        })
    }

    /// Builds from an adjacency predicate over all unordered pairs.
    pub(crate) fn from_adjacency_fn(vertex_count: usize, adjacent: impl Fn(usize, usize) -> bool) -> Graph {
        let mut adjacency = vec![Vec::new(); vertex_count];
        let mut edge_count = 0;
        for u in 0..vertex_count {
            for v in (u + 1)..vertex_count {
                if adjacent(u, v) {
                    adjacency[u].push(v);
                    adjacency[v].push(u);
                    edge_count += 1;
                }
            }
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Graph { adjacency, edge_count }
    }

    /// Order |G|.
    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.adjacency.iter().map(Vec::len).min()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.vertex_count() && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return false;
        }
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(v) = queue.pop_front() {
            for &w in self.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    queue.push_back(w);
                }
            }
        }
        reached == n
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                vertex_count: self.vertex_count(),
            })
        }
    }

    /// Gate for analysis operations: non-empty and connected.
    pub fn ensure_connected(&self) -> Result<()> {
        if self.vertex_count() == 0 {
            Err(Error::EmptyGraph)
        } else if !self.is_connected() {
            Err(Error::Disconnected)
        } else {
            Ok(())
        }
    }
}
