//! Breadth-first geodesic counting.

use std::collections::VecDeque;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::Result;
use crate::exec::{self, Strategy};
use crate::graph::Graph;

/// Distance marker for vertices the search never reached.
pub const UNREACHABLE: usize = usize::MAX;

/// Hop distances and geodesic counts from one source.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeodesicTable {
    source: usize,
    dist: Vec<usize>,
    sigma: Vec<BigUint>,
    /// Vertices in non-decreasing distance order.
    order: Vec<usize>,
}

impl GeodesicTable {
    pub fn source(&self) -> usize {
        self.source
    }

    /// `d(source, v)`, or [`UNREACHABLE`].
    pub fn dist(&self, v: usize) -> usize {
        self.dist[v]
    }

    /// `σ(source, v)`; zero when unreachable, one at the source itself.
    pub fn sigma(&self, v: usize) -> &BigUint {
        &self.sigma[v]
    }

    pub fn distances(&self) -> &[usize] {
        &self.dist
    }

    pub fn sigmas(&self) -> &[BigUint] {
        &self.sigma
    }

    /// Reached vertices ordered by distance from the source.
    pub fn order(&self) -> &[usize] {
        &self.order
    }
}

pub fn bfs_geodesics(graph: &Graph, source: usize) -> Result<GeodesicTable> {
    graph.check_vertex(source)?;
    Ok(bfs_unchecked(graph, source))
}

pub(crate) fn bfs_unchecked(graph: &Graph, source: usize) -> GeodesicTable {
    let n = graph.vertex_count();
    let mut dist = vec![UNREACHABLE; n];
    let mut sigma = vec![BigUint::zero(); n];
    let mut order = Vec::with_capacity(n);
    let mut queue = VecDeque::new();

    dist[source] = 0;
    sigma[source] = BigUint::one();
    queue.push_back(source);

    while let Some(v) = queue.pop_front() {
        order.push(v);
        let next = dist[v] + 1;
        for &w in graph.neighbors(v) {
            if dist[w] == UNREACHABLE {
                dist[w] = next;
                queue.push_back(w);
            }
            if dist[w] == next {
                let add = sigma[v].clone();
                sigma[w] += add;
            }
        }
    }

    GeodesicTable {
        source,
        dist,
        sigma,
        order,
    }
}

/// One [`GeodesicTable`] per source vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AllPairs {
    tables: Vec<GeodesicTable>,
}

impl AllPairs {
    pub fn new(graph: &Graph) -> AllPairs {
        Self::with_strategy(graph, Strategy::default())
    }

    pub fn with_strategy(graph: &Graph, strategy: Strategy) -> AllPairs {
        let tables = exec::map_indices(strategy, graph.vertex_count(), |s| bfs_unchecked(graph, s));
        AllPairs { tables }
    }

    pub fn vertex_count(&self) -> usize {
        self.tables.len()
    }

    pub fn table(&self, source: usize) -> &GeodesicTable {
        &self.tables[source]
    }

    pub fn dist(&self, u: usize, v: usize) -> usize {
        self.tables[u].dist[v]
    }

    pub fn sigma(&self, u: usize, v: usize) -> &BigUint {
        &self.tables[u].sigma[v]
    }

    /// `x ∈ I(u, v)`.
    pub fn on_geodesic(&self, u: usize, v: usize, x: usize) -> bool {
        let (ux, xv, uv) = (self.dist(u, x), self.dist(x, v), self.dist(u, v));
        ux != UNREACHABLE && xv != UNREACHABLE && ux + xv == uv
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{generate, Family};

    fn check_table_invariants(graph: &Graph, table: &GeodesicTable) {
        let s = table.source();
        assert_eq!(table.dist(s), 0);
        assert_eq!(table.sigma(s), &BigUint::one());
        for (v, w) in graph.edges() {
            assert!(table.dist(v).abs_diff(table.dist(w)) <= 1);
        }
        for v in 0..graph.vertex_count() {
            assert!(table.sigma(v) >= &BigUint::one());
            if v == s {
                continue;
            }
            let from_predecessors: BigUint = graph
                .neighbors(v)
                .iter()
                .filter(|&&w| table.dist(w) + 1 == table.dist(v))
                .map(|&w| table.sigma(w).clone())
                .sum();
            assert_eq!(&from_predecessors, table.sigma(v));
        }
    }

    #[test]
    fn path_from_end() {
        let p3 = generate(&Family::Path(3)).unwrap();
        let t = bfs_geodesics(&p3, 0).unwrap();
        assert_eq!(t.distances(), &[0, 1, 2]);
        assert!(t.sigmas().iter().all(|s| s == &BigUint::one()));
        check_table_invariants(&p3, &t);
    }

    #[test]
    fn four_cycle_antipode() {
        let c4 = generate(&Family::Cycle(4)).unwrap();
        let t = bfs_geodesics(&c4, 0).unwrap();
        assert_eq!(t.dist(2), 2);
        assert_eq!(t.sigma(2), &BigUint::from(2u32));
        check_table_invariants(&c4, &t);
    }

    #[test]
    fn cube_antipode_has_three_factorial_geodesics() {
        let q3 = generate(&Family::Hypercube(3)).unwrap();
        let t = bfs_geodesics(&q3, 0).unwrap();
        assert_eq!(t.dist(7), 3);
        assert_eq!(t.sigma(7), &BigUint::from(6u32));
        for s in 0..8 {
            check_table_invariants(&q3, &bfs_geodesics(&q3, s).unwrap());
        }
    }

    #[test]
    fn unreachable_vertices() {
        let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        let t = bfs_geodesics(&g, 0).unwrap();
        assert_eq!(t.dist(2), UNREACHABLE);
        assert!(t.sigma(2).is_zero());
        assert_eq!(t.order(), &[0, 1]);
        assert!(bfs_geodesics(&g, 3).is_err());
    }

    #[test]
    fn strategies_agree() {
        let g = generate(&Family::Torus(4, 5)).unwrap();
        assert_eq!(
            AllPairs::with_strategy(&g, Strategy::Sequential),
            AllPairs::with_strategy(&g, Strategy::Parallel)
        );
    }
}
