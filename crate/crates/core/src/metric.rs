//! Distance-based invariants: Wiener index, average distance, intervals,
//! geodeticity and diameter.

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::exact::{self, ExactRational};
use crate::geodesic::{bfs_unchecked, AllPairs, UNREACHABLE};
use crate::graph::Graph;

/// Sum of `d(u, v)` over unordered pairs.
pub fn wiener(graph: &Graph) -> Result<BigUint> {
    graph.ensure_connected()?;
    Ok(wiener_from(&AllPairs::new(graph)))
}

pub(crate) fn wiener_from(tables: &AllPairs) -> BigUint {
    let n = tables.vertex_count();
    let twice: u128 = (0..n)
        .map(|u| tables.table(u).distances().iter().map(|&d| d as u128).sum::<u128>())
        .sum();
    BigUint::from(twice / 2)
}

/// `W(G) / C(|G|, 2)`.
pub fn average_distance(graph: &Graph) -> Result<ExactRational> {
    let n = graph.vertex_count();
    if n < 2 {
        return Err(Error::TooFewVertices { required: 2, found: n });
    }
    let w = wiener(graph)?;
    let pairs = exact::binomial(n as u64, 2);
    Ok(exact::ratio_of(w, pairs))
}

/// `I(u, v) = { w : d(u,w) + d(w,v) = d(u,v) }`, sorted. Empty when `v` is
/// unreachable from `u`.
pub fn interval(graph: &Graph, u: usize, v: usize) -> Result<Vec<usize>> {
    graph.check_vertex(u)?;
    graph.check_vertex(v)?;
    let from_u = bfs_unchecked(graph, u);
    let from_v = bfs_unchecked(graph, v);
    let uv = from_u.dist(v);
    if uv == UNREACHABLE {
        return Ok(Vec::new());
    }
    Ok((0..graph.vertex_count())
        .filter(|&w| {
            let (a, b) = (from_u.dist(w), from_v.dist(w));
            a != UNREACHABLE && b != UNREACHABLE && a + b == uv
        })
        .collect())
}

/// Every pair joined by exactly one geodesic.
pub fn is_geodetic(graph: &Graph) -> Result<bool> {
    graph.ensure_connected()?;
    let one = BigUint::one();
    Ok((0..graph.vertex_count()).all(|s| bfs_unchecked(graph, s).sigmas().iter().all(|x| x == &one)))
}

pub fn diameter(graph: &Graph) -> Result<usize> {
    graph.ensure_connected()?;
    Ok((0..graph.vertex_count())
        .map(|s| bfs_unchecked(graph, s).distances().iter().copied().max().unwrap_or(0))
        .max()
        .unwrap_or(0))
}

pub(crate) fn diameter_from(tables: &AllPairs) -> usize {
    (0..tables.vertex_count())
        .map(|s| tables.table(s).distances().iter().copied().max().unwrap_or(0))
        .max()
        .unwrap_or(0)
}
