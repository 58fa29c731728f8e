//! Pair dependencies and exact betweenness centrality.
//!
//! Betweenness sums over unordered pairs `{u, v}` with `x ∉ {u, v}`:
//!
//! ```text
//! B(x) = Σ_{u<v, x∉{u,v}} σ(u,x)·σ(x,v) / σ(u,v)   over x ∈ I(u,v)
//! ```
//!
//! Two independent routes are provided. [`Algorithm::Definitional`] evaluates
//! the triple sum directly from all-pairs geodesic tables.
//! [`Algorithm::Brandes`] runs one search per source and accumulates
//! dependencies backwards in exact rationals.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{self, DependencySum, ExactRational};
use crate::exec::{self, Strategy};
use crate::geodesic::{bfs_unchecked, AllPairs, UNREACHABLE};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Definitional,
    Brandes,
    Factorized,
    ClosedForm,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Definitional => "definitional",
            Method::Brandes => "brandes",
            Method::Factorized => "factorized",
            Method::ClosedForm => "closed-form",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Graph-only betweenness algorithms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Definitional,
    Brandes,
}

impl From<Algorithm> for Method {
    fn from(a: Algorithm) -> Method {
        match a {
            Algorithm::Definitional => Method::Definitional,
            Algorithm::Brandes => Method::Brandes,
        }
    }
}

/// Per-vertex exact betweenness values with provenance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CentralityReport {
    pub method: Method,
    pub graph: String,
    pub values: Vec<ExactRational>,
    /// Set when a closed form yields one value shared by every vertex.
    pub uniform: bool,
}

impl CentralityReport {
    pub fn new(method: Method, graph: impl Into<String>, values: Vec<ExactRational>) -> Self {
        CentralityReport {
            method,
            graph: graph.into(),
            values,
            uniform: false,
        }
    }

    pub fn with_graph(mut self, graph: impl Into<String>) -> Self {
        self.graph = graph.into();
        self
    }

    pub fn total(&self) -> ExactRational {
        self.values.iter().fold(ExactRational::zero(), |acc, v| acc + v)
    }
}

/// `σ(u, v | x)`: geodesics from `u` to `v` through `x`.
///
/// When `x` is an endpoint this is `σ(u, v)` itself.
pub fn sigma_through(graph: &Graph, u: usize, v: usize, x: usize) -> Result<BigUint> {
    for w in [u, v, x] {
        graph.check_vertex(w)?;
    }
    let from_u = bfs_unchecked(graph, u);
    let from_x = bfs_unchecked(graph, x);
    let (ux, xv, uv) = (from_u.dist(x), from_x.dist(v), from_u.dist(v));
    if uv == UNREACHABLE || ux == UNREACHABLE || xv == UNREACHABLE || ux + xv != uv {
        return Ok(BigUint::zero());
    }
    Ok(from_u.sigma(x) * from_x.sigma(v))
}

/// `δ(u, v | x) = σ(u, v | x) / σ(u, v)`, zero when `x` is an endpoint.
pub fn pair_dependency(graph: &Graph, u: usize, v: usize, x: usize) -> Result<ExactRational> {
    if u == v {
        graph.check_vertex(u)?;
        return Err(Error::IdenticalEndpoints(u));
    }
    let through = sigma_through(graph, u, v, x)?;
    if x == u || x == v || through.is_zero() {
        return Ok(ExactRational::zero());
    }
    let total = bfs_unchecked(graph, u).sigma(v).clone();
    Ok(exact::ratio_of(through, total))
}

/// [`pair_dependency`] from precomputed all-pairs tables.
pub fn pair_dependency_from(tables: &AllPairs, u: usize, v: usize, x: usize) -> Result<ExactRational> {
    let n = tables.vertex_count();
    for w in [u, v, x] {
        if w >= n {
            return Err(Error::VertexOutOfRange {
                vertex: w,
                vertex_count: n,
            });
        }
    }
    if u == v {
        return Err(Error::IdenticalEndpoints(u));
    }
    if x == u || x == v || !tables.on_geodesic(u, v, x) {
        return Ok(ExactRational::zero());
    }
    Ok(exact::ratio_of(
        tables.sigma(u, x) * tables.sigma(x, v),
        tables.sigma(u, v).clone(),
    ))
}

pub fn betweenness(graph: &Graph, algorithm: Algorithm) -> Result<CentralityReport> {
    betweenness_with(graph, algorithm, Strategy::default())
}

pub fn betweenness_with(graph: &Graph, algorithm: Algorithm, strategy: Strategy) -> Result<CentralityReport> {
    graph.ensure_connected()?;
    let values = match algorithm {
        Algorithm::Definitional => definitional(graph, strategy),
        Algorithm::Brandes => brandes(graph, strategy),
    };
    let descriptor = format!("graph(n={}, m={})", graph.vertex_count(), graph.edge_count());
    Ok(CentralityReport::new(algorithm.into(), descriptor, values))
}

fn definitional(graph: &Graph, strategy: Strategy) -> Vec<ExactRational> {
    let n = graph.vertex_count();
    let tables = AllPairs::with_strategy(graph, strategy);
    exec::map_indices(strategy, n, |x| {
        let mut acc = DependencySum::new();
        for u in 0..n {
            if u == x {
                continue;
            }
            for v in (u + 1)..n {
                if v != x && tables.on_geodesic(u, v, x) {
                    acc.add_ref(tables.sigma(u, x) * tables.sigma(x, v), tables.sigma(u, v));
                }
            }
        }
        acc.to_rational()
    })
}

fn brandes(graph: &Graph, strategy: Strategy) -> Vec<ExactRational> {
    let n = graph.vertex_count();
    let zeros = || vec![ExactRational::zero(); n];
    let totals = exec::fold_indices(
        strategy,
        n,
        zeros,
        |mut acc, s| {
            let table = bfs_unchecked(graph, s);
            let mut delta = zeros();
            for &w in table.order().iter().rev() {
                // δ_s(v) += σ_sv / σ_sw · (1 + δ_s(w)) over predecessors v of w
                let share = (ExactRational::one() + &delta[w])
                    / ExactRational::from_integer(BigInt::from(table.sigma(w).clone()));
                let dw = table.dist(w);
                for &v in graph.neighbors(w) {
                    if table.dist(v) + 1 == dw {
                        let sv = ExactRational::from_integer(BigInt::from(table.sigma(v).clone()));
                        delta[v] += &share * sv;
                    }
                }
                if w != s {
                    acc[w] += &delta[w];
                }
            }
            acc
        },
        |mut a, b| {
            for (x, y) in a.iter_mut().zip(b) {
                *x += y;
            }
            a
        },
    );
    // every unordered pair was reached once from each endpoint
    let half = exact::rational(1, 2);
    totals.into_iter().map(|b| b * &half).collect()
}
