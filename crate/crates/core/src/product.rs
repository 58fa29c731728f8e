//! Cartesian products and factorized geodesic computations.
//!
//! Product vertices are coordinate vectors `(v_1, …, v_k)` with `v_i ∈ G_i`,
//! numbered by the mixed-radix row-major rule
//!
//! ```text
//! id = Σ_i v_i · Π_{j>i} |G_j|
//! ```
//!
//! so nesting products flattens to the same labeling.
//!
//! Distances add across factors. Geodesic counts multiply, weighted by the
//! number of ways to interleave the factor steps:
//!
//! ```text
//! σ(u, v) = Π σ_i(u_i, v_i) · d! / (d_1! ⋯ d_k!)      d_i = d_{G_i}(u_i, v_i)
//! ```
//!
//! A vertex `x` lies on a `u`–`v` geodesic iff every coordinate `x_i` lies in
//! the factor interval `I_{G_i}(u_i, v_i)`. The pair dependency is folded
//! factor by factor with the two-factor rule
//!
//! ```text
//! δ_{A□B}(u,v|x) = δ_A · δ_B · C(d_A(u,x)+d_B(u,x), d_A(u,x))
//!                             · C(d_A(x,v)+d_B(x,v), d_A(x,v))
//!                             / C(d_A(u,v)+d_B(u,v), d_A(u,v))
//! ```
//!
//! where a factor whose coordinate of `x` coincides with an endpoint
//! coordinate contributes `δ_i = 1`.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::centrality::{CentralityReport, Method};
use crate::error::{Error, Result};
use crate::exact::{self, BinomialTable, DependencySum, ExactRational};
use crate::exec::{self, Strategy};
use crate::geodesic::AllPairs;
use crate::graph::Graph;
use crate::metric;

/// Factors of a Cartesian product with their mixed-radix labeling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductSpec {
    factors: Vec<Graph>,
    radices: Vec<usize>,
    strides: Vec<usize>,
}

impl ProductSpec {
    pub fn new(factors: Vec<Graph>) -> Result<ProductSpec> {
        if factors.is_empty() {
            return Err(Error::NoFactors);
        }
        for (i, f) in factors.iter().enumerate() {
            if f.ensure_connected().is_err() {
                return Err(Error::DisconnectedFactor(i));
            }
        }
        let radices: Vec<usize> = factors.iter().map(Graph::vertex_count).collect();
        let mut strides = vec![1; radices.len()];
        for i in (0..radices.len().saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * radices[i + 1];
        }
        Ok(ProductSpec {
            factors,
            radices,
            strides,
        })
    }

    pub fn factors(&self) -> &[Graph] {
        &self.factors
    }

    pub fn factor_count(&self) -> usize {
        self.factors.len()
    }

    pub fn radices(&self) -> &[usize] {
        &self.radices
    }

    pub fn vertex_count(&self) -> usize {
        self.radices.iter().product()
    }

    pub fn check_coords(&self, coords: &[usize]) -> Result<()> {
        if coords.len() != self.radices.len() {
            return Err(Error::CoordinateArity {
                expected: self.radices.len(),
                found: coords.len(),
            });
        }
        for (factor, (&value, &order)) in coords.iter().zip(&self.radices).enumerate() {
            if value >= order {
                return Err(Error::CoordinateOutOfRange { factor, value, order });
            }
        }
        Ok(())
    }

    pub fn encode(&self, coords: &[usize]) -> Result<usize> {
        self.check_coords(coords)?;
        Ok(self.encode_unchecked(coords))
    }

    pub(crate) fn encode_unchecked(&self, coords: &[usize]) -> usize {
        coords.iter().zip(&self.strides).map(|(c, s)| c * s).sum()
    }

    pub fn decode(&self, id: usize) -> Result<Vec<usize>> {
        let n = self.vertex_count();
        if id >= n {
            return Err(Error::VertexOutOfRange {
                vertex: id,
                vertex_count: n,
            });
        }
        let mut coords = vec![0; self.radices.len()];
        self.decode_into(id, &mut coords);
        Ok(coords)
    }

    pub(crate) fn decode_into(&self, id: usize, coords: &mut [usize]) {
        for ((c, &s), &r) in coords.iter_mut().zip(&self.strides).zip(&self.radices) {
            *c = (id / s) % r;
        }
    }

    /// Projection onto factor `i`.
    pub fn project(&self, id: usize, factor: usize) -> usize {
        (id / self.strides[factor]) % self.radices[factor]
    }

    /// Id of the neighbour reached by moving factor `i` from `from` to `to`.
    pub(crate) fn shift(&self, id: usize, factor: usize, from: usize, to: usize) -> usize {
        id - from * self.strides[factor] + to * self.strides[factor]
    }

    pub fn describe(&self) -> String {
        self.factors
            .iter()
            .map(|f| format!("graph(n={}, m={})", f.vertex_count(), f.edge_count()))
            .collect::<Vec<_>>()
            .join(" x ")
    }
}

/// A product together with its materialized graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductGraph {
    pub spec: ProductSpec,
    pub graph: Graph,
}

impl ProductGraph {
    pub fn into_graph(self) -> Graph {
        self.graph
    }
}

/// `G_1 □ … □ G_k` under the mixed-radix labeling.
pub fn cartesian_product(factors: Vec<Graph>) -> Result<ProductGraph> {
    let spec = ProductSpec::new(factors)?;
    let n = spec.vertex_count();
    let mut edges = Vec::new();
    let mut coords = vec![0; spec.factor_count()];
    for id in 0..n {
        spec.decode_into(id, &mut coords);
        for (i, factor) in spec.factors.iter().enumerate() {
            let c = coords[i];
            for &w in factor.neighbors(c).iter().filter(|&&w| w > c) {
                edges.push((id, spec.shift(id, i, c, w)));
            }
        }
    }
    let graph = Graph::from_edges(n, &edges)?;
    Ok(ProductGraph { spec, graph })
}

/// Per-factor data for one ordered factor pair `(g, g')` with the target
/// coordinate inside `I(g, g')`.
#[derive(Debug, Clone)]
struct FactorStep {
    from: usize,
    to: usize,
    d_from_x: usize,
    d_x_to: usize,
    d_from_to: usize,
    sigma_via_x: BigUint,
    sigma_total: BigUint,
}

/// Factor geodesic tables, computed once and then read-only.
#[derive(Debug, Clone)]
pub struct FactorizedProduct {
    spec: ProductSpec,
    tables: Vec<AllPairs>,
    binomials: BinomialTable,
}

impl FactorizedProduct {
    pub fn new(spec: ProductSpec) -> FactorizedProduct {
        let tables: Vec<AllPairs> = spec.factors.iter().map(AllPairs::new).collect();
        let diameter: usize = tables.iter().map(metric::diameter_from).sum();
        FactorizedProduct {
            spec,
            tables,
            binomials: BinomialTable::new(diameter),
        }
    }

    pub fn from_factors(factors: Vec<Graph>) -> Result<FactorizedProduct> {
        Ok(Self::new(ProductSpec::new(factors)?))
    }

    pub fn spec(&self) -> &ProductSpec {
        &self.spec
    }

    pub fn factor_tables(&self) -> &[AllPairs] {
        &self.tables
    }

    pub fn distance(&self, u: &[usize], v: &[usize]) -> Result<usize> {
        self.spec.check_coords(u)?;
        self.spec.check_coords(v)?;
        Ok(self.tables.iter().enumerate().map(|(i, t)| t.dist(u[i], v[i])).sum())
    }

    pub fn sigma(&self, u: &[usize], v: &[usize]) -> Result<BigUint> {
        self.spec.check_coords(u)?;
        self.spec.check_coords(v)?;
        let mut total = 0;
        let mut acc = BigUint::one();
        for (i, t) in self.tables.iter().enumerate() {
            let d = t.dist(u[i], v[i]);
            total += d;
            acc *= t.sigma(u[i], v[i]) * self.binomials.get(total, d);
        }
        Ok(acc)
    }

    /// `v3 ∈ I(v1, v2)`, decided coordinatewise.
    pub fn interval_membership(&self, v1: &[usize], v2: &[usize], v3: &[usize]) -> Result<bool> {
        for c in [v1, v2, v3] {
            self.spec.check_coords(c)?;
        }
        Ok(self
            .tables
            .iter()
            .enumerate()
            .all(|(i, t)| t.on_geodesic(v1[i], v2[i], v3[i])))
    }

    /// `δ(u, v | x)` on the product without materializing it.
    pub fn pair_dependency(&self, u: &[usize], v: &[usize], x: &[usize]) -> Result<ExactRational> {
        for c in [u, v, x] {
            self.spec.check_coords(c)?;
        }
        if u == v {
            return Err(Error::IdenticalEndpoints(self.spec.encode_unchecked(u)));
        }
        if x == u || x == v {
            return Ok(ExactRational::zero());
        }
        let steps: Option<Vec<FactorStep>> = (0..self.tables.len()).map(|i| self.step(i, u[i], v[i], x[i])).collect();
        Ok(match steps {
            Some(steps) => {
                let refs: Vec<&FactorStep> = steps.iter().collect();
                let (num, den) = self.fold_dependency(&refs);
                exact::ratio_of(num, den)
            }
            None => ExactRational::zero(),
        })
    }

    fn step(&self, factor: usize, from: usize, to: usize, x: usize) -> Option<FactorStep> {
        let t = &self.tables[factor];
        if !t.on_geodesic(from, to, x) {
            return None;
        }
        Some(FactorStep {
            from,
            to,
            d_from_x: t.dist(from, x),
            d_x_to: t.dist(x, to),
            d_from_to: t.dist(from, to),
            sigma_via_x: t.sigma(from, x) * t.sigma(x, to),
            sigma_total: t.sigma(from, to).clone(),
        })
    }

    /// Folds per-factor dependencies into `(σ(u,x)·σ(x,v), σ(u,v))`.
    fn fold_dependency(&self, steps: &[&FactorStep]) -> (BigUint, BigUint) {
        let mut num = BigUint::one();
        let mut den = BigUint::one();
        let (mut d_ux, mut d_xv, mut d_uv) = (0, 0, 0);
        for s in steps {
            d_ux += s.d_from_x;
            d_xv += s.d_x_to;
            d_uv += s.d_from_to;
            num *= &s.sigma_via_x;
            num *= self.binomials.get(d_ux, s.d_from_x);
            num *= self.binomials.get(d_xv, s.d_x_to);
            den *= &s.sigma_total;
            den *= self.binomials.get(d_uv, s.d_from_to);
        }
        (num, den)
    }

    /// `B(x)` from factor tables only.
    pub fn betweenness(&self, x: &[usize]) -> Result<ExactRational> {
        self.spec.check_coords(x)?;
        Ok(self.betweenness_unchecked(x))
    }

    fn betweenness_unchecked(&self, x: &[usize]) -> ExactRational {
        let k = self.tables.len();
        // ordered factor pairs (g, g') with x_i ∈ I(g, g')
        let lists: Vec<Vec<FactorStep>> = (0..k)
            .map(|i| {
                let n = self.spec.radices[i];
                (0..n)
                    .flat_map(|g| (0..n).map(move |h| (g, h)))
                    .filter_map(|(g, h)| self.step(i, g, h, x[i]))
                    .collect()
            })
            .collect();

        let mut acc = DependencySum::new();
        let mut idx = vec![0usize; k];
        let mut chosen: Vec<&FactorStep> = lists.iter().map(|l| &l[0]).collect();
        loop {
            let u_is_x = chosen.iter().zip(x).all(|(s, &xi)| s.from == xi);
            let v_is_x = chosen.iter().zip(x).all(|(s, &xi)| s.to == xi);
            if !u_is_x && !v_is_x {
                let (num, den) = self.fold_dependency(&chosen);
                acc.add(num, den);
            }
            // odometer over the lists; the last factor varies fastest
            let mut i = k;
            loop {
                if i == 0 {
                    // each unordered pair appeared in both orientations
                    return acc.to_rational() / exact::integer(2);
                }
                i -= 1;
                idx[i] += 1;
                if idx[i] < lists[i].len() {
                    chosen[i] = &lists[i][idx[i]];
                    break;
                }
                idx[i] = 0;
                chosen[i] = &lists[i][0];
            }
        }
    }

    pub fn betweenness_all(&self, strategy: Strategy) -> Vec<ExactRational> {
        let k = self.spec.factor_count();
        exec::map_indices(strategy, self.spec.vertex_count(), |id| {
            let mut coords = vec![0; k];
            self.spec.decode_into(id, &mut coords);
            self.betweenness_unchecked(&coords)
        })
    }

    pub fn report(&self, strategy: Strategy) -> CentralityReport {
        CentralityReport::new(Method::Factorized, self.spec.describe(), self.betweenness_all(strategy))
    }
}

pub fn product_distance(spec: &ProductSpec, u: &[usize], v: &[usize]) -> Result<usize> {
    FactorizedProduct::new(spec.clone()).distance(u, v)
}

pub fn product_sigma(spec: &ProductSpec, u: &[usize], v: &[usize]) -> Result<BigUint> {
    FactorizedProduct::new(spec.clone()).sigma(u, v)
}

pub fn interval_membership(spec: &ProductSpec, v1: &[usize], v2: &[usize], v3: &[usize]) -> Result<bool> {
    FactorizedProduct::new(spec.clone()).interval_membership(v1, v2, v3)
}

pub fn product_pair_dependency(spec: &ProductSpec, u: &[usize], v: &[usize], x: &[usize]) -> Result<ExactRational> {
    FactorizedProduct::new(spec.clone()).pair_dependency(u, v, x)
}

pub fn factorized_betweenness(spec: &ProductSpec, x: &[usize]) -> Result<ExactRational> {
    FactorizedProduct::new(spec.clone()).betweenness(x)
}

/// `W(□ G_i) = Σ_i W(G_i) · Π_{j≠i} |G_j|²`.
pub fn product_wiener(factors: &[Graph]) -> Result<BigUint> {
    if factors.is_empty() {
        return Err(Error::NoFactors);
    }
    let mut total = BigUint::zero();
    for (i, f) in factors.iter().enumerate() {
        let w = metric::wiener(f).map_err(|_| Error::DisconnectedFactor(i))?;
        let others: BigUint = factors
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, g)| BigUint::from(g.vertex_count()).pow(2))
            .product();
        total += w * others;
    }
    Ok(total)
}
