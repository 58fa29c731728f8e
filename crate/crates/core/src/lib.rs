//! Exact betweenness centrality on Cartesian product graphs.
//!
//! Geodesic counts and pair dependencies of `G_1 □ … □ G_k` are computed from
//! the factors alone, using additive distances, coordinatewise intervals and
//! multinomial interleavings. Every value is an exact big rational and is
//! checked against definitional and Brandes-style computation on the
//! materialized product.
//!
//! ```
//! use cartbc::{generators::complete, product::FactorizedProduct, exact::rational};
//!
//! let k3k3 = FactorizedProduct::from_factors(vec![complete(3), complete(3)]).unwrap();
//! assert_eq!(k3k3.betweenness(&[0, 0]).unwrap(), rational(2, 1));
//! ```

pub mod centrality;
pub mod closed_forms;
pub mod error;
pub mod exact;
pub mod exec;
pub mod generators;
pub mod geodesic;
pub mod graph;
pub mod metric;
pub mod product;

pub use centrality::{
    betweenness, betweenness_with, pair_dependency, pair_dependency_from, sigma_through, Algorithm, CentralityReport,
    Method,
};
pub use error::{Error, Result};
pub use exact::ExactRational;
pub use exec::Strategy;
pub use generators::{generate, Family};
pub use geodesic::{bfs_geodesics, AllPairs, GeodesicTable};
pub use graph::Graph;
pub use metric::{average_distance, diameter, interval, is_geodetic, wiener};
pub use product::{cartesian_product, FactorizedProduct, ProductGraph, ProductSpec};
