//! Named graph families.
//!
//! Paths and cycles are labeled by position along the path or cycle. Stars put
//! the center at vertex 0. Grid, hypercube, Hamming and torus graphs are built
//! as Cartesian products of paths, `K_2`, complete graphs and cycles, so they
//! use the product's mixed-radix labeling.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::product;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Family {
    /// `P_n`, `n ≥ 1`.
    Path(usize),
    /// `C_n`, `n ≥ 3`.
    Cycle(usize),
    /// `K_n`, `n ≥ 1`.
    Complete(usize),
    /// `K_{1,n}`: center plus `n ≥ 1` leaves.
    Star(usize),
    /// `P_m □ P_n`.
    Grid(usize, usize),
    /// `Q_r = K_2^r`, `r ≥ 1`.
    Hypercube(usize),
    /// `K_{n_1} □ … □ K_{n_r}`, every `n_i ≥ 2`.
    Hamming(Vec<usize>),
    /// `C_m □ C_n`.
    Torus(usize, usize),
}

pub const FAMILY_NAMES: &[&str] = &[
    "path",
    "cycle",
    "complete",
    "star",
    "grid",
    "hypercube",
    "hamming",
    "torus",
];

impl Family {
    pub fn parse(name: &str, params: &[usize]) -> Result<Family> {
        let arity = |k: usize| -> Result<()> {
            if params.len() == k {
                Ok(())
            } else {
                Err(Error::params(
                    name,
                    format!("expected {k} parameter(s), got {}", params.len()),
                ))
            }
        };
        let family = match name {
            "path" => {
                arity(1)?;
                Family::Path(params[0])
            }
            "cycle" => {
                arity(1)?;
                Family::Cycle(params[0])
            }
            "complete" => {
                arity(1)?;
                Family::Complete(params[0])
            }
            "star" => {
                arity(1)?;
                Family::Star(params[0])
            }
            "grid" => {
                arity(2)?;
                Family::Grid(params[0], params[1])
            }
            "hypercube" => {
                arity(1)?;
                Family::Hypercube(params[0])
            }
            "hamming" => {
                if params.is_empty() {
                    return Err(Error::params(name, "expected at least one factor size"));
                }
                Family::Hamming(params.to_vec())
            }
            "torus" => {
                arity(2)?;
                Family::Torus(params[0], params[1])
            }
            other => return Err(Error::UnknownFamily(other.to_string())),
        };
        family.validate()?;
        Ok(family)
    }

    pub fn name(&self) -> &'static str {
        match self {
            Family::Path(_) => "path",
            Family::Cycle(_) => "cycle",
            Family::Complete(_) => "complete",
            Family::Star(_) => "star",
            Family::Grid(..) => "grid",
            Family::Hypercube(_) => "hypercube",
            Family::Hamming(_) => "hamming",
            Family::Torus(..) => "torus",
        }
    }

    pub fn params(&self) -> Vec<usize> {
        match self {
            Family::Path(n) | Family::Cycle(n) | Family::Complete(n) | Family::Star(n) => vec![*n],
            Family::Hypercube(r) => vec![*r],
            Family::Grid(m, n) | Family::Torus(m, n) => vec![*m, *n],
            Family::Hamming(ns) => ns.clone(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        let fail = |reason: &str| Err(Error::params(self.name(), reason));
        match self {
            Family::Path(n) | Family::Complete(n) if *n < 1 => fail("need at least 1 vertex"),
            Family::Star(n) if *n < 1 => fail("need at least 1 leaf"),
            Family::Cycle(n) if *n < 3 => fail("need at least 3 vertices"),
            Family::Grid(m, n) if *m < 1 || *n < 1 => fail("sides must be at least 1"),
            Family::Hypercube(r) if *r < 1 => fail("dimension must be at least 1"),
            Family::Hamming(ns) if ns.is_empty() || ns.iter().any(|&n| n < 2) => {
                fail("every factor must be K_n with n >= 2")
            }
            Family::Torus(m, n) if *m < 3 || *n < 3 => fail("cycle lengths must be at least 3"),
            _ => Ok(()),
        }
    }

    /// Factor families for product families, in labeling order.
    pub fn factors(&self) -> Option<Vec<Family>> {
        match self {
            Family::Grid(m, n) => Some(vec![Family::Path(*m), Family::Path(*n)]),
            Family::Torus(m, n) => Some(vec![Family::Cycle(*m), Family::Cycle(*n)]),
            Family::Hypercube(r) => Some(vec![Family::Complete(2); *r]),
            Family::Hamming(ns) => Some(ns.iter().map(|&n| Family::Complete(n)).collect()),
            _ => None,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())?;
        for p in self.params() {
            write!(f, " {p}")?;
        }
        Ok(())
    }
}

pub fn path(n: usize) -> Graph {
    Graph::from_adjacency_fn(n, |u, v| v == u + 1)
}

pub fn cycle(n: usize) -> Graph {
    Graph::from_adjacency_fn(n, |u, v| v == u + 1 || (u == 0 && v == n - 1))
}

pub fn complete(n: usize) -> Graph {
    Graph::from_adjacency_fn(n, |_, _| true)
}

pub fn star(leaves: usize) -> Graph {
    Graph::from_adjacency_fn(leaves + 1, |u, _| u == 0)
}

pub fn generate(family: &Family) -> Result<Graph> {
    family.validate()?;
    Ok(match family {
        Family::Path(n) => path(*n),
        Family::Cycle(n) => cycle(*n),
        Family::Complete(n) => complete(*n),
        Family::Star(n) => star(*n),
        product_family => {
            let factors = product_family
                .factors()
                .expect("non-product families handled above")
                .iter()
                .map(generate)
                .collect::<Result<Vec<_>>>()?;
            product::cartesian_product(factors)?.into_graph()
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn counts(f: Family) -> (usize, usize) {
        let g = generate(&f).unwrap();
        assert!(g.is_connected());
        (g.vertex_count(), g.edge_count())
    }

    #[test]
    fn family_sizes() {
        assert_eq!(counts(Family::Cycle(4)), (4, 4));
        assert_eq!(counts(Family::Path(1)), (1, 0));
        assert_eq!(counts(Family::Path(5)), (5, 4));
        assert_eq!(counts(Family::Complete(5)), (5, 10));
        assert_eq!(counts(Family::Star(3)), (4, 3));
        assert_eq!(counts(Family::Torus(3, 4)), (12, 24));
        assert_eq!(counts(Family::Hamming(vec![2, 3])), (6, 9));
    }

    #[test]
    fn hypercube_edge_count() {
        for r in 1..=6 {
            assert_eq!(counts(Family::Hypercube(r)), (1 << r, r * (1 << (r - 1))));
        }
    }

    #[test]
    fn grid_edge_count() {
        assert_eq!(counts(Family::Grid(2, 3)), (6, 7));
        for m in 1..6 {
            for n in 1..6 {
                assert_eq!(counts(Family::Grid(m, n)), (m * n, m * (n - 1) + n * (m - 1)));
            }
        }
    }

    #[test]
    fn grid_labeling_is_row_major() {
        let g = generate(&Family::Grid(2, 3)).unwrap();
        // (0,0)-(0,1) and (0,0)-(1,0)
        assert!(g.has_edge(0, 1));
        assert!(g.has_edge(0, 3));
        assert!(!g.has_edge(2, 3));
    }

    #[test]
    fn parse_and_validate() {
        assert_eq!(Family::parse("cycle", &[4]).unwrap(), Family::Cycle(4));
        assert_eq!(Family::parse("hamming", &[2, 3]).unwrap(), Family::Hamming(vec![2, 3]));
        assert!(matches!(Family::parse("petersen", &[]), Err(Error::UnknownFamily(_))));
        assert!(matches!(
            Family::parse("cycle", &[2]),
            Err(Error::InvalidParameters { .. })
        ));
        assert!(matches!(
            Family::parse("hypercube", &[0]),
            Err(Error::InvalidParameters { .. })
        ));
        assert!(matches!(
            Family::parse("hamming", &[3, 1]),
            Err(Error::InvalidParameters { .. })
        ));
        assert!(matches!(
            Family::parse("grid", &[3]),
            Err(Error::InvalidParameters { .. })
        ));
        assert!(matches!(
            Family::parse("torus", &[3, 2]),
            Err(Error::InvalidParameters { .. })
        ));
        assert_eq!(Family::Torus(3, 4).to_string(), "torus 3 4");
    }
}
