//! Size sweeps timing materialized versus factorized centrality.

use std::time::{Duration, Instant};

use cartbc::generators::{complete, cycle, path};
use cartbc::product::{cartesian_product, FactorizedProduct};
use cartbc::{betweenness_with, Algorithm, Graph, Strategy};
use clap::ValueEnum;
use serde::Serialize;

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BenchFamily {
    /// `C_s □ C_s`
    Torus,
    /// `P_s □ P_s`
    Grid,
    /// `K_s □ K_s`
    Hamming,
    /// `Q_s`
    Hypercube,
}

impl BenchFamily {
    pub fn min_size(self) -> usize {
        match self {
            BenchFamily::Torus => 3,
            BenchFamily::Grid | BenchFamily::Hamming => 2,
            BenchFamily::Hypercube => 1,
        }
    }

    fn instance(self, s: usize) -> (String, Vec<Graph>) {
        match self {
            BenchFamily::Torus => (format!("torus {s} {s}"), vec![cycle(s), cycle(s)]),
            BenchFamily::Grid => (format!("grid {s} {s}"), vec![path(s), path(s)]),
            BenchFamily::Hamming => (format!("hamming {s} {s}"), vec![complete(s), complete(s)]),
            BenchFamily::Hypercube => (format!("hypercube {s}"), vec![complete(2); s]),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BenchMethod {
    Brandes,
    Factorized,
    Definitional,
}

impl BenchMethod {
    fn as_str(self) -> &'static str {
        match self {
            BenchMethod::Brandes => "brandes",
            BenchMethod::Factorized => "factorized",
            BenchMethod::Definitional => "definitional",
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct BenchRow {
    pub instance: String,
    pub n: usize,
    pub method: &'static str,
    pub wall_ms: f64,
}

#[derive(Debug, Clone)]
pub struct BenchPlan {
    pub family: BenchFamily,
    pub min: usize,
    pub max: usize,
    pub methods: Vec<BenchMethod>,
    pub reps: usize,
    pub strategy: Strategy,
}

impl BenchPlan {
    pub fn validate(&self) -> Result<(), CliError> {
        if self.min < self.family.min_size() {
            return Err(CliError::usage(format!(
                "--min must be at least {} for this family",
                self.family.min_size()
            )));
        }
        if self.max < self.min {
            return Err(CliError::usage("--max must not be below --min"));
        }
        if self.reps == 0 || self.methods.is_empty() {
            return Err(CliError::usage("need at least one repetition and one method"));
        }
        Ok(())
    }
}

fn time_once(method: BenchMethod, factors: &[Graph], strategy: Strategy) -> Result<Duration, CliError> {
    let start = Instant::now();
    match method {
        BenchMethod::Factorized => {
            let fp = FactorizedProduct::from_factors(factors.to_vec())?;
            std::hint::black_box(fp.betweenness_all(strategy));
        }
        BenchMethod::Brandes | BenchMethod::Definitional => {
            let g = cartesian_product(factors.to_vec())?.graph;
            let alg = if method == BenchMethod::Brandes {
                Algorithm::Brandes
            } else {
                Algorithm::Definitional
            };
            std::hint::black_box(betweenness_with(&g, alg, strategy)?);
        }
    }
    Ok(start.elapsed())
}

/// Runs the sweep; each row reports the fastest of `reps` runs.
pub fn run(
    plan: &BenchPlan,
    mut emit: impl FnMut(&BenchRow) -> Result<(), CliError>,
) -> Result<Vec<BenchRow>, CliError> {
    plan.validate()?;
    let mut rows = Vec::new();
    for s in plan.min..=plan.max {
        let (instance, factors) = plan.family.instance(s);
        let n = factors.iter().map(Graph::vertex_count).product();
        for &method in &plan.methods {
            let mut best = Duration::MAX;
            for _ in 0..plan.reps {
                best = best.min(time_once(method, &factors, plan.strategy)?);
            }
            let row = BenchRow {
                instance: instance.clone(),
                n,
                method: method.as_str(),
                wall_ms: (best.as_secs_f64() * 1e6).round() / 1e3,
            };
            emit(&row)?;
            rows.push(row);
        }
    }
    Ok(rows)
}
