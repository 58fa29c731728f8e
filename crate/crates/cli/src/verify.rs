//! Desk-scale invariant suites run by `cartbc verify`.
//!
//! Each suite stops at its first failing check and reports the instance with
//! exact values.

use std::fmt::Debug;
use std::time::{Duration, Instant};

use cartbc::closed_forms::{self, Parity};
use cartbc::exact::{binomial, factorial, integer};
use cartbc::generators::{complete, cycle, path, star};
use cartbc::product::{cartesian_product, product_wiener, FactorizedProduct};
use cartbc::{
    betweenness, diameter, generate, pair_dependency_from, wiener, Algorithm, AllPairs, CentralityReport,
    ExactRational, Family, Graph, Method, Strategy,
};
use clap::ValueEnum;
use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use crate::{edgelist, report};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Scope {
    All,
    ClosedForms,
    Products,
    Sigma,
    SumIdentity,
    Wiener,
    Structure,
    Cli,
}

pub struct Suite {
    pub scope: Scope,
    pub name: &'static str,
    run: fn(&mut Checks) -> Result<(), String>,
}

#[derive(Debug, Clone)]
pub struct SuiteOutcome {
    pub name: &'static str,
    pub checks: usize,
    pub failure: Option<String>,
    pub elapsed: Duration,
}

impl SuiteOutcome {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

#[derive(Debug, Default)]
pub struct Checks {
    count: usize,
}

impl Checks {
    fn eq<T: PartialEq + Debug>(&mut self, left: &T, right: &T, ctx: impl FnOnce() -> String) -> Result<(), String> {
        self.count += 1;
        if left == right {
            Ok(())
        } else {
            Err(format!("{}: {left:?} != {right:?}", ctx()))
        }
    }

    fn holds(&mut self, cond: bool, ctx: impl FnOnce() -> String) -> Result<(), String> {
        self.count += 1;
        if cond {
            Ok(())
        } else {
            Err(ctx())
        }
    }
}

/// A product instance: factor graphs plus a readable name.
#[derive(Debug, Clone)]
pub struct Instance {
    pub name: String,
    pub factors: Vec<Graph>,
}

/// The factor families used by the product agreement suites.
pub fn factor_pool() -> Vec<(String, Graph)> {
    let mut pool = Vec::new();
    for n in 2..=5 {
        pool.push((format!("P{n}"), path(n)));
    }
    for n in 3..=6 {
        pool.push((format!("C{n}"), cycle(n)));
    }
    for n in 2..=5 {
        pool.push((format!("K{n}"), complete(n)));
    }
    pool.push(("S3".to_string(), star(3)));
    pool
}

/// Every ordered pair `G □ H` from the pool with `|G|·|H| ≤ 36`, plus
/// `Q_3`, `Q_4` and `K_2 □ K_2 □ K_3`.
pub fn product_instances() -> Vec<Instance> {
    let pool = factor_pool();
    let mut out = Vec::new();
    for (gn, g) in &pool {
        for (hn, h) in &pool {
            if g.vertex_count() * h.vertex_count() <= 36 {
                out.push(Instance {
                    name: format!("{gn} x {hn}"),
                    factors: vec![g.clone(), h.clone()],
                });
            }
        }
    }
    out.push(Instance {
        name: "Q3".into(),
        factors: vec![complete(2); 3],
    });
    out.push(Instance {
        name: "Q4".into(),
        factors: vec![complete(2); 4],
    });
    out.push(Instance {
        name: "K2 x K2 x K3".into(),
        factors: vec![complete(2), complete(2), complete(3)],
    });
    out
}

fn brandes(graph: &Graph) -> Vec<ExactRational> {
    betweenness(graph, Algorithm::Brandes).expect("connected").values
}

fn materialize(instance: &Instance) -> Graph {
    cartesian_product(instance.factors.clone())
        .expect("connected factors")
        .graph
}

fn uniform(checks: &mut Checks, values: &[ExactRational], expected: &ExactRational, what: &str) -> Result<(), String> {
    for (v, b) in values.iter().enumerate() {
        checks.eq(b, expected, || format!("{what}, vertex {v}"))?;
    }
    Ok(())
}

fn size_lists(lo: usize, hi: usize, step: usize, cap: usize, max_len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut stack: Vec<Vec<usize>> = (lo..=hi).step_by(step).map(|n| vec![n]).collect();
    while let Some(list) = stack.pop() {
        if list.iter().product::<usize>() > cap {
            continue;
        }
        if list.len() < max_len {
            let last = *list.last().expect("non-empty");
            for n in (last..=hi).step_by(step) {
                let mut next = list.clone();
                next.push(n);
                stack.push(next);
            }
        }
        out.push(list);
    }
    out.sort();
    out
}

fn sum_identity(checks: &mut Checks, graph: &Graph, values: &[ExactRational], what: &str) -> Result<(), String> {
    let total = values.iter().fold(ExactRational::zero(), |acc, b| acc + b);
    let w = BigInt::from(wiener(graph).expect("connected"));
    let pairs = BigInt::from(binomial(graph.vertex_count() as u64, 2));
    checks.eq(&total, &ExactRational::from_integer(w - pairs), || {
        format!("{what}: sum of betweenness vs W - C(n,2)")
    })
}

fn hamming_suite(c: &mut Checks) -> Result<(), String> {
    for ns in size_lists(2, 8, 1, 64, 6) {
        let expected = closed_forms::hamming_bc(&ns).map_err(|e| e.to_string())?;
        let values = brandes(&generate(&Family::Hamming(ns.clone())).expect("valid"));
        uniform(c, &values, &expected, &format!("hamming {ns:?}"))?;
    }
    for p in 2..=8 {
        for q in 2..=8 {
            let expected = integer(((p - 1) * (q - 1)) as i64) / integer(2);
            c.eq(&closed_forms::hamming_bc(&[p, q]).unwrap(), &expected, || {
                format!("K{p} x K{q}")
            })?;
        }
    }
    Ok(())
}

fn uniform_kn_suite(c: &mut Checks) -> Result<(), String> {
    for n in 2..=5usize {
        for r in 1..=4usize {
            let u = closed_forms::uniform_kn_bc(n, r).unwrap();
            c.eq(&u, &closed_forms::hamming_bc(&vec![n; r]).unwrap(), || {
                format!("K{n}^{r}")
            })?;
            if n.pow(r as u32) <= 64 {
                let values = brandes(&generate(&Family::Hamming(vec![n; r])).expect("valid"));
                uniform(c, &values, &u, &format!("K{n}^{r}"))?;
            }
        }
    }
    Ok(())
}

fn hypercube_suite(c: &mut Checks) -> Result<(), String> {
    for r in 1..=6 {
        let expected = closed_forms::hypercube_bc(r).unwrap();
        c.eq(&expected, &closed_forms::uniform_kn_bc(2, r).unwrap(), || {
            format!("Q{r} vs K2^{r}")
        })?;
        c.eq(&expected, &closed_forms::hamming_bc(&vec![2; r]).unwrap(), || {
            format!("Q{r} vs hamming")
        })?;
        uniform(
            c,
            &brandes(&generate(&Family::Hypercube(r)).unwrap()),
            &expected,
            &format!("Q{r}"),
        )?;
    }
    Ok(())
}

fn even_cycles_suite(c: &mut Checks) -> Result<(), String> {
    for ns in size_lists(4, 16, 2, 64, 3) {
        let expected = closed_forms::even_cycles_bc(&ns).unwrap();
        let g = cartesian_product(ns.iter().map(|&n| cycle(n)).collect()).unwrap().graph;
        uniform(c, &brandes(&g), &expected, &format!("even cycles {ns:?}"))?;
    }
    for ns in size_lists(4, 12, 2, usize::MAX, 3) {
        c.eq(
            &closed_forms::even_cycles_bc(&ns).unwrap(),
            &closed_forms::even_cycles_bc_half_lengths(&ns).unwrap(),
            || format!("even cycles {ns:?}: printed forms"),
        )?;
    }
    Ok(())
}

fn odd_cycles_suite(c: &mut Checks) -> Result<(), String> {
    for ns in size_lists(3, 21, 2, 64, 3) {
        let expected = closed_forms::odd_cycles_bc(&ns).unwrap();
        let g = cartesian_product(ns.iter().map(|&n| cycle(n)).collect()).unwrap().graph;
        uniform(c, &brandes(&g), &expected, &format!("odd cycles {ns:?}"))?;
    }
    Ok(())
}

fn torus_suite(c: &mut Checks) -> Result<(), String> {
    for m in 3..=12 {
        for n in 3..=12 {
            let t = closed_forms::torus_bc(m, n).unwrap();
            c.eq(&t, &closed_forms::torus_bc_half_lengths(m, n).unwrap(), || {
                format!("C{m} x C{n}: printed forms")
            })?;
            match (m % 2, n % 2) {
                (0, 0) => c.eq(&t, &closed_forms::even_cycles_bc(&[m, n]).unwrap(), || {
                    format!("C{m} x C{n} vs even")
                })?,
                (1, 1) => c.eq(&t, &closed_forms::odd_cycles_bc(&[m, n]).unwrap(), || {
                    format!("C{m} x C{n} vs odd")
                })?,
                _ => {}
            }
            if m <= 8 && n <= 8 {
                uniform(
                    c,
                    &brandes(&generate(&Family::Torus(m, n)).unwrap()),
                    &t,
                    &format!("C{m} x C{n}"),
                )?;
            }
        }
    }
    Ok(())
}

fn grid_suite(c: &mut Checks) -> Result<(), String> {
    for m in 1..=7usize {
        for n in 1..=7usize {
            if m * n < 2 {
                continue;
            }
            let g = generate(&Family::Grid(m, n)).unwrap();
            let values = brandes(&g);
            let mut closed = Vec::with_capacity(m * n);
            for a in 1..=m {
                for b in 1..=n {
                    let v = closed_forms::grid_bc(m, n, a, b).unwrap();
                    c.eq(&v, &values[(a - 1) * n + (b - 1)], || {
                        format!("P{m} x P{n} at ({a},{b})")
                    })?;
                    closed.push(v);
                }
            }
            sum_identity(c, &g, &closed, &format!("P{m} x P{n}"))?;
        }
    }
    Ok(())
}

fn cycle_wiener_suite(c: &mut Checks) -> Result<(), String> {
    for n in 3..=24 {
        c.eq(
            &closed_forms::cycle_wiener(n).unwrap(),
            &wiener(&cycle(n)).unwrap(),
            || format!("W(C{n})"),
        )?;
    }
    for ns in size_lists(3, 12, 1, 400, 3) {
        let parity = match (ns.iter().all(|n| n % 2 == 0), ns.iter().all(|n| n % 2 == 1)) {
            (true, _) => Parity::Even,
            (_, true) => Parity::Odd,
            _ => continue,
        };
        let factors: Vec<Graph> = ns.iter().map(|&n| cycle(n)).collect();
        c.eq(
            &closed_forms::cycle_product_wiener(&ns, parity).unwrap(),
            &product_wiener(&factors).unwrap(),
            || format!("W of cycle product {ns:?}"),
        )?;
    }
    Ok(())
}

fn debruijn_suite(c: &mut Checks) -> Result<(), String> {
    for (k, n, expected) in [(2, 2, 6u32), (2, 3, 20), (3, 3, 1680)] {
        c.eq(
            &closed_forms::debruijn_count(k, n).unwrap(),
            &BigUint::from(expected),
            || format!("s({k},{n})"),
        )?;
    }
    for k in 1..=3usize {
        for n in 0..=3usize {
            let fp = FactorizedProduct::from_factors(vec![path(n + 1); k]).unwrap();
            c.eq(
                &closed_forms::debruijn_count(k, n).unwrap(),
                &fp.sigma(&vec![0; k], &vec![n; k]).unwrap(),
                || format!("s({k},{n}) vs corner-to-corner sigma"),
            )?;
        }
    }
    Ok(())
}

fn method_agreement_suite(c: &mut Checks) -> Result<(), String> {
    for inst in product_instances() {
        let g = materialize(&inst);
        let definitional = betweenness(&g, Algorithm::Definitional).unwrap().values;
        let brandes = brandes(&g);
        let factorized = FactorizedProduct::from_factors(inst.factors.clone())
            .unwrap()
            .betweenness_all(Strategy::default());
        c.eq(&definitional, &brandes, || {
            format!("{}: definitional vs brandes", inst.name)
        })?;
        c.eq(&factorized, &brandes, || {
            format!("{}: factorized vs brandes", inst.name)
        })?;
    }
    Ok(())
}

fn pair_dependency_suite(c: &mut Checks) -> Result<(), String> {
    for inst in product_instances()
        .into_iter()
        .filter(|i| materialize(i).vertex_count() <= 36)
    {
        let g = materialize(&inst);
        let tables = AllPairs::new(&g);
        let fp = FactorizedProduct::from_factors(inst.factors.clone()).unwrap();
        let spec = fp.spec();
        let n = g.vertex_count();
        let coords: Vec<Vec<usize>> = (0..n).map(|v| spec.decode(v).unwrap()).collect();
        for u in 0..n {
            for v in 0..n {
                if u == v {
                    continue;
                }
                for x in 0..n {
                    let factored = fp.pair_dependency(&coords[u], &coords[v], &coords[x]).unwrap();
                    let direct = pair_dependency_from(&tables, u, v, x).unwrap();
                    c.eq(&factored, &direct, || format!("{}: delta({u},{v}|{x})", inst.name))?;
                }
            }
        }
    }
    Ok(())
}

fn product_sigma_suite(c: &mut Checks) -> Result<(), String> {
    for inst in product_instances() {
        let g = materialize(&inst);
        let tables = AllPairs::new(&g);
        let fp = FactorizedProduct::from_factors(inst.factors.clone()).unwrap();
        let n = g.vertex_count();
        let coords: Vec<Vec<usize>> = (0..n).map(|v| fp.spec().decode(v).unwrap()).collect();
        for u in 0..n {
            for v in 0..n {
                c.eq(&fp.sigma(&coords[u], &coords[v]).unwrap(), tables.sigma(u, v), || {
                    format!("{}: sigma({u},{v})", inst.name)
                })?;
            }
        }
    }
    Ok(())
}

fn hypercube_sigma_suite(c: &mut Checks) -> Result<(), String> {
    for r in 1..=6 {
        let g = generate(&Family::Hypercube(r)).unwrap();
        let tables = AllPairs::new(&g);
        for u in 0..g.vertex_count() {
            for v in 0..g.vertex_count() {
                let d = tables.dist(u, v);
                c.eq(tables.sigma(u, v), &factorial(d as u64), || {
                    format!("Q{r}: sigma({u},{v}) vs {d}!")
                })?;
            }
        }
    }
    Ok(())
}

fn sum_identity_graphs() -> Vec<(String, Graph)> {
    let mut graphs: Vec<(String, Graph)> = Vec::new();
    for n in 1..=12 {
        graphs.push((format!("P{n}"), path(n)));
        graphs.push((format!("K{n}"), complete(n)));
        graphs.push((format!("S{n}"), star(n)));
    }
    for n in 3..=14 {
        graphs.push((format!("C{n}"), cycle(n)));
    }
    for family in [
        Family::Hypercube(3),
        Family::Hypercube(4),
        Family::Hypercube(5),
        Family::Hamming(vec![3, 4]),
        Family::Torus(3, 4),
        Family::Torus(4, 6),
        Family::Torus(5, 5),
        Family::Grid(5, 6),
    ] {
        graphs.push((family.to_string(), generate(&family).unwrap()));
    }
    for inst in product_instances() {
        let g = materialize(&inst);
        graphs.push((inst.name, g));
    }
    graphs
}

fn sum_identity_suite(c: &mut Checks) -> Result<(), String> {
    for (name, g) in sum_identity_graphs() {
        let values = brandes(&g);
        sum_identity(c, &g, &values, &name)?;
    }
    Ok(())
}

fn pair_sum_suite(c: &mut Checks) -> Result<(), String> {
    for inst in product_instances()
        .into_iter()
        .filter(|i| materialize(i).vertex_count() <= 16)
    {
        let g = materialize(&inst);
        let tables = AllPairs::new(&g);
        let n = g.vertex_count();
        for u in 0..n {
            for v in (u + 1)..n {
                let mut total = ExactRational::zero();
                for x in 0..n {
                    let d = pair_dependency_from(&tables, u, v, x).unwrap();
                    c.holds(d >= ExactRational::zero() && d <= integer(1), || {
                        format!("{}: delta({u},{v}|{x}) = {d} outside [0,1]", inst.name)
                    })?;
                    total += d;
                }
                c.eq(&total, &integer(tables.dist(u, v) as i64 - 1), || {
                    format!("{}: sum of delta({u},{v}|x) vs d-1", inst.name)
                })?;
            }
        }
    }
    Ok(())
}

fn product_wiener_suite(c: &mut Checks) -> Result<(), String> {
    for inst in product_instances() {
        let g = materialize(&inst);
        c.eq(&product_wiener(&inst.factors).unwrap(), &wiener(&g).unwrap(), || {
            format!("W({})", inst.name)
        })?;
    }
    for (n, w) in [(4usize, 8u32), (5, 15), (7, 42)] {
        c.eq(&closed_forms::cycle_wiener(n).unwrap(), &BigUint::from(w), || {
            format!("W(C{n})")
        })?;
    }
    for (ns, parity) in [([4usize, 4], Parity::Even), ([3, 3], Parity::Odd)] {
        let factors: Vec<Graph> = ns.iter().map(|&n| cycle(n)).collect();
        c.eq(
            &closed_forms::cycle_product_wiener(&ns, parity).unwrap(),
            &product_wiener(&factors).unwrap(),
            || format!("W of cycle product {ns:?}"),
        )?;
    }
    Ok(())
}

fn distance_additivity_suite(c: &mut Checks) -> Result<(), String> {
    for inst in product_instances() {
        let g = materialize(&inst);
        let tables = AllPairs::new(&g);
        let fp = FactorizedProduct::from_factors(inst.factors.clone()).unwrap();
        let n = g.vertex_count();
        let coords: Vec<Vec<usize>> = (0..n).map(|v| fp.spec().decode(v).unwrap()).collect();
        for u in 0..n {
            for v in 0..n {
                c.eq(
                    &fp.distance(&coords[u], &coords[v]).unwrap(),
                    &tables.dist(u, v),
                    || format!("{}: d({u},{v})", inst.name),
                )?;
            }
        }
    }
    Ok(())
}

fn diameter_suite(c: &mut Checks) -> Result<(), String> {
    for inst in product_instances() {
        let sum: usize = inst.factors.iter().map(|f| diameter(f).unwrap()).sum();
        c.eq(&diameter(&materialize(&inst)).unwrap(), &sum, || {
            format!("diam({})", inst.name)
        })?;
    }
    Ok(())
}

fn fiber_suite(c: &mut Checks) -> Result<(), String> {
    for inst in product_instances() {
        let product = cartesian_product(inst.factors.clone()).unwrap();
        let spec = &product.spec;
        let tables = AllPairs::new(&product.graph);
        let factor_tables: Vec<AllPairs> = inst.factors.iter().map(AllPairs::new).collect();
        let n = spec.vertex_count();
        let coords: Vec<Vec<usize>> = (0..n).map(|v| spec.decode(v).unwrap()).collect();
        for u in 0..n {
            for v in 0..n {
                let differing: Vec<usize> = (0..coords[u].len()).filter(|&i| coords[u][i] != coords[v][i]).collect();
                if differing.len() != 1 {
                    continue;
                }
                let i = differing[0];
                c.eq(
                    &tables.dist(u, v),
                    &factor_tables[i].dist(coords[u][i], coords[v][i]),
                    || format!("{}: fiber {i} isometry at ({u},{v})", inst.name),
                )?;
                if n > 36 {
                    continue;
                }
                for w in (0..n).filter(|&w| tables.on_geodesic(u, v, w)) {
                    let stays = (0..coords[u].len()).all(|j| j == i || coords[w][j] == coords[u][j]);
                    c.holds(stays, || {
                        format!("{}: geodesic ({u},{v}) leaves fiber {i} at {w}", inst.name)
                    })?;
                }
            }
        }
    }
    Ok(())
}

fn interval_suite(c: &mut Checks) -> Result<(), String> {
    for inst in product_instances() {
        let g = materialize(&inst);
        let tables = AllPairs::new(&g);
        let fp = FactorizedProduct::from_factors(inst.factors.clone()).unwrap();
        let n = g.vertex_count();
        let coords: Vec<Vec<usize>> = (0..n).map(|v| fp.spec().decode(v).unwrap()).collect();
        for a in 0..n {
            for b in 0..n {
                for x in 0..n {
                    c.eq(
                        &fp.interval_membership(&coords[a], &coords[b], &coords[x]).unwrap(),
                        &tables.on_geodesic(a, b, x),
                        || format!("{}: {x} in I({a},{b})", inst.name),
                    )?;
                }
            }
        }
    }
    Ok(())
}

fn edge_list_suite(c: &mut Checks) -> Result<(), String> {
    let mut graphs: Vec<(String, Graph)> = sum_identity_graphs();
    graphs.push(("K1 (path 1)".into(), path(1)));
    for (name, g) in graphs {
        let text = edgelist::write(&g);
        let parsed = edgelist::parse(&text).map_err(|e| format!("{name}: {e}"))?;
        c.eq(&parsed, &g, || format!("{name}: parse(write(G))"))?;
        c.eq(&edgelist::write(&parsed), &text, || {
            format!("{name}: write is canonical")
        })?;
    }
    Ok(())
}

fn report_suite(c: &mut Checks) -> Result<(), String> {
    for inst in product_instances().into_iter().take(40) {
        let g = materialize(&inst);
        let r = CentralityReport::new(Method::Brandes, inst.name.clone(), brandes(&g));
        let csv_values: Vec<ExactRational> = report::read_csv(&report::to_csv(&r, None))
            .map_err(|e| e.to_string())?
            .into_iter()
            .map(|row| row.value)
            .collect();
        c.eq(&csv_values, &r.values, || format!("{}: CSV round trip", inst.name))?;
        let json_values: Vec<ExactRational> = report::read_json(&report::to_json(&r, None))
            .map_err(|e| e.to_string())?
            .into_iter()
            .map(|row| row.value)
            .collect();
        c.eq(&json_values, &r.values, || format!("{}: JSON round trip", inst.name))?;
    }
    Ok(())
}

pub fn suites() -> Vec<Suite> {
    use Scope::*;
    let s = |scope, name, run| Suite { scope, name, run };
    vec![
        s(ClosedForms, "hamming", hamming_suite),
        s(ClosedForms, "uniform-kn", uniform_kn_suite),
        s(ClosedForms, "hypercube", hypercube_suite),
        s(ClosedForms, "even-cycles", even_cycles_suite),
        s(ClosedForms, "odd-cycles", odd_cycles_suite),
        s(ClosedForms, "torus", torus_suite),
        s(ClosedForms, "grid", grid_suite),
        s(ClosedForms, "cycle-wiener", cycle_wiener_suite),
        s(ClosedForms, "debruijn", debruijn_suite),
        s(Products, "method-agreement", method_agreement_suite),
        s(Products, "pair-dependency", pair_dependency_suite),
        s(Sigma, "product-sigma", product_sigma_suite),
        s(Sigma, "hypercube-sigma", hypercube_sigma_suite),
        s(SumIdentity, "sum-identity", sum_identity_suite),
        s(SumIdentity, "pair-sum", pair_sum_suite),
        s(Wiener, "product-wiener", product_wiener_suite),
        s(Structure, "distance-additivity", distance_additivity_suite),
        s(Structure, "diameter-additivity", diameter_suite),
        s(Structure, "fiber-convexity", fiber_suite),
        s(Structure, "interval-equivalence", interval_suite),
        s(Cli, "edge-list-round-trip", edge_list_suite),
        s(Cli, "report-round-trip", report_suite),
    ]
}

pub fn run_suite(suite: &Suite) -> SuiteOutcome {
    let start = Instant::now();
    let mut checks = Checks::default();
    let failure = (suite.run)(&mut checks).err();
    SuiteOutcome {
        name: suite.name,
        checks: checks.count,
        failure,
        elapsed: start.elapsed(),
    }
}

/// Runs every suite in `scope`, calling `progress` after each one.
pub fn run(scope: Scope, mut progress: impl FnMut(&SuiteOutcome)) -> Vec<SuiteOutcome> {
    suites()
        .iter()
        .filter(|s| scope == Scope::All || s.scope == scope)
        .map(|s| {
            let outcome = run_suite(s);
            progress(&outcome);
            outcome
        })
        .collect()
}
