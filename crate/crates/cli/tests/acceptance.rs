//! Acceptance gate: one line per criterion, zero tolerance throughout.

use std::panic::{self, AssertUnwindSafe};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use cartbc::closed_forms::{self, Parity};
use cartbc::exact::{binomial, factorial, rational, ExactRational};
use cartbc::generators::{complete, cycle, path, star};
use cartbc::product::{cartesian_product, product_sigma, product_wiener, FactorizedProduct, ProductSpec};
use cartbc::{betweenness, diameter, generate, wiener, Algorithm, AllPairs, Family, Graph, Strategy};
use cartbc_cli::edgelist;
use num_bigint::{BigInt, BigUint};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

struct Instance {
    name: String,
    factors: Vec<Graph>,
    graph: Graph,
    spec: ProductSpec,
}

fn instance(name: String, factors: Vec<Graph>) -> Instance {
    let product = cartesian_product(factors.clone()).unwrap();
    Instance {
        name,
        factors,
        graph: product.graph,
        spec: product.spec,
    }
}

fn criterion2_set() -> Vec<Instance> {
    let mut pool: Vec<(String, Graph)> = Vec::new();
    pool.extend((2..=5).map(|n| (format!("P{n}"), path(n))));
    pool.extend((3..=6).map(|n| (format!("C{n}"), cycle(n))));
    pool.extend((2..=5).map(|n| (format!("K{n}"), complete(n))));
    pool.push(("star_3".into(), star(3)));
    let mut set = Vec::new();
    for (gn, g) in &pool {
        for (hn, h) in &pool {
            if g.vertex_count() * h.vertex_count() <= 36 {
                set.push(instance(format!("{gn} x {hn}"), vec![g.clone(), h.clone()]));
            }
        }
    }
    set.push(instance("Q3".into(), vec![complete(2); 3]));
    set.push(instance("Q4".into(), vec![complete(2); 4]));
    set.push(instance(
        "K2 x K2 x K3".into(),
        vec![complete(2), complete(2), complete(3)],
    ));
    set
}

fn criterion1_set() -> Vec<(&'static str, Family, ExactRational)> {
    vec![
        (
            "hypercube_bc(3)",
            Family::Hypercube(3),
            closed_forms::hypercube_bc(3).unwrap(),
        ),
        (
            "hypercube_bc(4)",
            Family::Hypercube(4),
            closed_forms::hypercube_bc(4).unwrap(),
        ),
        (
            "hamming_bc([3,4])",
            Family::Hamming(vec![3, 4]),
            closed_forms::hamming_bc(&[3, 4]).unwrap(),
        ),
        (
            "torus_bc(3,4)",
            Family::Torus(3, 4),
            closed_forms::torus_bc(3, 4).unwrap(),
        ),
        (
            "torus_bc(4,6)",
            Family::Torus(4, 6),
            closed_forms::torus_bc(4, 6).unwrap(),
        ),
        (
            "torus_bc(5,5)",
            Family::Torus(5, 5),
            closed_forms::torus_bc(5, 5).unwrap(),
        ),
        (
            "odd_cycles_bc([3,3])",
            Family::Torus(3, 3),
            closed_forms::odd_cycles_bc(&[3, 3]).unwrap(),
        ),
    ]
}

fn brandes(g: &Graph) -> Vec<ExactRational> {
    betweenness(g, Algorithm::Brandes).unwrap().values
}

fn closed_form_exactness() -> Outcome {
    let expected = [
        rational(5, 2),
        rational(17, 2),
        rational(3, 1),
        rational(9, 2),
        rational(37, 2),
        rational(18, 1),
        rational(2, 1),
    ];
    let cases = criterion1_set();
    for ((label, family, value), anchor) in cases.iter().zip(expected) {
        ensure!(*value == anchor, "{label} = {value}, expected {anchor}");
        for (v, b) in brandes(&generate(family).unwrap()).iter().enumerate() {
            ensure!(b == value, "{label}: Brandes gives {b} at vertex {v}");
        }
    }
    Ok(format!("{} closed forms", cases.len()))
}

fn method_agreement() -> Outcome {
    let set = criterion2_set();
    for inst in &set {
        let definitional = betweenness(&inst.graph, Algorithm::Definitional).unwrap().values;
        let accumulated = brandes(&inst.graph);
        let factorized = FactorizedProduct::from_factors(inst.factors.clone())
            .unwrap()
            .betweenness_all(Strategy::default());
        ensure!(
            definitional == accumulated,
            "{}: definitional {definitional:?} vs Brandes {accumulated:?}",
            inst.name
        );
        ensure!(
            factorized == accumulated,
            "{}: factorized {factorized:?} vs Brandes {accumulated:?}",
            inst.name
        );
    }
    Ok(format!("{} instances", set.len()))
}

fn sum_identity() -> Outcome {
    let mut graphs: Vec<(String, Graph)> = criterion1_set()
        .into_iter()
        .map(|(label, family, _)| (label.to_string(), generate(&family).unwrap()))
        .collect();
    graphs.extend(criterion2_set().into_iter().map(|i| (i.name, i.graph)));
    for (name, g) in &graphs {
        let total = brandes(g).into_iter().fold(ExactRational::default(), |a, b| a + b);
        let rhs = BigInt::from(wiener(g).unwrap()) - BigInt::from(binomial(g.vertex_count() as u64, 2));
        ensure!(
            total == ExactRational::from_integer(rhs.clone()),
            "{name}: sum {total} vs W - C(n,2) = {rhs}"
        );
    }
    Ok(format!("{} graphs", graphs.len()))
}

fn sigma_formulas() -> Outcome {
    let mut pairs = 0usize;
    for inst in criterion2_set() {
        let tables = AllPairs::new(&inst.graph);
        let n = inst.graph.vertex_count();
        for u in 0..n {
            let cu = inst.spec.decode(u).unwrap();
            for v in 0..n {
                let cv = inst.spec.decode(v).unwrap();
                let s = product_sigma(&inst.spec, &cu, &cv).unwrap();
                ensure!(
                    &s == tables.sigma(u, v),
                    "{}: sigma({u},{v}) = {s}, BFS {}",
                    inst.name,
                    tables.sigma(u, v)
                );
                pairs += 1;
            }
        }
    }
    for r in 1..=6 {
        let g = generate(&Family::Hypercube(r)).unwrap();
        let tables = AllPairs::new(&g);
        for u in 0..g.vertex_count() {
            for v in 0..g.vertex_count() {
                let d = tables.dist(u, v);
                ensure!(
                    tables.sigma(u, v) == &factorial(d as u64),
                    "Q{r}: sigma({u},{v}) != {d}!"
                );
            }
        }
    }
    for (k, n, expected) in [(2usize, 2usize, 6u32), (2, 3, 20), (3, 3, 1680)] {
        let count = closed_forms::debruijn_count(k, n).unwrap();
        let spec = ProductSpec::new(vec![path(n + 1); k]).unwrap();
        let corner = product_sigma(&spec, &vec![0; k], &vec![n; k]).unwrap();
        ensure!(count == BigUint::from(expected), "debruijn_count({k},{n}) = {count}");
        ensure!(
            corner == count,
            "debruijn_count({k},{n}) = {count}, corner sigma {corner}"
        );
    }
    Ok(format!("{pairs} product pairs, Q1..Q6, 3 lattice counts"))
}

fn grid_formula() -> Outcome {
    ensure!(
        closed_forms::grid_bc(3, 3, 2, 2).unwrap() == rational(32, 3),
        "grid_bc(3,3,2,2)"
    );
    ensure!(
        closed_forms::grid_bc(3, 3, 1, 1).unwrap() == rational(4, 3),
        "grid_bc(3,3,1,1)"
    );
    let mut positions = 0;
    for m in 2..=7usize {
        for n in 2..=7usize {
            let g = generate(&Family::Grid(m, n)).unwrap();
            let values = brandes(&g);
            let mut total = ExactRational::default();
            for a in 1..=m {
                for b in 1..=n {
                    let closed = closed_forms::grid_bc(m, n, a, b).unwrap();
                    let direct = &values[(a - 1) * n + (b - 1)];
                    ensure!(&closed == direct, "P{m} x P{n} at ({a},{b}): {closed} vs {direct}");
                    total += closed;
                    positions += 1;
                }
            }
            let rhs = BigInt::from(wiener(&g).unwrap()) - BigInt::from(binomial((m * n) as u64, 2));
            ensure!(total == ExactRational::from_integer(rhs), "P{m} x P{n}: sum identity");
        }
    }
    Ok(format!("{positions} positions"))
}

fn wiener_checks() -> Outcome {
    let set = criterion2_set();
    for inst in &set {
        let (p, d) = (product_wiener(&inst.factors).unwrap(), wiener(&inst.graph).unwrap());
        ensure!(p == d, "{}: product_wiener {p} vs {d}", inst.name);
    }
    for (n, w) in [(4usize, 8u32), (5, 15), (7, 42)] {
        let got = closed_forms::cycle_wiener(n).unwrap();
        ensure!(got == BigUint::from(w), "cycle_wiener({n}) = {got}");
    }
    for (ns, parity) in [([4usize, 4], Parity::Even), ([3, 3], Parity::Odd)] {
        let closed = closed_forms::cycle_product_wiener(&ns, parity).unwrap();
        let product = product_wiener(&[cycle(ns[0]), cycle(ns[1])]).unwrap();
        ensure!(
            closed == product,
            "cycle_product_wiener({ns:?}) = {closed}, product_wiener {product}"
        );
    }
    Ok(format!("{} instances plus cycle anchors", set.len()))
}

fn structural_invariants() -> Outcome {
    let set = criterion2_set();
    for inst in &set {
        let tables = AllPairs::new(&inst.graph);
        let factor_tables: Vec<AllPairs> = inst.factors.iter().map(AllPairs::new).collect();
        let diam: usize = inst.factors.iter().map(|f| diameter(f).unwrap()).sum();
        ensure!(diameter(&inst.graph).unwrap() == diam, "{}: diameter", inst.name);
        let n = inst.graph.vertex_count();
        let coords: Vec<Vec<usize>> = (0..n).map(|v| inst.spec.decode(v).unwrap()).collect();
        let k = inst.factors.len();
        for u in 0..n {
            for v in 0..n {
                let d: usize = (0..k).map(|i| factor_tables[i].dist(coords[u][i], coords[v][i])).sum();
                ensure!(tables.dist(u, v) == d, "{}: d({u},{v}) not additive", inst.name);
                let differing: Vec<usize> = (0..k).filter(|&i| coords[u][i] != coords[v][i]).collect();
                for x in 0..n {
                    let on = tables.on_geodesic(u, v, x);
                    let per_factor =
                        (0..k).all(|i| factor_tables[i].on_geodesic(coords[u][i], coords[v][i], coords[x][i]));
                    ensure!(
                        on == per_factor,
                        "{}: interval membership of {x} in I({u},{v})",
                        inst.name
                    );
                    if differing.len() == 1 && on {
                        let stays = (0..k).all(|j| j == differing[0] || coords[x][j] == coords[u][j]);
                        ensure!(stays, "{}: geodesic ({u},{v}) leaves its fiber at {x}", inst.name);
                    }
                }
            }
        }
    }
    Ok(format!("{} instances", set.len()))
}

fn cli_gate() -> Outcome {
    let mut families: Vec<Family> = Vec::new();
    for n in 1..=8 {
        families.extend([Family::Path(n), Family::Complete(n), Family::Star(n)]);
    }
    families.extend((3..=9).map(Family::Cycle));
    families.extend([
        Family::Grid(4, 5),
        Family::Hypercube(4),
        Family::Hamming(vec![2, 3, 4]),
        Family::Torus(5, 6),
    ]);
    for family in &families {
        let g = generate(family).unwrap();
        let text = edgelist::write(&g);
        ensure!(
            edgelist::parse(&text).as_ref() == Ok(&g),
            "{family}: parse(write(G)) != G"
        );
    }
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_cartbc"))
        .args(["verify", "--scope", "all"])
        .output()
        .map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let stdout = String::from_utf8_lossy(&out.stdout);
    ensure!(
        out.status.code() == Some(0),
        "verify --scope all exited {:?}:\n{stdout}",
        out.status.code()
    );
    ensure!(
        elapsed < Duration::from_secs(300),
        "verify --scope all took {elapsed:?}"
    );
    let suites = cartbc_cli::verify::suites();
    for suite in &suites {
        let pass = format!("PASS {} ", suite.name);
        ensure!(
            stdout.lines().any(|l| l.starts_with(&pass)),
            "suite {} did not report PASS",
            suite.name
        );
    }
    Ok(format!(
        "{} round trips, verify ran {} suites in {:.1}s",
        families.len(),
        suites.len(),
        elapsed.as_secs_f64()
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("closed-form exactness", closed_form_exactness),
        ("method agreement", method_agreement),
        ("sum identity", sum_identity),
        ("sigma formulas", sigma_formulas),
        ("grid formula", grid_formula),
        ("wiener", wiener_checks),
        ("structural invariants", structural_invariants),
        ("cli", cli_gate),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failures = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS criterion {}: {name} ({detail}; {secs:.2}s)", i + 1),
            Err(why) => {
                failures += 1;
                println!("FAIL criterion {}: {name}: {why}", i + 1);
            }
        }
    }
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
