//! Argument definitions and dispatch for the `cartbc` binary.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use cartbc::closed_forms;
use cartbc::product::{cartesian_product, product_wiener, FactorizedProduct, ProductSpec};
use cartbc::{
    betweenness_with, generate, wiener, Algorithm, CentralityReport, ExactRational, Family, Graph, Method, Strategy,
};
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::bench::{self, BenchFamily, BenchMethod, BenchPlan};
use crate::edgelist;
use crate::error::CliError;
use crate::report;
use crate::verify::{self, Scope};

#[derive(Debug, Parser)]
#[command(
    name = "cartbc",
    version,
    about = "Exact betweenness centrality on Cartesian product graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write the edge list of a named family.
    Gen(GenArgs),
    /// Write the Cartesian product of edge-list files.
    Product(ProductArgs),
    /// Per-vertex exact betweenness.
    Bc(BcArgs),
    /// Exact Wiener index.
    Wiener(WienerArgs),
    /// Run the invariant suites.
    Verify(VerifyArgs),
    /// Time materialized versus factorized centrality over a size sweep.
    Bench(BenchArgs),
}

#[derive(Debug, Args)]
pub struct GenArgs {
    /// One of path, cycle, complete, star, grid, hypercube, hamming, torus.
    pub family: String,
    pub params: Vec<usize>,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Labels {
    Ids,
    Coords,
}

#[derive(Debug, Args)]
pub struct ProductArgs {
    #[arg(required = true)]
    pub files: Vec<PathBuf>,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "ids")]
    pub labels: Labels,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Definitional,
    Brandes,
    Factorized,
    ClosedForm,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

/// Where the graph comes from: a file, factor files, or a named family.
#[derive(Debug, Args)]
pub struct InputArgs {
    /// Edge-list file.
    pub file: Option<PathBuf>,
    /// Comma-separated factor edge-list files.
    #[arg(long, value_delimiter = ',', conflicts_with = "file")]
    pub factors: Option<Vec<PathBuf>>,
    /// Family name followed by its parameters, e.g. `--family torus 4 6`.
    #[arg(long, num_args = 1.., value_name = "NAME PARAMS", conflicts_with_all = ["file", "factors"])]
    pub family: Option<Vec<String>>,
}

#[derive(Debug, Args)]
pub struct BcArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long, value_enum, default_value = "brandes")]
    pub method: MethodArg,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
    /// Add coordinate vectors for product inputs.
    #[arg(long, value_enum, default_value = "ids")]
    pub labels: Labels,
    /// Disable the thread pool.
    #[arg(long)]
    pub sequential: bool,
}

#[derive(Debug, Args)]
pub struct WienerArgs {
    #[command(flatten)]
    pub input: InputArgs,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value = "all")]
    pub scope: Scope,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long, value_enum)]
    pub family: BenchFamily,
    /// Largest size parameter of the sweep.
    #[arg(long)]
    pub max: usize,
    /// Smallest size parameter; defaults to the family minimum.
    #[arg(long)]
    pub min: Option<usize>,
    #[arg(long, value_enum, value_delimiter = ',', default_value = "brandes,factorized")]
    pub methods: Vec<BenchMethod>,
    #[arg(long, default_value_t = 1)]
    pub reps: usize,
    #[arg(long)]
    pub sequential: bool,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

fn display(path: &Path) -> String {
    path.display().to_string()
}

fn read_text(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: display(path),
        source,
    })
}

fn load_graph(path: &Path) -> Result<Graph, CliError> {
    edgelist::parse(&read_text(path)?).map_err(|source| CliError::Parse {
        path: display(path),
        source,
    })
}

fn emit(output: Option<&Path>, text: &str, out: &mut dyn Write) -> Result<(), CliError> {
    match output {
        Some(path) => fs::write(path, text).map_err(|source| CliError::Io {
            path: display(path),
            source,
        }),
        None => out.write_all(text.as_bytes()).map_err(|source| CliError::Io {
            path: "<stdout>".into(),
            source,
        }),
    }
}

fn parse_family(words: &[String]) -> Result<Family, CliError> {
    let (name, rest) = words
        .split_first()
        .ok_or_else(|| CliError::usage("--family needs a name"))?;
    let params = rest
        .iter()
        .map(|p| {
            p.parse::<usize>()
                .map_err(|_| CliError::usage(format!("family parameter `{p}` is not a non-negative integer")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Family::parse(name, &params)?)
}

fn family_factors(family: &Family) -> Result<Vec<Graph>, CliError> {
    family
        .factors()
        .ok_or_else(|| CliError::usage(format!("`{}` is not a product family", family.name())))?
        .iter()
        .map(|f| generate(f).map_err(CliError::from))
        .collect()
}

enum Input {
    Graph { graph: Graph, name: String },
    Factors { factors: Vec<Graph>, name: String },
    Family(Family),
}

impl Input {
    fn load(args: &InputArgs) -> Result<Input, CliError> {
        match (&args.file, &args.factors, &args.family) {
            (Some(path), None, None) => Ok(Input::Graph {
                graph: load_graph(path)?,
                name: display(path),
            }),
            (None, Some(paths), None) if !paths.is_empty() => Ok(Input::Factors {
                factors: paths.iter().map(|p| load_graph(p)).collect::<Result<_, _>>()?,
                name: paths.iter().map(|p| display(p)).collect::<Vec<_>>().join(" x "),
            }),
            (None, None, Some(words)) => Ok(Input::Family(parse_family(words)?)),
            _ => Err(CliError::usage("give exactly one of FILE, --factors or --family")),
        }
    }

    fn name(&self) -> String {
        match self {
            Input::Graph { name, .. } | Input::Factors { name, .. } => name.clone(),
            Input::Family(f) => f.to_string(),
        }
    }

    /// Factor graphs when the input is a product.
    fn factors(&self) -> Result<Option<Vec<Graph>>, CliError> {
        match self {
            Input::Graph { .. } => Ok(None),
            Input::Factors { factors, .. } => Ok(Some(factors.clone())),
            Input::Family(f) if f.factors().is_some() => Ok(Some(family_factors(f)?)),
            Input::Family(_) => Ok(None),
        }
    }

    /// The materialized graph, plus its product structure when it has one.
    fn graph(&self) -> Result<(Graph, Option<ProductSpec>), CliError> {
        match self {
            Input::Graph { graph, .. } => Ok((graph.clone(), None)),
            Input::Factors { factors, .. } => {
                let p = cartesian_product(factors.clone())?;
                Ok((p.graph, Some(p.spec)))
            }
            Input::Family(f) => match self.factors()? {
                Some(factors) => {
                    let p = cartesian_product(factors)?;
                    Ok((p.graph, Some(p.spec)))
                }
                None => Ok((generate(f)?, None)),
            },
        }
    }
}

/// Closed-form values for a family; `true` when every vertex shares one value.
fn closed_form_values(family: &Family) -> Result<(Vec<ExactRational>, bool), CliError> {
    let repeat = |value: ExactRational, n: usize| (vec![value; n], true);
    Ok(match family {
        Family::Hypercube(r) => repeat(closed_forms::hypercube_bc(*r)?, 1 << r),
        Family::Hamming(ns) => repeat(closed_forms::hamming_bc(ns)?, ns.iter().product()),
        Family::Complete(1) => repeat(ExactRational::default(), 1),
        Family::Complete(n) => repeat(closed_forms::hamming_bc(&[*n])?, *n),
        Family::Cycle(n) if n % 2 == 0 => repeat(closed_forms::even_cycles_bc(&[*n])?, *n),
        Family::Cycle(n) => repeat(closed_forms::odd_cycles_bc(&[*n])?, *n),
        Family::Torus(m, n) => repeat(closed_forms::torus_bc(*m, *n)?, m * n),
        Family::Grid(m, n) => grid_values(*m, *n)?,
        Family::Path(n) => grid_values(1, *n)?,
        Family::Star(_) => {
            return Err(CliError::usage("no closed form for star graphs; use --method brandes"));
        }
    })
}

fn grid_values(m: usize, n: usize) -> Result<(Vec<ExactRational>, bool), CliError> {
    let mut values = Vec::with_capacity(m * n);
    for a in 1..=m {
        for b in 1..=n {
            values.push(closed_forms::grid_bc(m, n, a, b)?);
        }
    }
    Ok((values, false))
}

fn cmd_gen(args: &GenArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let family = Family::parse(&args.family, &args.params)?;
    emit(args.output.as_deref(), &edgelist::write(&generate(&family)?), out)
}

fn cmd_product(args: &ProductArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let factors = args
        .files
        .iter()
        .map(|p| load_graph(p))
        .collect::<Result<Vec<_>, _>>()?;
    let product = cartesian_product(factors)?;
    let text = match args.labels {
        Labels::Ids => edgelist::write(&product.graph),
        Labels::Coords => edgelist::write_with_coords(&product.graph, &product.spec),
    };
    emit(args.output.as_deref(), &text, out)
}

fn cmd_bc(args: &BcArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let strategy = if args.sequential {
        Strategy::Sequential
    } else {
        Strategy::default()
    };
    let input = Input::load(&args.input)?;
    let name = input.name();
    let (report, spec) = match args.method {
        MethodArg::Definitional | MethodArg::Brandes => {
            let alg = if args.method == MethodArg::Brandes {
                Algorithm::Brandes
            } else {
                Algorithm::Definitional
            };
            let (graph, spec) = input.graph()?;
            (betweenness_with(&graph, alg, strategy)?.with_graph(name), spec)
        }
        MethodArg::Factorized => {
            let factors = input
                .factors()?
                .ok_or_else(|| CliError::usage("--method factorized needs --factors or a product family"))?;
            let fp = FactorizedProduct::from_factors(factors)?;
            let spec = fp.spec().clone();
            (fp.report(strategy).with_graph(name), Some(spec))
        }
        MethodArg::ClosedForm => {
            let Input::Family(family) = &input else {
                return Err(CliError::usage("--method closed-form needs --family"));
            };
            let (values, uniform) = closed_form_values(family)?;
            if uniform {
                eprintln!(
                    "note: {family} is vertex-transitive; every vertex has betweenness {}",
                    report::format_exact(&values[0])
                );
            }
            let mut r = CentralityReport::new(Method::ClosedForm, name, values);
            r.uniform = uniform;
            let spec = match family.factors() {
                Some(_) => Some(ProductSpec::new(family_factors(family)?)?),
                None => None,
            };
            (r, spec)
        }
    };
    let labels = match args.labels {
        Labels::Ids => None,
        Labels::Coords => Some(
            spec.as_ref()
                .ok_or_else(|| CliError::usage("--labels coords needs a product input"))?,
        ),
    };
    let text = match args.format {
        Format::Csv => report::to_csv(&report, labels),
        Format::Json => report::to_json(&report, labels),
    };
    emit(args.output.as_deref(), &text, out)
}

fn cmd_wiener(args: &WienerArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let input = Input::load(&args.input)?;
    let w = match input.factors()? {
        Some(factors) => product_wiener(&factors)?,
        None => wiener(&input.graph()?.0)?,
    };
    emit(None, &format!("{w}\n"), out)
}

fn cmd_verify(args: &VerifyArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let io = |source| CliError::Io {
        path: "<stdout>".into(),
        source,
    };
    let mut write_err = None;
    let outcomes = verify::run(args.scope, |o| {
        let line = match &o.failure {
            None => format!(
                "PASS {} ({} checks, {:.2}s)\n",
                o.name,
                o.checks,
                o.elapsed.as_secs_f64()
            ),
            Some(msg) => format!("FAIL {} after {} checks: {msg}\n", o.name, o.checks),
        };
        if let Err(e) = out.write_all(line.as_bytes()).and_then(|_| out.flush()) {
            write_err.get_or_insert(e);
        }
    });
    if let Some(e) = write_err {
        return Err(io(e));
    }
    let failed: Vec<&str> = outcomes.iter().filter(|o| !o.passed()).map(|o| o.name).collect();
    let checks: usize = outcomes.iter().map(|o| o.checks).sum();
    if failed.is_empty() {
        writeln!(out, "ok: {} suites, {checks} checks", outcomes.len()).map_err(io)?;
        Ok(())
    } else {
        Err(CliError::Verification(failed.join(", ")))
    }
}

fn cmd_bench(args: &BenchArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let plan = BenchPlan {
        family: args.family,
        min: args.min.unwrap_or(args.family.min_size()),
        max: args.max,
        methods: args.methods.clone(),
        reps: args.reps,
        strategy: if args.sequential {
            Strategy::Sequential
        } else {
            Strategy::default()
        },
    };
    plan.validate()?;
    let csv_err = |e: csv::Error| CliError::Report(e.to_string());
    let sink: Box<dyn Write + '_> = match &args.output {
        Some(path) => Box::new(fs::File::create(path).map_err(|source| CliError::Io {
            path: display(path),
            source,
        })?),
        None => Box::new(out),
    };
    let mut writer = csv::Writer::from_writer(sink);
    bench::run(&plan, |row| {
        writer.serialize(row).map_err(csv_err)?;
        writer.flush().map_err(|source| CliError::Io {
            path: "<bench output>".into(),
            source,
        })
    })?;
    Ok(())
}

pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<(), CliError> {
    match &cli.command {
        Command::Gen(a) => cmd_gen(a, out),
        Command::Product(a) => cmd_product(a, out),
        Command::Bc(a) => cmd_bc(a, out),
        Command::Wiener(a) => cmd_wiener(a, out),
        Command::Verify(a) => cmd_verify(a, out),
        Command::Bench(a) => cmd_bench(a, out),
    }
}
