use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand};
use serde_json::json;

use gridpeel::analysis::{
    andrews_audit, category_sweep, conjectured_exponent, exponent_fit, face_count_audit, CategoryRecord,
};
use gridpeel::lattice::{
    calibrate_alpha, census_report, enumerate_directions, filter_directions, filter_radius, hyperplane_count,
    jordan_partial_sum, jordan_totient, mobius, primitive_normal, shortest_orthogonal_vector, DirectionSet,
    PrimitiveVector, CALIBRATED_ALPHA_3,
};
use gridpeel::peel::{grid_trace, tau_grid_with, PeelOptions, PeelingTrace};
use gridpeel::suites::{run_suite, Suite, SuiteConfig};
use gridpeel::{export, LatticePoint};

const EXIT_USAGE: u8 = 2;
const EXIT_INVARIANT: u8 = 3;
const EXIT_SUITE: u8 = 4;

#[derive(Parser)]
#[command(name = "gridpeel", version, about = "Convex-layer peeling of integer grids")]
struct Cli {
    /// Worker threads (defaults to available parallelism).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Seed recorded in every output and used by randomized suites.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Output {
    /// Directory for CSV/JSON artifacts.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Overwrite existing artifact files.
    #[arg(long)]
    force: bool,
}

#[derive(Args)]
struct Filter {
    /// Restrict to directions with no short orthogonal lattice vector.
    #[arg(long)]
    filtered: bool,
    /// Filter radius is alpha * mu^(1/d); defaults to the calibrated value in d = 3.
    #[arg(long, conflicts_with = "nu")]
    alpha: Option<f64>,
    /// Explicit filter radius.
    #[arg(long)]
    nu: Option<f64>,
}

#[derive(Subcommand)]
enum Command {
    /// Peel [n]^d and report the layer number.
    Peel {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        n: i64,
        #[arg(long)]
        fvectors: bool,
        #[arg(long)]
        volumes: bool,
        /// Classify V_mu on every layer (needs --mu).
        #[arg(long, requires = "mu")]
        categories: bool,
        #[arg(long)]
        mu: Option<i64>,
        #[command(flatten)]
        filter: Filter,
        /// Include layer points in the JSON trace.
        #[arg(long)]
        store_points: bool,
        /// Use the hypercube symmetry shortcut when no instrumentation is requested.
        #[arg(long)]
        symmetry: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Layer numbers over several grid sizes with a log-log fit.
    Sweep {
        #[arg(long)]
        d: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        n_list: Vec<i64>,
        #[arg(long)]
        symmetry: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Count primitive directions in [0, mu]^d.
    Census {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        mu: i64,
        #[command(flatten)]
        output: Output,
    },
    /// Run the self-check suites.
    Verify {
        /// Suites to run (default: all).
        #[arg(long, value_delimiter = ',')]
        suite: Vec<String>,
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long)]
        n: Option<i64>,
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
    /// Largest grid alpha keeping half of V_mu for every mu up to --mu-max.
    Calibrate {
        #[arg(long)]
        d: usize,
        #[arg(long, default_value_t = 40)]
        mu_max: i64,
    },
    /// Number of lattice hyperplanes with normal v meeting [n]^d.
    Hyperplanes {
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        v: Vec<i64>,
        #[arg(long)]
        n: i64,
    },
    /// Primitive normal of the hyperplane through d points given as "x,y,z;x,y,z;...".
    Normal {
        #[arg(long, allow_hyphen_values = true)]
        points: String,
    },
    /// Shortest lattice vector orthogonal to v within a radius.
    Orthogonal {
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        v: Vec<i64>,
        #[arg(long)]
        bound: f64,
    },
    /// Moebius value, Jordan totient J_r(k) and partial sum up to k.
    Jordan {
        #[arg(long)]
        r: u32,
        #[arg(long)]
        k: u64,
    },
}

enum Failure {
    Usage(anyhow::Error),
    Invariant(anyhow::Error),
    Suite,
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        match e.downcast_ref::<gridpeel::Error>() {
            Some(gridpeel::Error::InvariantViolation(_)) | Some(gridpeel::Error::Overflow) => Failure::Invariant(e),
            _ => Failure::Usage(e),
        }
    }
}

impl From<gridpeel::Error> for Failure {
    fn from(e: gridpeel::Error) -> Self {
        anyhow::Error::from(e).into()
    }
}

type Outcome = Result<(), Failure>;

fn write_artifact(output: &Output, name: &str, contents: &str) -> anyhow::Result<()> {
    let Some(dir) = &output.out else {
        return Ok(());
    };
    fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    let path: PathBuf = Path::new(dir).join(name);
    if path.exists() && !output.force {
        bail!("{} already exists (use --force to overwrite)", path.display());
    }
    fs::write(&path, contents).with_context(|| format!("writing {}", path.display()))
}

fn direction_set(d: usize, mu: i64, filter: &Filter) -> anyhow::Result<DirectionSet> {
    let v = enumerate_directions(mu, d)?;
    if !filter.filtered {
        return Ok(v);
    }
    let nu = match (filter.nu, filter.alpha) {
        (Some(nu), _) => nu,
        (None, Some(a)) => filter_radius(a, mu, d),
        (None, None) if d == 3 => filter_radius(CALIBRATED_ALPHA_3, mu, d),
        (None, None) => bail!("--filtered in dimension {d} needs --alpha or --nu"),
    };
    Ok(filter_directions(&v, nu)?)
}

#[allow(clippy::too_many_arguments)]
fn cmd_peel(
    seed: u64,
    d: usize,
    n: i64,
    fvectors: bool,
    volumes: bool,
    categories: Option<i64>,
    filter: &Filter,
    store_points: bool,
    symmetry: bool,
    output: &Output,
) -> Outcome {
    let opts = PeelOptions {
        fvectors,
        volumes,
        store_points: store_points || categories.is_some(),
        symmetry,
    };
    let trace = grid_trace(n, d, opts)?;
    let expected = (n as u128).checked_pow(d as u32);
    if expected != Some(trace.total_points() as u128) || trace.tau != trace.summaries.len() {
        return Err(Failure::Invariant(anyhow!("layers do not partition [{n}]^{d}")));
    }
    let records: Option<Vec<CategoryRecord>> = match categories {
        Some(mu) => Some(category_sweep(&trace, &direction_set(d, mu, filter)?, false)?),
        None => None,
    };
    let exported = if store_points {
        trace.clone()
    } else {
        PeelingTrace {
            layers: None,
            ..trace.clone()
        }
    };
    write_artifact(output, "trace.json", &export::trace_json(&exported, seed)?)?;
    write_artifact(output, "layers.csv", &export::layers_csv(&trace, seed)?)?;
    if let Some(recs) = &records {
        write_artifact(output, "categories.csv", &export::categories_csv(recs, d, seed)?)?;
    }
    let mut violation = None;
    if d == 3 && fvectors {
        let faces = face_count_audit(&trace, records.as_deref())?;
        let andrews = if volumes { Some(andrews_audit(&trace)?) } else { None };
        write_artifact(output, "audit.csv", &export::audit_csv(&faces, andrews.as_ref(), seed)?)?;
        if let Some(a) = faces.iter().find(|a| !a.passed()) {
            violation = Some(anyhow!("face-count audit failed on layer {}: {a:?}", a.layer_index));
        }
    }
    println!("tau={}", trace.tau);
    match violation {
        Some(e) => Err(Failure::Invariant(e)),
        None => Ok(()),
    }
}

fn cmd_sweep(seed: u64, d: usize, ns: &[i64], symmetry: bool, output: &Output) -> Outcome {
    let pairs = ns
        .iter()
        .map(|&n| Ok((n, tau_grid_with(n, d, symmetry)?)))
        .collect::<gridpeel::Result<Vec<_>>>()?;
    let mut fit = exponent_fit(&pairs, conjectured_exponent(d))?;
    if d == 3 {
        fit.add_reference(24.0 / 11.0);
    }
    write_artifact(output, "fit.csv", &export::fit_csv(&fit, seed)?)?;
    let report = export::fit_json(&fit, d, seed)?;
    write_artifact(output, "fit.json", &report)?;
    for (n, tau) in &pairs {
        println!("n={n} tau={tau}");
    }
    print!("{report}");
    Ok(())
}

fn cmd_verify(seed: u64, names: &[String], samples: Option<usize>, n: Option<i64>, inject_fault: bool) -> Outcome {
    let suites = if names.is_empty() {
        Suite::ALL.to_vec()
    } else {
        names
            .iter()
            .map(|s| Suite::parse(s).ok_or_else(|| anyhow!("unknown suite {s:?}")))
            .collect::<anyhow::Result<Vec<_>>>()?
    };
    let cfg = SuiteConfig {
        seed,
        samples,
        n,
        inject_fault,
    };
    let mut all = true;
    for s in suites {
        let out = run_suite(s, &cfg)?;
        all &= out.passed;
        println!("{}", serde_json::to_string(&out).map_err(anyhow::Error::from)?);
    }
    if all {
        Ok(())
    } else {
        Err(Failure::Suite)
    }
}

fn parse_points(s: &str) -> anyhow::Result<Vec<LatticePoint>> {
    s.split(';')
        .map(|p| {
            let coords = p
                .split(',')
                .map(|c| c.trim().parse::<i64>().with_context(|| format!("bad coordinate {c:?}")))
                .collect::<anyhow::Result<Vec<_>>>()?;
            Ok(LatticePoint::new(coords))
        })
        .collect()
}

fn run(cli: Cli) -> Outcome {
    if let Some(t) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .map_err(anyhow::Error::from)?;
    }
    let seed = cli.seed;
    match cli.command {
        Command::Peel {
            d,
            n,
            fvectors,
            volumes,
            categories,
            mu,
            filter,
            store_points,
            symmetry,
            output,
        } => cmd_peel(
            seed,
            d,
            n,
            fvectors,
            volumes,
            if categories { mu } else { None },
            &filter,
            store_points,
            symmetry,
            &output,
        ),
        Command::Sweep {
            d,
            n_list,
            symmetry,
            output,
        } => cmd_sweep(seed, d, &n_list, symmetry, &output),
        Command::Census { d, mu, output } => {
            let report = export::census_json(&census_report(mu, d)?, seed)?;
            write_artifact(&output, "census.json", &report)?;
            print!("{report}");
            Ok(())
        }
        Command::Verify {
            suite,
            samples,
            n,
            inject_fault,
        } => cmd_verify(seed, &suite, samples, n, inject_fault),
        Command::Calibrate { d, mu_max } => {
            let cal = calibrate_alpha(d, mu_max)?;
            println!("{}", serde_json::to_string_pretty(&cal).map_err(anyhow::Error::from)?);
            Ok(())
        }
        Command::Hyperplanes { v, n } => {
            let v = PrimitiveVector::new(v)?;
            println!("{}", hyperplane_count(&v, n)?);
            Ok(())
        }
        Command::Normal { points } => {
            let normal = primitive_normal(&parse_points(&points)?)?;
            println!("{}", json!(normal.coords()));
            Ok(())
        }
        Command::Orthogonal { v, bound } => {
            let v = PrimitiveVector::new(v)?;
            match shortest_orthogonal_vector(&v, bound)? {
                Some((w, norm)) => println!("{}", json!({ "vector": w, "norm": norm })),
                None => println!("none"),
            }
            Ok(())
        }
        Command::Jordan { r, k } => {
            if r == 0 || k == 0 {
                return Err(Failure::Usage(anyhow!("r and k must be positive")));
            }
            println!(
                "{}",
                json!({
                    "mobius": mobius(k),
                    "jordan_totient": jordan_totient(r, k).to_string(),
                    "partial_sum": jordan_partial_sum(k, r + 1).to_string(),
                })
            );
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Invariant(e)) => {
            eprintln!("invariant violation: {e:#}");
            ExitCode::from(EXIT_INVARIANT)
        }
        Err(Failure::Suite) => {
            eprintln!("one or more suites failed");
            ExitCode::from(EXIT_SUITE)
        }
    }
}
