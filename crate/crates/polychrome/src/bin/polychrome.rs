//! Command-line front end.
//!
//! Exit codes: 0 success / verification Ok, 1 a violation was found,
//! 2 usage or format error, 3 internal invariant failure.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use polychrome::coloring::{k_color, Strategy};
use polychrome::gen::{generate, GeneratorKind};
use polychrome::geom::canonical_map;
use polychrome::io;
use polychrome::ranges::{enumerate_ranges, max_nonpoly_range, PointSet};
use polychrome::verify::{empirical_threshold, verify};
use polychrome::witness::witness_extract;
use polychrome::{experiment, svg, Error};

#[derive(Parser)]
#[command(name = "polychrome", version, about = "Polychromatic point colorings for homothetic triangle ranges")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a point-set instance.
    Gen {
        /// uniform-random | grid | collinear-diagonal | staircase-adversarial
        #[arg(long)]
        kind: String,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Enumerate all distinct homothet ranges as CSV.
    Enumerate {
        #[arg(long)]
        input: PathBuf,
        /// Override triangle, as "x0,y0 x1,y1 x2,y2".
        #[arg(long)]
        triangle: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compute a k-coloring and report its thresholds.
    Color {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value = "exact")]
        strategy: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        triangle: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check that every range with at least --threshold points has all colors.
    Verify {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        coloring: PathBuf,
        #[arg(long)]
        threshold: usize,
        #[arg(long)]
        triangle: Option<String>,
    },
    /// Print the least threshold at which the coloring verifies.
    Empirical {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        coloring: PathBuf,
        #[arg(long)]
        triangle: Option<String>,
    },
    /// Replay the doubling argument on a violating refined coloring.
    ExtractWitness {
        #[arg(long)]
        input: PathBuf,
        /// The k-coloring the refined coloring was split from.
        #[arg(long)]
        parent: PathBuf,
        /// The 2k-coloring to indict.
        #[arg(long)]
        coloring: PathBuf,
        /// Claimed base split threshold c.
        #[arg(long)]
        c: usize,
        /// Claimed parent threshold t.
        #[arg(long)]
        t: usize,
        #[arg(long)]
        triangle: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Search small instances for a 2-coloring lower-bound witness.
    SearchP2 {
        #[arg(long, default_value_t = 12)]
        n_max: usize,
        /// Number of random instances to try on top of the structured ones.
        #[arg(long, default_value_t = 200)]
        budget: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Where to write the best witness instance found.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a TOML-configured batch of coloring experiments.
    Experiment {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Include wall-clock times (breaks byte-for-byte reproducibility).
        #[arg(long)]
        timing: bool,
        /// Emit one SVG per successful row into this directory.
        #[arg(long)]
        render_dir: Option<PathBuf>,
    },
    /// Render an instance (and optional coloring) as SVG.
    Render {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        coloring: Option<PathBuf>,
        #[arg(long)]
        triangle: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            match err.downcast_ref::<Error>() {
                Some(Error::InternalInvariant(_)) => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn emit(out: &Option<PathBuf>, text: &str) -> anyhow::Result<()> {
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

/// Instance from file, with optional triangle override.
fn load_instance(input: &PathBuf, triangle: &Option<String>) -> anyhow::Result<polychrome::gen::Instance> {
    let mut instance = io::read_instance(&std::fs::read_to_string(input)?)?;
    if let Some(spec) = triangle {
        instance.triangle = io::parse_triangle(spec)?;
    }
    Ok(instance)
}

/// Points mapped into the canonical frame of the instance triangle.
fn canonicalize(instance: &polychrome::gen::Instance) -> anyhow::Result<PointSet> {
    let map = canonical_map(&instance.triangle)?;
    Ok(PointSet::new(instance.points.points.iter().map(|p| map.apply(p)).collect()))
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.command {
        Command::Gen { kind, n, seed, out } => {
            let kind: GeneratorKind = kind.parse()?;
            let instance = generate(kind, n, seed);
            emit(&out, &io::write_instance(&instance))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Enumerate { input, triangle, out } => {
            let instance = load_instance(&input, &triangle)?;
            let catalog = enumerate_ranges(&canonicalize(&instance)?);
            emit(&out, &io::write_catalog_csv(&catalog))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Color { input, k, strategy, seed, triangle, out } => {
            let instance = load_instance(&input, &triangle)?;
            let strategy: Strategy = strategy.parse()?;
            let outcome = k_color(&instance.points, &instance.triangle, k, strategy, seed)?;
            eprintln!(
                "k={k} empirical={} theoretical={}",
                outcome.empirical.threshold, outcome.theoretical.threshold
            );
            emit(&out, &io::write_coloring(&outcome.coloring))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { input, coloring, threshold, triangle } => {
            let instance = load_instance(&input, &triangle)?;
            let coloring = io::read_coloring(&std::fs::read_to_string(coloring)?)?;
            expect_total(&coloring, instance.points.len())?;
            let catalog = enumerate_ranges(&canonicalize(&instance)?);
            match verify(&catalog, &coloring, threshold) {
                None => {
                    println!("ok: every range with >= {threshold} points has all {} colors", coloring.k);
                    Ok(ExitCode::SUCCESS)
                }
                Some(v) => {
                    println!(
                        "violation: {} points, color {} missing, homothet a={} b={} s={}",
                        v.size, v.missing_color, v.homothet.a, v.homothet.b, v.homothet.s
                    );
                    Ok(ExitCode::from(1))
                }
            }
        }
        Command::Empirical { input, coloring, triangle } => {
            let instance = load_instance(&input, &triangle)?;
            let coloring = io::read_coloring(&std::fs::read_to_string(coloring)?)?;
            expect_total(&coloring, instance.points.len())?;
            let catalog = enumerate_ranges(&canonicalize(&instance)?);
            println!("{}", empirical_threshold(&catalog, &coloring));
            Ok(ExitCode::SUCCESS)
        }
        Command::ExtractWitness { input, parent, coloring, c, t, triangle, out } => {
            let instance = load_instance(&input, &triangle)?;
            let parent = io::read_coloring(&std::fs::read_to_string(parent)?)?;
            let refined = io::read_coloring(&std::fs::read_to_string(coloring)?)?;
            expect_total(&parent, instance.points.len())?;
            expect_total(&refined, instance.points.len())?;
            let map = canonical_map(&instance.triangle)?;
            let points = PointSet::new(instance.points.points.iter().map(|p| map.apply(p)).collect());
            let catalog = enumerate_ranges(&points);
            let Some(viol) = verify(&catalog, &refined, c * c * t) else {
                println!("ok: refined coloring verifies at {}; nothing to extract", c * c * t);
                return Ok(ExitCode::SUCCESS);
            };
            let trace = witness_extract(&points, &parent, &refined, &viol, c, t)?;
            let world = trace.violating.to_world(&map.inverse());
            emit(&out, &io::write_witness_trace(&trace, Some(&world)))?;
            Ok(ExitCode::from(1))
        }
        Command::SearchP2 { n_max, budget, seed, out } => {
            let search = experiment::search_p2_lower_bound(n_max, budget, seed)?;
            println!(
                "best optimal 2-coloring threshold: {} over {} instances{}",
                search.best_threshold,
                search.instances_tried,
                if search.best_threshold >= 4 { " (lower-bound witness found)" } else { "" }
            );
            if let (Some(out), Some(instance)) = (&out, &search.best_instance) {
                std::fs::write(out, io::write_instance(instance))?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Experiment { config, out, jobs, timing, render_dir } => {
            let config = experiment::ExperimentConfig::from_toml(&std::fs::read_to_string(config)?)?;
            let report = experiment::run_experiment(&config, jobs);
            if let Some(dir) = render_dir {
                std::fs::create_dir_all(&dir)?;
                render_rows(&config, &report, &dir)?;
            }
            emit(&out, &report.to_csv(timing))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Render { input, coloring, triangle, out } => {
            let instance = load_instance(&input, &triangle)?;
            let coloring = match coloring {
                Some(path) => {
                    let c = io::read_coloring(&std::fs::read_to_string(path)?)?;
                    expect_total(&c, instance.points.len())?;
                    Some(c)
                }
                None => None,
            };
            let highlight = match &coloring {
                Some(c) => {
                    let catalog = enumerate_ranges(&canonicalize(&instance)?);
                    max_nonpoly_range(&catalog, c).1.map(|(range, _)| range.homothet.clone())
                }
                None => None,
            };
            emit(&out, &svg::render(&instance, coloring.as_ref(), highlight.as_ref()))?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn expect_total(coloring: &polychrome::Coloring, n: usize) -> anyhow::Result<()> {
    if coloring.assignment.len() != n {
        anyhow::bail!(Error::Parse(format!(
            "coloring covers {} points but instance has {n}",
            coloring.assignment.len()
        )));
    }
    Ok(())
}

fn render_rows(
    config: &experiment::ExperimentConfig,
    report: &experiment::ExperimentReport,
    dir: &PathBuf,
) -> anyhow::Result<()> {
    for row in &report.rows {
        if row.outcome.is_err() {
            continue;
        }
        let kind: GeneratorKind = row.generator.parse()?;
        let strategy: Strategy = row.strategy.parse()?;
        let instance = generate(kind, row.n, row.seed);
        let outcome = k_color(&instance.points, &instance.triangle, row.k, strategy, row.seed)?;
        let highlight = max_nonpoly_range(&outcome.catalog, &outcome.coloring)
            .1
            .map(|(range, _)| range.homothet.clone());
        let svg_text = svg::render(&instance, Some(&outcome.coloring), highlight.as_ref());
        let name = format!("{}-n{}-k{}-s{}.svg", row.generator, row.n, row.k, row.seed);
        std::fs::write(dir.join(name), svg_text)?;
    }
    let _ = config;
    Ok(())
}
