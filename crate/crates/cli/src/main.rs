use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use labelcut::check::{check_global, check_instance, run_sweeps, CheckConfig};
use labelcut::generate::{generate, GeneratorConfig};
use labelcut::properties::{PropertyVerdict, SampleConfig, Status};
use labelcut::reductions::{self, construction_size, decision_pipeline, hitting_set_to_st_label_cut};
use labelcut::solvers::{decide_cut_at_most, DEFAULT_BUDGET};
use labelcut::transform::rainbow_path_transform;
use labelcut::{compute_stats, exact_min_label_cut, greedy_st_label_cut, io, operation_k, verify_guarantees};
use labelcut::{CutSolution, LabelId, LabeledGraph, Semantics, SolveConfig, Variant};

#[derive(Parser)]
#[command(name = "labelcut", version, about = "Minimum label cuts with label overlaps")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Exact,
    Greedy,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a seeded random instance.
    Gen {
        #[arg(long, default_value_t = 6)]
        n: usize,
        #[arg(long, default_value_t = 8)]
        m: usize,
        #[arg(long, default_value_t = 5)]
        labels: usize,
        /// Chance of each additional label on an edge.
        #[arg(long, default_value_t = 0.0)]
        overlap: f64,
        #[arg(long, default_value_t = 1)]
        min_weight: u64,
        #[arg(long, default_value_t = 1)]
        max_weight: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Leave terminals unset.
        #[arg(long)]
        no_terminals: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Eliminate overlaps (operation K), or replace one edge by a rainbow path.
    Transform {
        file: PathBuf,
        /// Replace this edge by a path of single-label edges instead.
        #[arg(long, value_name = "EDGE")]
        rainbow: Option<usize>,
        #[arg(long, default_value_t = Semantics::Cascading)]
        semantics: Semantics,
        /// Write the transformed instance here.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Minimum label cut.
    Solve {
        file: PathBuf,
        #[arg(long, default_value_t = Variant::Global)]
        variant: Variant,
        #[arg(long, value_enum, default_value_t = Method::Exact)]
        method: Method,
        #[arg(long, default_value_t = Semantics::Cascading)]
        semantics: Semantics,
        /// Largest number of search units the exact solver enumerates over.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
        /// Only decide whether a cut of weight at most P exists (integer P).
        #[arg(long, value_name = "P")]
        at_most: Option<u64>,
    },
    /// Run the property suite on instance files (the built-in fixtures if none).
    Check {
        files: Vec<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
        /// Also run random sweeps of this many instances each.
        #[arg(long, default_value_t = 0)]
        sweeps: u64,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
    },
    /// Build the label-cut instance of a hitting-set file and compare optima.
    Reduce {
        file: PathBuf,
        /// Also decide both problems at threshold L.
        #[arg(long, value_name = "L")]
        at_most: Option<u64>,
        /// Write the constructed graph here.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Label degrees and label frequencies.
    Stats { file: PathBuf },
}

/// Input problems exit with 2, failed properties with 1.
enum Outcome {
    Ok,
    PropertyFailure,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::PropertyFailure) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn read_graph(path: &Path) -> Result<LabeledGraph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    io::parse(&text).with_context(|| format!("parsing {}", path.display()))
}

fn write_or_print(output: Option<&Path>, text: &str) -> Result<()> {
    match output {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn names(g: &LabeledGraph, labels: &[LabelId]) -> String {
    labels.iter().map(|&l| g.label_name(l)).collect::<Vec<_>>().join(" ")
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn run(command: Command) -> Result<Outcome> {
    match command {
        Command::Gen { n, m, labels, overlap, min_weight, max_weight, seed, no_terminals, output } => {
            let g = generate(&GeneratorConfig {
                n,
                m,
                labels,
                overlap,
                weights: (min_weight, max_weight),
                seed,
                terminals: !no_terminals,
            })?;
            write_or_print(output.as_deref(), &io::emit(&g))?;
            Ok(Outcome::Ok)
        }
        Command::Transform { file, rainbow: Some(edge), semantics, output } => {
            let g = read_graph(&file)?;
            let h = rainbow_path_transform(&g, edge)?;
            let cfg = SolveConfig::global(semantics);
            let before = exact_min_label_cut(&g, &cfg)?;
            let after = exact_min_label_cut(&h, &cfg)?;
            let (sb, sa) = (compute_stats(&g), compute_stats(&h));
            println!("rainbow_edge {edge}");
            println!("semantics {semantics}");
            println!("vertices {} -> {}", g.vertex_count(), h.vertex_count());
            println!("cut_weight_before {}", before.weight_string());
            println!("cut_weight_after {}", after.weight_string());
            println!("labels_after {}", names(&h, &after.labels));
            println!("min_label_degree_before {}", sb.min_label_degree);
            println!("min_label_degree_after {}", sa.min_label_degree);
            println!("label_degree_after {}", join(&sa.label_degree));
            println!("collapsed {}", after.total_weight < before.total_weight);
            if let Some(p) = output {
                write_or_print(Some(&p), &io::emit(&h))?;
            }
            Ok(Outcome::Ok)
        }
        Command::Transform { file, rainbow: None, output, .. } => {
            let g = read_graph(&file)?;
            let report = operation_k(&g);
            let verdict = verify_guarantees(&report, &g)?;
            println!("original_labels {}", report.original_label_count);
            println!("classes {}", report.classes.len());
            for (line, class) in report.provenance_lines().iter().zip(&report.classes) {
                println!("{line}");
                println!("class_names {} {}", class.new_id, names(&g, &class.members));
            }
            for c in &verdict.clauses {
                println!("guarantee {c}");
            }
            if let Some(p) = output {
                write_or_print(Some(&p), &io::emit(&report.transformed))?;
            }
            Ok(if verdict.all_pass() { Outcome::Ok } else { Outcome::PropertyFailure })
        }
        Command::Solve { file, variant, method, semantics, budget, at_most } => {
            let g = read_graph(&file)?;
            let cfg = SolveConfig { variant, semantics, budget };
            println!("variant {variant}");
            println!("semantics {semantics}");
            if let Some(p) = at_most {
                if !matches!(method, Method::Exact) {
                    bail!("--at-most needs --method exact");
                }
                println!("method exact");
                println!("cut_at_most {p} {}", decide_cut_at_most(&g, &cfg, p)?);
                return Ok(Outcome::Ok);
            }
            let (sol, heuristic): (CutSolution, bool) = match method {
                Method::Exact => (exact_min_label_cut(&g, &cfg)?, false),
                Method::Greedy => {
                    if variant != Variant::St {
                        bail!("the greedy heuristic solves the st variant only");
                    }
                    (greedy_st_label_cut(&g, &cfg)?, true)
                }
            };
            println!("method {}", if heuristic { "greedy" } else { "exact" });
            println!("heuristic {heuristic}");
            println!("cut_weight {}", sol.weight_string());
            println!("labels {}", names(&g, &sol.labels));
            println!("label_ids {}", join(&sol.labels));
            match &sol.witness {
                labelcut::solvers::Witness::Component(c) => println!("component {}", join(c)),
                labelcut::solvers::Witness::Terminals(s, t) => println!("separated {s} {t}"),
            }
            Ok(Outcome::Ok)
        }
        Command::Check { files, seed, samples, sweeps, budget } => {
            let cfg = CheckConfig {
                sample: SampleConfig { samples, seed, ..SampleConfig::default() },
                budget,
                ..CheckConfig::default()
            };
            let instances: Vec<(String, LabeledGraph)> = if files.is_empty() {
                labelcut::fixtures::all().into_iter().map(|(n, g)| (format!("builtin:{n}"), g)).collect()
            } else {
                files.iter().map(|f| Ok((f.display().to_string(), read_graph(f)?))).collect::<Result<_>>()?
            };
            let mut all: Vec<PropertyVerdict> = Vec::new();
            for (name, g) in &instances {
                println!("instance {name}");
                let verdicts = check_instance(g, &cfg);
                verdicts.iter().for_each(|v| println!("{v}"));
                all.extend(verdicts);
            }
            println!("global");
            let mut global = check_global();
            if sweeps > 0 {
                global.extend(run_sweeps(sweeps, seed));
            }
            global.iter().for_each(|v| println!("{v}"));
            all.extend(global);
            let count = |s: Status| all.iter().filter(|v| v.status == s).count();
            let failed = count(Status::Fail);
            println!("summary pass {} fail {failed} skip {}", count(Status::Pass), count(Status::Skip));
            Ok(if failed == 0 { Outcome::Ok } else { Outcome::PropertyFailure })
        }
        Command::Reduce { file, at_most, output } => {
            let text = fs::read_to_string(&file).with_context(|| format!("reading {}", file.display()))?;
            let h = io::parse_hitting_set(&text).with_context(|| format!("parsing {}", file.display()))?;
            let g = hitting_set_to_st_label_cut(&h)?;
            let (n, m) = construction_size(&h);
            println!("universe {}", h.universe);
            println!("subsets {}", h.subsets.len());
            println!("graph_vertices {n}");
            println!("graph_edges {m}");
            let (hs, cut) = reductions::optima(&h)?;
            println!("hitting_set_size {}", hs.len());
            println!("hitting_set {}", join(&hs));
            println!("cut_weight {}", cut.len());
            println!("labels {}", names(&g, &cut));
            println!("agree {}", hs.len() == cut.len());
            let mut agree = hs.len() == cut.len();
            if let Some(l) = at_most.or(h.budget) {
                match decision_pipeline(&h, l) {
                    Ok(r) => {
                        println!("hitting_at_most {l} {}", r.hitting_at_most);
                        println!("cut_at_most {l} {}", r.cut_at_most);
                        println!("min_edge_cut {}", r.min_edge_cut);
                    }
                    Err(reductions::ReductionError::Disagreement { budget, hitting, cut }) => {
                        println!("hitting_at_most {budget} {hitting}");
                        println!("cut_at_most {budget} {cut}");
                        agree = false;
                    }
                    Err(e) => return Err(e.into()),
                }
            }
            if let Some(p) = output {
                write_or_print(Some(&p), &io::emit(&g))?;
            }
            Ok(if agree { Outcome::Ok } else { Outcome::PropertyFailure })
        }
        Command::Stats { file } => {
            let g = read_graph(&file)?;
            let s = compute_stats(&g);
            println!("vertices {}", g.vertex_count());
            println!("edges {}", g.edge_count());
            println!("labels {}", g.label_count());
            println!("non_overlapping {}", g.is_non_overlapping());
            println!("label_classes {}", g.label_classes().len());
            println!("min_label_degree {}", s.min_label_degree);
            println!("max_label_degree {}", s.max_label_degree);
            println!("label_degree {}", join(&s.label_degree));
            println!("label_frequency {}", join(&s.label_frequency));
            println!("max_label_frequency {}", s.max_label_frequency);
            Ok(Outcome::Ok)
        }
    }
}
