//! `indsat`: induced-saturation tools on the command line.
//!
//! Exit status: 0 success or property holds, 1 negative verdict, 2 usage
//! or input error, 3 resource cap hit.

mod experiments;
mod input;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use indsat::classifier::{chipped_witnesses, class_a_witnesses, class_b_witnesses, classify};
use indsat::coloring::{dimension, Budget, DEFAULT_NODE_BUDGET, DEFAULT_PATH_BUDGET};
use indsat::constructions::{
    class_f_coloring, class_f_embedding, class_f_min_k, class_h_coloring, class_h_embedding, class_h_plan,
    family_examples, leg_color_lists, recognize_class_f, recognize_class_h, subdivision_coloring,
};
use indsat::decomposition::{all_decompositions, min_k};
use indsat::graph::to_graph6;
use indsat::hamming::{build_capped, DEFAULT_MAX_VERTICES};
use indsat::modular::{blowup, homogeneous_sets, is_prime, minimal_homogeneous_set};
use indsat::saturation::{search_saturating_family, verify_all, verify_family, verify_hamming};
use indsat::{Error, Graph, Result};

const SCHEMA: &str = "indsat/1";

#[derive(Parser)]
#[command(name = "indsat", version, about = "Induced saturation of graphs by Hamming graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Shorthand for `--format human`.
    #[arg(long, global = true, conflicts_with = "json")]
    human: bool,
    /// Shorthand for `--format json`.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads (0 = all cores).
    #[arg(long, default_value_t = 0, global = true)]
    jobs: usize,
    /// Induced paths enumerated per vertex pair.
    #[arg(long, default_value_t = DEFAULT_PATH_BUDGET, global = true, value_parser = positive)]
    budget_paths: u64,
    /// Backtracking nodes per coloring search.
    #[arg(long, default_value_t = DEFAULT_NODE_BUDGET, global = true, value_parser = positive)]
    budget_nodes: u64,
    /// Largest Hamming host built.
    #[arg(long, env = "INDSAT_BUDGET_VERTICES", default_value_t = DEFAULT_MAX_VERTICES as u64, global = true, value_parser = positive)]
    budget_vertices: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Human,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    ClassH,
    ClassF,
    Subdivision,
    Families,
}

#[derive(Subcommand)]
enum Command {
    /// Dimension of a graph with a nice coloring witness.
    Dim { graph: String },
    /// 2-Hamming decomposition and the least square host.
    Decompose {
        graph: String,
        /// List every decomposition.
        #[arg(long)]
        all: bool,
    },
    /// Whether some `K_k □ K_k` is saturated for a connected graph.
    Classify {
        graph: String,
        #[arg(long)]
        all_witnesses: bool,
    },
    /// Check that a host is saturated for the forbidden graphs.
    Verify {
        /// Host graph.
        #[arg(long, conflicts_with = "hamming", required_unless_present = "hamming")]
        host: Option<String>,
        /// Use the Hamming host `n,k` with the symmetry-reduced check.
        #[arg(long, value_parser = pair)]
        hamming: Option<(usize, usize)>,
        /// Report every failure (single forbidden graph).
        #[arg(long)]
        all_witnesses: bool,
        #[arg(required = true)]
        forbidden: Vec<String>,
    },
    /// Saturated graphs on `2..=max-n` vertices, one per isomorphism class.
    Search {
        #[arg(required = true)]
        forbidden: Vec<String>,
        #[arg(long, default_value_t = 6, value_parser = positive_usize)]
        max_n: usize,
        /// Search this graph6 corpus instead of generating graphs.
        #[arg(long)]
        corpus: Option<PathBuf>,
    },
    /// Explicit constructions with verified embeddings and colorings.
    Construct {
        #[arg(long, value_enum)]
        family: Family,
        graph: Option<String>,
        #[arg(long)]
        n: Option<usize>,
        /// Host side for class F embeddings (default: least feasible).
        #[arg(long)]
        k: Option<usize>,
        /// Degree-(n+1) vertex for subdivisions.
        #[arg(long)]
        vertex: Option<usize>,
        /// Cap on clique order when confirming the named families.
        #[arg(long, default_value_t = 8, value_parser = positive_usize)]
        max_k: usize,
    },
    /// Primality and homogeneous sets.
    Prime {
        graph: String,
        #[arg(long)]
        all_witnesses: bool,
    },
    /// The blowup `g1 ⋆ g2`.
    Blowup {
        #[arg(long)]
        g1: String,
        #[arg(long)]
        g2: String,
    },
    /// Run a canned experiment.
    Experiment {
        /// One of: p4-sweep, p4-c4-sweep, full-vertex, classify-replay,
        /// class-h-demo, class-f-demo, hamming-symmetry, square-oracle,
        /// prime-blowup.
        name: String,
        #[arg(long, value_parser = positive_usize)]
        max_n: Option<usize>,
        #[arg(long, value_parser = positive_usize)]
        max_k: Option<usize>,
        #[arg(long)]
        corpus: Option<PathBuf>,
    },
}

fn positive(s: &str) -> std::result::Result<u64, String> {
    match s.parse::<u64>() {
        Ok(v) if v > 0 => Ok(v),
        _ => Err(format!("expected a positive integer, got '{s}'")),
    }
}

fn positive_usize(s: &str) -> std::result::Result<usize, String> {
    positive(s).map(|v| v as usize)
}

fn pair(s: &str) -> std::result::Result<(usize, usize), String> {
    let (a, b) = s.split_once(',').ok_or("expected n,k")?;
    Ok((positive_usize(a.trim())?, positive_usize(b.trim())?))
}

/// A report and whether its verdict is positive.
type Outcome = (Value, bool);

fn run(cli: &Cli) -> Result<Outcome> {
    let budget = Budget {
        paths_per_pair: cli.budget_paths,
        search_nodes: cli.budget_nodes,
    };
    let max_vertices = usize::try_from(cli.budget_vertices).unwrap_or(usize::MAX);
    let g = input::graph_arg;
    match &cli.command {
        Command::Dim { graph } => {
            let h = g(graph)?;
            let (d, c) = dimension(&h, budget)?;
            Ok((
                json!({"graph": to_graph6(&h), "dimension": d, "coloring": c.map(|c| c.triples())}),
                true,
            ))
        }
        Command::Decompose { graph, all } => {
            let h = g(graph)?;
            let Some(best) = min_k(&h) else {
                return Ok((json!({"graph": to_graph6(&h), "two_hamming": false}), false));
            };
            let mut v = json!({
                "graph": to_graph6(&h),
                "two_hamming": true,
                "decomposition": best.decomposition,
                "min_k": best.k,
                "balanced": best.balanced,
            });
            if *all {
                let every = all_decompositions(&h, 1 << 16)
                    .ok_or_else(|| Error::Resource { what: "decompositions listed".into(), limit: 1 << 16 })?;
                v["all"] = json!(every);
            }
            Ok((v, true))
        }
        Command::Classify { graph, all_witnesses } => {
            let h = g(graph)?;
            let verdict = classify(&h)?;
            let good = verdict.is_good();
            let mut v = json!({"graph": to_graph6(&h), "good": good, "verdict": verdict});
            if *all_witnesses {
                v["chipped_witnesses"] = json!(chipped_witnesses(&h, true)?);
                v["class_a_witnesses"] = json!(class_a_witnesses(&h, true));
                v["class_b_witnesses"] = json!(class_b_witnesses(&h, true));
            }
            Ok((v, good))
        }
        Command::Verify { host, hamming, all_witnesses, forbidden } => {
            let hs: Vec<Graph> = forbidden.iter().map(|s| g(s)).collect::<Result<_>>()?;
            let forb: Vec<String> = hs.iter().map(to_graph6).collect();
            if let Some((n, k)) = hamming {
                let hg = build_capped(*n, *k, max_vertices)?;
                if hs.len() != 1 {
                    return Err(Error::Contract("the Hamming check takes one forbidden graph".into()));
                }
                let report = verify_hamming(&hg, &hs[0]);
                let holds = report.holds;
                return Ok((json!({"host": {"n": n, "k": k}, "forbidden": forb, "report": report}), holds));
            }
            let host = g(host.as_deref().expect("clap requires a host"))?;
            if *all_witnesses {
                if hs.len() != 1 {
                    return Err(Error::Contract("--all-witnesses takes one forbidden graph".into()));
                }
                let failures = verify_all(&host, &hs[0]);
                let holds = failures.is_empty();
                return Ok((
                    json!({"host": to_graph6(&host), "forbidden": forb, "holds": holds, "failures": failures}),
                    holds,
                ));
            }
            let report = verify_family(&host, &hs)?;
            let holds = report.holds;
            Ok((json!({"host": to_graph6(&host), "forbidden": forb, "report": report}), holds))
        }
        Command::Search { forbidden, max_n, corpus } => {
            let hs: Vec<Graph> = forbidden.iter().map(|s| g(s)).collect::<Result<_>>()?;
            let pool = corpus.as_deref().map(input::corpus).transpose()?;
            let found = search_saturating_family(
                &hs,
                *max_n,
                pool.as_deref(),
                indsat::graph::enumerate::HARD_MAX_ORDER,
            )?;
            Ok((
                json!({
                    "forbidden": hs.iter().map(to_graph6).collect::<Vec<_>>(),
                    "caps": {"max_n": max_n, "corpus": pool.as_ref().map(Vec::len)},
                    "found": found.len(),
                    "graphs": found.iter().map(to_graph6).collect::<Vec<_>>(),
                }),
                true,
            ))
        }
        Command::Construct { family, graph, n, k, vertex, max_k } => {
            construct(*family, graph.as_deref(), *n, *k, *vertex, *max_k, budget)
        }
        Command::Prime { graph, all_witnesses } => {
            let h = g(graph)?;
            let prime = is_prime(&h);
            let mut v = json!({
                "graph": to_graph6(&h),
                "prime": prime,
                "minimal_homogeneous_set": minimal_homogeneous_set(&h).map(|s| s.vertices),
            });
            if *all_witnesses {
                let sets: Vec<Vec<usize>> = homogeneous_sets(&h, false).into_iter().map(|s| s.vertices).collect();
                v["homogeneous_sets"] = json!(sets);
            }
            Ok((v, prime))
        }
        Command::Blowup { g1, g2 } => {
            let (a, b) = (g(g1)?, g(g2)?);
            let out = blowup(&a, &b)?;
            Ok((
                json!({"g1": to_graph6(&a), "g2": to_graph6(&b), "order": out.order(), "graph": to_graph6(&out)}),
                true,
            ))
        }
        Command::Experiment { name, max_n, max_k, corpus } => {
            let caps = experiments::Caps {
                max_n: *max_n,
                max_k: *max_k,
                corpus: corpus.as_deref().map(input::corpus).transpose()?,
                budget,
            };
            let (mut v, ok) = experiments::run(name, &caps)?;
            v["experiment"] = json!(name);
            v["passed"] = json!(ok);
            Ok((v, ok))
        }
    }
}

fn construct(
    family: Family,
    graph: Option<&str>,
    n: Option<usize>,
    k: Option<usize>,
    vertex: Option<usize>,
    max_k: usize,
    budget: Budget,
) -> Result<Outcome> {
    let need = |what: &str| Error::Contract(format!("this family needs {what}"));
    if family == Family::Families {
        let rows = family_examples(max_k)?;
        let ok = rows.iter().all(|r| r.found == r.expected && r.k.is_some());
        return Ok((json!({"family": "families", "examples": rows}), ok));
    }
    let h = input::graph_arg(graph.ok_or_else(|| need("a graph"))?)?;
    let n = n.ok_or_else(|| need("--n"))?;
    match family {
        Family::ClassH => {
            let Some(hw) = recognize_class_h(&h, n, budget)? else {
                return Ok((json!({"family": "class_h", "graph": to_graph6(&h), "member": false}), false));
            };
            let mut ok = true;
            let mut classes = Vec::new();
            for q in 2..=n {
                let plan = class_h_plan(&h, &hw, q)?;
                let emb = class_h_embedding(&h, &hw, &plan)?;
                let verified = emb.verify(&h)?;
                ok &= verified;
                classes.push(json!({"plan": plan, "embedding": emb, "verified": verified}));
            }
            let (plus, f, c) = class_h_coloring(&h, &hw, budget)?;
            let nice = indsat::coloring::verify_nice(&plus, &c, budget.paths_per_pair)?.is_ok();
            ok &= nice;
            Ok((
                json!({
                    "family": "class_h", "graph": to_graph6(&h), "member": true, "witness": hw,
                    "embeddings": classes, "added_edge": [f.a, f.b], "coloring": c.triples(),
                    "coloring_nice": nice,
                }),
                ok,
            ))
        }
        Family::ClassF => {
            let Some(w) = recognize_class_f(&h, n, budget)? else {
                return Ok((json!({"family": "class_f", "graph": to_graph6(&h), "member": false}), false));
            };
            let k = match k {
                Some(k) => k,
                None => class_f_min_k(&h, &w)?,
            };
            let mut ok = true;
            let mut classes = Vec::new();
            for q in 2..=n {
                let emb = class_f_embedding(&h, &w, q, k)?;
                let verified = emb.verify(&h)?;
                ok &= verified;
                classes.push(json!({"embedding": emb, "verified": verified}));
            }
            let (plus, f, c) = class_f_coloring(&h, &w, budget)?;
            let nice = indsat::coloring::verify_nice(&plus, &c, budget.paths_per_pair)?.is_ok();
            ok &= nice;
            Ok((
                json!({
                    "family": "class_f", "graph": to_graph6(&h), "member": true, "witness": w, "k": k,
                    "embeddings": classes, "added_edge": [f.a, f.b], "coloring": c.triples(),
                    "leg_colors": leg_color_lists(&w, &c), "coloring_nice": nice,
                }),
                ok,
            ))
        }
        Family::Subdivision => {
            let v = vertex.ok_or_else(|| need("--vertex"))?;
            let out = subdivision_coloring(&h, v, n)?;
            let f = out.witness.f_graph(&out.subdivided);
            let nice = indsat::coloring::verify_nice(&f, &out.coloring, budget.paths_per_pair)?.is_ok();
            Ok((
                json!({
                    "family": "subdivision", "graph": to_graph6(&h), "subdivided": to_graph6(&out.subdivided),
                    "witness": out.witness, "coloring": out.coloring.triples(), "coloring_nice": nice,
                }),
                nice,
            ))
        }
        Family::Families => unreachable!("handled above"),
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Dim { .. } => "dim",
        Command::Decompose { .. } => "decompose",
        Command::Classify { .. } => "classify",
        Command::Verify { .. } => "verify",
        Command::Search { .. } => "search",
        Command::Construct { .. } => "construct",
        Command::Prime { .. } => "prime",
        Command::Blowup { .. } => "blowup",
        Command::Experiment { .. } => "experiment",
    }
}

fn human(v: &Value) -> String {
    let Value::Object(map) = v else {
        return v.to_string();
    };
    map.iter()
        .map(|(k, x)| match x {
            Value::String(s) => format!("{k}: {s}"),
            other => format!("{k}: {other}"),
        })
        .collect::<Vec<_>>()
        .join("\n")
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.jobs > 0 {
        // a second initialization only happens in tests; ignore it
        let _ = rayon::ThreadPoolBuilder::new().num_threads(cli.jobs).build_global();
    }
    let format = if cli.human {
        Format::Human
    } else if cli.json {
        Format::Json
    } else {
        cli.format
    };
    match run(&cli) {
        Ok((report, positive)) => {
            let mut out = Map::new();
            out.insert("schema".into(), json!(SCHEMA));
            out.insert("command".into(), json!(command_name(&cli.command)));
            if let Value::Object(m) = report {
                out.extend(m);
            }
            let out = Value::Object(out);
            match format {
                Format::Json => println!("{out}"),
                Format::Human => println!("{}", human(&out)),
            }
            ExitCode::from(if positive { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("indsat: {e}");
            ExitCode::from(match e {
                Error::Resource { .. } => 3,
                Error::Parse { .. } | Error::Contract(_) => 2,
            })
        }
    }
}
