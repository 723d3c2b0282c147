use bflow::bench::{render_table, run_bench};
use bflow::dp::{self, ValidatedGraph};
use bflow::gen::{caterpillar, random_tree};
use bflow::graph::{line_graph_of_tree, parse_graph, Tree};
use bflow::oracle::{
    cross_check_flow_vs_coloring, exists_coloring_realizing, max_realized_colors, Budget,
};
use bflow::report::{Answer, CheckResult, InputDescriptor, Mode, PerK, SolveReport};
use bflow::selfcheck::{run_selfcheck, SelfcheckConfig};
use clap::{Args, Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::path::PathBuf;
use std::time::Instant;

/// Decide b-colorability and compute the b-chromatic number of claw-free
/// block graphs (line graphs of trees).
#[derive(Parser)]
#[command(name = "bflow", version, about)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Decide whether the graph has a b-coloring with exactly k colors.
    Decide(DecideArgs),
    /// Compute the b-chromatic number.
    Bnumber(BnumberArgs),
    /// Run the brute-force coloring search or the flow/coloring cross-check.
    Oracle(OracleArgs),
    /// Generate a tree edge-list document.
    Gen(GenArgs),
    /// Cross-validate every method on a corpus of small trees.
    Selfcheck(SelfcheckArgs),
    /// Time the solver on random trees of growing size.
    Bench(BenchArgs),
}

#[derive(Args)]
struct InputArgs {
    /// Tree edge list; the solver runs on its line graph.
    #[arg(
        long,
        value_name = "FILE",
        conflicts_with = "graph",
        required_unless_present = "graph"
    )]
    tree: Option<PathBuf>,
    /// Claw-free block graph edge list.
    #[arg(long, value_name = "FILE")]
    graph: Option<PathBuf>,
    /// Print a plain-text report instead of JSON.
    #[arg(long)]
    human: bool,
}

#[derive(Args)]
struct DecideArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Number of colors.
    #[arg(long)]
    k: usize,
    /// Root the block tree at this block id.
    #[arg(long)]
    root: Option<usize>,
    /// Dump the solver tables to stderr.
    #[arg(long)]
    trace: bool,
}

#[derive(Args)]
struct BnumberArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Also run the exhaustive coloring search per k and compare.
    #[arg(long)]
    with_oracle: bool,
}

#[derive(Args)]
struct OracleArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Number of colors.
    #[arg(long)]
    k: usize,
    /// Comma-separated vertex ids that must realize distinct colors.
    #[arg(long, value_delimiter = ',', num_args = 1..)]
    w: Option<Vec<usize>>,
    /// Sweep all candidate sets and compare flow against coloring search.
    #[arg(long, conflicts_with = "w")]
    crosscheck: bool,
    /// Largest candidate set size swept by --crosscheck.
    #[arg(long, default_value_t = 4)]
    size_cap: usize,
}

#[derive(Args)]
struct GenArgs {
    /// Uniformly random tree: EDGES SEED.
    #[arg(long, num_args = 2, value_names = ["EDGES", "SEED"], conflicts_with = "caterpillar")]
    tree_random: Option<Vec<u64>>,
    /// Caterpillar: SPINE_EDGES LEAVES SEED.
    #[arg(long, num_args = 3, value_names = ["SPINE", "LEAVES", "SEED"])]
    caterpillar: Option<Vec<u64>>,
}

#[derive(Args)]
struct SelfcheckArgs {
    /// Largest tree edge count in the corpus.
    #[arg(long, default_value_t = 7)]
    max_edges: usize,
    /// 0 sweeps all non-isomorphic trees; otherwise sample this many.
    #[arg(long, default_value_t = 0)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Worker threads across corpus trees.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    #[arg(long)]
    human: bool,
}

#[derive(Args)]
struct BenchArgs {
    /// Comma-separated tree edge counts.
    #[arg(long, value_delimiter = ',', num_args = 1.., default_value = "100,1000,10000")]
    sizes: Vec<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    human: bool,
}

/// Exit with 0 for "yes"/success, 1 for "no"/failed checks, 2 for errors.
fn main() {
    std::process::exit(run());
}

fn run() -> i32 {
    match Cli::parse().cmd {
        Cmd::Decide(args) => cmd_decide(args),
        Cmd::Bnumber(args) => cmd_bnumber(args),
        Cmd::Oracle(args) => cmd_oracle(args),
        Cmd::Gen(args) => cmd_gen(args),
        Cmd::Selfcheck(args) => cmd_selfcheck(args),
        Cmd::Bench(args) => cmd_bench(args),
    }
    .unwrap_or_else(|msg| {
        eprintln!("error: {msg}");
        2
    })
}

fn load_input(input: &InputArgs) -> Result<(ValidatedGraph, InputDescriptor), String> {
    let path = input
        .tree
        .as_ref()
        .or(input.graph.as_ref())
        .expect("clap enforces one input");
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let parsed = parse_graph(&text).map_err(|e| format!("{}: {e}", path.display()))?;
    let graph = if input.tree.is_some() {
        let tree = Tree::from_graph(parsed).map_err(|e| format!("{}: {e}", path.display()))?;
        line_graph_of_tree(&tree).map_err(|e| format!("{}: {e}", path.display()))?
    } else {
        parsed
    };
    let descriptor = InputDescriptor {
        file: path.display().to_string(),
        n: graph.n(),
        m: graph.edge_count(),
    };
    let vg = ValidatedGraph::new(graph).map_err(|e| format!("{}: {e}", path.display()))?;
    Ok((vg, descriptor))
}

fn emit(report: &SolveReport, human: bool) {
    if human {
        print!("{}", report.render_human());
    } else {
        println!("{}", report.to_json());
    }
}

fn cmd_decide(args: DecideArgs) -> Result<i32, String> {
    let (vg, input) = load_input(&args.input)?;
    let rbt = match args.root {
        Some(root) => vg.rooted(root).map_err(|e| e.to_string())?,
        None => vg.rooted_default(),
    };
    let yes = dp::decide_k_on(&vg, &rbt, args.k).map_err(|e| e.to_string())?;
    if args.trace && args.k > vg.profile().omega() {
        eprint!(
            "{}",
            dp::trace_tables(&vg, &rbt, args.k).map_err(|e| e.to_string())?
        );
    }
    let report = SolveReport {
        input,
        omega: vg.profile().omega(),
        m_degree: vg.profile().m_degree(),
        mode: Mode::Decide,
        k: Some(args.k),
        answer: Answer::Decision(yes),
        per_k: None,
        checks: vec![],
    };
    emit(&report, args.input.human);
    Ok(if yes { 0 } else { 1 })
}

fn cmd_bnumber(args: BnumberArgs) -> Result<i32, String> {
    let (vg, input) = load_input(&args.input)?;
    let profile = vg.profile();
    let (omega, m) = (profile.omega(), profile.m_degree());
    let budget = Budget::from_env();

    let mut per_k = Vec::new();
    let mut b_value = omega;
    for k in (omega..=m).rev() {
        let start = Instant::now();
        let yes = dp::decide_k(&vg, k).map_err(|e| e.to_string())?;
        per_k.push(PerK {
            k,
            decision: yes,
            milliseconds: start.elapsed().as_secs_f64() * 1e3,
        });
        if yes {
            b_value = k;
            break;
        }
    }

    let mut checks = Vec::new();
    let mut all_pass = true;
    if args.with_oracle {
        for k in omega..=m {
            let dp_says = dp::decide_k(&vg, k).map_err(|e| e.to_string())?;
            let realized =
                max_realized_colors(vg.graph(), k, &budget).map_err(|e| e.to_string())?;
            let agree = dp_says == (realized == k);
            all_pass &= agree;
            checks.push(CheckResult {
                name: format!("oracle-agreement-k{k}"),
                passed: agree,
                detail: (!agree)
                    .then(|| format!("solver says {dp_says}, search realizes {realized} of {k}")),
            });
        }
    }

    let report = SolveReport {
        input,
        omega,
        m_degree: m,
        mode: Mode::Bnumber,
        k: None,
        answer: Answer::Value(b_value),
        per_k: Some(per_k),
        checks,
    };
    emit(&report, args.input.human);
    Ok(if all_pass { 0 } else { 1 })
}

fn cmd_oracle(args: OracleArgs) -> Result<i32, String> {
    let (vg, input) = load_input(&args.input)?;
    let budget = Budget::from_env();
    let (omega, m) = (vg.profile().omega(), vg.profile().m_degree());

    let (mode, answer, checks, code) = if args.crosscheck {
        let rbt = vg.rooted_default();
        let report = cross_check_flow_vs_coloring(&vg, &rbt, args.k, args.size_cap, &budget)
            .map_err(|e| e.to_string())?;
        let passed = report.passed();
        let detail = report.mismatch.as_ref().map(|mm| {
            format!(
                "W = {:?}: flow {}, coloring {}",
                mm.w, mm.flow_feasible, mm.coloring_exists
            )
        });
        let checks = vec![CheckResult {
            name: format!("flow-vs-coloring ({} sets)", report.subsets_checked),
            passed,
            detail,
        }];
        (
            Mode::Crosscheck,
            Answer::Decision(passed),
            checks,
            if passed { 0 } else { 1 },
        )
    } else if let Some(w) = &args.w {
        for &v in w {
            if v >= vg.graph().n() {
                return Err(format!(
                    "vertex {v} out of range (graph has {})",
                    vg.graph().n()
                ));
            }
        }
        let yes =
            exists_coloring_realizing(vg.graph(), w, args.k, &budget).map_err(|e| e.to_string())?;
        (
            Mode::Oracle,
            Answer::Decision(yes),
            vec![],
            if yes { 0 } else { 1 },
        )
    } else {
        let realized =
            max_realized_colors(vg.graph(), args.k, &budget).map_err(|e| e.to_string())?;
        (Mode::Oracle, Answer::Value(realized), vec![], 0)
    };

    let report = SolveReport {
        input,
        omega,
        m_degree: m,
        mode,
        k: Some(args.k),
        answer,
        per_k: None,
        checks,
    };
    emit(&report, args.input.human);
    Ok(code)
}

fn cmd_gen(args: GenArgs) -> Result<i32, String> {
    let tree = if let Some(params) = &args.tree_random {
        let (edges, seed) = (params[0] as usize, params[1]);
        if edges < 1 {
            return Err("--tree-random needs at least 1 edge".into());
        }
        random_tree(edges, &mut ChaCha8Rng::seed_from_u64(seed))
    } else if let Some(params) = &args.caterpillar {
        let (spine, leaves, seed) = (params[0] as usize, params[1] as usize, params[2]);
        if spine < 1 {
            return Err("--caterpillar needs at least 1 spine edge".into());
        }
        caterpillar(spine, leaves, &mut ChaCha8Rng::seed_from_u64(seed))
    } else {
        return Err("pass --tree-random or --caterpillar".into());
    };
    print!("{}", tree.as_graph().to_edge_list());
    Ok(0)
}

#[derive(serde::Serialize)]
#[serde(rename_all = "camelCase")]
struct SelfcheckReport<'a> {
    trees_checked: usize,
    passed: bool,
    failures: &'a [bflow::selfcheck::Failure],
}

fn cmd_selfcheck(args: SelfcheckArgs) -> Result<i32, String> {
    let cfg = SelfcheckConfig {
        max_edges: args.max_edges,
        samples: args.samples,
        seed: args.seed,
        jobs: args.jobs,
        budget: Budget::from_env(),
    };
    let outcome = run_selfcheck(&cfg);
    if args.human {
        println!(
            "{} trees checked, {} failures",
            outcome.trees_checked,
            outcome.failures.len()
        );
        for f in &outcome.failures {
            println!("FAIL {} (k = {:?}): {}", f.check, f.k, f.detail);
            println!("  tree:\n{}", indent(&f.tree));
        }
    } else {
        let report = SelfcheckReport {
            trees_checked: outcome.trees_checked,
            passed: outcome.passed(),
            failures: &outcome.failures,
        };
        println!(
            "{}",
            serde_json::to_string_pretty(&report).expect("serializable")
        );
    }
    Ok(if outcome.passed() { 0 } else { 1 })
}

fn indent(text: &str) -> String {
    text.lines().map(|l| format!("    {l}\n")).collect()
}

fn cmd_bench(args: BenchArgs) -> Result<i32, String> {
    let rows = run_bench(&args.sizes, args.seed);
    if args.human {
        print!("{}", render_table(&rows));
    } else {
        println!(
            "{}",
            serde_json::to_string_pretty(&rows).expect("serializable")
        );
    }
    Ok(0)
}
