use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use mldsurf::germfile::GermSpec;
use mldsurf::script::Script;
use mldsurf::suite::{self, Suite, SuiteConfig, SuiteReport};
use mldsurf::tower::BlowupTower;
use mldsurf::{classify, fmt_q};

const OK: u8 = 0;
const INVALID: u8 = 1;
const INCONSISTENT: u8 = 2;

#[derive(Parser)]
#[command(name = "mldsurf", version, about = "Exact log discrepancies and mld-computing divisors of lc surface germs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Log discrepancies of the minimal-resolution curves, one row each.
    Discrepancies {
        /// A germ file, or a directory of `.germ` files.
        path: PathBuf,
    },
    /// The computing set of the mld and its clause-by-clause check.
    Classify {
        path: PathBuf,
        /// Blow-ups above the resolution searched for divisors.
        #[arg(long, default_value_t = 6)]
        depth: usize,
    },
    /// Run the seeded property suites.
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Random cases per property; the lemma suites default to 200 and
        /// the theorem suite to 50 per graph.
        #[arg(long)]
        cases: Option<usize>,
        #[arg(long, default_value_t = 4)]
        depth: usize,
    },
    /// The dual graph, optionally after a blow-up script.
    Graph {
        path: PathBuf,
        /// Emit Graphviz DOT instead of the plain listing.
        #[arg(long)]
        dot: bool,
        /// Script of blow-ups to apply first.
        #[arg(long = "blow-up", value_name = "SCRIPT")]
        blow_up: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Lemmas,
    Theorem14,
    All,
}

/// Output of one germ file, flushed in input order.
struct Outcome {
    stdout: String,
    stderr: String,
    code: u8,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            stderr: String::new(),
            code: OK,
        }
    }

    fn invalid(path: &Path, msg: impl std::fmt::Display) -> Self {
        Outcome {
            stdout: String::new(),
            stderr: format!("error: {}: {msg}\n", path.display()),
            code: INVALID,
        }
    }
}

fn germ_files(path: &Path) -> Result<Vec<PathBuf>, String> {
    if !path.is_dir() {
        return Ok(vec![path.to_path_buf()]);
    }
    let mut files: Vec<PathBuf> = fs::read_dir(path)
        .map_err(|e| format!("{}: {e}", path.display()))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "germ"))
        .collect();
    files.sort();
    Ok(files)
}

fn load(path: &Path) -> Result<GermSpec, Outcome> {
    let text = fs::read_to_string(path).map_err(|e| Outcome::invalid(path, e))?;
    GermSpec::parse(&text).map_err(|e| Outcome::invalid(path, e))
}

fn discrepancies(path: &Path) -> Outcome {
    let spec = match load(path) {
        Ok(s) => s,
        Err(o) => return o,
    };
    let d = spec.model.solve_discrepancies();
    let rows: String = d
        .ids
        .iter()
        .zip(&d.values)
        .map(|(id, a)| format!("{id} {}\n", fmt_q(a)))
        .collect();
    Outcome::ok(rows)
}

fn classify_file(path: &Path, depth: usize) -> Outcome {
    let spec = match load(path) {
        Ok(s) => s,
        Err(o) => return o,
    };
    match classify(&spec.model, depth) {
        Ok(r) => Outcome {
            code: if r.consistent() { OK } else { INCONSISTENT },
            stdout: r.to_text(),
            stderr: String::new(),
        },
        Err(e) => Outcome::invalid(path, e),
    }
}

fn graph(path: &Path, dot: bool, script: Option<&Path>) -> Outcome {
    let spec = match load(path) {
        Ok(s) => s,
        Err(o) => return o,
    };
    let g = match script {
        None => spec.model.graph().clone(),
        Some(sp) => {
            let text = match fs::read_to_string(sp) {
                Ok(t) => t,
                Err(e) => return Outcome::invalid(sp, e),
            };
            let applied = Script::parse(&text).and_then(|s| s.apply(&BlowupTower::new(&spec.model)));
            match applied {
                Ok(t) => t.dual_graph(),
                Err(e) => return Outcome::invalid(sp, e),
            }
        }
    };
    if dot {
        return Outcome::ok(g.to_dot());
    }
    let mut out = format!("class: {}\n", g.exceptional_part().0.classify().tag);
    for v in g.vertices() {
        if v.is_exceptional() {
            out.push_str(&format!("vertex {} weight={} genus={} nodes={}\n", v.id, v.weight, v.genus, v.nodes));
        } else {
            out.push_str(&format!("strict {}\n", v.id));
        }
    }
    for (i, j, m) in g.edges() {
        out.push_str(&format!("edge {} {} mult={m}\n", g.vertex(i).id, g.vertex(j).id));
    }
    Outcome::ok(out)
}

/// Runs `f` on every germ file under `path`, printing in input order.
fn batch(path: &Path, f: impl Fn(&Path) -> Outcome + Sync) -> u8 {
    let files = match germ_files(path) {
        Ok(f) => f,
        Err(e) => {
            eprintln!("error: {e}");
            return INVALID;
        }
    };
    let many = path.is_dir();
    let outcomes: Vec<Outcome> = files.par_iter().map(|p| f(p)).collect();
    let mut code = OK;
    for (p, o) in files.iter().zip(outcomes) {
        if many {
            println!("== {} ==", p.display());
        }
        print!("{}", o.stdout);
        eprint!("{}", o.stderr);
        code = code.max(o.code);
    }
    code
}

fn verify(suite_arg: SuiteArg, seed: u64, cases: Option<usize>, depth: usize) -> u8 {
    let cfg = |default: usize| SuiteConfig {
        seed,
        cases: cases.unwrap_or(default),
        depth,
    };
    let mut report = SuiteReport::default();
    if matches!(suite_arg, SuiteArg::Lemmas | SuiteArg::All) {
        report.results.extend(suite::run(Suite::Lemmas, cfg(200)).results);
    }
    if matches!(suite_arg, SuiteArg::Theorem14 | SuiteArg::All) {
        report.results.extend(suite::run(Suite::Theorem14, cfg(50)).results);
    }
    print!("{}", report.summary());
    for c in report.failures() {
        eprint!("{c}");
    }
    if report.passed() {
        OK
    } else {
        INCONSISTENT
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { INVALID } else { OK });
        }
    };
    let code = match cli.command {
        Command::Discrepancies { path } => batch(&path, discrepancies),
        Command::Classify { path, depth } => {
            if depth == 0 {
                eprintln!("error: --depth must be positive");
                INVALID
            } else {
                batch(&path, |p| classify_file(p, depth))
            }
        }
        Command::Verify {
            suite,
            seed,
            cases,
            depth,
        } => verify(suite, seed, cases, depth),
        Command::Graph { path, dot, blow_up } => batch(&path, |p| graph(p, dot, blow_up.as_deref())),
    };
    ExitCode::from(code)
}
