//! `coxauto`: command-line front end.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 result indeterminate at
//! the join cap or element budget, 3 internal invariant violation.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;

use coxauto::automata::{build_canonical_automaton, build_shadow_automaton, minimize, Automaton};
use coxauto::conjectures::{check_conjecture, compute_smallest_shadow, stats_csv, stats_row, Caps, Conjecture, ReportVerdict, ShadowStrategy};
use coxauto::garside::{low_elements, verify_shadow, Shadow, Verdict};
use coxauto::par::Exec;
use coxauto::render::render_rank3_svg;
use coxauto::smallroots::build_small_roots;
use coxauto::{parse_coxeter_system, CoxeterSystem, Error};

/// The groups of the statistics table.
const TABLE_GROUPS: [&str; 6] = ["~A2", "~C2", "~G2", "~A3", "~C3", "~B3"];

#[derive(Parser, Debug)]
#[command(name = "coxauto", version, about = "Automata for reduced words in Coxeter groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Group: a preset name (`~C2`, `affine:C2`, `I2(inf)`, `triangle(3,2,6)`),
    /// `type <preset>`, or a path to a file holding a group description.
    #[arg(long, short, global = true)]
    group: Option<String>,

    /// Level n of small roots / low elements.
    #[arg(long, short, global = true, default_value_t = 0)]
    n: usize,

    /// Join search cap (default: twice the longest element plus 8).
    #[arg(long, global = true, env = "COXAUTO_JOIN_CAP")]
    join_cap: Option<usize>,

    /// Maximum number of elements in a closure.
    #[arg(long, global = true, default_value_t = 100_000)]
    budget: usize,

    /// How the smallest shadow is computed.
    #[arg(long, global = true, value_enum, default_value_t = StrategyArg::Auto)]
    strategy: StrategyArg,

    /// Run everything on one thread.
    #[arg(long, global = true)]
    sequential: bool,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum StrategyArg {
    Auto,
    Cone,
    Ambient,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Dump the table of n-small roots.
    Roots,
    /// Compute the smallest Garside shadow, or verify a given element list.
    Shadow {
        /// Comma-separated words to verify instead of computing the closure.
        #[arg(long, value_delimiter = ',')]
        elements: Option<Vec<String>>,
    },
    /// List the n-low elements.
    Low,
    /// Build an automaton.
    Automaton {
        #[arg(long, default_value = "canonical")]
        kind: String,
        #[arg(long)]
        minimize: bool,
        /// Write Graphviz output here.
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Print state and transition counts.
        #[arg(long)]
        stats: bool,
    },
    /// Count accepted words by length.
    Count {
        #[arg(long, default_value = "canonical")]
        kind: String,
        #[arg(long)]
        max_len: usize,
        /// Add a column counted by brute force over reduced words.
        #[arg(long)]
        oracle: bool,
    },
    /// Check a conjecture on the group; prints a JSON report.
    Check {
        /// One of 1, 2, dyho1, dyho2.
        #[arg(long)]
        conjecture: String,
    },
    /// Statistics table (CSV) for a list of groups.
    Table {
        /// Groups; defaults to the six affine groups of the table.
        groups: Vec<String>,
    },
    /// Rank-three SVG picture of the n-small roots.
    Render {
        #[arg(long)]
        svg: PathBuf,
    },
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 1,
            message: message.into(),
        }
    }

    fn indeterminate(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::BudgetExceeded(_) => 2,
            Error::ShadowViolation(_) | Error::Internal(_) | Error::NotReduced(_) => 3,
            _ => 1,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

type CliResult = Result<(), Failure>;

fn load_group(spec: &str) -> Result<CoxeterSystem, Failure> {
    let path = std::path::Path::new(spec);
    let text = if path.is_file() {
        fs::read_to_string(path).map_err(|e| Failure::usage(format!("cannot read {spec}: {e}")))?
    } else {
        spec.to_string()
    };
    Ok(parse_coxeter_system(&text)?)
}

fn write_file(path: &PathBuf, text: &str) -> CliResult {
    fs::write(path, text).map_err(|e| Failure::usage(format!("cannot write {}: {e}", path.display())))
}

fn build_automaton(sys: &CoxeterSystem, kind: &str, cli: &Cli, caps: &Caps) -> Result<Automaton, Failure> {
    match kind {
        "canonical" => {
            let table = build_small_roots(sys, cli.n)?;
            Ok(build_canonical_automaton(sys, &table))
        }
        "minimal" => {
            let table = build_small_roots(sys, cli.n)?;
            Ok(minimize(&build_canonical_automaton(sys, &table), caps.exec))
        }
        "shadow:smallest" => {
            let closure = compute_smallest_shadow(sys, caps)?;
            if !closure.cap_stable {
                return Err(Failure::indeterminate(format!(
                    "smallest shadow not stable at join cap {}",
                    closure.cap.unwrap_or(0)
                )));
            }
            Ok(build_shadow_automaton(sys, &closure.shadow, caps.exec)?)
        }
        "shadow:low" => {
            let table = build_small_roots(sys, cli.n)?;
            let low = low_elements(sys, &table, caps.exec);
            Ok(build_shadow_automaton(sys, &low, caps.exec)?)
        }
        other => Err(Failure::usage(format!(
            "unknown automaton kind `{other}` (canonical, minimal, shadow:smallest, shadow:low)"
        ))),
    }
}

/// Number of reduced words of each length, counted over the group itself:
/// a reduced word of `w` ends in a right descent `s`, preceded by a reduced
/// word of `ws`.
fn oracle_counts(sys: &CoxeterSystem, max_len: usize) -> Vec<BigUint> {
    let levels = sys.ball(max_len);
    let mut prev: std::collections::HashMap<coxauto::Element, BigUint> = std::collections::HashMap::new();
    let mut out = Vec::with_capacity(max_len + 1);
    for (k, level) in levels.iter().enumerate() {
        let mut cur = std::collections::HashMap::new();
        let mut total = BigUint::from(0u32);
        for w in level {
            let c = if k == 0 {
                BigUint::from(1u32)
            } else {
                (0..sys.rank() as u8)
                    .filter(|&s| sys.is_right_descent(w, s))
                    .map(|s| prev[&sys.mult_right(w, s)].clone())
                    .sum()
            };
            total += &c;
            cur.insert(w.clone(), c);
        }
        out.push(total);
        prev = cur;
    }
    out.resize(max_len + 1, BigUint::from(0u32));
    out
}

fn run(cli: &Cli, out: &mut impl Write) -> CliResult {
    let exec = if cli.sequential { Exec::Sequential } else { Exec::Parallel };
    let caps = Caps {
        join_cap: cli.join_cap,
        budget: cli.budget,
        strategy: match cli.strategy {
            StrategyArg::Auto => ShadowStrategy::Auto,
            StrategyArg::Cone => ShadowStrategy::ConeSearch,
            StrategyArg::Ambient => ShadowStrategy::AmbientLow,
        },
        exec,
    };
    if cli.join_cap == Some(0) || cli.budget == 0 {
        return Err(Failure::usage("caps and budgets must be positive"));
    }
    let group = || -> Result<CoxeterSystem, Failure> {
        let spec = cli.group.as_deref().ok_or_else(|| Failure::usage("--group is required"))?;
        load_group(spec)
    };
    let w = |out: &mut dyn Write, text: &str| -> CliResult {
        out.write_all(text.as_bytes())
            .map_err(|e| Failure::usage(format!("write failed: {e}")))
    };
    match &cli.command {
        Command::Roots => {
            let sys = group()?;
            let table = build_small_roots(&sys, cli.n)?;
            w(out, &table.dump(&sys))
        }
        Command::Shadow { elements } => {
            let sys = group()?;
            match elements {
                None => {
                    let closure = compute_smallest_shadow(&sys, &caps)?;
                    let mut text = closure.shadow.format(&sys).join("\n");
                    text.push('\n');
                    w(out, &text)?;
                    w(out, &format!("# {} elements, cap_stable={}\n", closure.shadow.len(), closure.cap_stable))?;
                    if !closure.cap_stable {
                        return Err(Failure::indeterminate(format!(
                            "closure not stable at join cap {}",
                            closure.cap.unwrap_or(0)
                        )));
                    }
                    Ok(())
                }
                Some(words) => {
                    let parsed = words
                        .iter()
                        .map(|t| sys.parse_word(t))
                        .collect::<Result<Vec<_>, _>>()?;
                    let b = Shadow::from_words(&sys, &parsed);
                    match verify_shadow(&sys, &b, cli.join_cap, exec) {
                        Verdict::Shadow => w(out, "shadow\n"),
                        Verdict::NotShadow(reason) => w(out, &format!("not a shadow: {reason}\n")),
                        Verdict::IndeterminateAtCap(cap) => {
                            w(out, "indeterminate\n")?;
                            Err(Failure::indeterminate(format!("join search reached cap {cap}")))
                        }
                    }
                }
            }
        }
        Command::Low => {
            let sys = group()?;
            let table = build_small_roots(&sys, cli.n)?;
            let low = low_elements(&sys, &table, exec);
            let mut text = low.format(&sys).join("\n");
            text.push('\n');
            w(out, &text)
        }
        Command::Automaton {
            kind,
            minimize: min,
            dot,
            stats,
        } => {
            let sys = group()?;
            let mut a = build_automaton(&sys, kind, cli, &caps)?;
            if *min {
                a = minimize(&a, exec);
            }
            if let Some(path) = dot {
                write_file(path, &a.to_dot(&sys, sys.name()))?;
            }
            if *stats || dot.is_none() {
                w(out, &format!("states: {}\ntransitions: {}\n", a.len(), a.transition_count()))?;
            }
            Ok(())
        }
        Command::Count { kind, max_len, oracle } => {
            let sys = group()?;
            let a = build_automaton(&sys, kind, cli, &caps)?;
            let counts = a.count_by_length(*max_len);
            let truth = oracle.then(|| oracle_counts(&sys, *max_len));
            let mut text = String::from(if *oracle { "length,count,oracle\n" } else { "length,count\n" });
            let mut mismatch = None;
            for (k, c) in counts.iter().enumerate() {
                match &truth {
                    Some(t) => {
                        text.push_str(&format!("{k},{c},{}\n", t[k]));
                        if &t[k] != c && mismatch.is_none() {
                            mismatch = Some(k);
                        }
                    }
                    None => text.push_str(&format!("{k},{c}\n")),
                }
            }
            w(out, &text)?;
            match mismatch {
                Some(k) => Err(Failure {
                    code: 3,
                    message: format!("automaton count differs from reduced-word count at length {k}"),
                }),
                None => Ok(()),
            }
        }
        Command::Check { conjecture } => {
            let sys = group()?;
            let which = match conjecture.as_str() {
                "1" | "conj1" => Conjecture::One,
                "2" | "conj2" => Conjecture::Two,
                "dyho1" => Conjecture::DyHo1(cli.n),
                "dyho2" => Conjecture::DyHo2(cli.n),
                other => return Err(Failure::usage(format!("unknown conjecture `{other}` (1, 2, dyho1, dyho2)"))),
            };
            let report = check_conjecture(&sys, which, &caps)?;
            w(out, &report.to_json())?;
            w(out, "\n")?;
            if let ReportVerdict::Indeterminate { reason } = &report.verdict {
                return Err(Failure::indeterminate(reason.clone()));
            }
            Ok(())
        }
        Command::Table { groups } => {
            let names: Vec<String> = if groups.is_empty() {
                TABLE_GROUPS.iter().map(|s| s.to_string()).collect()
            } else {
                groups.clone()
            };
            let systems = names.iter().map(|g| load_group(g)).collect::<Result<Vec<_>, _>>()?;
            let inner = Caps {
                exec: Exec::Sequential,
                ..caps
            };
            let rows = exec.map(&systems, |sys| stats_row(sys, &inner));
            let rows = rows.into_iter().collect::<Result<Vec<_>, _>>()?;
            w(out, &stats_csv(&rows))?;
            if rows.iter().any(|r| r.a_tilde.is_none() || !r.cap_stable) {
                return Err(Failure::indeterminate("some rows are indeterminate at the cap or budget"));
            }
            Ok(())
        }
        Command::Render { svg } => {
            let sys = group()?;
            let text = render_rank3_svg(&sys, cli.n)?;
            write_file(svg, &text)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    std::panic::set_hook(Box::new(|info| {
        eprintln!("internal error: {info}");
    }));
    let result = std::panic::catch_unwind(|| {
        let stdout = std::io::stdout();
        let mut lock = stdout.lock();
        run(&cli, &mut lock)
    });
    match result {
        Ok(Ok(())) => ExitCode::SUCCESS,
        Ok(Err(f)) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
        Err(_) => ExitCode::from(3),
    }
}
