use std::io::{self, BufRead, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use dyck321::lab::{
    self, orbit, MapKind, PrecedingConvention, SuiteConfig, VerificationReport,
    DEFAULT_FAILURE_LIMIT,
};
use dyck321::perm::Perm321;
use dyck321::*;

#[derive(Parser)]
#[command(name = "dyck321", version, about = "Dyck paths, 321-avoiding permutations and path pairs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List every Dyck path of the given size in lexicographic order (U < D).
    Enumerate {
        #[arg(long)]
        size: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Apply a map to a path or permutation. Reads one input per line from
    /// stdin when neither --path nor --perm is given.
    Map {
        #[arg(long)]
        op: Op,
        #[arg(long, allow_hyphen_values = true, conflicts_with = "perm")]
        path: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        perm: Option<String>,
    },
    /// Print the ascent-descent code, the uu/dd labels and the codes read
    /// off the images under B and K.
    Codes {
        #[arg(long)]
        path: String,
    },
    /// Print the path pair of a Dyck path, its minimal diagonals and its cells.
    Pairs {
        #[arg(long)]
        path: String,
    },
    /// Print the orbit of a path, one element per line, starting with the path.
    Orbit {
        #[arg(long)]
        path: String,
        #[arg(long, default_value = "LprimeL")]
        op: MapKind,
    },
    /// Run a verification suite and print its JSON report.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        /// Largest size checked; each suite has its own default.
        #[arg(long)]
        max_size: Option<usize>,
        /// Worker threads (default: all available cores).
        #[arg(long)]
        workers: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_FAILURE_LIMIT)]
        failure_limit: usize,
        /// Which step counts as preceding another in the proposition suite.
        #[arg(long, value_enum, default_value_t = Convention::Clockwise)]
        convention: Convention,
    },
    /// Draw a path.
    Render {
        #[arg(long)]
        path: String,
        #[arg(long, value_enum, default_value_t = Style::Letters)]
        style: Style,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Style {
    Letters,
    Ascii,
}

#[derive(Clone, Copy, ValueEnum)]
enum Convention {
    Clockwise,
    Forward,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Identities,
    Theorem,
    Corollary,
    Pairs,
    Diagonals,
    Proposition,
    Bijectivity,
    Oracles,
    Transform,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
#[value(rename_all = "verbatim")]
enum Op {
    B,
    K,
    M,
    Binv,
    Kinv,
    Minv,
    L,
    Lprime,
    LprimeL,
    LLprime,
    R,
}

impl Op {
    fn takes_permutation(self) -> bool {
        matches!(self, Op::Binv | Op::Kinv | Op::Minv)
    }

    fn apply(self, input: &str) -> Result<String, String> {
        if self.takes_permutation() {
            let perm: Perm321 = input.parse().map_err(|e: PermError| e.to_string())?;
            let path = match self {
                Op::Binv => bijection_b_inv(&perm),
                Op::Kinv => bijection_k_inv(&perm),
                _ => bijection_m_inv(&perm),
            };
            return Ok(path.to_string());
        }
        let path = parse_dyck(input).map_err(|e| e.to_string())?;
        Ok(match self {
            Op::B => bijection_b(&path).to_string(),
            Op::K => bijection_k(&path).to_string(),
            Op::M => bijection_m(&path).to_string(),
            Op::L => lk(&path).to_string(),
            Op::Lprime => lk_prime(&path).to_string(),
            Op::LprimeL => lk_prime_lk(&path).to_string(),
            Op::LLprime => lk_lk_prime(&path).to_string(),
            _ => path.reverse().to_string(),
        })
    }
}

enum Failure {
    Input(String),
    Verification,
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Input(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Verification) => ExitCode::from(2),
    }
}

fn run(command: Command) -> Result<(), Failure> {
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    match command {
        Command::Enumerate { size, format } => {
            if size > MAX_ENUM_SIZE {
                return Err(DyckError::CapExceeded { size, cap: MAX_ENUM_SIZE }.into());
            }
            for p in DyckIter::new(size) {
                match format {
                    Format::Text => writeln!(out, "{p}")?,
                    Format::Json => writeln!(out, "{}", serde_json::to_string(&p.to_string())?)?,
                }
            }
        }
        Command::Map { op, path, perm } => {
            let given = match (path, perm) {
                (Some(_), _) if op.takes_permutation() => {
                    return Err(Failure::Input(format!("{} expects --perm", op_name(op))))
                }
                (_, Some(_)) if !op.takes_permutation() => {
                    return Err(Failure::Input(format!("{} expects --path", op_name(op))))
                }
                (p, q) => p.or(q),
            };
            match given {
                Some(input) => writeln!(out, "{}", op.apply(&input).map_err(Failure::Input)?)?,
                None => {
                    for (i, line) in io::stdin().lock().lines().enumerate() {
                        let line = line?;
                        let image = op
                            .apply(line.trim())
                            .map_err(|e| Failure::Input(format!("line {}: {e}", i + 1)))?;
                        writeln!(out, "{image}")?;
                    }
                }
            }
        }
        Command::Codes { path } => {
            let p = parse_dyck(&path)?;
            let code = code_of(&p)?;
            let labels = lk_labels(&p)?;
            let b = bijection_b(&p);
            let k = bijection_k(&p);
            writeln!(out, "ascent-descent: {code}")?;
            writeln!(out, "lk-labels: {labels}")?;
            writeln!(out, "excedance of B = {b}: {}", b.excedance_code())?;
            writeln!(out, "lrmax of K = {k}: {}", k.lrmax_code())?;
        }
        Command::Pairs { path } => {
            let q = phi(&parse_dyck(&path)?);
            writeln!(out, "{q}")?;
            if !q.is_degenerate() {
                let diagonals = q.minimal_diagonals()?;
                writeln!(out, "minimal diagonals: {}", diagonals.len())?;
                for d in diagonals {
                    writeln!(out, "  {d} (length {})", d.length())?;
                }
            }
            writeln!(out, "{}", q.render())?;
        }
        Command::Orbit { path, op } => {
            let p = parse_dyck(&path)?;
            for e in orbit(&p, op).elements {
                writeln!(out, "{e}")?;
            }
        }
        Command::Render { path, style } => {
            let p = parse_dyck(&path)?;
            let style = match style {
                Style::Letters => RenderStyle::Letters,
                Style::Ascii => RenderStyle::AsciiArt,
            };
            writeln!(out, "{}", render_dyck(&p, style))?;
        }
        Command::Verify {
            suite,
            max_size,
            workers,
            failure_limit,
            convention,
        } => {
            if let Some(n) = max_size.filter(|&n| n > MAX_ENUM_SIZE) {
                return Err(DyckError::CapExceeded { size: n, cap: MAX_ENUM_SIZE }.into());
            }
            let cfg = SuiteConfig { failure_limit, workers };
            let convention = match convention {
                Convention::Clockwise => PrecedingConvention::Clockwise,
                Convention::Forward => PrecedingConvention::Forward,
            };
            let reports: Vec<VerificationReport> = if suite == Suite::All {
                ALL_SUITES
                    .iter()
                    .map(|&s| run_suite(s, max_size, &cfg, convention))
                    .collect()
            } else {
                vec![run_suite(suite, max_size, &cfg, convention)]
            };
            let passed = reports.iter().all(VerificationReport::passed);
            if let [single] = reports.as_slice() {
                writeln!(out, "{}", single.to_json())?;
            } else {
                writeln!(out, "{}", serde_json::to_string_pretty(&reports)?)?;
            }
            if !passed {
                out.flush()?;
                return Err(Failure::Verification);
            }
        }
    }
    out.flush()?;
    Ok(())
}

fn op_name(op: Op) -> String {
    op.to_possible_value().unwrap().get_name().to_string()
}

const ALL_SUITES: [Suite; 9] = [
    Suite::Identities,
    Suite::Theorem,
    Suite::Corollary,
    Suite::Pairs,
    Suite::Diagonals,
    Suite::Proposition,
    Suite::Bijectivity,
    Suite::Oracles,
    Suite::Transform,
];

fn run_suite(
    suite: Suite,
    max_size: Option<usize>,
    cfg: &SuiteConfig,
    convention: PrecedingConvention,
) -> VerificationReport {
    let n = |default: usize| max_size.unwrap_or(default);
    match suite {
        Suite::Identities => lab::verify_identities(n(lab::DEFAULT_IDENTITY_MAX), cfg),
        Suite::Theorem => lab::verify_theorem(n(lab::DEFAULT_IDENTITY_MAX), cfg),
        Suite::Corollary => {
            let max = n(10);
            lab::verify_corollary(0..=max, 4..=max.max(3), cfg)
        }
        Suite::Pairs => lab::verify_path_pairs(n(10), n(10), cfg),
        Suite::Diagonals => lab::verify_diagonal_count(n(lab::DEFAULT_GEOMETRY_MAX), cfg),
        Suite::Proposition => lab::verify_proposition_with(n(6), cfg, convention),
        Suite::Bijectivity => lab::verify_bijectivity(n(9), cfg),
        Suite::Oracles => lab::verify_oracles(n(10), n(8), cfg),
        Suite::Transform => lab::verify_code_transform(n(10), cfg),
        Suite::All => unreachable!("expanded by the caller"),
    }
}
