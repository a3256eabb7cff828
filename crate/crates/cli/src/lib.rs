//! The `pfkit` command line: Pfaffians and coefficient sequences of matrix files,
//! seeded identity campaigns and dumps of the brute-force enumerations.

pub mod campaign;
pub mod gen;

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use pfkit::combinat::{
    alt_clow_seqs, alt_clow_seqs_headed, enumerate_matchings, enumerate_pclow_seqs,
    pair_product_oracle, pf_definition_bounded, Sign, MATCHING_BOUND,
};
use pfkit::{generic_skew, pair_coeffs, parse_matrix, pfaffian_coeffs, Report, Ring, SkewMatrix};

use campaign::{Campaign, Identity};
use gen::Source;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Input { path: String, source: pfkit::Error },
    #[error(transparent)]
    Pfkit(#[from] pfkit::Error),
    #[error(transparent)]
    Io(#[from] io::Error),
}

/// How a successful run ended.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Violation,
}

impl Outcome {
    pub fn code(self) -> i32 {
        match self {
            Outcome::Pass => 0,
            Outcome::Violation => 1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Jsonl,
}

#[derive(Debug, Parser)]
#[command(
    name = "pfkit",
    version,
    about = "Exact Pfaffians and Pfaffian identity checks"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format; `verify` and `oracle-dump` default to jsonl, the rest to human.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Largest dimension the brute-force oracles accept.
    #[arg(long, global = true, env = "PFKIT_ORACLE_BOUND", default_value_t = MATCHING_BOUND)]
    pub oracle_bound: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the Pfaffian of a skew matrix.
    Pf(MatrixArgs),
    /// Print the Pfaffian characteristic coefficients and polynomial.
    Charpoly(MatrixArgs),
    /// Print the P-coefficients of a pair of skew matrices.
    Pairs(PairArgs),
    /// Run a seeded campaign of identity checks.
    Verify(VerifyArgs),
    /// List matchings or clow sequences.
    OracleDump(DumpArgs),
}

#[derive(Debug, Args)]
pub struct MatrixArgs {
    /// Matrix file, text or JSON; `-` reads stdin.
    #[arg(required_unless_present = "symbolic")]
    pub input: Option<PathBuf>,
    /// Ring of the entries; detected from the file when absent.
    #[arg(long)]
    pub ring: Option<Ring>,
    /// Cross-check against the matching-sum oracle.
    #[arg(long)]
    pub check: bool,
    /// Use the generic matrix with entries a12, a13, … instead of a file.
    #[arg(long, conflicts_with = "input", requires = "dim")]
    pub symbolic: bool,
    #[arg(long)]
    pub dim: Option<usize>,
}

#[derive(Debug, Args)]
pub struct PairArgs {
    pub a: PathBuf,
    pub b: PathBuf,
    #[arg(long)]
    pub ring: Option<Ring>,
    /// Compare q_0 with pf(A)·pf(B) from the matching-sum oracle.
    #[arg(long)]
    pub check: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// One of pb, clow, pce, pad, mp, cayley, pch, padj, cij, transpose,
    /// scaling, chain, embed, pairs, pairs-coincide, or all.
    pub identity: String,
    #[arg(long, default_value_t = 4)]
    pub dim: usize,
    #[arg(long, default_value_t = 10)]
    pub trials: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Integer entries are drawn from [-bound, bound].
    #[arg(long, default_value_t = 5)]
    pub bound: u64,
    #[arg(long, default_value = "int")]
    pub ring: Ring,
    /// Check once on generic matrices over the polynomial ring.
    #[arg(long)]
    pub symbolic: bool,
    /// Use this matrix as the skew input of every check.
    #[arg(long)]
    pub input: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DumpKind {
    Matchings,
    Pclow,
    Altclow,
}

#[derive(Debug, Args)]
pub struct DumpArgs {
    pub kind: DumpKind,
    /// Matrix dimension (number of vertices).
    #[arg(long)]
    pub dim: usize,
    /// Number of edges; defaults to the dimension.
    #[arg(long)]
    pub len: Option<usize>,
    /// Smallest allowed head: 1 or 3 for pclow, any for altclow.
    #[arg(long, default_value_t = 1)]
    pub from: usize,
    /// Altclow only: require the first head to equal --from.
    #[arg(long)]
    pub headed: bool,
}

fn read_source(path: &Path) -> Result<String, CliError> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
    }
}

/// Reads and validates a skew matrix file.
pub fn load_skew(path: &Path, ring: Option<Ring>) -> Result<SkewMatrix, CliError> {
    let src = read_source(path)?;
    let wrap = |source| CliError::Input {
        path: path.display().to_string(),
        source,
    };
    let m = parse_matrix(&src, ring).map_err(wrap)?;
    SkewMatrix::new(m).map_err(wrap)
}

fn matrix_arg(args: &MatrixArgs) -> Result<SkewMatrix, CliError> {
    match (&args.input, args.symbolic) {
        (_, true) => {
            if args.ring.is_some_and(|r| r != Ring::Poly) {
                return Err(CliError::Usage(
                    "--symbolic works over the poly ring".into(),
                ));
            }
            Ok(generic_skew(args.dim.unwrap_or(4), "a"))
        }
        (Some(p), false) => load_skew(p, args.ring),
        (None, false) => Err(CliError::Usage(
            "an input file or --symbolic is required".into(),
        )),
    }
}

fn check_bound(dim: usize, bound: usize) -> Result<(), CliError> {
    if dim > bound {
        return Err(CliError::Usage(format!(
            "--check: dimension {dim} exceeds the oracle bound {bound}"
        )));
    }
    Ok(())
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "MATCH"
    } else {
        "MISMATCH"
    }
}

pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Pf(args) => cmd_pf(cli, args, out),
        Command::Charpoly(args) => cmd_charpoly(cli, args, out),
        Command::Pairs(args) => cmd_pairs(cli, args, out),
        Command::Verify(args) => cmd_verify(cli, args, out),
        Command::OracleDump(args) => cmd_dump(cli, args, out),
    }
}

fn cmd_pf(cli: &Cli, args: &MatrixArgs, out: &mut dyn Write) -> Result<Outcome, CliError> {
    let a = matrix_arg(args)?;
    let pf = pfkit::pfaffian(&a)?;
    let check = if args.check {
        check_bound(a.dim(), cli.oracle_bound)?;
        Some(pf_definition_bounded(&a, cli.oracle_bound)?)
    } else {
        None
    };
    let ok = check.as_ref().is_none_or(|o| *o == pf);
    match cli.format.unwrap_or(Format::Human) {
        Format::Human => {
            writeln!(out, "{pf}")?;
            if let Some(o) = &check {
                if ok {
                    writeln!(out, "MATCH")?;
                } else {
                    writeln!(out, "MISMATCH (oracle: {o})")?;
                }
            }
        }
        Format::Jsonl => {
            let v = json!({
                "dim": a.dim(),
                "ring": a.ring().to_string(),
                "pfaffian": pf.to_string(),
                "oracle": check.as_ref().map(ToString::to_string),
                "check": check.as_ref().map(|_| verdict(ok)),
            });
            writeln!(out, "{v}")?;
        }
    }
    Ok(if ok {
        Outcome::Pass
    } else {
        Outcome::Violation
    })
}

fn cmd_charpoly(cli: &Cli, args: &MatrixArgs, out: &mut dyn Write) -> Result<Outcome, CliError> {
    let a = matrix_arg(args)?;
    let c = pfaffian_coeffs(&a)?;
    let check = if args.check {
        check_bound(a.dim(), cli.oracle_bound)?;
        Some(pf_definition_bounded(&a, cli.oracle_bound)?)
    } else {
        None
    };
    let ok = check.as_ref().is_none_or(|o| o == c.constant());
    match cli.format.unwrap_or(Format::Human) {
        Format::Human => {
            writeln!(out, "{c}")?;
            writeln!(out, "{}", c.render_polynomial("x"))?;
            if check.is_some() {
                writeln!(out, "{}", verdict(ok))?;
            }
        }
        Format::Jsonl => {
            let coeffs: Vec<String> = c.descending().iter().map(ToString::to_string).collect();
            let v = json!({
                "dim": a.dim(),
                "ring": a.ring().to_string(),
                "coefficients": coeffs,
                "polynomial": c.render_polynomial("x"),
                "check": check.as_ref().map(|_| verdict(ok)),
            });
            writeln!(out, "{v}")?;
        }
    }
    Ok(if ok {
        Outcome::Pass
    } else {
        Outcome::Violation
    })
}

fn cmd_pairs(cli: &Cli, args: &PairArgs, out: &mut dyn Write) -> Result<Outcome, CliError> {
    let a = load_skew(&args.a, args.ring)?;
    let b = load_skew(&args.b, args.ring.or(Some(a.ring())))?;
    if a.dim() != b.dim() {
        return Err(CliError::Usage(format!(
            "matrices have different dimensions: {} and {}",
            a.dim(),
            b.dim()
        )));
    }
    let q = pair_coeffs(&a, &b)?;
    let check = if args.check {
        if a.dim() % 2 == 1 {
            return Err(CliError::Usage(format!(
                "--check needs an even dimension, got {}",
                a.dim()
            )));
        }
        check_bound(a.dim(), cli.oracle_bound)?;
        Some(pair_product_oracle(&a, &b)?)
    } else {
        None
    };
    let ok = check.as_ref().is_none_or(|o| o == q.constant());
    match cli.format.unwrap_or(Format::Human) {
        Format::Human => {
            writeln!(out, "{q}")?;
            if check.is_some() {
                writeln!(out, "{}", verdict(ok))?;
            }
        }
        Format::Jsonl => {
            let coeffs: Vec<String> = q.descending().iter().map(ToString::to_string).collect();
            let v = json!({
                "dim": a.dim(),
                "ring": a.ring().to_string(),
                "coefficients": coeffs,
                "check": check.as_ref().map(|_| verdict(ok)),
            });
            writeln!(out, "{v}")?;
        }
    }
    Ok(if ok {
        Outcome::Pass
    } else {
        Outcome::Violation
    })
}

/// One line per report: JSON, or `PASS`/`FAIL` with the sides of failures.
pub fn write_report(r: &Report, format: Format, out: &mut dyn Write) -> io::Result<()> {
    match format {
        Format::Jsonl => writeln!(
            out,
            "{}",
            serde_json::to_string(r).expect("report serializes")
        ),
        Format::Human => {
            let status = if r.pass { "PASS" } else { "FAIL" };
            write!(out, "{status} {} dim={} ring={}", r.identity, r.dim, r.ring)?;
            if let Some(s) = r.seed {
                write!(out, " seed={s}")?;
            }
            writeln!(out)?;
            if !r.pass {
                writeln!(out, "  lhs: {}", r.lhs)?;
                writeln!(out, "  rhs: {}", r.rhs)?;
                if let Some(w) = &r.witness {
                    writeln!(out, "  witness: {} {:?}", w.detail, w.indices)?;
                    for m in &w.matrices {
                        writeln!(out, "  input: {}", m.to_json())?;
                    }
                }
            }
            Ok(())
        }
    }
}

fn cmd_verify(cli: &Cli, args: &VerifyArgs, out: &mut dyn Write) -> Result<Outcome, CliError> {
    let identities = Identity::select(&args.identity)?;
    let source = if args.symbolic {
        Source::Symbolic
    } else {
        Source::Random {
            ring: args.ring,
            bound: args.bound,
        }
    };
    let input = match &args.input {
        Some(p) => Some(load_skew(p, Some(source.ring()))?),
        None => None,
    };
    let campaign = Campaign {
        identities,
        dim: input.as_ref().map_or(args.dim, SkewMatrix::dim),
        trials: args.trials,
        seed: args.seed,
        source,
        oracle_bound: cli.oracle_bound,
        input,
    };
    let reports = campaign.run()?;
    let format = cli.format.unwrap_or(Format::Jsonl);
    for r in &reports {
        write_report(r, format, out)?;
    }
    let failed = reports.iter().filter(|r| !r.pass).count();
    if format == Format::Human {
        writeln!(out, "{} checks, {failed} failed", reports.len())?;
    }
    Ok(if failed == 0 {
        Outcome::Pass
    } else {
        Outcome::Violation
    })
}

fn edges_json(edges: &[(usize, usize)]) -> serde_json::Value {
    json!(edges.iter().map(|&(u, v)| [u, v]).collect::<Vec<_>>())
}

fn cmd_dump(cli: &Cli, args: &DumpArgs, out: &mut dyn Write) -> Result<Outcome, CliError> {
    let format = cli.format.unwrap_or(Format::Jsonl);
    let n = args.dim;
    match args.kind {
        DumpKind::Matchings => {
            if n % 2 == 1 {
                return Err(CliError::Usage(format!(
                    "matchings need an even dimension, got {n}"
                )));
            }
            if n > cli.oracle_bound {
                return Err(CliError::Usage(format!(
                    "dimension {n} exceeds the oracle bound {}",
                    cli.oracle_bound
                )));
            }
            for m in enumerate_matchings(n / 2) {
                match format {
                    Format::Jsonl => writeln!(
                        out,
                        "{}",
                        json!({"matching": edges_json(m.pairs()), "sign": m.sign().as_i32()})
                    )?,
                    Format::Human => writeln!(out, "{} {m}", m.sign())?,
                }
            }
        }
        DumpKind::Pclow => {
            for s in enumerate_pclow_seqs(n, args.len.unwrap_or(n), args.from)? {
                let sign = s.clows().iter().fold(Sign::Plus, |acc, c| acc * c.sign());
                match format {
                    Format::Jsonl => {
                        let clows: Vec<_> =
                            s.clows().iter().map(|c| edges_json(c.edges())).collect();
                        writeln!(out, "{}", json!({"clows": clows, "sign": sign.as_i32()}))?
                    }
                    Format::Human => writeln!(out, "{sign} {s}")?,
                }
            }
        }
        DumpKind::Altclow => {
            let len = args.len.unwrap_or(n);
            if len % 2 == 1 {
                return Err(pfkit::Error::OddLength { len }.into());
            }
            let seqs = if args.headed {
                alt_clow_seqs_headed(n, args.from, len / 2)?
            } else {
                alt_clow_seqs(n, args.from, len / 2)?
            };
            for s in seqs {
                match format {
                    Format::Jsonl => {
                        let clows: Vec<_> =
                            s.clows().iter().map(|c| edges_json(c.edges())).collect();
                        writeln!(out, "{}", json!({"clows": clows}))?
                    }
                    Format::Human => writeln!(out, "{s}")?,
                }
            }
        }
    }
    Ok(Outcome::Pass)
}
