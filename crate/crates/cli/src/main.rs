use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use bck_core::classify::{Catalog, EnumerationConfig, VALIDATED_MAX_ORDER};
use bck_core::family::plan_synthesis;
use bck_core::format::{catalog_manifest, emit_bck, emit_hasse_dot, parse_bck, write_catalog};
use bck_core::{
    b_star, cd_set, extend_top, family, find_maximal_subalgebra, is_isomorphic, m_chain, union, validate,
    BckAlgebra, ConstructionExpr,
};
use clap::{Parser, Subcommand, ValueEnum};

/// Environment variable overriding the default enumeration budget.
const BUDGET_ENV: &str = "BCK_MAX_ENUM_ORDER";

#[derive(Parser)]
#[command(name = "bck", version, about = "Finite BCK-algebras and their commuting degrees")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a .bck file against the BCK axioms
    Verify { file: PathBuf },
    /// Print the commuting degree as k/n^2 = p/q
    Cd { file: PathBuf },
    /// Print the commutative, bounded and positive-implicative flags
    Props { file: PathBuf },
    /// Build the minimum (mn) or maximum (bn) degree algebra of order N
    Build {
        kind: Extremal,
        n: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Evaluate a construction expression such as "((PI+T)+2)"
    Eval {
        expr: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Apply a construction to algebras read from files
    Op {
        #[command(subcommand)]
        op: OpCommand,
    },
    /// List the degrees of level N of the covering family
    Family {
        n: usize,
        /// Also print each construction expression
        #[arg(long)]
        exprs: bool,
    },
    /// List the achievable non-commutative commuting degrees at order N
    Cdset { n: usize },
    /// Build an algebra with commuting degree exactly P/Q
    Synth {
        target: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Enumerate all algebras of order N up to isomorphism
    Enum {
        n: usize,
        /// Print only the number of classes
        #[arg(long)]
        count_only: bool,
        /// Keep only non-commutative classes
        #[arg(long)]
        noncommutative: bool,
        /// Write one .bck file per class and a manifest into DIR
        #[arg(short, long, value_name = "DIR")]
        output: Option<PathBuf>,
        #[command(flatten)]
        budget: Budget,
    },
    /// Count isomorphism classes of order N by commuting degree
    Census {
        n: usize,
        #[command(flatten)]
        budget: Budget,
    },
    /// Find an isomorphism between two algebras
    Iso { first: PathBuf, second: PathBuf },
    /// Print the element set of a subalgebra of order n-1
    Subalg { file: PathBuf },
    /// Print the Hasse diagram in DOT format
    Hasse { file: PathBuf },
}

#[derive(Subcommand)]
enum OpCommand {
    /// Iséki's extension: adjoin a new top element
    Extend {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// BCK-union of the given algebras, glued at 0
    Union {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Extremal {
    /// Chain M_n, minimum degree (3n-2)/n^2
    Mn,
    /// B_n = PI ⊔ 2 ⊔ … ⊔ 2, maximum degree (n^2-2)/n^2
    Bn,
}

#[derive(clap::Args)]
struct Budget {
    /// Largest order allowed to enumerate (default 6, or $BCK_MAX_ENUM_ORDER)
    #[arg(long)]
    max_order: Option<usize>,
    /// Worker threads for the search
    #[arg(long)]
    workers: Option<usize>,
}

impl Budget {
    fn config(&self, n: usize) -> Result<EnumerationConfig> {
        let max_order = match self.max_order {
            Some(m) => m,
            None => match std::env::var(BUDGET_ENV) {
                Ok(v) => v
                    .trim()
                    .parse()
                    .with_context(|| format!("{BUDGET_ENV} must be a positive integer, got {v:?}"))?,
                Err(_) => VALIDATED_MAX_ORDER,
            },
        };
        let mut config = EnumerationConfig::default().with_max_order(max_order);
        if let Some(w) = self.workers {
            config = config.with_workers(w);
        }
        if config.is_unvalidated(n) {
            eprintln!("warning: enumeration above order {VALIDATED_MAX_ORDER} has unvalidated runtime");
        }
        Ok(config)
    }
}

fn read_input(path: &Path) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).context("reading standard input")?;
        Ok(s)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

fn load(path: &Path) -> Result<BckAlgebra> {
    let table = parse_bck(&read_input(path)?).with_context(|| format!("parsing {}", path.display()))?;
    validate(table).with_context(|| format!("{} is not a BCK-algebra", path.display()))
}

fn write_output(output: Option<&Path>, text: &str) -> Result<()> {
    match output {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn emit_algebra(output: Option<&Path>, a: &BckAlgebra) -> Result<()> {
    write_output(output, &emit_bck(a.table()))
}

fn run(cli: Cli) -> Result<()> {
    let mut out = String::new();
    match cli.command {
        Command::Verify { file } => {
            let table = parse_bck(&read_input(&file)?).with_context(|| format!("parsing {}", file.display()))?;
            match validate(table) {
                Ok(_) => out.push_str("valid\n"),
                Err(v) => bail!("not a BCK-algebra: {v}"),
            }
        }
        Command::Cd { file } => {
            out = format!("{}\n", load(&file)?.commuting_degree().describe());
        }
        Command::Props { file } => {
            let a = load(&file)?;
            out = format!(
                "commutative: {}\npositive-implicative: {}\nbounded: {}\n",
                a.is_commutative(),
                a.is_positive_implicative(),
                match a.top() {
                    Some(t) => format!("true (top = {t})"),
                    None => "false".to_string(),
                }
            );
        }
        Command::Build { kind, n, output } => {
            let a = match kind {
                Extremal::Mn => m_chain(n)?,
                Extremal::Bn => b_star(n)?,
            };
            return emit_algebra(output.as_deref(), &a);
        }
        Command::Eval { expr, output } => {
            let e: ConstructionExpr = expr.parse()?;
            return emit_algebra(output.as_deref(), &e.eval());
        }
        Command::Op { op } => match op {
            OpCommand::Extend { file, output } => {
                return emit_algebra(output.as_deref(), &extend_top(&load(&file)?));
            }
            OpCommand::Union { files, output } => {
                let parts = files.iter().map(|f| load(f)).collect::<Result<Vec<_>>>()?;
                return emit_algebra(output.as_deref(), &union(&parts)?);
            }
        },
        Command::Family { n, exprs } => {
            for (j, e) in family(n)?.entries.iter().enumerate() {
                out.push_str(&format!("{}\t{}", j + 1, e.report.describe()));
                if exprs {
                    out.push_str(&format!("\t{}", e.expr));
                }
                out.push('\n');
            }
        }
        Command::Cdset { n } => {
            for r in cd_set(n)? {
                out.push_str(&format!("{}\n", r.describe()));
            }
        }
        Command::Synth { target, output } => {
            let (p, q) = parse_pair(&target)?;
            let plan = plan_synthesis(p, q)?;
            let algebra = plan.expr.eval();
            let report = algebra.commuting_degree();
            if report.degree != plan.target {
                bail!("internal error: built degree {} differs from target {}", report.degree, plan.target);
            }
            out.push_str(&format!("target: {}\norder: {}\n", plan.target, algebra.order()));
            match plan.placement {
                Some(pl) => {
                    out.push_str(&format!("k: {}\nindex: {}\n", pl.k, pl.index));
                    if pl.escalated {
                        let two_q = 2 * plan.target.denom();
                        out.push_str(&format!(
                            "note: n = 2q = {two_q} puts k outside 1..=T(n-2); escalated to n = {}\n",
                            pl.order
                        ));
                    }
                }
                None => out.push_str("note: degree 1 is realized by the commutative algebra TC\n"),
            }
            out.push_str(&format!("expression: {}\ndegree: {}\n", plan.expr, report.describe()));
            if let Some(path) = output {
                emit_algebra(Some(&path), &algebra)?;
            }
        }
        Command::Enum {
            n,
            count_only,
            noncommutative,
            output,
            budget,
        } => {
            let mut catalog = Catalog::build(n, &budget.config(n)?)?;
            if noncommutative {
                catalog.classes.retain(|c| !c.commutative);
            }
            if count_only {
                out = format!("{}\n", catalog.classes.len());
            } else {
                out = catalog_manifest(&catalog);
            }
            if let Some(dir) = output {
                write_catalog(&dir, &catalog).with_context(|| format!("writing catalog to {}", dir.display()))?;
            }
        }
        Command::Census { n, budget } => {
            let census = Catalog::build(n, &budget.config(n)?)?.census();
            for (report, count) in census.iter() {
                out.push_str(&format!("{}\t{count}\n", report.describe()));
            }
        }
        Command::Iso { first, second } => {
            let (a, b) = (load(&first)?, load(&second)?);
            out = match is_isomorphic(&a, &b) {
                Some(w) => {
                    let pairs: Vec<String> = w.perm.iter().enumerate().map(|(x, y)| format!("{x}->{y}")).collect();
                    format!("isomorphic: {}\n", pairs.join(" "))
                }
                None => "not isomorphic\n".to_string(),
            };
        }
        Command::Subalg { file } => {
            let elements = find_maximal_subalgebra(&load(&file)?)?;
            let list: Vec<String> = elements.iter().map(ToString::to_string).collect();
            out = format!("{{{}}}\n", list.join(", "));
        }
        Command::Hasse { file } => {
            out = emit_hasse_dot(&load(&file)?);
        }
    }
    write_output(None, &out)
}

/// The numerator and denominator as written (before reduction).
fn parse_pair(target: &str) -> Result<(u64, u64)> {
    let (p, q) = target.split_once('/').unwrap_or((target, "1"));
    let parse = |s: &str| s.trim().parse::<u64>().map_err(|_| anyhow!("expected P/Q, got {target:?}"));
    Ok((parse(p)?, parse(q)?))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
