//! Command dispatch for the `supersmooth` binary.
//!
//! [`run`] takes the argument list and returns what the process should
//! print and its exit status, so the commands can be tested in-process.
//! Exit status: 0 success, 1 usage error, 2 unreadable or malformed input,
//! 3 domain error (point off the variety, singular matrix, bad dimensions).

pub mod report;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use supersmooth::dsl::{parse_action, parse_matrix, parse_source, print_source};
use supersmooth::local::{
    default_order, smooth_test, tangent_dim, truncated_quotient, Verdict,
};
use supersmooth::{
    jacobian_at, point_on_variety, stabilizer_ideal, super_rank, ClosedPoint, DslError, Error,
    GroupKind, Presentation,
};

pub use report::Report;

#[derive(Parser, Debug)]
#[command(name = "supersmooth", version, about = "Smoothness of closed points on affine supervarieties")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Whether the point lies on the variety.
    Check {
        file: PathBuf,
        /// Overrides the file's `point` line, e.g. `--point "1 0"`.
        #[arg(long, allow_hyphen_values = true)]
        point: Option<String>,
    },
    /// Tangent dimension `dim m/m²` and Jacobian super rank.
    Tangent {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        point: Option<String>,
    },
    /// Decide smoothness at the point.
    Smooth {
        file: PathBuf,
        /// Truncation order (at least 2); defaults to 2·maxdeg + n + 2.
        #[arg(long)]
        order: Option<usize>,
        #[arg(long)]
        json: bool,
        #[arg(long, allow_hyphen_values = true)]
        point: Option<String>,
    },
    /// Hilbert function of the associated graded ring at the point.
    Hilbert {
        file: PathBuf,
        #[arg(long)]
        max_degree: usize,
        #[arg(long, allow_hyphen_values = true)]
        point: Option<String>,
    },
    /// Berezinian of the supermatrix in a matrix file.
    Ber { file: PathBuf },
    /// Build a classical supergroup and report its dimension at the identity.
    Group {
        kind: KindArg,
        m: usize,
        n: usize,
        /// Print the presentation (with the identity as its point).
        #[arg(long)]
        emit: bool,
    },
    /// Stabilizer of a point under a group action.
    Stabilizer {
        file: PathBuf,
        #[arg(long)]
        emit: bool,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum KindArg {
    Gl,
    Sl,
    Osp,
    Psp,
}

impl From<KindArg> for GroupKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Gl => GroupKind::Gl,
            KindArg::Sl => GroupKind::Sl,
            KindArg::Osp => GroupKind::Osp,
            KindArg::Psp => GroupKind::Psp,
        }
    }
}

/// What a run prints and how it exits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Input(String),
    Domain(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Input(_) => 2,
            Failure::Domain(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Input(m) | Failure::Domain(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(format!("error: {e}"))
    }
}

fn input_error(path: &Path, e: DslError) -> Failure {
    Failure::Input(format!("error: {}:{e}", path.display()))
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("error: cannot read {}: {e}", path.display())))
}

fn load(path: &Path, point: Option<&str>) -> Result<(Presentation, ClosedPoint), Failure> {
    let src = parse_source(&read(path)?).map_err(|e| input_error(path, e))?;
    let point = match point {
        Some(text) => {
            let vars = src.presentation.vars();
            let line = format!("evens {}\nodds\npoint {text}\n", vars.even_names().join(" "));
            parse_source(&line)
                .map_err(|e| Failure::Usage(format!("error: --point: {e}")))?
                .point
                .expect("point line present")
        }
        None => src.point.ok_or_else(|| {
            Failure::Domain(format!(
                "error: {} has no `point` line; pass --point",
                path.display()
            ))
        })?,
    };
    Ok((src.presentation, point))
}

/// Runs one command. The first argument is the program name.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: 1,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    match dispatch(cli.command) {
        Ok(stdout) => Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        },
        Err(f) => Outcome {
            code: f.code(),
            stdout: String::new(),
            stderr: format!("{}\n", f.message()),
        },
    }
}

fn dispatch(command: Command) -> Result<String, Failure> {
    let mut out = String::new();
    match command {
        Command::Check { file, point } => {
            let (x, p) = load(&file, point.as_deref())?;
            let on = point_on_variety(&x, &p)?;
            writeln!(out, "{p} {} on the variety", if on { "lies" } else { "does not lie" }).unwrap();
        }
        Command::Tangent { file, point } => {
            let (x, p) = load(&file, point.as_deref())?;
            let dim = tangent_dim(&x, &p)?;
            let rank = super_rank(&jacobian_at(&x, &p)?);
            writeln!(out, "tangent dimension {dim}").unwrap();
            writeln!(out, "jacobian rank {rank}").unwrap();
        }
        Command::Smooth {
            file,
            order,
            json,
            point,
        } => {
            let (x, p) = load(&file, point.as_deref())?;
            let order = order.unwrap_or_else(|| default_order(&x));
            let start = Instant::now();
            let v = smooth_test(&x, &p, order)?;
            let report = Report::new(&v, start.elapsed().as_millis() as u64);
            if json {
                out = report.to_json();
            } else {
                out = smooth_text(&report, &v.verdict);
            }
        }
        Command::Hilbert {
            file,
            max_degree,
            point,
        } => {
            let (x, p) = load(&file, point.as_deref())?;
            let ring = truncated_quotient(&x, &p, max_degree.max(1))?;
            writeln!(out, "degree even odd total t").unwrap();
            let mut t = 0;
            for d in 0..=max_degree {
                let h = ring.hilbert_split(d)?;
                t += h.total();
                writeln!(out, "{d} {} {} {} {t}", h.even, h.odd, h.total()).unwrap();
            }
        }
        Command::Ber { file } => {
            let a = parse_matrix(&read(&file)?).map_err(|e| input_error(&file, e))?;
            writeln!(out, "{}", a.berezinian()?).unwrap();
        }
        Command::Group { kind, m, n, emit } => {
            let g = GroupKind::from(kind).build(m, n)?;
            if emit {
                out = print_source(g.base(), Some(g.identity()));
            } else {
                out = group_summary(g.name(), g.base(), g.identity())?;
            }
        }
        Command::Stabilizer { file, emit } => {
            let f = parse_action(&read(&file)?).map_err(|e| input_error(&file, e))?;
            let stab = stabilizer_ideal(&f.action, &f.point)?;
            if emit {
                out = print_source(stab.base(), Some(stab.identity()));
            } else {
                out = group_summary(stab.name(), stab.base(), stab.identity())?;
            }
        }
    }
    Ok(out)
}

fn group_summary(name: &str, x: &Presentation, identity: &ClosedPoint) -> Result<String, Failure> {
    let mut out = String::new();
    let vars = x.vars();
    writeln!(out, "{name}").unwrap();
    writeln!(out, "variables {}|{}", vars.n_even(), vars.n_odd()).unwrap();
    writeln!(out, "relations {}|{}", x.even_gens().len(), x.odd_gens().len()).unwrap();
    writeln!(out, "lie superdimension {}", tangent_dim(x, identity)?).unwrap();
    let v = smooth_test(x, identity, default_order(x))?;
    writeln!(out, "identity {}", verdict_line(&v.verdict)).unwrap();
    Ok(out)
}

fn verdict_line(v: &Verdict) -> String {
    match v {
        Verdict::SmoothExact => "SmoothExact".into(),
        Verdict::SmoothToOrder(n) => format!("SmoothToOrder({n})"),
        Verdict::NotSmooth(_) => "NotSmooth".into(),
    }
}

fn smooth_text(r: &Report, v: &Verdict) -> String {
    let mut out = String::new();
    writeln!(out, "verdict {}", verdict_line(v)).unwrap();
    if let Some(d) = r.dim {
        writeln!(out, "dimension {}|{}", d.even, d.odd).unwrap();
    }
    let t = &r.tangent;
    writeln!(
        out,
        "tangent dimension {}|{} (jacobian rank {}|{})",
        t.dim.even, t.dim.odd, t.jacobian_rank.even, t.jacobian_rank.odd
    )
    .unwrap();
    writeln!(out, "complete intersection {}", r.certificate.complete_intersection).unwrap();
    if let Some(d) = r.certificate.witness_degree {
        writeln!(out, "witness degree {d}").unwrap();
    }
    if let Some(g) = &r.certificate.failed_generator {
        writeln!(out, "failed generator {} #{}", g.parity, g.index).unwrap();
    }
    if let Some(rows) = &r.hilbert {
        writeln!(out, "degree h free").unwrap();
        for row in rows {
            writeln!(out, "{} {} {}", row.degree, row.total, row.free_model).unwrap();
        }
    }
    writeln!(out, "order {}", r.order).unwrap();
    out
}
