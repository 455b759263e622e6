//! The `wimlab` command-line tool.
//!
//! Exit codes: 0 success, 1 usage error, 2 validation failure, 3 budget
//! exceeded, 4 verification disagreement.

pub mod doc;
pub mod render;
pub mod verify;

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::benzenoid::{build_benzenoid, enumerate_kekule, kekule_to_matrix, matrix_to_kekule, DEFAULT_EDGE_BUDGET};
use crate::error::Error;
use crate::exactcount::{count_wim_closed, count_wim_lgv, BigCount};
use crate::lattice::{enumerate_nonintersecting_tuples, matrix_to_path_tuple, path_tuple_to_matrix, DEFAULT_TUPLE_BUDGET};
use crate::wim::{enumerate_wim, pulse_decompose};
use doc::{KekuleDocument, MatrixDocument, TupleDocument};

/// Environment variable overriding enumeration budgets.
pub const BUDGET_ENV: &str = "WIMLAB_BUDGET";

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Lib(#[from] Error),
    #[error("{0}")]
    Io(String),
    #[error("verification found disagreements")]
    Disagreement,
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Lib(Error::InvalidParameter(_)) => 1,
            CliError::Lib(Error::BudgetExceeded { .. }) => 3,
            CliError::Lib(_) | CliError::Io(_) => 2,
            CliError::Disagreement => 4,
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

/// Search ceilings for the brute-force routes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budgets {
    /// Candidate path tuples for non-intersecting tuple enumeration.
    pub tuples: u128,
    /// Edge count of graphs searched for perfect matchings.
    pub edges: usize,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets {
            tuples: DEFAULT_TUPLE_BUDGET,
            edges: DEFAULT_EDGE_BUDGET,
        }
    }
}

impl Budgets {
    /// Parses `WIMLAB_BUDGET`: either a bare integer (candidate tuples) or a
    /// comma-separated list of `tuples=N` / `edges=N`.
    pub fn parse(text: &str) -> CliResult<Self> {
        let mut b = Budgets::default();
        let bad = || CliError::Usage(format!("cannot parse {BUDGET_ENV}={text:?}"));
        let text = text.trim();
        if let Ok(v) = text.parse::<u128>() {
            b.tuples = v;
            return Ok(b);
        }
        for part in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (key, val) = part.split_once('=').ok_or_else(bad)?;
            match key.trim() {
                "tuples" => b.tuples = val.trim().parse().map_err(|_| bad())?,
                "edges" => b.edges = val.trim().parse().map_err(|_| bad())?,
                _ => return Err(bad()),
            }
        }
        Ok(b)
    }

    pub fn from_env() -> CliResult<Self> {
        match std::env::var(BUDGET_ENV) {
            Ok(v) => Budgets::parse(&v),
            Err(_) => Ok(Budgets::default()),
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "wimlab", version, about = "Count and biject weakly increasing matrices")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CountMethod {
    /// Product formula for two rows.
    Closed,
    /// Determinant of the path-count matrix.
    Lgv,
    /// Brute-force matrix enumeration.
    Enumerate,
    /// Brute-force non-intersecting path enumeration.
    Paths,
    /// Perfect matchings of O{n,2,k-1}.
    Kekule,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EnumerateKind {
    Matrices,
    Paths,
    Kekule,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Target {
    Kekule,
    Paths,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the number of m x n weakly increasing matrices with entries in 1..=k.
    Count {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value = "closed")]
        method: CountMethod,
        #[arg(long, default_value_t = 2)]
        m: usize,
    },
    /// Print every object of a family, one JSON document per line.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 2)]
        m: usize,
        #[arg(long, value_enum, default_value = "matrices")]
        kind: EnumerateKind,
    },
    /// Print the pulse chain of a two-row matrix document.
    Decompose {
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Map a matrix to its Kekulé structure or path tuple, or back.
    Map {
        #[arg(long, value_enum, conflicts_with = "from", required_unless_present = "from")]
        to: Option<Target>,
        #[arg(long, value_enum)]
        from: Option<Target>,
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Draw a Kekulé structure or path tuple document as SVG.
    Render {
        #[arg(long, value_enum)]
        what: Target,
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long)]
        output: PathBuf,
    },
    /// Cross-check every counting route and bijection over a parameter grid.
    Verify {
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        #[arg(long, default_value_t = 4)]
        max_k: usize,
        #[arg(long)]
        include_matchings: bool,
        #[arg(long)]
        max_pqr: Option<usize>,
        /// Emit the report as JSON instead of text.
        #[arg(long)]
        json: bool,
    },
}

fn read_input(path: Option<&Path>, stdin: &mut dyn Read) -> CliResult<String> {
    match path {
        Some(p) => fs::read_to_string(p).map_err(|e| CliError::Io(format!("cannot read {}: {e}", p.display()))),
        None => {
            let mut s = String::new();
            stdin
                .read_to_string(&mut s)
                .map_err(|e| CliError::Io(format!("cannot read standard input: {e}")))?;
            Ok(s)
        }
    }
}

/// Exact count by the chosen route.
pub fn count(method: CountMethod, m: usize, n: usize, k: usize, budgets: &Budgets) -> CliResult<BigCount> {
    if m == 0 || n == 0 || k == 0 {
        return Err(CliError::Usage("m, n and k must be >= 1".into()));
    }
    let two_rows_only = |what: &str| {
        if m != 2 {
            Err(CliError::Usage(format!("method {what} needs m = 2")))
        } else {
            Ok(())
        }
    };
    Ok(match method {
        CountMethod::Closed => {
            two_rows_only("closed")?;
            count_wim_closed(n, k)?
        }
        CountMethod::Lgv => count_wim_lgv(m, n, k)?,
        CountMethod::Enumerate => BigCount::from(enumerate_wim(m, n, k)?.count()),
        CountMethod::Paths => BigCount::from(enumerate_nonintersecting_tuples(m, n, k, budgets.tuples)?.count()),
        CountMethod::Kekule => {
            two_rows_only("kekule")?;
            if k < 2 {
                return Err(CliError::Usage("method kekule needs k >= 2".into()));
            }
            let g = build_benzenoid(n, 2, k - 1)?;
            BigCount::from(enumerate_kekule(&g, budgets.edges)?.count())
        }
    })
}

/// Runs one parsed command, writing results to `out`.
pub fn execute(cli: Cli, stdin: &mut dyn Read, out: &mut dyn Write, budgets: &Budgets) -> CliResult<()> {
    let io_err = |e: io::Error| CliError::Io(e.to_string());
    match cli.command {
        Command::Count { n, k, method, m } => {
            let c = count(method, m, n, k, budgets)?;
            writeln!(out, "{c}").map_err(io_err)?;
        }
        Command::Enumerate { n, k, m, kind } => match kind {
            EnumerateKind::Matrices => {
                for mat in enumerate_wim(m, n, k)? {
                    writeln!(out, "{}", doc::to_canonical(&MatrixDocument::from_matrix(&mat))).map_err(io_err)?;
                }
            }
            EnumerateKind::Paths => {
                for t in enumerate_nonintersecting_tuples(m, n, k, budgets.tuples)? {
                    writeln!(out, "{}", doc::to_canonical(&TupleDocument::from_tuple(&t))).map_err(io_err)?;
                }
            }
            EnumerateKind::Kekule => {
                if m != 2 || k < 2 {
                    return Err(CliError::Usage("kekule enumeration needs m = 2 and k >= 2".into()));
                }
                let g = build_benzenoid(n, 2, k - 1)?;
                for s in enumerate_kekule(&g, budgets.edges)? {
                    writeln!(out, "{}", doc::to_canonical(&KekuleDocument::from_structure(&s)?)).map_err(io_err)?;
                }
            }
        },
        Command::Decompose { input } => {
            let text = read_input(input.as_deref(), stdin)?;
            let m = doc::parse::<MatrixDocument>(&text)?.to_matrix()?;
            writeln!(out, "{}", doc::chain_to_json(&pulse_decompose(&m)?)).map_err(io_err)?;
        }
        Command::Map { to, from, input } => {
            let text = read_input(input.as_deref(), stdin)?;
            let rendered = match (to, from) {
                (Some(target), None) => {
                    let m = doc::parse::<MatrixDocument>(&text)?.to_matrix()?;
                    match target {
                        Target::Paths => doc::to_canonical(&TupleDocument::from_tuple(&matrix_to_path_tuple(&m)?)),
                        Target::Kekule => {
                            if m.m() != 2 || m.k() < 2 {
                                return Err(CliError::Usage(
                                    "mapping to kekule needs a 2-row matrix with k >= 2".into(),
                                ));
                            }
                            let g = build_benzenoid(m.n(), 2, m.k() as usize - 1)?;
                            doc::to_canonical(&KekuleDocument::from_structure(&matrix_to_kekule(&m, &g)?)?)
                        }
                    }
                }
                (None, Some(source)) => {
                    let m = match source {
                        Target::Paths => {
                            let t = doc::parse::<TupleDocument>(&text)?.to_tuple()?;
                            path_tuple_to_matrix(&t)?
                        }
                        Target::Kekule => {
                            let d = doc::parse::<KekuleDocument>(&text)?;
                            let g = d.graph()?;
                            kekule_to_matrix(&d.to_structure(&g)?)?
                        }
                    };
                    doc::to_canonical(&MatrixDocument::from_matrix(&m))
                }
                _ => return Err(CliError::Usage("give exactly one of --to or --from".into())),
            };
            writeln!(out, "{rendered}").map_err(io_err)?;
        }
        Command::Render { what, input, output } => {
            let text = read_input(input.as_deref(), stdin)?;
            let svg = match what {
                Target::Kekule => {
                    let d = doc::parse::<KekuleDocument>(&text)?;
                    let g = d.graph()?;
                    render::render_kekule_svg(&d.to_structure(&g)?)
                }
                Target::Paths => {
                    let t = doc::parse::<TupleDocument>(&text)?.to_tuple()?;
                    if let Some((i, j)) = t.first_intersection() {
                        return Err(Error::Intersecting(i + 1, j + 1).into());
                    }
                    render::render_paths_svg(&t)
                }
            };
            fs::write(&output, svg).map_err(|e| CliError::Io(format!("cannot write {}: {e}", output.display())))?;
        }
        Command::Verify {
            max_n,
            max_k,
            include_matchings,
            max_pqr,
            json,
        } => {
            let report = verify::run_verify(&verify::VerifyOptions {
                max_n,
                max_k,
                include_matchings,
                max_pqr,
                budgets: *budgets,
            });
            if json {
                writeln!(out, "{}", doc::to_canonical(&report)).map_err(io_err)?;
            } else {
                write!(out, "{}", report.to_text()).map_err(io_err)?;
            }
            if !report.all_agree {
                return Err(CliError::Disagreement);
            }
        }
    }
    Ok(())
}

/// Entry point used by the binary: parses `args`, runs, and returns the exit
/// code. Diagnostics go to standard error.
pub fn run<I, T>(args: I) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    let result = Budgets::from_env().and_then(|b| {
        let stdout = io::stdout();
        let mut lock = stdout.lock();
        execute(cli, &mut io::stdin(), &mut lock, &b)
    });
    match result {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("wimlab: {e}");
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str], input: &str) -> CliResult<String> {
        let cli = Cli::try_parse_from(std::iter::once("wimlab").chain(args.iter().copied()))
            .map_err(|e| CliError::Usage(e.to_string()))?;
        let mut out = Vec::new();
        execute(cli, &mut input.as_bytes(), &mut out, &Budgets::default())?;
        Ok(String::from_utf8(out).unwrap())
    }

    #[test]
    fn budget_parsing() {
        assert_eq!(Budgets::parse("500").unwrap().tuples, 500);
        let b = Budgets::parse("tuples=7, edges=9").unwrap();
        assert_eq!((b.tuples, b.edges), (7, 9));
        assert!(Budgets::parse("speed=1").is_err());
        assert!(Budgets::parse("tuples=x").is_err());
    }

    #[test]
    fn count_routes() {
        for method in ["closed", "lgv", "enumerate", "paths", "kekule"] {
            assert_eq!(run_str(&["count", "--n", "2", "--k", "2", "--method", method], "").unwrap(), "6\n");
        }
        assert_eq!(run_str(&["count", "--n", "1", "--k", "1", "--method", "lgv"], "").unwrap(), "1\n");
        assert_eq!(run_str(&["count", "--n", "6", "--k", "7"], "").unwrap(), "226512\n");
        assert_eq!(
            run_str(&["count", "--n", "1", "--k", "2", "--m", "3", "--method", "lgv"], "").unwrap(),
            "4\n"
        );
    }

    #[test]
    fn count_errors() {
        let e = run_str(&["count", "--n", "2", "--k", "1", "--method", "kekule"], "").unwrap_err();
        assert_eq!(e.exit_code(), 1);
        let e = run_str(&["count", "--n", "2", "--k", "2", "--m", "3", "--method", "closed"], "").unwrap_err();
        assert_eq!(e.exit_code(), 1);
        let e = run_str(&["count", "--n", "9", "--k", "2", "--method", "enumerate"], "").unwrap_err();
        assert_eq!(e.exit_code(), 3);
    }

    #[test]
    fn decompose() {
        let out = run_str(&["decompose"], r#"{"k":7,"rows":[[1,1,2,3,6,6],[1,1,2,4,6,7]]}"#).unwrap();
        assert_eq!(out, "[[2,2],[3,3],[4,3],[4,4],[4,4],[6,5]]\n");
        assert_eq!(run_str(&["decompose"], r#"{"k":1,"rows":[[1,1],[1,1]]}"#).unwrap(), "[]\n");
        let e = run_str(&["decompose"], r#"{"k":2,"rows":[[1,2],[2,1]]}"#).unwrap_err();
        assert_eq!(e.exit_code(), 2);
        let e = run_str(&["decompose"], "not json").unwrap_err();
        assert_eq!(e.exit_code(), 2);
    }

    #[test]
    fn map_round_trips() {
        let w = r#"{"k":7,"rows":[[1,1,2,3,6,6],[1,1,2,4,6,7]]}"#;
        let k = run_str(&["map", "--to", "kekule"], w).unwrap();
        assert!(k.starts_with(r#"{"n":6,"r":6,"xs":[2,3,4,4,4,6],"ys":[2,3,3,4,4,5],"edges":["#));
        assert_eq!(run_str(&["map", "--from", "kekule"], &k).unwrap().trim(), w);
        let p = run_str(&["map", "--to", "paths"], w).unwrap();
        assert_eq!(run_str(&["map", "--from", "paths"], &p).unwrap().trim(), w);
        let e = run_str(&["map", "--to", "kekule"], r#"{"k":1,"rows":[[1],[1]]}"#).unwrap_err();
        assert_eq!(e.exit_code(), 1);
    }

    #[test]
    fn enumerate_lines() {
        let out = run_str(&["enumerate", "--n", "2", "--k", "2"], "").unwrap();
        assert_eq!(out.lines().count(), 6);
        assert_eq!(out.lines().next().unwrap(), r#"{"k":2,"rows":[[1,1],[1,1]]}"#);
        let out = run_str(&["enumerate", "--n", "2", "--k", "3", "--kind", "kekule"], "").unwrap();
        assert_eq!(out.lines().count(), 20);
        let out = run_str(&["enumerate", "--n", "2", "--k", "2", "--kind", "paths"], "").unwrap();
        assert_eq!(out.lines().count(), 6);
    }

    #[test]
    fn verify_exit() {
        let out = run_str(&["verify", "--max-n", "1", "--max-k", "1"], "").unwrap();
        assert!(out.contains("all routes agree"));
    }
}
