//! `riordan`: expand generating functions, build Riordan-type matrices and
//! their transforms, run the reproduction suite, compare against b-files.
//!
//! Exit status: 0 success, 1 a check or comparison failed, 2 usage, parse or
//! domain error.

mod output;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use riordan_core::bfile::{compare, BFile};
use riordan_core::partial_sums::{
    col_partial_sum, row_partial_sum, row_ps_inverse_finite, row_ps_inverse_infinite,
};
use riordan_core::production::production_matrix;
use riordan_core::riordan::{matrix_diagonal_sums, sigma, sigma_t};
use riordan_core::verify::{self, DEFAULT_ORDER};
use riordan_core::{
    expand, expand_bivariate, AlmostRiordanPair, Coef, ExactMatrix, ExpRiordanPair, ExprError,
    RiordanPair, Series,
};
use serde_json::json;

use output::Format;

#[derive(Parser)]
#[command(name = "riordan", version, about = "Exact Riordan array computations")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value = "pretty")]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Expand an expression in x (or x and y) to a truncated series.
    Expand(ExpandArgs),
    /// Build the matrix of a (g, f) pair, optionally transformed.
    Matrix(MatrixArgs),
    /// Run one reproduction case, or `all`.
    Verify {
        /// Case id, or `all`.
        #[arg(required_unless_present = "list")]
        id: Option<String>,
        /// Working order for order-driven cases.
        #[arg(long, default_value_t = DEFAULT_ORDER)]
        order: usize,
        /// List case ids and exit.
        #[arg(long, conflicts_with = "order")]
        list: bool,
    },
    /// Compare a computed sequence with a b-file.
    BfileCompare {
        /// File of `index value` lines; `#` starts a comment.
        bfile: PathBuf,
        /// Our term 0 is compared with b-file index `offset`.
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        offset: i64,
        #[command(subcommand)]
        source: Source,
    },
}

#[derive(Subcommand)]
enum Source {
    /// Coefficients of an expression in x.
    Expand(ExpandArgs),
    /// Diagonal or row sums of a matrix; needs --diag-sums or --row-sums.
    Matrix(MatrixArgs),
}

#[derive(Args)]
struct ExpandArgs {
    #[arg(allow_hyphen_values = true)]
    expr: String,
    /// Number of x coefficients.
    #[arg(long)]
    order: usize,
    /// Number of y coefficients; expands in x and y when given.
    #[arg(long)]
    y_order: Option<usize>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Kind {
    Riordan,
    Exp,
    Almost,
}

#[derive(Args)]
#[group(id = "transform", multiple = false)]
struct Transform {
    /// Row partial sum `M Σ^T`.
    #[arg(long, group = "transform")]
    rowps: bool,
    /// Column partial sum `Σ M`.
    #[arg(long, group = "transform")]
    colps: bool,
    #[arg(long, group = "transform")]
    inverse: bool,
    /// Production matrix `M^{-1} overline(M)`.
    #[arg(long, group = "transform")]
    production: bool,
    /// Exact inverse of the N by N row partial sum.
    #[arg(long, group = "transform")]
    hessenberg_finite: bool,
    /// Leading block of the inverse of the infinite row partial sum (Riordan only).
    #[arg(long, group = "transform")]
    hessenberg_infinite: bool,
}

#[derive(Args)]
struct MatrixArgs {
    #[arg(allow_hyphen_values = true)]
    g: String,
    #[arg(allow_hyphen_values = true)]
    f: String,
    /// Matrix size N.
    #[arg(long)]
    order: usize,
    #[arg(long, value_enum, default_value = "riordan")]
    kind: Kind,
    /// First column, for --kind almost.
    #[arg(long)]
    a: Option<String>,
    #[command(flatten)]
    transform: Transform,
    /// Diagonal sums of the resulting matrix.
    #[arg(long, conflicts_with = "row_sums")]
    diag_sums: bool,
    /// Row sums of the resulting matrix.
    #[arg(long)]
    row_sums: bool,
}

fn parse(label: &str, text: &str, order: usize) -> Result<Series> {
    expand(text, order).map_err(|e| expr_error(label, text, &e))
}

fn expr_error(label: &str, text: &str, e: &ExprError) -> anyhow::Error {
    anyhow!("{label}: {e}\n{}", output::caret(text, e.position()))
}

enum Built {
    Riordan(RiordanPair),
    Other(ExactMatrix),
}

impl MatrixArgs {
    /// One coefficient beyond N, so production and infinite forms are exact.
    fn series_order(&self) -> usize {
        (self.order + 1).max(2)
    }

    fn build(&self, n: usize) -> Result<Built> {
        let order = self.series_order();
        let g = parse("g", &self.g, order)?;
        let f = parse("f", &self.f, order)?;
        if self.a.is_some() && self.kind != Kind::Almost {
            bail!("--a applies only to --kind almost");
        }
        Ok(match self.kind {
            Kind::Riordan => Built::Riordan(RiordanPair::general(g, f)?),
            Kind::Exp => Built::Other(ExpRiordanPair::new(g, f)?.matrix(n)?),
            Kind::Almost => {
                let text = self.a.as_deref().context("--kind almost needs --a")?;
                let a = parse("a", text, order)?;
                Built::Other(AlmostRiordanPair::new(a, g, f)?.matrix(n)?)
            }
        })
    }

    fn matrix_at(&self, n: usize) -> Result<ExactMatrix> {
        Ok(match self.build(n)? {
            Built::Riordan(p) => p.matrix(n)?,
            Built::Other(m) => m,
        })
    }

    fn compute(&self) -> Result<ExactMatrix> {
        let n = self.order;
        if n == 0 {
            bail!("--order must be at least 1");
        }
        let t = &self.transform;
        if t.production {
            return Ok(production_matrix(&self.matrix_at(n + 1)?)?);
        }
        Ok(match self.build(n)? {
            Built::Riordan(p) => {
                if t.rowps {
                    row_partial_sum(&p, n)?
                } else if t.colps {
                    col_partial_sum(&p)?.matrix(n)?
                } else if t.inverse {
                    p.inverse()?.matrix(n)?
                } else if t.hessenberg_finite {
                    row_ps_inverse_finite(&p, n)?
                } else if t.hessenberg_infinite {
                    row_ps_inverse_infinite(&p, n)?
                } else {
                    p.matrix(n)?
                }
            }
            Built::Other(m) => {
                if t.rowps {
                    &m * &sigma_t(n)
                } else if t.colps {
                    &sigma(n) * &m
                } else if t.inverse {
                    m.inverse()?
                } else if t.hessenberg_finite {
                    (&m * &sigma_t(n)).inverse()?
                } else if t.hessenberg_infinite {
                    bail!("--hessenberg-infinite needs --kind riordan");
                } else {
                    m
                }
            }
        })
    }

    fn sequence(&self, m: &ExactMatrix) -> Option<Vec<Coef>> {
        if self.diag_sums {
            Some(matrix_diagonal_sums(m))
        } else if self.row_sums {
            Some((0..m.rows()).map(|i| m.row(i).iter().sum()).collect())
        } else {
            None
        }
    }
}

fn cmd_expand(args: &ExpandArgs, format: Format) -> Result<String> {
    match args.y_order {
        Some(ny) => {
            let b = expand_bivariate(&args.expr, args.order, ny)
                .map_err(|e| expr_error("expression", &args.expr, &e))?;
            Ok(output::grid(&b, format))
        }
        None => {
            let s = parse("expression", &args.expr, args.order)?;
            Ok(output::sequence(s.coeffs(), format))
        }
    }
}

fn cmd_matrix(args: &MatrixArgs, format: Format) -> Result<String> {
    let m = args.compute()?;
    Ok(match args.sequence(&m) {
        Some(terms) => output::sequence(&terms, format),
        None => output::matrix(&m, format),
    })
}

fn source_terms(source: &Source) -> Result<Vec<Coef>> {
    match source {
        Source::Expand(args) => {
            if args.y_order.is_some() {
                bail!("b-file comparison needs a univariate expression");
            }
            Ok(parse("expression", &args.expr, args.order)?.into_coeffs())
        }
        Source::Matrix(args) => {
            let m = args.compute()?;
            args.sequence(&m)
                .context("matrix source needs --diag-sums or --row-sums")
        }
    }
}

fn cmd_bfile(
    path: &PathBuf,
    offset: i64,
    source: &Source,
    format: Format,
) -> Result<(String, bool)> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let bfile = BFile::parse(&text).with_context(|| format!("parsing {}", path.display()))?;
    let terms = source_terms(source)?;
    let r = compare(&terms, &bfile, offset);
    let ok = r.full_match();
    let out = match format {
        Format::Json => {
            serde_json::to_string_pretty(&json!({
                "offset": offset,
                "terms": terms.len(),
                "compared": r.compared,
                "matched": r.matched,
                "mismatch": r.mismatch,
                "match": ok,
            }))? + "\n"
        }
        Format::Csv => {
            let (idx, exp, act) = r
                .mismatch
                .as_ref()
                .map_or((String::new(), String::new(), String::new()), |m| {
                    (m.index.to_string(), m.expected.clone(), m.actual.clone())
                });
            format!(
                "compared,matched,mismatch_index,expected,actual\n{},{},{idx},{exp},{act}\n",
                r.compared, r.matched
            )
        }
        Format::Pretty => {
            let mut s = format!(
                "matched {} of {} compared terms (offset {offset})\n",
                r.matched, r.compared
            );
            if let Some(m) = &r.mismatch {
                s += &format!(
                    "first mismatch at term {}: b-file {}, computed {}\n",
                    m.index, m.expected, m.actual
                );
            } else if r.compared < terms.len() {
                s += &format!(
                    "b-file ends after {} of {} terms\n",
                    r.compared,
                    terms.len()
                );
            }
            s
        }
    };
    Ok((out, ok && r.compared > 0))
}

fn cmd_verify(id: &str, order: usize, format: Format) -> Result<(String, bool)> {
    let report = verify::run(id, order)?;
    let out = match format {
        Format::Pretty => report.to_string(),
        Format::Json => report.to_json() + "\n",
        Format::Csv => {
            let mut s = String::from("id,status,detail\n");
            for c in &report.cases {
                let detail = match c.outcome {
                    verify::Outcome::Pass => String::new(),
                    ref o => o.to_string().replace('"', "\"\""),
                };
                s += &format!("{},{},\"{detail}\"\n", c.id, c.outcome.label());
            }
            s
        }
    };
    Ok((out, report.success))
}

fn run(cli: &Cli) -> Result<(String, bool)> {
    match &cli.command {
        Command::Expand(args) => Ok((cmd_expand(args, cli.format)?, true)),
        Command::Matrix(args) => Ok((cmd_matrix(args, cli.format)?, true)),
        Command::Verify { list: true, .. } => Ok((verify::case_ids().join("\n") + "\n", true)),
        Command::Verify { id, order, .. } => {
            cmd_verify(id.as_deref().unwrap_or("all"), *order, cli.format)
        }
        Command::BfileCompare {
            bfile,
            offset,
            source,
        } => cmd_bfile(bfile, *offset, source, cli.format),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((out, ok)) => {
            print!("{out}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
