//! The `nss` command line tool.
//!
//! Exit codes: 0 on success; 1 when there is no witness, no orientation, or a
//! precondition fails; 2 for malformed input or usage. Every failure writes one
//! `ERR <code> <message>` line to stderr.

use std::fmt::Write as _;
use std::path::Path;

use clap::{Parser, Subcommand, ValueEnum};

use crate::error::Error;
use crate::field::{parse_scalar, FieldSpec, FieldValue};
use crate::format_point;
use crate::labeling::{self, Graph, LabelingInstance};
use crate::nss::{self, Grid, MaximalityCheck};
use crate::parse::{format_polynomial, parse_polynomial};
use crate::poly::{Monomial, Polynomial, Ring};

#[derive(Debug, Parser)]
#[command(
    name = "nss",
    version,
    about = "Nonvanishing points and coefficients of polynomials on grids"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, clap::Args)]
struct PolyArgs {
    /// "q" for the rationals or "fp:<p>" for a prime field
    #[arg(long, default_value = "q")]
    field: String,
    /// Comma-separated variable names
    #[arg(long)]
    vars: String,
    /// Polynomial, e.g. "x^2*y - 3/2*x + 1"
    #[arg(long)]
    poly: String,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Strategy {
    Enumerate,
    Recursive,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Coefficient of x^alpha from the values of the polynomial on a grid
    Coeff {
        #[command(flatten)]
        poly: PolyArgs,
        /// Exponent vector, e.g. "2,1"
        #[arg(long)]
        alpha: String,
        /// Grid sets, e.g. "0,1,2;0,1"
        #[arg(long)]
        sets: String,
        /// Also print the coefficient read from the expansion
        #[arg(long)]
        check: bool,
        /// Skip the maximality test on alpha
        #[arg(long)]
        no_maximality_check: bool,
    },
    /// Find a grid point where the polynomial does not vanish
    Witness {
        #[command(flatten)]
        poly: PolyArgs,
        /// Grid sets, e.g. "0,1,2;0,1"
        #[arg(long)]
        sets: String,
        #[arg(long, value_enum, default_value = "enumerate")]
        strategy: Strategy,
        /// Target exponent, required by the recursive strategy
        #[arg(long)]
        alpha: Option<String>,
    },
    /// Separating labeling of a bipartite graph
    Label {
        /// Graph file
        #[arg(long)]
        graph: String,
        /// Outdegree bound; defaults to the smallest feasible one
        #[arg(long)]
        k: Option<usize>,
        /// Degree bound; defaults to the largest vertex polynomial degree
        #[arg(long)]
        l: Option<usize>,
        /// Polynomial in x applied to every vertex, or a file of "<vertex> <expr>" lines
        #[arg(long, default_value = "x")]
        fv: String,
        /// File of "<vertex> a,b,c" lines
        #[arg(long)]
        lists: Option<String>,
    },
    /// The sum over a of prod over b != a of 1/(b - a)
    Lemma {
        /// "q" for the rationals or "fp:<p>" for a prime field
        #[arg(long, default_value = "q")]
        field: String,
        /// Distinct field elements, e.g. "1,2,3"
        #[arg(long)]
        set: String,
    },
    /// Print the canonical form of a polynomial
    Parse {
        #[command(flatten)]
        poly: PolyArgs,
    },
    /// Orient a graph with bounded outdegree
    Orient {
        /// Graph file
        #[arg(long)]
        graph: String,
        /// Outdegree bound; defaults to the smallest feasible one
        #[arg(long)]
        k: Option<usize>,
    },
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Usage(String),
    Io(String),
    NoWitness,
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<crate::error::ParseError> for Failure {
    fn from(e: crate::error::ParseError) -> Self {
        Failure::Lib(e.into())
    }
}

impl Failure {
    fn classify(&self) -> (i32, &'static str, String) {
        match self {
            Failure::Usage(m) => (2, "usage", m.clone()),
            Failure::Io(m) => (2, "io", m.clone()),
            Failure::NoWitness => (
                1,
                "no-witness",
                "polynomial vanishes on the whole grid".into(),
            ),
            Failure::Lib(e) => {
                let (code, tag) = match e {
                    Error::Parse(_) => (2, "parse"),
                    Error::InvalidGraph(_) => (2, "parse"),
                    Error::BadFieldSpec(_) | Error::NotPrime(_) => (2, "field"),
                    Error::BadVariables(_)
                    | Error::ArityMismatch { .. }
                    | Error::VariableMismatch
                    | Error::IndexOutOfRange { .. }
                    | Error::IncompatibleField(..) => (2, "usage"),
                    Error::DuplicateGridElement { .. }
                    | Error::PointNotOnGrid(_)
                    | Error::GridSizeMismatch { .. } => (1, "grid"),
                    Error::DivisionByZero => (1, "division-by-zero"),
                    Error::ConeTooLarge { .. } => (1, "cone-too-large"),
                    Error::Precondition(_) => (1, "precondition"),
                    Error::Internal(_) => (1, "internal"),
                    Error::NotBipartite { .. } => (1, "not-bipartite"),
                    Error::Infeasible { .. } => (1, "infeasible"),
                    Error::InvalidInstance(_) => (1, "instance"),
                    Error::Certificate(_) => (1, "certificate"),
                };
                (code, tag, e.to_string())
            }
        }
    }
}

/// Runs one invocation; `args` includes the program name.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return Outcome {
                    code: 0,
                    stdout: e.render().to_string(),
                    stderr: String::new(),
                };
            }
            let rendered = e.render().to_string();
            let first = rendered
                .lines()
                .find(|l| !l.trim().is_empty())
                .unwrap_or("invalid arguments")
                .trim_start_matches("error: ")
                .to_string();
            return failure_outcome(String::new(), Failure::Usage(first));
        }
    };
    let mut out = String::new();
    match dispatch(cli.command, &mut out) {
        Ok(()) => Outcome {
            code: 0,
            stdout: out,
            stderr: String::new(),
        },
        Err(f) => failure_outcome(out, f),
    }
}

fn failure_outcome(stdout: String, f: Failure) -> Outcome {
    let (code, tag, message) = f.classify();
    let message = message.replace('\n', " ");
    Outcome {
        code,
        stdout,
        stderr: format!("ERR {tag} {message}\n"),
    }
}

fn field(s: &str) -> Result<FieldSpec, Failure> {
    Ok(s.parse::<FieldSpec>()?)
}

fn polynomial(args: &PolyArgs) -> Result<Polynomial, Failure> {
    let spec = field(&args.field)?;
    let vars: Vec<&str> = args
        .vars
        .split(',')
        .map(str::trim)
        .filter(|v| !v.is_empty())
        .collect();
    let ring = Ring::new(vars, spec)?;
    Ok(parse_polynomial(&ring, &args.poly)?)
}

fn scalar_list(spec: FieldSpec, s: &str) -> Result<Vec<FieldValue>, Failure> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            parse_scalar(spec, t).map_err(|_| Failure::Usage(format!("bad scalar {:?}", t.trim())))
        })
        .collect()
}

fn grid(spec: FieldSpec, s: &str) -> Result<Grid, Failure> {
    let sets = s
        .split(';')
        .map(|part| scalar_list(spec, part))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Grid::new(spec, sets)?)
}

fn exponents(s: &str) -> Result<Monomial, Failure> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<u32>()
                .map_err(|_| Failure::Usage(format!("bad exponent {:?}", t.trim())))
        })
        .collect::<Result<Vec<_>, _>>()
        .map(Monomial::new)
}

fn read(path: &str) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Io(format!("{path}: {e}")))
}

fn dispatch(cmd: Command, out: &mut String) -> Result<(), Failure> {
    match cmd {
        Command::Coeff {
            poly,
            alpha,
            sets,
            check,
            no_maximality_check,
        } => {
            let f = polynomial(&poly)?;
            let alpha = exponents(&alpha)?;
            let grid = grid(f.spec(), &sets)?;
            let mode = if no_maximality_check {
                MaximalityCheck::Bypass
            } else {
                MaximalityCheck::Strict
            };
            let value = nss::coefficient_via_formula(&f, &alpha, &grid, mode)?;
            writeln!(out, "{value}").unwrap();
            if check {
                writeln!(out, "direct {}", f.coefficient(&alpha)).unwrap();
            }
        }
        Command::Witness {
            poly,
            sets,
            strategy,
            alpha,
        } => {
            let f = polynomial(&poly)?;
            let grid = grid(f.spec(), &sets)?;
            let report = match strategy {
                Strategy::Enumerate => nss::find_witness_enumerate(&f, &grid)?,
                Strategy::Recursive => {
                    let alpha = alpha.ok_or_else(|| {
                        Failure::Usage("--strategy recursive requires --alpha".into())
                    })?;
                    nss::find_witness_recursive(&f, &exponents(&alpha)?, &grid)?
                }
            };
            match report.witness {
                Some(w) => {
                    writeln!(out, "point {}", format_point(&w.point)).unwrap();
                    writeln!(out, "value {}", w.value).unwrap();
                    writeln!(out, "evaluations {}", report.evaluations_used).unwrap();
                }
                None => {
                    writeln!(out, "NONE").unwrap();
                    return Err(Failure::NoWitness);
                }
            }
        }
        Command::Label {
            graph,
            k,
            l,
            fv,
            lists,
        } => {
            let g = Graph::parse(&read(&graph)?)?;
            let polys = vertex_polys(&fv, g.vertex_count())?;
            let l = l.unwrap_or_else(|| {
                polys
                    .iter()
                    .filter_map(Polynomial::total_degree)
                    .max()
                    .unwrap_or(0) as usize
            });
            let k = match k {
                Some(k) => k,
                None => labeling::min_outdegree_bound(&g).0,
            };
            let lists = lists
                .map(|p| label_lists(&read(&p)?, g.vertex_count()))
                .transpose()?;
            let inst = LabelingInstance::new(g, polys, k, l, lists)?;
            let res = labeling::find_labeling(&inst)?;
            for (v, c) in res.labels.iter().enumerate() {
                writeln!(out, "v {v} {c}").unwrap();
            }
            let ring = inst.ring();
            let target = ring
                .term(res.certificate.target.clone(), FieldSpec::Rationals.one())
                .expect("target lives in the instance ring");
            writeln!(out, "k {k}").unwrap();
            writeln!(out, "l {l}").unwrap();
            writeln!(out, "target {}", format_polynomial(&target)).unwrap();
            writeln!(out, "coefficient {}", res.certificate.coefficient).unwrap();
        }
        Command::Lemma { field: f, set } => {
            let spec = field(&f)?;
            let values = scalar_list(spec, &set)?;
            writeln!(out, "{}", nss::lemma_sum(&values)?).unwrap();
        }
        Command::Parse { poly } => {
            writeln!(out, "{}", format_polynomial(&polynomial(&poly)?)).unwrap();
        }
        Command::Orient { graph, k } => {
            let g = Graph::parse(&read(&graph)?)?;
            let result = match k {
                Some(k) => labeling::orient_bounded_outdegree(&g, k).map(|o| (k, o)),
                None => Ok(labeling::min_outdegree_bound(&g)),
            };
            match result {
                Ok((k, o)) => {
                    writeln!(out, "k {k}").unwrap();
                    for (tail, head) in &o.arcs {
                        writeln!(out, "e {tail} {head}").unwrap();
                    }
                }
                Err(e) => {
                    writeln!(out, "INFEASIBLE").unwrap();
                    return Err(e.into());
                }
            }
        }
    }
    Ok(())
}

fn univariate(text: &str) -> Result<Polynomial, Failure> {
    let ring = Ring::new(["x"], FieldSpec::Rationals)?;
    Ok(parse_polynomial(&ring, text)?)
}

/// `--fv` names a file of `<vertex> <expr>` lines when such a file exists, else an expression in `x`.
fn vertex_polys(fv: &str, n: usize) -> Result<Vec<Polynomial>, Failure> {
    if !Path::new(fv).is_file() {
        return Ok(vec![univariate(fv)?; n]);
    }
    let mut polys: Vec<Option<Polynomial>> = vec![None; n];
    for line in read(fv)?.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (v, expr) = line
            .split_once(char::is_whitespace)
            .ok_or_else(|| Failure::Usage(format!("bad vertex polynomial line {line:?}")))?;
        let v: usize = v
            .parse()
            .ok()
            .filter(|&v| v < n)
            .ok_or_else(|| Failure::Usage(format!("bad vertex {v:?}")))?;
        polys[v] = Some(univariate(expr)?);
    }
    polys
        .into_iter()
        .enumerate()
        .map(|(v, p)| p.ok_or_else(|| Failure::Usage(format!("no polynomial for vertex {v}"))))
        .collect()
}

fn label_lists(text: &str, n: usize) -> Result<Vec<Vec<FieldValue>>, Failure> {
    let mut lists: Vec<Option<Vec<FieldValue>>> = vec![None; n];
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (v, values) = line
            .split_once(char::is_whitespace)
            .ok_or_else(|| Failure::Usage(format!("bad label list line {line:?}")))?;
        let v: usize = v
            .parse()
            .ok()
            .filter(|&v| v < n)
            .ok_or_else(|| Failure::Usage(format!("bad vertex {v:?}")))?;
        lists[v] = Some(scalar_list(FieldSpec::Rationals, values)?);
    }
    lists
        .into_iter()
        .enumerate()
        .map(|(v, l)| l.ok_or_else(|| Failure::Usage(format!("no label list for vertex {v}"))))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Outcome {
        run(std::iter::once("nss").chain(args.iter().copied()))
    }

    #[test]
    fn coeff_example() {
        let o = run_args(&[
            "coeff", "--field", "q", "--vars", "x,y", "--poly", "x*y", "--alpha", "1,1", "--sets",
            "0,1;0,1",
        ]);
        assert_eq!(
            (o.code, o.stdout.as_str(), o.stderr.as_str()),
            (0, "1\n", "")
        );
    }

    #[test]
    fn usage_errors_exit_two() {
        let o = run_args(&["coeff", "--vars", "x"]);
        assert_eq!(o.code, 2);
        assert!(o.stderr.starts_with("ERR usage "));
        assert_eq!(o.stderr.lines().count(), 1);
        let o = run_args(&["parse", "--vars", "x", "--poly", "x^-1"]);
        assert_eq!(o.code, 2);
        assert!(o.stderr.starts_with("ERR parse "));
    }

    #[test]
    fn recursive_requires_alpha() {
        let o = run_args(&[
            "witness",
            "--vars",
            "x",
            "--poly",
            "x",
            "--sets",
            "0,1",
            "--strategy",
            "recursive",
        ]);
        assert_eq!(o.code, 2);
    }
}
