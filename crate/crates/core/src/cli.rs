//! Command-line front end. [`run`] does all the work and returns the exit
//! status with the text to print, so it can be tested without a process.
//!
//! Exit status: 0 for success or a positive verdict, 1 for a well-formed
//! negative verdict, 2 for usage and input errors.

use clap::{Args, Parser, Subcommand};

use crate::catalog::generate_catalog;
use crate::coordinatize::{build_problem, enumerate_representations, least_basis, Position, DEFAULT_MAX_UNKNOWNS};
use crate::equivalence::{equivalent, Relation};
use crate::error::{Error, Result};
use crate::extension::{coextend_all, extend_all, stability_of};
use crate::field::{ArithOp, Field};
use crate::io::{parse_field_header, read_matrix, read_matroid};
use crate::matrix::{Label, Matrix, StandardForm};
use crate::matroid::Matroid;
use crate::report::{self, Format};

pub const JOBS_ENV: &str = "MATROID_FORGE_JOBS";

#[derive(Parser, Debug)]
#[command(name = "matroid-forge", version, about = "Matroid representations over finite fields")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Global {
    /// Worker threads (falls back to MATROID_FORGE_JOBS, then 1).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Machine-readable JSON output.
    #[arg(long, global = true, conflicts_with = "plain")]
    json: bool,
    /// Aligned plain-text output (the default).
    #[arg(long, global = true)]
    plain: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Field parameters, or one arithmetic operation: add sub mul neg inv pow frob.
    Field {
        /// Field order q.
        q: u32,
        /// Reduction polynomial coefficients c0,..,c{k-1}.
        #[arg(long, value_delimiter = ',')]
        poly: Option<Vec<u8>>,
        op: Option<String>,
        operands: Vec<u32>,
    },
    /// Test two matrices for equivalence.
    Equiv {
        a: String,
        b: String,
        #[arg(long, default_value = "geometric")]
        relation: String,
        /// Print the transformation found.
        #[arg(long)]
        witness: bool,
    },
    /// Test two matroids (matroid files, matrix files or builtins) for isomorphism.
    Iso { a: String, b: String },
    /// Dual representation of a matrix.
    Dual {
        input: String,
        /// Basis for the standard form, e.g. 1,2,3.
        #[arg(long, value_delimiter = ',')]
        basis: Option<Vec<Label>>,
    },
    /// Enumerate the representations of a matroid over GF(q).
    Coordinatize {
        #[arg(long)]
        matroid: String,
        #[arg(long)]
        field: u32,
        #[arg(long, value_delimiter = ',')]
        basis: Option<Vec<Label>>,
        /// Entries pinned to one, as row:column label pairs.
        #[arg(long, value_delimiter = ',')]
        ones: Option<Vec<String>>,
        #[arg(long, default_value_t = DEFAULT_MAX_UNKNOWNS)]
        max_unknowns: usize,
    },
    /// Simple single-element extensions of a representation.
    Extend {
        input: String,
        #[arg(long, value_delimiter = ',')]
        basis: Option<Vec<Label>>,
    },
    /// Single-element coextensions of a representation.
    Coextend {
        input: String,
        #[arg(long, value_delimiter = ',')]
        basis: Option<Vec<Label>>,
    },
    /// Breadth-first catalog of extensions from seed matrices.
    Catalog {
        #[arg(required = true)]
        seeds: Vec<String>,
        #[arg(long, default_value_t = 7)]
        max_n: usize,
    },
}

/// Exit status and text for one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub output: String,
}

impl Outcome {
    fn ok(output: String) -> Self {
        Outcome { code: 0, output }
    }

    fn verdict(positive: bool, output: String) -> Self {
        Outcome { code: if positive { 0 } else { 1 }, output }
    }

    fn error(msg: impl std::fmt::Display) -> Self {
        Outcome { code: 2, output: format!("error: {msg}\n") }
    }
}

fn jobs(flag: Option<usize>) -> std::result::Result<usize, String> {
    let n = match flag {
        Some(n) => n,
        None => match std::env::var(JOBS_ENV) {
            Ok(v) => v.trim().parse().map_err(|_| format!("{JOBS_ENV} must be a positive integer, got `{v}`"))?,
            Err(_) => 1,
        },
    };
    if n == 0 {
        return Err("--jobs must be at least 1".into());
    }
    Ok(n)
}

pub fn run<I, S>(argv: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return Outcome { code, output: e.render().to_string() };
        }
    };
    let threads = match jobs(cli.global.jobs) {
        Ok(n) => n,
        Err(msg) => return Outcome::error(msg),
    };
    let format = if cli.global.json { Format::Json } else { Format::Plain };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
        Ok(p) => p,
        Err(e) => return Outcome::error(e),
    };
    pool.install(|| dispatch(cli.command, format)).unwrap_or_else(Outcome::error)
}

fn standard(m: Matrix, basis: Option<&[Label]>) -> Result<StandardForm> {
    match basis {
        Some(b) => m.to_standard_form(b),
        None => match StandardForm::new(m.clone()) {
            Ok(sf) => Ok(sf),
            Err(_) => {
                let b = least_basis(&Matroid::of_matrix(&m));
                m.to_standard_form(&b)
            }
        },
    }
}

fn parse_ones(items: &[String]) -> Result<Vec<Position>> {
    items
        .iter()
        .map(|s| {
            let bad = || Error::Usage(format!("--ones entry `{s}` is not row:column"));
            let (r, c) = s.split_once(':').ok_or_else(bad)?;
            Ok((r.trim().parse().map_err(|_| bad())?, c.trim().parse().map_err(|_| bad())?))
        })
        .collect()
}

fn field_of(q: u32, poly: Option<&[u8]>) -> Result<Field> {
    let q_tok = q.to_string();
    let coeffs: Vec<String> = poly.unwrap_or(&[]).iter().map(|c| c.to_string()).collect();
    let mut toks = vec!["field", q_tok.as_str()];
    if poly.is_some() {
        toks.push("poly");
        toks.extend(coeffs.iter().map(String::as_str));
    }
    parse_field_header(&toks, 0)
}

fn dispatch(command: Command, format: Format) -> Result<Outcome> {
    match command {
        Command::Field { q, poly, op, operands } => {
            let f = field_of(q, poly.as_deref())?;
            let result = match op.as_deref() {
                None => None,
                Some("frob") => {
                    let [e, j] = operands[..] else {
                        return Err(Error::Arity { op: "frob", expected: 2, got: operands.len() });
                    };
                    Some(f.frobenius(f.element(e)?, j))
                }
                Some(name) => {
                    let op = ArithOp::parse(name)
                        .ok_or_else(|| Error::Usage(format!("unknown operation `{name}`")))?;
                    Some(f.arith(op, &operands)?)
                }
            };
            Ok(Outcome::ok(report::field(&f, result, format)))
        }
        Command::Equiv { a, b, relation, witness } => {
            let rel = Relation::parse(&relation)
                .ok_or_else(|| Error::Usage(format!("unknown relation `{relation}`")))?;
            let (ma, mb) = (read_matrix(&a)?, read_matrix(&b)?);
            let w = equivalent(&ma, &mb, rel)?;
            Ok(Outcome::verdict(w.is_some(), report::equivalence(rel, w.as_ref(), witness, format)))
        }
        Command::Iso { a, b } => {
            let (ma, mb) = (read_matroid(&a)?, read_matroid(&b)?);
            let perm = ma.isomorphism(&mb);
            Ok(Outcome::verdict(perm.is_some(), report::isomorphism(&ma, &mb, perm.as_deref(), format)))
        }
        Command::Dual { input, basis } => {
            let sf = standard(read_matrix(&input)?, basis.as_deref())?;
            Ok(Outcome::ok(report::dual(sf.dual().matrix(), format)))
        }
        Command::Coordinatize { matroid, field, basis, ones, max_unknowns } => {
            let m = read_matroid(&matroid)?;
            let f = Field::from_order(field)?;
            let pins = ones.as_deref().map(parse_ones).transpose()?;
            let prob = build_problem(&m, basis.as_deref(), pins.as_deref())?;
            let r = enumerate_representations(&prob, &f, Some(max_unknowns))?;
            Ok(Outcome::verdict(r.representable, report::coordinatization(&r, format)))
        }
        Command::Extend { input, basis } => {
            let sf = standard(read_matrix(&input)?, basis.as_deref())?;
            let r = extend_all(&sf)?;
            let stability = stability_of(&r)?;
            Ok(Outcome::ok(report::extensions(&r, "extension", Some(&stability), format)))
        }
        Command::Coextend { input, basis } => {
            let sf = standard(read_matrix(&input)?, basis.as_deref())?;
            let r = coextend_all(&sf)?;
            Ok(Outcome::ok(report::extensions(&r, "coextension", None, format)))
        }
        Command::Catalog { seeds, max_n } => {
            let seeds = seeds
                .iter()
                .map(|s| standard(read_matrix(s)?, None))
                .collect::<Result<Vec<_>>>()?;
            let entries = generate_catalog(&seeds, max_n)?;
            Ok(Outcome::ok(report::catalog(&entries, format)))
        }
    }
}
