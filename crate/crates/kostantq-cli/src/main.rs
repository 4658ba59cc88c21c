//! Command-line front end for the kostantq library.
//!
//! Every subcommand prints a human-readable result by default and a
//! deterministic JSON document under `--json`.  Exit codes: 0 on
//! success, 2 on domain errors (malformed weights, non-strict
//! partitions, trace mismatches, ...), 3 when `--oracle` detects a
//! disagreement between two independent routes, 64 on usage errors.

use clap::{Parser, Subcommand};
use num_bigint::BigInt;

use kostantq::branching_gt::{branch, enumerate_gt, gt_weight, twisted_dim_via_gt, twisted_mult_via_gt};
use kostantq::chamber::{a2_closed_form, fit_chamber_polynomial, is_unimodular, root_matrix};
use kostantq::multiplicity::{
    classical_weight_multiplicity, decompose_twisted, twisted_dimension,
    twisted_tensor_multiplicity, twisted_tensor_via_irreducibles, twisted_weight_multiplicity,
};
use kostantq::partition_fn::{
    kostant, kostant_q, kostant_q_classical, kostant_restricted, kq_inclusion_exclusion,
    subset_sum_p,
};
use kostantq::symmetric_fn::{schur, twisted_character, weight_coeff};
use kostantq::{Partition, QPolynomial, RootSystemA, Weight};

#[derive(Parser)]
#[command(
    name = "kostantq",
    version,
    about = "Kostant partition counts, q-analogues, and twisted type-A representation data"
)]
struct Cli {
    /// Emit machine-readable JSON instead of text
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Count the ways to write a weight as a sum of positive roots
    Kostant {
        /// Rank of the root system
        #[arg(short)]
        n: usize,
        /// Target weight, e.g. 1,0,-1
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        /// Count only sums of pairwise distinct roots
        #[arg(long)]
        distinct: bool,
        /// Use only the positive roots with these indices, e.g. 0,2
        #[arg(long)]
        subset: Option<String>,
    },
    /// Polynomial in q grading each sum by the number of distinct roots it uses
    KostantQ {
        /// Rank of the root system
        #[arg(short)]
        n: usize,
        /// Target weight, e.g. 1,0,-1
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        /// Grade by the total number of roots with multiplicity instead
        #[arg(long)]
        classical: bool,
        /// Compute through the subset inclusion-exclusion formula (rank <= 3)
        #[arg(long)]
        ie: bool,
        /// Evaluate the polynomial at this integer value of q
        #[arg(long, allow_hyphen_values = true)]
        q: Option<i64>,
    },
    /// Weight multiplicity in a twisted (or, with --classical, ordinary) representation
    Mult {
        /// Number of variables, i.e. the size k of gl_k
        #[arg(short)]
        k: usize,
        /// Highest weight; strictly decreasing and nonnegative unless --classical
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        /// Weight whose multiplicity is requested
        #[arg(long, allow_hyphen_values = true)]
        nu: String,
        /// Ordinary irreducible representation instead of the twisted one
        #[arg(long)]
        classical: bool,
        /// Sum Gelfand-Tsetlin diagram contributions instead of the signed count
        #[arg(long)]
        via_gt: bool,
        /// Cross-check against the character coefficient; disagreement exits 3
        #[arg(long)]
        oracle: bool,
    },
    /// Multiplicity of one twisted representation in a product of two others
    Tensor {
        /// Number of variables, i.e. the size k of gl_k
        #[arg(short)]
        k: usize,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        #[arg(long, allow_hyphen_values = true)]
        nu: String,
        /// Compute through classical Littlewood-Richardson data instead
        #[arg(long)]
        via_irreducibles: bool,
        /// Compare both routes; disagreement exits 3
        #[arg(long)]
        oracle: bool,
    },
    /// Decompose a twisted representation into ordinary irreducibles
    Decompose {
        /// Number of variables, i.e. the size k of gl_k
        #[arg(short)]
        k: usize,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
    },
    /// Restrict a twisted representation one level down
    Branch {
        /// Number of variables before restricting
        #[arg(short)]
        k: usize,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
    },
    /// List the twisted Gelfand-Tsetlin diagrams below a strict partition
    Gt {
        /// Number of variables, i.e. the length of the top row
        #[arg(short)]
        k: usize,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        /// Keep only diagrams of this weight
        #[arg(long, allow_hyphen_values = true)]
        weight: Option<String>,
    },
    /// Dimension of a twisted representation
    Dim {
        /// Number of variables, i.e. the size k of gl_k
        #[arg(short)]
        k: usize,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        /// Sum Gelfand-Tsetlin diagram contributions instead of characters
        #[arg(long)]
        via_gt: bool,
    },
    /// Closed-form q-count for rank 2, from the chamber case split
    ChamberA2 {
        /// Trace-zero weight with three coordinates
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        /// Evaluate the polynomial at this integer value of q
        #[arg(long, allow_hyphen_values = true)]
        q: Option<i64>,
    },
    /// Check that every maximal minor of the positive-root matrix is 0 or +-1
    Unimodular {
        /// Rank of the root system
        #[arg(short)]
        n: usize,
    },
    /// Fit the chamber polynomial through sample points in root coordinates
    Fit {
        /// Rank of the root system
        #[arg(short)]
        n: usize,
        /// Sample point in root coordinates, e.g. 3,1; repeatable
        #[arg(long = "point", allow_hyphen_values = true)]
        points: Vec<String>,
    },
}

enum Failure {
    Domain(String),
    Oracle(String),
}

impl From<kostantq::Error> for Failure {
    fn from(e: kostantq::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

fn parse_weight(s: &str) -> Result<Weight, Failure> {
    Ok(s.parse::<Weight>()?)
}

fn parse_partition(s: &str) -> Result<Partition, Failure> {
    Ok(Partition::from_weight(&parse_weight(s)?)?)
}

fn parse_coords(s: &str) -> Result<Vec<i64>, Failure> {
    Ok(parse_weight(s)?.coords)
}

fn parse_indices(s: &str) -> Result<Vec<usize>, Failure> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Failure::Domain(format!("invalid root index list {s:?}")))
        })
        .collect()
}

fn scalar_output(json: bool, v: impl ToString) -> String {
    if json {
        serde_json::json!({ "value": v.to_string() }).to_string()
    } else {
        v.to_string()
    }
}

fn qpoly_output(json: bool, p: &QPolynomial, q: Option<i64>) -> String {
    match q {
        Some(x) => scalar_output(json, p.evaluate(&BigInt::from(x))),
        None if json => p.to_json().to_string(),
        None => p.to_string(),
    }
}

fn glk(k: usize) -> Result<RootSystemA, Failure> {
    if k < 2 {
        return Err(Failure::Domain(format!(
            "k must be at least 2 to form a root system, got {k}"
        )));
    }
    Ok(RootSystemA::new(k - 1)?)
}

fn run(cli: &Cli) -> Result<String, Failure> {
    let json = cli.json;
    match &cli.cmd {
        Cmd::Kostant {
            n,
            mu,
            distinct,
            subset,
        } => {
            let rs = RootSystemA::new(*n)?;
            let w = parse_weight(mu)?;
            let value = match (distinct, subset) {
                (true, Some(_)) => {
                    return Err(Failure::Domain(
                        "--distinct and --subset cannot be combined".into(),
                    ))
                }
                (true, None) => subset_sum_p(&rs, &w)?,
                (false, None) => kostant(&rs, &w)?,
                (false, Some(s)) => kostant_restricted(&rs, &parse_indices(s)?, &w)?,
            };
            Ok(scalar_output(json, value))
        }
        Cmd::KostantQ {
            n,
            mu,
            classical,
            ie,
            q,
        } => {
            let rs = RootSystemA::new(*n)?;
            let w = parse_weight(mu)?;
            let poly = match (classical, ie) {
                (true, true) => {
                    return Err(Failure::Domain(
                        "--classical and --ie cannot be combined".into(),
                    ))
                }
                (true, false) => kostant_q_classical(&rs, &w)?,
                (false, true) => kq_inclusion_exclusion(&rs, &w)?,
                (false, false) => kostant_q(&rs, &w)?,
            };
            Ok(qpoly_output(json, &poly, *q))
        }
        Cmd::Mult {
            k,
            lambda,
            nu,
            classical,
            via_gt,
            oracle,
        } => {
            if *classical && *via_gt {
                return Err(Failure::Domain(
                    "--classical and --via-gt cannot be combined".into(),
                ));
            }
            let rs = glk(*k)?;
            let lam = parse_weight(lambda)?;
            let target = parse_weight(nu)?;
            let value = if *classical {
                classical_weight_multiplicity(&rs, &lam, &target)?
            } else if *via_gt {
                twisted_mult_via_gt(&Partition::from_weight(&lam)?, *k, &target)?
            } else {
                twisted_weight_multiplicity(&rs, &lam, &target)?
            };
            if *oracle {
                let lam_p = Partition::from_weight(&lam)?;
                let chi = if *classical {
                    schur(&lam_p, *k)?
                } else {
                    twisted_character(&lam_p, *k)?
                };
                let expected = weight_coeff(&chi, &target);
                if expected != value {
                    return Err(Failure::Oracle(format!(
                        "got {value}, character coefficient is {expected}"
                    )));
                }
            }
            Ok(scalar_output(json, value))
        }
        Cmd::Tensor {
            k,
            lambda,
            mu,
            nu,
            via_irreducibles,
            oracle,
        } => {
            let rs = glk(*k)?;
            let lam = parse_weight(lambda)?;
            let mu_w = parse_weight(mu)?;
            let nu_w = parse_weight(nu)?;
            let value = if *via_irreducibles {
                twisted_tensor_via_irreducibles(&rs, &lam, &mu_w, &nu_w)?
            } else {
                twisted_tensor_multiplicity(&rs, &lam, &mu_w, &nu_w)?
            };
            if *oracle {
                let other = if *via_irreducibles {
                    twisted_tensor_multiplicity(&rs, &lam, &mu_w, &nu_w)?
                } else {
                    twisted_tensor_via_irreducibles(&rs, &lam, &mu_w, &nu_w)?
                };
                if other != value {
                    return Err(Failure::Oracle(format!(
                        "routes disagree: {value} vs {other}"
                    )));
                }
            }
            Ok(scalar_output(json, value))
        }
        Cmd::Decompose { k, lambda } => {
            let rs = glk(*k)?;
            let d = decompose_twisted(&rs, &parse_weight(lambda)?)?;
            if json {
                Ok(d.table.to_json().to_string())
            } else {
                Ok(d.table
                    .entries
                    .iter()
                    .rev()
                    .map(|(w, m)| format!("{w}: {m}"))
                    .collect::<Vec<_>>()
                    .join("\n"))
            }
        }
        Cmd::Branch { k, lambda } => {
            let rows = branch(&parse_partition(lambda)?, *k)?;
            if json {
                let items = rows
                    .iter()
                    .map(|(nu, m)| {
                        serde_json::json!({ "nu": nu.to_string(), "mult": m.to_string() })
                    })
                    .collect();
                Ok(serde_json::Value::Array(items).to_string())
            } else {
                Ok(rows
                    .iter()
                    .map(|(nu, m)| format!("{nu}: {m}"))
                    .collect::<Vec<_>>()
                    .join("\n"))
            }
        }
        Cmd::Gt { k, lambda, weight } => {
            let mut diagrams = enumerate_gt(&parse_partition(lambda)?, *k)?;
            if let Some(w) = weight {
                let target = parse_weight(w)?;
                if target.dim() != *k {
                    return Err(kostantq::Error::DimensionMismatch {
                        expected: *k,
                        found: target.dim(),
                    }
                    .into());
                }
                diagrams.retain(|d| gt_weight(d) == target);
            }
            if json {
                Ok(serde_json::Value::Array(diagrams.iter().map(|d| d.to_json()).collect())
                    .to_string())
            } else {
                Ok(diagrams
                    .iter()
                    .map(|d| {
                        d.rows()
                            .iter()
                            .map(ToString::to_string)
                            .collect::<Vec<_>>()
                            .join(" / ")
                    })
                    .collect::<Vec<_>>()
                    .join("\n"))
            }
        }
        Cmd::Dim { k, lambda, via_gt } => {
            let value = if *via_gt {
                twisted_dim_via_gt(&parse_partition(lambda)?, *k)?
            } else {
                twisted_dimension(&glk(*k)?, &parse_weight(lambda)?)?
            };
            Ok(scalar_output(json, value))
        }
        Cmd::ChamberA2 { mu, q } => {
            let poly = a2_closed_form(&parse_weight(mu)?)?;
            Ok(qpoly_output(json, &poly, *q))
        }
        Cmd::Unimodular { n } => {
            let result = is_unimodular(&root_matrix(*n)?);
            if json {
                Ok(serde_json::json!({ "unimodular": result }).to_string())
            } else {
                Ok(result.to_string())
            }
        }
        Cmd::Fit { n, points } => {
            let rs = RootSystemA::new(*n)?;
            let m = root_matrix(*n)?;
            let pts = points
                .iter()
                .map(|p| parse_coords(p))
                .collect::<Result<Vec<_>, _>>()?;
            let chamber = fit_chamber_polynomial(&m, &pts, &rs)?;
            if json {
                Ok(chamber.to_json().to_string())
            } else {
                let sig = chamber
                    .signature
                    .iter()
                    .map(|s| s.as_str())
                    .collect::<Vec<_>>()
                    .join(" ");
                let poly = chamber
                    .fitted
                    .as_ref()
                    .map_or_else(|| "-".to_owned(), |p| p.to_text("a"));
                Ok(format!("signature: {sig}\npolynomial: {poly}"))
            }
        }
    }
}

/// Validates the optional KOSTANTQ_THREADS cap.  The compute kernels
/// are single-threaded, so any positive cap is honored as-is.
fn thread_cap() -> Result<(), String> {
    match std::env::var("KOSTANTQ_THREADS") {
        Err(std::env::VarError::NotPresent) => Ok(()),
        Err(std::env::VarError::NotUnicode(_)) => {
            Err("KOSTANTQ_THREADS is not valid unicode".into())
        }
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(t) if t >= 1 => Ok(()),
            _ => Err(format!("KOSTANTQ_THREADS must be a positive integer, got {v:?}")),
        },
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => 0,
                _ => 64,
            };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    if let Err(msg) = thread_cap() {
        eprintln!("error: {msg}");
        std::process::exit(2);
    }
    match run(&cli) {
        Ok(out) => {
            use std::io::Write;
            // A closed pipe downstream is not our error; just stop.
            if writeln!(std::io::stdout(), "{out}").is_err() {
                std::process::exit(0);
            }
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            std::process::exit(2);
        }
        Err(Failure::Oracle(msg)) => {
            eprintln!("oracle mismatch: {msg}");
            std::process::exit(3);
        }
    }
}
