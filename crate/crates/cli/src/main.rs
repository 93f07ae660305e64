//! `grm` — batch CLI for generalized Reed-Muller codes over small fields.
//!
//! Structured output is JSON on stdout; human-readable progress goes to
//! stderr. Exit codes: 0 success, 2 usage or input error, 3 verification
//! failure (a weight or classification that contradicts what the
//! parameters promise).

use clap::{Parser, Subcommand, ValueEnum};
use grm_core::classify::{classify_any, ClassTag};
use grm_core::grm::{
    construct_min, construct_point_mass, construct_second_a, construct_second_b,
    construct_second_s0, construct_second_s1, construct_second_s1_q3, construct_tm1_second,
    S0Variant,
};
use grm_core::io::{ClassificationDoc, CodewordDoc};
use grm_core::search::{enumerate_low_weight, DEFAULT_BUDGET};
use grm_core::{blocking, selftest, CodeParams, Elem, FuncTable};
use std::path::PathBuf;
use std::process::ExitCode;

const EXIT_USAGE: u8 = 2;
const EXIT_VERIFICATION: u8 = 3;

#[derive(Parser)]
#[command(name = "grm", version, about = "Generalized Reed-Muller codes: weights, low-weight codeword families, classification, exhaustive verification")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the minimum and second weight of R_q(r, m)
    Weights {
        #[arg(long)]
        q: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Construct a canonical codeword of one low-weight family
    Construct {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        q: usize,
        #[arg(long)]
        m: usize,
        /// Code order; unused for point-mass
        #[arg(long)]
        r: Option<usize>,
        /// Comma-separated element indices, e.g. "1,2"
        #[arg(long)]
        roots: Option<String>,
        /// Comma-separated slope indices for the pencil families
        #[arg(long)]
        slopes: Option<String>,
        /// Single root for the ternary s=1 family
        #[arg(long)]
        root: Option<u8>,
        /// Transversal axis (0-based) for the parallel family
        #[arg(long)]
        axis: Option<usize>,
        /// Semicolon-separated points for point-mass, e.g. "0,0;1,1;1,0;0,1"
        #[arg(long)]
        points: Option<String>,
        /// Comma-separated coefficients for point-mass
        #[arg(long)]
        coeffs: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Classify a codeword file against its characterized configurations
    Classify {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exhaustively enumerate low-weight codewords
    Enumerate {
        #[arg(long)]
        q: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        r: usize,
        /// Record weights up to this cutoff (default: the second weight)
        #[arg(long)]
        cutoff: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Also write the histogram as CSV
        #[arg(long)]
        csv: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Blocking sets of the affine plane F_q²
    Blocking {
        #[command(subcommand)]
        cmd: BlockingCmd,
    },
    /// Run the acceptance criteria and report pass/fail per criterion
    Selftest {
        /// Comma-separated criterion ids, e.g. "1,3,8" (default: all)
        #[arg(long)]
        criteria: Option<String>,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long, default_value_t = selftest::DEFAULT_SEED)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum BlockingCmd {
    /// Decide whether a point set is a blocking set of order n
    Check {
        #[arg(long)]
        q: usize,
        #[arg(long)]
        n: usize,
        /// Semicolon-separated points, e.g. "0,0;1,2;2,1"
        #[arg(long)]
        points: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exhaustive minimum-size search over all subsets (q ≤ 4)
    Search {
        #[arg(long)]
        q: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exhaustive bridge check over R_q(b, 2)
    Prop42 {
        #[arg(long)]
        q: usize,
        #[arg(long)]
        b: usize,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    /// Minimum-weight parallel stack
    Min,
    /// Second weight, parallel flats minus a transversal
    #[value(alias = "a")]
    SecondA,
    /// Second weight, pencil through a common flat
    #[value(alias = "b")]
    SecondB,
    /// s = 0, two parallel flats minus a transversal
    S0Parallel,
    /// s = 0, two crossing flats minus their intersection
    S0Pencil,
    /// s = 1, q ≥ 4: an affine flat
    S1,
    /// s = 1, q = 3: the ternary two-slice shape
    #[value(name = "s1-q3")]
    S1Q3,
    /// t = m−1: a few points on a line
    Tm1,
    /// Weighted sum of point indicators with degree certificate
    PointMass,
}

enum CliError {
    Usage(String),
    Verification(String),
}

impl CliError {
    fn usage(e: impl std::fmt::Display) -> Self {
        CliError::Usage(e.to_string())
    }
    fn verification(e: impl std::fmt::Display) -> Self {
        CliError::Verification(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(CliError::Verification(msg)) => {
            eprintln!("verification failure: {msg}");
            ExitCode::from(EXIT_VERIFICATION)
        }
    }
}

fn emit(out: Option<&PathBuf>, json: &str) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, format!("{json}\n")).map_err(CliError::usage),
        None => {
            println!("{json}");
            Ok(())
        }
    }
}

fn to_json<T: serde::Serialize>(value: &T) -> Result<String, CliError> {
    serde_json::to_string_pretty(value).map_err(CliError::usage)
}

fn parse_elems(spec: &str) -> Result<Vec<Elem>, CliError> {
    spec.split(',')
        .map(|s| {
            s.trim()
                .parse::<u8>()
                .map(Elem)
                .map_err(|_| CliError::Usage(format!("bad element index `{s}`")))
        })
        .collect()
}

fn parse_points(spec: &str) -> Result<Vec<Vec<Elem>>, CliError> {
    spec.split(';').map(parse_elems).collect()
}

fn code_params(q: usize, m: usize, r: usize) -> Result<CodeParams, CliError> {
    // GF(2) arithmetic exists in the library, but the weight formulas and
    // classification machinery start at q = 3.
    if q < 3 {
        return Err(CliError::Usage(format!(
            "q = {q} is below the supported code range; use q ∈ {{3, 4, 5, 7, 8, 9}}"
        )));
    }
    let field = grm_core::shared_field(q).map_err(CliError::usage)?;
    CodeParams::new(field, m, r).map_err(CliError::usage)
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.cmd {
        Cmd::Weights { q, m, r, out } => {
            let params = code_params(q, m, r)?;
            let report = params.weight_report();
            emit(out.as_ref(), &to_json(&report)?)
        }
        Cmd::Construct {
            family,
            q,
            m,
            r,
            roots,
            slopes,
            root,
            axis,
            points,
            coeffs,
            out,
        } => {
            let roots = roots.as_deref().map(parse_elems).transpose()?;
            let slopes = slopes.as_deref().map(parse_elems).transpose()?;
            let need_r = || {
                r.ok_or_else(|| CliError::Usage("--r is required for this family".to_string()))
            };
            let table = match family {
                Family::Min => construct_min(&code_params(q, m, need_r()?)?, roots.as_deref(), None)
                    .map_err(CliError::usage)?,
                Family::SecondA => {
                    construct_second_a(&code_params(q, m, need_r()?)?, roots.as_deref(), axis)
                        .map_err(CliError::usage)?
                }
                Family::SecondB => {
                    construct_second_b(&code_params(q, m, need_r()?)?, slopes.as_deref())
                        .map_err(CliError::usage)?
                }
                Family::S0Parallel => construct_second_s0(
                    &code_params(q, m, need_r()?)?,
                    S0Variant::Parallel,
                    roots.as_deref(),
                )
                .map_err(CliError::usage)?,
                Family::S0Pencil => construct_second_s0(
                    &code_params(q, m, need_r()?)?,
                    S0Variant::Pencil,
                    slopes.as_deref(),
                )
                .map_err(CliError::usage)?,
                Family::S1 => construct_second_s1(&code_params(q, m, need_r()?)?)
                    .map_err(CliError::usage)?,
                Family::S1Q3 => {
                    construct_second_s1_q3(&code_params(q, m, need_r()?)?, root.map(Elem))
                        .map_err(CliError::usage)?
                }
                Family::Tm1 => {
                    construct_tm1_second(&code_params(q, m, need_r()?)?, roots.as_deref())
                        .map_err(CliError::usage)?
                }
                Family::PointMass => {
                    let field = grm_core::shared_field(q).map_err(CliError::usage)?;
                    let pts = points.as_deref().ok_or_else(|| {
                        CliError::Usage("--points is required for point-mass".to_string())
                    })?;
                    let cfs = coeffs.as_deref().ok_or_else(|| {
                        CliError::Usage("--coeffs is required for point-mass".to_string())
                    })?;
                    let pts = parse_points(pts)?;
                    let cfs = parse_elems(cfs)?;
                    let (table, cert) =
                        construct_point_mass(&field, m, &pts, &cfs).map_err(CliError::usage)?;
                    eprintln!(
                        "degree certificate: sum_zero={}, moment_zero={}, bound={}, degree={}",
                        cert.sum_zero, cert.moment_zero, cert.claimed_bound, cert.verified_degree
                    );
                    table
                }
            };
            eprintln!("constructed codeword of weight {}", table.weight());
            emit(out.as_ref(), &to_json(&CodewordDoc::from_table(&table))?)
        }
        Cmd::Classify { input, r, out } => {
            let json = std::fs::read_to_string(&input).map_err(CliError::usage)?;
            let table = grm_core::io::parse_codeword(&json).map_err(CliError::usage)?;
            let params = code_params(table.q(), table.m(), r)?;
            classify_to_doc(&table, &params, out.as_ref())
        }
        Cmd::Enumerate {
            q,
            m,
            r,
            cutoff,
            budget,
            jobs,
            csv,
            out,
        } => {
            let params = code_params(q, m, r)?;
            let cutoff = cutoff
                .or_else(|| params.second_weight().map(|(w, _)| w))
                .unwrap_or_else(|| params.min_weight());
            let report = enumerate_low_weight(&params, cutoff, budget, jobs)
                .map_err(CliError::usage)?;
            eprintln!(
                "enumerated {} codewords in {} ms",
                report.total_codewords, report.elapsed_ms
            );
            if let Some(path) = csv {
                let mut body = String::from("weight,count\n");
                for (w, c) in &report.histogram {
                    body.push_str(&format!("{w},{c}\n"));
                }
                std::fs::write(path, body).map_err(CliError::usage)?;
            }
            emit(out.as_ref(), &to_json(&report)?)
        }
        Cmd::Blocking { cmd } => match cmd {
            BlockingCmd::Check { q, n, points, out } => {
                let field = grm_core::shared_field(q).map_err(CliError::usage)?;
                let pts = parse_points(&points)?;
                let pairs: Vec<(Elem, Elem)> = pts
                    .iter()
                    .map(|p| {
                        if p.len() == 2 {
                            Ok((p[0], p[1]))
                        } else {
                            Err(CliError::Usage(format!(
                                "point {:?} must have two coordinates",
                                p.iter().map(|e| e.0).collect::<Vec<_>>()
                            )))
                        }
                    })
                    .collect::<Result<_, _>>()?;
                let blocking = blocking::is_blocking(&field, &pairs, n).map_err(CliError::usage)?;
                let doc = serde_json::json!({
                    "q": q,
                    "n": n,
                    "size": pairs.len(),
                    "blocking": blocking,
                });
                emit(out.as_ref(), &to_json(&doc)?)
            }
            BlockingCmd::Search { q, n, jobs, out } => {
                let field = grm_core::shared_field(q).map_err(CliError::usage)?;
                let report = blocking::min_blocking_size(&field, n, jobs)
                    .map_err(CliError::usage)?;
                if !report.bound_satisfied {
                    return Err(CliError::verification(format!(
                        "blocking set below the bound {} found at (q={q}, n={n})",
                        report.bound
                    )));
                }
                emit(out.as_ref(), &to_json(&report)?)
            }
            BlockingCmd::Prop42 {
                q,
                b,
                budget,
                jobs,
                out,
            } => {
                let field = grm_core::shared_field(q).map_err(CliError::usage)?;
                let report = blocking::check_prop_4_2(&field, b, budget, jobs)
                    .map_err(CliError::usage)?;
                let bad = report.violations;
                emit(out.as_ref(), &to_json(&report)?)?;
                if bad > 0 {
                    return Err(CliError::verification(format!(
                        "{bad} codewords violate the blocking bridge at (q={q}, b={b})"
                    )));
                }
                Ok(())
            }
        },
        Cmd::Selftest {
            criteria,
            jobs,
            seed,
            out,
        } => {
            let ids: Vec<usize> = match criteria {
                None => vec![],
                Some(spec) => spec
                    .split(',')
                    .map(|s| {
                        s.trim().parse::<usize>().map_err(|_| {
                            CliError::Usage(format!("bad criterion id `{s}`"))
                        })
                    })
                    .collect::<Result<_, _>>()?,
            };
            let jobs = jobs.unwrap_or_else(|| {
                std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1)
            });
            let results = selftest::run(&ids, jobs, seed);
            for r in &results {
                let status = if r.passed { "PASS" } else { "FAIL" };
                eprintln!(
                    "criterion {}: {status} — {} [{} ms] {}",
                    r.id, r.name, r.elapsed_ms, r.details
                );
            }
            emit(out.as_ref(), &to_json(&results)?)?;
            if results.iter().all(|r| r.passed) {
                Ok(())
            } else {
                Err(CliError::verification("one or more criteria failed"))
            }
        }
    }
}

fn classify_to_doc(
    table: &FuncTable,
    params: &CodeParams,
    out: Option<&PathBuf>,
) -> Result<(), CliError> {
    let classification = classify_any(table, params).map_err(CliError::verification)?;
    let doc = ClassificationDoc::new(&classification);
    emit(out, &to_json(&doc)?)?;
    if classification.tag == ClassTag::Unknown {
        return Err(CliError::verification(
            "codeword weight matches but no characterized configuration applies",
        ));
    }
    eprintln!("classified as {}", classification.tag.as_str());
    Ok(())
}
