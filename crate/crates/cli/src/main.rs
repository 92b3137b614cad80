//! Command-line calculator for Verlinde numbers of SL and Spin groups,
//! theta-function dimension counts, representation heights, and the
//! verification suite tying them together.

mod cache;

use cache::{Cache, CacheRecord};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use std::collections::BTreeMap;
use std::process::ExitCode;
use verlinde_core::exact_arith::ExactArithError;
use verlinde_core::heights::{self, HeightsError, RepId};
use verlinde_core::identities::{self, IdentityReport, SuiteConfig};
use verlinde_core::prym::{self, Parity, ThetaQuery};
use verlinde_core::verlinde::{self, VerlindeError, VerlindeQuery};
use verlinde_core::GroupId;

/// Sanity bounds; computations beyond these blow up combinatorially and are
/// rejected with exit code 3 rather than attempted.
const MAX_RANK_PARAMETER: u32 = 64;
const MAX_LEVEL: u32 = 512;
const MAX_GENUS: u32 = 1024;

const LONG_ABOUT: &str = "\
Exact calculator for the Verlinde numbers N_l(G) of G = SL_r or Spin_m over \
a genus-g curve, for theta-function dimension counts on abelian varieties \
and Prym sums, for representation heights, and for the identity \
verification suite relating all of them.

Group specs are written sl:<r> (r >= 2) or spin:<m> (m >= 3); note that \
spin:<m> names Spin_m itself, so spin:7 is the rank-3 group Spin_7 and \
spin:3 = SL_2 is accepted. All arithmetic is exact; values are printed in \
full as decimal integers.

Computed values are cached in a JSON-lines file (schema v1: one record \
{group, level, genus, value} per line), by default ./verlinde_cache.jsonl; \
set VERLINDE_CACHE to relocate it or pass --no-cache to bypass.

Exit codes: 0 success (and all checks passed, for verify); 1 verification \
failure or internal error; 2 usage error; 3 resource bound exceeded.";

#[derive(Parser)]
#[command(name = "verlinde", version, about = "Exact Verlinde-number calculator and identity verifier", long_about = LONG_ABOUT)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Suite {
    All,
    ClosedForms,
    Prym,
    Spin8,
    Reciprocity,
    Heights,
    TermTable,
    Clifford,
    Consistency,
}

#[derive(Subcommand)]
enum Command {
    /// Compute one Verlinde number N_l(G)
    Compute {
        /// Group spec: `sl:<r>` or `spin:<m>`
        #[arg(long)]
        group: String,
        /// Level l >= 1
        #[arg(long)]
        level: u32,
        /// Genus g >= 1
        #[arg(long)]
        genus: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Skip the result cache entirely
        #[arg(long)]
        no_cache: bool,
    },
    /// Split an odd-spin Verlinde number into tensor/spinor parts N+ N-
    Split {
        /// Group spec: `spin:<m>` with m odd
        #[arg(long)]
        group: String,
        #[arg(long)]
        level: u32,
        #[arg(long)]
        genus: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Dimension of the even/odd/total space of level-m theta functions on
    /// a g-dimensional principally polarized abelian variety
    Theta {
        /// Abelian variety dimension g >= 1
        #[arg(long)]
        genus: u32,
        /// Theta level m >= 1
        #[arg(long)]
        level: u32,
        /// even, odd, or total
        #[arg(long)]
        parity: Parity,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Theta count summed over the Jacobian and all Pryms of a genus-g curve
    PrymSum {
        /// Base-curve genus g >= 2
        #[arg(long)]
        genus: u32,
        /// Theta level m >= 1
        #[arg(long)]
        level: u32,
        /// even, odd, or total
        #[arg(long)]
        parity: Parity,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Height of a representation (the level it induces)
    Height {
        /// Group spec: `sl:<r>` or `spin:<m>`
        #[arg(long)]
        group: String,
        /// vector, ext2, or adjoint
        #[arg(long)]
        rep: RepId,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run identity checks and report pass/fail per check
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        #[arg(long, default_value_t = 2)]
        genus_min: u32,
        #[arg(long, default_value_t = 4)]
        genus_max: u32,
        /// Largest spin rank parameter m exercised
        #[arg(long, default_value_t = 9)]
        rank_max: u32,
        /// Largest level used when deriving reciprocity pairs
        #[arg(long, default_value_t = 7)]
        level_max: u32,
        /// Samples per randomized Clifford property
        #[arg(long, default_value_t = 200)]
        samples: u32,
        /// Explicit reciprocity pair "l,m" (both odd, >= 5); repeatable.
        /// Overrides the derived pairs for --suite reciprocity.
        #[arg(long, value_name = "L,M")]
        pairs: Vec<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

enum Failure {
    Usage(String),
    Resource(String),
    Internal(String),
}

impl From<VerlindeError> for Failure {
    fn from(e: VerlindeError) -> Failure {
        match e {
            VerlindeError::Arith(inner) => Failure::Internal(inner.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<HeightsError> for Failure {
    fn from(e: HeightsError) -> Failure {
        match e {
            HeightsError::Verlinde(inner) => inner.into(),
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<ExactArithError> for Failure {
    fn from(e: ExactArithError) -> Failure {
        Failure::Internal(e.to_string())
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Resource(msg)) => {
            eprintln!("error: resource bound exceeded: {msg}");
            ExitCode::from(3)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn run(command: Command) -> Result<ExitCode, Failure> {
    match command {
        Command::Compute {
            group,
            level,
            genus,
            format,
            no_cache,
        } => cmd_compute(&group, level, genus, format, no_cache),
        Command::Split {
            group,
            level,
            genus,
            format,
        } => cmd_split(&group, level, genus, format),
        Command::Theta {
            genus,
            level,
            parity,
            format,
        } => cmd_theta(genus, level, parity, format),
        Command::PrymSum {
            genus,
            level,
            parity,
            format,
        } => cmd_prym_sum(genus, level, parity, format),
        Command::Height { group, rep, format } => cmd_height(&group, rep, format),
        Command::Verify {
            suite,
            genus_min,
            genus_max,
            rank_max,
            level_max,
            samples,
            pairs,
            format,
        } => cmd_verify(
            suite, genus_min, genus_max, rank_max, level_max, samples, &pairs, format,
        ),
    }
}

fn parse_group(spec: &str) -> Result<GroupId, Failure> {
    spec.parse::<GroupId>()
        .map_err(|e| Failure::Usage(e.to_string()))
}

fn check_bounds(group: GroupId, level: u32, genus: u32) -> Result<(), Failure> {
    if group.rank_parameter() > MAX_RANK_PARAMETER {
        return Err(Failure::Resource(format!(
            "rank parameter {} > {MAX_RANK_PARAMETER}",
            group.rank_parameter()
        )));
    }
    if level > MAX_LEVEL {
        return Err(Failure::Resource(format!("level {level} > {MAX_LEVEL}")));
    }
    if genus > MAX_GENUS {
        return Err(Failure::Resource(format!("genus {genus} > {MAX_GENUS}")));
    }
    Ok(())
}

#[derive(Serialize)]
struct ComputeOut {
    group: String,
    level: u32,
    genus: u32,
    value: String,
}

fn cmd_compute(
    spec: &str,
    level: u32,
    genus: u32,
    format: Format,
    no_cache: bool,
) -> Result<ExitCode, Failure> {
    let group = parse_group(spec)?;
    check_bounds(group, level, genus)?;
    let query = VerlindeQuery::new(group, level, genus).map_err(Failure::from)?;
    let key = group.to_string();

    let value = if no_cache {
        verlinde::verlinde_number(&query)?.to_string()
    } else {
        let cache = Cache::from_env();
        match cache.lookup(&key, level, genus) {
            Some(hit) => hit,
            None => {
                let value = verlinde::verlinde_number(&query)?.to_string();
                let record = CacheRecord {
                    group: key.clone(),
                    level,
                    genus,
                    value: value.clone(),
                };
                if let Err(e) = cache.append(&record) {
                    log::warn!("could not write cache {}: {e}", cache.path().display());
                }
                value
            }
        }
    };

    let out = ComputeOut {
        group: key,
        level,
        genus,
        value,
    };
    match format {
        Format::Text => println!("{}", out.value),
        Format::Json => println!("{}", serde_json::to_string(&out).unwrap()),
        Format::Csv => {
            println!("group,level,genus,value");
            println!("{},{},{},{}", out.group, out.level, out.genus, out.value);
        }
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct SplitOut {
    group: String,
    level: u32,
    genus: u32,
    n_plus: String,
    n_minus: String,
}

fn cmd_split(spec: &str, level: u32, genus: u32, format: Format) -> Result<ExitCode, Failure> {
    let group = parse_group(spec)?;
    check_bounds(group, level, genus)?;
    let query = VerlindeQuery::new(group, level, genus).map_err(Failure::from)?;
    let (plus, minus) = verlinde::verlinde_split(&query)?;
    let out = SplitOut {
        group: group.to_string(),
        level,
        genus,
        n_plus: plus.to_string(),
        n_minus: minus.to_string(),
    };
    match format {
        Format::Text => println!("{} {}", out.n_plus, out.n_minus),
        Format::Json => println!("{}", serde_json::to_string(&out).unwrap()),
        Format::Csv => {
            println!("group,level,genus,n_plus,n_minus");
            println!(
                "{},{},{},{},{}",
                out.group, out.level, out.genus, out.n_plus, out.n_minus
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct CountOut {
    kind: &'static str,
    genus: u32,
    level: u32,
    parity: String,
    value: String,
}

fn print_count(out: &CountOut, format: Format) {
    match format {
        Format::Text => println!("{}", out.value),
        Format::Json => println!("{}", serde_json::to_string(out).unwrap()),
        Format::Csv => {
            println!("kind,genus,level,parity,value");
            println!(
                "{},{},{},{},{}",
                out.kind, out.genus, out.level, out.parity, out.value
            );
        }
    }
}

fn cmd_theta(genus: u32, level: u32, parity: Parity, format: Format) -> Result<ExitCode, Failure> {
    let query =
        ThetaQuery::new(genus, level, parity).map_err(|e| Failure::Usage(e.to_string()))?;
    let value = prym::theta_dim(&query);
    print_count(
        &CountOut {
            kind: "theta",
            genus,
            level,
            parity: parity.to_string(),
            value: value.to_string(),
        },
        format,
    );
    Ok(ExitCode::SUCCESS)
}

fn cmd_prym_sum(
    genus: u32,
    level: u32,
    parity: Parity,
    format: Format,
) -> Result<ExitCode, Failure> {
    let value =
        prym::prym_sum(genus, level, parity).map_err(|e| Failure::Usage(e.to_string()))?;
    print_count(
        &CountOut {
            kind: "prym-sum",
            genus,
            level,
            parity: parity.to_string(),
            value: value.to_string(),
        },
        format,
    );
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct HeightOut {
    group: String,
    rep: String,
    value: String,
}

fn cmd_height(spec: &str, rep: RepId, format: Format) -> Result<ExitCode, Failure> {
    let group = parse_group(spec)?;
    let h = heights::height(group, rep).map_err(Failure::from)?;
    if !h.is_integer() {
        return Err(Failure::Internal(format!(
            "height of ({group}, {rep}) is the non-integer {h}"
        )));
    }
    let out = HeightOut {
        group: group.to_string(),
        rep: rep.to_string(),
        value: h.to_integer().to_string(),
    };
    match format {
        Format::Text => println!("{}", out.value),
        Format::Json => println!("{}", serde_json::to_string(&out).unwrap()),
        Format::Csv => {
            println!("group,rep,value");
            println!("{},{},{}", out.group, out.rep, out.value);
        }
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct ReportOut<'a> {
    name: &'a str,
    parameters: &'a BTreeMap<String, String>,
    lhs: String,
    rhs: String,
    status: String,
    elapsed_ms: u64,
}

fn parse_pair(s: &str) -> Result<(u32, u32), Failure> {
    let bad = || {
        Failure::Usage(format!(
            "--pairs takes \"l,m\" with both odd, distinct and >= 5, got {s:?}"
        ))
    };
    let (l, m) = s.split_once(',').ok_or_else(bad)?;
    let l: u32 = l.trim().parse().map_err(|_| bad())?;
    let m: u32 = m.trim().parse().map_err(|_| bad())?;
    if l % 2 == 1 && m % 2 == 1 && l >= 5 && m >= 5 && l != m {
        Ok((l, m))
    } else {
        Err(bad())
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    suite: Suite,
    genus_min: u32,
    genus_max: u32,
    rank_max: u32,
    level_max: u32,
    samples: u32,
    pairs: &[String],
    format: Format,
) -> Result<ExitCode, Failure> {
    let genus = genus_min..=genus_max;
    let odd_n_max = rank_max.saturating_sub(1) / 2;
    let config = SuiteConfig {
        genus_min,
        genus_max,
        rank_max,
        level_max,
        clifford_samples: samples,
    };
    let explicit_pairs = pairs
        .iter()
        .map(|p| parse_pair(p))
        .collect::<Result<Vec<_>, _>>()?;

    let mut reports = match suite {
        Suite::All => identities::run_all(&config).reports,
        Suite::ClosedForms => identities::check_closed_forms(genus, rank_max),
        Suite::Prym => identities::check_prym_identity(1..=odd_n_max.max(1), genus),
        Suite::Spin8 => identities::check_spin8(genus),
        Suite::Reciprocity => {
            if explicit_pairs.is_empty() {
                let derived = identities::reciprocity_pairs(level_max, rank_max);
                let spin3: Vec<u32> = (5..=level_max.min(rank_max))
                    .filter(|l| l % 2 == 1)
                    .collect();
                identities::check_reciprocity(&derived, &spin3, genus)
            } else {
                identities::check_reciprocity(&explicit_pairs, &[], genus)
            }
        }
        Suite::Heights => identities::check_heights(),
        Suite::TermTable => identities::check_term_table(2..=odd_n_max.max(2), genus),
        Suite::Clifford => identities::check_clifford(samples),
        Suite::Consistency => identities::check_consistency(&[1, 2], genus),
    };
    reports.sort_by(|a, b| {
        (a.name.as_str(), a.parameter_string()).cmp(&(b.name.as_str(), b.parameter_string()))
    });

    print_reports(&reports, format);
    if reports.iter().all(IdentityReport::passed) {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(1))
    }
}

fn print_reports(reports: &[IdentityReport], format: Format) {
    match format {
        Format::Text => {
            let name_w = reports.iter().map(|r| r.name.len()).max().unwrap_or(4).max(4);
            let param_w = reports
                .iter()
                .map(|r| r.parameter_string().len())
                .max()
                .unwrap_or(6)
                .max(6);
            println!("{:6} {:name_w$} {:param_w$} lhs = rhs", "status", "name", "params");
            for r in reports {
                println!(
                    "{:6} {:name_w$} {:param_w$} {} {} {} ({} ms)",
                    r.status.to_string(),
                    r.name,
                    r.parameter_string(),
                    r.lhs,
                    if r.passed() { "=" } else { "!=" },
                    r.rhs,
                    r.elapsed_ms
                );
            }
            let failures = reports.iter().filter(|r| !r.passed()).count();
            println!("{} checks, {} failures", reports.len(), failures);
        }
        Format::Json => {
            let out: Vec<ReportOut> = reports
                .iter()
                .map(|r| ReportOut {
                    name: &r.name,
                    parameters: &r.parameters,
                    lhs: r.lhs.to_string(),
                    rhs: r.rhs.to_string(),
                    status: r.status.to_string(),
                    elapsed_ms: r.elapsed_ms,
                })
                .collect();
            println!("{}", serde_json::to_string_pretty(&out).unwrap());
        }
        Format::Csv => {
            println!("name,parameters,lhs,rhs,status,elapsed_ms");
            for r in reports {
                println!(
                    "{},{},{},{},{},{}",
                    r.name,
                    r.parameter_string(),
                    r.lhs,
                    r.rhs,
                    r.status,
                    r.elapsed_ms
                );
            }
        }
    }
}
