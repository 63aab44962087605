//! Command-line surface for the t-core toolkit: counting and enumerating
//! cores, running verification suites with machine-readable reports, class
//! numbers of negative discriminants, and the explicit map pipelines.

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use tcores::abacus::{normalize_abacus, partition_from_abacus};
use tcores::families::classify_sc6;
use tcores::forms::{
    class_count, class_count_7primitive, class_count_weighted, phi_sc6, reduced_forms,
};
use tcores::map47::{phi47, psi, HookShift};
use tcores::ncoding::{
    enumerate_sc_t_cores_lattice, enumerate_t_cores_lattice, ncoding_from_partition,
    normalized_abacus_from_ncoding, partition_from_ncoding,
};
use tcores::partition::{enumerate_partitions_with_cap, Partition, ORACLE_CAP};
use tcores::report::{records_to_json, records_to_tsv, ReportRecord};
use tcores::verify::{run_all_default, run_suite, Suite, SweepOptions};

#[derive(Parser)]
#[command(name = "tcores", version)]
#[command(about = "t-core partitions, sums of squares, and binary quadratic forms")]
struct Cli {
    /// Optional key=value config file; recognized keys: oracle_cap.
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    /// Direct scan over all partitions of n (capped).
    Oracle,
    /// Lattice enumeration through zero-sum codings.
    Lattice,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Repr {
    Partition,
    Abacus,
    Ncoding,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
    Tsv,
}

#[derive(Subcommand)]
enum Command {
    /// Count t-cores (or self-conjugate t-cores) of n.
    Count {
        #[arg(long, value_parser = clap::value_parser!(u32).range(2..))]
        t: u32,
        #[arg(long)]
        n: u64,
        /// Count only self-conjugate cores.
        #[arg(long)]
        sc: bool,
        #[arg(long, value_enum, default_value = "lattice")]
        method: Method,
    },
    /// List the t-cores of n, one per line.
    Enumerate {
        #[arg(long, value_parser = clap::value_parser!(u32).range(2..))]
        t: u32,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        sc: bool,
        #[arg(long, value_enum, default_value = "partition")]
        repr: Repr,
        #[arg(long, value_enum, default_value = "lattice")]
        method: Method,
    },
    /// Run a verification suite; exit status 0 only if every record is ok.
    Verify {
        /// One of: theorem11 theorem12 theorem13 theorem14 theorem15 sc6 s9
        /// governance map47.
        suite: String,
        #[arg(long)]
        t: Option<u32>,
        /// Verify a single cell instead of a range.
        #[arg(long)]
        n: Option<u64>,
        /// Upper end of the n range (suite default when omitted).
        #[arg(long)]
        n_max: Option<u64>,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
        /// Also write the records as JSON to this path.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Attach per-cell wall times (makes output non-reproducible).
        #[arg(long)]
        timings: bool,
    },
    /// Count reduced binary quadratic forms of a negative discriminant.
    Classnum {
        /// Discriminant, negative and congruent to 0 or 1 modulo 4.
        #[arg(long, allow_hyphen_values = true)]
        disc: i64,
        /// Count only forms whose content is not divisible by 7.
        #[arg(long = "7primitive")]
        seven_primitive: bool,
        /// Weight forms a(x^2+y^2) by 1/2 and a(x^2+xy+y^2) by 1/3.
        #[arg(long)]
        hurwitz_weights: bool,
        /// List the reduced forms as TSV rows (a, b, c, disc) instead of
        /// printing a count.
        #[arg(long)]
        list: bool,
    },
    /// Tabulate the two-to-one map on all 4-cores of 7n+2.
    Map47 {
        #[arg(long)]
        n: u64,
    },
    /// Tabulate self-conjugate 6-cores of n with their triples and forms.
    Sc6Forms {
        #[arg(long)]
        n: u64,
    },
    /// Run every verification suite at its default range.
    Report {
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        timings: bool,
    },
}

struct Config {
    oracle_cap: u64,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            oracle_cap: ORACLE_CAP,
        }
    }
}

fn load_config(path: &PathBuf) -> Result<Config, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("cannot read {path:?}: {e}"))?;
    let mut config = Config::default();
    for (idx, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| format!("line {}: expected key=value", idx + 1))?;
        match key.trim() {
            "oracle_cap" => {
                config.oracle_cap = value
                    .trim()
                    .parse()
                    .map_err(|e| format!("line {}: bad oracle_cap: {e}", idx + 1))?;
            }
            other => return Err(format!("line {}: unknown key '{other}'", idx + 1)),
        }
    }
    Ok(config)
}

/// Partitions of n that are t-cores (self-conjugate when asked), in
/// descending lexicographic order regardless of method.
fn core_partitions(
    t: u32,
    n: u64,
    sc: bool,
    method: Method,
    config: &Config,
) -> Result<Vec<Partition>, String> {
    let mut cores = match method {
        Method::Oracle => enumerate_partitions_with_cap(n, config.oracle_cap)
            .map_err(|e| e.to_string())?
            .into_iter()
            .filter(|p| p.is_t_core(t) && (!sc || p.is_self_conjugate()))
            .collect::<Vec<_>>(),
        Method::Lattice => {
            let codings = if sc {
                enumerate_sc_t_cores_lattice(t, n)
            } else {
                enumerate_t_cores_lattice(t, n)
            };
            codings.iter().map(partition_from_ncoding).collect()
        }
    };
    cores.sort_unstable_by(|a, b| b.cmp(a));
    Ok(cores)
}

fn render_records(records: &[ReportRecord], format: Format) -> String {
    match format {
        Format::Json => records_to_json(records),
        Format::Tsv => records_to_tsv(records),
        Format::Table => {
            let mut out = String::new();
            let _ = writeln!(
                out,
                "{:<24} {:>4} {:>6} {:>10} {:>10}  ok",
                "check", "t", "n", "lhs", "rhs"
            );
            for r in records {
                let t = r.t.map_or(String::from("-"), |v| v.to_string());
                let n = r.n.map_or(String::from("-"), |v| v.to_string());
                let _ = writeln!(
                    out,
                    "{:<24} {:>4} {:>6} {:>10} {:>10}  {}",
                    r.check,
                    t,
                    n,
                    r.lhs,
                    r.rhs,
                    if r.ok { "yes" } else { "NO" }
                );
                for w in &r.witnesses {
                    let _ = writeln!(out, "    witness: {w}");
                }
            }
            let failed = records.iter().filter(|r| !r.ok).count();
            let _ = writeln!(out, "{} checks, {} failed", records.len(), failed);
            out
        }
    }
}

fn emit_records(
    records: &[ReportRecord],
    format: Format,
    out: Option<&PathBuf>,
) -> Result<bool, String> {
    print!("{}", render_records(records, format));
    if let Some(path) = out {
        fs::write(path, records_to_json(records))
            .map_err(|e| format!("cannot write {path:?}: {e}"))?;
    }
    Ok(records.iter().all(|r| r.ok))
}

fn triple_text(triple: (i64, i64, i64)) -> String {
    format!("({},{},{})", triple.0, triple.1, triple.2)
}

fn gcd3(a: i64, b: i64, c: i64) -> i64 {
    fn gcd(mut a: i64, mut b: i64) -> i64 {
        while b != 0 {
            (a, b) = (b, a % b);
        }
        a.abs()
    }
    gcd(gcd(a, b), c)
}

fn cmd_map47(n: u64) -> Result<bool, String> {
    if n % 7 == 4 {
        return Err(format!(
            "n = {n} is 4 modulo 7: 7n+2 = {} can carry self-conjugate 4-cores, so the \
             two-to-one map is undefined on this progression",
            7 * n + 2
        ));
    }
    let mut rows: Vec<Partition> =
        core_partitions(4, 7 * n + 2, false, Method::Lattice, &Config::default())?;
    rows.sort_unstable_by(|a, b| b.cmp(a));
    println!("partition\tabacus\tb\tpsi\tphi\timage");
    for lambda in rows {
        let abacus = normalize_abacus(&lambda, 4).map_err(|e| e.to_string())?;
        let shift = HookShift::from_abacus(&abacus).map_err(|e| e.to_string())?;
        let b = shift.values();
        let psi_triple = psi(&abacus).map_err(|e| e.to_string())?;
        let image = phi47(&abacus).map_err(|e| e.to_string())?;
        let target = partition_from_abacus(&image);
        println!(
            "{lambda}\t{abacus}\t({},{},{})\t{}\t{image}\t{target}",
            b[0],
            b[1],
            b[2],
            triple_text(psi_triple),
        );
    }
    Ok(true)
}

fn cmd_sc6_forms(n: u64) -> Result<bool, String> {
    println!("partition\tabacus\ttype\tr\ta\tb\ttriple\tform\tdisc");
    for coding in enumerate_sc_t_cores_lattice(6, n) {
        let lambda = partition_from_ncoding(&coding);
        let abacus = normalized_abacus_from_ncoding(&coding);
        let class = classify_sc6(&abacus).map_err(|e| e.to_string())?;
        let triple = tcores::families::sc6_to_triple(&class, n);
        let form = phi_sc6(&lambda).map_err(|e| e.to_string())?;
        println!(
            "{lambda}\t{abacus}\t{:?}\t{}\t{}\t{}\t{}\t{form}\t{}",
            class.ty,
            class.r,
            class.a,
            class.b,
            triple_text(triple),
            form.discriminant(),
        );
    }
    Ok(true)
}

fn run(cli: Cli) -> Result<bool, String> {
    let config = match &cli.config {
        Some(path) => load_config(path)?,
        None => Config::default(),
    };
    match cli.command {
        Command::Count { t, n, sc, method } => {
            let cores = core_partitions(t, n, sc, method, &config)?;
            println!("{}", cores.len());
            Ok(true)
        }
        Command::Enumerate {
            t,
            n,
            sc,
            repr,
            method,
        } => {
            for lambda in core_partitions(t, n, sc, method, &config)? {
                match repr {
                    Repr::Partition => println!("{lambda}"),
                    Repr::Abacus => {
                        println!(
                            "{}",
                            normalize_abacus(&lambda, t).map_err(|e| e.to_string())?
                        )
                    }
                    Repr::Ncoding => println!(
                        "{}",
                        ncoding_from_partition(&lambda, t).map_err(|e| e.to_string())?
                    ),
                }
            }
            Ok(true)
        }
        Command::Verify {
            suite,
            t,
            n,
            n_max,
            format,
            out,
            timings,
        } => {
            let suite = Suite::parse(&suite).map_err(|e| e.to_string())?;
            let opts = SweepOptions {
                t,
                n,
                n_max,
                timed: timings,
            };
            let records = run_suite(suite, &opts).map_err(|e| e.to_string())?;
            emit_records(&records, format, out.as_ref())
        }
        Command::Classnum {
            disc,
            seven_primitive,
            hurwitz_weights,
            list,
        } => {
            if seven_primitive && hurwitz_weights {
                return Err("choose either --7primitive or --hurwitz-weights".into());
            }
            if list {
                println!("a\tb\tc\tdisc");
                for form in reduced_forms(disc).map_err(|e| e.to_string())? {
                    let content_seven = gcd3(form.a(), form.b(), form.c()) % 7 == 0;
                    if seven_primitive && content_seven {
                        continue;
                    }
                    println!("{}\t{}\t{}\t{}", form.a(), form.b(), form.c(), disc);
                }
                return Ok(true);
            }
            if seven_primitive {
                println!(
                    "{}",
                    class_count_7primitive(disc).map_err(|e| e.to_string())?
                );
            } else if hurwitz_weights {
                let (num, den) = class_count_weighted(disc).map_err(|e| e.to_string())?;
                if den == 1 {
                    println!("{num}");
                } else {
                    println!("{num}/{den}");
                }
            } else {
                println!("{}", class_count(disc).map_err(|e| e.to_string())?);
            }
            Ok(true)
        }
        Command::Map47 { n } => cmd_map47(n),
        Command::Sc6Forms { n } => cmd_sc6_forms(n),
        Command::Report {
            format,
            out,
            timings,
        } => {
            let records = if timings {
                timed_report()
            } else {
                run_all_default()
            };
            emit_records(&records, format, out.as_ref())
        }
    }
}

fn timed_report() -> Vec<ReportRecord> {
    let suites = [
        Suite::Theorem11,
        Suite::Theorem12,
        Suite::Theorem13,
        Suite::Theorem14,
        Suite::Theorem15,
        Suite::Sc6,
        Suite::S9,
        Suite::Governance,
        Suite::Map47,
    ];
    let mut out = Vec::new();
    for suite in suites {
        let opts = SweepOptions {
            timed: true,
            ..SweepOptions::default()
        };
        out.extend(run_suite(suite, &opts).expect("default ranges are valid"));
    }
    out
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
