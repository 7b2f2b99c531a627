//! Thin command-line front end: every subcommand parses arguments, calls one
//! library operation, and renders the result as JSON or CSV on stdout.
//! Progress and diagnostics go to stderr. Exit codes: 0 success, 1
//! verification failure, 2 usage error.

use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use practical_binomials::arith::PrimeTable;
use practical_binomials::bounds::{
    eta_profile, kappa_omega_crossover, kappa_table, optimize_eta, row_exception_report,
    row_sum_report, BoundParams, EtaOutcome,
};
use practical_binomials::central::{
    central_is_practical, powers_of_two_base3_01, scan_central, valuation_exceptions,
    central_valuation, DEFAULT_SHORTCUT_PRIMES, MAX_POW2_EXPONENT,
};
use practical_binomials::report::{envelope, SCHEMA_VERSION};
use practical_binomials::rows::{
    f_values_up_to, fine_count, fine_count_bruteforce, fine_exceptions, row_profile,
};
use practical_binomials::verify::{run_suite, Suite, VerifyConfig};
use practical_binomials::Error;

#[derive(Parser)]
#[command(
    name = "pracbin",
    about = "Practicality of binomial coefficients: row statistics, central scans, digit formulas, bound reports",
    version
)]
struct Cli {
    /// Output format for the data document on stdout.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Worker threads for parallel scans (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Profile row n: f(n), the non-practical positions, optional T_p counts.
    Row {
        n: u64,
        /// Comma-separated primes to report T_p(n) for.
        #[arg(long, value_delimiter = ',')]
        tp: Vec<u64>,
    },
    /// f(n) for every n up to a limit.
    ScanRows {
        #[arg(long)]
        limit: u64,
    },
    /// Scan n <= limit for non-practical central binomial coefficients.
    ScanCentral {
        #[arg(long)]
        limit: u64,
        /// Primes in the d-shortcut.
        #[arg(long, default_value_t = DEFAULT_SHORTCUT_PRIMES)]
        s: u32,
    },
    /// T_p(n) by the digit product, or a threshold-exception census.
    Tp(StatArgs),
    /// v_p(C(2n,n)) by carry counting, or a threshold-exception census.
    Beta(StatArgs),
    /// The eta slack profile and its optimization over s.
    Eta {
        /// Profile exactly this s instead of optimizing.
        #[arg(long)]
        s: Option<u32>,
        #[arg(long, default_value_t = 100)]
        s_max: u32,
    },
    /// Row-bound censuses, row sums, kappa growth, crossover points.
    #[command(subcommand)]
    Bounds(BoundsCommand),
    /// Powers of two whose base-3 digits are all 0 or 1.
    Pow2base3 {
        #[arg(long, default_value_t = MAX_POW2_EXPONENT)]
        max_exp: u32,
    },
    /// Run a named verification suite; exit 1 if any check fails.
    Verify {
        #[arg(long)]
        suite: String,
        /// Override the oracle agreement sweep range.
        #[arg(long)]
        limit: Option<u64>,
    },
}

#[derive(Args)]
struct StatArgs {
    /// Evaluate the statistic at this n.
    n: Option<u64>,
    #[arg(long, default_value_t = 2)]
    p: u64,
    /// Census mode: count threshold exceptions up to --limit.
    #[arg(long)]
    exceptions: bool,
    #[arg(long)]
    limit: Option<u64>,
    #[arg(long)]
    epsilon: Option<f64>,
    /// Cross-check against the brute-force row count (value mode, n <= 10^4).
    #[arg(long)]
    check: bool,
}

#[derive(Subcommand)]
enum BoundsCommand {
    /// Census of rows violating f(n) < n^(1 - (log 2 - delta)/log log n).
    RowExceptions {
        #[arg(long)]
        limit: u64,
        #[arg(long)]
        delta: f64,
        #[arg(long)]
        gamma: f64,
    },
    /// Exact sum of f(n) up to each limit, with the envelope.
    RowSum {
        #[arg(long, value_delimiter = ',')]
        limit: Vec<u64>,
        #[arg(long, default_value_t = 0.1)]
        epsilon: f64,
    },
    /// Growth table for the primorial index kappa(x).
    Kappa {
        /// Comma-separated x values (default 1e2..1e8).
        #[arg(long, value_delimiter = ',')]
        x: Vec<f64>,
    },
    /// Empirical points where the proof-chain inequalities start holding.
    Crossover {
        #[arg(long)]
        gamma: f64,
        #[arg(long, default_value_t = 1_000_000)]
        limit: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn with_pool<T: Send>(threads: Option<usize>, body: impl FnOnce() -> T + Send) -> Result<T, Error> {
    match threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .map_err(|e| Error::InvalidArgument(format!("thread pool: {e}")))
            .map(|pool| pool.install(body)),
        None => Ok(body()),
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    let format = cli.format;
    match cli.command {
        Command::Row { n, tp } => {
            let table = PrimeTable::new(n.max(2))?;
            let profile = row_profile(n, &table, &tp)?;
            match format {
                Format::Json => print_json(envelope("row", serde_json::to_value(&profile).unwrap())),
                Format::Csv => {
                    println!("n,f,nonpractical_ks,tp");
                    let ks = join(&profile.nonpractical_ks);
                    let tps = profile
                        .tp
                        .as_ref()
                        .map(|m| {
                            m.iter()
                                .map(|(p, v)| format!("{p}:{v}"))
                                .collect::<Vec<_>>()
                                .join(";")
                        })
                        .unwrap_or_default();
                    println!("{},{},{},{}", profile.n, profile.f, ks, tps);
                }
            }
        }
        Command::ScanRows { limit } => {
            if limit < 1 {
                return Err(Error::InvalidArgument("limit must be positive".into()));
            }
            let started = Instant::now();
            eprintln!("scanning rows 1..={limit}");
            let table = PrimeTable::new(limit.max(2))?;
            let f = with_pool(cli.threads, || f_values_up_to(limit, &table))??;
            let sum_f: u64 = f.iter().skip(1).sum();
            let zero_f: Vec<u64> = (1..=limit).filter(|&n| f[n as usize] == 0).collect();
            let elapsed = started.elapsed().as_millis() as u64;
            eprintln!("done in {elapsed} ms");
            match format {
                Format::Json => {
                    let rows: Vec<_> = (1..=limit)
                        .map(|n| json!({"n": n, "f": f[n as usize]}))
                        .collect();
                    print_json(envelope(
                        "scan-rows",
                        json!({
                            "range": [1, limit],
                            "rows": rows,
                            "sum_f": sum_f,
                            "zero_f_ns": zero_f,
                            "elapsed_ms": elapsed,
                            "parameters": {"limit": limit},
                        }),
                    ));
                }
                Format::Csv => {
                    println!("n,f");
                    for n in 1..=limit {
                        println!("{n},{}", f[n as usize]);
                    }
                }
            }
        }
        Command::ScanCentral { limit, s } => {
            eprintln!("scanning central binomial coefficients, n <= {limit}, s = {s}");
            let report = scan_central(limit, s, cli.threads)?;
            eprintln!(
                "done in {} ms; {} exception(s)",
                report.elapsed_ms,
                report.exceptions.len()
            );
            match format {
                Format::Json => print_json(serde_json::to_value(&report).unwrap()),
                Format::Csv => {
                    println!(
                        "lo,hi,exceptions,fast_d_shortcut,fast_d_retry,full_factorization,fast_path_hit_rate,elapsed_ms"
                    );
                    println!(
                        "{},{},{},{},{},{},{},{}",
                        report.range[0],
                        report.range[1],
                        join(&report.exceptions),
                        report.counts.get("fast-d-shortcut").copied().unwrap_or(0),
                        report.counts.get("fast-d-retry").copied().unwrap_or(0),
                        report.counts.get("full-factorization").copied().unwrap_or(0),
                        report.fast_path_hit_rate.unwrap_or(0.0),
                        report.elapsed_ms
                    );
                }
            }
        }
        Command::Tp(args) => return stat_command("tp", args, format),
        Command::Beta(args) => return stat_command("beta", args, format),
        Command::Eta { s, s_max } => match s {
            Some(s) => {
                let outcome = eta_profile(s);
                match format {
                    Format::Json => {
                        print_json(envelope("eta", serde_json::to_value(&outcome).unwrap()))
                    }
                    Format::Csv => {
                        println!("s,eta,exponent,alpha_sum,epsilons");
                        match outcome {
                            EtaOutcome::Applicable(p) => println!(
                                "{},{},{},{},{}",
                                p.s,
                                p.eta,
                                p.exponent,
                                p.alpha_sum,
                                join(&p.epsilons)
                            ),
                            EtaOutcome::NotApplicable { s, alpha_sum } => {
                                println!("{s},,,{alpha_sum},")
                            }
                        }
                    }
                }
            }
            None => {
                let search = optimize_eta(s_max)?;
                match format {
                    Format::Json => {
                        print_json(envelope("eta", serde_json::to_value(&search).unwrap()))
                    }
                    Format::Csv => {
                        println!("s,eta,best");
                        for (s, eta) in &search.curve {
                            println!(
                                "{},{},{}",
                                s,
                                eta.map(|e| e.to_string()).unwrap_or_default(),
                                if *s == search.best_s { 1 } else { 0 }
                            );
                        }
                    }
                }
            }
        },
        Command::Bounds(sub) => return bounds_command(sub, format, cli.threads),
        Command::Pow2base3 { max_exp } => {
            let exponents = powers_of_two_base3_01(max_exp)?;
            // Confirm the consequence where the scan can reach: for
            // n = 2^e > 2 the central binomial coefficient is not practical.
            const CENTRAL_REACH: u32 = 19; // 2^19 needs primes to ~10^6
            let verdicts: Vec<serde_json::Value> = exponents
                .iter()
                .map(|&e| {
                    let value = 1u128 << e;
                    let central = if e <= CENTRAL_REACH {
                        let n = value as u64;
                        let table = PrimeTable::new((2 * n).max(2))?;
                        Some(central_is_practical(n, 16, &table)?.practical)
                    } else {
                        None
                    };
                    Ok(json!({
                        "exponent": e,
                        "value": value.to_string(),
                        "central_practical": central,
                    }))
                })
                .collect::<Result<_, Error>>()?;
            match format {
                Format::Json => print_json(envelope(
                    "pow2base3",
                    json!({ "max_exp": max_exp, "exponents": exponents, "entries": verdicts }),
                )),
                Format::Csv => {
                    println!("exponent,value,central_practical");
                    for v in &verdicts {
                        println!(
                            "{},{},{}",
                            v["exponent"],
                            v["value"].as_str().unwrap(),
                            v["central_practical"]
                                .as_bool()
                                .map(|b| b.to_string())
                                .unwrap_or_default()
                        );
                    }
                }
            }
        }
        Command::Verify { suite, limit } => {
            let suite = Suite::parse(&suite)?;
            let mut cfg = VerifyConfig::default();
            if let Ok(raw) = std::env::var("PRACTICAL_ORACLE_LIMIT") {
                cfg.oracle_ceiling = raw.parse().map_err(|_| {
                    Error::InvalidArgument(format!("PRACTICAL_ORACLE_LIMIT = '{raw}' is not an integer"))
                })?;
            }
            if let Some(l) = limit {
                cfg.oracle_agreement_limit = l;
            }
            eprintln!("running suite '{}'", suite.name());
            let report = with_pool(cli.threads, || run_suite(suite, &cfg))??;
            for c in &report.checks {
                eprintln!("  [{}] {}: {}", if c.passed { "ok" } else { "FAIL" }, c.name, c.detail);
            }
            match format {
                Format::Json => print_json(serde_json::to_value(&report).unwrap()),
                Format::Csv => {
                    println!("check,passed,detail");
                    for c in &report.checks {
                        println!("{},{},{}", c.name, c.passed, c.detail.replace(',', ";"));
                    }
                }
            }
            if !report.passed {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn stat_command(which: &str, args: StatArgs, format: Format) -> Result<ExitCode, Error> {
    if args.exceptions {
        let (Some(limit), Some(epsilon)) = (args.limit, args.epsilon) else {
            return Err(Error::InvalidArgument(
                "census mode needs --limit and --epsilon".into(),
            ));
        };
        let report = match which {
            "tp" => fine_exceptions(args.p, epsilon, limit)?,
            _ => valuation_exceptions(args.p, epsilon, limit)?,
        };
        match format {
            Format::Json => print_json(envelope(which, serde_json::to_value(&report).unwrap())),
            Format::Csv => {
                println!("statistic,p,epsilon,limit,count,bound");
                println!(
                    "{},{},{},{},{},{}",
                    report.statistic, report.p, report.epsilon, report.limit, report.count,
                    report.bound
                );
            }
        }
        return Ok(ExitCode::SUCCESS);
    }
    let Some(n) = args.n else {
        return Err(Error::InvalidArgument(
            "give n, or --exceptions with --limit and --epsilon".into(),
        ));
    };
    let value = match which {
        "tp" => fine_count(n, args.p)?,
        _ => central_valuation(n, args.p),
    };
    let check = if args.check && which == "tp" {
        Some(fine_count_bruteforce(n, args.p)?)
    } else {
        None
    };
    match format {
        Format::Json => print_json(envelope(
            which,
            json!({ "n": n, "p": args.p, "value": value, "bruteforce": check }),
        )),
        Format::Csv => {
            println!("n,p,value,bruteforce");
            println!(
                "{n},{},{value},{}",
                args.p,
                check.map(|c| c.to_string()).unwrap_or_default()
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn bounds_command(
    sub: BoundsCommand,
    format: Format,
    threads: Option<usize>,
) -> Result<ExitCode, Error> {
    match sub {
        BoundsCommand::RowExceptions { limit, delta, gamma } => {
            let params = BoundParams::new(delta, gamma)?;
            let report = with_pool(threads, || row_exception_report(limit, params))??;
            match format {
                Format::Json => print_json(envelope(
                    "bounds-row-exceptions",
                    serde_json::to_value(&report).unwrap(),
                )),
                Format::Csv => {
                    println!("limit,delta,gamma,exception_count,envelope,exceptions");
                    println!(
                        "{},{},{},{},{},{}",
                        report.limit,
                        report.delta,
                        report.gamma,
                        report.exception_count,
                        report.envelope,
                        join(&report.exceptions)
                    );
                }
            }
        }
        BoundsCommand::RowSum { limit, epsilon } => {
            if limit.is_empty() {
                return Err(Error::InvalidArgument("give at least one --limit".into()));
            }
            let report = with_pool(threads, || row_sum_report(&limit, epsilon))??;
            match format {
                Format::Json => print_json(envelope(
                    "bounds-row-sum",
                    serde_json::to_value(&report).unwrap(),
                )),
                Format::Csv => {
                    println!("limit,sum_f,envelope,density");
                    for r in &report.rows {
                        println!("{},{},{},{}", r.limit, r.sum_f, r.envelope, r.density);
                    }
                }
            }
        }
        BoundsCommand::Kappa { x } => {
            let xs = if x.is_empty() {
                (2..=8).map(|e| 10f64.powi(e)).collect()
            } else {
                x
            };
            let rows = kappa_table(&xs)?;
            match format {
                Format::Json => print_json(envelope(
                    "bounds-kappa",
                    json!({ "rows": serde_json::to_value(&rows).unwrap() }),
                )),
                Format::Csv => {
                    println!("x,kappa,p_kappa,kappa_ratio,p_ratio");
                    for r in &rows {
                        println!(
                            "{},{},{},{},{}",
                            r.x, r.kappa, r.p_kappa, r.kappa_ratio, r.p_ratio
                        );
                    }
                }
            }
        }
        BoundsCommand::Crossover { gamma, limit } => {
            let report = kappa_omega_crossover(gamma, limit)?;
            match format {
                Format::Json => print_json(envelope(
                    "bounds-crossover",
                    serde_json::to_value(&report).unwrap(),
                )),
                Format::Csv => {
                    println!("gamma,limit,omega_holds_from,kappa_holds_from");
                    println!(
                        "{},{},{},{}",
                        report.gamma,
                        report.limit,
                        report.omega_holds_from.map(|v| v.to_string()).unwrap_or_default(),
                        report.kappa_holds_from.map(|v| v.to_string()).unwrap_or_default()
                    );
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn print_json(value: serde_json::Value) {
    debug_assert_eq!(value["schema"], SCHEMA_VERSION);
    println!("{}", serde_json::to_string_pretty(&value).unwrap());
}

fn join<T: ToString>(items: &[T]) -> String {
    items
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(";")
}
