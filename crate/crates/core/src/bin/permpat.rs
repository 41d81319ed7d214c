use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use permpat::report::{self, Classifier, Property, Target, DEFAULT_COUNT_CAP};
use permpat::verify::{self, Suite, SuiteConfig};
use permpat::{matcher, translate, Pattern, Permutation};

/// Permutation pattern matching, translation and classification.
#[derive(Parser)]
#[command(name = "permpat", version)]
struct Cli {
    /// Worker threads (defaults to all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Human-readable output instead of one JSON record per line.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report every property of the given permutations.
    Classify {
        #[arg(required = true)]
        perms: Vec<String>,
    },
    /// Count permutations of ranks 1..=n with a property or avoiding a pattern.
    Count(Select),
    /// List the permutations of rank n with a property or avoiding a pattern.
    Avoiders(Select),
    /// List occurrences of a pattern as position tuples.
    Occurrences {
        #[arg(long = "pattern", value_name = "PATTERN")]
        pattern_flag: Option<String>,
        /// Pattern, then permutation (the pattern may be given with --pattern).
        #[arg(required = true, num_args = 1..=2)]
        args: Vec<String>,
    },
    /// Print equivalent mesh patterns, one per line.
    Translate {
        #[arg(long = "pattern", value_name = "PATTERN")]
        pattern_flag: Option<String>,
        pattern: Option<String>,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long)]
        suite: String,
        /// Largest rank checked (defaults per suite).
        #[arg(long = "max-n", visible_alias = "n")]
        max_n: Option<usize>,
        #[arg(long, default_value_t = verify::DEFAULT_SEED)]
        seed: u64,
    },
}

#[derive(Args)]
struct Select {
    #[arg(long)]
    property: Option<String>,
    #[arg(long)]
    pattern: Option<String>,
    /// Characterization used for the property.
    #[arg(long)]
    method: Option<String>,
    #[arg(long)]
    n: usize,
    /// Raise the enumeration cap.
    #[arg(long = "max-n", default_value_t = DEFAULT_COUNT_CAP)]
    max_n: usize,
    /// Accepted for uniformity; enumeration is deterministic.
    #[arg(long)]
    seed: Option<u64>,
}

enum Failure {
    Usage(String),
    Verification,
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let run = || run(cli.command, cli.pretty);
    let result = match cli.jobs {
        Some(0) => Err(Failure::Usage("--jobs must be at least 1".into())),
        Some(j) => match rayon::ThreadPoolBuilder::new().num_threads(j).build() {
            Ok(pool) => pool.install(run),
            Err(e) => Err(Failure::Usage(e.to_string())),
        },
        None => run(),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command, pretty: bool) -> Outcome {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = match command {
        Command::Classify { perms } => classify(&mut out, &perms, pretty),
        Command::Count(sel) => count(&mut out, &sel, pretty),
        Command::Avoiders(sel) => avoiders(&mut out, &sel, pretty),
        Command::Occurrences { pattern_flag, args } => {
            let (pattern, perm) = match (pattern_flag, args.as_slice()) {
                (Some(p), [perm]) => (p, perm.clone()),
                (None, [p, perm]) => (p.clone(), perm.clone()),
                _ => return Err(Failure::Usage("expected a pattern and a permutation".into())),
            };
            occurrences(&mut out, &pattern, &perm, pretty)
        }
        Command::Translate { pattern_flag, pattern } => match (pattern_flag, pattern) {
            (Some(p), None) | (None, Some(p)) => translate_cmd(&mut out, &p),
            _ => Err(Failure::Usage("expected exactly one pattern".into())),
        },
        Command::Verify { suite, max_n, seed } => verify_cmd(&mut out, &suite, max_n, seed, pretty),
    };
    out.flush()?;
    result
}

fn emit<T: Serialize>(out: &mut impl Write, value: &T, pretty: bool) -> io::Result<()> {
    let text = if pretty { serde_json::to_string_pretty(value) } else { serde_json::to_string(value) };
    writeln!(out, "{}", text.map_err(io::Error::other)?)
}

fn classify(out: &mut impl Write, perms: &[String], pretty: bool) -> Outcome {
    let parsed = perms.iter().map(|s| s.parse::<Permutation>()).collect::<Result<Vec<_>, _>>()?;
    for pi in &parsed {
        emit(out, &report::classify(pi), pretty)?;
    }
    Ok(())
}

fn target(sel: &Select) -> Result<(Target, String), Failure> {
    match (&sel.property, &sel.pattern) {
        (Some(p), None) => {
            let property: Property = p.parse()?;
            let classifier = Classifier::new(property, sel.method.as_deref())?;
            let label = match classifier.method() {
                Some(m) => format!("{property}/{m}"),
                None => property.to_string(),
            };
            Ok((Target::Property(classifier), label))
        }
        (None, Some(p)) => {
            if sel.method.is_some() {
                return Err(Failure::Usage("--method applies only to --property".into()));
            }
            let pattern: Pattern = p.parse()?;
            Ok((Target::Avoiders(pattern.clone()), format!("avoiders of {pattern}")))
        }
        _ => Err(Failure::Usage("give exactly one of --property or --pattern".into())),
    }
}

#[derive(Serialize)]
struct CountRecord<'a> {
    #[serde(skip_serializing_if = "Option::is_none")]
    property: Option<&'a str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    method: Option<&'a str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pattern: Option<String>,
    n: usize,
    count: usize,
}

fn count(out: &mut impl Write, sel: &Select, pretty: bool) -> Outcome {
    report::check_cap(sel.n, sel.max_n)?;
    let (target, label) = target(sel)?;
    let counts = report::count_sequence(&target, sel.n)?;
    if pretty {
        let joined: Vec<String> = counts.iter().map(|c| c.to_string()).collect();
        writeln!(out, "{label}: {}", joined.join(","))?;
        return Ok(());
    }
    for (i, &count) in counts.iter().enumerate() {
        let record = match &target {
            Target::Property(c) => CountRecord {
                property: Some(c.property().name()),
                method: c.method(),
                pattern: None,
                n: i + 1,
                count,
            },
            Target::Avoiders(p) => CountRecord { property: None, method: None, pattern: Some(p.to_string()), n: i + 1, count },
        };
        emit(out, &record, false)?;
    }
    Ok(())
}

fn avoiders(out: &mut impl Write, sel: &Select, pretty: bool) -> Outcome {
    report::check_cap(sel.n, sel.max_n)?;
    let (target, label) = target(sel)?;
    let perms = report::list(&target, sel.n)?;
    for pi in &perms {
        writeln!(out, "{pi}")?;
    }
    if pretty {
        eprintln!("{} permutations of rank {}: {label}", perms.len(), sel.n);
    }
    Ok(())
}

fn occurrences(out: &mut impl Write, pattern: &str, perm: &str, pretty: bool) -> Outcome {
    let pattern: Pattern = pattern.parse()?;
    let perm: Permutation = perm.parse()?;
    if pattern.base().rank() > perm.rank() {
        eprintln!("note: pattern is longer than the permutation");
    }
    for occ in matcher::occurrences(&pattern, &perm) {
        let tuple: Vec<String> = occ.positions().iter().map(|p| p.to_string()).collect();
        if pretty {
            let values: Vec<String> = occ.values().iter().map(|v| v.to_string()).collect();
            writeln!(out, "({})  values ({})", tuple.join(","), values.join(","))?;
        } else {
            writeln!(out, "({})", tuple.join(","))?;
        }
    }
    Ok(())
}

fn translate_cmd(out: &mut impl Write, pattern: &str) -> Outcome {
    let pattern: Pattern = pattern.parse()?;
    for mesh in translate::to_meshes(&pattern)? {
        writeln!(out, "{}", Pattern::from(mesh))?;
    }
    Ok(())
}

#[derive(Serialize)]
struct CheckLine<'a> {
    suite: Suite,
    #[serde(flatten)]
    check: &'a verify::CheckResult,
}

#[derive(Serialize)]
struct SummaryLine {
    suite: Suite,
    max_n: usize,
    seed: u64,
    passed: bool,
    sound: bool,
    checks: usize,
    failed: usize,
}

fn verify_cmd(out: &mut impl Write, suite: &str, max_n: Option<usize>, seed: u64, pretty: bool) -> Outcome {
    let suites: Vec<Suite> = if suite == "all" { Suite::ALL.to_vec() } else { vec![suite.parse()?] };
    if let Some(n) = max_n {
        if n == 0 || n > permpat::enumerate::ENUMERATION_RANK_CAP {
            return Err(Failure::Usage(format!(
                "--max-n must lie in 1..={}",
                permpat::enumerate::ENUMERATION_RANK_CAP
            )));
        }
    }
    let mut all_passed = true;
    for suite in suites {
        let config = SuiteConfig { max_n: max_n.unwrap_or(suite.default_max_n()), seed };
        let report = verify::run_suite(suite, &config);
        if pretty {
            emit(out, &report, true)?;
        } else {
            for check in &report.checks {
                emit(out, &CheckLine { suite, check }, false)?;
            }
            let summary = SummaryLine {
                suite,
                max_n: report.max_n,
                seed: report.seed,
                passed: report.passed,
                sound: report.sound,
                checks: report.checks.len(),
                failed: report.failures().count(),
            };
            emit(out, &summary, false)?;
        }
        if !report.sound {
            eprintln!(
                "warning: {suite} is inconclusive below rank {}; ran up to {}",
                suite.min_sound_n(),
                report.max_n
            );
        }
        for failure in report.failures() {
            eprintln!("FAIL {suite}/{}: {}", failure.name, failure.counterexamples.join("; "));
        }
        all_passed &= report.passed;
    }
    if all_passed {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}
