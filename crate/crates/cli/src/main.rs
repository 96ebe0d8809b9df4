//! `monobase`: command-line access to the analysis, family scans and the raw
//! Dedekind criterion.
//!
//! Exit codes: 0 when every requested answer was decided, 2 when something
//! stayed unknown, 1 on invalid input.

mod output;

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;

use monobase::family::{search_family, FamilyTemplate, SearchOutcome, TemplateRule};
use monobase::report::Monogenicity;
use monobase::{analyze, dedekind, EffortConfig, QuadrinomialSpec, ZPoly};

use output::{emit, OutputDocument};

const MAX_SEARCH_SPAN: i128 = 1_000_000;

#[derive(Parser, Debug)]
#[command(name = "monobase", version, about = "Power integral bases for xⁿ + ax² + bx + c with b² = 4ac")]
struct Cli {
    /// Emit a JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// RNG seed for every randomized step.
    #[arg(long, global = true, env = "MONOBASE_SEED")]
    seed: Option<u64>,
    /// Trial-division bound for integer factorization.
    #[arg(long, global = true)]
    trial_bound: Option<u64>,
    /// Pollard–Brent iteration budget per composite.
    #[arg(long, global = true)]
    rho_budget: Option<u64>,
    /// TOML file with effort settings; flags and MONOBASE_SEED take precedence.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Analyze one polynomial.
    Analyze(AnalyzeArgs),
    /// Analyze many specs, one "n a b c" per line (commas allowed).
    Batch {
        /// Input file, or "-" for stdin.
        #[arg(long, default_value = "-")]
        input: String,
    },
    /// Scan c over a range in a one-parameter family.
    Search {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value = "pc")]
        template: String,
        #[arg(long, allow_negative_numbers = true)]
        c_min: i64,
        #[arg(long, allow_negative_numbers = true)]
        c_max: i64,
    },
    /// Dedekind's criterion for an arbitrary monic polynomial.
    Oracle {
        /// Coefficients, lowest degree first, e.g. "-5,0,1" for x² − 5.
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        #[arg(long)]
        p: BigInt,
    },
    /// Re-run the built-in example corpus.
    Selftest,
}

#[derive(Args, Debug)]
struct AnalyzeArgs {
    #[arg(long)]
    n: u32,
    #[arg(long, allow_negative_numbers = true)]
    a: Option<BigInt>,
    #[arg(long, allow_negative_numbers = true)]
    b: Option<BigInt>,
    #[arg(long, allow_negative_numbers = true)]
    c: BigInt,
    /// Derive a and b from c; only "pc", (a, b) = (c, 2c), exists.
    #[arg(long)]
    template: Option<String>,
}

struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn effort(cli: &Cli) -> Result<EffortConfig, Failure> {
    let mut effort = match &cli.config {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure(format!("{}: {e}", path.display())))?;
            toml::from_str(&text).map_err(|e| Failure(format!("{}: {e}", path.display())))?
        }
        None => EffortConfig::default(),
    };
    if let Some(seed) = cli.seed {
        effort.rng_seed = seed;
    }
    if let Some(t) = cli.trial_bound {
        effort.trial_division_bound = t;
    }
    if let Some(r) = cli.rho_budget {
        effort.rho_iteration_budget = r;
    }
    Ok(effort)
}

fn run(cli: &Cli) -> Result<u8, Failure> {
    let effort = effort(cli)?;
    let mut doc = OutputDocument::new(&effort);
    let (code, text) = match &cli.command {
        Command::Analyze(args) => run_analyze(args, &effort, &mut doc)?,
        Command::Batch { input } => run_batch(input, &effort, &mut doc)?,
        Command::Search {
            n,
            template,
            c_min,
            c_max,
        } => run_search(*n, template, *c_min, *c_max, &effort, &mut doc)?,
        Command::Oracle { poly, p } => run_oracle(poly, p, &effort, &mut doc)?,
        Command::Selftest => run_selftest(&effort, &mut doc)?,
    };
    emit(&doc, cli.json, &text)?;
    Ok(code)
}

fn spec_from_args(args: &AnalyzeArgs) -> Result<QuadrinomialSpec, Failure> {
    match (&args.template, &args.a, &args.b) {
        (Some(t), None, None) => {
            let rule: TemplateRule = t.parse()?;
            Ok(FamilyTemplate { n: args.n, rule }.spec_for(&args.c)?)
        }
        (Some(_), _, _) => Err(Failure("--template cannot be combined with --a/--b".into())),
        (None, Some(a), Some(b)) => Ok(QuadrinomialSpec::new(
            args.n,
            a.clone(),
            b.clone(),
            args.c.clone(),
        )?),
        (None, _, _) => Err(Failure("either --a and --b, or --template, is required".into())),
    }
}

fn exit_for(m: Monogenicity) -> u8 {
    if m == Monogenicity::Unknown {
        2
    } else {
        0
    }
}

fn run_analyze(
    args: &AnalyzeArgs,
    effort: &EffortConfig,
    doc: &mut OutputDocument,
) -> Result<(u8, String), Failure> {
    let spec = spec_from_args(args)?;
    let report = analyze(&spec, effort)?;
    doc.command = "analyze".into();
    doc.warnings.extend(report.caveats.iter().cloned());
    doc.set_result(&report)?;
    Ok((exit_for(report.monogenic), report.to_string()))
}

fn parse_line(line: &str) -> Result<QuadrinomialSpec, Failure> {
    let fields: Vec<&str> = line
        .split(|ch: char| ch == ',' || ch.is_whitespace())
        .filter(|s| !s.is_empty())
        .collect();
    let [n, a, b, c] = fields.as_slice() else {
        return Err(Failure(format!("expected 4 fields \"n a b c\", got {}", fields.len())));
    };
    Ok(QuadrinomialSpec::new(
        n.parse()?,
        normalize(a).parse()?,
        normalize(b).parse()?,
        normalize(c).parse()?,
    )?)
}

fn run_batch(
    input: &str,
    effort: &EffortConfig,
    doc: &mut OutputDocument,
) -> Result<(u8, String), Failure> {
    let mut text = String::new();
    if input == "-" {
        std::io::stdin().read_to_string(&mut text)?;
    } else {
        text = std::fs::read_to_string(input).map_err(|e| Failure(format!("{input}: {e}")))?;
    }
    let mut results = Vec::new();
    let mut out = String::new();
    let mut code = 0u8;
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let lineno = i + 1;
        match parse_line(line).and_then(|s| analyze(&s, effort).map_err(Failure::from)) {
            Ok(report) => {
                if report.monogenic == Monogenicity::Unknown && code == 0 {
                    code = 2;
                }
                out.push_str(&format!(
                    "line {lineno}: {}  monogenic: {}  index: {}\n",
                    report.spec, report.monogenic, report.index
                ));
                results.push(serde_json::json!({ "line": lineno, "report": report }));
            }
            Err(Failure(msg)) => {
                code = 1;
                out.push_str(&format!("line {lineno}: error: {msg}\n"));
                doc.warnings.push(format!("line {lineno}: {msg}"));
                results.push(serde_json::json!({ "line": lineno, "error": msg }));
            }
        }
    }
    doc.command = "batch".into();
    doc.result = serde_json::Value::Array(results);
    Ok((code, out))
}

fn run_search(
    n: u32,
    template: &str,
    c_min: i64,
    c_max: i64,
    effort: &EffortConfig,
    doc: &mut OutputDocument,
) -> Result<(u8, String), Failure> {
    let rule: TemplateRule = template.parse()?;
    if c_max as i128 - c_min as i128 >= MAX_SEARCH_SPAN {
        return Err(Failure(format!(
            "range [{c_min}, {c_max}] spans more than {MAX_SEARCH_SPAN} values"
        )));
    }
    let template = FamilyTemplate { n, rule };
    template.spec_for(&BigInt::from(2))?;
    let entries = search_family(&template, c_min..=c_max, effort);
    let mut out = String::new();
    let mut code = 0u8;
    for e in &entries {
        let line = match &e.outcome {
            SearchOutcome::Decided { summary } => {
                if summary.monogenic == Monogenicity::Unknown {
                    code = 2;
                }
                format!("{:>6}  monogenic: {:<7}  index: {}", e.c, summary.monogenic, summary.index)
            }
            SearchOutcome::Skipped { skip } => format!("{:>6}  skipped: {skip}", e.c),
        };
        out.push_str(&line);
        out.push('\n');
    }
    doc.command = "search".into();
    doc.set_result(&entries)?;
    Ok((code, out))
}

fn normalize(s: &str) -> String {
    s.trim().replace('\u{2212}', "-")
}

fn run_oracle(
    poly: &str,
    p: &BigInt,
    effort: &EffortConfig,
    doc: &mut OutputDocument,
) -> Result<(u8, String), Failure> {
    let coeffs = poly
        .split(',')
        .map(|s| normalize(s).parse::<BigInt>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| Failure(format!("--poly: {e}")))?;
    let f = ZPoly::new(coeffs);
    let outcome = dedekind::dedekind_divides_index(&f, p, effort.rng_seed)?;
    let text = format!(
        "f(x) = {f}\np = {p}\ndivides index: {}\nM mod p = {}\n",
        outcome.divides, outcome.witness.m_bar
    );
    doc.command = "oracle".into();
    doc.set_result(&outcome)?;
    Ok((0, text))
}

fn run_selftest(effort: &EffortConfig, doc: &mut OutputDocument) -> Result<(u8, String), Failure> {
    let template = FamilyTemplate::pc(7);
    let mut out = String::new();
    let mut checks = Vec::new();
    for (c, mono, index) in [
        (2, Monogenicity::No, 3),
        (5, Monogenicity::Yes, 1),
        (7, Monogenicity::No, 11),
    ] {
        let report = analyze(&template.spec_for(&BigInt::from(c))?, effort)?;
        let index_ok = matches!(&report.index,
            monobase::report::IndexStatus::Exact { value } if *value == BigInt::from(index));
        let ok = report.monogenic == mono
            && index_ok
            && report
                .primes
                .iter()
                .all(|v| v.oracle != monobase::report::OracleCheck::Disagrees);
        out.push_str(&format!(
            "{} x^7 + {c}(x+1)^2: monogenic {}, index {}\n",
            if ok { "PASS" } else { "FAIL" },
            report.monogenic,
            report.index
        ));
        checks.push(serde_json::json!({ "c": c, "pass": ok }));
    }
    let all = checks.iter().all(|c| c["pass"] == true);
    doc.command = "selftest".into();
    doc.result = serde_json::json!({ "checks": checks, "pass": all });
    Ok((if all { 0 } else { 1 }, out))
}
