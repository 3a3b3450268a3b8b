//! Command-line front end: analysis, extension chains, exhaustive
//! enumeration, verification sweeps, and bent seed generation.
//!
//! Exit codes: 0 success (and zero counterexamples), 1 usage error,
//! 2 input format error, 3 verification counterexample found.

use bentfn::construct::{self, LinearOffset};
use bentfn::oracle;
use bentfn::restricted::{self, VerifyMode};
use bentfn::{AnfPolynomial, BooleanFunction, Error, WalshSpectrum};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::fmt;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

const EXIT_USAGE: u8 = 1;
const EXIT_FORMAT: u8 = 2;
const EXIT_COUNTEREXAMPLE: u8 = 3;

#[derive(Parser)]
#[command(
    name = "bentfn",
    version,
    about = "Bent Boolean function analysis, extension, and verification",
    after_help = "Truth-table text format: a `n=<int>` header line followed by one line of\n\
                  ceil(2^n/4) hex digits, most significant digit first; table bit 0 is the\n\
                  least significant bit of the last digit. ANF format: terms joined by `+`,\n\
                  monomials like `x1*x2`, constant `1`, zero polynomial `0`."
)]
struct Cli {
    /// Worker threads for enumeration/verification sweeps (default: all cores)
    #[arg(long, global = true, value_name = "N")]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct InputArgs {
    /// Read the function from a truth-table text file
    #[arg(long = "in", value_name = "PATH")]
    input: Option<PathBuf>,
    /// Inline truth-table hex digits (requires -n)
    #[arg(long, value_name = "DIGITS")]
    hex: Option<String>,
    /// Inline ANF polynomial, e.g. "x1*x2 + x3 + 1" (requires -n)
    #[arg(long, value_name = "POLY")]
    anf: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Report weight, degree, spectrum summary, and parity-class balance
    Analyze {
        #[command(flatten)]
        source: InputArgs,
        /// Variable count for --hex/--anf input
        #[arg(short = 'n', long, value_name = "INT")]
        n: Option<usize>,
    },
    /// Extend a bent seed two variables at a time up to a target dimension
    Extend {
        #[command(flatten)]
        source: InputArgs,
        /// Variable count for --hex/--anf input
        #[arg(short = 'n', long, value_name = "INT")]
        n: Option<usize>,
        /// Final variable count (even, greater than the seed's)
        #[arg(long, value_name = "INT")]
        target_n: usize,
        /// Per-step offset b as hex of the packed (a_0, a_bar, a_s) vector;
        /// repeat once per step
        #[arg(long = "offset", value_name = "HEXBITS")]
        offsets: Vec<String>,
        /// Write the construction trace as CSV (step,offset,n,bent,balanced)
        #[arg(long, value_name = "PATH")]
        trace: Option<PathBuf>,
        /// Output path for the final truth table (stdout if omitted)
        #[arg(short, long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Run oracle-vs-fast-path and theorem verification suites
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        /// Dimension to check (suite-specific default schedule if omitted)
        #[arg(short = 'n', long, value_name = "INT")]
        n: Option<usize>,
        /// Sample count for randomized checks (default: 100, theorem4: 10000)
        #[arg(long, value_name = "INT")]
        samples: Option<u64>,
        #[arg(long, default_value_t = 0xB5EED, value_name = "U64")]
        rng_seed: u64,
        /// Write per-function rows (theorem4) or summary rows as CSV
        #[arg(long, value_name = "PATH")]
        csv: Option<PathBuf>,
    },
    /// Exhaustively scan every truth table of n in {2, 4}
    Enumerate {
        #[arg(short = 'n', long, value_name = "INT")]
        n: usize,
        /// Write the summary as a one-row CSV
        #[arg(long, value_name = "PATH")]
        csv: Option<PathBuf>,
    },
    /// Generate a random bent function (Maiorana-McFarland)
    Seed {
        /// Variable count (even, 2..=16)
        #[arg(short = 'n', long, value_name = "INT")]
        n: usize,
        #[arg(long, default_value_t = 0xB5EED, value_name = "U64")]
        rng_seed: u64,
        /// Output path (stdout if omitted)
        #[arg(short, long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq)]
enum Suite {
    Walsh,
    Nonlinearity,
    Theorem4,
    Algorithms,
    All,
}

enum CliError {
    Lib(Error),
    Usage(String),
    Io(PathBuf, std::io::Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Lib(e) => write!(f, "{e}"),
            CliError::Usage(msg) => write!(f, "{msg}"),
            CliError::Io(path, e) => write!(f, "{}: {e}", path.display()),
        }
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Lib(Error::Parse { .. }) | CliError::Lib(Error::HexLength { .. }) => {
                EXIT_FORMAT
            }
            _ => EXIT_USAGE,
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    if let Some(threads) = cli.threads {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global();
    }
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}

fn run(command: Command) -> Result<ExitCode, CliError> {
    match command {
        Command::Analyze { source, n } => cmd_analyze(&source, n),
        Command::Extend {
            source,
            n,
            target_n,
            offsets,
            trace,
            out,
        } => cmd_extend(&source, n, target_n, &offsets, trace.as_deref(), out.as_deref()),
        Command::Verify {
            suite,
            n,
            samples,
            rng_seed,
            csv,
        } => cmd_verify(suite, n, samples, rng_seed, csv.as_deref()),
        Command::Enumerate { n, csv } => cmd_enumerate(n, csv.as_deref()),
        Command::Seed { n, rng_seed, out } => cmd_seed(n, rng_seed, out.as_deref()),
    }
}

fn load_function(source: &InputArgs, n: Option<usize>) -> Result<BooleanFunction, CliError> {
    if let Some(path) = &source.input {
        let text = fs::read_to_string(path).map_err(|e| CliError::Io(path.clone(), e))?;
        return Ok(BooleanFunction::from_text(&text)?);
    }
    let n = n.ok_or_else(|| CliError::Usage("-n is required with --hex/--anf".into()))?;
    if let Some(hex) = &source.hex {
        return Ok(BooleanFunction::from_hex(n, hex.trim())?);
    }
    let anf = source.anf.as_ref().expect("clap group guarantees a source");
    Ok(AnfPolynomial::parse(anf, n)?.truth_table())
}

fn write_output(path: Option<&Path>, content: &str) -> Result<(), CliError> {
    match path {
        Some(path) => {
            fs::write(path, content).map_err(|e| CliError::Io(path.to_path_buf(), e))
        }
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn cmd_analyze(source: &InputArgs, n: Option<usize>) -> Result<ExitCode, CliError> {
    let f = load_function(source, n)?;
    let spectrum = WalshSpectrum::compute(&f);
    let balance = restricted::restricted_balance(&f);
    println!("n: {}", f.n());
    println!("weight: {}", f.weight());
    println!("degree: {}", f.anf().degree());
    println!("max |walsh|: {}", spectrum.max_abs());
    println!("nonlinearity: {}", spectrum.nonlinearity());
    println!("bent: {}", spectrum.is_bent());
    println!(
        "balanced_even: {} (zeros={}, ones={})",
        balance.balanced_even, balance.zeros_even, balance.ones_even
    );
    println!(
        "balanced_odd: {} (zeros={}, ones={})",
        balance.balanced_odd, balance.zeros_odd, balance.ones_odd
    );
    Ok(ExitCode::SUCCESS)
}

fn parse_offsets(
    raw: &[String],
    seed_n: usize,
    target_n: usize,
) -> Result<Option<Vec<LinearOffset>>, CliError> {
    if raw.is_empty() {
        return Ok(None);
    }
    let steps = target_n.saturating_sub(seed_n) / 2;
    if raw.len() != steps {
        return Err(CliError::Lib(Error::OffsetCount {
            expected: steps,
            actual: raw.len(),
        }));
    }
    let mut offsets = Vec::with_capacity(raw.len());
    for (k, text) in raw.iter().enumerate() {
        let width = seed_n + 2 * k + 2;
        let bits = u32::from_str_radix(text.trim(), 16).map_err(|_| {
            CliError::Lib(Error::Parse {
                line: 1,
                column: 1,
                message: format!("offset {:?} is not a hex bit vector", text),
            })
        })?;
        offsets.push(LinearOffset::from_packed(bits, width)?);
    }
    Ok(Some(offsets))
}

fn cmd_extend(
    source: &InputArgs,
    n: Option<usize>,
    target_n: usize,
    raw_offsets: &[String],
    trace_path: Option<&Path>,
    out: Option<&Path>,
) -> Result<ExitCode, CliError> {
    let seed = load_function(source, n)?;
    let offsets = parse_offsets(raw_offsets, seed.n(), target_n)?;
    let trace = construct::build_chain(&seed, target_n, offsets.as_deref())?;
    if let Some(path) = trace_path {
        let mut csv = String::from("step,offset,n,bent,balanced\n");
        for (k, step) in trace.steps.iter().enumerate() {
            let offset = step
                .offset
                .as_ref()
                .map(|o| format!("{:x}", o.packed()))
                .unwrap_or_else(|| "-".into());
            csv.push_str(&format!(
                "{},{},{},{},{}\n",
                k + 1,
                offset,
                step.n,
                step.bent,
                step.balanced
            ));
        }
        fs::write(path, csv).map_err(|e| CliError::Io(path.to_path_buf(), e))?;
    }
    write_output(out, &trace.final_function.to_text())?;
    if out.is_some() {
        println!(
            "extended n={} seed to bent function on n={} (nonlinearity {})",
            trace.seed.n(),
            trace.final_function.n(),
            WalshSpectrum::compute(&trace.final_function).nonlinearity()
        );
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_enumerate(n: usize, csv: Option<&Path>) -> Result<ExitCode, CliError> {
    if n != 2 && n != 4 {
        return Err(CliError::Usage(format!(
            "exhaustive enumeration supports n in {{2, 4}}, got n={n}; \
             for larger even n use `bentfn verify --suite theorem4 -n {n}` (sampled)"
        )));
    }
    let summary = oracle::par_enumerate_bent(n)?;
    println!("n: {}", summary.n);
    println!("functions scanned: {}", summary.total_functions);
    println!("bent: {}", summary.bent_count);
    println!("bent balanced on even class: {}", summary.even_balanced_count);
    println!("bent balanced on odd class: {}", summary.odd_balanced_count);
    println!("bent balanced on both: {}", summary.both_balanced_count);
    println!("counterexamples: {}", summary.counterexamples.len());
    for c in &summary.counterexamples {
        println!("  {}: {}", c.function.to_hex(), c.reason);
    }
    if let Some(path) = csv {
        let mut text = String::from(
            "n,total_functions,bent_count,even_balanced,odd_balanced,both_balanced,counterexamples\n",
        );
        text.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            summary.n,
            summary.total_functions,
            summary.bent_count,
            summary.even_balanced_count,
            summary.odd_balanced_count,
            summary.both_balanced_count,
            summary.counterexamples.len()
        ));
        fs::write(path, text).map_err(|e| CliError::Io(path.to_path_buf(), e))?;
    }
    Ok(if summary.holds() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_COUNTEREXAMPLE)
    })
}

fn cmd_seed(n: usize, rng_seed: u64, out: Option<&Path>) -> Result<ExitCode, CliError> {
    let f = construct::seed_bent(n, rng_seed)?;
    write_output(out, &f.to_text())?;
    if out.is_some() {
        println!(
            "wrote bent function on n={} (nonlinearity {})",
            f.n(),
            WalshSpectrum::compute(&f).nonlinearity()
        );
    }
    Ok(ExitCode::SUCCESS)
}

/// One verification sub-check: what ran, how much, how many disagreements.
struct SuiteLine {
    label: String,
    checked: u64,
    counterexamples: u64,
}

fn random_function(n: usize, rng: &mut ChaCha8Rng) -> BooleanFunction {
    BooleanFunction::from_fn(n, |_| rng.random()).expect("n validated by caller")
}

fn walsh_check(n: usize, samples: u64, rng_seed: u64) -> Result<SuiteLine, CliError> {
    if n > 16 {
        return Err(CliError::Usage(format!(
            "walsh suite supports n <= 16 (oracle bound), got {n}"
        )));
    }
    let mut checked = 0u64;
    let mut bad = 0u64;
    if n <= 4 {
        for t in 0..(1u64 << (1 << n)) {
            let f = BooleanFunction::from_u64_table(n, t)?;
            checked += 1;
            if oracle::naive_walsh_spectrum(&f)? != WalshSpectrum::compute(&f).values() {
                bad += 1;
            }
        }
        Ok(SuiteLine {
            label: format!("walsh n={n} (exhaustive)"),
            checked,
            counterexamples: bad,
        })
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
        for _ in 0..samples {
            let f = random_function(n, &mut rng);
            checked += 1;
            if oracle::naive_walsh_spectrum(&f)? != WalshSpectrum::compute(&f).values() {
                bad += 1;
            }
        }
        Ok(SuiteLine {
            label: format!("walsh n={n} ({samples} random)"),
            checked,
            counterexamples: bad,
        })
    }
}

fn nonlinearity_check(n: usize, samples: u64, rng_seed: u64) -> Result<SuiteLine, CliError> {
    if n > 12 {
        return Err(CliError::Usage(format!(
            "nonlinearity suite supports n <= 12 (oracle bound), got {n}"
        )));
    }
    let mut checked = 0u64;
    let mut bad = 0u64;
    if n <= 4 {
        for t in 0..(1u64 << (1 << n)) {
            let f = BooleanFunction::from_u64_table(n, t)?;
            checked += 1;
            if oracle::naive_nonlinearity(&f)? != WalshSpectrum::compute(&f).nonlinearity() {
                bad += 1;
            }
        }
        Ok(SuiteLine {
            label: format!("nonlinearity n={n} (exhaustive)"),
            checked,
            counterexamples: bad,
        })
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
        for _ in 0..samples {
            let f = random_function(n, &mut rng);
            checked += 1;
            if oracle::naive_nonlinearity(&f)? != WalshSpectrum::compute(&f).nonlinearity() {
                bad += 1;
            }
        }
        Ok(SuiteLine {
            label: format!("nonlinearity n={n} ({samples} random)"),
            checked,
            counterexamples: bad,
        })
    }
}

fn theorem4_check(
    n: usize,
    samples: u64,
    rng_seed: u64,
    csv: &mut Option<String>,
) -> Result<SuiteLine, CliError> {
    let mode = if n <= 4 {
        VerifyMode::Exhaustive
    } else {
        VerifyMode::Sampled {
            count: samples,
            rng_seed,
        }
    };
    let report = restricted::verify_parity_balance_theorem(n, mode)?;
    if let Some(rows) = csv {
        let population: Vec<BooleanFunction> = match mode {
            VerifyMode::Exhaustive => oracle::bent_functions(n)?,
            VerifyMode::Sampled { count, rng_seed } => {
                let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
                (0..count)
                    .map(|_| construct::random_bent(n, &mut rng))
                    .collect::<Result<_, _>>()?
            }
        };
        for f in &population {
            let s = WalshSpectrum::compute(f);
            let b = restricted::restricted_balance(f);
            rows.push_str(&format!(
                "{},{},{},{},{},{},{},{}\n",
                f.to_hex(),
                f.weight(),
                s.nonlinearity(),
                s.is_bent(),
                b.balanced_even,
                b.balanced_odd,
                b.zeros_even,
                b.zeros_odd
            ));
        }
    }
    let mode_label = match mode {
        VerifyMode::Exhaustive => "exhaustive".to_string(),
        VerifyMode::Sampled { count, .. } => format!("{count} samples"),
    };
    Ok(SuiteLine {
        label: format!(
            "theorem4 n={n} ({mode_label}): {} bent, {} even-balanced, {} odd-balanced",
            report.bent_count, report.even_balanced, report.odd_balanced
        ),
        checked: report.bent_count,
        counterexamples: report.counterexamples.len() as u64,
    })
}

fn algorithms_check(max_seed_n: usize) -> Result<Vec<SuiteLine>, CliError> {
    let mut lines = Vec::new();
    let mut seed_dims = vec![2usize];
    if max_seed_n >= 4 {
        seed_dims.push(4);
    }
    for dim in &seed_dims {
        let seeds = oracle::bent_functions(*dim)?;
        let mut bad = 0u64;
        for g in &seeds {
            if oracle::check_algorithm1(g)?.is_some() {
                bad += 1;
            }
        }
        lines.push(SuiteLine {
            label: format!("algorithm1 vs extension, all {} bent seeds n={dim}", seeds.len()),
            checked: seeds.len() as u64,
            counterexamples: bad,
        });
    }
    let mut checked = 0u64;
    let mut bad = 0u64;
    for g in oracle::bent_functions(2)? {
        for packed in 0..16u32 {
            let off = LinearOffset::from_packed(packed, 4)?;
            checked += 1;
            if let Some(mismatch) = oracle::check_algorithm2(&g, &off)? {
                eprintln!(
                    "algorithm2 mismatch: branch {} point {}",
                    mismatch.branch, mismatch.point
                );
                bad += 1;
            }
        }
    }
    if max_seed_n >= 4 {
        let quadratic = BooleanFunction::from_fn(4, |x| {
            (x & 1 == 1 && x & 2 == 2) ^ (x & 4 == 4 && x & 8 == 8)
        })?;
        for packed in 0..64u32 {
            let off = LinearOffset::from_packed(packed, 6)?;
            checked += 1;
            if let Some(mismatch) = oracle::check_algorithm2(&quadratic, &off)? {
                eprintln!(
                    "algorithm2 mismatch: branch {} point {}",
                    mismatch.branch, mismatch.point
                );
                bad += 1;
            }
        }
    }
    lines.push(SuiteLine {
        label: "algorithm2 vs offset extension".into(),
        checked,
        counterexamples: bad,
    });
    Ok(lines)
}

fn cmd_verify(
    suite: Suite,
    n: Option<usize>,
    samples: Option<u64>,
    rng_seed: u64,
    csv_path: Option<&Path>,
) -> Result<ExitCode, CliError> {
    let mut lines: Vec<SuiteLine> = Vec::new();
    let mut theorem4_rows = csv_path.map(|_| {
        String::from("function_hex,wH,Nl,bent,balanced_even,balanced_odd,zeros_even,zeros_odd\n")
    });

    let walsh_samples = samples.unwrap_or(100);
    let theorem_samples = samples.unwrap_or(10_000);

    if matches!(suite, Suite::Walsh | Suite::All) {
        match n {
            Some(n) => lines.push(walsh_check(n, walsh_samples, rng_seed)?),
            None => {
                for n in 1..=4 {
                    lines.push(walsh_check(n, walsh_samples, rng_seed)?);
                }
                for n in [6, 8, 10, 12] {
                    lines.push(walsh_check(n, walsh_samples, rng_seed)?);
                }
            }
        }
    }
    if matches!(suite, Suite::Nonlinearity | Suite::All) {
        match n {
            Some(n) => lines.push(nonlinearity_check(n, walsh_samples, rng_seed)?),
            None => {
                for n in 1..=4 {
                    lines.push(nonlinearity_check(n, walsh_samples, rng_seed)?);
                }
            }
        }
    }
    if matches!(suite, Suite::Theorem4 | Suite::All) {
        match n {
            Some(n) => lines.push(theorem4_check(n, theorem_samples, rng_seed, &mut theorem4_rows)?),
            None => {
                lines.push(theorem4_check(2, theorem_samples, rng_seed, &mut theorem4_rows)?);
                lines.push(theorem4_check(4, theorem_samples, rng_seed, &mut theorem4_rows)?);
                lines.push(theorem4_check(6, theorem_samples, rng_seed, &mut theorem4_rows)?);
            }
        }
    }
    if matches!(suite, Suite::Algorithms | Suite::All) {
        lines.extend(algorithms_check(n.unwrap_or(4))?);
    }

    let mut total_bad = 0u64;
    for line in &lines {
        println!(
            "{}: {} checked, {} counterexamples",
            line.label, line.checked, line.counterexamples
        );
        total_bad += line.counterexamples;
    }
    if let (Some(path), Some(rows)) = (csv_path, theorem4_rows.as_ref()) {
        if matches!(suite, Suite::Theorem4 | Suite::All) {
            fs::write(path, rows).map_err(|e| CliError::Io(path.to_path_buf(), e))?;
        } else {
            let mut text = String::from("suite,checked,counterexamples\n");
            for line in &lines {
                text.push_str(&format!(
                    "{},{},{}\n",
                    line.label, line.checked, line.counterexamples
                ));
            }
            fs::write(path, text).map_err(|e| CliError::Io(path.to_path_buf(), e))?;
        }
    }
    let _ = std::io::stdout().flush();
    if total_bad == 0 {
        Ok(ExitCode::SUCCESS)
    } else {
        println!("counterexamples found: {total_bad}");
        Ok(ExitCode::from(EXIT_COUNTEREXAMPLE))
    }
}
