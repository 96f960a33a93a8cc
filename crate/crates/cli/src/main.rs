use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use orthodiff::format::{
    all_real, coeff_table_csv, from_json, pairs_csv, parse_scalar, to_json, ClassifyJson,
    DiffOpJson, GammaJson, PolyJson, RootReportJson, TtrJson,
};
use orthodiff::verify::{self, Suite};
use orthodiff::Error;
use orthodiff_core::classify::{classify_gamma, MIN_LEN};
use orthodiff_core::laguerreop::{laguerre_operator, ACoeffs};
use orthodiff_core::opsfam::{
    hermite_gen_family, hermite_std_family, laguerre_family, shift_system,
};
use orthodiff_core::rootcheck::count_real_roots;
use orthodiff_core::{
    ClassifyResult, Field, GammaSeq, GaussianRational, Poly, Rational, RootReport,
};

/// Exit status for a refuted identity or a sequence that is not orthogonal.
const REFUTED: u8 = 1;
/// Exit status for bad flags or unreadable input.
const USAGE: u8 = 2;

#[derive(Parser)]
#[command(
    name = "orthodiff",
    version,
    about = "Exact computations with orthogonal polynomials and differential operators"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate P_0..P_N of a polynomial family.
    Gen(GenArgs),
    /// Decide whether φ(D) = Σ γ_k D^k / k! induces an orthogonal system.
    Classify(ClassifyArgs),
    /// Run a self-check suite; exits 1 if any check fails.
    Verify(VerifyArgs),
    /// The differential operator mapping x^n to the Laguerre polynomial L_n.
    LaguerreOp(LaguerreOpArgs),
    /// Count and isolate the real roots of a polynomial.
    Roots(RootsArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    /// Physicists' Hermite polynomials H_n.
    HermiteStd,
    /// Monic H_n^α(x − β), the images e^{−αD²/2 − βD} x^n.
    HermiteGen,
    /// γ0 e^{−αD²/2 − βD} x^n.
    ExpOp,
    /// Laguerre polynomials L_n^α.
    Laguerre,
    /// A three-term recurrence read from --in.
    Ttr,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Plain,
}

#[derive(Args)]
struct Output {
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Write to a file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, value_enum)]
    family: Family,
    #[arg(long, default_value = "10")]
    n: usize,
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    beta: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    gamma0: Option<String>,
    /// Recurrence specification (JSON) for `--family ttr`.
    #[arg(long = "in")]
    input: Option<PathBuf>,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct ClassifyArgs {
    /// Sequence file `{"gammas": [...]}`. Without it the sequence is built
    /// from --gamma0, --alpha and --beta.
    #[arg(long = "in")]
    input: Option<PathBuf>,
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    beta: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    gamma0: Option<String>,
    /// Highest index checked; defaults to the whole file, or 10.
    #[arg(long)]
    n: Option<usize>,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum, default_value = "all")]
    suite: Suite,
    #[arg(long, default_value = "20")]
    n: usize,
    #[arg(long, default_value = "0")]
    seed: u64,
    #[arg(long, value_enum, default_value = "plain")]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct LaguerreOpArgs {
    #[arg(long, default_value = "10")]
    n: usize,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct RootsArgs {
    /// Polynomial file `{"coeffs": [...]}`.
    #[arg(long = "in")]
    input: PathBuf,
    #[command(flatten)]
    output: Output,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(USAGE)
        }
    }
}

fn run(command: Command) -> Result<u8, Error> {
    match command {
        Command::Gen(args) => gen(args),
        Command::Classify(args) => classify(args),
        Command::Verify(args) => run_verify(args),
        Command::LaguerreOp(args) => laguerre_op(args),
        Command::Roots(args) => roots(args),
    }
}

fn read(path: &Path) -> Result<String, Error> {
    fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<(), Error> {
    match out {
        Some(path) => fs::write(path, text).map_err(|source| Error::Io {
            path: path.display().to_string(),
            source,
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn unsupported(format: Format, what: &str) -> Error {
    let name = match format {
        Format::Json => "json",
        Format::Csv => "csv",
        Format::Plain => "plain",
    };
    Error::Usage(format!("{what} has no {name} output"))
}

fn render_polys<F: Field>(polys: &[Poly<F>], name: &str, format: Format) -> String {
    match format {
        Format::Json => {
            let list: Vec<PolyJson> = polys.iter().map(PolyJson::from_poly).collect();
            to_json(&list)
        }
        Format::Csv => coeff_table_csv(polys),
        Format::Plain => polys
            .iter()
            .enumerate()
            .map(|(n, p)| format!("{name}_{n} = {p}\n"))
            .collect(),
    }
}

fn gen(args: GenArgs) -> Result<u8, Error> {
    let n = args.n;
    let text = match args.family {
        Family::HermiteStd => render_polys(&hermite_std_family(n), "H", args.output.format),
        Family::Laguerre => {
            let alpha: Rational = parse_scalar(args.alpha.as_deref().unwrap_or("0"))?;
            render_polys(&laguerre_family(&alpha, n), "L", args.output.format)
        }
        Family::HermiteGen | Family::ExpOp => {
            let alpha = args.alpha.as_deref().unwrap_or("1");
            let beta = args.beta.as_deref().unwrap_or("0");
            let gamma0 = match args.family {
                Family::ExpOp => args.gamma0.as_deref().unwrap_or("1"),
                _ => "1",
            };
            if all_real([alpha, beta, gamma0]) {
                gen_exp::<Rational>(gamma0, alpha, beta, n, args.output.format)?
            } else {
                gen_exp::<GaussianRational>(gamma0, alpha, beta, n, args.output.format)?
            }
        }
        Family::Ttr => {
            let path = args
                .input
                .as_deref()
                .ok_or_else(|| Error::Usage("--family ttr needs --in <spec.json>".into()))?;
            let spec: TtrJson = from_json(&read(path)?)?;
            if all_real(spec.scalars()) {
                render_polys(
                    &spec.to_spec::<Rational>()?.generate(n)?,
                    "P",
                    args.output.format,
                )
            } else {
                let polys = spec.to_spec::<GaussianRational>()?.generate(n)?;
                render_polys(&polys, "P", args.output.format)
            }
        }
    };
    emit(&args.output.out, &text)?;
    Ok(0)
}

fn gen_exp<F: Field + FromStr>(
    gamma0: &str,
    alpha: &str,
    beta: &str,
    n: usize,
    format: Format,
) -> Result<String, Error> {
    let (gamma0, alpha, beta): (F, F, F) = (
        parse_scalar(gamma0)?,
        parse_scalar(alpha)?,
        parse_scalar(beta)?,
    );
    let polys: Vec<Poly<F>> = shift_system(&hermite_gen_family(&alpha, n), &-beta)
        .iter()
        .map(|p| p.scale(&gamma0))
        .collect();
    Ok(render_polys(&polys, "P", format))
}

/// `γ_0..=γ_N` from `γ_k = −β γ_{k−1} − α (k−1) γ_{k−2}`, without rejecting
/// degenerate parameters.
fn recurrence_sequence<F: Field>(gamma0: F, alpha: F, beta: F, n: usize) -> GammaSeq<F> {
    let mut gs = vec![gamma0];
    for k in 1..=n {
        let mut next = -beta.clone() * gs[k - 1].clone();
        if k >= 2 {
            next = next - alpha.clone() * F::from((k - 1) as i64) * gs[k - 2].clone();
        }
        gs.push(next);
    }
    GammaSeq::new(gs)
}

fn classify(args: ClassifyArgs) -> Result<u8, Error> {
    let (gammas, n) = match &args.input {
        Some(path) => {
            let file: GammaJson = from_json(&read(path)?)?;
            if file.gammas.is_empty() {
                return Err(Error::Usage(format!("{}: empty sequence", path.display())));
            }
            let n = args.n.unwrap_or(file.gammas.len() - 1);
            (file, n)
        }
        None => {
            let alpha = args
                .alpha
                .as_deref()
                .ok_or_else(|| Error::Usage("classify needs --in or --alpha".into()))?;
            let beta = args.beta.as_deref().unwrap_or("0");
            let gamma0 = args.gamma0.as_deref().unwrap_or("1");
            let n = args.n.unwrap_or(10);
            let gammas = if all_real([alpha, beta, gamma0]) {
                let g = recurrence_sequence::<Rational>(
                    parse_scalar(gamma0)?,
                    parse_scalar(alpha)?,
                    parse_scalar(beta)?,
                    n.max(MIN_LEN - 1),
                );
                GammaJson::from_gamma(&g)
            } else {
                let g = recurrence_sequence::<GaussianRational>(
                    parse_scalar(gamma0)?,
                    parse_scalar(alpha)?,
                    parse_scalar(beta)?,
                    n.max(MIN_LEN - 1),
                );
                GammaJson::from_gamma(&g)
            };
            (gammas, n)
        }
    };
    let (json, plain, exp_form) = if all_real(gammas.gammas.iter().map(String::as_str)) {
        classify_as::<Rational>(&gammas, n)?
    } else {
        classify_as::<GaussianRational>(&gammas, n)?
    };
    let text = match args.output.format {
        Format::Json => to_json(&json),
        Format::Plain => plain,
        Format::Csv => return Err(unsupported(Format::Csv, "classify")),
    };
    emit(&args.output.out, &text)?;
    Ok(if exp_form { 0 } else { REFUTED })
}

fn classify_as<F: Field + FromStr>(
    gammas: &GammaJson,
    n: usize,
) -> Result<(ClassifyJson, String, bool), Error> {
    let verdict = classify_gamma(&gammas.to_gamma::<F>()?, n)?;
    let plain = match &verdict {
        ClassifyResult::ExpForm(p) => format!(
            "exp_form gamma0={} alpha={} beta={} (consistent up to n={n})\n",
            p.gamma0(),
            p.alpha(),
            p.beta()
        ),
        ClassifyResult::NotOps { index, reason } => {
            format!("not_ops index={index} reason={}\n", reason.as_str())
        }
    };
    Ok((
        ClassifyJson::from_result(&verdict),
        plain,
        verdict.is_exp_form(),
    ))
}

fn run_verify(args: VerifyArgs) -> Result<u8, Error> {
    if args.n < args.suite.min_n() {
        return Err(Error::Usage(format!(
            "suite {} needs --n >= {}",
            args.suite.as_str(),
            args.suite.min_n()
        )));
    }
    let report = verify::run(args.suite, args.n, args.seed);
    let text = match args.format {
        Format::Json => to_json(&report),
        Format::Plain => report.plain(),
        Format::Csv => return Err(unsupported(Format::Csv, "verify")),
    };
    emit(&args.out, &text)?;
    Ok(if report.passed { 0 } else { REFUTED })
}

fn laguerre_op(args: LaguerreOpArgs) -> Result<u8, Error> {
    let op = laguerre_operator(args.n);
    let text = match args.output.format {
        Format::Json => to_json(&DiffOpJson::from_diffop(&op)),
        Format::Csv => pairs_csv("a_r", ACoeffs::closed(args.n).as_slice()),
        Format::Plain => op
            .pk()
            .iter()
            .enumerate()
            .map(|(n, p)| format!("p_{n} = {p}\n"))
            .collect(),
    };
    emit(&args.output.out, &text)?;
    Ok(0)
}

fn roots(args: RootsArgs) -> Result<u8, Error> {
    let file: PolyJson = from_json(&read(&args.input)?)?;
    let report = count_real_roots(&file.to_poly::<Rational>()?)?;
    let text = match args.output.format {
        Format::Json => to_json(&RootReportJson::from_report(&report)),
        Format::Plain => plain_roots(&report),
        Format::Csv => return Err(unsupported(Format::Csv, "roots")),
    };
    emit(&args.output.out, &text)?;
    Ok(0)
}

fn plain_roots(r: &RootReport) -> String {
    let mut out = format!(
        "degree {}, {} distinct real roots, all roots real: {}\n",
        r.degree,
        r.distinct_real_roots,
        if r.all_roots_real { "yes" } else { "no" }
    );
    for (lo, hi) in &r.isolating_intervals {
        if lo == hi {
            out.push_str(&format!("  root = {lo}\n"));
        } else {
            out.push_str(&format!("  root in ({lo}, {hi}]\n"));
        }
    }
    out
}
