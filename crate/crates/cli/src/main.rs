use std::fmt::Write as _;
use std::io::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use trigsum::arith::{int, parse_rational, PiScaled};
use trigsum::cosecant::{gcn, GcnMethod};
use trigsum::error::Error;
use trigsum::oracle::{
    check_exact_vs_numeric, default_digits, eval_pi_scaled, raw_trig_sum, SumKind,
};
use trigsum::partitions::enumerate_partitions;
use trigsum::poly::RationalPolynomial;
use trigsum::report::{Status, VerificationReport};
use trigsum::sums::{
    cc_polynomial, cc_sum, dowker, dowker_q_coeffs, gardner_fisher, gf_table_polynomial, ts_sum,
};
use trigsum::symfun::{sym_closed_form_checks, sym_table};
use trigsum::tables::{display_row, emit_table, latex_row, TableKind, TableRow};
use trigsum::verify::{run_suite, Suite};

/// Exact closed forms for finite trigonometric power sums and the
/// generalized cosecant numbers.
#[derive(Parser, Serialize, Debug)]
#[command(name = "trigsum", version)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Plain)]
    format: OutputFormat,
    /// Decimal digits for numeric evaluation (default: $TRIGSUM_DIGITS or 60).
    #[arg(long, global = true)]
    digits: Option<u32>,
    /// Largest v for the identity and Nörlund suites.
    #[arg(long, global = true, default_value_t = 10)]
    vmax: u32,
    /// More detail in plain output.
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    verbose: u8,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum OutputFormat {
    Json,
    Csv,
    Latex,
    Plain,
}

#[derive(Subcommand, Serialize, Debug)]
#[serde(rename_all = "lowercase")]
enum Command {
    /// c_{rho,k}, the coefficient of x^(2k) in (x/sin x)^rho.
    Gcn {
        #[arg(long)]
        k: u32,
        /// Evaluate at this rho (e.g. 4 or 1/2) instead of printing the polynomial.
        #[arg(long)]
        rho: Option<String>,
        #[arg(long, value_enum, default_value_t = Method::Partition)]
        method: Method,
    },
    /// Elementary symmetric polynomials s(v,n) of {1^2, ..., (v-1)^2}.
    Sym {
        #[arg(long)]
        v: u32,
        #[arg(long)]
        n: Option<u32>,
        /// Run the closed-form checks up to v instead.
        #[arg(long, value_enum)]
        check: Option<SymCheck>,
    },
    /// Closed-form values and polynomials of the sums.
    Sum {
        #[command(subcommand)]
        family: SumFamily,
    },
    /// Coefficient tables.
    Table {
        #[arg(value_enum)]
        kind: TableArg,
        #[arg(long, default_value_t = 15)]
        max: u32,
    },
    /// Direct high-precision evaluation of a raw sum.
    Oracle {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        v: u32,
        #[arg(long, default_value_t = 0)]
        w: u32,
        #[arg(long, default_value_t = 1)]
        ell: u32,
        #[arg(long, value_enum, default_value_t = OracleKind::Csc)]
        kind: OracleKind,
    },
    /// Run a verification suite; exits 1 if any check fails.
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
    },
    /// Partitions of k as multiplicity vectors (n_1, ..., n_k).
    Partitions {
        #[arg(long)]
        k: u32,
    },
}

#[derive(Subcommand, Serialize, Debug)]
#[serde(rename_all = "lowercase")]
enum SumFamily {
    /// Gardner-Fisher S_{m,v}; without --m prints (2m^2)^v S_{m,v}/(m^2-1).
    Gf {
        #[arg(long)]
        m: Option<u64>,
        #[arg(long)]
        v: u32,
        #[command(flatten)]
        decimal: Decimal,
    },
    /// sum csc^(2v)(k pi/m); without --m prints the polynomial in m^2.
    Dowker {
        #[arg(long)]
        m: Option<u64>,
        #[arg(long)]
        v: u32,
        #[command(flatten)]
        decimal: Decimal,
    },
    /// sum cot^(2v) csc^(2w)(k pi/(ell m)); without --m prints the polynomial.
    Cc {
        #[arg(long)]
        m: Option<u64>,
        #[arg(long)]
        v: u32,
        #[arg(long)]
        w: u32,
        #[arg(long, default_value_t = 1)]
        ell: u32,
        #[command(flatten)]
        decimal: Decimal,
    },
    /// sum tan^(2v) sec^(2w)(k pi/m) for even m, skipping k = m/2.
    Ts {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        v: u32,
        #[arg(long)]
        w: u32,
        #[command(flatten)]
        decimal: Decimal,
    },
}

#[derive(Args, Serialize, Debug)]
struct Decimal {
    /// Also print a decimal approximation with this many digits.
    #[arg(long)]
    decimal: Option<u32>,
}

#[derive(Clone, Copy, Debug, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Method {
    Partition,
    Series,
    Recurrence,
}

#[derive(Clone, Copy, Debug, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum SymCheck {
    ClosedForms,
}

#[derive(Clone, Copy, Debug, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum TableArg {
    Cosecant,
    Gf,
    Dowker,
}

#[derive(Clone, Copy, Debug, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum OracleKind {
    Csc,
    Cc,
    Ts,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum SuiteArg {
    All,
    Identities,
    Tables,
    Norlund,
    Asymptotic,
    Oracle,
}

/// What a command produced: a JSON value plus its plain rendering, and
/// whether the run counts as failed.
struct Output {
    json: Value,
    text: String,
    failed: bool,
}

impl Output {
    fn ok(json: Value, text: String) -> Self {
        Output {
            json,
            text,
            failed: false,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let mut text = if cli.format == OutputFormat::Json {
                let doc = json!({ "config": &cli, "result": out.json });
                serde_json::to_string_pretty(&doc).expect("output serializes")
            } else {
                out.text
            };
            if !text.ends_with('\n') {
                text.push('\n');
            }
            // a closed pipe (e.g. `| head`) is not an error worth reporting
            let _ = std::io::stdout().lock().write_all(text.as_bytes());
            if out.failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn digits(cli: &Cli) -> u32 {
    cli.digits.unwrap_or_else(default_digits)
}

fn run(cli: &Cli) -> Result<Output, Error> {
    match &cli.command {
        Command::Gcn { k, rho, method } => run_gcn(cli, *k, rho.as_deref(), *method),
        Command::Sym { v, n, check } => run_sym(cli, *v, *n, check.is_some()),
        Command::Sum { family } => run_sum(cli, family),
        Command::Table { kind, max } => run_table(cli, *kind, *max),
        Command::Oracle { m, v, w, ell, kind } => run_oracle(cli, *m, *v, *w, *ell, *kind),
        Command::Verify { suite } => Ok(run_verify(cli, *suite)),
        Command::Partitions { k } => Ok(run_partitions(cli, *k)),
    }
}

fn run_gcn(cli: &Cli, k: u32, rho: Option<&str>, method: Method) -> Result<Output, Error> {
    let method = match method {
        Method::Partition => GcnMethod::Partition,
        Method::Series => GcnMethod::Series,
        Method::Recurrence => GcnMethod::Recurrence,
    };
    let p = gcn(k, method);
    if let Some(r) = rho {
        let r = parse_rational(r)?;
        let value = p.eval(&r);
        let text = match cli.format {
            OutputFormat::Latex => format!("c_{{{r},{k}}} = {}", latex_rational(&value)),
            _ => format!("c({r},{k}) = {value}"),
        };
        return Ok(Output::ok(
            json!({ "k": k, "rho": r.to_string(), "value": value.to_string() }),
            text,
        ));
    }
    let (prefactor, ints) = p.poly.primitive_form();
    let row = TableRow {
        index: k,
        display_prefactor: trigsum::tables::factorial_prefactor(&prefactor, 3 * k + 3),
        prefactor,
        ints,
        poly: p.poly.clone(),
    };
    let text = match cli.format {
        OutputFormat::Latex => latex_row(TableKind::Cosecant, &row),
        OutputFormat::Csv => csv_coeffs(&p.poly),
        _ => display_row(TableKind::Cosecant, &row),
    };
    Ok(Output::ok(
        serde_json::to_value(&p.poly).expect("polynomial serializes"),
        text,
    ))
}

fn latex_rational(r: &trigsum::arith::Rational) -> String {
    if r.is_integer() {
        r.to_string()
    } else {
        let sign = if r < &int(0) { "-" } else { "" };
        format!("{sign}\\frac{{{}}}{{{}}}", num_abs(r.numer()), r.denom())
    }
}

fn num_abs(n: &num_bigint::BigInt) -> num_bigint::BigInt {
    if n.sign() == num_bigint::Sign::Minus {
        -n
    } else {
        n.clone()
    }
}

fn csv_coeffs(p: &RationalPolynomial) -> String {
    let mut out = String::from("power,coefficient\n");
    for (i, c) in p.coeffs().iter().enumerate() {
        let _ = writeln!(out, "{i},{c}");
    }
    out
}

fn run_sym(cli: &Cli, v: u32, n: Option<u32>, check: bool) -> Result<Output, Error> {
    if v == 0 {
        return Err(Error::OutOfRange("v must be at least 1".into()));
    }
    if check {
        let report = VerificationReport::new("sym-closed-forms", sym_closed_form_checks(v));
        return Ok(report_output(cli, vec![report]));
    }
    let t = sym_table(v);
    match n {
        Some(n) => {
            let value = t.get(v, n);
            Ok(Output::ok(
                json!({ "v": v, "n": n, "value": value.to_string() }),
                format!("s({v},{n}) = {value}"),
            ))
        }
        None => {
            let row: Vec<String> = t.row(v).iter().map(|x| x.to_string()).collect();
            let text = match cli.format {
                OutputFormat::Csv => format!(
                    "n,s\n{}",
                    row.iter()
                        .enumerate()
                        .map(|(i, x)| format!("{i},{x}\n"))
                        .collect::<String>()
                ),
                _ => row
                    .iter()
                    .enumerate()
                    .map(|(i, x)| format!("s({v},{i}) = {x}\n"))
                    .collect(),
            };
            Ok(Output::ok(json!({ "v": v, "row": row }), text))
        }
    }
}

fn value_output(exact: PiScaled, decimal: Option<u32>) -> Output {
    let approx = decimal.map(|d| eval_pi_scaled(&exact, d).to_decimal(d));
    let text = match &approx {
        Some(a) => format!("{exact} ≈ {a}…"),
        None => exact.to_string(),
    };
    Output::ok(
        json!({ "exact": exact, "text": exact.to_string(), "decimal": approx }),
        text,
    )
}

fn poly_output(cli: &Cli, p: &RationalPolynomial) -> Output {
    let text = match cli.format {
        OutputFormat::Csv => csv_coeffs(p),
        _ => p.to_text(),
    };
    Output::ok(
        serde_json::to_value(p).expect("polynomial serializes"),
        text,
    )
}

fn run_sum(cli: &Cli, family: &SumFamily) -> Result<Output, Error> {
    let need = |x: u64, name: &str| {
        if x == 0 {
            Err(Error::OutOfRange(format!("{name} must be at least 1")))
        } else {
            Ok(())
        }
    };
    match family {
        SumFamily::Gf { m, v, decimal } => {
            need(*v as u64, "v")?;
            match m {
                Some(m) => {
                    need(*m, "m")?;
                    Ok(value_output(gardner_fisher(*m, *v), decimal.decimal))
                }
                None => Ok(poly_output(cli, &gf_table_polynomial(*v).poly)),
            }
        }
        SumFamily::Dowker { m, v, decimal } => {
            need(*v as u64, "v")?;
            match m {
                Some(m) => {
                    need(*m, "m")?;
                    Ok(value_output(
                        PiScaled::rational(dowker(*m, *v)),
                        decimal.decimal,
                    ))
                }
                None => Ok(poly_output(cli, &dowker_q_coeffs(*v).poly)),
            }
        }
        SumFamily::Cc {
            m,
            v,
            w,
            ell,
            decimal,
        } => match m {
            Some(m) => Ok(value_output(
                PiScaled::rational(cc_sum(*m, *v, *w, *ell)?),
                decimal.decimal,
            )),
            None => Ok(poly_output(cli, &cc_polynomial(*v, *w, *ell)?)),
        },
        SumFamily::Ts { m, v, w, decimal } => Ok(value_output(
            PiScaled::rational(ts_sum(*m, *v, *w)?),
            decimal.decimal,
        )),
    }
}

fn run_table(cli: &Cli, kind: TableArg, max: u32) -> Result<Output, Error> {
    let kind = match kind {
        TableArg::Cosecant => TableKind::Cosecant,
        TableArg::Gf => TableKind::Gf,
        TableArg::Dowker => TableKind::Dowker,
    };
    if max == 0 && kind != TableKind::Cosecant {
        return Err(Error::OutOfRange("--max must be at least 1".into()));
    }
    let format = match cli.format {
        OutputFormat::Json => trigsum::tables::Format::Json,
        OutputFormat::Csv => trigsum::tables::Format::Csv,
        OutputFormat::Latex => trigsum::tables::Format::Latex,
        OutputFormat::Plain => trigsum::tables::Format::Plain,
    };
    let text = emit_table(kind, max, format);
    let json = if format == trigsum::tables::Format::Json {
        serde_json::from_str(&text).expect("table JSON parses")
    } else {
        Value::Null
    };
    Ok(Output::ok(json, text))
}

fn run_oracle(
    cli: &Cli,
    m: u64,
    v: u32,
    w: u32,
    ell: u32,
    kind: OracleKind,
) -> Result<Output, Error> {
    let d = digits(cli);
    let (sum_kind, exact) = match kind {
        OracleKind::Csc => (
            SumKind::CscOnly,
            match ell {
                1 if v >= 1 => Some(PiScaled::rational(dowker(m, v))),
                2 if v >= 1 => {
                    let scale =
                        PiScaled::new(trigsum::arith::pow(&int(2 * m), 2 * v), -2 * v as i64);
                    Some(&gardner_fisher(m, v) * &scale)
                }
                _ => None,
            },
        ),
        OracleKind::Cc => (
            SumKind::Cc,
            cc_sum(m, v, w, ell).ok().map(PiScaled::rational),
        ),
        OracleKind::Ts => (
            SumKind::Ts,
            if ell == 1 {
                ts_sum(m, v, w).ok().map(PiScaled::rational)
            } else {
                None
            },
        ),
    };
    let raw = raw_trig_sum(m, v, w, ell, sum_kind, d)?;
    let numeric = raw.to_decimal(d);
    let mut text = format!("numeric = {numeric}\n");
    let mut failed = false;
    let verdict = exact.as_ref().map(|e| {
        let verdict = check_exact_vs_numeric(e, &raw, d);
        let _ = writeln!(text, "exact   = {e}");
        let _ = writeln!(
            text,
            "{} (relative difference {})",
            if verdict.pass { "agree" } else { "DISAGREE" },
            verdict.relative_difference
        );
        failed = !verdict.pass;
        verdict
    });
    if exact.is_none() {
        text.push_str("no closed form for these parameters\n");
    }
    let json = json!({ "numeric": numeric, "digits": d, "exact": exact, "verdict": verdict });
    Ok(Output { json, text, failed })
}

fn run_verify(cli: &Cli, suite: SuiteArg) -> Output {
    let suites: Vec<Suite> = match suite {
        SuiteArg::All => Suite::ALL.to_vec(),
        SuiteArg::Identities => vec![Suite::Identities],
        SuiteArg::Tables => vec![Suite::Tables],
        SuiteArg::Norlund => vec![Suite::Norlund],
        SuiteArg::Asymptotic => vec![Suite::Asymptotic],
        SuiteArg::Oracle => vec![Suite::Oracle],
    };
    let reports = suites
        .into_iter()
        .map(|s| run_suite(s, cli.vmax, digits(cli)))
        .collect();
    report_output(cli, reports)
}

fn report_output(cli: &Cli, reports: Vec<VerificationReport>) -> Output {
    let failed = reports.iter().any(|r| !r.ok());
    let mut text = String::new();
    for r in &reports {
        for c in &r.checks {
            let show = cli.verbose > 0 || c.status != Status::Pass;
            if show {
                let _ = writeln!(
                    text,
                    "{:<24} {}  [{}]",
                    c.status.to_string(),
                    c.id,
                    c.anchor
                );
                if c.status != Status::Pass || cli.verbose > 1 {
                    let _ = writeln!(text, "    lhs: {}\n    rhs: {}", c.lhs, c.rhs);
                }
            }
        }
        let _ = writeln!(
            text,
            "suite {}: {} pass, {} fail, {} report-only",
            r.suite,
            r.count(Status::Pass),
            r.count(Status::Fail),
            r.count(Status::ReportOnly)
        );
    }
    Output {
        json: json!(reports),
        text,
        failed,
    }
}

fn run_partitions(cli: &Cli, k: u32) -> Output {
    let rows: Vec<Vec<u32>> = enumerate_partitions(k)
        .map(|p| p.counts().to_vec())
        .collect();
    let headers: Vec<String> = (1..=k).map(|i| format!("n_{i}")).collect();
    let sep = if cli.format == OutputFormat::Csv {
        ","
    } else {
        "\t"
    };
    let mut text = format!("{}{sep}N{sep}partition\n", headers.join(sep));
    for p in enumerate_partitions(k) {
        let counts: Vec<String> = p.counts().iter().map(|c| c.to_string()).collect();
        let _ = writeln!(
            text,
            "{}{sep}{}{sep}{}",
            counts.join(sep),
            p.total_parts(),
            p
        );
    }
    Output::ok(json!({ "k": k, "multiplicities": rows }), text)
}
