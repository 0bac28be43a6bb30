//! Command-line front end. [`run`] parses arguments, dispatches, writes to
//! the given streams and returns the process exit code.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use rhstab_core::hankel::hankel_summary;
use rhstab_core::hodograph::{emit, sample_curve, winding_increment, PlotFormat};
use rhstab_core::hurwitz::{distribution_from_minors, leading_minors};
use rhstab_core::lorenz::{analyze, LorenzParams, LorenzAnalysis};
use rhstab_core::methods::{crosscheck, distribution, Method, MethodOutcome};
use rhstab_core::poly::ComplexPolynomial;
use rhstab_core::report;
use rhstab_core::routh::classify;
use rhstab_core::stieltjes::cf_summary;
use rhstab_core::text::{format_rat, parse_polynomial, ParsedPolynomial};
use rhstab_core::{Error, Polynomial, Rat};
use serde_json::{json, Value};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DISAGREE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "rhstab", version, about = "Exact root-location analysis for polynomials")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Routh,
    Hurwitz,
    Sturm,
    Hankel,
    Cf,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Method {
        match m {
            MethodArg::Routh => Method::Routh,
            MethodArg::Hurwitz => Method::Hurwitz,
            MethodArg::Sturm => Method::Sturm,
            MethodArg::Hankel => Method::Hankel,
            MethodArg::Cf => Method::Cf,
        }
    }
}

#[derive(clap::Args, Debug)]
pub struct PolyInput {
    /// Coefficients, highest power first: "1 2 3 1", "1/2 0 -3/4", "1 2+i".
    #[arg(allow_hyphen_values = true, num_args = 0..)]
    pub coeffs: Vec<String>,
    /// Read one polynomial per line from a file instead.
    #[arg(long)]
    pub input: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Routh scheme verdict and h-array.
    Stability(PolyInput),
    /// Root counts left of, right of and on the imaginary axis.
    Distribution {
        #[command(flatten)]
        poly: PolyInput,
        #[arg(long, value_enum, default_value_t = MethodArg::Sturm)]
        method: MethodArg,
    },
    /// Hurwitz minors and the sign-variation count.
    Hurwitz(PolyInput),
    /// Markov parameters and Hankel minors of the split ratio.
    Hankel(PolyInput),
    /// Continued fraction of the split ratio and its index.
    Cf(PolyInput),
    /// Plot file of the curve i^-n p(iw) and its exact winding.
    Hodograph {
        #[command(flatten)]
        poly: PolyInput,
        /// Output file; `.svg` gives SVG, anything else CSV.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Number of samples.
        #[arg(long, default_value_t = 2000)]
        points: usize,
    },
    /// Lorenz system fixed points and their stability.
    Lorenz {
        #[arg(allow_hyphen_values = true)]
        sigma: String,
        #[arg(allow_hyphen_values = true)]
        r: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Runs all five methods and compares them.
    Crosscheck(PolyInput),
}

/// What one polynomial produced.
struct Outcome {
    text: String,
    json: Value,
    code: i32,
}

fn fail(msg: impl ToString) -> Outcome {
    let msg = msg.to_string();
    Outcome {
        text: format!("error: {msg}\n"),
        json: json!({ "error": msg }),
        code: EXIT_INPUT,
    }
}

fn real_of(p: &ParsedPolynomial) -> Result<&Polynomial, Error> {
    p.as_real().ok_or(Error::ComplexCoefficients)
}

fn join(xs: &[Rat]) -> String {
    xs.iter().map(format_rat).collect::<Vec<_>>().join(" ")
}

fn stability(p: &ParsedPolynomial) -> Result<Outcome, Error> {
    let c = classify(real_of(p)?)?;
    let mut t = String::new();
    let _ = writeln!(t, "{}", c.kind);
    let _ = writeln!(t, "h = {}", join(&c.routh.h));
    if !c.routh.completed {
        let _ = writeln!(t, "scheme stopped early; counts from the Sturm route");
    }
    let _ = writeln!(t, "{}", c.distribution);
    Ok(Outcome {
        text: t,
        json: report::stability(&c),
        code: EXIT_OK,
    })
}

fn distribution_cmd(p: &ComplexPolynomial, m: Method) -> Result<Outcome, Error> {
    let d = distribution(p, m)?;
    Ok(Outcome {
        text: format!("method: {m}\n{d}\n"),
        json: json!({ "method": m.name(), "distribution": report::distribution(&d) }),
        code: EXIT_OK,
    })
}

fn hurwitz_cmd(p: &ParsedPolynomial) -> Result<Outcome, Error> {
    let p = real_of(p)?;
    let r = leading_minors(p)?;
    let d = distribution_from_minors(p);
    let mut t = String::new();
    let _ = writeln!(t, "minors = {}", join(&r.minors));
    let _ = writeln!(t, "stable: {}", r.stable);
    match (&r.quotient_sequence, &d) {
        (Some(q), Ok(d)) => {
            let _ = writeln!(t, "sequence = {}", join(q));
            let _ = writeln!(t, "{d}");
        }
        (_, Err(e)) => {
            let _ = writeln!(t, "sign-variation count n/a: {e}");
        }
        _ => {}
    }
    Ok(Outcome {
        text: t,
        json: report::hurwitz(&r, d.as_ref().ok()),
        code: EXIT_OK,
    })
}

fn hankel_cmd(p: &ComplexPolynomial) -> Result<Outcome, Error> {
    let h = hankel_summary(p)?;
    let mut t = String::new();
    let _ = writeln!(t, "ratio = {}", h.ratio);
    let _ = writeln!(t, "markov = {}", join(&h.markov.s));
    let _ = writeln!(t, "minors = {}", join(&h.minors));
    let _ = writeln!(t, "shifted minors = {}", join(&h.shifted_minors));
    let _ = writeln!(t, "rank = {}, signature = {}", h.report.rank, h.report.signature);
    let _ = writeln!(t, "proper: {}", h.proper);
    Ok(Outcome {
        text: t,
        json: report::hankel(&h),
        code: EXIT_OK,
    })
}

fn cf_cmd(p: &ComplexPolynomial) -> Result<Outcome, Error> {
    let c = cf_summary(p)?;
    let mut t = String::new();
    let _ = writeln!(t, "ratio = {}", c.ratio);
    let quotients: Vec<String> = c.cf.terms.iter().map(|d| d.display_in("w").to_string()).collect();
    let _ = writeln!(t, "quotients = {}", quotients.join(", "));
    let _ = writeln!(t, "index = {}", c.index);
    let _ = writeln!(t, "proper: {}", c.proper);
    Ok(Outcome {
        text: t,
        json: report::cf(&c),
        code: EXIT_OK,
    })
}

fn hodograph_cmd(p: &ComplexPolynomial, out: Option<&Path>, points: usize) -> Result<Outcome, Error> {
    let mut t = String::new();
    let mut j = serde_json::Map::new();
    if let Some(path) = out {
        let fmt = match path.extension().and_then(|e| e.to_str()) {
            Some(e) if e.eq_ignore_ascii_case("svg") => PlotFormat::Svg,
            _ => PlotFormat::Csv,
        };
        let body = emit(&sample_curve(p, points)?, fmt)?;
        if let Err(e) = std::fs::write(path, body) {
            return Ok(fail(format!("cannot write {}: {e}", path.display())));
        }
        let _ = writeln!(t, "wrote {} samples to {}", points, path.display());
        j.insert("out".into(), Value::String(path.display().to_string()));
        j.insert("points".into(), report::int(points));
    }
    let w = winding_increment(p)?;
    let idx: Vec<String> = w.crossing_indices.iter().map(|i| format!("{i:+}")).collect();
    let _ = writeln!(t, "winding = {} pi", w.delta_over_pi);
    let _ = writeln!(t, "crossing indices = {}", idx.join(" "));
    j.insert("winding".into(), report::winding(&w));
    Ok(Outcome {
        text: t,
        json: Value::Object(j),
        code: EXIT_OK,
    })
}

fn lorenz_text(a: &LorenzAnalysis) -> String {
    let mut t = String::new();
    let p = &a.params;
    let _ = writeln!(t, "sigma = {}, r = {}, b = {}", p.sigma, p.r, p.b);
    let _ = writeln!(t, "r_star = {}", a.r_star);
    let _ = writeln!(t, "origin (0, 0, 0)");
    let _ = writeln!(
        t,
        "  p0 = ({}) ({})",
        a.origin.linear_factor.display_in("l"),
        a.origin.quadratic_factor.display_in("l")
    );
    let _ = writeln!(t, "  {}", a.origin.verdict.kind);
    match &a.nonzero {
        None => {
            let _ = writeln!(t, "no nonzero fixed points (r <= 1)");
        }
        Some(nz) => {
            for fp in &a.fixed_points[1..] {
                let _ = writeln!(t, "fixed point {fp}");
            }
            let _ = writeln!(t, "  p12 = {}", nz.char_poly.display_in("l"));
            let _ = writeln!(t, "  {}", nz.verdict.kind);
        }
    }
    t
}

fn lorenz_cmd(sigma: &str, r: &str, b: &str) -> Outcome {
    let parse = |s: &str| -> Result<Rat, Error> {
        match parse_polynomial(s)? {
            ParsedPolynomial::Real(p) if p.degree() == Some(0) => Ok(p.coeffs()[0].clone()),
            _ => Err(Error::MalformedToken { position: 1, token: s.to_string() }),
        }
    };
    let result = (|| {
        let params = LorenzParams::new(parse(sigma)?, parse(r)?, parse(b)?)?;
        analyze(&params)
    })();
    match result {
        Ok(a) => Outcome {
            text: lorenz_text(&a),
            json: report::lorenz(&a),
            code: EXIT_OK,
        },
        Err(e) => fail(e),
    }
}

fn crosscheck_cmd(p: &ComplexPolynomial) -> Result<Outcome, Error> {
    let c = crosscheck(p)?;
    let mut t = String::new();
    for r in &c.results {
        let line = match &r.outcome {
            MethodOutcome::Distribution(d) => {
                let (m, pl, ax) = d.counts();
                let extra = if r.fallback { " (scheme stopped early, Sturm fallback)" } else { "" };
                format!("(n-, n+, axis) = ({m}, {pl}, {ax}){extra}")
            }
            MethodOutcome::NotApplicable(why) => format!("n/a: {why}"),
        };
        let _ = writeln!(t, "{:<8} {line}", r.method.name());
    }
    let _ = writeln!(t, "{}", if c.agree { "agree" } else { "DISAGREE" });
    Ok(Outcome {
        text: t,
        json: report::crosscheck(&c),
        code: if c.agree { EXIT_OK } else { EXIT_DISAGREE },
    })
}

fn analyze_one(cmd: &Command, text: &str) -> Outcome {
    let parsed = match parse_polynomial(text) {
        Ok(p) => p,
        Err(e) => return fail(e),
    };
    let cp = parsed.to_complex();
    let result = match cmd {
        Command::Stability(_) => stability(&parsed),
        Command::Distribution { method, .. } => distribution_cmd(&cp, (*method).into()),
        Command::Hurwitz(_) => hurwitz_cmd(&parsed),
        Command::Hankel(_) => hankel_cmd(&cp),
        Command::Cf(_) => cf_cmd(&cp),
        Command::Hodograph { out, points, .. } => hodograph_cmd(&cp, out.as_deref(), *points),
        Command::Crosscheck(_) => crosscheck_cmd(&cp),
        Command::Lorenz { .. } => unreachable!("lorenz takes parameters, not a polynomial"),
    };
    result.unwrap_or_else(fail)
}

fn poly_input(cmd: &Command) -> Option<&PolyInput> {
    match cmd {
        Command::Stability(p)
        | Command::Hurwitz(p)
        | Command::Hankel(p)
        | Command::Cf(p)
        | Command::Crosscheck(p) => Some(p),
        Command::Distribution { poly, .. } | Command::Hodograph { poly, .. } => Some(poly),
        Command::Lorenz { .. } => None,
    }
}

/// Input lines: the inline coefficients, or the non-empty lines of the
/// input file (`#` starts a comment).
fn input_lines(input: &PolyInput) -> Result<Vec<String>, String> {
    match &input.input {
        Some(path) => {
            let body = std::fs::read_to_string(path)
                .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
            Ok(body
                .lines()
                .map(|l| l.split('#').next().unwrap_or("").trim().to_string())
                .filter(|l| !l.is_empty())
                .collect())
        }
        None => Ok(vec![input.coeffs.join(" ")]),
    }
}

const SUBCOMMANDS: [&str; 8] = [
    "stability", "distribution", "hurwitz", "hankel", "cf", "hodograph", "lorenz", "crosscheck",
];
const VALUE_OPTIONS: [&str; 5] = ["--format", "--input", "--method", "--out", "--points"];

/// Coefficients may start with `-`, so they are taken verbatim; options that
/// follow them are moved in front so they still parse as options.
fn reorder(args: Vec<OsString>) -> Vec<OsString> {
    let Some(sub) = args.iter().position(|a| SUBCOMMANDS.iter().any(|s| a == *s)) else {
        return args;
    };
    let (head, tail) = args.split_at(sub + 1);
    let mut options = Vec::new();
    let mut rest = Vec::new();
    let mut it = tail.iter().cloned();
    while let Some(a) = it.next() {
        let s = a.to_string_lossy();
        let name = s.split('=').next().unwrap_or("");
        if VALUE_OPTIONS.contains(&name) {
            let takes_next = !s.contains('=');
            options.push(a);
            if takes_next {
                options.extend(it.next());
            }
        } else if s == "--help" || s == "-h" {
            options.push(a);
        } else {
            rest.push(a);
        }
    }
    head.iter().cloned().chain(options).chain(rest).collect()
}

pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = reorder(args.into_iter().map(Into::into).collect());
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let stream: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(stream, "{}", e.render());
            return code;
        }
    };
    let outcomes: Vec<(Option<String>, Outcome)> = match poly_input(&cli.command) {
        None => {
            let Command::Lorenz { sigma, r, b } = &cli.command else { unreachable!() };
            vec![(None, lorenz_cmd(sigma, r, b))]
        }
        Some(input) => match input_lines(input) {
            Err(e) => vec![(None, fail(e))],
            Ok(lines) => {
                let batch = input.input.is_some();
                lines
                    .iter()
                    .map(|l| (batch.then(|| l.clone()), analyze_one(&cli.command, l)))
                    .collect()
            }
        },
    };
    let code = outcomes.iter().map(|(_, o)| o.code).max().unwrap_or(EXIT_OK);
    match cli.format {
        Format::Json => {
            let value = match outcomes.as_slice() {
                [(None, o)] => o.json.clone(),
                _ => Value::Array(
                    outcomes
                        .iter()
                        .map(|(line, o)| json!({ "input": line, "result": o.json }))
                        .collect(),
                ),
            };
            let _ = writeln!(out, "{}", serde_json::to_string_pretty(&value).expect("serializable"));
        }
        Format::Text => {
            for (line, o) in &outcomes {
                if let Some(l) = line {
                    let _ = writeln!(out, "# {l}");
                }
                if o.code == EXIT_INPUT {
                    let _ = write!(err, "{}", o.text);
                } else {
                    let _ = write!(out, "{}", o.text);
                }
            }
        }
    }
    code
}
