//! The `heightlab` command line. Every subcommand builds a [`Report`]; rendering and exit
//! codes (0 ok, 1 usage, 2 a check failed) are shared.

mod output;

pub use output::{Format, Report, Row};

use std::io::Write;

use clap::{Args, Parser, Subcommand};
use rug::{Integer, Rational};
use serde_json::{json, Value};

use crate::arith::factor::FactorOptions;
use crate::arith::parse::{parse_bivariate, parse_univariate};
use crate::arith::unipoly::IntPoly;
use crate::bertini::{parse_gauss, section_search, section_bound_check};
use crate::chow::{chow_height_point, random_lines, remond_check, Hypersurface};
use crate::constants::{self, BoundExpr, ReportKind};
use crate::error::{Error, Result};
use crate::generators::{search_small_generator, NumberFieldSpec, SearchOptions};
use crate::heights::{
    height_algebraic, height_from_min_poly, height_point, mahler_integral_height, mahler_measure_log, sandwich_check,
    AlgebraicNumber, HeightValue, Method, Norm, ProjectivePoint,
};
use crate::northcott::{
    habegger_bound, iterate_sequence, prime_constant_family, radical_tower, recurrence_check, selmer_family, Mode,
    SequenceProfile, SequenceSpec,
};
use crate::verify::{self, VerifyConfig};

pub const PRECISION_ENV: &str = "HEIGHTLAB_PRECISION";

#[derive(Parser, Debug)]
#[command(name = "heightlab", version, about = "Heights, Northcott numbers, Chow heights and explicit constants")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalArgs {
    /// Working precision in bits for the constants engine [default: 256, or $HEIGHTLAB_PRECISION]
    #[arg(long, global = true)]
    pub precision: Option<u32>,
    /// Target absolute error for heights
    #[arg(long, global = true, default_value_t = 1e-9)]
    pub tol: f64,
    /// Monte-Carlo samples per Chow height
    #[arg(long, global = true, default_value_t = 1_000_000)]
    pub samples: u64,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Output format [default: csv for smyth, table for constants, remond-check and verify-all, json otherwise]
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// certified or assume-irreducible
    #[arg(long, global = true, default_value = "certified")]
    pub mode: String,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Weil height of the roots of a polynomial in x
    Height {
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        /// roots, integral or both
        #[arg(long, default_value = "roots")]
        method: String,
    },
    /// Logarithmic Mahler measure by the root formula and by the circle integral
    Mahler {
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
    },
    /// h_inf and h_2 of a rational point, e.g. --coords 3,4,0
    PointHeight {
        #[arg(long, allow_hyphen_values = true)]
        coords: String,
        /// Also estimate the Chow height of the point
        #[arg(long)]
        chow: bool,
    },
    /// Smyth's sequence x_0 = 1, x_{i+1}^2 - x_i x_{i+1} - 1 = 0
    Smyth {
        #[arg(long, default_value_t = 8)]
        max_i: usize,
        /// Also write the CSV profile here
        #[arg(long)]
        out: Option<std::path::PathBuf>,
    },
    /// Sequence P(x_{i+1}, x_i) = 0 for a polynomial in x and t
    Sequence {
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        x0: String,
        #[arg(long, default_value_t = 5)]
        max_i: usize,
    },
    /// Habegger's bound for P(x, t); with --max-i also the recurrence along the sequence
    Habegger {
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        #[arg(long)]
        max_i: Option<usize>,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        x0: String,
    },
    /// x^i - x - 1 for i = 2..max-i
    Selmer {
        #[arg(long, default_value_t = 30)]
        max_i: usize,
    },
    /// Monic polynomials with constant term +-p and length below 2p
    PrimeFamily {
        #[arg(long, required = true, allow_hyphen_values = true)]
        poly: Vec<String>,
        #[arg(long, required = true)]
        prime: Vec<u64>,
    },
    /// p^(1/p^i) for i = 0..max-i
    RadicalTower {
        #[arg(long, default_value_t = 2)]
        p: u64,
        #[arg(long, default_value_t = 6)]
        max_i: u32,
    },
    /// Primitive integral generator with h(alpha) <= (1/d) log|disc|
    Generator {
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        #[arg(long, allow_hyphen_values = true)]
        disc: String,
        /// Integral basis as polynomials in x separated by ';', e.g. "1;(1+x)/2"
        #[arg(long, allow_hyphen_values = true)]
        basis: Option<String>,
        #[arg(long)]
        max_radius: Option<i64>,
    },
    /// Monte-Carlo Chow height of a hypersurface Z(form) in P^N
    ChowHeight {
        #[arg(long, allow_hyphen_values = true)]
        form: String,
        /// N; defaults to the largest variable index
        #[arg(long)]
        ambient: Option<usize>,
    },
    /// Plane curve cut by random lines: degree and height inequalities
    RemondCheck {
        #[arg(long, default_value = "x0^2+x1^2-x2^2", allow_hyphen_values = true)]
        curve: String,
        #[arg(long, default_value_t = 10)]
        instances: usize,
        /// Line coefficients are drawn from [-max-coeff, max-coeff]
        #[arg(long, default_value_t = 3)]
        max_coeff: i64,
    },
    /// Smooth hyperplane section of a surface in P^3 with coefficients from a finite set
    Bertini {
        #[arg(long, allow_hyphen_values = true)]
        form: String,
        #[arg(long, default_value = "0,1,-1", allow_hyphen_values = true)]
        coeff_set: String,
        #[arg(long, default_value_t = 1000)]
        budget: usize,
        /// Upper bound for the Northcott number of the coefficient set
        #[arg(long, default_value_t = 0.0)]
        northcott: f64,
        /// Also estimate h(X) and the resulting height bound
        #[arg(long)]
        chow: bool,
    },
    /// Explicit constants at dimension g
    Constants {
        #[arg(long, default_value_t = 2)]
        g: u32,
        /// all, exact or chain
        #[arg(long, default_value = "all")]
        report: String,
        /// m(S) used in the identity-family c6
        #[arg(long, default_value_t = 0.274)]
        ms: f64,
        /// Emit the expression DAG of one constant: K, c31, c7, C3, c5 or c6
        #[arg(long)]
        dag: Option<String>,
    },
    /// All acceptance checks
    VerifyAll {
        /// Run only these criteria, e.g. 1,3,10
        #[arg(long, value_delimiter = ',')]
        only: Vec<u8>,
    },
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub precision: u32,
    pub tol: f64,
    pub samples: u64,
    pub seed: u64,
    pub format: Option<Format>,
    pub mode: Mode,
}

impl RunConfig {
    pub fn from_args(g: &GlobalArgs) -> Result<Self> {
        let env = std::env::var(PRECISION_ENV).ok();
        let precision = match (g.precision, env) {
            (Some(p), _) => p,
            (None, Some(s)) => s.parse().map_err(|_| Error::InvalidArgument(format!("{PRECISION_ENV}={s}")))?,
            (None, None) => constants::DEFAULT_PRECISION,
        };
        if !(16..=1 << 20).contains(&precision) {
            return Err(Error::InvalidArgument(format!("precision {precision} outside 16..=1048576")));
        }
        if !(g.tol > 0.0) {
            return Err(Error::InvalidArgument("tol must be positive".into()));
        }
        if g.samples < 2 {
            return Err(Error::InvalidArgument("samples must be at least 2".into()));
        }
        Ok(RunConfig { precision, tol: g.tol, samples: g.samples, seed: g.seed, format: g.format, mode: g.mode.parse()? })
    }
}

/// Parses argv, runs, writes the rendering to `out` and diagnostics to `err`; returns the
/// exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let result = RunConfig::from_args(&cli.global).and_then(|cfg| execute(&cli.command, &cfg).map(|r| (r, cfg)));
    match result {
        Ok((report, cfg)) => {
            let format = cfg.format.unwrap_or_else(|| default_format(&cli.command));
            let _ = out.write_all(report.render(format).as_bytes());
            if report.failed() {
                2
            } else {
                0
            }
        }
        Err(e) => {
            let _ = writeln!(err, "heightlab: {e}");
            exit_code(&e)
        }
    }
}

/// Inputs that break a precondition are usage errors; a computation that could not finish
/// (budgets, precision, overflow) counts as a failed check.
fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. }
        | Error::UnknownVariable(_)
        | Error::ZeroPolynomial
        | Error::ConstantPolynomial
        | Error::InvalidArgument(_)
        | Error::NotPrime(_)
        | Error::NegativeValue(_)
        | Error::DivisionByZero
        | Error::Hypothesis(_)
        | Error::ConstantTermMismatch
        | Error::InconsistentBasis(_)
        | Error::LineContained
        | Error::NotSmooth
        | Error::ScaleCap(_)
        | Error::DegreeCapExceeded { .. } => 1,
        _ => 2,
    }
}

fn default_format(c: &Command) -> Format {
    match c {
        Command::Smyth { .. } => Format::Csv,
        Command::Constants { .. } | Command::RemondCheck { .. } | Command::VerifyAll { .. } => Format::Table,
        _ => Format::Json,
    }
}

fn report(sub: &str, inputs: Value, cfg: &RunConfig, results: Vec<Row>) -> Report {
    Report { tool_version: env!("CARGO_PKG_VERSION"), subcommand: sub.into(), inputs, seed: cfg.seed, results, csv: None }
}

fn int_poly(text: &str) -> Result<IntPoly> {
    let f = parse_univariate(text, "x")?;
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(f.primitive_part())
}

fn rational(text: &str) -> Result<Rational> {
    text.trim().parse::<Rational>().map_err(|_| Error::InvalidArgument(format!("`{text}` is not a rational number")))
}

fn integers(text: &str) -> Result<Vec<Integer>> {
    text.split(',')
        .map(|s| s.trim().parse::<Integer>().map_err(|_| Error::InvalidArgument(format!("`{s}` is not an integer"))))
        .collect()
}

/// Irreducible factors of f, or f itself in assume-irreducible mode.
fn factors_for(f: &IntPoly, mode: Mode) -> Result<Vec<(IntPoly, bool)>> {
    if mode == Mode::AssumeIrreducible {
        return Ok(vec![(f.clone(), false)]);
    }
    let fz = crate::arith::factor_rationals(&f.to_unipoly())?;
    Ok(fz.factors.into_iter().filter(|(g, _)| g.degree() > 0).map(|(g, _)| (g, true)).collect())
}

fn profile_rows(p: &SequenceProfile) -> Vec<Row> {
    p.entries
        .iter()
        .map(|e| Row::height(format!("h(x_{})", e.index), &e.height).cert(format!("degree {}, {}", e.degree, e.tag)))
        .collect()
}

pub fn execute(cmd: &Command, cfg: &RunConfig) -> Result<Report> {
    match cmd {
        Command::Height { poly, method } => {
            let f = int_poly(poly)?;
            let (roots, integral) = match method.as_str() {
                "roots" => (true, false),
                "integral" => (false, true),
                "both" => (true, true),
                m => return Err(Error::InvalidArgument(format!("unknown method `{m}` (roots, integral, both)"))),
            };
            let mut rows = Vec::new();
            for (g, certified) in factors_for(&f, cfg.mode)? {
                let cert = if certified { "minimal polynomial: certified irreducible" } else { "minimal polynomial: assumed" };
                if roots {
                    let mut h = height_from_min_poly(&g, cfg.tol)?;
                    h.assumed_irreducible = !certified;
                    rows.push(Row::height(format!("h(root of {g})"), &h).cert(cert));
                }
                if integral {
                    let mut h = mahler_integral_height(&g, cfg.tol)?;
                    h.assumed_irreducible = !certified;
                    rows.push(Row::height(format!("h(root of {g})"), &h).cert(cert));
                }
            }
            Ok(report("height", json!({"poly": poly, "method": method}), cfg, rows))
        }
        Command::Mahler { poly } => {
            let f = int_poly(poly)?;
            if f.degree() == 0 {
                return Err(Error::ConstantPolynomial);
            }
            let (lo, hi) = mahler_measure_log(&f, cfg.tol)?;
            let roots = HeightValue::from_enclosure(&lo, &hi, Method::ExactRoots);
            let integral = mahler_integral_height(&f, cfg.tol)?.scaled(f.degree() as f64);
            let diff = (roots.value - integral.value).abs();
            let rows = vec![
                Row::height("log M(f) roots", &roots),
                Row::height("log M(f) integral", &integral),
                Row::new("|roots - integral|", diff, "comparison").check(diff <= 1e-6, "agreement within 1e-6"),
            ];
            Ok(report("mahler", json!({"poly": poly}), cfg, rows))
        }
        Command::PointHeight { coords, chow } => {
            let p = ProjectivePoint::new(integers(coords)?)?;
            if p.dim() == 0 {
                return Err(Error::InvalidArgument("a point of P^N needs at least two coordinates".into()));
            }
            let hi = height_point(&p, Norm::Inf);
            let h2 = height_point(&p, Norm::L2);
            let ok = sandwich_check(&p, p.dim());
            let mut rows = vec![
                Row::height("h_inf", &hi),
                Row::height("h_2", &h2),
                Row::new("h_2 - h_inf", h2.value - hi.value, "comparison")
                    .check(ok, &format!("0 <= h_2 - h_inf <= log({})/2", p.dim() + 1)),
            ];
            if *chow {
                let h = chow_height_point(&p, cfg.samples, cfg.seed);
                rows.push(Row::height("h_P", &h.height_value()));
            }
            Ok(report("point-height", json!({"coords": coords, "samples": cfg.samples}), cfg, rows))
        }
        Command::Smyth { max_i, out } => {
            let prof = iterate_sequence(&SequenceSpec::smyth(*max_i, cfg.mode))?;
            let csv = prof.to_csv();
            if let Some(path) = out {
                std::fs::write(path, &csv).map_err(|e| Error::InvalidArgument(format!("{}: {e}", path.display())))?;
            }
            let mut r = report("smyth", json!({"max_i": max_i, "mode": cfg.mode}), cfg, profile_rows(&prof));
            r.csv = Some(csv);
            Ok(r)
        }
        Command::Sequence { poly, x0, max_i } => {
            let p = parse_bivariate(poly, ["x", "t"])?;
            let x0v = AlgebraicNumber::rational(&rational(x0)?);
            let prof = iterate_sequence(&SequenceSpec::new(p, x0v, cfg.mode, *max_i)?)?;
            let mut r = report("sequence", json!({"poly": poly, "x0": x0, "max_i": max_i, "mode": cfg.mode}), cfg, profile_rows(&prof));
            r.csv = Some(prof.to_csv());
            Ok(r)
        }
        Command::Habegger { poly, max_i, x0 } => {
            let p = parse_bivariate(poly, ["x", "t"])?;
            let b = habegger_bound(&p)?;
            let mut rows = vec![
                Row::new("gamma_P", b.gamma, "closed-form"),
                Row::new("Q", b.big_q, "closed-form"),
                Row::new("q", b.small_q, "closed-form"),
                Row::new("bound", b.bound, "closed-form").cert("m(S) <= bound"),
            ];
            if let Some(n) = max_i {
                let x0v = AlgebraicNumber::rational(&rational(x0)?);
                let prof = iterate_sequence(&SequenceSpec::new(p.clone(), x0v, cfg.mode, *n)?)?;
                for pair in recurrence_check(&prof, &p)?.pairs {
                    rows.push(
                        Row::new(format!("recurrence {} -> {}", pair.i, pair.i + 1), pair.lhs, "comparison")
                            .check(pair.holds && pair.quasi_equivalence_holds, &format!("h(x_{}) <= {:.6}", pair.i + 1, pair.rhs)),
                    );
                }
            }
            Ok(report("habegger", json!({"poly": poly, "max_i": max_i, "x0": x0}), cfg, rows))
        }
        Command::Selmer { max_i } => {
            let opts = FactorOptions { seed: cfg.seed, ..Default::default() };
            let r = selmer_family(*max_i, &opts)?;
            let log3 = 3f64.ln();
            let mut rows = Vec::new();
            for e in &r.entries {
                let name = format!("h(root of x^{} - x - 1)", e.i);
                let ok = e.i as f64 * e.height.value <= log3 && e.height.lower() > 0.0;
                let irr = if e.certified { "certified" } else { "by Selmer's theorem" };
                rows.push(Row::height(name, &e.height).check(ok, &format!("0 < i h <= log 3, irreducible {irr}")));
            }
            if let Some(b) = r.estimate.certified_upper_bound {
                rows.push(Row::new("length bound", b, "closed-form").cert("min log 3 / i over the family"));
            }
            Ok(report("selmer", json!({"max_i": max_i}), cfg, rows))
        }
        Command::PrimeFamily { poly, prime } => {
            if poly.len() != prime.len() {
                return Err(Error::InvalidArgument("give one --prime per --poly".into()));
            }
            let pairs: Vec<(IntPoly, u64)> =
                poly.iter().zip(prime).map(|(f, &p)| Ok((int_poly(f)?, p))).collect::<Result<_>>()?;
            let mut rows = Vec::new();
            for ((f, p), res) in pairs.iter().zip(prime_constant_family(&pairs)) {
                rows.push(match res {
                    Ok(c) => Row::new(format!("{f}"), c.length_bound, "length")
                        .check(c.irreducible, &format!("irreducible: |f|_1 = {} < 2p = {}", c.length, 2 * p)),
                    Err(e) => Row::new(format!("{f}"), Value::Null, "length").check(false, &e.to_string()),
                });
            }
            Ok(report("prime-family", json!({"poly": poly, "prime": prime}), cfg, rows))
        }
        Command::RadicalTower { p, max_i } => {
            let est = radical_tower(*p, *max_i)?;
            let mut rows: Vec<Row> = est.empirical.iter().map(|o| Row::height(format!("h({})", o.label), &o.height)).collect();
            if let Some(b) = est.certified_upper_bound {
                rows.push(Row::new("smallest height", b, "exact").cert("log p / p^max_i"));
            }
            Ok(report("radical-tower", json!({"p": p, "max_i": max_i}), cfg, rows))
        }
        Command::Generator { poly, disc, basis, max_radius } => {
            let g = int_poly(poly)?;
            let d: Integer = disc
                .trim()
                .parse::<Integer>()
                .map_err(|_| Error::InvalidArgument(format!("`{disc}` is not an integer")))?
                .abs();
            let field = match basis {
                None => NumberFieldSpec::with_disc(g, d)?,
                Some(b) => {
                    let rows = b.split(';').map(|s| parse_univariate(s, "x")).collect::<Result<Vec<_>>>()?;
                    NumberFieldSpec::new(g, rows, d)?
                }
            };
            let opts = SearchOptions { max_radius: *max_radius, tolerance: Some(cfg.tol) };
            let r = search_small_generator(&field, &opts)?;
            let ok = r.height.upper() <= r.bound;
            let rows = vec![
                Row::new("coords", json!(r.element.coords), "search")
                    .cert(format!("shell {} of cap {}, {} candidates", r.radius, r.radius_cap, r.candidates)),
                Row::new("min_poly", r.min_poly.to_string(), "characteristic polynomial").cert("squarefree, so primitive"),
                Row::height("height", &r.height).check(ok, &format!("h <= (1/d) log|disc| = {}", r.bound)),
                Row::new("bound", r.bound, "closed-form"),
            ];
            Ok(report("generator", json!({"poly": poly, "disc": disc, "basis": basis}), cfg, rows))
        }
        Command::ChowHeight { form, ambient } => {
            let x = Hypersurface::parse(form, *ambient)?;
            let h = x.chow_height(cfg.samples, cfg.seed)?;
            let rows = vec![
                Row::height("h_P", &h.height_value()).cert(format!("primitive Chow form of {x}")),
                Row::new("correction", h.correction, "closed-form"),
                Row::new("sphere integral", h.integral.value, "monte-carlo").std(h.integral.std_error),
            ];
            Ok(report("chow-height", json!({"form": form, "ambient": x.ambient_dim(), "samples": cfg.samples}), cfg, rows))
        }
        Command::RemondCheck { curve, instances, max_coeff } => {
            let x = Hypersurface::parse(curve, Some(2))?;
            let lines = random_lines(&x, *instances, *max_coeff, cfg.seed.wrapping_add(7));
            let h = lines
                .iter()
                .map(|l| {
                    let c: Vec<Rational> = l.form().terms().values().map(Rational::from).collect();
                    crate::heights::height_poly(&c, Norm::L2).map(|v| v.value)
                })
                .collect::<Result<Vec<_>>>()?
                .into_iter()
                .fold(0.0, f64::max);
            let r = remond_check(&x, &lines, h, cfg.samples, cfg.seed)?;
            let mut rows = vec![Row::height("h_P(X)", &r.height_x.height_value())];
            for i in &r.instances {
                rows.push(Row::new(format!("X . Z({})", i.line), i.height_y.value, "monte-carlo").std(i.sigma).check(
                    i.holds && i.degree_ok,
                    &format!("deg {} <= {}, h <= {:.4} + 3 sigma", i.degree_y, x.degree(), i.rhs),
                ));
            }
            let inputs = json!({"curve": curve, "instances": instances, "max_coeff": max_coeff, "H": h, "samples": cfg.samples});
            Ok(report("remond-check", inputs, cfg, rows))
        }
        Command::Bertini { form, coeff_set, budget, northcott, chow } => {
            let x = Hypersurface::parse(form, Some(3))?;
            let sample = coeff_set.split(',').map(parse_gauss).collect::<Result<Vec<_>>>()?;
            let c = section_search(&x, &sample, *budget)?;
            let hx = if *chow { Some(x.chow_height(cfg.samples, cfg.seed)?) } else { None };
            let b = section_bound_check(&x, &c, *northcott, hx);
            let mut rows = vec![
                Row::new("hyperplane", serde_json::to_value(&c).map_err(|e| Error::InvalidArgument(e.to_string()))?["hyperplane"].clone(), "search")
                    .cert(format!("candidate {} in enumeration order", c.tried)),
                Row::new("section_form", c.section_text.clone(), "elimination").cert(format!("x{} eliminated; smooth", c.eliminated)),
                Row::new("genus", b.genus, "plane curve").check(b.genus_ok, &format!("genus <= (deg X)^2 + deg X = {}", b.genus_bound)),
                Row::new("degree", b.degree_c, "exact").check(b.degree_ok, &format!("deg C <= deg X = {}", b.degree_x)),
                Row::new("curve_increment", b.curve_increment, "closed-form").cert("dim X deg X (N+1)(m(S)+2)"),
            ];
            if let (Some(h), Some(rhs)) = (&b.height_x, b.height_rhs) {
                rows.push(Row::height("h_P(X)", &h.height_value()));
                rows.push(Row::new("h_P(C) bound", rhs, "monte-carlo").std(h.std_error).cert("h_P(X) + curve_increment"));
            }
            let inputs = json!({"form": form, "coeff_set": coeff_set, "budget": budget, "northcott": northcott, "chow": chow, "samples": cfg.samples});
            Ok(report("bertini", inputs, cfg, rows))
        }
        Command::Constants { g, report: kind, ms, dag } => {
            let kind: ReportKind = kind.parse()?;
            let mut rows: Vec<Row> = constants::report(*g, kind, *ms, cfg.precision)?
                .into_iter()
                .map(|c| match (&c.exact, &c.log10) {
                    (Some(v), None) => Row::new(c.name, v.clone(), "exact").cert(c.trace),
                    (exact, Some(l)) => {
                        let mut r = Row::new(format!("log10 {}", c.name), l.clone(), "log10-interval").cert(c.trace.clone());
                        match c.log10_width {
                            Some(w) if w.is_finite() => r.abs_error = Some(w / 2.0),
                            _ => {
                                let rel = c.log10_rel_width.unwrap_or(f64::NAN);
                                r.certificate = Some(format!("{}; log10 relative width {rel:.1e}", c.trace));
                            }
                        }
                        if let Some(v) = exact {
                            r.name = c.name;
                            r.value = v.clone().into();
                            r.method = "exact".into();
                            r.abs_error = None;
                        }
                        r
                    }
                    (None, None) => Row::new(format!("log10 {}", c.name), "overflow", "log10-interval")
                        .cert(format!("{}; log10 exceeds the big-float exponent range", c.trace)),
                })
                .collect();
            if let Some(name) = dag {
                rows.push(Row::new(format!("dag {name}({g})"), dag_of(name, *g, *ms)?.to_json(), "expression"));
            }
            Ok(report("constants", json!({"g": g, "report": format!("{kind:?}").to_lowercase(), "ms": ms, "precision": cfg.precision}), cfg, rows))
        }
        Command::VerifyAll { only } => {
            let vc = VerifyConfig { samples: cfg.samples, seed: cfg.seed, ..Default::default() };
            let ids: Vec<u8> = if only.is_empty() { (1..=10).collect() } else { only.clone() };
            if let Some(bad) = ids.iter().find(|&&i| !(1..=10).contains(&i)) {
                return Err(Error::InvalidArgument(format!("no criterion {bad}")));
            }
            let rows = ids
                .iter()
                .map(|&i| {
                    let o = verify::run(i, &vc);
                    let mut r = Row::new(format!("{:>2} {}", o.id, o.name), if o.passed { "PASS" } else { "FAIL" }, "acceptance")
                        .cert(o.detail.clone());
                    r.failed = !o.passed;
                    r
                })
                .collect();
            Ok(report("verify-all", json!({"only": ids, "samples": cfg.samples}), cfg, rows))
        }
    }
}

fn dag_of(name: &str, g: u32, ms: f64) -> Result<BoundExpr> {
    Ok(match name {
        "K" => constants::bost_david_k(g),
        "c31" => constants::c31(g),
        "c7" => constants::c7(g),
        "C3" => constants::big_c3(g)?,
        "c5" => constants::identity_family(g, ms)?.0,
        "c6" => constants::identity_family(g, ms)?.1,
        _ => return Err(Error::InvalidArgument(format!("no DAG named `{name}` (K, c31, c7, C3, c5, c6)"))),
    })
}

/// Height of the algebraic number closest to `target` among the roots of f.
pub fn height_near(f: &IntPoly, target: num_complex::Complex64, tol: f64) -> Result<HeightValue> {
    height_algebraic(&AlgebraicNumber::from_root_near(f, target)?, tol)
}
