//! The acceptance checks, one function per criterion. `heightlab verify-all` and the
//! `acceptance` integration test both run these.

use std::sync::OnceLock;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rug::{Integer, Rational};
use serde::Serialize;

use crate::arith::factor::FactorOptions;
use crate::arith::sturm::real_root_count_int;
use crate::arith::unipoly::IntPoly;
use crate::arith::squarefree::is_squarefree;
use crate::bertini::{parse_gauss, section_search, section_bound_check};
use crate::chow::{chow_height_point, random_lines, remond_check, Hypersurface};
use crate::constants;
use crate::error::Result;
use crate::generators::{is_primitive, search_small_generator, NumberFieldSpec, SearchOptions};
use crate::heights::{height_from_min_poly, height_point, mahler_integral_height, sandwich_check, Norm, ProjectivePoint};
use crate::northcott::{
    conjugate_tracking_heights, habegger_bound, habegger_gamma, iterate_sequence, recurrence_check, selmer_family,
    smyth_polynomial, Mode, SequenceProfile, SequenceSpec, Tag, SMYTH_BOUND, SMYTH_LIMIT,
};

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    /// Samples per Chow height of a point.
    pub samples: u64,
    /// Samples per height in the conic/line instances.
    pub remond_samples: u64,
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { samples: 1_000_000, remond_samples: 200_000, seed: 0 }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CriterionOutcome {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub seconds: f64,
}

impl std::fmt::Display for CriterionOutcome {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "[{tag}] {:>2} {:<28} {:>7.2}s  {}", self.id, self.name, self.seconds, self.detail)
    }
}

pub const NAMES: [&str; 10] = [
    "smyth-sequence",
    "habegger-bound",
    "mahler-identity",
    "point-sandwich",
    "small-generators",
    "selmer-family",
    "chow-point-identity",
    "remond-conic-line",
    "bertini-sections",
    "constants-engine",
];

const LIMITS: [u64; 10] = [120, 60, 60, 60, 60, 120, 300, 300, 60, 60];

fn outcome(id: u8, start: Instant, r: Result<(bool, String)>) -> CriterionOutcome {
    let elapsed = start.elapsed();
    let limit = Duration::from_secs(LIMITS[id as usize - 1]);
    let (passed, mut detail) = match r {
        Ok(v) => v,
        Err(e) => (false, format!("error: {e}")),
    };
    let in_time = elapsed <= limit;
    if !in_time {
        detail.push_str(&format!("; over the {}s budget", limit.as_secs()));
    }
    CriterionOutcome { id, name: NAMES[id as usize - 1], passed: passed && in_time, detail, seconds: elapsed.as_secs_f64() }
}

pub fn run(id: u8, cfg: &VerifyConfig) -> CriterionOutcome {
    let start = Instant::now();
    let r = match id {
        1 => smyth_sequence(),
        2 => habegger(),
        3 => mahler_identity(),
        4 => point_sandwich(cfg.seed),
        5 => small_generators(),
        6 => selmer(),
        7 => chow_points(cfg),
        8 => remond(cfg),
        9 => bertini(),
        10 => constants_engine(),
        _ => panic!("criteria are numbered 1 to 10"),
    };
    outcome(id, start, r)
}

pub fn run_all(cfg: &VerifyConfig) -> Vec<CriterionOutcome> {
    (1..=10).map(|i| run(i, cfg)).collect()
}

fn smyth_profile() -> Result<SequenceProfile> {
    static PROFILE: OnceLock<Result<SequenceProfile>> = OnceLock::new();
    PROFILE.get_or_init(|| iterate_sequence(&SequenceSpec::smyth(8, Mode::AssumeIrreducible))).clone()
}

fn smyth_sequence() -> Result<(bool, String)> {
    let prof = smyth_profile()?;
    let spec = SequenceSpec::smyth(8, Mode::AssumeIrreducible);
    let oracle = conjugate_tracking_heights(&spec.p, &spec.x0, 8)?;
    let certified = iterate_sequence(&SequenceSpec::smyth(5, Mode::Certified))?;
    let rest: Vec<_> = prof.entries.iter().filter(|e| e.index >= 1).collect();
    let below = rest.iter().all(|e| e.height.upper() <= SMYTH_BOUND);
    let closest = rest.iter().map(|e| (e.height.value - SMYTH_LIMIT).abs()).fold(f64::INFINITY, f64::min);
    let oracle_gap = prof.entries.iter().zip(&oracle).map(|(e, o)| (e.height.value - o).abs()).fold(0.0, f64::max);
    let cert_ok = certified.entries.iter().all(|e| e.tag != Tag::AssumedIrreducible)
        && certified.entries.iter().zip(&prof.entries).all(|(a, b)| (a.height.value - b.height.value).abs() <= 1e-12);
    let real = prof
        .entries
        .iter()
        .filter(|e| e.index <= 5)
        .all(|e| real_root_count_int(&e.element.min_poly) == e.element.degree());
    let ok = below && closest <= 0.005 && oracle_gap <= 1e-8 && cert_ok && real;
    Ok((
        ok,
        format!(
            "max h = {:.6} <= {SMYTH_BOUND}: {below}; min |h - {SMYTH_LIMIT}| = {closest:.2e}; oracle gap {oracle_gap:.1e}; certified i<=5: {cert_ok}; totally real i<=5: {real}",
            prof.max_height
        ),
    ))
}

fn habegger() -> Result<(bool, String)> {
    let p = smyth_polynomial();
    let gamma = habegger_gamma(&p)?;
    let b = habegger_bound(&p)?;
    // direct formula: deg_t = 1, deg_x = 2, h(P) = 0
    let gamma_direct = 5.0 * 12f64.ln().sqrt();
    let bound_direct = 1.0 * (gamma_direct * 2.0 / (2.0 - 1.0)).powi(2);
    let rec = recurrence_check(&smyth_profile()?, &p)?;
    let ok = (gamma - gamma_direct).abs() <= 1e-9 && (b.bound - bound_direct).abs() <= 1e-9 && rec.all_hold;
    Ok((
        ok,
        format!("gamma = {gamma:.12}, bound = {:.9}; recurrence on {} pairs: {}", b.bound, rec.pairs.len(), rec.all_hold),
    ))
}

fn cyclotomic(n: usize) -> IntPoly {
    let mut f = IntPoly::monomial(Integer::from(1), n).sub(&IntPoly::constant(Integer::from(1)));
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        f = f.div_exact(&cyclotomic(d)).expect("Phi_d divides x^n - 1");
    }
    f
}

/// The 50 polynomials of the Mahler comparison.
pub fn mahler_suite() -> Vec<IntPoly> {
    let mut out: Vec<IntPoly> = vec![IntPoly::from_i64s(&[-1, -1, 1]), IntPoly::from_i64s(&[-1, 2])];
    out.extend((1..=12).map(cyclotomic));
    // Lehmer's polynomial and a few named ones
    out.push(IntPoly::from_i64s(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1]));
    out.push(IntPoly::from_i64s(&[-1, -1, 0, 1]));
    out.push(IntPoly::from_i64s(&[-2, 0, 1]));
    out.push(IntPoly::from_i64s(&[1, 0, 1]));
    out.push(IntPoly::from_i64s(&[-1, 0, 0, 0, 1, 0, 1]));
    out.extend((3..=10).map(|i| {
        let mut c = vec![-1i64, -1];
        c.resize(i + 1, 0);
        c[i] = 1;
        IntPoly::from_i64s(&c)
    }));
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    while out.len() < 50 {
        let d = rng.random_range(2..=8);
        let mut c: Vec<i64> = (0..=d).map(|_| rng.random_range(-5..=5)).collect();
        if c[0] == 0 {
            c[0] = 1;
        }
        if c[d] == 0 {
            c[d] = 2;
        }
        let f = IntPoly::from_i64s(&c);
        if is_squarefree(&f) {
            out.push(f);
        }
    }
    out
}

fn mahler_identity() -> Result<(bool, String)> {
    let suite = mahler_suite();
    let mut worst = 0.0f64;
    for f in &suite {
        let a = height_from_min_poly(f, 1e-12)?;
        let b = mahler_integral_height(f, 1e-10)?;
        worst = worst.max((a.value - b.value).abs());
    }
    let golden = height_from_min_poly(&suite[0], 1e-12)?.value;
    let half = height_from_min_poly(&suite[1], 1e-12)?.value;
    let cyclo = (2..14).map(|i| height_from_min_poly(&suite[i], 1e-12).map(|h| h.value)).collect::<Result<Vec<_>>>()?;
    let cyclo_max = cyclo.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let ok = worst <= 1e-6
        && (golden - 0.240605912529802).abs() <= 1e-9
        && (half - 2f64.ln()).abs() <= 1e-12
        && cyclo_max <= 1e-12;
    Ok((ok, format!("{} polynomials, max |roots - integral| = {worst:.1e}; h(x^2-x-1) = {golden:.12}", suite.len())))
}

fn random_point(rng: &mut ChaCha8Rng, n: usize, bound: i64) -> ProjectivePoint {
    loop {
        let c: Vec<i64> = (0..=n).map(|_| rng.random_range(-bound..=bound)).collect();
        if let Ok(p) = ProjectivePoint::from_i64s(&c) {
            return p;
        }
    }
}

fn point_sandwich(seed: u64) -> Result<(bool, String)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5a4d);
    let mut fails = 0;
    for n in [2usize, 4] {
        for _ in 0..1000 {
            let p = random_point(&mut rng, n, 1_000_000);
            if !sandwich_check(&p, n) {
                fails += 1;
            }
        }
    }
    let mut worst_eq = 0.0f64;
    for n in [2usize, 4] {
        let ones = ProjectivePoint::from_i64s(&vec![1; n + 1])?;
        let gap = height_point(&ones, Norm::L2).value - height_point(&ones, Norm::Inf).value;
        worst_eq = worst_eq.max((gap - 0.5 * ((n + 1) as f64).ln()).abs());
    }
    Ok((fails == 0 && worst_eq <= 1e-12, format!("2000 points, {fails} failures; equality case off by {worst_eq:.1e}")))
}

fn small_generators() -> Result<(bool, String)> {
    let fields: [(&[i64], u64, Option<f64>); 4] = [
        (&[1, 0, 1], 4, Some(0.0)),
        (&[-2, 0, 1], 8, Some(0.5 * 2f64.ln())),
        (&[-1, -1, 0, 1], 23, Some(0.093_733_191_440_987_28)),
        (&[1, 1, 1, 1, 1], 125, None),
    ];
    let mut ok = true;
    let mut notes = Vec::new();
    for (g, disc, expect) in fields {
        let f = NumberFieldSpec::with_disc(IntPoly::from_i64s(g), Integer::from(disc))?;
        let r = search_small_generator(&f, &SearchOptions::default())?;
        // independent route: integral of log|min poly| on the circle
        let oracle = mahler_integral_height(&r.min_poly, 1e-12)?.value;
        let this = !r.element.is_zero()
            && r.min_poly.is_monic()
            && is_primitive(&r.element, &f)
            && r.height.value <= r.bound + 1e-9
            && (oracle - r.height.value).abs() <= 1e-9
            && expect.is_none_or(|h| (oracle - h).abs() <= 1e-9);
        ok &= this;
        notes.push(format!("|D|={disc}: {:?} h={:.10}", r.element.coords, r.height.value));
    }
    Ok((ok, notes.join("; ")))
}

fn selmer() -> Result<(bool, String)> {
    let r = selmer_family(30, &FactorOptions::default())?;
    let log3 = 3f64.ln();
    let all_cert = r.entries.iter().all(|e| e.certified);
    let bounded = r.entries.iter().all(|e| e.i as f64 * e.height.value <= log3);
    let positive = r.entries.iter().all(|e| e.height.lower() > 0.0);
    let worst = r.entries.iter().map(|e| e.i as f64 * e.height.value).fold(0.0, f64::max);
    Ok((
        all_cert && bounded && positive,
        format!("i = 2..30: certified {all_cert}, max i*h = {worst:.6} <= log 3, positive {positive}"),
    ))
}

fn chow_points(cfg: &VerifyConfig) -> Result<(bool, String)> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0xc40f);
    let mut worst = 0.0f64;
    let mut negative = false;
    let mut k = 0;
    for n in [2usize, 3] {
        for _ in 0..20 {
            let p = random_point(&mut rng, n, 30);
            let h = chow_height_point(&p, cfg.samples, cfg.seed.wrapping_add(k));
            k += 1;
            let h2 = height_point(&p, Norm::L2).value;
            worst = worst.max((h.value - h2).abs() / h.std_error);
            negative |= h.value < -3.0 * h.std_error;
        }
    }
    let unit = chow_height_point(&ProjectivePoint::from_i64s(&[1, 0])?, cfg.samples, cfg.seed.wrapping_add(k));
    let unit_ok = unit.agrees_with(0.0, 3.0);
    negative |= unit.value < -3.0 * unit.std_error;
    Ok((
        worst <= 3.0 && unit_ok && !negative,
        format!(
            "20 points each in P^2 and P^3 at {} samples: max |h_P - h_2| = {worst:.2} sigma; h_P((1:0)) = {:.1e} +/- {:.1e}",
            cfg.samples, unit.value, unit.std_error
        ),
    ))
}

fn remond(cfg: &VerifyConfig) -> Result<(bool, String)> {
    let x = Hypersurface::parse("x0^2+x1^2-x2^2", Some(2))?;
    let lines = random_lines(&x, 10, 3, cfg.seed.wrapping_add(7));
    let h = lines
        .iter()
        .map(|l| {
            let c: Vec<Rational> = l.form().terms().values().map(Rational::from).collect();
            crate::heights::height_poly(&c, Norm::L2).map(|v| v.value)
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .fold(0.0, f64::max);
    let r = remond_check(&x, &lines, h, cfg.remond_samples, cfg.seed)?;
    let failures = r.instances.iter().filter(|i| !(i.holds && i.degree_ok)).count();
    Ok((r.all_hold && r.instances.len() == 10, format!("10 lines, H = {h:.4}, {failures} failures")))
}

fn bertini() -> Result<(bool, String)> {
    let sample: Vec<_> = ["0", "1", "-1"].iter().map(|s| parse_gauss(s)).collect::<Result<_>>()?;
    let mut notes = Vec::new();
    let mut ok = true;
    for (form, genus, cap) in [("x0^4+x1^4+x2^4+x3^4", 3, 20), ("x0^2+x1^2+x2^2+x3^2", 0, 6)] {
        let x = Hypersurface::parse(form, Some(3))?;
        let c = section_search(&x, &sample, 1000)?;
        let b = section_bound_check(&x, &c, 0.0, None);
        ok &= b.genus == genus && b.genus_bound == cap && b.genus_ok && b.degree_ok;
        notes.push(format!("{form}: section after {} tries, genus {} <= {}", c.tried, b.genus, b.genus_bound));
    }
    Ok((ok, notes.join("; ")))
}

fn constants_engine() -> Result<(bool, String)> {
    // independent big-integer route: products of small integers
    let fact = |n: u32| (1..=n).fold(Integer::from(1), |a, k| a * k);
    let p16 = |g: u32| (0..g).fold(Integer::from(1), |a, _| a * 16u32);
    let cap = |g: u32| {
        let a = p16(g) * fact(g);
        Integer::from(&a * &a) + a
    };
    let mut ok = constants::genus_cap(2) == 262656
        && constants::genus_cap(3) == 604004352u64
        && (2..=6).all(|g| constants::genus_cap(g) == cap(g))
        && constants::c9(2) == 98304
        && constants::theta_ambient(2) == (Integer::from(255), Integer::from(512));
    let c31 = constants::c31(2).eval_default()?.value_f64().unwrap_or(f64::NAN);
    let sweep = constants::c31_sweep(2, 1e10, 20)?;
    ok &= (c31 / 1.768e5 - 1.0).abs() < 1e-3 && sweep.all_hold;
    let z = constants::zarhin_factors(2)?;
    ok &= (z.field_degree_log10 - 1721.6).abs() < 0.05;
    // c5 = c0 c1 c3 / C3 and c6 by substitution into the identity family
    let (c5, c6) = constants::identity_family(2, 0.274)?;
    let c3 = constants::big_c3(2)?.eval_default()?;
    let c5b = c5.eval_default()?;
    let c5_ok = c5b.lo == -c3.hi.clone() && c5b.hi == -c3.lo.clone();
    let c6_ok = c6.eval_default()?.exact == Some(Rational::from_f64(0.274).unwrap() + 1);
    ok &= c5_ok && c6_ok;
    Ok((
        ok,
        format!(
            "C2(2)=262656, c9(2)=98304; c31(2) = {c31:.1}; sweep {} points ok {}; log10 48^1024 = {:.3}; c5 = 1/C3(2): {c5_ok}; c6 = 1.274: {c6_ok}",
            sweep.points, sweep.all_hold, z.field_degree_log10
        ),
    ))
}
