//! Sequences x_0, x_1, ... with P(x_{i+1}, x_i) = 0.
//!
//! The minimal polynomial of x_{i+1} divides Res_t(P(x, t), m_i(t)). The next element
//! is picked among the roots of that resultant that also satisfy P(y, x_i) = 0, checked
//! by ball evaluation and refined until only deg_y P(y, x_i) candidates remain.

use num_complex::Complex64;
use rug::Integer;
use serde::Serialize;

use crate::arith::ball::ComplexBall;
use crate::arith::bipoly::BiPoly;
use crate::arith::factor::{factor_squarefree, FactorOptions};
use crate::arith::resultant::eliminate_t_int;
use crate::arith::roots::{isolate_roots, RootOptions, DEFAULT_MAX_PRECISION};
use crate::arith::squarefree::squarefree_part;
use crate::arith::unipoly::IntPoly;
use crate::error::{Error, Result};
use crate::heights::{height_from_roots, AlgebraicNumber, HeightValue};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    Certified,
    AssumeIrreducible,
}

impl std::str::FromStr for Mode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "certified" => Ok(Mode::Certified),
            "assume-irreducible" => Ok(Mode::AssumeIrreducible),
            _ => Err(Error::InvalidArgument(format!("unknown mode `{s}`"))),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RootSelection {
    /// Largest modulus; ties broken by smallest principal argument.
    #[default]
    LargestModulus,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Tag {
    /// Starting value, supplied by the caller.
    Given,
    Certified,
    AssumedIrreducible,
}

impl std::fmt::Display for Tag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Tag::Given => "given",
            Tag::Certified => "certified",
            Tag::AssumedIrreducible => "assumed-irreducible",
        })
    }
}

#[derive(Clone, Debug)]
pub struct SequenceSpec {
    pub p: BiPoly,
    pub x0: AlgebraicNumber,
    pub selection: RootSelection,
    pub mode: Mode,
    pub max_index: usize,
    pub factor: FactorOptions,
}

impl SequenceSpec {
    pub fn new(p: BiPoly, x0: AlgebraicNumber, mode: Mode, max_index: usize) -> Result<Self> {
        let (dx, dt) = (p.deg_x(), p.deg_t());
        if !(dx > dt && dt > 0) {
            return Err(Error::Hypothesis(format!("need deg_x P > deg_t P > 0, got {dx} and {dt}")));
        }
        Ok(SequenceSpec { p, x0, selection: RootSelection::default(), mode, max_index, factor: FactorOptions::default() })
    }

    /// P = x^2 - t x - 1 from x_0 = 1.
    pub fn smyth(max_index: usize, mode: Mode) -> Self {
        Self::new(smyth_polynomial(), AlgebraicNumber::integer(1), mode, max_index).expect("valid shape")
    }
}

pub fn smyth_polynomial() -> BiPoly {
    BiPoly::from_i64s(&[((2, 0), 1), ((1, 1), -1), ((0, 0), -1)])
}

#[derive(Clone, Debug, Serialize)]
pub struct SequenceEntry {
    pub index: usize,
    pub degree: usize,
    pub height: HeightValue,
    pub tag: Tag,
    #[serde(skip)]
    pub element: AlgebraicNumber,
}

#[derive(Clone, Debug, Serialize)]
pub struct SequenceProfile {
    pub entries: Vec<SequenceEntry>,
    pub max_height: f64,
    pub min_height: f64,
}

impl SequenceProfile {
    fn from_entries(entries: Vec<SequenceEntry>) -> Self {
        let hs = entries.iter().map(|e| e.height.value);
        let max_height = hs.clone().fold(f64::NEG_INFINITY, f64::max);
        let min_height = hs.fold(f64::INFINITY, f64::min);
        SequenceProfile { entries, max_height, min_height }
    }

    pub fn heights(&self) -> Vec<f64> {
        self.entries.iter().map(|e| e.height.value).collect()
    }

    /// CSV with columns i, degree, height, error, tag.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("i,degree,height,error,tag\n");
        for e in &self.entries {
            s.push_str(&format!("{},{},{},{:e},{}\n", e.index, e.degree, e.height.value, e.height.abs_error, e.tag));
        }
        s
    }
}

pub fn iterate_sequence(spec: &SequenceSpec) -> Result<SequenceProfile> {
    let x0 = &spec.x0;
    let mut entries = vec![SequenceEntry {
        index: 0,
        degree: x0.degree(),
        height: x0.height()?,
        tag: Tag::Given,
        element: x0.clone(),
    }];
    let mut cur = x0.clone();
    for i in 1..=spec.max_index {
        let r = eliminate_t_int(&spec.p, &cur.min_poly)?;
        if r.is_zero() {
            return Err(Error::Hypothesis(format!("P(x, t) and m_{} share a factor", i - 1)));
        }
        let sf = squarefree_part(&r).primitive();
        let (factors, certified) = match spec.mode {
            Mode::Certified => (factor_squarefree(&sf, &spec.factor)?, true),
            Mode::AssumeIrreducible => (vec![sf], false),
        };
        let (k, ball, roots) = select_next(&spec.p, &cur, &factors, i)?;
        let g = factors[k].clone();
        let height = {
            let mut h = height_from_roots(&g, &roots);
            h.assumed_irreducible = !certified;
            h
        };
        let next = AlgebraicNumber { min_poly: g, approx: ball, certified: certified && cur.certified };
        entries.push(SequenceEntry {
            index: i,
            degree: next.degree(),
            height,
            tag: if next.certified { Tag::Certified } else { Tag::AssumedIrreducible },
            element: next.clone(),
        });
        cur = next;
    }
    Ok(SequenceProfile::from_entries(entries))
}

/// Returns (factor index, isolating ball, all root balls of that factor).
fn select_next(
    p: &BiPoly,
    cur: &AlgebraicNumber,
    factors: &[IntPoly],
    index: usize,
) -> Result<(usize, ComplexBall, Vec<ComplexBall>)> {
    let a = p.x_coefficients();
    // effective degree in y of P(y, x_i): a_k(x_i) = 0 iff m_i divides a_k
    let d_eff = (0..a.len())
        .rev()
        .find(|&k| !a[k].is_zero() && (a[k].degree() < cur.min_poly.degree() || !a[k].pseudo_rem(&cur.min_poly).is_zero()))
        .ok_or(Error::Hypothesis("P(y, x_i) vanishes identically".into()))?;
    let mut prec = 128;
    while prec <= DEFAULT_MAX_PRECISION {
        let x = cur.refine(prec)?;
        let coeffs: Vec<ComplexBall> = a.iter().map(|c| ComplexBall::eval_int_poly(c, &x.approx)).collect();
        let mut isolations = Vec::with_capacity(factors.len());
        let mut cands: Vec<(usize, usize)> = Vec::new();
        for (fi, g) in factors.iter().enumerate() {
            let iso = isolate_roots(g, &RootOptions { precision: prec, ..Default::default() })?;
            for (ri, b) in iso.roots.iter().enumerate() {
                if eval_ball_poly(&coeffs, b).contains_zero() {
                    cands.push((fi, ri));
                }
            }
            isolations.push(iso.roots);
        }
        if !cands.is_empty() && cands.len() <= d_eff {
            if let Some((fi, ri)) = pick(&cands, &isolations, prec >= 512) {
                let ball = isolations[fi][ri].clone();
                let roots = std::mem::take(&mut isolations[fi]);
                return Ok((fi, ball, roots));
            }
        }
        prec *= 2;
    }
    Err(Error::RootTrackingAmbiguous(index))
}

fn eval_ball_poly(coeffs: &[ComplexBall], z: &ComplexBall) -> ComplexBall {
    let mut acc = ComplexBall::exact(rug::Complex::new(z.prec()));
    for c in coeffs.iter().rev() {
        acc = acc.mul(z).add(c);
    }
    acc
}

/// Largest modulus; candidates whose modulus intervals overlap the best one are ties,
/// which are accepted only once `settle` is set and then broken by principal argument.
fn pick(cands: &[(usize, usize)], iso: &[Vec<ComplexBall>], settle: bool) -> Option<(usize, usize)> {
    let ball = |c: &(usize, usize)| &iso[c.0][c.1];
    let best = cands.iter().max_by(|a, b| ball(a).mag_lower().total_cmp(&ball(b).mag_lower()))?;
    let floor = ball(best).mag_lower();
    let ties: Vec<&(usize, usize)> = cands.iter().filter(|c| ball(c).mag_upper() >= floor).collect();
    if ties.len() == 1 {
        return Some(*best);
    }
    if !settle {
        return None;
    }
    ties.into_iter()
        .min_by(|a, b| ball(a).to_c64().arg().total_cmp(&ball(b).to_c64().arg()))
        .copied()
}

/// Independent check of the exact path: propagate every conjugate of x_0 through
/// P(y, sigma) = 0 in double precision and average log+ over the resulting set.
/// Valid when P is monic in x up to sign and x_0 is an algebraic integer, so that all
/// x_i are algebraic integers whose conjugates are exactly the propagated values.
pub fn conjugate_tracking_heights(p: &BiPoly, x0: &AlgebraicNumber, max_index: usize) -> Result<Vec<f64>> {
    let a = p.x_coefficients();
    let top = a.last().unwrap();
    if top.degree() != 0 || top.lc().clone().abs() != 1 {
        return Err(Error::Hypothesis("conjugate tracking needs P monic in x".into()));
    }
    if x0.min_poly.lc().clone().abs() != 1 {
        return Err(Error::Hypothesis("conjugate tracking needs x_0 integral".into()));
    }
    let af: Vec<Vec<f64>> = a.iter().map(|c| c.coeffs().iter().map(Integer::to_f64).collect()).collect();
    let mut conj: Vec<Complex64> = x0.conjugates(128)?.roots.iter().map(|b| b.to_c64()).collect();
    let mut out = vec![mean_log_plus(&conj)];
    for _ in 0..max_index {
        let mut next = Vec::with_capacity(conj.len() * (a.len() - 1));
        for s in &conj {
            let c: Vec<Complex64> = af
                .iter()
                .map(|col| col.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &v| acc * s + v))
                .collect();
            next.extend(roots_c64(&c));
        }
        conj = next;
        out.push(mean_log_plus(&conj));
    }
    Ok(out)
}

fn mean_log_plus(z: &[Complex64]) -> f64 {
    z.iter().map(|w| w.norm().ln().max(0.0)).sum::<f64>() / z.len() as f64
}

/// Roots of a small complex polynomial (ascending coefficients).
fn roots_c64(c: &[Complex64]) -> Vec<Complex64> {
    let n = c.len() - 1;
    match n {
        1 => vec![-c[0] / c[1]],
        2 => {
            let (a, b, cc) = (c[2], c[1], c[0]);
            let disc = (b * b - 4.0 * a * cc).sqrt();
            // pick the sign that avoids cancellation
            let q = if (b.conj() * disc).re >= 0.0 { -0.5 * (b + disc) } else { -0.5 * (b - disc) };
            if q.norm() == 0.0 {
                vec![Complex64::new(0.0, 0.0); 2]
            } else {
                vec![q / a, cc / q]
            }
        }
        _ => durand_kerner(c),
    }
}

fn durand_kerner(c: &[Complex64]) -> Vec<Complex64> {
    let n = c.len() - 1;
    let lc = c[n];
    let monic: Vec<Complex64> = c.iter().map(|v| v / lc).collect();
    let radius = 1.0 + monic[..n].iter().map(|v| v.norm()).fold(0.0, f64::max);
    let mut z: Vec<Complex64> =
        (0..n).map(|k| Complex64::from_polar(radius, 0.4 + 2.0 * std::f64::consts::PI * k as f64 / n as f64)).collect();
    for _ in 0..500 {
        let mut delta: f64 = 0.0;
        for i in 0..n {
            let num = monic.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, v| acc * z[i] + v);
            let den = (0..n).filter(|&j| j != i).fold(Complex64::new(1.0, 0.0), |acc, j| acc * (z[i] - z[j]));
            let step = num / den;
            z[i] -= step;
            delta = delta.max(step.norm());
        }
        if delta < 1e-15 * radius {
            break;
        }
    }
    z
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smyth_first_steps() {
        let prof = iterate_sequence(&SequenceSpec::smyth(3, Mode::Certified)).unwrap();
        let e = &prof.entries;
        assert_eq!(e[1].element.min_poly, IntPoly::from_i64s(&[-1, -1, 1]));
        assert_eq!(e[2].element.min_poly, IntPoly::from_i64s(&[1, 1, -3, -1, 1]));
        assert!((e[1].element.to_c64().re - 1.618033988749895).abs() < 1e-14);
        assert!((e[1].height.value - 0.240605912529802).abs() < 1e-13);
        assert!((e[2].height.value - 0.260998208772539).abs() < 1e-13);
        assert!((e[3].height.value - 0.268304538685659).abs() < 1e-13);
        assert_eq!(e.iter().map(|x| x.degree).collect::<Vec<_>>(), vec![1, 2, 4, 8]);
        assert!(e[1..].iter().all(|x| x.tag == Tag::Certified));
    }

    #[test]
    fn oracle_matches() {
        let spec = SequenceSpec::smyth(4, Mode::AssumeIrreducible);
        let prof = iterate_sequence(&spec).unwrap();
        let orc = conjugate_tracking_heights(&spec.p, &spec.x0, 4).unwrap();
        for (e, o) in prof.entries.iter().zip(&orc) {
            assert!((e.height.value - o).abs() < 1e-10);
        }
        assert_eq!(prof.entries[4].tag, Tag::AssumedIrreducible);
    }

    #[test]
    fn square_root_chain_breaks_ties_by_argument() {
        // x^2 - t from 2: 2, 2^(1/2), 2^(1/4), ... choosing the positive root each time
        let p = BiPoly::from_i64s(&[((2, 0), 1), ((0, 1), -1)]);
        let spec = SequenceSpec::new(p, AlgebraicNumber::integer(2), Mode::Certified, 3).unwrap();
        let prof = iterate_sequence(&spec).unwrap();
        for (i, e) in prof.entries.iter().enumerate() {
            let want = 2f64.ln() / (1u32 << i) as f64;
            assert!((e.height.value - want).abs() < 1e-13);
            assert!(e.element.to_c64().re > 0.0);
        }
        assert_eq!(prof.entries[3].element.min_poly, IntPoly::from_i64s(&[-2, 0, 0, 0, 0, 0, 0, 0, 1]));
    }

    #[test]
    fn shape_hypothesis() {
        let p = BiPoly::from_i64s(&[((1, 0), 1), ((0, 1), -1)]);
        assert!(SequenceSpec::new(p, AlgebraicNumber::integer(1), Mode::Certified, 2).is_err());
    }
}
