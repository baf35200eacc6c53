use num_complex::Complex64;
use rug::float::Round;
use rug::ops::{AddAssignRound, DivAssignRound, SubAssignRound};
use rug::{Float, Integer, Rational};

use super::value::{HeightValue, Method};
use crate::arith::ball::ComplexBall;
use crate::arith::factor::{factor_rationals_with, FactorOptions};
use crate::arith::resultant::power_poly;
use crate::arith::roots::{isolate_roots, RootIsolation, RootOptions, DEFAULT_MAX_PRECISION};
use crate::arith::squarefree::{is_squarefree, squarefree_decompose, squarefree_part};
use crate::arith::unipoly::IntPoly;
use crate::error::{Error, Result};

pub const DEFAULT_TOLERANCE: f64 = 1e-12;
const LOG_PREC: u32 = 128;

fn ln_round(x: &Float, round: Round) -> Float {
    Float::with_val_round(LOG_PREC, x.ln_ref(), round).0
}

/// Enclosure of sum log+ |z| over the balls.
fn log_plus_sum(balls: &[ComplexBall]) -> (Float, Float) {
    let mut lo = Float::new(LOG_PREC);
    let mut hi = Float::new(LOG_PREC);
    for b in balls {
        let p = b.prec().max(LOG_PREC);
        let c = &b.center;
        let mut m_lo = Float::with_val_round(p, c.real().hypot_ref(c.imag()), Round::Down).0;
        let mut m_hi = Float::with_val_round(p, c.real().hypot_ref(c.imag()), Round::Up).0;
        m_lo.sub_assign_round(&b.radius, Round::Down);
        m_hi.add_assign_round(&b.radius, Round::Up);
        if m_lo > 1 {
            lo.add_assign_round(&ln_round(&m_lo, Round::Down), Round::Down);
        }
        if m_hi > 1 {
            hi.add_assign_round(&ln_round(&m_hi, Round::Up), Round::Up);
        }
    }
    (lo, hi)
}

/// Enclosure [lo, hi] of log M(f), the logarithmic Mahler measure, with hi - lo <= 2 tol.
pub fn mahler_measure_log(f: &IntPoly, tol: f64) -> Result<(Float, Float)> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let lc = Float::with_val(f.lc().significant_bits().max(64), Integer::from(f.lc().abs_ref()));
    let base_lo = ln_round(&lc, Round::Down);
    let base_hi = ln_round(&lc, Round::Up);
    let shift = f.coeffs().iter().position(|c| c.cmp0().is_ne()).unwrap();
    let g = IntPoly::new(f.coeffs()[shift..].to_vec());
    if g.degree() == 0 {
        return Ok((base_lo, base_hi));
    }
    let parts: Vec<(IntPoly, u32)> = if is_squarefree(&g) {
        vec![(g.primitive(), 1)]
    } else {
        squarefree_decompose(&g.to_unipoly())
    };
    let mut prec = 128;
    loop {
        let (mut lo, mut hi) = (base_lo.clone(), base_hi.clone());
        for (p, e) in &parts {
            if p.degree() == 0 {
                continue;
            }
            let iso = isolate_roots(p, &RootOptions { precision: prec, ..Default::default() })?;
            let (l, h) = log_plus_sum(&iso.roots);
            lo.add_assign_round(&Float::with_val(LOG_PREC, &l * *e), Round::Down);
            hi.add_assign_round(&Float::with_val(LOG_PREC, &h * *e), Round::Up);
        }
        let width = Float::with_val(LOG_PREC, &hi - &lo).to_f64();
        if width <= 2.0 * tol {
            return Ok((lo, hi));
        }
        prec *= 2;
        if prec > DEFAULT_MAX_PRECISION {
            return Err(Error::PrecisionExhausted(DEFAULT_MAX_PRECISION));
        }
    }
}

/// h(alpha) for a root alpha of the irreducible primitive polynomial f.
pub fn height_from_min_poly(f: &IntPoly, tol: f64) -> Result<HeightValue> {
    let d = f.degree();
    if d == 0 {
        return Err(Error::ConstantPolynomial);
    }
    let (mut lo, mut hi) = mahler_measure_log(f, tol * d as f64)?;
    lo.div_assign_round(d as u32, Round::Down);
    hi.div_assign_round(d as u32, Round::Up);
    Ok(HeightValue::from_enclosure(&lo, &hi, Method::ExactRoots))
}

/// Height from a complete set of isolating balls of the primitive squarefree f.
pub fn height_from_roots(f: &IntPoly, roots: &[ComplexBall]) -> HeightValue {
    let d = f.degree();
    let lc = Float::with_val(f.lc().significant_bits().max(64), Integer::from(f.lc().abs_ref()));
    let (l, h) = log_plus_sum(roots);
    let mut lo = ln_round(&lc, Round::Down);
    let mut hi = ln_round(&lc, Round::Up);
    lo.add_assign_round(&l, Round::Down);
    hi.add_assign_round(&h, Round::Up);
    lo.div_assign_round(d as u32, Round::Down);
    hi.div_assign_round(d as u32, Round::Up);
    HeightValue::from_enclosure(&lo, &hi, Method::ExactRoots)
}

/// An algebraic number: its minimal polynomial (primitive, positive leading coefficient)
/// and a ball isolating it among the roots.
#[derive(Clone, Debug)]
pub struct AlgebraicNumber {
    pub min_poly: IntPoly,
    pub approx: ComplexBall,
    /// `min_poly` proven irreducible.
    pub certified: bool,
}

impl AlgebraicNumber {
    pub fn new(min_poly: IntPoly, approx: ComplexBall, certified: bool) -> Result<Self> {
        if min_poly.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if min_poly.degree() == 0 {
            return Err(Error::ConstantPolynomial);
        }
        let min_poly = min_poly.primitive();
        if !is_squarefree(&min_poly) {
            return Err(Error::Hypothesis("minimal polynomial must be squarefree".into()));
        }
        if !ComplexBall::eval_int_poly(&min_poly, &approx).contains_zero() {
            return Err(Error::InvalidArgument("ball does not contain a root".into()));
        }
        Ok(AlgebraicNumber { min_poly, approx, certified })
    }

    pub fn rational(q: &Rational) -> Self {
        let f = IntPoly::new(vec![-Integer::from(q.numer()), Integer::from(q.denom())]);
        let iso = isolate_roots(&f, &RootOptions::default()).expect("linear polynomial");
        AlgebraicNumber { min_poly: f, approx: iso.roots[0].clone(), certified: true }
    }

    pub fn integer(n: i64) -> Self {
        Self::rational(&Rational::from(n))
    }

    /// The root of f closest to `target`. f is factored when feasible; otherwise its
    /// squarefree part is taken as the minimal polynomial and `certified` is false.
    pub fn from_root_near(f: &IntPoly, target: Complex64) -> Result<Self> {
        let (factors, certified) = irreducible_factors(f)?;
        let mut best: Option<(f64, AlgebraicNumber)> = None;
        for g in factors {
            let iso = isolate_roots(&g, &RootOptions::default())?;
            for b in iso.roots {
                let d = (b.to_c64() - target).norm();
                if best.as_ref().is_none_or(|(bd, _)| d < *bd) {
                    best = Some((d, AlgebraicNumber { min_poly: g.clone(), approx: b, certified }));
                }
            }
        }
        best.map(|(_, a)| a).ok_or(Error::ConstantPolynomial)
    }

    /// All roots of f grouped by irreducible factor, factors in ascending order.
    pub fn all_roots(f: &IntPoly) -> Result<Vec<AlgebraicNumber>> {
        let (factors, certified) = irreducible_factors(f)?;
        let mut out = Vec::new();
        for g in factors {
            for b in isolate_roots(&g, &RootOptions::default())?.roots {
                out.push(AlgebraicNumber { min_poly: g.clone(), approx: b, certified });
            }
        }
        Ok(out)
    }

    pub fn degree(&self) -> usize {
        self.min_poly.degree()
    }

    pub fn is_zero(&self) -> bool {
        self.min_poly.degree() == 1 && self.min_poly.coeff(0).cmp0().is_eq()
    }

    pub fn to_c64(&self) -> Complex64 {
        self.approx.to_c64()
    }

    pub fn conjugates(&self, precision: u32) -> Result<RootIsolation> {
        isolate_roots(&self.min_poly, &RootOptions { precision, ..Default::default() })
    }

    /// Same number with an isolating ball computed at `precision` bits.
    pub fn refine(&self, precision: u32) -> Result<AlgebraicNumber> {
        if precision <= self.approx.prec() {
            return Ok(self.clone());
        }
        let iso = self.conjugates(precision)?;
        let hits: Vec<&ComplexBall> = iso.roots.iter().filter(|b| b.overlaps(&self.approx)).collect();
        let pick = match hits.len() {
            1 => hits[0],
            0 => return Err(Error::RootTrackingAmbiguous(0)),
            _ => {
                let c = self.approx.to_c64();
                hits.into_iter()
                    .min_by(|a, b| (a.to_c64() - c).norm().total_cmp(&(b.to_c64() - c).norm()))
                    .unwrap()
            }
        };
        Ok(AlgebraicNumber { approx: pick.clone(), ..self.clone() })
    }

    pub fn height(&self) -> Result<HeightValue> {
        height_algebraic(self, DEFAULT_TOLERANCE)
    }

    /// alpha^n with its minimal polynomial found by elimination and factoring.
    pub fn pow(&self, n: u32) -> Result<AlgebraicNumber> {
        if n == 0 {
            return Ok(Self::integer(1));
        }
        if n == 1 {
            return Ok(self.clone());
        }
        let (factors, certified) = irreducible_factors(&power_poly(&self.min_poly, n)?)?;
        let (i, ball) = locate_root(&factors, |p| Ok(self.refine(p)?.approx.pow(n)))?;
        Ok(AlgebraicNumber { min_poly: factors[i].clone(), approx: ball, certified: certified && self.certified })
    }

    pub fn inverse(&self) -> Result<AlgebraicNumber> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let g = self.min_poly.reverse().primitive();
        let (i, ball) = locate_root(std::slice::from_ref(&g), |p| {
            self.refine(p)?.approx.recip().ok_or(Error::RootTrackingAmbiguous(0))
        })?;
        debug_assert_eq!(i, 0);
        Ok(AlgebraicNumber { min_poly: g, approx: ball, certified: self.certified })
    }
}

/// h(alpha) via the root formula (1/d)(log|lc| + sum log+|root|).
pub fn height_algebraic(a: &AlgebraicNumber, tol: f64) -> Result<HeightValue> {
    let mut h = height_from_min_poly(&a.min_poly, tol)?;
    h.assumed_irreducible = !a.certified;
    Ok(h)
}

/// Distinct irreducible factors of f, or its squarefree part when factoring exceeds the cap.
pub(crate) fn irreducible_factors(f: &IntPoly) -> Result<(Vec<IntPoly>, bool)> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.degree() == 0 {
        return Err(Error::ConstantPolynomial);
    }
    match factor_rationals_with(&f.to_unipoly(), &FactorOptions::default()) {
        Ok(fac) => Ok((fac.factors.into_iter().map(|(g, _)| g).collect(), true)),
        Err(Error::DegreeCapExceeded { .. }) | Err(Error::RecombinationBudget(_)) => {
            Ok((vec![squarefree_part(f).primitive()], false))
        }
        Err(e) => Err(e),
    }
}

/// Finds the unique root, among all roots of `factors`, whose isolating ball meets
/// `target(prec)`; the target must contain the sought root at every precision.
/// Returns the factor index and the root's ball.
pub fn locate_root<F>(factors: &[IntPoly], target: F) -> Result<(usize, ComplexBall)>
where
    F: Fn(u32) -> Result<ComplexBall>,
{
    let mut prec = 128;
    while prec <= DEFAULT_MAX_PRECISION {
        let t = target(prec)?;
        let mut hits = Vec::new();
        for (i, g) in factors.iter().enumerate() {
            if g.degree() == 0 {
                continue;
            }
            if !ComplexBall::eval_int_poly(g, &t).contains_zero() {
                continue;
            }
            let iso = isolate_roots(g, &RootOptions { precision: prec, ..Default::default() })?;
            hits.extend(iso.roots.into_iter().filter(|b| b.overlaps(&t)).map(|b| (i, b)));
        }
        if hits.len() == 1 {
            return Ok(hits.pop().unwrap());
        }
        prec *= 2;
    }
    Err(Error::RootTrackingAmbiguous(0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn golden_ratio() {
        let h = height_from_min_poly(&ip(&[-1, -1, 1]), 1e-12).unwrap();
        assert!((h.value - 0.240_605_912_529_801_74).abs() < 1e-14);
        assert!(h.abs_error <= 1e-12);
    }

    #[test]
    fn rationals_and_sqrt2() {
        assert_eq!(AlgebraicNumber::integer(1).height().unwrap().value, 0.0);
        let q = AlgebraicNumber::rational(&Rational::from((3, 4)));
        assert!((q.height().unwrap().value - 4f64.ln()).abs() < 1e-14);
        let s = AlgebraicNumber::from_root_near(&ip(&[-2, 0, 1]), Complex64::new(1.4, 0.0)).unwrap();
        assert!((s.height().unwrap().value - 0.5 * 2f64.ln()).abs() < 1e-14);
        assert!(s.certified);
    }

    #[test]
    fn plastic_number() {
        let h = height_from_min_poly(&ip(&[-1, -1, 0, 1]), 1e-12).unwrap();
        assert!((h.value - 0.093_733_191_440_987_28).abs() < 1e-14);
    }

    #[test]
    fn non_squarefree_and_zero_roots() {
        // x^2 (x^2 - 2)^3: log M = 3 log 2
        let f = ip(&[0, 0, -2, 0, 1]).mul(&ip(&[-2, 0, 1]).pow(2));
        let (lo, hi) = mahler_measure_log(&f, 1e-12).unwrap();
        let want = 3.0 * 2f64.ln();
        assert!(lo.to_f64() <= want + 1e-15 && hi.to_f64() >= want - 1e-15);
    }

    #[test]
    fn power_and_inverse() {
        let phi = AlgebraicNumber::from_root_near(&ip(&[-1, -1, 1]), Complex64::new(1.6, 0.0)).unwrap();
        let h = phi.height().unwrap().value;
        let p3 = phi.pow(3).unwrap();
        // phi^3 = 2 + sqrt 5, minimal polynomial x^2 - 4x - 1
        assert_eq!(p3.min_poly, ip(&[-1, -4, 1]));
        assert!((p3.height().unwrap().value - 3.0 * h).abs() < 1e-12);
        let inv = phi.inverse().unwrap();
        assert_eq!(inv.min_poly, ip(&[-1, 1, 1]));
        assert!((inv.to_c64().re - 0.618033988749895).abs() < 1e-14);
        let s2 = AlgebraicNumber::from_root_near(&ip(&[-2, 0, 1]), Complex64::new(-1.4, 0.0)).unwrap();
        assert_eq!(s2.pow(2).unwrap().min_poly, ip(&[-2, 1]));
        assert!(AlgebraicNumber::integer(0).inverse().is_err());
    }

    #[test]
    fn cyclotomic_heights_vanish() {
        let h = height_from_min_poly(&ip(&[1, 1, 1, 1, 1]), 1e-12).unwrap();
        assert!(h.value <= h.abs_error);
    }
}
