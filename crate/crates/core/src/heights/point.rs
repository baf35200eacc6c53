use rug::float::Round;
use rug::ops::DivAssignRound;
use rug::{Float, Integer, Rational};
use serde::Serialize;

use super::value::{HeightValue, Method};
use crate::error::{Error, Result};

const PREC: u32 = 192;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Norm {
    Inf,
    L2,
}

impl std::str::FromStr for Norm {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "inf" => Ok(Norm::Inf),
            "l2" => Ok(Norm::L2),
            _ => Err(Error::InvalidArgument(format!("unknown norm `{s}`"))),
        }
    }
}

/// A point of P^N with coprime integer coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ProjectivePoint {
    #[serde(serialize_with = "ser_ints")]
    coords: Vec<Integer>,
}

fn ser_ints<S: serde::Serializer>(v: &[Integer], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|c| c.to_string()))
}

impl ProjectivePoint {
    pub fn new(coords: Vec<Integer>) -> Result<Self> {
        let g = coords.iter().fold(Integer::new(), |g, c| g.gcd(c));
        if g.cmp0().is_eq() {
            return Err(Error::InvalidArgument("all coordinates are zero".into()));
        }
        Ok(ProjectivePoint { coords: coords.into_iter().map(|c| c.div_exact(&g)).collect() })
    }

    pub fn from_i64s(c: &[i64]) -> Result<Self> {
        Self::new(c.iter().map(|&x| Integer::from(x)).collect())
    }

    /// Clears denominators.
    pub fn from_rationals(c: &[Rational]) -> Result<Self> {
        let den = c.iter().fold(Integer::from(1), |l, q| l.lcm(q.denom()));
        Self::new(c.iter().map(|q| q.numer() * Integer::from(&den / q.denom()) ).collect())
    }

    pub fn coords(&self) -> &[Integer] {
        &self.coords
    }

    /// N for a point of P^N.
    pub fn dim(&self) -> usize {
        self.coords.len() - 1
    }
}

/// h_inf = log max |x_i| and h_2 = log ||x||_2; the finite places contribute nothing
/// for coprime integer coordinates.
pub fn height_point(p: &ProjectivePoint, norm: Norm) -> HeightValue {
    let (lo, hi) = match norm {
        Norm::Inf => {
            let m = p.coords.iter().map(|c| c.clone().abs()).max().unwrap();
            let x = Float::with_val(PREC, &m);
            (Float::with_val_round(PREC, x.ln_ref(), Round::Down).0, Float::with_val_round(PREC, x.ln_ref(), Round::Up).0)
        }
        Norm::L2 => {
            let s: Integer = p.coords.iter().map(|c| Integer::from(c.square_ref())).sum();
            let x = Float::with_val(PREC * 2, &s);
            let mut lo = Float::with_val_round(PREC, x.ln_ref(), Round::Down).0;
            let mut hi = Float::with_val_round(PREC, x.ln_ref(), Round::Up).0;
            lo.div_assign_round(2u32, Round::Down);
            hi.div_assign_round(2u32, Round::Up);
            (lo, hi)
        }
    };
    HeightValue::from_enclosure(&lo, &hi, Method::Exact)
}

/// Height of a polynomial: the height of its coefficient vector as a projective point.
pub fn height_poly(coeffs: &[Rational], norm: Norm) -> Result<HeightValue> {
    let nz: Vec<Rational> = coeffs.iter().filter(|c| c.cmp0().is_ne()).cloned().collect();
    if nz.is_empty() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(height_point(&ProjectivePoint::from_rationals(&nz)?, norm))
}

/// h_inf(P) <= h_2(P) <= h_inf(P) + log(N+1)/2, each side allowed the combined error radius.
pub fn sandwich_check(p: &ProjectivePoint, n: usize) -> bool {
    if p.dim() != n {
        return false;
    }
    let hi = height_point(p, Norm::Inf);
    let h2 = height_point(p, Norm::L2);
    let slack = hi.abs_error + h2.abs_error + 4.0 * f64::EPSILON * (1.0 + h2.value);
    let gap = 0.5 * ((n + 1) as f64).ln();
    hi.value <= h2.value + slack && h2.value <= hi.value + gap + slack
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_four_zero() {
        let p = ProjectivePoint::from_i64s(&[3, 4, 0]).unwrap();
        assert!((height_point(&p, Norm::Inf).value - 4f64.ln()).abs() < 1e-15);
        assert!((height_point(&p, Norm::L2).value - 5f64.ln()).abs() < 1e-15);
        assert!(sandwich_check(&p, 2));
    }

    #[test]
    fn normalization() {
        let p = ProjectivePoint::from_i64s(&[6, 8, 0]).unwrap();
        assert_eq!(p.coords(), ProjectivePoint::from_i64s(&[3, 4, 0]).unwrap().coords());
        let q = ProjectivePoint::from_rationals(&[Rational::from((1, 2)), Rational::from((2, 3))]).unwrap();
        assert_eq!(q, ProjectivePoint::from_i64s(&[3, 4]).unwrap());
        assert!(ProjectivePoint::from_i64s(&[0, 0]).is_err());
        let e = ProjectivePoint::from_i64s(&[1, 0, 0, 0]).unwrap();
        assert_eq!(height_point(&e, Norm::Inf).value, 0.0);
        assert_eq!(height_point(&e, Norm::L2).value, 0.0);
    }

    #[test]
    fn polynomial_heights() {
        let c: Vec<Rational> = [1, -1, -1].iter().map(|&x| Rational::from(x)).collect();
        assert_eq!(height_poly(&c, Norm::Inf).unwrap().value, 0.0);
        assert!((height_poly(&c, Norm::L2).unwrap().value - 0.5 * 3f64.ln()).abs() < 1e-15);
        assert_eq!(height_poly(&[Rational::new(), Rational::from(7)], Norm::L2).unwrap().value, 0.0);
        assert!(height_poly(&[Rational::new()], Norm::Inf).is_err());
    }

    #[test]
    fn all_ones_is_tight() {
        for n in 1..8 {
            let p = ProjectivePoint::from_i64s(&vec![1; n + 1]).unwrap();
            let d = height_point(&p, Norm::L2).value - height_point(&p, Norm::Inf).value;
            assert!((d - 0.5 * ((n + 1) as f64).ln()).abs() < 1e-15);
            assert!(sandwich_check(&p, n));
        }
    }
}
