//! Resultants by the subresultant PRS, discriminants, and elimination of t
//! from P(x, t) against m(t) by evaluation and Newton interpolation.

use rug::ops::Pow;
use rug::{Complete, Integer, Rational};

use super::bipoly::BiPoly;
use super::unipoly::{IntPoly, UniPoly};
use crate::error::{Error, Result};

/// Resultant of two nonzero integer polynomials.
pub fn resultant_int(a: &IntPoly, b: &IntPoly) -> Result<Integer> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (da, db) = (a.degree(), b.degree());
    if da == 0 {
        return Ok(a.lc().clone().pow(db as u32));
    }
    if db == 0 {
        return Ok(b.lc().clone().pow(da as u32));
    }
    let (mut a, mut b, mut s) = if da < db {
        (b.clone(), a.clone(), if da % 2 == 1 && db % 2 == 1 { -1 } else { 1 })
    } else {
        (a.clone(), b.clone(), 1)
    };
    let ca = a.content();
    let cb = b.content();
    let t = ca.clone().pow(b.degree() as u32) * cb.clone().pow(a.degree() as u32);
    a = a.div_exact_scalar(&ca);
    b = b.div_exact_scalar(&cb);
    let mut g = Integer::from(1);
    let mut h = Integer::from(1);
    loop {
        let delta = (a.degree() - b.degree()) as u32;
        if a.degree() % 2 == 1 && b.degree() % 2 == 1 {
            s = -s;
        }
        let r = a.pseudo_rem(&b);
        if r.is_zero() {
            return Ok(Integer::new());
        }
        a = b;
        let div = &g * h.clone().pow(delta);
        b = r.div_exact_scalar(&div);
        g = a.lc().clone();
        if delta > 0 {
            h = g.clone().pow(delta).div_exact(&h.clone().pow(delta - 1));
        }
        if b.degree() == 0 {
            break;
        }
    }
    let da = a.degree() as u32;
    let h = if da == 0 { h } else { b.lc().clone().pow(da).div_exact(&h.pow(da - 1)) };
    Ok(h * t * s)
}

/// Classical resultant over Q.
pub fn resultant(f: &UniPoly, g: &UniPoly) -> Result<Rational> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (cf, pf) = f.to_primitive();
    let (cg, pg) = g.to_primitive();
    let r = resultant_int(&pf, &pg)?;
    let sf = cf.pow(g.degree() as u32);
    let sg = cg.pow(f.degree() as u32);
    Ok(Rational::from(r) * sf * sg)
}

/// (-1)^(d(d-1)/2) Res(f, f') / lc(f)
pub fn discriminant(f: &UniPoly) -> Result<Rational> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let d = f.degree();
    if d == 0 {
        return Err(Error::ConstantPolynomial);
    }
    let r = resultant(f, &f.derivative())?;
    let sign = if (d * (d - 1) / 2) % 2 == 1 { -1 } else { 1 };
    Ok(r / f.lc() * sign)
}

pub fn discriminant_int(f: &IntPoly) -> Result<Integer> {
    let d = discriminant(&f.to_unipoly())?;
    Ok(d.into_numer_denom().0)
}

/// Res_t(P(x, t), m(t)) for the integer form of P, exactly, as a polynomial in x.
pub fn eliminate_t_int(p: &BiPoly, m: &IntPoly) -> Result<IntPoly> {
    if p.is_zero() || m.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let n = m.degree();
    let d = p.deg_t() as usize;
    if n == 0 {
        return Ok(IntPoly::constant(m.lc().clone().pow(d as u32)));
    }
    let cols = p.t_coefficients();
    let bound = p.deg_x() as usize * n;
    let x0 = -((bound / 2) as i64);
    let sign_dn = (d * n) % 2 == 1;
    let values: Vec<Integer> = (0..=bound)
        .map(|j| {
            let k = Integer::from(x0 + j as i64);
            let pk = IntPoly::new(cols.iter().map(|c| c.eval(&k)).collect());
            if pk.is_zero() {
                return Ok(Integer::new());
            }
            let e = pk.degree();
            let mut r = resultant_int(m, &pk)? * m.lc().clone().pow((d - e) as u32);
            if sign_dn {
                r = -r;
            }
            Ok(r)
        })
        .collect::<Result<_>>()?;
    Ok(newton_interpolate(x0, values))
}

/// Res_t(P(x,t), m(t)) with P over Q, m over Q.
pub fn eliminate_t(p: &BiPoly, m: &UniPoly) -> Result<UniPoly> {
    let (cm, pm) = m.to_primitive();
    let r = eliminate_t_int(p, &pm)?;
    // Undo the integer normalisations: P = cP * Pint, m = cm * mint.
    let cp = {
        let it = p.integer_terms();
        let (k, v) = it.iter().next().unwrap();
        Rational::from(&p.coeffs()[k] / v)
    };
    let s = cp.pow(m.degree() as u32) * cm.pow(p.deg_t());
    Ok(r.to_unipoly().scale(&s))
}

/// Polynomial with integer coefficients through (x0 + j, v_j), j = 0..n.
fn newton_interpolate(x0: i64, mut v: Vec<Integer>) -> IntPoly {
    let n = v.len();
    // In-place forward differences: v[j] = Delta^j f(x0) / j!.
    for j in 1..n {
        for i in (j..n).rev() {
            let t = (&v[i] - &v[i - 1]).complete();
            v[i] = t;
        }
    }
    let mut fact = Integer::from(1);
    for (j, c) in v.iter_mut().enumerate().skip(1) {
        fact *= j as u64;
        c.div_exact_mut(&fact);
    }
    let mut acc = IntPoly::constant(v[n - 1].clone());
    for j in (0..n - 1).rev() {
        let lin = IntPoly::new(vec![Integer::from(-(x0 + j as i64)), Integer::from(1)]);
        acc = acc.mul(&lin).add(&IntPoly::constant(v[j].clone()));
    }
    acc
}

/// Minimal-polynomial candidate of alpha^n from m(alpha) = 0: Res_t(x - t^n, m(t)), primitive.
pub fn power_poly(m: &IntPoly, n: u32) -> Result<IntPoly> {
    let p = BiPoly::from_i64s(&[((1, 0), 1), ((0, n), -1)]);
    Ok(eliminate_t_int(&p, m)?.primitive())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn up(c: &[i64]) -> UniPoly {
        UniPoly::from_i64s(c)
    }

    #[test]
    fn examples() {
        assert_eq!(resultant(&up(&[-2, 0, 1]), &up(&[-3, 0, 1])).unwrap(), 1);
        // Res(x - 3, g) = g(3)
        let g = up(&[1, 2, 0, 5]);
        assert_eq!(resultant(&up(&[-3, 1]), &g).unwrap(), g.eval(&Rational::from(3)));
        assert!(resultant(&up(&[]), &g).is_err());
    }

    #[test]
    fn discriminants() {
        assert_eq!(discriminant(&up(&[-1, -1, 1])).unwrap(), 5);
        assert_eq!(discriminant(&up(&[1, 0, 1])).unwrap(), -4);
        assert_eq!(discriminant(&up(&[1, -2, 1])).unwrap(), 0);
        // x^3 - x - 1: -4(-1)^3 - 27 = -23
        assert_eq!(discriminant(&up(&[-1, -1, 0, 1])).unwrap(), -23);
        assert_eq!(discriminant(&up(&[1, 1, 1, 1, 1])).unwrap(), 125);
        assert!(discriminant(&up(&[3])).is_err());
    }

    #[test]
    fn sylvester_cross_check() {
        // Res(2x^2 + 3x - 1, 5x^3 - x + 4) computed from the Sylvester determinant by hand elimination.
        let f = up(&[-1, 3, 2]);
        let g = up(&[4, -1, 0, 5]);
        let r = resultant(&f, &g).unwrap();
        let swapped = resultant(&g, &f).unwrap();
        assert_eq!(r, swapped); // deg f * deg g even
        // product over roots of f: lc(f)^3 * prod g(r_i) via the norm identity with x^2 = (1 - 3x)/2
        // g mod f computed exactly
        let (_, rem) = g.div_rem(&f).unwrap();
        let alt = resultant(&f, &rem).unwrap() * Rational::from(2).pow(3 - rem.degree() as u32);
        assert_eq!(r, alt);
    }

    #[test]
    fn elimination_smyth_first_step() {
        let p = BiPoly::from_i64s(&[((2, 0), 1), ((1, 1), -1), ((0, 0), -1)]);
        let r = eliminate_t(&p, &up(&[-1, 1])).unwrap();
        assert_eq!(r.to_primitive().1, IntPoly::from_i64s(&[-1, -1, 1]));
        let r2 = eliminate_t_int(&p, &IntPoly::from_i64s(&[-1, -1, 1])).unwrap().primitive();
        assert_eq!(r2, IntPoly::from_i64s(&[1, 1, -3, -1, 1]));
    }

    #[test]
    fn power_of_sqrt2() {
        assert_eq!(power_poly(&IntPoly::from_i64s(&[-2, 0, 1]), 2).unwrap(), IntPoly::from_i64s(&[4, -4, 1]));
    }

    #[test]
    fn interpolation_roundtrip() {
        let f = IntPoly::from_i64s(&[7, -3, 0, 2, -1]);
        let vals = (0..5).map(|j| f.eval(&Integer::from(-2 + j))).collect();
        assert_eq!(newton_interpolate(-2, vals), f);
    }
}
