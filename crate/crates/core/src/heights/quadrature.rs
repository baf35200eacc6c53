//! The integral form of the height, used only as an independent check on the root
//! formula: h(alpha) = (1/deg f) * integral over [0, 1] of log|f(e^{2 pi i t})| dt.
//!
//! The integrand has logarithmic singularities at roots on the unit circle. The circle
//! is cut at the arguments of all roots near it and each panel is integrated with the
//! tanh-sinh rule, which is insensitive to endpoint singularities of this kind.

use num_complex::Complex64;
use rayon::prelude::*;
use rug::{Complex, Float};
use std::f64::consts::{FRAC_PI_2, PI};

use super::value::{HeightValue, Method};
use crate::arith::roots::{isolate_roots, RootOptions};
use crate::arith::squarefree::squarefree_part;
use crate::arith::unipoly::IntPoly;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug)]
pub struct QuadResult {
    pub value: f64,
    pub error: f64,
    pub evals: usize,
}

const T_MAX: f64 = 4.0;
const MAX_LEVEL: u32 = 12;

/// Tanh-sinh quadrature of f over [a, b]; refines until two successive levels agree to `tol`.
pub fn tanh_sinh<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> QuadResult {
    let c = 0.5 * (a + b);
    let r = 0.5 * (b - a);
    let node = |t: f64| -> (f64, f64) {
        let u = FRAC_PI_2 * t.sinh();
        let w = FRAC_PI_2 * t.cosh() / (u.cosh() * u.cosh());
        // distance from the nearer endpoint in units of r, without cancellation
        let delta = 2.0 / ((2.0 * u.abs()).exp() + 1.0);
        let x = if t >= 0.0 { b - r * delta } else { a + r * delta };
        (x, w)
    };
    let mut evals = 1;
    let mut sum = f(c) * FRAC_PI_2;
    let mut h = 1.0;
    let mut k = 1;
    while k as f64 * h <= T_MAX {
        for s in [-1.0, 1.0] {
            let (x, w) = node(s * k as f64 * h);
            sum += w * f(x);
            evals += 1;
        }
        k += 1;
    }
    let mut prev = sum * h * r;
    let mut err = f64::INFINITY;
    for level in 1..=MAX_LEVEL {
        h *= 0.5;
        let mut k = 1;
        while k as f64 * h <= T_MAX {
            for s in [-1.0, 1.0] {
                let (x, w) = node(s * k as f64 * h);
                sum += w * f(x);
                evals += 1;
            }
            k += 2;
        }
        let cur = sum * h * r;
        err = (cur - prev).abs();
        prev = cur;
        if level >= 3 && err <= tol {
            break;
        }
    }
    QuadResult { value: prev, error: err, evals }
}

enum Evaluator {
    Double(Vec<f64>),
    Multi(Vec<Float>, u32),
}

impl Evaluator {
    fn new(f: &IntPoly) -> Self {
        let bits = f.max_coeff_bits();
        if bits <= 40 && f.degree() <= 64 {
            Evaluator::Double(f.coeffs().iter().map(|c| c.to_f64()).collect())
        } else {
            let prec = bits + 64 + 2 * (usize::BITS - f.degree().leading_zeros());
            Evaluator::Multi(f.coeffs().iter().map(|c| Float::with_val(prec, c)).collect(), prec)
        }
    }

    fn log_abs_on_circle(&self, theta: f64) -> f64 {
        let v = match self {
            Evaluator::Double(c) => {
                let z = Complex64::from_polar(1.0, theta);
                c.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &a| acc * z + a).norm()
            }
            Evaluator::Multi(c, prec) => {
                let mut z = Complex::with_val(*prec, (theta, 0));
                z.mul_i_mut(false);
                let z = z.exp();
                let mut acc = Complex::new(*prec);
                for a in c.iter().rev() {
                    acc *= &z;
                    *acc.mut_real() += a;
                }
                Float::with_val(*prec, acc.abs_ref()).to_f64()
            }
        };
        v.max(1e-300).ln()
    }
}

/// (1/deg f) times the mean of log|f| on the unit circle.
pub fn mahler_integral_height(f: &IntPoly, tol: f64) -> Result<HeightValue> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let d = f.degree();
    if d == 0 {
        return Err(Error::ConstantPolynomial);
    }
    let two_pi = 2.0 * PI;
    let mut cuts: Vec<f64> = Vec::new();
    let sf = squarefree_part(f);
    if sf.degree() > 0 {
        for b in isolate_roots(&sf, &RootOptions::default())?.roots {
            let z = b.to_c64();
            if (z.norm() - 1.0).abs() < 0.25 {
                cuts.push(z.arg().rem_euclid(two_pi));
            }
        }
    }
    let m = (2 * d).max(8);
    cuts.extend((0..=m).map(|k| two_pi * k as f64 / m as f64));
    cuts.sort_by(f64::total_cmp);
    cuts.dedup_by(|a, b| (*a - *b).abs() < 1e-13);
    let ev = Evaluator::new(f);
    let panel_tol = tol * d as f64 / cuts.len() as f64;
    let parts: Vec<QuadResult> = cuts
        .par_windows(2)
        .map(|w| tanh_sinh(|th| ev.log_abs_on_circle(th), w[0], w[1], panel_tol))
        .collect();
    let total: f64 = parts.iter().map(|q| q.value).sum();
    let err: f64 = parts.iter().map(|q| q.error).sum();
    let scale = two_pi * d as f64;
    let mut value = total / scale;
    let mut abs_error = err / scale + 8.0 * f64::EPSILON * (1.0 + value.abs());
    if value < 0.0 {
        abs_error += -value;
        value = 0.0;
    }
    Ok(HeightValue::new(value, abs_error, Method::Quadrature))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn log_singularity() {
        // integral of log x over [0, 1] is -1
        let q = tanh_sinh(|x| x.max(1e-300).ln(), 0.0, 1.0, 1e-12);
        assert!((q.value + 1.0).abs() < 1e-12);
    }

    #[test]
    fn jensen_examples() {
        let g = mahler_integral_height(&IntPoly::from_i64s(&[-1, -1, 1]), 1e-10).unwrap();
        assert!((g.value - 0.240_605_912_529_801_74).abs() < 1e-9);
        let x = mahler_integral_height(&IntPoly::from_i64s(&[0, 1]), 1e-10).unwrap();
        assert!(x.value.abs() < 1e-12);
        let h = mahler_integral_height(&IntPoly::from_i64s(&[-1, 2]), 1e-10).unwrap();
        assert!((h.value - 2f64.ln()).abs() < 1e-9);
    }

    #[test]
    fn roots_on_the_circle() {
        // Phi_7 and Phi_12
        let a = mahler_integral_height(&IntPoly::from_i64s(&[1, 1, 1, 1, 1, 1, 1]), 1e-10).unwrap();
        let b = mahler_integral_height(&IntPoly::from_i64s(&[1, 0, -1, 0, 1]), 1e-10).unwrap();
        assert!(a.value < 1e-9 && b.value < 1e-9);
    }
}
