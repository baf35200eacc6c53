//! Certified complex root isolation.
//!
//! Aberth-Ehrlich iteration at the working precision, followed by inclusion disks
//! D(z_i, n |p(z_i)| / |lc prod_{j != i} (z_i - z_j)|). The union of these disks
//! contains every root and a connected component made of k disks holds exactly k
//! roots, so pairwise disjoint disks isolate one root each. Evaluation rounding is
//! bounded a priori and folded into |p(z_i)|.

use num_complex::Complex64;
use rug::float::Round;
use rug::ops::{AddAssignRound, DivAssignRound, MulAssignRound, SubAssignRound};
use rug::ops::AssignRound;
use rug::{Complex, Float, Integer};

use super::ball::{abs_lower, abs_upper, ComplexBall, RAD_PREC};
use super::squarefree::is_squarefree;
use super::unipoly::{IntPoly, UniPoly};
use crate::error::{Error, Result};

pub const DEFAULT_MAX_PRECISION: u32 = 16384;

#[derive(Clone, Debug)]
pub struct RootOptions {
    /// Minimum working precision in bits.
    pub precision: u32,
    pub max_precision: u32,
    /// Required upper bound on every radius, if any.
    pub tolerance: Option<f64>,
}

impl Default for RootOptions {
    fn default() -> Self {
        RootOptions { precision: 128, max_precision: DEFAULT_MAX_PRECISION, tolerance: None }
    }
}

#[derive(Clone, Debug)]
pub struct RootIsolation {
    pub roots: Vec<ComplexBall>,
    /// Roots proven real; their centers have zero imaginary part.
    pub real: Vec<bool>,
    pub precision: u32,
}

impl RootIsolation {
    pub fn real_count(&self) -> usize {
        self.real.iter().filter(|&&r| r).count()
    }
}

/// Isolating balls for all roots of a squarefree polynomial.
pub fn complex_roots(f: &UniPoly, precision: u32) -> Result<Vec<ComplexBall>> {
    let opts = RootOptions { precision, ..Default::default() };
    Ok(isolate_roots(&f.primitive_part(), &opts)?.roots)
}

pub fn isolate_roots(f: &IntPoly, opts: &RootOptions) -> Result<RootIsolation> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let n = f.degree();
    if n == 0 {
        return Err(Error::ConstantPolynomial);
    }
    if !is_squarefree(f) {
        return Err(Error::Hypothesis("root isolation needs a squarefree polynomial".into()));
    }
    let bits = f.max_coeff_bits();
    let mut prec = opts.precision.max(128).max(64 + 2 * bits);
    prec = prec.div_ceil(64) * 64;
    if n == 1 {
        return linear_root(f, prec);
    }
    let mut start = initial_guesses(f);
    aberth_f64(f, &mut start);
    let mut z: Vec<Complex> = start.into_iter().map(|c| Complex::with_val(prec, (c.re, c.im))).collect();
    loop {
        if prec > opts.max_precision {
            return Err(Error::PrecisionExhausted(opts.max_precision));
        }
        for w in z.iter_mut() {
            w.set_prec(prec);
        }
        let coeffs: Vec<Float> = f.coeffs().iter().map(|c| Float::with_val(prec, c)).collect();
        aberth(&coeffs, &mut z, prec);
        let cert = certify(f, &coeffs, &z);
        if let Some(balls) = cert {
            let ok = match opts.tolerance {
                None => true,
                Some(t) => balls.iter().all(|b| b.radius_f64() <= t),
            };
            if ok {
                let real = mark_real(&balls);
                let roots: Vec<ComplexBall> = balls
                    .into_iter()
                    .zip(&real)
                    .map(|(mut b, &r)| {
                        if r {
                            b.center.mut_imag().assign_round(0, Round::Nearest);
                        }
                        b
                    })
                    .collect();
                let (roots, real) = sort_pair(roots, real);
                return Ok(RootIsolation { roots, real, precision: prec });
            }
        }
        prec *= 2;
    }
}

/// Real roots first by increasing value, then the rest by (re, im).
fn sort_pair(roots: Vec<ComplexBall>, real: Vec<bool>) -> (Vec<ComplexBall>, Vec<bool>) {
    let mut v: Vec<(ComplexBall, bool)> = roots.into_iter().zip(real).collect();
    v.sort_by(|a, b| {
        b.1.cmp(&a.1)
            .then_with(|| a.0.center.real().partial_cmp(b.0.center.real()).unwrap())
            .then_with(|| a.0.center.imag().partial_cmp(b.0.center.imag()).unwrap())
    });
    v.into_iter().unzip()
}

fn linear_root(f: &IntPoly, prec: u32) -> Result<RootIsolation> {
    let q = rug::Rational::from((-f.coeff(0), f.coeff(1)));
    let (x, o) = Float::with_val_round(prec, &q, Round::Nearest);
    let mut rad = Float::new(RAD_PREC);
    if o != std::cmp::Ordering::Equal {
        rad = Float::with_val(RAD_PREC, x.abs_ref());
        rad >>= prec - 1;
        if rad.is_zero() {
            rad = Float::with_val(RAD_PREC, 1);
            rad >>= prec;
        }
    }
    let b = ComplexBall { center: Complex::with_val(prec, (x, 0)), radius: rad };
    Ok(RootIsolation { roots: vec![b], real: vec![true], precision: prec })
}

/// Starting points on circles given by the Newton polygon of log|a_i|.
fn initial_guesses(f: &IntPoly) -> Vec<Complex64> {
    let n = f.degree();
    let logs: Vec<Option<f64>> = f
        .coeffs()
        .iter()
        .map(|c| if c.cmp0().is_eq() { None } else { Some(Float::with_val(64, Integer::from(c.abs_ref())).ln().to_f64()) })
        .collect();
    let pts: Vec<(usize, f64)> = logs.iter().enumerate().filter_map(|(i, l)| l.map(|v| (i, v))).collect();
    // upper convex hull
    let mut hull: Vec<(usize, f64)> = Vec::new();
    for &p in &pts {
        while hull.len() >= 2 {
            let (a, b) = (hull[hull.len() - 2], hull[hull.len() - 1]);
            let cross = (b.0 as f64 - a.0 as f64) * (p.1 - a.1) - (b.1 - a.1) * (p.0 as f64 - a.0 as f64);
            if cross >= 0.0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(p);
    }
    let mut out = Vec::with_capacity(n);
    let sigma = 0.7;
    for w in hull.windows(2) {
        let (i, li) = w[0];
        let (j, lj) = w[1];
        let k = j - i;
        let r = ((li - lj) / k as f64).exp();
        for m in 0..k {
            let th = 2.0 * std::f64::consts::PI * (m as f64 / k as f64) + 2.0 * std::f64::consts::PI * i as f64 / n as f64 + sigma;
            out.push(Complex64::from_polar(r, th));
        }
    }
    // roots at zero are handled by the hull starting above index 0
    while out.len() < n {
        out.push(Complex64::from_polar(1e-3, out.len() as f64));
    }
    out
}

/// Cheap double-precision warm start; leaves `z` unchanged if anything overflows.
fn aberth_f64(f: &IntPoly, z: &mut [Complex64]) {
    let c: Vec<f64> = f.coeffs().iter().map(Integer::to_f64).collect();
    if c.iter().any(|v| !v.is_finite()) {
        return;
    }
    let n = z.len();
    let mut w = z.to_vec();
    for _ in 0..(100 + n) {
        let mut moved = false;
        for i in 0..n {
            let (mut p, mut dp) = (Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0));
            for a in c.iter().rev() {
                dp = dp * w[i] + p;
                p = p * w[i] + a;
            }
            if p.norm() == 0.0 {
                continue;
            }
            let newton = p / dp;
            let s: Complex64 = (0..n).filter(|&j| j != i).map(|j| (w[i] - w[j]).inv()).sum();
            let step = newton / (1.0 - newton * s);
            if !(step.re.is_finite() && step.im.is_finite()) {
                return;
            }
            w[i] -= step;
            if step.norm() > 1e-13 * w[i].norm() {
                moved = true;
            }
        }
        if !moved {
            break;
        }
    }
    if w.iter().all(|v| v.re.is_finite() && v.im.is_finite()) {
        z.copy_from_slice(&w);
    }
}

fn horner(coeffs: &[Float], z: &Complex, prec: u32) -> (Complex, Complex) {
    let mut p = Complex::with_val(prec, (coeffs.last().unwrap(), 0));
    let mut dp = Complex::new(prec);
    for c in coeffs.iter().rev().skip(1) {
        dp *= z;
        dp += &p;
        p *= z;
        *p.mut_real() += c;
    }
    (p, dp)
}

/// Rounding-noise level of Horner evaluation at z: (4n + 8) 2^-prec sum |a_k| |z|^k.
fn noise_floor(abs_coeffs: &[Float], z: &Complex, prec: u32) -> Float {
    let zabs = abs_upper(z);
    let mut s = Float::new(RAD_PREC);
    for a in abs_coeffs.iter().rev() {
        s.mul_assign_round(&zabs, Round::Up);
        s.add_assign_round(a, Round::Up);
    }
    s *= 4 * abs_coeffs.len() as u32 + 8;
    s >>= prec;
    s
}

fn aberth(coeffs: &[Float], z: &mut [Complex], prec: u32) {
    let n = z.len();
    let abs_coeffs: Vec<Float> = coeffs.iter().map(|c| Float::with_val(RAD_PREC, c.abs_ref())).collect();
    let mut approx: Vec<Complex64> = z.iter().map(to_c64).collect();
    let mut done = vec![false; n];
    let tol_exp = prec as i32 - 12;
    for _ in 0..(200 + 4 * n) {
        let mut all = true;
        for i in 0..n {
            if done[i] {
                continue;
            }
            let (p, dp) = horner(coeffs, &z[i], prec);
            if p.real().is_zero() && p.imag().is_zero() {
                done[i] = true;
                continue;
            }
            let at_floor = abs_upper(&p) <= noise_floor(&abs_coeffs, &z[i], prec);
            let newton = Complex::with_val(prec, &p / &dp);
            let mut s = Complex64::new(0.0, 0.0);
            let zi = approx[i];
            let mut exact_s: Option<Complex> = None;
            for j in 0..n {
                if j == i {
                    continue;
                }
                let d = zi - approx[j];
                if d.norm() < 1e-12 * (zi.norm() + 1e-300) {
                    // clustered approximations: finish the sum in full precision
                    let mut acc = Complex::new(prec);
                    for k in 0..n {
                        if k != i {
                            let dk = Complex::with_val(prec, &z[i] - &z[k]);
                            acc += Complex::with_val(prec, dk.recip_ref());
                        }
                    }
                    exact_s = Some(acc);
                    break;
                }
                s += d.inv();
            }
            let s = exact_s.unwrap_or_else(|| Complex::with_val(prec, (s.re, s.im)));
            let mut denom = Complex::with_val(prec, &newton * &s);
            denom = Complex::with_val(prec, 1 - denom);
            let w = Complex::with_val(prec, &newton / &denom);
            if !(w.real().is_finite() && w.imag().is_finite()) {
                // stationary point of p or coincident approximations: nudge and retry
                let nudge = Complex::with_val(prec, (1e-7 * (i as f64 + 1.0), 1e-7));
                z[i] += &nudge;
                approx[i] = to_c64(&z[i]);
                all = false;
                continue;
            }
            z[i] -= &w;
            approx[i] = to_c64(&z[i]);
            let wmag = abs_upper(&w);
            let zmag = abs_upper(&z[i]);
            let small = if zmag.is_zero() || wmag.is_zero() {
                true
            } else {
                wmag.get_exp().unwrap() < zmag.get_exp().unwrap() - tol_exp
            };
            let tiny_root = zmag.get_exp().is_none_or(|e| e < -(prec as i32));
            if small || tiny_root || at_floor {
                done[i] = true;
            } else {
                all = false;
            }
        }
        if all {
            break;
        }
    }
}

fn to_c64(z: &Complex) -> Complex64 {
    Complex64::new(z.real().to_f64(), z.imag().to_f64())
}

/// Inclusion radii; `None` if two disks cannot be separated.
fn certify(f: &IntPoly, coeffs: &[Float], z: &[Complex]) -> Option<Vec<ComplexBall>> {
    let n = z.len();
    let prec = z[0].prec().0;
    if z.iter().any(|w| !w.real().is_finite() || !w.imag().is_finite()) {
        return None;
    }
    let abs_coeffs: Vec<Float> = f.coeffs().iter().map(|c| Float::with_val_round(RAD_PREC, &Integer::from(c.abs_ref()), Round::Up).0).collect();
    let lc = Float::with_val_round(RAD_PREC, &Integer::from(f.lc().abs_ref()), Round::Down).0;
    // gamma = (6n + 8) 2^-prec
    let mut gamma = Float::with_val(RAD_PREC, 6 * n + 8);
    gamma >>= prec;
    let mut radii = Vec::with_capacity(n);
    for i in 0..n {
        let (p, _) = horner(coeffs, &z[i], prec);
        let zabs = abs_upper(&z[i]);
        let mut s = Float::new(RAD_PREC);
        for a in abs_coeffs.iter().rev() {
            s.mul_assign_round(&zabs, Round::Up);
            s.add_assign_round(a, Round::Up);
        }
        s.mul_assign_round(&gamma, Round::Up);
        let mut num = abs_upper(&p);
        num.add_assign_round(&s, Round::Up);
        let mut den = lc.clone();
        for j in 0..n {
            if j == i {
                continue;
            }
            let d = Complex::with_val(prec, &z[i] - &z[j]);
            let mut slack = abs_upper(&z[i]);
            slack.add_assign_round(&abs_upper(&z[j]), Round::Up);
            slack >>= prec - 1;
            let mut dl = abs_lower(&d);
            dl.sub_assign_round(&slack, Round::Down);
            if dl.is_sign_negative() || dl.is_zero() {
                return None;
            }
            den.mul_assign_round(&dl, Round::Down);
        }
        num.div_assign_round(&den, Round::Up);
        num.mul_assign_round(n as u32, Round::Up);
        radii.push(num);
    }
    let balls: Vec<ComplexBall> =
        z.iter().zip(radii).map(|(c, r)| ComplexBall { center: c.clone(), radius: r }).collect();
    for i in 0..n {
        for j in i + 1..n {
            if !balls[i].disjoint(&balls[j]) {
                return None;
            }
        }
    }
    Some(balls)
}

/// A ball meeting the real axis whose mirror image meets no other ball holds a real root.
fn mark_real(balls: &[ComplexBall]) -> Vec<bool> {
    (0..balls.len())
        .map(|i| {
            let b = &balls[i];
            if b.is_certainly_nonreal() {
                return false;
            }
            let c = b.conj();
            balls.iter().enumerate().all(|(j, o)| j == i || c.disjoint(o))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iso(c: &[i64]) -> RootIsolation {
        isolate_roots(&IntPoly::from_i64s(c), &RootOptions::default()).unwrap()
    }

    #[test]
    fn golden_ratio_roots() {
        let r = iso(&[-1, -1, 1]);
        assert_eq!(r.real_count(), 2);
        assert!((r.roots[0].re_f64() + 0.6180339887498949).abs() < 1e-15);
        assert!((r.roots[1].re_f64() - 1.618033988749895).abs() < 1e-15);
    }

    #[test]
    fn gaussian_units() {
        let r = iso(&[1, 0, 1]);
        assert_eq!(r.real_count(), 0);
        let mut ims: Vec<f64> = r.roots.iter().map(|b| b.im_f64()).collect();
        ims.sort_by(f64::total_cmp);
        assert!((ims[0] + 1.0).abs() < 1e-30 && (ims[1] - 1.0).abs() < 1e-30);
    }

    #[test]
    fn plastic_cubic() {
        let r = iso(&[-1, -1, 0, 1]);
        assert_eq!(r.real_count(), 1);
        assert!((r.roots[0].re_f64() - 1.324717957244746).abs() < 1e-15);
        assert!(r.roots[1].is_certainly_nonreal());
    }

    #[test]
    fn balls_contain_roots_and_are_disjoint() {
        let f = IntPoly::from_i64s(&[3, -7, 0, 11, -2, 0, 5, 1]);
        let r = isolate_roots(&f, &RootOptions::default()).unwrap();
        assert_eq!(r.roots.len(), 7);
        for (i, b) in r.roots.iter().enumerate() {
            assert!(ComplexBall::eval_int_poly(&f, b).contains_zero());
            for o in &r.roots[i + 1..] {
                assert!(b.disjoint(o));
            }
        }
    }

    #[test]
    fn radii_shrink_with_precision() {
        let f = IntPoly::from_i64s(&[-2, 0, 0, 1]);
        let a = isolate_roots(&f, &RootOptions { precision: 128, ..Default::default() }).unwrap();
        let b = isolate_roots(&f, &RootOptions { precision: 512, ..Default::default() }).unwrap();
        for (x, y) in a.roots.iter().zip(&b.roots) {
            assert!(y.radius <= x.radius);
        }
    }

    #[test]
    fn rational_root_is_exact() {
        let r = iso(&[-3, 2]);
        assert!(r.roots[0].radius.is_zero());
        assert_eq!(r.roots[0].re_f64(), 1.5);
    }

    #[test]
    fn zero_root_and_clusters() {
        // x (x - 1/1000)(x + 1/1000) scaled
        let f = IntPoly::from_i64s(&[0, -1, 0, 1_000_000]);
        let r = isolate_roots(&f, &RootOptions::default()).unwrap();
        assert_eq!(r.real_count(), 3);
    }

    #[test]
    fn not_squarefree_rejected() {
        assert!(isolate_roots(&IntPoly::from_i64s(&[1, -2, 1]), &RootOptions::default()).is_err());
    }
}
