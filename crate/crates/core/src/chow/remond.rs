use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rug::{Integer, Rational};
use serde::Serialize;

use super::cycle::intersect_curve_line;
use super::hypersurface::Hypersurface;
use super::ChowHeight;
use crate::arith::mpoly::MPoly;
use crate::error::{Error, Result};
use crate::heights::{height_poly, Norm};

/// D^(dim X - d) h(X) + (dim X - d) D^(dim X - d - 1) deg(X) H
pub fn remond_rhs(h_x: f64, deg_x: u32, dim_x: u32, d: u32, big_d: u32, h: f64) -> f64 {
    let k = dim_x - d;
    let dd = big_d as f64;
    let lead = dd.powi(k as i32) * h_x;
    if k == 0 {
        return lead;
    }
    lead + k as f64 * dd.powi(k as i32 - 1) * deg_x as f64 * h
}

#[derive(Clone, Debug, Serialize)]
pub struct RemondInstance {
    pub line: Hypersurface,
    /// h_2 of the line's coefficient vector.
    pub line_height: f64,
    pub degree_y: u32,
    pub degree_ok: bool,
    pub height_y: ChowHeight,
    pub rhs: f64,
    /// Combined standard error of h(Y) and h(X).
    pub sigma: f64,
    /// h(Y) <= rhs + 3 sigma
    pub holds: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct RemondReport {
    pub curve: Hypersurface,
    pub height_x: ChowHeight,
    pub h_bound: f64,
    pub instances: Vec<RemondInstance>,
    pub all_hold: bool,
}

/// Intersections of a plane curve X with lines of h_2 at most `h_bound`: deg Y <= deg X
/// exactly, and h(Y) <= h(X) + deg(X) H up to three combined standard errors.
pub fn remond_check(x: &Hypersurface, lines: &[Hypersurface], h_bound: f64, samples: u64, seed: u64) -> Result<RemondReport> {
    if x.ambient_dim() != 2 {
        return Err(Error::InvalidArgument("X must be a plane curve".into()));
    }
    let height_x = x.chow_height(samples, seed)?;
    let deg_x = x.degree();
    let mut instances = Vec::new();
    for (i, l) in lines.iter().enumerate() {
        let coeffs: Vec<Rational> = l.form().terms().values().map(Rational::from).collect();
        let line_height = height_poly(&coeffs, Norm::L2)?.value;
        if line_height > h_bound {
            return Err(Error::Hypothesis(format!("line {l} has h_2 = {line_height} > H = {h_bound}")));
        }
        let y = intersect_curve_line(x, l)?;
        let degree_y = y.degree();
        let height_y = y.chow_height(samples, seed.wrapping_add(1 + i as u64));
        // hyperplanes: D = 1, dim X = 1, d = 0
        let rhs = remond_rhs(height_x.value, deg_x, 1, 0, 1, h_bound);
        let sigma = height_x.std_error.hypot(height_y.std_error);
        let holds = height_y.value <= rhs + 3.0 * sigma;
        instances.push(RemondInstance {
            line: l.clone(),
            line_height,
            degree_y,
            degree_ok: degree_y <= deg_x,
            height_y,
            rhs,
            sigma,
            holds,
        });
    }
    let all_hold = instances.iter().all(|r| r.holds && r.degree_ok);
    Ok(RemondReport { curve: x.clone(), height_x, h_bound, instances, all_hold })
}

/// `count` lines with coefficients in [-max_coeff, max_coeff], none contained in X.
pub fn random_lines(x: &Hypersurface, count: usize, max_coeff: i64, seed: u64) -> Vec<Hypersurface> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let c: Vec<i64> = (0..3).map(|_| rng.random_range(-max_coeff..=max_coeff)).collect();
        if c.iter().all(|&v| v == 0) {
            continue;
        }
        let form = MPoly::from_terms(
            3,
            (0..3).filter(|&i| c[i] != 0).map(|i| {
                let mut e = vec![0; 3];
                e[i] = 1;
                (e, Integer::from(c[i]))
            }),
        );
        let Ok(l) = Hypersurface::new(form) else { continue };
        if intersect_curve_line(x, &l).is_ok() && !out.contains(&l) {
            out.push(l);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_step_is_equality() {
        assert_eq!(remond_rhs(2.0, 2, 1, 1, 1, 5.0), 2.0);
        assert_eq!(remond_rhs(2.0, 2, 1, 0, 1, 5.0), 12.0);
        // plane section of a quartic surface: D = 1, one step
        assert_eq!(remond_rhs(0.0, 4, 2, 1, 1, 8.0), 32.0);
    }

    #[test]
    fn conic_with_lines() {
        let x = Hypersurface::parse("x0^2+x1^2-x2^2", None).unwrap();
        let lines = random_lines(&x, 4, 3, 7);
        let h = lines
            .iter()
            .map(|l| {
                let c: Vec<Rational> = l.form().terms().values().map(Rational::from).collect();
                height_poly(&c, Norm::L2).unwrap().value
            })
            .fold(0.0, f64::max);
        let r = remond_check(&x, &lines, h, 50_000, 7).unwrap();
        assert!(r.all_hold, "{r:?}");
        assert!(r.instances.iter().all(|i| i.degree_y == 2));
        assert!(remond_check(&x, &lines, h / 10.0, 1000, 7).is_err());
    }
}
