//! Chow heights of small projective varieties.
//!
//! The height of X in P^N with primitive integer Chow form F is
//!   (dim X + 1)(deg X) sum_{j=1}^N 1/(2j) + mean of log|F| over (S_{N+1})^(dim X + 1),
//! the finite places contributing nothing because F has content 1. The mean is a
//! Monte-Carlo estimate, so every height here carries a standard error rather than a
//! rigorous radius.

mod cycle;
mod hypersurface;
mod remond;
mod sphere;

pub use cycle::{intersect_curve_line, CycleComponent, ZeroCycleChow};
pub use hypersurface::Hypersurface;
pub use remond::{random_lines, remond_check, remond_rhs, RemondInstance, RemondReport};
pub use sphere::{sphere_log_integral, SphereIntegralEstimate};

use num_complex::Complex64;
use serde::Serialize;

use crate::heights::{HeightValue, Method, ProjectivePoint};

pub const DEFAULT_SAMPLES: u64 = 1_000_000;

/// (dim + 1)(deg) sum_{j=1}^N 1/(2j)
pub fn correction_term(n: usize, dim: usize, deg: usize) -> f64 {
    let s: f64 = (1..=n).map(|j| 0.5 / j as f64).sum();
    ((dim + 1) * deg) as f64 * s
}

#[derive(Clone, Debug, Serialize)]
pub struct ChowHeight {
    pub value: f64,
    pub std_error: f64,
    pub correction: f64,
    pub integral: SphereIntegralEstimate,
}

impl ChowHeight {
    fn assemble(correction: f64, integral: SphereIntegralEstimate) -> Self {
        ChowHeight { value: correction + integral.value, std_error: integral.std_error, correction, integral }
    }

    /// Statistical estimate; the error field is the standard error.
    pub fn height_value(&self) -> HeightValue {
        HeightValue::new(self.value, self.std_error, Method::MonteCarlo)
    }

    /// Within k standard errors of `target`.
    pub fn agrees_with(&self, target: f64, k: f64) -> bool {
        (self.value - target).abs() <= k * self.std_error
    }
}

/// Monte-Carlo h_P(X) of a hypersurface as a [`HeightValue`] (error field = standard error).
pub fn chow_height_hypersurface(x: &Hypersurface, samples: u64, seed: u64) -> crate::Result<HeightValue> {
    Ok(x.chow_height(samples, seed)?.height_value())
}

/// [`intersect_curve_line`] restricted to conics.
pub fn intersect_conic_line(x: &Hypersurface, line: &Hypersurface) -> crate::Result<ZeroCycleChow> {
    if x.degree() != 2 {
        return Err(crate::Error::InvalidArgument(format!("expected a conic, got degree {}", x.degree())));
    }
    intersect_curve_line(x, line)
}

/// Chow form of a point: F(u) = sum u_i x_i.
pub fn chow_height_point(p: &ProjectivePoint, samples: u64, seed: u64) -> ChowHeight {
    let n = p.dim();
    let x: Vec<Complex64> = p.coords().iter().map(|c| Complex64::new(c.to_f64(), 0.0)).collect();
    let integral = sphere_log_integral(
        |u: &[Complex64]| u.iter().zip(&x).map(|(a, b)| a * b).sum::<Complex64>().norm().ln(),
        1,
        n,
        samples,
        seed,
    );
    ChowHeight::assemble(correction_term(n, 0, 1), integral)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::heights::{height_point, Norm};

    #[test]
    fn hypersurface_height_ignores_content() {
        let a = Hypersurface::parse("x0^2+x1^2-x2^2", None).unwrap();
        let b = Hypersurface::parse("7*x0^2+7*x1^2-7*x2^2", None).unwrap();
        let (ha, hb) = (chow_height_hypersurface(&a, 20_000, 4).unwrap(), chow_height_hypersurface(&b, 20_000, 4).unwrap());
        assert_eq!(ha.value, hb.value);
        assert_eq!(ha.method, Method::MonteCarlo);
    }

    #[test]
    fn conic_line_only_takes_conics() {
        let line = Hypersurface::parse("x1", Some(2)).unwrap();
        let cubic = Hypersurface::parse("x0^3+x1^3-x2^3", None).unwrap();
        assert!(intersect_conic_line(&cubic, &line).is_err());
        let conic = Hypersurface::parse("x0^2+x1^2-x2^2", None).unwrap();
        let z = intersect_conic_line(&conic, &line).unwrap();
        assert_eq!(z.degree(), 2);
        assert_eq!(z.components.len(), 2);
    }

    #[test]
    fn unit_point_cancels() {
        let h = chow_height_point(&ProjectivePoint::from_i64s(&[1, 0]).unwrap(), 200_000, 1);
        assert!(h.correction == 0.5);
        assert!(h.agrees_with(0.0, 3.0), "{h:?}");
    }

    #[test]
    fn points_match_l2_height() {
        for c in [&[1i64, 2][..], &[3, 4, 0], &[2, -1, 5, 7]] {
            let p = ProjectivePoint::from_i64s(c).unwrap();
            let h = chow_height_point(&p, 200_000, 11);
            let h2 = height_point(&p, Norm::L2).value;
            assert!(h.agrees_with(h2, 3.0), "{c:?}: {h:?} vs {h2}");
        }
    }
}
