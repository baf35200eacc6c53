use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;
use serde::Serialize;

#[derive(Clone, Copy, Debug, Serialize)]
pub struct SphereIntegralEstimate {
    pub value: f64,
    /// Sample standard deviation over sqrt(samples).
    pub std_error: f64,
    pub samples: u64,
    pub seed: u64,
}

/// Samples are assigned to fixed chunks; chunk c draws from stream c of the seeded
/// generator, so the estimate does not depend on the thread count.
const CHUNK: u64 = 1 << 14;

#[derive(Clone, Copy)]
struct Moments {
    n: f64,
    mean: f64,
    m2: f64,
}

impl Moments {
    fn merge(a: Moments, b: Moments) -> Moments {
        if a.n == 0.0 {
            return b;
        }
        if b.n == 0.0 {
            return a;
        }
        let n = a.n + b.n;
        let d = b.mean - a.mean;
        Moments { n, mean: a.mean + d * b.n / n, m2: a.m2 + b.m2 + d * d * a.n * b.n / n }
    }
}

/// Mean of `log_abs(u)` for u uniform on the product of `blocks` unit spheres in
/// C^(n+1); `u` is passed as the concatenation of the blocks.
pub fn sphere_log_integral<F>(log_abs: F, blocks: usize, n: usize, samples: u64, seed: u64) -> SphereIntegralEstimate
where
    F: Fn(&[Complex64]) -> f64 + Sync,
{
    let samples = samples.max(2);
    let chunks = samples.div_ceil(CHUNK);
    let m = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(c);
            let count = CHUNK.min(samples - c * CHUNK);
            let mut u = vec![Complex64::new(0.0, 0.0); blocks * (n + 1)];
            let mut acc = Moments { n: 0.0, mean: 0.0, m2: 0.0 };
            for _ in 0..count {
                for b in u.chunks_mut(n + 1) {
                    let mut s = 0.0;
                    for z in b.iter_mut() {
                        *z = Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal));
                        s += z.norm_sqr();
                    }
                    let r = s.sqrt().recip();
                    b.iter_mut().for_each(|z| *z *= r);
                }
                let v = log_abs(&u);
                // F vanishes on a null set only; a hit is clamped to the smallest double
                let v = if v.is_finite() { v } else { f64::MIN_POSITIVE.ln() };
                acc.n += 1.0;
                let d = v - acc.mean;
                acc.mean += d / acc.n;
                acc.m2 += d * (v - acc.mean);
            }
            acc
        })
        .collect::<Vec<_>>()
        .into_iter()
        .fold(Moments { n: 0.0, mean: 0.0, m2: 0.0 }, Moments::merge);
    let var = m.m2 / (m.n - 1.0);
    SphereIntegralEstimate { value: m.mean, std_error: (var / m.n).sqrt(), samples, seed }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_coordinate() {
        // mean of log|u_0| on S^3 in C^2 is -1/2
        let e = sphere_log_integral(|u| u[0].norm().ln(), 1, 1, 400_000, 3);
        assert!((e.value + 0.5).abs() <= 3.0 * e.std_error, "{e:?}");
        // and -(1 + 1/2 + 1/3)/2 in C^4
        let e = sphere_log_integral(|u| u[0].norm().ln(), 1, 3, 400_000, 3);
        assert!((e.value + 11.0 / 12.0).abs() <= 3.0 * e.std_error, "{e:?}");
    }

    #[test]
    fn constant_is_exact() {
        let e = sphere_log_integral(|_| 7f64.ln(), 2, 2, 1000, 0);
        assert_eq!(e.value, 7f64.ln());
        assert_eq!(e.std_error, 0.0);
    }

    #[test]
    fn rotation_invariance() {
        let e = sphere_log_integral(|u| (u[0] + 2.0 * u[1]).norm().ln(), 1, 1, 400_000, 5);
        assert!((e.value - (5f64.sqrt().ln() - 0.5)).abs() <= 3.0 * e.std_error);
    }

    #[test]
    fn reproducible() {
        let f = |u: &[Complex64]| (u[0] * u[4] - u[1] * u[3]).norm().ln();
        let a = sphere_log_integral(f, 2, 2, 50_000, 9);
        let b = sphere_log_integral(f, 2, 2, 50_000, 9);
        assert_eq!(a.value, b.value);
        let c = sphere_log_integral(f, 2, 2, 50_000, 10);
        assert!((a.value - c.value).abs() <= 3.0 * (a.std_error.hypot(c.std_error)));
    }
}
