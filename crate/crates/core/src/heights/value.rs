use rug::float::Round;
use rug::Float;
use serde::Serialize;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    /// Closed form from integer data (points, rational numbers).
    Exact,
    ExactRoots,
    Quadrature,
    MonteCarlo,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Exact => "exact",
            Method::ExactRoots => "exact-roots",
            Method::Quadrature => "quadrature",
            Method::MonteCarlo => "monte-carlo",
        })
    }
}

/// A height with an error radius. For `MonteCarlo` the radius is one standard error.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HeightValue {
    pub value: f64,
    pub abs_error: f64,
    pub method: Method,
    /// Minimal polynomial taken as irreducible without proof.
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub assumed_irreducible: bool,
}

impl HeightValue {
    pub fn new(value: f64, abs_error: f64, method: Method) -> Self {
        HeightValue { value, abs_error, method, assumed_irreducible: false }
    }

    pub fn zero(method: Method) -> Self {
        Self::new(0.0, 0.0, method)
    }

    /// Rounds an enclosure [lo, hi] of a non-negative quantity to a midpoint and radius
    /// in f64 such that the radius still covers the enclosure.
    pub fn from_enclosure(lo: &Float, hi: &Float, method: Method) -> Self {
        let prec = lo.prec().max(hi.prec()) + 8;
        let mut mid = Float::with_val(prec, lo + hi);
        mid >>= 1;
        let mut v = mid.to_f64();
        if v < 0.0 {
            v = 0.0;
        }
        let vf = Float::with_val(prec, v);
        let e1 = Float::with_val_round(53, &(Float::with_val(prec, hi - &vf)), Round::Up).0;
        let e2 = Float::with_val_round(53, &(Float::with_val(prec, &vf - lo)), Round::Up).0;
        let err = e1.max(&e2).to_f64_round(Round::Up).max(0.0);
        Self::new(v, err, method)
    }

    pub fn lower(&self) -> f64 {
        self.value - self.abs_error
    }

    pub fn upper(&self) -> f64 {
        self.value + self.abs_error
    }

    pub fn scaled(&self, k: f64) -> Self {
        HeightValue { value: self.value * k, abs_error: self.abs_error * k.abs(), ..self.clone() }
    }

    pub fn tag(&self) -> String {
        if self.assumed_irreducible {
            format!("{}/assumed-irreducible", self.method)
        } else {
            self.method.to_string()
        }
    }
}

impl fmt::Display for HeightValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} +/- {:.2e} ({})", self.value, self.abs_error, self.tag())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enclosure_is_covered() {
        let lo = Float::with_val(256, 1) / 3u32;
        let hi = Float::with_val(256, &lo + 1e-30);
        let h = HeightValue::from_enclosure(&lo, &hi, Method::ExactRoots);
        let v = Float::with_val(256, h.value);
        assert!(Float::with_val(256, &v - h.abs_error) <= lo);
        assert!(Float::with_val(256, &v + h.abs_error) >= hi);
        assert!(h.abs_error < 1e-16);
    }
}
