use serde::Serialize;

use super::sequence::SequenceProfile;
use super::{Certificate, NorthcottEstimate, Observation};
use crate::arith::bipoly::BiPoly;
use crate::error::{Error, Result};
use crate::heights::{height_poly, Norm};

/// gamma_P = 5 (log(2^min(dx, dt) (dx + 1)(dt + 1)) + h_inf(P))^(1/2).
pub fn habegger_gamma(p: &BiPoly) -> Result<f64> {
    let (dx, dt) = (p.deg_x(), p.deg_t());
    if dx == 0 || dt == 0 {
        return Err(Error::Hypothesis(format!("both partial degrees must be positive, got {dx} and {dt}")));
    }
    let h = height_poly(&p.coefficient_vector(), Norm::Inf)?.value;
    let shape = dx.min(dt) as f64 * 2f64.ln() + ((dx + 1) as f64).ln() + ((dt + 1) as f64).ln();
    Ok(5.0 * (shape + h).sqrt())
}

#[derive(Clone, Debug, Serialize)]
pub struct HabeggerBound {
    pub gamma: f64,
    /// Q = gamma sqrt(deg_t P)
    pub big_q: f64,
    /// q = deg_t P / deg_x P
    pub small_q: f64,
    /// deg_t P (gamma deg_x P / (deg_x P - deg_t P))^2 = (Q / (1 - q))^2
    pub bound: f64,
}

pub fn habegger_bound(p: &BiPoly) -> Result<HabeggerBound> {
    let (dx, dt) = (p.deg_x() as f64, p.deg_t() as f64);
    if !(dx > dt && dt > 0.0) {
        return Err(Error::Hypothesis(format!("need deg_x P > deg_t P > 0, got {dx} and {dt}")));
    }
    let gamma = habegger_gamma(p)?;
    let bound = dt * (gamma * dx / (dx - dt)).powi(2);
    Ok(HabeggerBound { gamma, big_q: gamma * dt.sqrt(), small_q: dt / dx, bound })
}

impl HabeggerBound {
    pub fn estimate(&self, profile: Option<&SequenceProfile>) -> NorthcottEstimate {
        let empirical = profile
            .map(|p| {
                p.entries
                    .iter()
                    .map(|e| Observation { label: format!("x_{}", e.index), height: e.height.clone(), element_bound: None })
                    .collect()
            })
            .unwrap_or_default();
        NorthcottEstimate { certified_upper_bound: Some(self.bound), certificate: Certificate::Habegger, empirical }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RecurrencePair {
    pub i: usize,
    /// h(x_{i+1})
    pub lhs: f64,
    /// q h(x_i) + Q max(h(x_i), h(x_{i+1}))^(1/2)
    pub rhs: f64,
    pub holds: bool,
    /// |h(x_{i+1})/dt - h(x_i)/dx| <= gamma max(h(x_{i+1})/dt, h(x_i)/dx)^(1/2)
    pub quasi_equivalence_holds: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct RecurrenceReport {
    pub pairs: Vec<RecurrencePair>,
    pub all_hold: bool,
}

pub fn recurrence_check(profile: &SequenceProfile, p: &BiPoly) -> Result<RecurrenceReport> {
    let b = habegger_bound(p)?;
    let (dx, dt) = (p.deg_x() as f64, p.deg_t() as f64);
    let pairs: Vec<RecurrencePair> = profile
        .entries
        .windows(2)
        .map(|w| {
            let (a, c) = (&w[0].height, &w[1].height);
            let slack = a.abs_error + c.abs_error + 1e-12;
            let rhs = b.small_q * a.value + b.big_q * a.value.max(c.value).sqrt();
            let (u, v) = (c.value / dt, a.value / dx);
            let quasi = (u - v).abs() <= b.gamma * u.max(v).sqrt() + slack;
            RecurrencePair { i: w[0].index, lhs: c.value, rhs, holds: c.value <= rhs + slack, quasi_equivalence_holds: quasi }
        })
        .collect();
    let all_hold = pairs.iter().all(|q| q.holds);
    Ok(RecurrenceReport { pairs, all_hold })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::parse::parse_bivariate;

    fn bp(s: &str) -> BiPoly {
        parse_bivariate(s, ["x", "t"]).unwrap()
    }

    #[test]
    fn smyth_gamma_and_bound() {
        let b = habegger_bound(&bp("x^2 - t*x - 1")).unwrap();
        assert!((b.gamma - 7.881_793_339_380_322).abs() < 1e-12);
        assert!((b.bound - 248.490_664_978_800_03).abs() < 1e-9);
        assert!((b.big_q / (1.0 - b.small_q)).powi(2) - b.bound < 1e-9);
    }

    #[test]
    fn shape_only_and_height_term() {
        assert!((habegger_gamma(&bp("x^2 - t")).unwrap() - 7.881_793_339_380_322).abs() < 1e-12);
        // h_inf(3, -1, -1) = log 3
        let g = habegger_gamma(&bp("3*x^2 - t*x - 1")).unwrap();
        assert!((g - 9.465_092_364_124_228).abs() < 1e-12);
        assert!(habegger_bound(&bp("x - t^2")).is_err());
        assert!(habegger_gamma(&bp("x^2 - 1")).is_err());
    }
}
