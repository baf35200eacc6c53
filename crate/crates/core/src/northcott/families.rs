use rug::Integer;
use serde::Serialize;

use super::{Certificate, NorthcottEstimate, Observation};
use crate::arith::factor::{is_irreducible, FactorOptions};
use crate::arith::primes::is_prime_u64;
use crate::arith::unipoly::IntPoly;
use crate::error::{Error, Result};
use crate::heights::{height_from_min_poly, HeightValue, Method, DEFAULT_TOLERANCE};

#[derive(Clone, Debug, Serialize)]
pub struct SelmerEntry {
    pub i: usize,
    /// Irreducibility proven here (otherwise taken from Selmer's theorem).
    pub certified: bool,
    pub height: HeightValue,
    /// log |f_i|_1 / deg f_i = log 3 / i
    pub length_bound: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct SelmerReport {
    pub entries: Vec<SelmerEntry>,
    pub estimate: NorthcottEstimate,
}

/// f_i = x^i - x - 1 for 2 <= i <= max_i.
pub fn selmer_family(max_i: usize, opts: &FactorOptions) -> Result<SelmerReport> {
    if max_i < 2 {
        return Err(Error::InvalidArgument("max_i must be at least 2".into()));
    }
    let mut entries = Vec::new();
    for i in 2..=max_i {
        let mut c = vec![Integer::from(-1), Integer::from(-1)];
        c.resize(i + 1, Integer::new());
        c[i] = Integer::from(1);
        let f = IntPoly::new(c);
        let certified = match is_irreducible(&f, opts) {
            Ok(true) => true,
            Ok(false) => return Err(Error::Hypothesis(format!("x^{i} - x - 1 factors"))),
            Err(Error::DegreeCapExceeded { .. }) | Err(Error::RecombinationBudget(_)) => false,
            Err(e) => return Err(e),
        };
        let mut height = height_from_min_poly(&f, DEFAULT_TOLERANCE)?;
        height.assumed_irreducible = !certified;
        entries.push(SelmerEntry { i, certified, height, length_bound: 3f64.ln() / i as f64 });
    }
    let empirical = entries
        .iter()
        .map(|e| Observation { label: format!("f_{}", e.i), height: e.height.clone(), element_bound: Some(e.length_bound) })
        .collect();
    let bound = entries.iter().map(|e| e.length_bound).fold(f64::INFINITY, f64::min);
    Ok(SelmerReport {
        entries,
        estimate: NorthcottEstimate { certified_upper_bound: Some(bound), certificate: Certificate::Length, empirical },
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct PrimeFamilyCertificate {
    pub poly: String,
    pub prime: u64,
    pub length: String,
    /// Irreducible: monic, constant term +-p and |f|_1 < 2p.
    pub irreducible: bool,
    /// log |f|_1 / deg f
    pub length_bound: f64,
}

/// Monic f with constant term +-p and |f|_1 < 2p is irreducible over Z.
pub fn prime_constant_family(polys: &[(IntPoly, u64)]) -> Vec<Result<PrimeFamilyCertificate>> {
    polys.iter().map(|(f, p)| prime_certificate(f, *p)).collect()
}

fn prime_certificate(f: &IntPoly, p: u64) -> Result<PrimeFamilyCertificate> {
    if f.degree() == 0 {
        return Err(Error::ConstantPolynomial);
    }
    if !f.is_monic() {
        return Err(Error::Hypothesis("polynomial must be monic".into()));
    }
    if !is_prime_u64(p) {
        return Err(Error::NotPrime(p.to_string()));
    }
    if f.coeff(0).clone().abs() != p {
        return Err(Error::ConstantTermMismatch);
    }
    let len = f.l1_norm();
    let two_p = Integer::from(p) * 2u32;
    if len >= two_p {
        return Err(Error::LengthConditionFailed { length: len.to_string(), bound: two_p.to_string() });
    }
    let length_bound = len.to_f64().ln() / f.degree() as f64;
    Ok(PrimeFamilyCertificate { poly: f.to_string(), prime: p, length: len.to_string(), irreducible: true, length_bound })
}

/// S = { p^(1/p^i) : 0 <= i <= max_i } with minimal polynomials x^(p^i) - p (Eisenstein).
pub fn radical_tower(p: u64, max_i: u32) -> Result<NorthcottEstimate> {
    if !is_prime_u64(p) {
        return Err(Error::NotPrime(p.to_string()));
    }
    let lp = (p as f64).ln();
    let mut empirical = Vec::new();
    for i in 0..=max_i {
        let n = (p as f64).powi(i as i32);
        let h = lp / n;
        empirical.push(Observation {
            label: format!("{p}^(1/{p}^{i})"),
            height: HeightValue::new(h, h * 4.0 * f64::EPSILON, Method::Exact),
            element_bound: Some(h * (1.0 + 4.0 * f64::EPSILON)),
        });
    }
    let bound = lp / (p as f64).powi(max_i as i32);
    Ok(NorthcottEstimate { certified_upper_bound: Some(bound), certificate: Certificate::Exact, empirical })
}

/// (1 / d) log |Delta_K| for a field of degree d with an infinite unramified tower.
pub fn unramified_tower_bound(d: u32, log_abs_disc: f64) -> Result<f64> {
    if d == 0 {
        return Err(Error::InvalidArgument("degree must be at least 1".into()));
    }
    if !(log_abs_disc >= 0.0) {
        return Err(Error::NegativeValue(log_abs_disc.to_string()));
    }
    Ok(log_abs_disc / d as f64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn selmer_small() {
        let r = selmer_family(6, &FactorOptions::default()).unwrap();
        let e2 = &r.entries[0];
        assert!((e2.height.value - 0.240605912529802).abs() < 1e-13);
        assert!(r.entries.iter().all(|e| e.certified && e.height.value > 0.0 && e.height.upper() <= e.length_bound));
        assert!((r.estimate.certified_upper_bound.unwrap() - 3f64.ln() / 6.0).abs() < 1e-15);
        assert!(r.estimate.dominates_profile());
        assert!(selmer_family(1, &FactorOptions::default()).is_err());
    }

    #[test]
    fn prime_family_examples() {
        let out = prime_constant_family(&[
            (IntPoly::from_i64s(&[5, 1, 0, 1]), 5),
            (IntPoly::from_i64s(&[7, 7, 1]), 7),
            (IntPoly::from_i64s(&[-2, 0, 1]), 2),
            (IntPoly::from_i64s(&[9, 0, 1]), 9),
            (IntPoly::from_i64s(&[-3, 0, 1]), 5),
        ]);
        assert!(out[0].as_ref().unwrap().irreducible);
        assert!(matches!(out[1], Err(Error::LengthConditionFailed { .. })));
        assert!(out[2].as_ref().unwrap().irreducible);
        assert!(matches!(out[3], Err(Error::NotPrime(_))));
        assert!(matches!(out[4], Err(Error::ConstantTermMismatch)));
    }

    #[test]
    fn radical_heights_match_root_formula() {
        let t = radical_tower(2, 5).unwrap();
        assert!((t.empirical[5].height.value - 0.021_660_849_392_498_29).abs() < 1e-15);
        assert!((t.empirical[0].height.value - 2f64.ln()).abs() < 1e-15);
        assert!(t.dominates_profile());
        let h = height_from_min_poly(&IntPoly::from_i64s(&[-2, 0, 0, 0, 0, 0, 0, 0, 1]), 1e-13).unwrap();
        assert!((h.value - t.empirical[3].height.value).abs() < 1e-13);
        assert!(radical_tower(4, 2).is_err());
    }

    #[test]
    fn martinet_field() {
        // Q(cos 2pi/11, sqrt 2, sqrt -23): coprime discriminants 11^4, 8, -23 multiply out
        let ld = 16.0 * 11f64.ln() + 10.0 * 8f64.ln() + 10.0 * 23f64.ln();
        let b = unramified_tower_bound(20, ld).unwrap();
        assert!(b <= 4.53 && b > 4.52);
        assert_eq!(unramified_tower_bound(1, 0.0).unwrap(), 0.0);
        assert!((unramified_tower_bound(2, 8f64.ln()).unwrap() - 1.0397207708399179).abs() < 1e-15);
    }
}
