use rug::{Complete, Integer, Rational};
use std::collections::BTreeMap;
use std::fmt;

use super::mpoly::MPoly;
use super::unipoly::IntPoly;

/// Polynomial in (x, t) over Q, keyed by (x-degree, t-degree).
#[derive(Clone, PartialEq, Debug)]
pub struct BiPoly {
    coeffs: BTreeMap<(u32, u32), Rational>,
}

impl BiPoly {
    pub fn new(terms: impl IntoIterator<Item = ((u32, u32), Rational)>) -> Self {
        let mut coeffs = BTreeMap::new();
        for (k, v) in terms {
            let e = coeffs.entry(k).or_insert_with(Rational::new);
            *e += v;
        }
        coeffs.retain(|_, v: &mut Rational| v.cmp0().is_ne());
        BiPoly { coeffs }
    }

    pub fn from_i64s(terms: &[((u32, u32), i64)]) -> Self {
        Self::new(terms.iter().map(|&(k, v)| (k, Rational::from(v))))
    }

    pub fn from_mpoly(m: &MPoly<Rational>) -> Self {
        assert_eq!(m.nvars(), 2);
        Self::new(m.terms().iter().map(|(e, c)| ((e[0], e[1]), c.clone())))
    }

    pub fn to_mpoly(&self) -> MPoly<Rational> {
        MPoly::from_terms(2, self.coeffs.iter().map(|(&(i, j), c)| (vec![i, j], c.clone())))
    }

    pub fn coeffs(&self) -> &BTreeMap<(u32, u32), Rational> {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn deg_x(&self) -> u32 {
        self.coeffs.keys().map(|k| k.0).max().unwrap_or(0)
    }

    pub fn deg_t(&self) -> u32 {
        self.coeffs.keys().map(|k| k.1).max().unwrap_or(0)
    }

    pub fn coefficient_vector(&self) -> Vec<Rational> {
        self.coeffs.values().cloned().collect()
    }

    /// Integer form: the primitive integer polynomial proportional to self.
    pub fn integer_terms(&self) -> BTreeMap<(u32, u32), Integer> {
        let mut den = Integer::from(1);
        for c in self.coeffs.values() {
            den.lcm_mut(c.denom());
        }
        let mut out: BTreeMap<(u32, u32), Integer> = self
            .coeffs
            .iter()
            .map(|(&k, c)| (k, (c.numer() * den.div_exact_ref(c.denom()).complete())))
            .collect();
        let mut g = Integer::new();
        for v in out.values() {
            g.gcd_mut(v);
        }
        if g > 1 {
            for v in out.values_mut() {
                v.div_exact_mut(&g);
            }
        }
        out
    }

    /// Coefficients in t as polynomials in x (integer form): P = sum_j c_j(x) t^j.
    pub fn t_coefficients(&self) -> Vec<IntPoly> {
        let it = self.integer_terms();
        let dt = self.deg_t() as usize;
        let dx = self.deg_x() as usize;
        let mut cols = vec![vec![Integer::new(); dx + 1]; dt + 1];
        for ((i, j), c) in it {
            cols[j as usize][i as usize] = c;
        }
        cols.into_iter().map(IntPoly::new).collect()
    }

    /// Coefficients in x as polynomials in t (integer form): P = sum_i a_i(t) x^i.
    pub fn x_coefficients(&self) -> Vec<IntPoly> {
        let it = self.integer_terms();
        let dt = self.deg_t() as usize;
        let dx = self.deg_x() as usize;
        let mut rows = vec![vec![Integer::new(); dt + 1]; dx + 1];
        for ((i, j), c) in it {
            rows[i as usize][j as usize] = c;
        }
        rows.into_iter().map(IntPoly::new).collect()
    }

    /// P(k, t) for the integer form, as a polynomial in t.
    pub fn at_x(&self, k: &Integer) -> IntPoly {
        IntPoly::new(self.t_coefficients().iter().map(|c| c.eval(k)).collect())
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::parse::print_mpoly(&self.to_mpoly(), &["x", "t"]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smyth_slices() {
        let p = BiPoly::from_i64s(&[((2, 0), 1), ((1, 1), -1), ((0, 0), -1)]);
        assert_eq!(p.deg_x(), 2);
        assert_eq!(p.deg_t(), 1);
        assert_eq!(p.at_x(&Integer::from(3)), IntPoly::from_i64s(&[8, -3]));
        assert_eq!(p.to_string(), "x^2 - x*t - 1");
    }
}
