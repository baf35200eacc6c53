//! Sparse multivariate polynomials with exponent-vector keys.

use rug::{Complete, Integer, Rational};
use std::collections::BTreeMap;

use super::ring::{GaussRat, Ring};

pub type Monomial = Vec<u32>;

#[derive(Clone, PartialEq, Debug)]
pub struct MPoly<C: Ring> {
    nvars: usize,
    terms: BTreeMap<Monomial, C>,
}

impl<C: Ring> MPoly<C> {
    pub fn zero(nvars: usize) -> Self {
        MPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: C) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut p = Self::zero(nvars);
        p.terms.insert(e, C::one());
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, C)>) -> Self {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars);
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, e: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(v) => {
                let s = v.add(&c);
                if s.is_zero() {
                    self.terms.remove(&e);
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, C> {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, e: &[u32]) -> C {
        self.terms.get(e).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms.keys().map(|e| e[i]).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.keys().map(|e| e.iter().sum::<u32>());
        match it.next() {
            None => true,
            Some(d) => it.all(|x| x == d),
        }
    }

    pub fn neg(&self) -> Self {
        MPoly { nvars: self.nvars, terms: self.terms.iter().map(|(e, c)| (e.clone(), c.neg())).collect() }
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!(self.nvars, o.nvars);
        let mut r = self.clone();
        for (e, c) in &o.terms {
            r.add_term(e.clone(), c.clone());
        }
        r
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.nvars, o.nvars);
        let mut r = Self::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &o.terms {
                let e: Monomial = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                r.add_term(e, ca.mul(cb));
            }
        }
        r
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut r = Self::constant(self.nvars, C::one());
        let mut b = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                r = r.mul(&b);
            }
            n >>= 1;
            if n > 0 {
                b = b.mul(&b);
            }
        }
        r
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut r = Self::zero(self.nvars);
        for (e, v) in &self.terms {
            r.add_term(e.clone(), v.mul(c));
        }
        r
    }

    pub fn partial(&self, i: usize) -> Self {
        let mut r = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut f = e.clone();
            f[i] -= 1;
            r.add_term(f, c.mul(&C::from_i64(e[i] as i64)));
        }
        r
    }

    /// Substitutes variable j by `subs[j]`; all substitutes share one ring of `nv` variables.
    pub fn compose(&self, subs: &[MPoly<C>]) -> MPoly<C> {
        assert_eq!(subs.len(), self.nvars);
        let nv = subs.first().map_or(0, |s| s.nvars);
        let mut powers: Vec<Vec<MPoly<C>>> = subs.iter().map(|s| vec![MPoly::constant(nv, C::one()), s.clone()]).collect();
        let mut r = MPoly::zero(nv);
        for (e, c) in &self.terms {
            let mut t = MPoly::constant(nv, c.clone());
            for (j, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                while powers[j].len() <= k as usize {
                    let next = powers[j].last().unwrap().mul(&subs[j]);
                    powers[j].push(next);
                }
                t = t.mul(&powers[j][k as usize]);
            }
            r = r.add(&t);
        }
        r
    }

    pub fn map<D: Ring>(&self, f: impl Fn(&C) -> D) -> MPoly<D> {
        let mut r = MPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            r.add_term(e.clone(), f(c));
        }
        r
    }

    /// Generic evaluation with a caller-supplied coefficient embedding.
    pub fn eval_with<T>(&self, point: &[T], conv: impl Fn(&C) -> T) -> T
    where
        T: Clone + std::ops::Mul<Output = T> + std::ops::Add<Output = T>,
    {
        let mut acc: Option<T> = None;
        for (e, c) in &self.terms {
            let mut t = conv(c);
            for (j, &k) in e.iter().enumerate() {
                for _ in 0..k {
                    t = t * point[j].clone();
                }
            }
            acc = Some(match acc {
                None => t,
                Some(a) => a + t,
            });
        }
        acc.expect("evaluation of the zero polynomial needs an explicit zero")
    }

    /// Drops variable `i`, which must not occur.
    pub fn remove_var(&self, i: usize) -> Self {
        let mut r = Self::zero(self.nvars - 1);
        for (e, c) in &self.terms {
            assert_eq!(e[i], 0);
            let mut f = e.clone();
            f.remove(i);
            r.add_term(f, c.clone());
        }
        r
    }

    /// Monomials of total degree d in n variables, in the map's key order.
    pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut cur = vec![0u32; n];
        fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
            let n = cur.len();
            if i == n - 1 {
                cur[i] = left;
                out.push(cur.clone());
                return;
            }
            for k in 0..=left {
                cur[i] = k;
                rec(i + 1, left - k, cur, out);
            }
            cur[i] = 0;
        }
        if n > 0 {
            rec(0, d, &mut cur, &mut out);
        }
        out.sort();
        out
    }
}

impl MPoly<Integer> {
    pub fn content(&self) -> Integer {
        let mut g = Integer::new();
        for c in self.terms.values() {
            g.gcd_mut(c);
        }
        g
    }

    /// Divides by the content and fixes the sign of the largest monomial to be positive.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut g = self.content();
        if self.terms.iter().next_back().unwrap().1.cmp0().is_lt() {
            g = -g;
        }
        self.map(|c| c.div_exact_ref(&g).complete())
    }

    pub fn to_rational(&self) -> MPoly<Rational> {
        self.map(|c| Rational::from(c))
    }

    pub fn eval_c64(&self, point: &[num_complex::Complex64]) -> num_complex::Complex64 {
        let mut acc = num_complex::Complex64::new(0.0, 0.0);
        for (e, c) in &self.terms {
            let mut t = num_complex::Complex64::new(c.to_f64(), 0.0);
            for (j, &k) in e.iter().enumerate() {
                if k > 0 {
                    t *= point[j].powu(k);
                }
            }
            acc += t;
        }
        acc
    }
}

impl MPoly<Rational> {
    /// Returns (c, P) with self = c * P, P primitive over Z.
    pub fn to_primitive_integer(&self) -> (Rational, MPoly<Integer>) {
        let mut den = Integer::from(1);
        for c in self.terms.values() {
            den.lcm_mut(c.denom());
        }
        let p = self.map(|c| c.numer() * den.div_exact_ref(c.denom()).complete());
        if p.is_zero() {
            return (Rational::new(), p);
        }
        let q = p.primitive();
        let g = Rational::from(p.terms.values().next_back().unwrap() / q.terms.values().next_back().unwrap());
        (g / den, q)
    }
}

impl MPoly<GaussRat> {
    /// Clears denominators so that all real and imaginary parts are coprime integers.
    pub fn normalize_gaussian(&self) -> Self {
        let mut den = Integer::from(1);
        let mut g = Integer::new();
        for c in self.terms.values() {
            den.lcm_mut(c.re.denom());
            den.lcm_mut(c.im.denom());
        }
        for c in self.terms.values() {
            g.gcd_mut(&Integer::from(c.re.numer() * &den.div_exact_ref(c.re.denom()).complete()));
            g.gcd_mut(&Integer::from(c.im.numer() * &den.div_exact_ref(c.im.denom()).complete()));
        }
        if g.cmp0().is_eq() {
            return self.clone();
        }
        let s = Rational::from((den, g));
        self.map(|c| GaussRat::new(Rational::from(&c.re * &s), Rational::from(&c.im * &s)))
    }

    pub fn is_real(&self) -> bool {
        self.terms.values().all(|c| c.is_real())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(n: usize, i: usize) -> MPoly<Integer> {
        MPoly::var(n, i)
    }

    #[test]
    fn square_of_sum() {
        let s = v(2, 0).add(&v(2, 1));
        let sq = s.pow(2);
        assert_eq!(sq.coeff(&[1, 1]), 2);
        assert_eq!(sq.num_terms(), 3);
        assert!(sq.is_homogeneous());
    }

    #[test]
    fn composition() {
        // f(a,b) = a*b, a = x+y, b = x-y -> x^2 - y^2
        let f = v(2, 0).mul(&v(2, 1));
        let g = f.compose(&[v(2, 0).add(&v(2, 1)), v(2, 0).sub(&v(2, 1))]);
        assert_eq!(g, v(2, 0).pow(2).sub(&v(2, 1).pow(2)));
    }

    #[test]
    fn primitive_sign() {
        let f = v(1, 0).scale(&Integer::from(-6)).add(&MPoly::constant(1, Integer::from(4)));
        let p = f.primitive();
        assert_eq!(p.coeff(&[1]), 3);
        assert_eq!(p.coeff(&[0]), -2);
    }

    #[test]
    fn monomial_count() {
        assert_eq!(MPoly::<Integer>::monomials_of_degree(4, 4).len(), 35);
        assert_eq!(MPoly::<Integer>::monomials_of_degree(3, 2).len(), 6);
    }
}
