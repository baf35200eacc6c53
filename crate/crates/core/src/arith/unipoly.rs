//! Dense univariate polynomials over Z and Q, ascending coefficient order.

use rug::ops::Pow;
use rug::{Complete, Integer, Rational};
use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Debug, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<Integer>,
}

#[derive(Clone, PartialEq, Eq, Debug, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

fn trim<T: PartialEq>(v: &mut Vec<T>, zero: impl Fn(&T) -> bool) {
    while v.last().is_some_and(&zero) {
        v.pop();
    }
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<Integer>) -> Self {
        trim(&mut coeffs, |c| c.cmp0().is_eq());
        IntPoly { coeffs }
    }

    pub fn from_i64s(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&v| Integer::from(v)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Integer) -> Self {
        Self::new(vec![c])
    }

    /// x^n
    pub fn monomial(c: Integer, n: usize) -> Self {
        let mut v = vec![Integer::new(); n + 1];
        v[n] = c;
        Self::new(v)
    }

    pub fn x() -> Self {
        Self::from_i64s(&[0, 1])
    }

    pub fn coeffs(&self) -> &[Integer] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Integer> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports 0, callers check `is_zero` first.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeff(&self, i: usize) -> Integer {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn lc(&self) -> &Integer {
        self.coeffs.last().expect("leading coefficient of zero polynomial")
    }

    pub fn content(&self) -> Integer {
        let mut g = Integer::new();
        for c in &self.coeffs {
            g.gcd_mut(c);
            if g == 1 {
                break;
            }
        }
        g
    }

    /// Content-free with positive leading coefficient.
    pub fn primitive(&self) -> IntPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut g = self.content();
        if self.lc().cmp0().is_lt() {
            g = -g;
        }
        IntPoly { coeffs: self.coeffs.iter().map(|c| c.div_exact_ref(&g).complete()).collect() }
    }

    pub fn is_primitive(&self) -> bool {
        !self.is_zero() && self.lc().cmp0().is_gt() && self.content() == 1
    }

    pub fn neg(&self) -> IntPoly {
        IntPoly { coeffs: self.coeffs.iter().map(|c| (-c).complete()).collect() }
    }

    pub fn add(&self, o: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let v = (0..n)
            .map(|i| match (self.coeffs.get(i), o.coeffs.get(i)) {
                (Some(a), Some(b)) => (a + b).complete(),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                _ => unreachable!(),
            })
            .collect();
        IntPoly::new(v)
    }

    pub fn sub(&self, o: &IntPoly) -> IntPoly {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &IntPoly) -> IntPoly {
        if self.is_zero() || o.is_zero() {
            return IntPoly::zero();
        }
        let mut v = vec![Integer::new(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.cmp0().is_eq() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        IntPoly::new(v)
    }

    pub fn pow(&self, n: u32) -> IntPoly {
        let mut r = IntPoly::constant(Integer::from(1));
        for _ in 0..n {
            r = r.mul(self);
        }
        r
    }

    pub fn scale(&self, c: &Integer) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|a| (a * c).complete()).collect())
    }

    pub fn div_exact_scalar(&self, c: &Integer) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|a| a.div_exact_ref(c).complete()).collect())
    }

    pub fn derivative(&self) -> IntPoly {
        IntPoly::new(
            self.coeffs.iter().enumerate().skip(1).map(|(i, c)| (c * i as u64).complete()).collect(),
        )
    }

    pub fn eval(&self, x: &Integer) -> Integer {
        let mut acc = Integer::new();
        for c in self.coeffs.iter().rev() {
            acc *= x;
            acc += c;
        }
        acc
    }

    pub fn eval_rational(&self, x: &Rational) -> Rational {
        let mut acc = Rational::new();
        for c in self.coeffs.iter().rev() {
            acc *= x;
            acc += c;
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c.to_f64();
        }
        acc
    }

    /// Pseudo-remainder: lc(b)^(deg a - deg b + 1) a = q b + r.
    pub fn pseudo_rem(&self, b: &IntPoly) -> IntPoly {
        assert!(!b.is_zero());
        if self.is_zero() || self.degree() < b.degree() {
            return self.clone();
        }
        let db = b.degree();
        let lb = b.lc().clone();
        let mut r = self.coeffs.clone();
        let mut e = self.degree() - db + 1;
        while r.len() > db && !r.is_empty() {
            let dr = r.len() - 1;
            let lr = r[dr].clone();
            for c in r.iter_mut() {
                *c *= &lb;
            }
            for (j, bc) in b.coeffs.iter().enumerate() {
                r[dr - db + j] -= &lr * bc;
            }
            r.pop();
            trim(&mut r, |c| c.cmp0().is_eq());
            e -= 1;
        }
        if e > 0 {
            let f = lb.pow(e as u32);
            for c in r.iter_mut() {
                *c *= &f;
            }
        }
        IntPoly::new(r)
    }

    /// Exact division in Z[x]; `None` if b does not divide self.
    pub fn div_exact(&self, b: &IntPoly) -> Option<IntPoly> {
        assert!(!b.is_zero());
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        if self.degree() < b.degree() {
            return None;
        }
        let db = b.degree();
        let lb = b.lc();
        let mut r = self.coeffs.clone();
        let mut q = vec![Integer::new(); self.degree() - db + 1];
        for k in (0..q.len()).rev() {
            let top = &r[k + db];
            if top.cmp0().is_eq() {
                continue;
            }
            if !top.is_divisible(lb) {
                return None;
            }
            let qk = top.div_exact_ref(lb).complete();
            for (j, bc) in b.coeffs.iter().enumerate() {
                r[k + j] -= &qk * bc;
            }
            q[k] = qk;
        }
        if r.iter().any(|c| c.cmp0().is_ne()) {
            return None;
        }
        Some(IntPoly::new(q))
    }

    /// f(-x)
    pub fn negate_var(&self) -> IntPoly {
        IntPoly::new(
            self.coeffs.iter().enumerate().map(|(i, c)| if i % 2 == 1 { (-c).complete() } else { c.clone() }).collect(),
        )
    }

    /// x^deg f(1/x)
    pub fn reverse(&self) -> IntPoly {
        let mut v = self.coeffs.clone();
        v.reverse();
        IntPoly::new(v)
    }

    /// f(x^k)
    pub fn inflate(&self, k: usize) -> IntPoly {
        let mut v = vec![Integer::new(); self.degree() * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            v[i * k] = c.clone();
        }
        IntPoly::new(v)
    }

    /// f(x + c)
    pub fn taylor_shift(&self, c: &Integer) -> IntPoly {
        let mut v = self.coeffs.clone();
        let n = v.len();
        for i in 0..n {
            for j in (i..n.saturating_sub(1)).rev() {
                let t = (&v[j + 1] * c).complete();
                v[j] += t;
            }
        }
        IntPoly::new(v)
    }

    pub fn l1_norm(&self) -> Integer {
        self.coeffs.iter().map(|c| c.clone().abs()).sum()
    }

    pub fn max_norm(&self) -> Integer {
        self.coeffs.iter().map(|c| c.clone().abs()).max().unwrap_or_default()
    }

    pub fn max_coeff_bits(&self) -> u32 {
        self.coeffs.iter().map(|c| c.significant_bits()).max().unwrap_or(0)
    }

    pub fn to_unipoly(&self) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(Rational::from).collect())
    }

    pub fn is_monic(&self) -> bool {
        !self.is_zero() && *self.lc() == 1
    }
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        trim(&mut coeffs, |c| c.cmp0().is_eq());
        UniPoly { coeffs }
    }

    pub fn from_i64s(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&v| Rational::from(v)).collect())
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn lc(&self) -> &Rational {
        self.coeffs.last().expect("leading coefficient of zero polynomial")
    }

    /// Splits self = c * P with P primitive integer, positive leading coefficient.
    pub fn to_primitive(&self) -> (Rational, IntPoly) {
        if self.is_zero() {
            return (Rational::new(), IntPoly::zero());
        }
        let mut den = Integer::from(1);
        for c in &self.coeffs {
            den.lcm_mut(c.denom());
        }
        let ints: Vec<Integer> =
            self.coeffs.iter().map(|c| c.numer() * Integer::from(den.div_exact_ref(c.denom()))).collect();
        let p = IntPoly::new(ints);
        let mut g = p.content();
        if p.lc().cmp0().is_lt() {
            g = -g;
        }
        let prim = p.div_exact_scalar(&g);
        (Rational::from((g, den)), prim)
    }

    pub fn primitive_part(&self) -> IntPoly {
        self.to_primitive().1
    }

    pub fn monic(&self) -> UniPoly {
        if self.is_zero() {
            return self.clone();
        }
        let l = self.lc().clone();
        UniPoly::new(self.coeffs.iter().map(|c| Rational::from(c / &l)).collect())
    }

    pub fn neg(&self) -> UniPoly {
        UniPoly { coeffs: self.coeffs.iter().map(|c| Rational::from(-c)).collect() }
    }

    pub fn add(&self, o: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }

    pub fn sub(&self, o: &UniPoly) -> UniPoly {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &UniPoly) -> UniPoly {
        if self.is_zero() || o.is_zero() {
            return UniPoly::zero();
        }
        let mut v = vec![Rational::new(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                v[i + j] += Rational::from(a * b);
            }
        }
        UniPoly::new(v)
    }

    pub fn scale(&self, c: &Rational) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|a| Rational::from(a * c)).collect())
    }

    pub fn derivative(&self) -> UniPoly {
        UniPoly::new(self.coeffs.iter().enumerate().skip(1).map(|(i, c)| Rational::from(c * i as u64)).collect())
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::new();
        for c in self.coeffs.iter().rev() {
            acc *= x;
            acc += c;
        }
        acc
    }

    pub fn div_rem(&self, b: &UniPoly) -> Result<(UniPoly, UniPoly)> {
        if b.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.degree() < b.degree() || self.is_zero() {
            return Ok((UniPoly::zero(), self.clone()));
        }
        let db = b.degree();
        let lb = b.lc().clone();
        let mut r = self.coeffs.clone();
        let mut q = vec![Rational::new(); self.degree() - db + 1];
        for k in (0..q.len()).rev() {
            let qk = Rational::from(&r[k + db] / &lb);
            if qk.cmp0().is_eq() {
                continue;
            }
            for (j, bc) in b.coeffs.iter().enumerate() {
                r[k + j] -= Rational::from(&qk * bc);
            }
            q[k] = qk;
        }
        Ok((UniPoly::new(q), UniPoly::new(r)))
    }

    /// Monic gcd over Q.
    pub fn gcd(&self, o: &UniPoly) -> UniPoly {
        let (_, a) = self.to_primitive();
        let (_, b) = o.to_primitive();
        crate::arith::squarefree::int_gcd(&a, &b).to_unipoly().monic()
    }

    pub fn l1_norm(&self) -> Rational {
        self.coeffs.iter().map(|c| c.clone().abs()).sum()
    }
}

impl From<&IntPoly> for UniPoly {
    fn from(p: &IntPoly) -> Self {
        p.to_unipoly()
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::arith::parse::print_univariate(&self.to_unipoly(), "x"))
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::arith::parse::print_univariate(self, "x"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pseudo_remainder_identity() {
        let a = IntPoly::from_i64s(&[1, 2, 0, 3]);
        let b = IntPoly::from_i64s(&[5, 0, 2]);
        let r = a.pseudo_rem(&b);
        assert!(r.degree() < 2);
        // lc(b)^2 a - r is divisible by b
        let lhs = a.scale(&Integer::from(4)).sub(&r);
        assert!(lhs.div_exact(&b).is_some());
    }

    #[test]
    fn exact_division() {
        let a = IntPoly::from_i64s(&[-1, 0, 1]);
        let b = IntPoly::from_i64s(&[1, 1]);
        assert_eq!(a.div_exact(&b).unwrap(), IntPoly::from_i64s(&[-1, 1]));
        assert!(a.div_exact(&IntPoly::from_i64s(&[2, 1])).is_none());
    }

    #[test]
    fn primitive_form() {
        let f = UniPoly::new(vec![Rational::from((1, 2)), Rational::from((-3, 4))]);
        let (c, p) = f.to_primitive();
        assert_eq!(p, IntPoly::from_i64s(&[-2, 3]));
        assert_eq!(c, Rational::from((-1, 4)));
        assert_eq!(p.to_unipoly().scale(&c), f);
    }

    #[test]
    fn shift_and_reverse() {
        let f = IntPoly::from_i64s(&[-1, -1, 1]);
        assert_eq!(f.taylor_shift(&Integer::from(1)), IntPoly::from_i64s(&[-1, 1, 1]));
        assert_eq!(f.reverse(), IntPoly::from_i64s(&[1, -1, -1]));
        assert_eq!(f.l1_norm(), 3);
    }
}
