use rug::{Integer, Rational};
use std::fmt;

/// Commutative ring operations needed by the sparse multivariate layer.
pub trait Ring: Clone + PartialEq + fmt::Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn from_i64(v: i64) -> Self;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }
}

pub trait Field: Ring {
    fn inv(&self) -> Self;
}

impl Ring for Integer {
    fn zero() -> Self {
        Integer::new()
    }
    fn one() -> Self {
        Integer::from(1)
    }
    fn is_zero(&self) -> bool {
        self.cmp0().is_eq()
    }
    fn add(&self, o: &Self) -> Self {
        Integer::from(self + o)
    }
    fn sub(&self, o: &Self) -> Self {
        Integer::from(self - o)
    }
    fn mul(&self, o: &Self) -> Self {
        Integer::from(self * o)
    }
    fn neg(&self) -> Self {
        Integer::from(-self)
    }
    fn from_i64(v: i64) -> Self {
        Integer::from(v)
    }
}

impl Ring for Rational {
    fn zero() -> Self {
        Rational::new()
    }
    fn one() -> Self {
        Rational::from(1)
    }
    fn is_zero(&self) -> bool {
        self.cmp0().is_eq()
    }
    fn add(&self, o: &Self) -> Self {
        Rational::from(self + o)
    }
    fn sub(&self, o: &Self) -> Self {
        Rational::from(self - o)
    }
    fn mul(&self, o: &Self) -> Self {
        Rational::from(self * o)
    }
    fn neg(&self) -> Self {
        Rational::from(-self)
    }
    fn from_i64(v: i64) -> Self {
        Rational::from(v)
    }
}

impl Field for Rational {
    fn inv(&self) -> Self {
        Rational::from(self.recip_ref())
    }
}

/// Element of Q(i).
#[derive(Clone, PartialEq, Eq, Debug, Hash, PartialOrd, Ord)]
pub struct GaussRat {
    pub re: Rational,
    pub im: Rational,
}

impl GaussRat {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussRat { re, im }
    }

    pub fn real(re: Rational) -> Self {
        GaussRat { re, im: Rational::new() }
    }

    pub fn i() -> Self {
        GaussRat { re: Rational::new(), im: Rational::from(1) }
    }

    pub fn is_real(&self) -> bool {
        self.im.cmp0().is_eq()
    }

    pub fn norm(&self) -> Rational {
        Rational::from(&self.re * &self.re) + Rational::from(&self.im * &self.im)
    }

    pub fn conj(&self) -> Self {
        GaussRat { re: self.re.clone(), im: Rational::from(-&self.im) }
    }
}

impl fmt::Display for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.cmp0().is_eq() {
            write!(f, "{}", self.re)
        } else if self.re.cmp0().is_eq() {
            if self.im == 1 {
                write!(f, "i")
            } else if self.im == -1 {
                write!(f, "-i")
            } else {
                write!(f, "{}*i", self.im)
            }
        } else {
            write!(f, "({}+{}*i)", self.re, self.im)
        }
    }
}

impl Ring for GaussRat {
    fn zero() -> Self {
        GaussRat::real(Rational::new())
    }
    fn one() -> Self {
        GaussRat::real(Rational::from(1))
    }
    fn is_zero(&self) -> bool {
        self.re.cmp0().is_eq() && self.im.cmp0().is_eq()
    }
    fn add(&self, o: &Self) -> Self {
        GaussRat { re: Rational::from(&self.re + &o.re), im: Rational::from(&self.im + &o.im) }
    }
    fn sub(&self, o: &Self) -> Self {
        GaussRat { re: Rational::from(&self.re - &o.re), im: Rational::from(&self.im - &o.im) }
    }
    fn mul(&self, o: &Self) -> Self {
        let re = Rational::from(&self.re * &o.re) - Rational::from(&self.im * &o.im);
        let im = Rational::from(&self.re * &o.im) + Rational::from(&self.im * &o.re);
        GaussRat { re, im }
    }
    fn neg(&self) -> Self {
        GaussRat { re: Rational::from(-&self.re), im: Rational::from(-&self.im) }
    }
    fn from_i64(v: i64) -> Self {
        GaussRat::real(Rational::from(v))
    }
}

impl Field for GaussRat {
    fn inv(&self) -> Self {
        let n = self.norm();
        GaussRat {
            re: Rational::from(&self.re / &n),
            im: Rational::from(-&self.im) / &n,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gauss_inverse() {
        let z = GaussRat::new(Rational::from(3), Rational::from(-4));
        let w = z.inv();
        assert!(z.mul(&w).is_one());
        assert_eq!(z.norm(), 25);
    }

    #[test]
    fn i_squared() {
        let i = GaussRat::i();
        assert_eq!(i.mul(&i), GaussRat::from_i64(-1));
    }
}
