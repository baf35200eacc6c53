//! Midpoint-radius complex balls. Centers carry the working precision; radii are
//! 64-bit floats rounded upward, so every operation returns a ball containing the
//! exact result of the same operation on any points of the inputs.

use rug::float::Round;
use rug::ops::{AddAssignRound, AssignRound, DivAssignRound, MulAssignRound, SubAssignRound};
use rug::{Complex, Float, Integer};
use serde::{Serialize, Serializer};
use std::fmt;

use super::unipoly::IntPoly;

pub const RAD_PREC: u32 = 64;

#[derive(Clone, Debug, PartialEq)]
pub struct ComplexBall {
    pub center: Complex,
    pub radius: Float,
}

pub(crate) fn up(x: Float) -> Float {
    let mut r = Float::new(RAD_PREC);
    r.assign_round(&x, Round::Up);
    r
}

/// Upper bound for |z|.
pub fn abs_upper(z: &Complex) -> Float {
    let (r, _) = Float::with_val_round(RAD_PREC, z.real().hypot_ref(z.imag()), Round::Up);
    r
}

/// Lower bound for |z|.
pub fn abs_lower(z: &Complex) -> Float {
    let (r, _) = Float::with_val_round(RAD_PREC, z.real().hypot_ref(z.imag()), Round::Down);
    r
}

fn add_up(a: &Float, b: &Float) -> Float {
    let mut r = Float::with_val(RAD_PREC, a);
    r.add_assign_round(b, Round::Up);
    r
}

fn mul_up(a: &Float, b: &Float) -> Float {
    let mut r = Float::with_val(RAD_PREC, a);
    r.mul_assign_round(b, Round::Up);
    r
}

/// Bound on the rounding error of one correctly rounded complex operation whose
/// computed result is `c`.
fn op_error(c: &Complex) -> Float {
    let prec = c.prec().0;
    let mut e = abs_upper(c);
    e <<= 1;
    e >>= prec;
    e
}

impl ComplexBall {
    pub fn new(center: Complex, radius: Float) -> Self {
        ComplexBall { center, radius: up(radius) }
    }

    pub fn exact(center: Complex) -> Self {
        ComplexBall { center, radius: Float::new(RAD_PREC) }
    }

    pub fn from_real_f64(prec: u32, x: f64) -> Self {
        Self::exact(Complex::with_val(prec, (x, 0.0)))
    }

    pub fn from_integer(prec: u32, n: &Integer) -> Self {
        let (c, o) = Complex::with_val_round(prec, (n, 0), (Round::Nearest, Round::Nearest));
        let mut b = Self::exact(c);
        if o.0 != std::cmp::Ordering::Equal {
            b.radius = op_error(&b.center);
        }
        b
    }

    pub fn prec(&self) -> u32 {
        self.center.prec().0
    }

    pub fn re_f64(&self) -> f64 {
        self.center.real().to_f64()
    }

    pub fn im_f64(&self) -> f64 {
        self.center.imag().to_f64()
    }

    pub fn radius_f64(&self) -> f64 {
        self.radius.to_f64_round(Round::Up)
    }

    pub fn to_c64(&self) -> num_complex::Complex64 {
        num_complex::Complex64::new(self.re_f64(), self.im_f64())
    }

    pub fn contains_zero(&self) -> bool {
        abs_lower(&self.center) <= self.radius
    }

    /// Upper bound on |z| over the ball.
    pub fn mag_upper(&self) -> Float {
        add_up(&abs_upper(&self.center), &self.radius)
    }

    /// Lower bound on |z| over the ball (0 if it contains the origin).
    pub fn mag_lower(&self) -> Float {
        let mut m = Float::with_val(RAD_PREC, abs_lower(&self.center));
        m.sub_assign_round(&self.radius, Round::Down);
        if m.is_sign_negative() {
            Float::new(RAD_PREC)
        } else {
            m
        }
    }

    /// Certainly disjoint.
    pub fn disjoint(&self, o: &ComplexBall) -> bool {
        let p = self.prec().max(o.prec());
        let d = Complex::with_val(p, &self.center - &o.center);
        // the subtraction may round; widen by its error
        let slack = op_error(&d);
        let mut lhs = abs_lower(&d);
        lhs.sub_assign_round(&slack, Round::Down);
        lhs > add_up(&self.radius, &o.radius)
    }

    pub fn overlaps(&self, o: &ComplexBall) -> bool {
        !self.disjoint(o)
    }

    pub fn conj(&self) -> ComplexBall {
        ComplexBall { center: self.center.clone().conj(), radius: self.radius.clone() }
    }

    /// Imaginary part provably nonzero.
    pub fn is_certainly_nonreal(&self) -> bool {
        let mut a = Float::with_val(RAD_PREC, self.center.imag().abs_ref());
        a.sub_assign_round(&self.radius, Round::Down);
        a.is_sign_positive() && !a.is_zero()
    }

    pub fn add(&self, o: &ComplexBall) -> ComplexBall {
        let p = self.prec().max(o.prec());
        let c = Complex::with_val(p, &self.center + &o.center);
        let r = add_up(&add_up(&self.radius, &o.radius), &op_error(&c));
        ComplexBall { center: c, radius: r }
    }

    pub fn neg(&self) -> ComplexBall {
        ComplexBall { center: Complex::with_val(self.prec(), -&self.center), radius: self.radius.clone() }
    }

    pub fn sub(&self, o: &ComplexBall) -> ComplexBall {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &ComplexBall) -> ComplexBall {
        let p = self.prec().max(o.prec());
        let c = Complex::with_val(p, &self.center * &o.center);
        let mut r = mul_up(&abs_upper(&self.center), &o.radius);
        r = add_up(&r, &mul_up(&abs_upper(&o.center), &self.radius));
        r = add_up(&r, &mul_up(&self.radius, &o.radius));
        r = add_up(&r, &op_error(&c));
        ComplexBall { center: c, radius: r }
    }

    pub fn add_integer(&self, n: &Integer) -> ComplexBall {
        self.add(&ComplexBall::from_integer(self.prec(), n))
    }

    pub fn mul_integer(&self, n: &Integer) -> ComplexBall {
        self.mul(&ComplexBall::from_integer(self.prec(), n))
    }

    /// Ball Horner evaluation of an integer polynomial.
    pub fn eval_int_poly(f: &IntPoly, z: &ComplexBall) -> ComplexBall {
        let p = z.prec();
        let mut acc = ComplexBall::exact(Complex::new(p));
        for c in f.coeffs().iter().rev() {
            acc = acc.mul(z).add_integer(c);
        }
        acc
    }

    /// 1/z; `None` when the ball meets the origin.
    pub fn recip(&self) -> Option<ComplexBall> {
        let m = self.mag_lower();
        if m.is_zero() {
            return None;
        }
        let c = Complex::with_val(self.prec(), self.center.recip_ref());
        // |1/z - 1/c| <= r / (|c| (|c| - r))
        let mut den = abs_lower(&self.center);
        den.mul_assign_round(&m, Round::Down);
        let mut r = Float::with_val(RAD_PREC, &self.radius);
        r.div_assign_round(&den, Round::Up);
        let r = add_up(&r, &op_error(&c));
        Some(ComplexBall { center: c, radius: r })
    }

    pub fn pow(&self, n: u32) -> ComplexBall {
        let mut acc = ComplexBall::exact(Complex::with_val(self.prec(), (1, 0)));
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Ball around a real value given with an absolute error.
    pub fn from_float_with_error(x: &Float, err: f64) -> ComplexBall {
        let c = Complex::with_val(x.prec(), (x, 0));
        ComplexBall::new(c, Float::with_val(RAD_PREC, err))
    }
}

impl fmt::Display for ComplexBall {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let re = self.re_f64();
        let im = self.im_f64();
        if im == 0.0 {
            write!(f, "[{re:.17} +/- {:.3e}]", self.radius_f64())
        } else {
            write!(f, "[{re:.17}{im:+.17}i +/- {:.3e}]", self.radius_f64())
        }
    }
}

impl Serialize for ComplexBall {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("ComplexBall", 3)?;
        st.serialize_field("re", &self.re_f64())?;
        st.serialize_field("im", &self.im_f64())?;
        st.serialize_field("radius", &self.radius_f64())?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_encloses() {
        let a = ComplexBall::new(Complex::with_val(128, (1.5, -0.25)), Float::with_val(64, 1e-10));
        let b = ComplexBall::new(Complex::with_val(128, (-2.0, 3.0)), Float::with_val(64, 1e-12));
        let c = a.mul(&b);
        // corner point of the input balls
        let ap = Complex::with_val(256, (1.5 + 1e-10, -0.25));
        let bp = Complex::with_val(256, (-2.0, 3.0 + 1e-12));
        let prod = Complex::with_val(256, &ap * &bp);
        let d = Complex::with_val(256, &prod - &c.center);
        assert!(abs_upper(&d) <= c.radius);
    }

    #[test]
    fn horner_contains_root() {
        // x^2 - 2 at a tight ball around sqrt 2
        let s = Float::with_val(200, 2).sqrt();
        let z = ComplexBall::from_float_with_error(&s, 1e-55);
        let v = ComplexBall::eval_int_poly(&IntPoly::from_i64s(&[-2, 0, 1]), &z);
        assert!(v.contains_zero());
        // a point just below sqrt 2, far outside the ball radius
        let off = ComplexBall::from_float_with_error(&(s.clone() - 1e-5), 1e-20);
        assert!(!ComplexBall::eval_int_poly(&IntPoly::from_i64s(&[-2, 0, 1]), &off).contains_zero());
    }

    #[test]
    fn reciprocal_encloses() {
        let a = ComplexBall::new(Complex::with_val(128, (0.5, 0.25)), Float::with_val(64, 1e-6));
        let r = a.recip().unwrap();
        let p = Complex::with_val(256, (0.5 + 1e-6, 0.25));
        let q = Complex::with_val(256, p.recip_ref());
        assert!(abs_upper(&Complex::with_val(256, &q - &r.center)) <= r.radius);
        assert!(ComplexBall::new(Complex::with_val(64, (0, 0)), Float::with_val(64, 0.1)).recip().is_none());
    }

    #[test]
    fn disjointness() {
        let a = ComplexBall::new(Complex::with_val(64, (0, 0)), Float::with_val(64, 0.5));
        let b = ComplexBall::new(Complex::with_val(64, (1.2, 0)), Float::with_val(64, 0.5));
        let c = ComplexBall::new(Complex::with_val(64, (0.9, 0)), Float::with_val(64, 0.5));
        assert!(a.disjoint(&b));
        assert!(a.overlaps(&c));
    }
}
