use rug::{Integer, Rational};

use super::unipoly::{IntPoly, UniPoly};

#[derive(Clone, Debug, PartialEq)]
pub enum Endpoint {
    NegInf,
    PosInf,
    Closed(Rational),
    Open(Rational),
}

#[derive(Clone, Debug, PartialEq)]
pub struct RealInterval {
    pub lo: Endpoint,
    pub hi: Endpoint,
}

impl RealInterval {
    pub fn real_line() -> Self {
        RealInterval { lo: Endpoint::NegInf, hi: Endpoint::PosInf }
    }

    pub fn open(a: Rational, b: Rational) -> Self {
        RealInterval { lo: Endpoint::Open(a), hi: Endpoint::Open(b) }
    }

    pub fn closed(a: Rational, b: Rational) -> Self {
        RealInterval { lo: Endpoint::Closed(a), hi: Endpoint::Closed(b) }
    }

    /// (a, +inf)
    pub fn above(a: Rational) -> Self {
        RealInterval { lo: Endpoint::Open(a), hi: Endpoint::PosInf }
    }
}

/// Sturm sequence with sign-preserving primitive pseudo-remainders.
pub fn sturm_sequence(f: &IntPoly) -> Vec<IntPoly> {
    let mut seq = vec![f.clone(), f.derivative()];
    loop {
        let n = seq.len();
        let (a, b) = (&seq[n - 2], &seq[n - 1]);
        if b.is_zero() || b.degree() == 0 {
            break;
        }
        let delta = a.degree() - b.degree();
        let mut r = a.pseudo_rem(b);
        if r.is_zero() {
            break;
        }
        // prem = lc(b)^(delta+1) * rem; the Sturm step needs -rem
        let flip = b.lc().cmp0().is_lt() && delta % 2 == 0;
        if !flip {
            r = r.neg();
        }
        let c = r.content();
        r = r.div_exact_scalar(&c);
        seq.push(r);
    }
    seq
}

fn sign_at(p: &IntPoly, x: &Endpoint) -> i32 {
    if p.is_zero() {
        return 0;
    }
    match x {
        Endpoint::PosInf => p.lc().cmp0() as i32,
        Endpoint::NegInf => {
            let s = p.lc().cmp0() as i32;
            if p.degree() % 2 == 1 { -s } else { s }
        }
        Endpoint::Closed(q) | Endpoint::Open(q) => p.eval_rational(q).cmp0() as i32,
    }
}

fn variations(seq: &[IntPoly], x: &Endpoint) -> usize {
    let signs: Vec<i32> = seq.iter().map(|p| sign_at(p, x)).filter(|&s| s != 0).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Number of distinct real roots in the interval.
pub fn real_root_count(f: &UniPoly, interval: &RealInterval) -> usize {
    if f.is_zero() || f.degree() == 0 {
        return 0;
    }
    let p = f.primitive_part();
    let seq = sturm_sequence(&p);
    let v_lo = variations(&seq, &interval.lo) as i64;
    let v_hi = variations(&seq, &interval.hi) as i64;
    let mut count = v_lo - v_hi;
    if let Endpoint::Closed(a) = &interval.lo {
        if p.eval_rational(a).cmp0().is_eq() {
            count += 1;
        }
    }
    if let Endpoint::Open(b) = &interval.hi {
        if p.eval_rational(b).cmp0().is_eq() {
            count -= 1;
        }
    }
    count.max(0) as usize
}

pub fn real_root_count_int(f: &IntPoly) -> usize {
    real_root_count(&f.to_unipoly(), &RealInterval::real_line())
}

/// Integer bound B with all real roots in (-B, B) (Cauchy).
pub fn cauchy_bound(f: &IntPoly) -> Integer {
    let lc = f.lc().clone().abs();
    let m = f.coeffs()[..f.degree()].iter().map(|c| c.clone().abs()).max().unwrap_or_default();
    m / lc + 2u32
}

#[cfg(test)]
mod tests {
    use super::*;

    fn up(c: &[i64]) -> UniPoly {
        UniPoly::from_i64s(c)
    }

    #[test]
    fn examples() {
        assert_eq!(real_root_count(&up(&[0, -1, 0, 1]), &RealInterval::real_line()), 3);
        assert_eq!(real_root_count(&up(&[1, 0, 1]), &RealInterval::real_line()), 0);
        assert_eq!(real_root_count(&up(&[-1, -1, 1]), &RealInterval::above(Rational::new())), 1);
    }

    #[test]
    fn endpoints() {
        let f = up(&[0, -1, 0, 1]); // roots -1, 0, 1
        let z = Rational::new;
        assert_eq!(real_root_count(&f, &RealInterval::closed(z(), Rational::from(1))), 2);
        assert_eq!(real_root_count(&f, &RealInterval::open(z(), Rational::from(1))), 0);
        assert_eq!(real_root_count(&f, &RealInterval::closed(Rational::from(-1), z())), 2);
    }

    #[test]
    fn negative_leading_coefficient() {
        // -(x^4 - 5x^2 + 4) has roots +-1, +-2
        assert_eq!(real_root_count(&up(&[-4, 0, 5, 0, -1]), &RealInterval::real_line()), 4);
        assert_eq!(real_root_count(&up(&[-1, -1, 0, 0, 0, -3]), &RealInterval::real_line()), 1);
    }
}
