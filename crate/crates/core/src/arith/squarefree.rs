use rug::{Complete, Integer};

use super::modp;
use super::primes::small_primes;
use super::unipoly::{IntPoly, UniPoly};

/// gcd in Z[x] via the primitive remainder sequence; primitive with positive leading coefficient,
/// times the gcd of the contents.
pub fn int_gcd(a: &IntPoly, b: &IntPoly) -> IntPoly {
    if a.is_zero() {
        return b.primitive().scale(&b.content());
    }
    if b.is_zero() {
        return a.primitive().scale(&a.content());
    }
    let c = a.content().gcd(&b.content());
    let (mut x, mut y) = (a.primitive(), b.primitive());
    if x.degree() < y.degree() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_zero() {
        let r = x.pseudo_rem(&y);
        x = y;
        y = if r.is_zero() { r } else { r.primitive() };
    }
    x.primitive().scale(&c)
}

/// Fast squarefreeness test: a modular certificate when one exists, exact gcd otherwise.
pub fn is_squarefree(f: &IntPoly) -> bool {
    if f.degree() <= 1 {
        return !f.is_zero();
    }
    let df = f.derivative();
    for &p in small_primes().iter().skip(10).take(20) {
        let lc = f.lc().mod_u(p as u32);
        if lc == 0 {
            continue;
        }
        let fp = modp::reduce(f, p);
        let dp = modp::reduce(&df, p);
        if modp::gcd(&fp, &dp, p).len() == 1 {
            return true;
        }
    }
    int_gcd(f, &df).degree() == 0
}

/// Yun's algorithm on the primitive part. Parts are primitive integer polynomials.
pub fn squarefree_decompose(f: &UniPoly) -> Vec<(IntPoly, u32)> {
    if f.is_zero() || f.degree() == 0 {
        return Vec::new();
    }
    let f = f.primitive_part();
    if is_squarefree(&f) {
        return vec![(f, 1)];
    }
    let df = f.derivative();
    let a0 = int_gcd(&f, &df).primitive();
    let mut b = f.div_exact(&a0).expect("gcd divides").primitive();
    let c = df.to_unipoly();
    // d = f'/a0 - b' computed over Q then made integral
    let mut d = div_q(&c, &a0).sub(&b.derivative().to_unipoly());
    let mut out = Vec::new();
    let mut i = 1u32;
    loop {
        if b.degree() == 0 {
            break;
        }
        let a = if d.is_zero() { b.clone() } else { int_gcd(&b, &d.primitive_part()).primitive() };
        if a.degree() > 0 {
            out.push((a.clone(), i));
        }
        let nb = b.div_exact(&a).expect("gcd divides").primitive();
        d = div_q(&d, &a).sub(&nb.derivative().to_unipoly());
        b = nb;
        i += 1;
    }
    out
}

fn div_q(a: &UniPoly, b: &IntPoly) -> UniPoly {
    a.div_rem(&b.to_unipoly()).expect("nonzero").0
}

/// Product of the distinct irreducible factors, primitive.
pub fn squarefree_part(f: &IntPoly) -> IntPoly {
    if is_squarefree(f) {
        return f.primitive();
    }
    let g = int_gcd(f, &f.derivative());
    f.div_exact(&g.primitive()).expect("gcd divides").primitive()
}

/// Coefficient bound for factors (Mignotte): 2^deg * ||f||_2, rounded up.
pub fn mignotte_bound(f: &IntPoly) -> Integer {
    let s: Integer = f.coeffs().iter().map(|c| c.square_ref().complete()).sum();
    let (r, _) = s.sqrt_rem(Integer::new());
    (r + 1u32) << f.degree() as u32
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decompose_examples() {
        // (x-1)^2 (x+2)
        let f = IntPoly::from_i64s(&[-1, 1]).pow(2).mul(&IntPoly::from_i64s(&[2, 1]));
        let d = squarefree_decompose(&f.to_unipoly());
        assert_eq!(d, vec![(IntPoly::from_i64s(&[2, 1]), 1), (IntPoly::from_i64s(&[-1, 1]), 2)]);
        let g = IntPoly::from_i64s(&[-1, -1, 1]);
        assert_eq!(squarefree_decompose(&g.to_unipoly()), vec![(g, 1)]);
        assert!(squarefree_decompose(&UniPoly::from_i64s(&[5])).is_empty());
    }

    #[test]
    fn higher_multiplicities() {
        let a = IntPoly::from_i64s(&[1, 0, 1]);
        let b = IntPoly::from_i64s(&[-3, 2]);
        let c = IntPoly::from_i64s(&[1, 1]);
        let f = a.mul(&b.pow(3)).mul(&c.pow(4)).scale(&Integer::from(6));
        let d = squarefree_decompose(&f.to_unipoly());
        assert_eq!(d, vec![(a, 1), (b, 3), (c, 4)]);
        assert_eq!(squarefree_part(&f), IntPoly::from_i64s(&[1, 0, 1]).mul(&IntPoly::from_i64s(&[-3, 2])).mul(&IntPoly::from_i64s(&[1, 1])).primitive());
    }

    #[test]
    fn gcd_with_content() {
        let a = IntPoly::from_i64s(&[-2, 0, 2]);
        let b = IntPoly::from_i64s(&[4, 4]);
        assert_eq!(int_gcd(&a, &b), IntPoly::from_i64s(&[2, 2]));
    }
}
