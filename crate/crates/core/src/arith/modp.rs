//! Dense polynomials over F_p for odd p < 2^32, ascending order, no trailing zeros.

use rand::Rng;
use rug::ops::Pow;
use rug::Integer;

use super::unipoly::IntPoly;

pub type Fp = Vec<u64>;

pub fn inv(a: u64, p: u64) -> u64 {
    super::primes::pow_mod(a, p - 2, p)
}

fn trim(mut v: Fp) -> Fp {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

pub fn reduce(f: &IntPoly, p: u64) -> Fp {
    trim(f.coeffs().iter().map(|c| c.mod_u(p as u32) as u64).collect())
}

pub fn lift_symmetric(f: &Fp, p: u64) -> IntPoly {
    IntPoly::new(
        f.iter()
            .map(|&c| if c > p / 2 { Integer::from(c as i64 - p as i64) } else { Integer::from(c) })
            .collect(),
    )
}

pub fn add(a: &Fp, b: &Fp, p: u64) -> Fp {
    let n = a.len().max(b.len());
    trim((0..n).map(|i| (a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0)) % p).collect())
}

pub fn sub(a: &Fp, b: &Fp, p: u64) -> Fp {
    let n = a.len().max(b.len());
    trim((0..n).map(|i| (a.get(i).copied().unwrap_or(0) + p - b.get(i).copied().unwrap_or(0)) % p).collect())
}

pub fn mul(a: &Fp, b: &Fp, p: u64) -> Fp {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut r = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            r[i + j] = (r[i + j] + x * y) % p;
        }
    }
    trim(r)
}

pub fn scale(a: &Fp, c: u64, p: u64) -> Fp {
    trim(a.iter().map(|&x| x * c % p).collect())
}

pub fn monic(a: &Fp, p: u64) -> Fp {
    match a.last() {
        None => Vec::new(),
        Some(&l) => scale(a, inv(l, p), p),
    }
}

pub fn divrem(a: &Fp, b: &Fp, p: u64) -> (Fp, Fp) {
    assert!(!b.is_empty(), "division by zero polynomial");
    if a.len() < b.len() {
        return (Vec::new(), a.clone());
    }
    let db = b.len() - 1;
    let il = inv(*b.last().unwrap(), p);
    let mut r = a.clone();
    let mut q = vec![0u64; a.len() - db];
    for k in (0..q.len()).rev() {
        let c = r[k + db] * il % p;
        if c == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            r[k + j] = (r[k + j] + p - c * bj % p) % p;
        }
        q[k] = c;
    }
    r.truncate(db);
    (trim(q), trim(r))
}

pub fn rem(a: &Fp, b: &Fp, p: u64) -> Fp {
    divrem(a, b, p).1
}

/// Monic gcd; gcd(0, 0) = 0.
pub fn gcd(a: &Fp, b: &Fp, p: u64) -> Fp {
    let (mut x, mut y) = (a.clone(), b.clone());
    while !y.is_empty() {
        let r = rem(&x, &y, p);
        x = y;
        y = r;
    }
    monic(&x, p)
}

/// Returns (g, s, t) with s a + t b = g monic.
pub fn ext_gcd(a: &Fp, b: &Fp, p: u64) -> (Fp, Fp, Fp) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (vec![1u64], Vec::new());
    let (mut t0, mut t1) = (Vec::new(), vec![1u64]);
    while !r1.is_empty() {
        let (q, r) = divrem(&r0, &r1, p);
        let s = sub(&s0, &mul(&q, &s1, p), p);
        let t = sub(&t0, &mul(&q, &t1, p), p);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
        t0 = std::mem::replace(&mut t1, t);
    }
    let l = inv(*r0.last().unwrap(), p);
    (scale(&r0, l, p), scale(&s0, l, p), scale(&t0, l, p))
}

pub fn derivative(a: &Fp, p: u64) -> Fp {
    trim(a.iter().enumerate().skip(1).map(|(i, &c)| c * (i as u64 % p) % p).collect())
}

pub fn powmod(base: &Fp, e: &Integer, m: &Fp, p: u64) -> Fp {
    let mut r = vec![1u64];
    let b = rem(base, m, p);
    for i in (0..e.significant_bits()).rev() {
        r = rem(&mul(&r, &r, p), m, p);
        if e.get_bit(i) {
            r = rem(&mul(&r, &b, p), m, p);
        }
    }
    rem(&r, m, p)
}

/// Distinct-degree factorization of a monic squarefree polynomial.
pub fn ddf(f: &Fp, p: u64) -> Vec<(Fp, usize)> {
    let mut out = Vec::new();
    let mut f = f.clone();
    let x = vec![0u64, 1];
    let mut h = x.clone();
    let pe = Integer::from(p);
    let mut d = 0;
    while f.len() > 1 {
        d += 1;
        if 2 * d > f.len() - 1 {
            let deg = f.len() - 1;
            out.push((f.clone(), deg));
            break;
        }
        h = powmod(&h, &pe, &f, p);
        let g = gcd(&sub(&h, &x, p), &f, p);
        if g.len() > 1 {
            f = divrem(&f, &g, p).0;
            h = rem(&h, &f, p);
            out.push((g, d));
        }
    }
    out
}

/// Equal-degree split of a product of irreducibles of degree d (Cantor-Zassenhaus).
pub fn edf<R: Rng>(f: &Fp, d: usize, p: u64, rng: &mut R) -> Vec<Fp> {
    let n = f.len() - 1;
    if n == d {
        return vec![monic(f, p)];
    }
    let e = (Integer::from(p).pow(d as u32) - 1u32) / 2u32;
    loop {
        let a: Fp = trim((0..n).map(|_| rng.random_range(0..p)).collect());
        if a.len() <= 1 {
            continue;
        }
        let b = powmod(&a, &e, f, p);
        let g = gcd(&sub(&b, &vec![1u64], p), f, p);
        if g.len() > 1 && g.len() < f.len() {
            let h = divrem(f, &g, p).0;
            let mut out = edf(&g, d, p, rng);
            out.extend(edf(&monic(&h, p), d, p, rng));
            return out;
        }
    }
}

/// Monic irreducible factors of a monic squarefree polynomial.
pub fn factor_squarefree<R: Rng>(f: &Fp, p: u64, rng: &mut R) -> Vec<Fp> {
    let mut out = Vec::new();
    for (g, d) in ddf(f, p) {
        out.extend(edf(&g, d, p, rng));
    }
    out.sort();
    out
}

/// Rank of a matrix over F_p by Gaussian elimination.
pub fn rank(mut m: Vec<Vec<u64>>, p: u64) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..rows).find(|&i| m[i][c] != 0) else { continue };
        m.swap(r, piv);
        let iv = inv(m[r][c], p);
        for j in c..cols {
            m[r][j] = m[r][j] * iv % p;
        }
        for i in 0..rows {
            if i != r && m[i][c] != 0 {
                let f = m[i][c];
                for j in c..cols {
                    m[i][j] = (m[i][j] + p - f * m[r][j] % p) % p;
                }
            }
        }
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn factor_x4_minus_1_mod_13() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        let f = vec![12u64, 0, 0, 0, 1];
        let fs = factor_squarefree(&f, 13, &mut rng);
        assert_eq!(fs.len(), 4);
        let prod = fs.iter().fold(vec![1u64], |a, b| mul(&a, b, 13));
        assert_eq!(prod, f);
    }

    #[test]
    fn ddf_degrees() {
        // x^2 + 1 irreducible mod 7, x - 1 linear
        let f = mul(&vec![1, 0, 1], &vec![6, 1], 7);
        let d = ddf(&f, 7);
        assert_eq!(d, vec![(vec![6, 1], 1), (vec![1, 0, 1], 2)]);
    }

    #[test]
    fn bezout() {
        let p = 101;
        let a = vec![3u64, 0, 1, 5];
        let b = vec![7u64, 2];
        let (g, s, t) = ext_gcd(&a, &b, p);
        assert_eq!(g, vec![1]);
        assert_eq!(add(&mul(&s, &a, p), &mul(&t, &b, p), p), vec![1]);
    }

    #[test]
    fn rank_small() {
        assert_eq!(rank(vec![vec![1, 2], vec![2, 4]], 7), 1);
        assert_eq!(rank(vec![vec![1, 2], vec![2, 5]], 7), 2);
    }
}
