//! Factorization over Q: squarefree decomposition, modular factorization,
//! Hensel lifting and exhaustive recombination with exact trial division.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rug::{Complete, Integer, Rational};
use std::collections::BTreeSet;

use super::modp::{self, Fp};
use super::primes::small_primes;
use super::squarefree::{mignotte_bound, squarefree_decompose};
use super::unipoly::{IntPoly, UniPoly};
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct FactorOptions {
    pub degree_cap: usize,
    pub recombination_budget: u64,
    pub seed: u64,
}

impl Default for FactorOptions {
    fn default() -> Self {
        FactorOptions { degree_cap: 64, recombination_budget: 1 << 22, seed: 0x5eed }
    }
}

/// f = unit * prod factor^multiplicity, factors primitive with positive leading coefficient.
#[derive(Clone, Debug, PartialEq)]
pub struct Factorization {
    pub unit: Rational,
    pub factors: Vec<(IntPoly, u32)>,
}

impl Factorization {
    pub fn expand(&self) -> UniPoly {
        let mut acc = IntPoly::constant(Integer::from(1));
        for (f, m) in &self.factors {
            acc = acc.mul(&f.pow(*m));
        }
        acc.to_unipoly().scale(&self.unit)
    }

    pub fn is_irreducible(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].1 == 1
    }
}

pub fn factor_rationals(f: &UniPoly) -> Result<Factorization> {
    factor_rationals_with(f, &FactorOptions::default())
}

pub fn factor_rationals_with(f: &UniPoly, opts: &FactorOptions) -> Result<Factorization> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut factors = Vec::new();
    for (part, m) in squarefree_decompose(f) {
        for g in factor_squarefree(&part, opts)? {
            factors.push((g, m));
        }
    }
    factors.sort_by(|a, b| a.0.degree().cmp(&b.0.degree()).then_with(|| a.0.coeffs().cmp(b.0.coeffs())));
    let mut prod = IntPoly::constant(Integer::from(1));
    for (g, m) in &factors {
        prod = prod.mul(&g.pow(*m));
    }
    let unit = f.lc() / Rational::from(prod.lc());
    let out = Factorization { unit, factors };
    assert_eq!(out.expand(), *f, "factorization product check");
    Ok(out)
}

/// Certified irreducibility of a primitive integer polynomial.
pub fn is_irreducible(f: &IntPoly, opts: &FactorOptions) -> Result<bool> {
    if f.is_zero() || f.degree() == 0 {
        return Ok(false);
    }
    let fz = factor_rationals_with(&f.to_unipoly(), opts)?;
    Ok(fz.is_irreducible())
}

/// Irreducible factors of a primitive squarefree polynomial.
pub fn factor_squarefree(f: &IntPoly, opts: &FactorOptions) -> Result<Vec<IntPoly>> {
    let f = f.primitive();
    let n = f.degree();
    if n <= 1 {
        return Ok(vec![f]);
    }
    if f.coeff(0).cmp0().is_eq() {
        let rest = f.div_exact(&IntPoly::x()).expect("x divides");
        let mut out = vec![IntPoly::x()];
        out.extend(factor_squarefree(&rest, opts)?);
        return Ok(out);
    }
    if n > opts.degree_cap {
        return Err(Error::DegreeCapExceeded { degree: n, cap: opts.degree_cap });
    }
    let Some((p, allowed)) = choose_prime(&f) else {
        return Err(Error::DegreeCapExceeded { degree: n, cap: opts.degree_cap });
    };
    if allowed.iter().all(|&d| d == 0 || d == n) {
        return Ok(vec![f]);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ p);
    let lc = f.lc().clone();
    let fp = modp::reduce(&f, p);
    let mods = modp::factor_squarefree(&modp::monic(&fp, p), p, &mut rng);
    if mods.len() == 1 {
        return Ok(vec![f]);
    }
    let bound = (mignotte_bound(&f) * &lc).abs() * 2u32 + 1u32;
    let mut modulus = Integer::from(p);
    while modulus <= bound {
        modulus *= p;
    }
    let lc_inv = lc.clone().invert(&modulus).expect("p does not divide lc");
    let fm = IntPoly::new(f.coeffs().iter().map(|c| (c * &lc_inv).complete().modulo(&modulus)).collect());
    let lifted = hensel_tree(&fm, &mods, p, &modulus);
    recombine(f, lifted, &modulus, &allowed, opts.recombination_budget)
}

/// Picks the prime with the fewest modular factors among a sample of good primes,
/// and intersects the achievable factor degrees across the sample.
fn choose_prime(f: &IntPoly) -> Option<(u64, BTreeSet<usize>)> {
    let n = f.degree();
    let df = f.derivative();
    let mut allowed: Option<Vec<bool>> = None;
    let mut best: Option<(usize, u64)> = None;
    let mut good = 0;
    for &p in small_primes().iter().skip(1) {
        if good >= 40 {
            break;
        }
        if f.lc().mod_u(p as u32) == 0 {
            continue;
        }
        let fp = modp::monic(&modp::reduce(f, p), p);
        if modp::gcd(&fp, &modp::reduce(&df, p), p).len() != 1 {
            continue;
        }
        good += 1;
        let mut sums = vec![false; n + 1];
        sums[0] = true;
        let mut count = 0;
        for (g, d) in modp::ddf(&fp, p) {
            let k = (g.len() - 1) / d;
            count += k;
            for _ in 0..k {
                for s in (d..=n).rev() {
                    if sums[s - d] {
                        sums[s] = true;
                    }
                }
            }
        }
        allowed = Some(match allowed {
            None => sums,
            Some(a) => a.iter().zip(&sums).map(|(x, y)| *x && *y).collect(),
        });
        if best.is_none_or(|(c, _)| count < c) {
            best = Some((count, p));
        }
        let a = allowed.as_ref().unwrap();
        if (1..n).all(|d| !a[d]) {
            break;
        }
    }
    let (_, p) = best?;
    let a = allowed?;
    Some((p, (0..=n).filter(|&d| a[d]).collect()))
}

fn mod_poly(a: &IntPoly, m: &Integer) -> IntPoly {
    IntPoly::new(a.coeffs().iter().map(|c| c.clone().modulo(m)).collect())
}

/// Lifts monic F = a*b (mod p) to monic factors mod `modulus` by linear Hensel steps.
fn hensel_pair(f: &IntPoly, a0: &Fp, b0: &Fp, p: u64, modulus: &Integer) -> (IntPoly, IntPoly) {
    let (g, s, t) = modp::ext_gcd(a0, b0, p);
    debug_assert_eq!(g, vec![1]);
    let mut a = modp::lift_symmetric(a0, p);
    let mut b = modp::lift_symmetric(b0, p);
    let mut pk = Integer::from(p);
    while pk < *modulus {
        let e = f.sub(&a.mul(&b));
        let e = mod_poly(&e, modulus);
        let e = IntPoly::new(e.coeffs().iter().map(|c| c.div_exact_ref(&pk).complete()).collect());
        let ep = modp::reduce(&e, p);
        let da = modp::rem(&modp::mul(&t, &ep, p), a0, p);
        let db = modp::rem(&modp::mul(&s, &ep, p), b0, p);
        a = a.add(&modp::lift_symmetric(&da, p).scale(&pk));
        b = b.add(&modp::lift_symmetric(&db, p).scale(&pk));
        pk *= p;
    }
    (mod_poly(&a, modulus), mod_poly(&b, modulus))
}

fn hensel_tree(f: &IntPoly, mods: &[Fp], p: u64, modulus: &Integer) -> Vec<IntPoly> {
    if mods.len() == 1 {
        return vec![mod_poly(f, modulus)];
    }
    let (l, r) = mods.split_at(mods.len() / 2);
    let a0 = l.iter().fold(vec![1u64], |acc, g| modp::mul(&acc, g, p));
    let b0 = r.iter().fold(vec![1u64], |acc, g| modp::mul(&acc, g, p));
    let (a, b) = hensel_pair(f, &a0, &b0, p, modulus);
    let mut out = hensel_tree(&a, l, p, modulus);
    out.extend(hensel_tree(&b, r, p, modulus));
    out
}

fn symmetric(c: &Integer, m: &Integer) -> Integer {
    let r = c.clone().modulo(m);
    if Integer::from(&r * 2u32) > *m {
        r - m
    } else {
        r
    }
}

fn recombine(
    mut f: IntPoly,
    mut lifted: Vec<IntPoly>,
    modulus: &Integer,
    allowed: &BTreeSet<usize>,
    budget: u64,
) -> Result<Vec<IntPoly>> {
    let mut found = Vec::new();
    let mut tried = 0u64;
    let mut s = 1;
    while 2 * s <= lifted.len() {
        let mut hit = None;
        let r = lifted.len();
        let mut idx: Vec<usize> = (0..s).collect();
        'subsets: loop {
            let deg: usize = idx.iter().map(|&i| lifted[i].degree()).sum();
            if allowed.contains(&deg) {
                tried += 1;
                if tried > budget {
                    return Err(Error::RecombinationBudget(tried));
                }
                let lc = f.lc().clone();
                let mut c0 = lc.clone();
                for &i in &idx {
                    c0 = (c0 * lifted[i].coeff(0)).modulo(modulus);
                }
                let c0 = symmetric(&c0, modulus);
                let f0 = f.coeff(0) * &lc;
                if c0.cmp0().is_ne() && f0.is_divisible(&c0) {
                    let mut g = IntPoly::constant(lc);
                    for &i in &idx {
                        g = mod_poly(&g.mul(&lifted[i]), modulus);
                    }
                    let g = IntPoly::new(g.coeffs().iter().map(|c| symmetric(c, modulus)).collect()).primitive();
                    if let Some(q) = f.div_exact(&g) {
                        hit = Some((idx.clone(), g, q));
                        break 'subsets;
                    }
                }
            }
            // next combination
            let mut k = s;
            loop {
                if k == 0 {
                    break 'subsets;
                }
                k -= 1;
                if idx[k] < r - s + k {
                    idx[k] += 1;
                    for j in k + 1..s {
                        idx[j] = idx[j - 1] + 1;
                    }
                    break;
                }
            }
        }
        match hit {
            Some((idx, g, q)) => {
                found.push(g);
                f = q.primitive();
                for &i in idx.iter().rev() {
                    lifted.remove(i);
                }
            }
            None => s += 1,
        }
    }
    if f.degree() > 0 {
        found.push(f);
    }
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn cyclotomic_split() {
        let f = factor_rationals(&UniPoly::from_i64s(&[-1, 0, 0, 0, 1])).unwrap();
        let fs: Vec<_> = f.factors.iter().map(|(g, _)| g.clone()).collect();
        assert_eq!(fs, vec![ip(&[-1, 1]), ip(&[1, 1]), ip(&[1, 0, 1])]);
    }

    #[test]
    fn selmer_five_irreducible() {
        let f = factor_rationals(&UniPoly::from_i64s(&[-1, -1, 0, 0, 0, 1])).unwrap();
        assert!(f.is_irreducible());
    }

    #[test]
    fn sophie_germain() {
        let f = factor_rationals(&UniPoly::from_i64s(&[4, 0, 0, 0, 1])).unwrap();
        let fs: Vec<_> = f.factors.iter().map(|(g, _)| g.clone()).collect();
        assert_eq!(fs, vec![ip(&[2, -2, 1]), ip(&[2, 2, 1])]);
    }

    #[test]
    fn non_monic_with_content_and_multiplicity() {
        // 6 (2x - 1)^2 (3x^2 + x + 7) (x + 5)
        let g = ip(&[-1, 2]).pow(2).mul(&ip(&[7, 1, 3])).mul(&ip(&[5, 1])).scale(&Integer::from(6));
        let f = factor_rationals(&g.to_unipoly()).unwrap();
        assert_eq!(f.unit, 6);
        assert_eq!(f.factors, vec![(ip(&[-1, 2]), 2), (ip(&[5, 1]), 1), (ip(&[7, 1, 3]), 1)]);
    }

    #[test]
    fn swinnerton_dyer_like() {
        // (x^2 - 2)(x^2 - 3) and the irreducible x^4 - 10x^2 + 1 split mod every prime
        let sd = ip(&[1, 0, -10, 0, 1]);
        assert!(is_irreducible(&sd, &FactorOptions::default()).unwrap());
        let f = ip(&[-2, 0, 1]).mul(&ip(&[-3, 0, 1])).mul(&sd);
        let fz = factor_rationals(&f.to_unipoly()).unwrap();
        assert_eq!(fz.factors.len(), 3);
    }

    #[test]
    fn degree_cap() {
        let mut c = vec![0i64; 70];
        c[0] = -1;
        c[1] = -1;
        c[69] = 1;
        let opts = FactorOptions { degree_cap: 64, ..Default::default() };
        assert!(matches!(
            factor_rationals_with(&UniPoly::from_i64s(&c), &opts),
            Err(Error::DegreeCapExceeded { .. })
        ));
    }

    #[test]
    fn refactoring_is_stable() {
        let f = ip(&[1, 1, -3, -1, 1]); // x^4 - x^3 - 3x^2 + x + 1
        let fz = factor_rationals(&f.to_unipoly()).unwrap();
        assert!(fz.is_irreducible());
        let again = factor_rationals(&fz.factors[0].0.to_unipoly()).unwrap();
        assert_eq!(again.factors, fz.factors);
    }
}
