//! Smooth hyperplane sections of smooth surfaces in P^3 with coefficients from a
//! prescribed finite sample of a set S.
//!
//! Smoothness of Z(f) is decided exactly through Macaulay's criterion: the partials
//! g_0, ..., g_n of f (forms of degree D - 1 in n + 1 variables) have no common
//! projective zero iff the degree-rho part of the ideal they generate is everything,
//! rho = (n + 1)(D - 2) + 1. The rank of that Macaulay matrix is computed modulo primes
//! p = 1 mod 4 (so Gaussian rationals reduce), which certifies full rank; a deficient
//! rank is confirmed by exact elimination over Q(i).

use std::collections::HashSet;

use rayon::prelude::*;
use rug::{Integer, Rational};
use serde::{Serialize, Serializer};

use crate::arith::modp;
use crate::arith::mpoly::MPoly;
use crate::arith::parse::print_mpoly;
use crate::arith::primes::{is_prime_u64, pow_mod};
use crate::arith::ring::{Field, GaussRat, Ring};
use crate::arith::unipoly::IntPoly;
use crate::chow::{ChowHeight, Hypersurface};
use crate::error::{Error, Result};
use crate::heights::{height_from_min_poly, DEFAULT_TOLERANCE};

fn to_gauss(f: &MPoly<Integer>) -> MPoly<GaussRat> {
    f.map(|c| GaussRat::real(Rational::from(c)))
}

/// Partials of f have no common zero in projective space over the algebraic closure.
pub fn is_smooth_form(f: &MPoly<GaussRat>) -> bool {
    let nv = f.nvars();
    let d = f.total_degree();
    if f.is_zero() {
        return false;
    }
    if d <= 1 {
        return true;
    }
    let partials: Vec<MPoly<GaussRat>> = (0..nv).map(|i| f.partial(i)).collect();
    let rho = nv as u32 * (d - 2) + 1;
    let cols = MPoly::<GaussRat>::monomials_of_degree(nv, rho);
    let col_index: std::collections::HashMap<&Vec<u32>, usize> = cols.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let shifts = MPoly::<GaussRat>::monomials_of_degree(nv, rho - (d - 1));
    let mut rows: Vec<Vec<(usize, GaussRat)>> = Vec::new();
    for g in &partials {
        if g.is_zero() {
            continue;
        }
        for s in &shifts {
            rows.push(
                g.terms()
                    .iter()
                    .map(|(e, c)| {
                        let m: Vec<u32> = e.iter().zip(s).map(|(a, b)| a + b).collect();
                        (col_index[&m], c.clone())
                    })
                    .collect(),
            );
        }
    }
    if rows.len() < cols.len() {
        return false;
    }
    for (p, r) in gaussian_primes().take(3) {
        if let Some(m) = reduce_rows(&rows, cols.len(), p, r) {
            if modp::rank(m, p) == cols.len() {
                return true;
            }
        }
    }
    exact_rank(&rows, cols.len()) == cols.len()
}

/// Primes p = 1 mod 4 below 2^31 with a square root of -1.
fn gaussian_primes() -> impl Iterator<Item = (u64, u64)> {
    (1u64..(1 << 31)).rev().filter(|p| p % 4 == 1 && is_prime_u64(*p)).map(|p| {
        let r = (2..p).map(|a| pow_mod(a, (p - 1) / 4, p)).find(|&r| r * r % p == p - 1).unwrap();
        (p, r)
    })
}

fn reduce_q(q: &Rational, p: u64) -> Option<u64> {
    let pi = Integer::from(p);
    let red = |n: &Integer| {
        let r = Integer::from(n % &pi);
        if r.cmp0().is_lt() { r + &pi } else { r }.to_u64().unwrap()
    };
    let den = red(q.denom());
    if den == 0 {
        return None;
    }
    let num = red(q.numer());
    Some(num * modp::inv(den, p) % p)
}

fn reduce_rows(rows: &[Vec<(usize, GaussRat)>], ncols: usize, p: u64, r: u64) -> Option<Vec<Vec<u64>>> {
    let mut out = Vec::with_capacity(rows.len());
    for row in rows {
        let mut v = vec![0u64; ncols];
        for (j, c) in row {
            v[*j] = (reduce_q(&c.re, p)? + reduce_q(&c.im, p)? * r) % p;
        }
        out.push(v);
    }
    Some(out)
}

fn exact_rank(rows: &[Vec<(usize, GaussRat)>], ncols: usize) -> usize {
    let mut m: Vec<Vec<GaussRat>> = rows
        .iter()
        .map(|row| {
            let mut v = vec![GaussRat::zero(); ncols];
            for (j, c) in row {
                v[*j] = c.clone();
            }
            v
        })
        .collect();
    let mut rank = 0;
    for c in 0..ncols {
        let Some(piv) = (rank..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(rank, piv);
        let iv = m[rank][c].inv();
        for x in m[rank].iter_mut() {
            *x = x.mul(&iv);
        }
        let pivot_row = m[rank].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != rank && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row).skip(c) {
                    *x = x.sub(&f.mul(y));
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Exact smoothness of a surface in P^3 (more generally of any hypersurface within the
/// desk-scale caps).
pub fn smoothness_check(x: &Hypersurface) -> Result<bool> {
    x.check_desk_scale()?;
    Ok(is_smooth_form(&to_gauss(x.form())))
}

/// h(s) for a Gaussian rational s.
pub fn element_height(s: &GaussRat) -> f64 {
    if s.is_real() {
        let (n, d) = (s.re.numer().clone().abs(), s.re.denom().clone());
        return if n.cmp0().is_eq() { 0.0 } else { n.max(d).to_f64().ln() };
    }
    // x^2 - 2 Re(s) x + |s|^2, cleared of denominators
    let c = [s.norm(), Rational::from(-2) * &s.re, Rational::from(1)];
    let den = c.iter().fold(Integer::from(1), |l, q| l.lcm(q.denom()));
    let f = IntPoly::new(c.iter().map(|q| q.numer() * Integer::from(&den / q.denom())).collect());
    // roots of unity: the enclosure contains 0, and ordering wants exactly 0
    height_from_min_poly(&f, DEFAULT_TOLERANCE)
        .map(|h| if h.lower() <= 0.0 { 0.0 } else { h.value })
        .unwrap_or(f64::INFINITY)
}

/// Parses entries such as `0`, `-1`, `1/2`, `i`, `-2i`, `1+i`, `3/2-i`.
pub fn parse_gauss(text: &str) -> Result<GaussRat> {
    let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || Error::InvalidArgument(format!("cannot read `{text}` as a Gaussian rational"));
    let rat = |s: &str| -> Result<Rational> {
        match s {
            "" | "+" => Ok(Rational::from(1)),
            "-" => Ok(Rational::from(-1)),
            _ => s.trim_start_matches('+').parse::<Rational>().map_err(|_| bad()),
        }
    };
    if let Some(body) = t.strip_suffix('i') {
        let body = body.strip_suffix('*').unwrap_or(body);
        // split at the last sign that is not the leading one
        let split = body.char_indices().skip(1).filter(|(_, c)| *c == '+' || *c == '-').map(|(i, _)| i).last();
        return match split {
            Some(k) => Ok(GaussRat::new(rat(&body[..k])?, rat(&body[k..])?)),
            None => Ok(GaussRat::new(Rational::new(), rat(body)?)),
        };
    }
    if t.is_empty() {
        return Err(bad());
    }
    Ok(GaussRat::real(rat(&t)?))
}

fn ser_gauss_vec<S: Serializer>(v: &[GaussRat], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|c| c.to_string()))
}

#[derive(Clone, Debug, Serialize)]
pub struct SectionCandidate {
    #[serde(serialize_with = "ser_gauss_vec")]
    pub hyperplane: Vec<GaussRat>,
    /// The coordinate solved for and removed.
    pub eliminated: usize,
    #[serde(skip)]
    pub section_form: MPoly<GaussRat>,
    /// In the remaining coordinates, renamed y0, y1, ...
    pub section_text: String,
    /// Position in the enumeration order (1-based).
    pub tried: usize,
}

impl SectionCandidate {
    pub fn degree(&self) -> u32 {
        self.section_form.total_degree()
    }
}

/// X ∩ {sum s_i x_i = 0} written in the coordinates other than the last with s_k != 0.
pub fn section_form(x: &Hypersurface, s: &[GaussRat]) -> Result<(usize, MPoly<GaussRat>)> {
    let n = x.ambient_dim();
    if s.len() != n + 1 {
        return Err(Error::InvalidArgument(format!("hyperplane needs {} coefficients", n + 1)));
    }
    let k = (0..=n).rev().find(|&i| !s[i].is_zero()).ok_or_else(|| Error::InvalidArgument("zero hyperplane".into()))?;
    let inv = s[k].inv().neg();
    let subs: Vec<MPoly<GaussRat>> = (0..=n)
        .map(|i| {
            if i == k {
                let mut e = MPoly::zero(n);
                for j in (0..=n).filter(|&j| j != k) {
                    let col = if j < k { j } else { j - 1 };
                    e = e.add(&MPoly::var(n, col).scale(&s[j].mul(&inv)));
                }
                e
            } else {
                MPoly::var(n, if i < k { i } else { i - 1 })
            }
        })
        .collect();
    Ok((k, to_gauss(x.form()).compose(&subs).normalize_gaussian()))
}

fn gauss_text(f: &MPoly<GaussRat>) -> String {
    let names: Vec<String> = (0..f.nvars()).map(|i| format!("y{i}")).collect();
    let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    if f.is_real() {
        let q = f.map(|c| c.re.clone());
        print_mpoly(&q.to_primitive_integer().1, &refs)
    } else {
        f.terms()
            .iter()
            .map(|(e, c)| {
                let mono: Vec<String> = e
                    .iter()
                    .enumerate()
                    .filter(|(_, &k)| k > 0)
                    .map(|(i, &k)| if k == 1 { refs[i].to_string() } else { format!("{}^{k}", refs[i]) })
                    .collect();
                format!("{c}*{}", mono.join("*"))
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

pub const MAX_CANDIDATES: usize = 1 << 20;

/// Tuples from `sample`^(N+1), one per projective point, ordered by the largest element
/// height and then lexicographically by position in `sample`.
pub fn enumerate_hyperplanes(n: usize, sample: &[GaussRat]) -> Result<Vec<Vec<GaussRat>>> {
    let k = sample.len();
    if k == 0 {
        return Err(Error::InvalidArgument("empty coefficient sample".into()));
    }
    let total = (k as f64).powi(n as i32 + 1);
    if total > MAX_CANDIDATES as f64 {
        return Err(Error::ScaleCap(format!("{total} coefficient tuples")));
    }
    let heights: Vec<f64> = sample.iter().map(element_height).collect();
    let mut tuples: Vec<(f64, Vec<usize>)> = Vec::new();
    let mut idx = vec![0usize; n + 1];
    loop {
        let h = idx.iter().map(|&i| heights[i]).fold(0.0, f64::max);
        tuples.push((h, idx.clone()));
        let mut j = n + 1;
        loop {
            if j == 0 {
                break;
            }
            j -= 1;
            idx[j] += 1;
            if idx[j] < k {
                break;
            }
            idx[j] = 0;
        }
        if idx.iter().all(|&i| i == 0) {
            break;
        }
    }
    tuples.sort_by(|a, b| a.0.total_cmp(&b.0).then_with(|| a.1.cmp(&b.1)));
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for (_, t) in tuples {
        let v: Vec<GaussRat> = t.iter().map(|&i| sample[i].clone()).collect();
        let Some(first) = v.iter().find(|c| !c.is_zero()) else { continue };
        let inv = first.inv();
        let key: Vec<GaussRat> = v.iter().map(|c| c.mul(&inv)).collect();
        if seen.insert(key) {
            out.push(v);
        }
    }
    Ok(out)
}

/// First hyperplane, in enumeration order, whose section of X is a smooth curve.
pub fn section_search(x: &Hypersurface, sample: &[GaussRat], budget: usize) -> Result<SectionCandidate> {
    if x.ambient_dim() != 3 {
        return Err(Error::InvalidArgument("X must be a surface in P^3".into()));
    }
    if !smoothness_check(x)? {
        return Err(Error::NotSmooth);
    }
    let all = enumerate_hyperplanes(3, sample)?;
    let tried = all.len().min(budget);
    all[..tried]
        .par_iter()
        .enumerate()
        .find_map_first(|(i, s)| {
            let (k, f) = section_form(x, s).ok()?;
            if f.total_degree() != x.degree() || !f.is_homogeneous() || !is_smooth_form(&f) {
                return None;
            }
            Some(SectionCandidate { hyperplane: s.clone(), eliminated: k, section_text: gauss_text(&f), section_form: f, tried: i + 1 })
        })
        .ok_or(Error::BudgetExhausted { tried })
}

/// (D - 1)(D - 2) / 2
pub fn plane_curve_genus(d: u32) -> u32 {
    (d.saturating_sub(1)) * (d.saturating_sub(2)) / 2
}

#[derive(Clone, Debug, Serialize)]
pub struct BoundReport {
    pub degree_x: u32,
    pub degree_c: u32,
    pub degree_ok: bool,
    pub genus: u32,
    /// (deg X)^2 + deg X
    pub genus_bound: u32,
    pub genus_ok: bool,
    /// Upper bound used for the Northcott number of S.
    pub northcott: f64,
    /// (deg X)(N + 1)(m(S) + 2): one hyperplane step.
    pub step_increment: f64,
    /// (dim X)(deg X)(N + 1)(m(S) + 2)
    pub curve_increment: f64,
    pub height_x: Option<ChowHeight>,
    /// h(X) + curve_increment, when h(X) was estimated.
    pub height_rhs: Option<f64>,
    /// Chow forms of space curves are out of scope.
    pub height_c: &'static str,
}

/// Degree, genus and height-bound bookkeeping for an accepted section of a surface.
pub fn section_bound_check(x: &Hypersurface, c: &SectionCandidate, northcott: f64, height_x: Option<ChowHeight>) -> BoundReport {
    let (deg, n, dim) = (x.degree(), x.ambient_dim() as f64, x.dim() as f64);
    let degree_c = c.degree();
    let genus = plane_curve_genus(degree_c);
    let genus_bound = deg * deg + deg;
    let step_increment = deg as f64 * (n + 1.0) * (northcott + 2.0);
    let curve_increment = dim * step_increment;
    let height_rhs = height_x.as_ref().map(|h| h.value + curve_increment);
    BoundReport {
        degree_x: deg,
        degree_c,
        degree_ok: degree_c <= deg,
        genus,
        genus_bound,
        genus_ok: genus <= genus_bound,
        northcott,
        step_increment,
        curve_increment,
        height_x,
        height_rhs,
        height_c: "not computed",
    }
}

/// Same as [`section_bound_check`], under its interface name.
pub fn theorem12_bound_check(x: &Hypersurface, c: &SectionCandidate, northcott: f64, height_x: Option<ChowHeight>) -> BoundReport {
    section_bound_check(x, c, northcott, height_x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hs(t: &str, n: usize) -> Hypersurface {
        Hypersurface::parse(t, Some(n)).unwrap()
    }

    fn sample(t: &str) -> Vec<GaussRat> {
        t.split(',').map(|s| parse_gauss(s).unwrap()).collect()
    }

    #[test]
    fn smoothness() {
        assert!(smoothness_check(&hs("x0^4+x1^4+x2^4+x3^4", 3)).unwrap());
        assert!(!smoothness_check(&hs("x0^2+x1^2-x2^2", 3)).unwrap());
        assert!(smoothness_check(&hs("x0^2+x1^2+x2^2+x3^2", 3)).unwrap());
        assert!(!smoothness_check(&hs("x0^3+x1^3+x2^3+x0*x1*x2", 3)).unwrap());
        // singular plane cubic (node at (0:0:1)) and a smooth one
        assert!(!smoothness_check(&hs("x1^2*x2-x0^3-x0^2*x2", 2)).unwrap());
        assert!(smoothness_check(&hs("x1^2*x2-x0^3-x0*x2^2-x2^3", 2)).unwrap());
    }

    #[test]
    fn gaussian_entries() {
        assert_eq!(parse_gauss("-i").unwrap(), GaussRat::i().neg());
        assert_eq!(parse_gauss("3/2-i").unwrap(), GaussRat::new(Rational::from((3, 2)), Rational::from(-1)));
        assert_eq!(parse_gauss("1+2*i").unwrap(), GaussRat::new(Rational::from(1), Rational::from(2)));
        assert_eq!(parse_gauss("-7").unwrap(), GaussRat::real(Rational::from(-7)));
        assert!(parse_gauss("x").is_err());
        assert_eq!(element_height(&GaussRat::i()), 0.0);
        assert!((element_height(&parse_gauss("1/2").unwrap()) - 2f64.ln()).abs() < 1e-15);
        // 1 + i: root of x^2 - 2x + 2, height log(2)/2
        assert!((element_height(&parse_gauss("1+i").unwrap()) - 0.5 * 2f64.ln()).abs() < 1e-12);
    }

    #[test]
    fn fermat_and_quadric_sections() {
        let f = hs("x0^4+x1^4+x2^4+x3^4", 3);
        let c = section_search(&f, &sample("1"), 10).unwrap();
        assert_eq!(c.hyperplane.len(), 4);
        assert_eq!(c.degree(), 4);
        let c = section_search(&f, &sample("0,1,-1"), 1000).unwrap();
        assert_eq!(c.tried, 1);
        let r = section_bound_check(&f, &c, 0.0, None);
        assert_eq!((r.genus, r.genus_bound), (3, 20));
        assert_eq!(r.curve_increment, 64.0);
        let q = hs("x0^2+x1^2+x2^2+x3^2", 3);
        let c = section_search(&q, &sample("0,1"), 100).unwrap();
        assert_eq!(c.hyperplane, sample("0,0,0,1"));
        let r = section_bound_check(&q, &c, 0.0, None);
        assert_eq!((r.genus, r.genus_bound), (0, 6));
        assert!(matches!(section_search(&hs("x0^2+x1^2-x2^2", 3), &sample("1"), 5), Err(Error::NotSmooth)));
    }

    #[test]
    fn section_with_gaussian_units() {
        let f = hs("x0^4+x1^4+x2^4+x3^4", 3);
        let (k, s) = section_form(&f, &sample("1,i,-1,-i")).unwrap();
        assert_eq!(k, 3);
        assert!(!s.is_real());
        assert!(s.is_homogeneous() && s.total_degree() == 4);
        // x0 + x1 + x2 + x3 = 0 gives a smooth plane quartic
        let (_, s) = section_form(&f, &sample("1,1,1,1")).unwrap();
        assert!(is_smooth_form(&s));
    }

    #[test]
    fn budget_and_genus_identity() {
        // every section of this singular-looking sample set is tested; tiny budget fails
        let f = hs("x0^4+x1^4+x2^4+x3^4", 3);
        let all = enumerate_hyperplanes(3, &sample("0,1,-1")).unwrap();
        assert_eq!(all.len(), 40);
        assert!(matches!(section_search(&f, &sample("0,1,-1"), 0), Err(Error::BudgetExhausted { tried: 0 })));
        for d in 1..=10u32 {
            assert!(plane_curve_genus(d) <= d * d + d);
        }
    }
}
