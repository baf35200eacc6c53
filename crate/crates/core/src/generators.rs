//! Small primitive integral generators of a number field.
//!
//! The field is Q(theta) with theta a root of a monic irreducible g, and the ring of
//! integers is described by a caller-supplied Z-basis. Elements are enumerated by
//! increasing sup-norm of their coordinates; the first primitive element whose height is
//! at most (1/d) log|disc| is returned. Existence of such an element is a theorem, and
//! the search radius is capped by a box that provably contains one.

use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;
use rug::float::Round;
use rug::ops::DivAssignRound;
use rug::{Float, Integer, Rational};
use serde::Serialize;

use crate::arith::ball::ComplexBall;
use crate::arith::factor::{is_irreducible, FactorOptions};
use crate::arith::resultant::discriminant_int;
use crate::arith::roots::{isolate_roots, RootOptions};
use crate::arith::squarefree::is_squarefree;
use crate::arith::sturm::real_root_count_int;
use crate::arith::unipoly::{IntPoly, UniPoly};
use crate::error::{Error, Result};
use crate::heights::{height_from_min_poly, locate_root, AlgebraicNumber, HeightValue, DEFAULT_TOLERANCE};

/// How the integral basis was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BasisSource {
    Supplied,
    /// Power basis, proven maximal because disc(g) is squarefree.
    PowerBasisCertified,
    /// Power basis taken as maximal on the caller's word.
    PowerBasisAssumed,
}

#[derive(Clone, Debug)]
pub struct NumberFieldSpec {
    defining_poly: IntPoly,
    /// basis[j][k]: coefficient of theta^k in the j-th basis element.
    basis: Vec<Vec<Rational>>,
    /// Inverse of the basis matrix; power-basis row vectors to basis coordinates.
    basis_inv: Vec<Vec<Rational>>,
    /// mult[i][j]: coordinates of b_i b_j.
    mult: Vec<Vec<Vec<Integer>>>,
    abs_disc: Integer,
    signature: (usize, usize),
    source: BasisSource,
    /// Roots of g: the r real ones, then one from each complex pair (positive imaginary part).
    embeddings: Vec<Complex64>,
}

/// Coordinates with respect to the integral basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct OrderElement {
    pub coords: Vec<i64>,
}

impl OrderElement {
    pub fn new(coords: Vec<i64>) -> Self {
        OrderElement { coords }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }
}

impl NumberFieldSpec {
    /// g monic irreducible; `basis` elements are polynomials in theta of degree < d.
    pub fn new(g: IntPoly, basis: Vec<UniPoly>, abs_disc: Integer) -> Result<Self> {
        Self::build(g, basis, abs_disc, BasisSource::Supplied)
    }

    /// Power basis 1, theta, ..., theta^(d-1), with |disc| = |disc(g)|.
    pub fn power_basis(g: IntPoly) -> Result<Self> {
        let d = g.degree();
        let disc = if d == 0 { Integer::from(1) } else { discriminant_int(&g)?.abs() };
        let source = if is_squarefree_integer(&disc) { BasisSource::PowerBasisCertified } else { BasisSource::PowerBasisAssumed };
        let basis = (0..d).map(|k| UniPoly::new(unit_vec(d, k))).collect();
        Self::build(g, basis, disc, source)
    }

    /// Power basis with a stated discriminant, which must equal |disc(g)|.
    pub fn with_disc(g: IntPoly, abs_disc: Integer) -> Result<Self> {
        let f = Self::power_basis(g)?;
        if f.abs_disc != abs_disc {
            return Err(Error::InconsistentBasis(format!(
                "|disc g| = {} differs from {abs_disc}; supply an integral basis",
                f.abs_disc
            )));
        }
        Ok(f)
    }

    fn build(g: IntPoly, basis: Vec<UniPoly>, abs_disc: Integer, source: BasisSource) -> Result<Self> {
        let d = g.degree();
        if g.is_zero() || d == 0 {
            return Err(Error::ConstantPolynomial);
        }
        if !g.is_monic() {
            return Err(Error::Hypothesis("defining polynomial must be monic".into()));
        }
        if !is_irreducible(&g, &FactorOptions::default())? {
            return Err(Error::Hypothesis(format!("{g} is reducible")));
        }
        if basis.len() != d {
            return Err(Error::InconsistentBasis(format!("{} basis elements for degree {d}", basis.len())));
        }
        if abs_disc.cmp0().is_le() {
            return Err(Error::InconsistentBasis("discriminant must be positive".into()));
        }
        let mut rows = Vec::with_capacity(d);
        for b in &basis {
            if !b.is_zero() && b.degree() >= d {
                return Err(Error::InconsistentBasis(format!("basis element {b} has degree >= {d}")));
            }
            rows.push((0..d).map(|k| b.coeff(k)).collect::<Vec<_>>());
        }
        let (basis_inv, det) =
            rat_inverse(&rows).ok_or_else(|| Error::InconsistentBasis("basis is linearly dependent".into()))?;
        // disc(basis) = det^2 disc(Z[theta])
        let disc_g = discriminant_int(&g)?.abs();
        let expect = Rational::from(det.square_ref()) * Rational::from(&disc_g);
        if expect != abs_disc {
            return Err(Error::InconsistentBasis(format!(
                "det(basis)^2 |disc g| = {expect} but |disc| = {abs_disc}"
            )));
        }
        let mut f = NumberFieldSpec {
            defining_poly: g,
            basis: rows,
            basis_inv,
            mult: Vec::new(),
            abs_disc,
            signature: (0, 0),
            source,
            embeddings: Vec::new(),
        };
        f.mult = f.multiplication_table()?;
        let r = real_root_count_int(&f.defining_poly);
        f.signature = (r, (d - r) / 2);
        f.embeddings = f.embedding_roots()?;
        Ok(f)
    }

    fn multiplication_table(&self) -> Result<Vec<Vec<Vec<Integer>>>> {
        let d = self.degree();
        let mut t = vec![vec![Vec::new(); d]; d];
        for i in 0..d {
            for j in i..d {
                let prod = mul_mod(&self.basis[i], &self.basis[j], &self.defining_poly);
                let c = row_times(&prod, &self.basis_inv);
                let mut ints = Vec::with_capacity(d);
                for q in c {
                    if *q.denom() != 1 {
                        return Err(Error::InconsistentBasis(format!(
                            "b_{i} b_{j} is not in the span of the basis (coordinate {q})"
                        )));
                    }
                    ints.push(q.into_numer_denom().0);
                }
                t[i][j] = ints.clone();
                t[j][i] = ints;
            }
        }
        // The span is a ring containing 1; it must also contain 1 itself for the
        // characteristic polynomials to be monic with integer coefficients.
        let one = row_times(&unit_vec(d, 0), &self.basis_inv);
        if one.iter().any(|q| *q.denom() != 1) {
            return Err(Error::InconsistentBasis("1 is not in the span of the basis".into()));
        }
        Ok(t)
    }

    fn embedding_roots(&self) -> Result<Vec<Complex64>> {
        let iso = isolate_roots(&self.defining_poly, &RootOptions::default())?;
        let mut real = Vec::new();
        let mut cplx = Vec::new();
        for (b, is_real) in iso.roots.iter().zip(&iso.real) {
            let z = b.to_c64();
            if *is_real {
                real.push(Complex64::new(z.re, 0.0));
            } else if z.im > 0.0 {
                cplx.push(z);
            }
        }
        real.extend(cplx);
        Ok(real)
    }

    pub fn defining_poly(&self) -> &IntPoly {
        &self.defining_poly
    }

    pub fn degree(&self) -> usize {
        self.defining_poly.degree()
    }

    pub fn abs_disc(&self) -> &Integer {
        &self.abs_disc
    }

    /// (r, s): real embeddings and complex pairs.
    pub fn signature(&self) -> (usize, usize) {
        self.signature
    }

    pub fn basis_source(&self) -> BasisSource {
        self.source
    }

    /// Coefficients of e in the power basis.
    pub fn to_power_basis(&self, e: &OrderElement) -> Result<Vec<Rational>> {
        self.check(e)?;
        let d = self.degree();
        let mut v = vec![Rational::new(); d];
        for (c, row) in e.coords.iter().zip(&self.basis) {
            for k in 0..d {
                v[k] += Rational::from(*c) * &row[k];
            }
        }
        Ok(v)
    }

    fn check(&self, e: &OrderElement) -> Result<()> {
        if e.coords.len() != self.degree() {
            return Err(Error::InvalidArgument(format!("{} coordinates for degree {}", e.coords.len(), self.degree())));
        }
        Ok(())
    }

    /// Matrix of multiplication by e in the integral basis (row i: coordinates of e b_i).
    fn mult_matrix(&self, e: &OrderElement) -> Vec<Vec<Integer>> {
        let d = self.degree();
        let mut m = vec![vec![Integer::new(); d]; d];
        for (j, &c) in e.coords.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for (i, row) in m.iter_mut().enumerate() {
                for (k, x) in row.iter_mut().enumerate() {
                    *x += Integer::from(&self.mult[j][i][k] * c);
                }
            }
        }
        m
    }

    /// Images of e under the embeddings listed in `embeddings`, in double precision.
    fn embed(&self, e: &OrderElement) -> Vec<Complex64> {
        let v: Vec<f64> = self.to_power_basis(e).unwrap().iter().map(|q| q.to_f64()).collect();
        self.embeddings.iter().map(|&z| v.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &a| acc * z + a)).collect()
    }

    /// Real coordinate matrix of the Minkowski embedding: row j holds the real and
    /// imaginary parts of the images of b_j.
    fn minkowski_matrix(&self) -> Vec<Vec<f64>> {
        let (r, _) = self.signature;
        let d = self.degree();
        (0..d)
            .map(|j| {
                let img = self.embed(&OrderElement::new(unit_i64(d, j)));
                let mut row: Vec<f64> = img[..r].iter().map(|z| z.re).collect();
                for z in &img[r..] {
                    row.push(z.re);
                    row.push(z.im);
                }
                row
            })
            .collect()
    }
}

/// Characteristic polynomial of multiplication by e: monic, integer, degree d.
pub fn char_poly(e: &OrderElement, f: &NumberFieldSpec) -> Result<IntPoly> {
    f.check(e)?;
    Ok(faddeev_leverrier(&f.mult_matrix(e)))
}

/// L = Q(e) exactly when the characteristic polynomial of e is squarefree.
pub fn is_primitive(e: &OrderElement, f: &NumberFieldSpec) -> bool {
    char_poly(e, f).map(|p| is_squarefree(&p)).unwrap_or(false)
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct MinkowskiBox {
    /// (pi/4)(2/pi)^s sqrt|disc|
    pub threshold: f64,
    /// The box argument applies to totally complex fields only.
    pub applicable: bool,
}

pub fn minkowski_box_t(f: &NumberFieldSpec) -> MinkowskiBox {
    let (r, s) = f.signature;
    let threshold = PI / 4.0 * (2.0 / PI).powi(s as i32) * f.abs_disc.to_f64().sqrt();
    MinkowskiBox { threshold, applicable: r == 0 && s > 0 }
}

/// (1/d) log|disc|, rounded up.
pub fn discriminant_bound(f: &NumberFieldSpec) -> f64 {
    let mut x = Float::with_val(128, &f.abs_disc);
    x.ln_round(Round::Up);
    x.div_assign_round(f.degree() as u32, Round::Up);
    x.to_f64_round(Round::Up)
}

#[derive(Clone, Debug, Serialize)]
pub struct GeneratorResult {
    pub element: OrderElement,
    #[serde(skip)]
    pub number: AlgebraicNumber,
    #[serde(serialize_with = "ser_display")]
    pub min_poly: IntPoly,
    pub approx: ComplexBall,
    pub height: HeightValue,
    pub bound: f64,
    /// Sup-norm shell of the hit.
    pub radius: i64,
    pub radius_cap: i64,
    pub candidates: usize,
}

fn ser_display<S: serde::Serializer, T: std::fmt::Display>(v: &T, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

#[derive(Clone, Debug, Default)]
pub struct SearchOptions {
    /// Overrides the radius cap derived from the field.
    pub max_radius: Option<i64>,
    pub tolerance: Option<f64>,
}

/// Coordinate radius of a box certain to contain a qualifying element.
///
/// Totally complex fields: twice the coordinate radius of the convex body from the
/// Minkowski argument. Otherwise: any integral alpha with h(alpha) <= (1/d) log|disc|
/// has all conjugates of modulus at most |disc|, which bounds the coordinates.
pub fn search_radius_cap(f: &NumberFieldSpec) -> i64 {
    let d = f.degree();
    if d == 1 {
        return 1;
    }
    let inv = f64_inverse(&f.minkowski_matrix());
    // column sums |inv[k][j]| weighted by the bound on the k-th real coordinate
    let mb = minkowski_box_t(f);
    let weights: Vec<f64> = if mb.applicable {
        let t = mb.threshold * (1.0 + 1e-9);
        (0..d).map(|k| if k == 1 { t } else { 1.0 }).collect()
    } else {
        vec![f.abs_disc.to_f64(); d]
    };
    let rad = (0..d).map(|j| (0..d).map(|k| inv[k][j].abs() * weights[k]).sum::<f64>()).fold(0.0, f64::max);
    let rad = if mb.applicable { 2.0 * rad } else { rad };
    (rad * (1.0 + 1e-9)).ceil().max(1.0) as i64
}

/// First nonzero primitive element, in shell-then-colexicographic order, with height at
/// most (1/d) log|disc|.
pub fn search_small_generator(f: &NumberFieldSpec, opts: &SearchOptions) -> Result<GeneratorResult> {
    let d = f.degree();
    let bound = discriminant_bound(f);
    let tol = opts.tolerance.unwrap_or(DEFAULT_TOLERANCE);
    let cap = opts.max_radius.unwrap_or_else(|| search_radius_cap(f));
    let mut best: Option<(f64, Vec<i64>)> = None;
    let mut tested = 0;
    for radius in 1..=cap {
        let shell = shell_vectors(d, radius);
        tested += shell.len();
        let evaluated: Vec<Option<(IntPoly, HeightValue)>> = shell
            .par_iter()
            .map(|c| {
                let e = OrderElement::new(c.clone());
                let p = char_poly(&e, f).ok()?;
                if !is_squarefree(&p) {
                    return None;
                }
                let h = height_from_min_poly(&p, tol).ok()?;
                Some((p, h))
            })
            .collect();
        for (c, ev) in shell.iter().zip(&evaluated) {
            let Some((p, h)) = ev else { continue };
            if h.upper() <= bound {
                let element = OrderElement::new(c.clone());
                let number = realize(f, &element, p)?;
                return Ok(GeneratorResult {
                    element,
                    min_poly: p.clone(),
                    approx: number.approx.clone(),
                    number,
                    height: h.clone(),
                    bound,
                    radius,
                    radius_cap: cap,
                    candidates: tested,
                });
            }
            if best.as_ref().is_none_or(|(bh, _)| h.value < *bh) {
                best = Some((h.value, c.clone()));
            }
        }
    }
    Err(Error::SearchBudgetExceeded { radius: cap, best: best.map(|(_, c)| c) })
}

/// The image of e under the first embedding, as an isolated root of its minimal polynomial.
fn realize(f: &NumberFieldSpec, e: &OrderElement, min_poly: &IntPoly) -> Result<AlgebraicNumber> {
    let v = f.to_power_basis(e)?;
    let den = v.iter().fold(Integer::from(1), |l, q| l.lcm(q.denom()));
    let num = IntPoly::new(v.iter().map(|q| q.numer() * Integer::from(&den / q.denom())).collect());
    let theta = &f.embeddings[0];
    let g = &f.defining_poly;
    let target = |prec: u32| -> Result<ComplexBall> {
        let iso = isolate_roots(g, &RootOptions { precision: prec, ..Default::default() })?;
        let root = iso
            .roots
            .iter()
            .min_by(|a, b| (a.to_c64() - theta).norm().total_cmp(&(b.to_c64() - theta).norm()))
            .ok_or(Error::ConstantPolynomial)?;
        let inv = ComplexBall::from_integer(prec, &den).recip().ok_or(Error::DivisionByZero)?;
        Ok(ComplexBall::eval_int_poly(&num, root).mul(&inv))
    };
    let (_, ball) = locate_root(std::slice::from_ref(min_poly), target)?;
    // squarefree char poly of an element of an irreducible field is its minimal polynomial
    AlgebraicNumber::new(min_poly.clone(), ball, true)
}

/// All vectors of Z^d with sup-norm exactly `radius`, in colexicographic order (last
/// coordinate most significant) where each coordinate runs 0, 1, -1, 2, -2, ...
/// Low powers of theta thus come before high ones.
pub fn shell_vectors(d: usize, radius: i64) -> Vec<Vec<i64>> {
    let vals: Vec<i64> = std::iter::once(0).chain((1..=radius).flat_map(|k| [k, -k])).collect();
    let mut out = Vec::new();
    let mut idx = vec![0usize; d];
    loop {
        let v: Vec<i64> = idx.iter().map(|&i| vals[i]).collect();
        if v.iter().any(|c| c.abs() == radius) {
            out.push(v.into_iter().rev().collect());
        }
        let mut k = d;
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < vals.len() {
                break;
            }
            idx[k] = 0;
        }
    }
}

/// det(xI - M) for an integer matrix; every division is exact.
fn faddeev_leverrier(m: &[Vec<Integer>]) -> IntPoly {
    let n = m.len();
    let mut coeffs = vec![Integer::new(); n + 1];
    coeffs[n] = Integer::from(1);
    // M_k = M (M_{k-1} + c_{n-k+1} I), c_{n-k} = -tr(M_k) / k
    let mut mk: Vec<Vec<Integer>> = vec![vec![Integer::new(); n]; n];
    for k in 1..=n {
        let mut prev = mk.clone();
        for (i, row) in prev.iter_mut().enumerate() {
            row[i] += &coeffs[n - k + 1];
        }
        mk = mat_mul(m, &prev);
        let tr: Integer = (0..n).map(|i| mk[i][i].clone()).sum();
        coeffs[n - k] = -(tr.div_exact(&Integer::from(k)));
    }
    IntPoly::new(coeffs)
}

fn mat_mul(a: &[Vec<Integer>], b: &[Vec<Integer>]) -> Vec<Vec<Integer>> {
    let n = a.len();
    let mut c = vec![vec![Integer::new(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].cmp0().is_eq() {
                continue;
            }
            for j in 0..n {
                c[i][j] += Integer::from(&a[i][k] * &b[k][j]);
            }
        }
    }
    c
}

/// a b mod g, on coefficient vectors of length deg g.
fn mul_mod(a: &[Rational], b: &[Rational], g: &IntPoly) -> Vec<Rational> {
    let d = g.degree();
    let mut p = vec![Rational::new(); 2 * d];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            p[i + j] += Rational::from(x * y);
        }
    }
    for top in (d..2 * d).rev() {
        let c = std::mem::take(&mut p[top]);
        if c.cmp0().is_eq() {
            continue;
        }
        // theta^top = -sum g_k theta^(top-d+k)
        for k in 0..d {
            p[top - d + k] -= Rational::from(&c * g.coeff(k));
        }
    }
    p.truncate(d);
    p
}

fn row_times(v: &[Rational], m: &[Vec<Rational>]) -> Vec<Rational> {
    let n = m[0].len();
    (0..n).map(|j| v.iter().zip(m).map(|(x, row)| Rational::from(x * &row[j])).sum()).collect()
}

/// Inverse and determinant of a rational square matrix, or None if singular.
fn rat_inverse(m: &[Vec<Rational>]) -> Option<(Vec<Vec<Rational>>, Rational)> {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m
        .iter()
        .enumerate()
        .map(|(i, r)| r.iter().cloned().chain(unit_vec(n, i)).collect())
        .collect();
    let mut det = Rational::from(1);
    for col in 0..n {
        let piv = (col..n).find(|&r| a[r][col].cmp0().is_ne())?;
        if piv != col {
            a.swap(piv, col);
            det = -det;
        }
        let p = a[col][col].clone();
        det *= &p;
        for x in a[col].iter_mut() {
            *x /= &p;
        }
        for r in 0..n {
            if r != col && a[r][col].cmp0().is_ne() {
                let factor = a[r][col].clone();
                for c in 0..2 * n {
                    let t = Rational::from(&factor * &a[col][c]);
                    a[r][c] -= t;
                }
            }
        }
    }
    Some((a.into_iter().map(|r| r[n..].to_vec()).collect(), det))
}

fn f64_inverse(m: &[Vec<f64>]) -> Vec<Vec<f64>> {
    let n = m.len();
    let mut a: Vec<Vec<f64>> = m
        .iter()
        .enumerate()
        .map(|(i, r)| r.iter().copied().chain((0..n).map(|j| if i == j { 1.0 } else { 0.0 })).collect())
        .collect();
    for col in 0..n {
        let piv = (col..n).max_by(|&x, &y| a[x][col].abs().total_cmp(&a[y][col].abs())).unwrap();
        a.swap(piv, col);
        let p = a[col][col];
        for x in a[col].iter_mut() {
            *x /= p;
        }
        for r in 0..n {
            if r != col {
                let factor = a[r][col];
                for c in 0..2 * n {
                    a[r][c] -= factor * a[col][c];
                }
            }
        }
    }
    a.into_iter().map(|r| r[n..].to_vec()).collect()
}

fn unit_vec(n: usize, i: usize) -> Vec<Rational> {
    (0..n).map(|j| Rational::from((j == i) as i32)).collect()
}

fn unit_i64(n: usize, i: usize) -> Vec<i64> {
    (0..n).map(|j| (j == i) as i64).collect()
}

fn is_squarefree_integer(n: &Integer) -> bool {
    let n = n.clone().abs();
    let mut p = Integer::from(2);
    while Integer::from(p.square_ref()) <= n {
        if n.is_divisible(&Integer::from(p.square_ref())) {
            return false;
        }
        p += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field(c: &[i64]) -> NumberFieldSpec {
        NumberFieldSpec::power_basis(IntPoly::from_i64s(c)).unwrap()
    }

    #[test]
    fn char_polys_in_q_sqrt2() {
        let f = field(&[-2, 0, 1]);
        assert_eq!(char_poly(&OrderElement::new(vec![0, 1]), &f).unwrap(), IntPoly::from_i64s(&[-2, 0, 1]));
        assert_eq!(char_poly(&OrderElement::new(vec![1, 0]), &f).unwrap(), IntPoly::from_i64s(&[-1, 1]).pow(2));
        assert_eq!(char_poly(&OrderElement::new(vec![1, 1]), &f).unwrap(), IntPoly::from_i64s(&[-1, -2, 1]));
        assert!(is_primitive(&OrderElement::new(vec![0, 1]), &f));
        assert!(!is_primitive(&OrderElement::new(vec![1, 0]), &f));
        // theta^2 = 2
        assert!(!is_primitive(&OrderElement::new(vec![2, 0]), &f));
        assert_eq!(f.signature(), (2, 0));
    }

    #[test]
    fn minkowski_thresholds() {
        let t = minkowski_box_t(&field(&[1, 0, 1]));
        assert!((t.threshold - 1.0).abs() < 1e-15 && t.applicable);
        let t = minkowski_box_t(&field(&[1, 1, 1, 1, 1]));
        assert!((t.threshold - 3.558812717085885).abs() < 1e-12 && t.applicable);
        assert!(!minkowski_box_t(&field(&[-2, 0, 1])).applicable);
    }

    #[test]
    fn desk_fields() {
        let o = SearchOptions::default();
        let r = search_small_generator(&field(&[1, 0, 1]), &o).unwrap();
        assert_eq!(r.element.coords, vec![0, 1]);
        assert!(r.height.value < 1e-12);
        let r = search_small_generator(&field(&[-2, 0, 1]), &o).unwrap();
        assert!((r.height.value - 0.5 * 2f64.ln()).abs() < 1e-12);
        assert!((r.bound - 8f64.ln() / 2.0).abs() < 1e-12);
        let r = search_small_generator(&field(&[-1, -1, 0, 1]), &o).unwrap();
        assert_eq!(r.element.coords, vec![0, 1, 0]);
        assert!((r.height.value - 0.093_733_191_440_987_28).abs() < 1e-12);
        assert!((r.number.to_c64().re - 1.324717957244746).abs() < 1e-12);
        let r = search_small_generator(&field(&[1, 1, 1, 1, 1]), &o).unwrap();
        assert!(r.height.value < 1e-12 && r.radius == 1);
    }

    #[test]
    fn degree_one_returns_one() {
        let r = search_small_generator(&field(&[-5, 1]), &SearchOptions::default()).unwrap();
        assert_eq!(r.element.coords, vec![1]);
        assert_eq!(r.height.value, 0.0);
        assert_eq!(r.bound, 0.0);
    }

    #[test]
    fn supplied_basis_for_sqrt5() {
        // O = Z[(1 + sqrt 5)/2], disc 5; the power basis has index 2
        let g = IntPoly::from_i64s(&[-5, 0, 1]);
        let half = Rational::from((1, 2));
        let basis = vec![UniPoly::from_i64s(&[1]), UniPoly::new(vec![half.clone(), half])];
        let f = NumberFieldSpec::new(g.clone(), basis, Integer::from(5)).unwrap();
        let w = OrderElement::new(vec![0, 1]);
        assert_eq!(char_poly(&w, &f).unwrap(), IntPoly::from_i64s(&[-1, -1, 1]));
        let r = search_small_generator(&f, &SearchOptions::default()).unwrap();
        assert!(r.height.upper() <= 5f64.ln() / 2.0);
        assert!(NumberFieldSpec::with_disc(g.clone(), Integer::from(5)).is_err());
        // a non-integral element in the basis
        let bad = vec![UniPoly::from_i64s(&[1]), UniPoly::new(vec![Rational::new(), Rational::from((1, 2))])];
        assert!(matches!(NumberFieldSpec::new(g, bad, Integer::from(5)), Err(Error::InconsistentBasis(_))));
    }

    #[test]
    fn char_poly_vanishes_at_embeddings() {
        let f = field(&[1, 1, 1, 1, 1]);
        let e = OrderElement::new(vec![3, -1, 2, 5]);
        let p = char_poly(&e, &f).unwrap();
        let pf: Vec<f64> = p.coeffs().iter().map(|c| c.to_f64()).collect();
        for z in f.embed(&e) {
            let v = pf.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &a| acc * z + a);
            assert!(v.norm() < 1e-6 * pf.iter().map(|c| c.abs()).sum::<f64>());
        }
    }

    #[test]
    fn shells() {
        assert_eq!(shell_vectors(2, 1), vec![vec![1, 0], vec![-1, 0], vec![0, 1], vec![1, 1], vec![-1, 1], vec![0, -1], vec![1, -1], vec![-1, -1]]);
        assert_eq!(shell_vectors(3, 2).len(), 125 - 27);
        assert!(is_squarefree_integer(&Integer::from(23)) && !is_squarefree_integer(&Integer::from(125)));
    }
}
