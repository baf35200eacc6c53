use num_complex::Complex64;
use rug::{Integer, Rational};
use serde::Serialize;

use super::sphere::sphere_log_integral;
use super::{correction_term, ChowHeight};
use crate::arith::mpoly::MPoly;
use crate::arith::parse::{parse_mpoly, print_mpoly};
use crate::error::{Error, Result};

pub const MAX_AMBIENT: usize = 3;
pub const MAX_DEGREE: u32 = 4;

/// Z(f) in P^N, f a primitive integer form in x0..xN.
#[derive(Clone, Debug, PartialEq)]
pub struct Hypersurface {
    n: usize,
    form: MPoly<Integer>,
}

impl Serialize for Hypersurface {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(&self.to_string())
    }
}

impl std::fmt::Display for Hypersurface {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let names = var_names(self.n);
        let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        write!(f, "{}", print_mpoly(&self.form, &refs))
    }
}

fn var_names(n: usize) -> Vec<String> {
    (0..=n).map(|i| format!("x{i}")).collect()
}

impl Hypersurface {
    pub fn new(form: MPoly<Integer>) -> Result<Self> {
        if form.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if form.nvars() < 2 {
            return Err(Error::InvalidArgument("need at least two homogeneous coordinates".into()));
        }
        if !form.is_homogeneous() {
            return Err(Error::InvalidArgument("form is not homogeneous".into()));
        }
        if form.total_degree() == 0 {
            return Err(Error::ConstantPolynomial);
        }
        Ok(Hypersurface { n: form.nvars() - 1, form: form.primitive() })
    }

    pub fn from_rational(form: &MPoly<Rational>) -> Result<Self> {
        Self::new(form.to_primitive_integer().1)
    }

    /// Variables x0, x1, ...; N defaults to the largest index present.
    pub fn parse(text: &str, ambient: Option<usize>) -> Result<Self> {
        let n = match ambient {
            Some(n) => n,
            None => max_var_index(text).ok_or_else(|| Error::InvalidArgument("no variables x0, x1, ...".into()))?.max(1),
        };
        let names = var_names(n);
        let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        Self::from_rational(&parse_mpoly(text, &refs)?)
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.n - 1
    }

    pub fn degree(&self) -> u32 {
        self.form.total_degree()
    }

    pub fn form(&self) -> &MPoly<Integer> {
        &self.form
    }

    pub fn check_desk_scale(&self) -> Result<()> {
        if self.n > MAX_AMBIENT || self.degree() > MAX_DEGREE {
            return Err(Error::ScaleCap(format!(
                "P^{} and degree {} (caps P^{MAX_AMBIENT}, degree {MAX_DEGREE})",
                self.n,
                self.degree()
            )));
        }
        Ok(())
    }

    /// Exact Chow form in N blocks of N+1 dual variables, before division by its content.
    /// The point cut out by N hyperplanes has the signed maximal minors as coordinates.
    fn chow_form_raw(&self) -> MPoly<Integer> {
        let n = self.n;
        let nv = n * (n + 1);
        let u = |b: usize, i: usize| MPoly::<Integer>::var(nv, b * (n + 1) + i);
        let minors: Vec<MPoly<Integer>> = (0..=n)
            .map(|col| {
                let cols: Vec<usize> = (0..=n).filter(|&c| c != col).collect();
                let mut det = MPoly::zero(nv);
                for (perm, sign) in permutations(n) {
                    let mut t = MPoly::constant(nv, Integer::from(sign));
                    for (row, &k) in perm.iter().enumerate() {
                        t = t.mul(&u(row, cols[k]));
                    }
                    det = det.add(&t);
                }
                if col % 2 == 1 {
                    det.neg()
                } else {
                    det
                }
            })
            .collect();
        self.form.compose(&minors)
    }

    /// Primitive integer Chow form.
    pub fn chow_form(&self) -> Result<MPoly<Integer>> {
        self.check_desk_scale()?;
        Ok(self.chow_form_raw().primitive())
    }

    pub fn chow_height(&self, samples: u64, seed: u64) -> Result<ChowHeight> {
        self.check_desk_scale()?;
        let raw = self.chow_form_raw();
        // log|F| = log|f(minors)| - log content(f o minors)
        let log_content = raw.content().to_f64().ln();
        let n = self.n;
        let terms: Vec<(f64, Vec<u32>)> = self.form.terms().iter().map(|(e, c)| (c.to_f64(), e.clone())).collect();
        let perms = permutations(n);
        let integral = sphere_log_integral(
            |u: &[Complex64]| {
                let mut x = [Complex64::new(0.0, 0.0); MAX_AMBIENT + 1];
                for col in 0..=n {
                    let cols: Vec<usize> = (0..=n).filter(|&c| c != col).collect();
                    let mut det = Complex64::new(0.0, 0.0);
                    for (perm, sign) in &perms {
                        let mut t = Complex64::new(*sign as f64, 0.0);
                        for (row, &k) in perm.iter().enumerate() {
                            t *= u[row * (n + 1) + cols[k]];
                        }
                        det += t;
                    }
                    x[col] = if col % 2 == 1 { -det } else { det };
                }
                let v: Complex64 = terms
                    .iter()
                    .map(|(c, e)| e.iter().enumerate().fold(Complex64::new(*c, 0.0), |t, (j, &k)| t * x[j].powu(k)))
                    .sum();
                v.norm().ln() - log_content
            },
            n,
            n,
            samples,
            seed,
        );
        Ok(ChowHeight::assemble(correction_term(n, self.dim(), self.degree() as usize), integral))
    }
}

pub(crate) fn max_var_index(text: &str) -> Option<usize> {
    let b = text.as_bytes();
    let mut best = None;
    for (i, &c) in b.iter().enumerate() {
        if c == b'x' && (i == 0 || !b[i - 1].is_ascii_alphanumeric()) {
            let digits: String = b[i + 1..].iter().take_while(|d| d.is_ascii_digit()).map(|&d| d as char).collect();
            if let Ok(k) = digits.parse::<usize>() {
                best = Some(best.map_or(k, |m: usize| m.max(k)));
            }
        }
    }
    best
}

/// Permutations of 0..n with their signs.
fn permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    if n == 0 {
        return vec![(Vec::new(), 1)];
    }
    let mut out = Vec::new();
    for (p, s) in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            // inserting the largest element at pos adds (len - pos) inversions
            let sign = if (p.len() - pos) % 2 == 0 { s } else { -s };
            out.push((q, sign));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const S: u64 = 200_000;

    #[test]
    fn signs_of_permutations() {
        let p = permutations(3);
        assert_eq!(p.len(), 6);
        assert_eq!(p.iter().map(|(_, s)| s).sum::<i64>(), 0);
        let id = p.iter().find(|(q, _)| q == &vec![0, 1, 2]).unwrap();
        assert_eq!(id.1, 1);
        let sw = p.iter().find(|(q, _)| q == &vec![1, 0, 2]).unwrap();
        assert_eq!(sw.1, -1);
    }

    #[test]
    fn coordinate_line_and_plane() {
        let l = Hypersurface::parse("x0", Some(2)).unwrap();
        assert_eq!(l.chow_form().unwrap().num_terms(), 2);
        let h = l.chow_height(S, 1).unwrap();
        assert!(h.agrees_with(0.5, 3.0), "{h:?}");
        let p = Hypersurface::parse("x0", Some(3)).unwrap().chow_height(S, 1).unwrap();
        assert!(p.agrees_with(1.25, 3.0), "{p:?}");
    }

    #[test]
    fn conic_invariances() {
        let a = Hypersurface::parse("x0^2+x1^2-x2^2", None).unwrap();
        let b = Hypersurface::parse("7*x0^2+7*x1^2-7*x2^2", None).unwrap();
        let c = Hypersurface::parse("x2^2+x0^2-x1^2", None).unwrap();
        assert_eq!(a, b);
        let ha = a.chow_height(S, 2).unwrap();
        let hc = c.chow_height(S, 3).unwrap();
        assert!((ha.value - hc.value).abs() <= 3.0 * ha.std_error.hypot(hc.std_error));
        assert!((ha.value - 2.0).abs() < 0.02 && ha.value >= 0.0);
    }

    #[test]
    fn caps_and_validation() {
        assert!(matches!(Hypersurface::parse("x0^5+x1^5", None).unwrap().chow_height(10, 0), Err(Error::ScaleCap(_))));
        assert!(Hypersurface::parse("x0^2+x1", None).is_err());
        assert_eq!(max_var_index("x0^4+x13*x2"), Some(13));
    }
}
