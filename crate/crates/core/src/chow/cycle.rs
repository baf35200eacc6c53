use num_complex::Complex64;
use rug::Integer;
use serde::Serialize;

use super::hypersurface::Hypersurface;
use super::sphere::sphere_log_integral;
use super::{correction_term, ChowHeight};
use crate::arith::factor::factor_rationals;
use crate::arith::mpoly::MPoly;
use crate::arith::parse::print_mpoly;
use crate::arith::unipoly::IntPoly;
use crate::error::{Error, Result};
use crate::heights::ProjectivePoint;

#[derive(Clone, Debug, Serialize)]
pub struct CycleComponent {
    /// Primitive u-form of one Galois orbit of points.
    #[serde(skip)]
    pub form: MPoly<Integer>,
    pub form_text: String,
    pub multiplicity: u32,
    pub degree: u32,
    /// The point, when it is rational.
    pub point: Option<ProjectivePoint>,
}

/// A 0-cycle of P^N through its u-form, the product of its components.
#[derive(Clone, Debug, Serialize)]
pub struct ZeroCycleChow {
    pub n: usize,
    #[serde(skip)]
    pub u_form: MPoly<Integer>,
    pub components: Vec<CycleComponent>,
}

fn u_names(n: usize) -> Vec<String> {
    (0..=n).map(|i| format!("u{i}")).collect()
}

fn describe(form: &MPoly<Integer>, n: usize) -> String {
    let names = u_names(n);
    let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    print_mpoly(form, &refs)
}

fn linear_form(x: &[Integer]) -> MPoly<Integer> {
    let n = x.len();
    let mut f = MPoly::zero(n);
    for (i, c) in x.iter().enumerate() {
        let mut e = vec![0; n];
        e[i] = 1;
        f.add_term(e, c.clone());
    }
    f
}

impl ZeroCycleChow {
    fn from_components(n: usize, components: Vec<CycleComponent>) -> Self {
        let mut u_form = MPoly::constant(n + 1, Integer::from(1));
        for c in &components {
            u_form = u_form.mul(&c.form.pow(c.multiplicity));
        }
        ZeroCycleChow { n, u_form: u_form.primitive(), components }
    }

    /// Sum of the given rational points, each with multiplicity one.
    pub fn from_points(points: &[ProjectivePoint]) -> Result<Self> {
        let n = points.first().ok_or_else(|| Error::InvalidArgument("empty cycle".into()))?.dim();
        if points.iter().any(|p| p.dim() != n) {
            return Err(Error::InvalidArgument("points live in different spaces".into()));
        }
        let comps = points
            .iter()
            .map(|p| {
                let form = linear_form(p.coords()).primitive();
                CycleComponent { form_text: describe(&form, n), form, multiplicity: 1, degree: 1, point: Some(p.clone()) }
            })
            .collect();
        Ok(Self::from_components(n, comps))
    }

    pub fn degree(&self) -> u32 {
        self.components.iter().map(|c| c.multiplicity * c.degree).sum()
    }

    pub fn u_form_text(&self) -> String {
        describe(&self.u_form, self.n)
    }

    /// Height of the whole cycle: the sum of the component heights with multiplicity.
    pub fn chow_height(&self, samples: u64, seed: u64) -> ChowHeight {
        let comps: Vec<(&MPoly<Integer>, f64)> = self.components.iter().map(|c| (&c.form, c.multiplicity as f64)).collect();
        let integral = sphere_log_integral(
            |u: &[Complex64]| comps.iter().map(|(f, m)| m * f.eval_c64(u).norm().ln()).sum(),
            1,
            self.n,
            samples,
            seed,
        );
        ChowHeight::assemble(correction_term(self.n, 0, self.degree() as usize), integral)
    }

    /// Heights of the components, each without multiplicity.
    pub fn component_heights(&self, samples: u64, seed: u64) -> Vec<ChowHeight> {
        self.components
            .iter()
            .map(|c| {
                let integral = sphere_log_integral(|u: &[Complex64]| c.form.eval_c64(u).norm().ln(), 1, self.n, samples, seed);
                ChowHeight::assemble(correction_term(self.n, 0, c.degree as usize), integral)
            })
            .collect()
    }
}

/// Two integer points spanning the line sum a_i x_i = 0 in P^2.
fn line_basis(a: &[Integer]) -> (Vec<Integer>, Vec<Integer>) {
    let cross = |e: usize| -> Vec<Integer> {
        let mut v = vec![Integer::new(); 3];
        v[e] = Integer::from(1);
        vec![
            Integer::from(&a[1] * &v[2]) - Integer::from(&a[2] * &v[1]),
            Integer::from(&a[2] * &v[0]) - Integer::from(&a[0] * &v[2]),
            Integer::from(&a[0] * &v[1]) - Integer::from(&a[1] * &v[0]),
        ]
    };
    let c: Vec<Vec<Integer>> = (0..3).map(cross).collect();
    let indep = |x: &[Integer], y: &[Integer]| {
        (0..3).any(|i| (0..3).any(|j| Integer::from(&x[i] * &y[j]) != Integer::from(&x[j] * &y[i])))
    };
    for i in 0..3 {
        for j in i + 1..3 {
            if indep(&c[i], &c[j]) {
                return (c[i].clone(), c[j].clone());
            }
        }
    }
    unreachable!("a nonzero linear form has a two-dimensional kernel")
}

/// X ∩ L for a plane curve X of degree <= 4 and a rational line L. The line is
/// parametrized as s p + t q, X restricts to a binary form Q(s, t), and each irreducible
/// factor phi of Q gives the component u-form phi(<u, q>, -<u, p>).
pub fn intersect_curve_line(x: &Hypersurface, line: &Hypersurface) -> Result<ZeroCycleChow> {
    if x.ambient_dim() != 2 || line.ambient_dim() != 2 {
        return Err(Error::InvalidArgument("curve and line must lie in P^2".into()));
    }
    x.check_desk_scale()?;
    if line.degree() != 1 {
        return Err(Error::InvalidArgument("second argument must be a line".into()));
    }
    let a: Vec<Integer> = (0..3)
        .map(|i| {
            let mut e = vec![0; 3];
            e[i] = 1;
            line.form().coeff(&e)
        })
        .collect();
    let (p, q) = line_basis(&a);
    let s = MPoly::<Integer>::var(2, 0);
    let t = MPoly::<Integer>::var(2, 1);
    let subs: Vec<MPoly<Integer>> =
        (0..3).map(|i| s.scale(&p[i]).add(&t.scale(&q[i]))).collect();
    let bin = x.form().compose(&subs);
    if bin.is_zero() {
        return Err(Error::LineContained);
    }
    let d = x.degree();
    let mut g = vec![Integer::new(); d as usize + 1];
    for (e, c) in bin.terms() {
        g[e[0] as usize] = c.clone();
    }
    let g = IntPoly::new(g);
    let at_infinity = d - g.degree() as u32;
    let lp = linear_form(&p);
    let lq = linear_form(&q);
    let mut comps = Vec::new();
    if at_infinity > 0 {
        let pt = ProjectivePoint::new(p.clone())?;
        let form = lp.primitive();
        comps.push(CycleComponent { form_text: describe(&form, 2), form, multiplicity: at_infinity, degree: 1, point: Some(pt) });
    }
    if g.degree() > 0 {
        let neg_lp = lp.neg();
        for (phi, m) in factor_rationals(&g.to_unipoly())?.factors {
            let k = phi.degree();
            let mut form = MPoly::zero(3);
            for (i, c) in phi.coeffs().iter().enumerate() {
                form = form.add(&lq.pow(i as u32).mul(&neg_lp.pow((k - i) as u32)).scale(c));
            }
            let form = form.primitive();
            let point = if k == 1 {
                // phi = c1 s + c0 t vanishes at (s : t) = (-c0 : c1)
                let (c0, c1) = (phi.coeff(0), phi.coeff(1));
                let v: Vec<Integer> =
                    (0..3).map(|i| Integer::from(&q[i] * &c1) - Integer::from(&p[i] * &c0)).collect();
                Some(ProjectivePoint::new(v)?)
            } else {
                None
            };
            comps.push(CycleComponent { form_text: describe(&form, 2), form, multiplicity: m, degree: k as u32, point });
        }
    }
    Ok(ZeroCycleChow::from_components(2, comps))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::heights::{height_point, Norm};

    fn hs(t: &str) -> Hypersurface {
        Hypersurface::parse(t, Some(2)).unwrap()
    }

    #[test]
    fn two_rational_points() {
        let y = intersect_curve_line(&hs("x0^2+x1^2-x2^2"), &hs("x1")).unwrap();
        assert_eq!(y.degree(), 2);
        assert_eq!(y.components.len(), 2);
        let mut pts: Vec<Vec<i64>> = y
            .components
            .iter()
            .map(|c| c.point.as_ref().unwrap().coords().iter().map(|v| v.to_i64().unwrap()).collect())
            .collect();
        for p in pts.iter_mut() {
            if p[0] < 0 {
                p.iter_mut().for_each(|v| *v = -*v);
            }
        }
        pts.sort();
        assert_eq!(pts, vec![vec![1, 0, -1], vec![1, 0, 1]]);
        for c in &y.components {
            assert!(c.form.eval_c64(&[1.0.into(), 0.0.into(), 0.0.into()]).norm() > 0.0);
        }
    }

    #[test]
    fn tangent_line() {
        let y = intersect_curve_line(&hs("x0^2+x1^2-x2^2"), &hs("x0-x2")).unwrap();
        assert_eq!(y.components.len(), 1);
        assert_eq!(y.components[0].multiplicity, 2);
        let p = y.components[0].point.as_ref().unwrap();
        let c: Vec<i64> = p.coords().iter().map(|v| v.to_i64().unwrap().abs()).collect();
        assert_eq!(c, vec![1, 0, 1]);
    }

    #[test]
    fn irrational_orbit() {
        let y = intersect_curve_line(&hs("x0^2-2*x1^2"), &hs("x2")).unwrap();
        assert_eq!(y.components.len(), 1);
        assert_eq!(y.components[0].degree, 2);
        assert!(y.components[0].point.is_none());
        assert!(matches!(intersect_curve_line(&hs("x0*x1"), &hs("x0")), Err(Error::LineContained)));
    }

    #[test]
    fn additivity_and_points() {
        let y = intersect_curve_line(&hs("x0^2+x1^2-x2^2"), &hs("x1")).unwrap();
        let total = y.chow_height(200_000, 4);
        let parts = y.component_heights(200_000, 5);
        let sum: f64 = parts.iter().map(|h| h.value).sum();
        let err = parts.iter().fold(total.std_error * total.std_error, |a, h| a + h.std_error * h.std_error).sqrt();
        assert!((total.value - sum).abs() <= 3.0 * err);
        // each point (1:0:+-1) has h_2 = log(2)/2
        assert!(total.agrees_with(2f64.ln(), 3.0), "{total:?}");
        let pts = ZeroCycleChow::from_points(&[ProjectivePoint::from_i64s(&[3, 4, 0]).unwrap()]).unwrap();
        let h = pts.chow_height(200_000, 6);
        assert!(h.agrees_with(height_point(&ProjectivePoint::from_i64s(&[3, 4, 0]).unwrap(), Norm::L2).value, 3.0));
    }
}
