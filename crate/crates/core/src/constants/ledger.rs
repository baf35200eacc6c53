use serde::Serialize;

use super::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportKind {
    /// Everything below.
    All,
    /// Exact integers only.
    Exact,
    /// The interval chain K, c31, c7, c10, c13, C3, c5, c6.
    Chain,
}

impl std::str::FromStr for ReportKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" => Ok(ReportKind::All),
            "exact" => Ok(ReportKind::Exact),
            "chain" => Ok(ReportKind::Chain),
            _ => Err(Error::InvalidArgument(format!("unknown report `{s}` (all, exact, chain)"))),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ConstantRow {
    pub name: String,
    /// Exact integer value, when there is one.
    pub exact: Option<String>,
    /// log10 midpoint, and the outward-rounded interval around it.
    pub log10: Option<String>,
    pub log10_lo: Option<String>,
    pub log10_hi: Option<String>,
    /// Width of the log10 interval.
    pub log10_width: Option<f64>,
    /// Width divided by the larger endpoint magnitude; finite even when the width is not.
    pub log10_rel_width: Option<f64>,
    /// log10 itself leaves the big-float exponent range (g >= 3 for the Remond chain).
    pub overflow: bool,
    pub trace: String,
}

fn exact_row(name: String, v: Integer, trace: &str) -> ConstantRow {
    ConstantRow { name, exact: Some(v.to_string()), log10: None, log10_lo: None, log10_hi: None, log10_width: None, log10_rel_width: None, overflow: false, trace: trace.into() }
}

fn interval_row(name: String, e: &BoundExpr, prec: u32) -> Result<ConstantRow> {
    let b = match e.eval(&Env::new(), prec) {
        Ok(b) => b,
        Err(Error::Overflow(_)) => {
            return Ok(ConstantRow {
                name,
                exact: None,
                log10: None,
                log10_lo: None,
                log10_hi: None,
                log10_width: None,
                log10_rel_width: None,
                overflow: true,
                trace: e.definition(),
            })
        }
        Err(err) => return Err(err),
    };
    let digits = 17;
    let s = |f: &rug::Float| {
        let v = f.to_f64();
        if v.is_finite() && v.abs() < 1e15 {
            format!("{v}")
        } else {
            f.to_string_radix(10, Some(digits))
        }
    };
    Ok(ConstantRow {
        name,
        exact: b.exact.as_ref().filter(|q| q.denom() == &1).map(|q| q.numer().to_string()),
        log10: Some(b.log10_string(digits)),
        log10_lo: Some(s(&b.lo)),
        log10_hi: Some(s(&b.hi)),
        log10_width: Some(b.width().to_f64()),
        log10_rel_width: Some(rel_width(&b.lo, &b.hi)),
        overflow: false,
        trace: e.definition(),
    })
}

fn rel_width(lo: &rug::Float, hi: &rug::Float) -> f64 {
    let scale = rug::Float::with_val(lo.prec(), lo.abs_ref()).max(&rug::Float::with_val(hi.prec(), hi.abs_ref()));
    if scale.is_zero() {
        return 0.0;
    }
    let w = rug::Float::with_val(hi.prec(), hi - lo);
    (w / scale).to_f64()
}

/// Table of the constants at dimension g; `m_s` feeds the identity-family c_6.
pub fn report(g: u32, kind: ReportKind, m_s: f64, prec: u32) -> Result<Vec<ConstantRow>> {
    check_g(g)?;
    let mut rows = Vec::new();
    if kind != ReportKind::Chain {
        let (n, deg_a) = theta_ambient(g);
        rows.push(exact_row(format!("C2({g})"), genus_cap(g), "(16^g g!)^2 + 16^g g!"));
        rows.push(exact_row(format!("N({g})"), n, "16^g - 1"));
        rows.push(exact_row(format!("degA({g})"), deg_a, "16^g g!"));
        rows.push(exact_row(format!("c9({g})"), c9(g), "4^(3g+1) g! (g+1)"));
        rows.push(exact_row(format!("dim Z(A)({g})"), Integer::from(8 * g), "8g"));
    }
    if kind != ReportKind::Exact {
        rows.push(interval_row(format!("K({g})"), &bost_david_k(g), prec)?);
        rows.push(interval_row(format!("c31({g})"), &c31(g), prec)?);
        rows.push(interval_row(format!("c7({g})"), &c7(g), prec)?);
        let parts = c3_parts(g)?;
        if let Node::Product(v) = parts.c13.node() {
            let c10 = &v[1];
            if let Node::Sum(s) = c10.node() {
                if let Node::Product(p) = s[0].node() {
                    rows.push(interval_row(p[1].label().unwrap_or("c28").into(), &p[1], prec)?);
                }
            }
            rows.push(interval_row(c10.label().unwrap_or("c10").into(), c10, prec)?);
        }
        rows.push(interval_row(format!("c13({g})"), &parts.c13, prec)?);
        rows.push(interval_row(format!("a({g})"), &parts.a, prec)?);
        rows.push(interval_row(format!("b({g})"), &parts.b, prec)?);
        rows.push(interval_row(format!("C3({g})"), &parts.big_c3, prec)?);
        let (c5, c6) = compose_c5_c6_with(
            BoundExpr::int(1),
            BoundExpr::int(1),
            BoundExpr::int(0),
            BoundExpr::int(1),
            BoundExpr::int(0),
            parts.big_c3,
            BoundExpr::from_f64(m_s)?,
        )?;
        rows.push(interval_row(format!("c5({g}) identity family"), &c5, prec)?);
        rows.push(interval_row(format!("c6({g}) identity family, m(S)={m_s}"), &c6, prec)?);
        let e = 256 * (g as u64) * (g as u64);
        rows.push(interval_row(
            format!("[L:K] cap({g})"),
            &BoundExpr::pow(BoundExpr::int(48), BoundExpr::integer(Integer::from(e))),
            prec,
        )?);
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_g2() {
        let rows = report(2, ReportKind::All, 0.274, 256).unwrap();
        let find = |n: &str| rows.iter().find(|r| r.name == n).unwrap_or_else(|| panic!("{n}"));
        assert_eq!(find("C2(2)").exact.as_deref(), Some("262656"));
        assert_eq!(find("c9(2)").exact.as_deref(), Some("98304"));
        assert!(find("c28(262656,512,255)").log10.as_ref().unwrap().contains('e'));
        assert_eq!(find("c10(262656,512,255)").trace, "3 * c28(262656,512,255) + c31(262656)");
        assert!(find("C3(2)").trace.starts_with("max(c13(2), a(2) + 2 * b(2))"));
        let l: f64 = find("[L:K] cap(2)").log10.as_ref().unwrap().parse().unwrap();
        assert!((l - 1721.591027072601).abs() < 1e-9);
        assert_eq!(report(2, ReportKind::Exact, 0.0, 256).unwrap().len(), 5);
        assert!(report(4, ReportKind::Chain, 0.0, 256).is_err());
    }
}
