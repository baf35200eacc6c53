//! Expression DAG over non-negative reals, evaluated as outward-rounded intervals of
//! log10 values. Values far beyond f64 range (m^(20 m 8^g) at g = 2 has a log10 with
//! ~237000 digits) stay representable because only their logarithms are stored.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use rug::float::Round;
use rug::ops::Pow;
use rug::{Float, Integer, Rational};
use serde_json::{json, Value};

use crate::error::{Error, Result};

pub const DEFAULT_PRECISION: u32 = 256;

/// Exact rationals larger than this many bits are dropped from evaluation.
const EXACT_BITS: u64 = 1 << 18;
const FACTORIAL_CAP: u32 = 100_000;

#[derive(Clone, Debug)]
pub enum Node {
    Constant(Rational),
    Variable(String),
    Sum(Vec<BoundExpr>),
    Product(Vec<BoundExpr>),
    Quotient(BoundExpr, BoundExpr),
    Power(BoundExpr, BoundExpr),
    /// e^x
    Exp(BoundExpr),
    /// natural logarithm
    Log(BoundExpr),
    Factorial(BoundExpr),
    Max(Vec<BoundExpr>),
}

#[derive(Debug)]
struct Inner {
    node: Node,
    label: Option<String>,
}

/// Shared handle to a node; clones share the node, so common subexpressions are
/// evaluated once per call.
#[derive(Clone, Debug)]
pub struct BoundExpr(Arc<Inner>);

pub type Env = BTreeMap<String, Rational>;

impl BoundExpr {
    fn wrap(node: Node) -> Self {
        BoundExpr(Arc::new(Inner { node, label: None }))
    }

    pub fn int(v: i64) -> Self {
        Self::rational(Rational::from(v))
    }

    pub fn integer(v: Integer) -> Self {
        Self::rational(Rational::from(v))
    }

    pub fn rational(v: Rational) -> Self {
        assert!(v >= 0, "bound expressions are non-negative");
        Self::wrap(Node::Constant(v))
    }

    /// The exact binary value of `v`.
    pub fn from_f64(v: f64) -> Result<Self> {
        let q = Rational::from_f64(v).ok_or_else(|| Error::InvalidArgument(format!("{v} is not finite")))?;
        if q < 0 {
            return Err(Error::NegativeValue(v.to_string()));
        }
        Ok(Self::rational(q))
    }

    pub fn var(name: &str) -> Self {
        Self::wrap(Node::Variable(name.to_string()))
    }

    pub fn sum(items: Vec<BoundExpr>) -> Self {
        Self::wrap(Node::Sum(items))
    }

    pub fn product(items: Vec<BoundExpr>) -> Self {
        Self::wrap(Node::Product(items))
    }

    pub fn quotient(a: BoundExpr, b: BoundExpr) -> Self {
        Self::wrap(Node::Quotient(a, b))
    }

    pub fn pow(base: BoundExpr, exponent: BoundExpr) -> Self {
        Self::wrap(Node::Power(base, exponent))
    }

    pub fn exp(x: BoundExpr) -> Self {
        Self::wrap(Node::Exp(x))
    }

    pub fn log(x: BoundExpr) -> Self {
        Self::wrap(Node::Log(x))
    }

    pub fn factorial(x: BoundExpr) -> Self {
        Self::wrap(Node::Factorial(x))
    }

    pub fn max(items: Vec<BoundExpr>) -> Self {
        Self::wrap(Node::Max(items))
    }

    /// Same node under a display name.
    pub fn named(self, label: impl Into<String>) -> Self {
        let inner = Arc::try_unwrap(self.0).unwrap_or_else(|a| Inner { node: a.node.clone(), label: a.label.clone() });
        BoundExpr(Arc::new(Inner { node: inner.node, label: Some(label.into()) }))
    }

    pub fn node(&self) -> &Node {
        &self.0.node
    }

    pub fn label(&self) -> Option<&str> {
        self.0.label.as_deref()
    }

    pub fn children(&self) -> Vec<&BoundExpr> {
        match &self.0.node {
            Node::Constant(_) | Node::Variable(_) => vec![],
            Node::Sum(v) | Node::Product(v) | Node::Max(v) => v.iter().collect(),
            Node::Quotient(a, b) | Node::Power(a, b) => vec![a, b],
            Node::Exp(a) | Node::Log(a) | Node::Factorial(a) => vec![a],
        }
    }

    fn key(&self) -> usize {
        Arc::as_ptr(&self.0) as usize
    }

    pub fn eval(&self, env: &Env, prec: u32) -> Result<Bound> {
        let mut cache = HashMap::new();
        let b = self.eval_cached(env, prec, &mut cache)?;
        if b.hi.is_nan() || b.hi.is_infinite() && b.hi > 0 {
            return Err(Error::Overflow(self.to_string()));
        }
        Ok(b)
    }

    pub fn eval_default(&self) -> Result<Bound> {
        self.eval(&Env::new(), DEFAULT_PRECISION)
    }

    fn eval_cached(&self, env: &Env, prec: u32, cache: &mut HashMap<usize, Bound>) -> Result<Bound> {
        if let Some(b) = cache.get(&self.key()) {
            return Ok(b.clone());
        }
        let mut kids = Vec::new();
        for c in self.children() {
            kids.push(c.eval_cached(env, prec, cache)?);
        }
        let b = match &self.0.node {
            Node::Constant(q) => Bound::from_rational(q, prec),
            Node::Variable(name) => {
                let q = env.get(name).ok_or_else(|| Error::UnknownVariable(name.clone()))?;
                if *q < 0 {
                    return Err(Error::NegativeValue(format!("{name} = {q}")));
                }
                Bound::from_rational(q, prec)
            }
            Node::Sum(_) => Bound::sum(&kids, prec),
            Node::Product(_) => Bound::product(&kids, prec),
            Node::Quotient(..) => Bound::quotient(&kids[0], &kids[1], prec)?,
            Node::Power(..) => Bound::power(&kids[0], &kids[1], prec),
            Node::Exp(_) => Bound::exp(&kids[0], prec),
            Node::Log(_) => Bound::log(&kids[0], prec)?,
            Node::Factorial(_) => Bound::factorial(&kids[0], prec)?,
            Node::Max(_) => Bound::max(&kids),
        };
        if b.hi.is_nan() {
            return Err(Error::Overflow(self.to_string()));
        }
        cache.insert(self.key(), b.clone());
        Ok(b)
    }

    /// Full expression with labelled subexpressions expanded.
    pub fn expand(&self) -> String {
        self.render(true, true)
    }

    /// One level: labelled children are printed by name.
    pub fn definition(&self) -> String {
        self.render(true, false)
    }

    fn render(&self, top: bool, expand: bool) -> String {
        if let Some(l) = &self.0.label {
            if !top && !expand {
                return l.clone();
            }
        }
        let r = |e: &BoundExpr| e.render(false, expand);
        let atom = |e: &BoundExpr| {
            let s = r(e);
            let simple = (e.label().is_some() && !expand)
                || matches!(e.node(), Node::Variable(_) | Node::Exp(_) | Node::Log(_) | Node::Max(_))
                || matches!(e.node(), Node::Constant(q) if q.denom() == &1);
            if simple {
                s
            } else {
                format!("({s})")
            }
        };
        // products associate, so a product needs no parentheses as a factor
        let factor = |e: &BoundExpr| {
            if matches!(e.node(), Node::Product(_)) && (e.label().is_none() || expand) {
                r(e)
            } else {
                atom(e)
            }
        };
        match &self.0.node {
            Node::Constant(q) => q.to_string(),
            Node::Variable(n) => n.clone(),
            Node::Sum(v) => v.iter().map(r).collect::<Vec<_>>().join(" + "),
            Node::Product(v) => v.iter().map(factor).collect::<Vec<_>>().join(" * "),
            Node::Quotient(a, b) => format!("{} / {}", factor(a), atom(b)),
            Node::Power(a, b) => format!("{}^{}", atom(a), atom(b)),
            Node::Exp(a) => format!("exp({})", r(a)),
            Node::Log(a) => format!("log({})", r(a)),
            Node::Factorial(a) => format!("{}!", atom(a)),
            Node::Max(v) => format!("max({})", v.iter().map(r).collect::<Vec<_>>().join(", ")),
        }
    }

    /// Nodes in dependency order, each with the ids of its children.
    pub fn to_json(&self) -> Value {
        fn visit(e: &BoundExpr, ids: &mut HashMap<usize, usize>, out: &mut Vec<Value>) -> usize {
            if let Some(&i) = ids.get(&e.key()) {
                return i;
            }
            let children: Vec<usize> = e.children().into_iter().map(|c| visit(c, ids, out)).collect();
            let (kind, payload) = match e.node() {
                Node::Constant(q) => ("constant", Some(q.to_string())),
                Node::Variable(n) => ("variable", Some(n.clone())),
                Node::Sum(_) => ("sum", None),
                Node::Product(_) => ("product", None),
                Node::Quotient(..) => ("quotient", None),
                Node::Power(..) => ("power", None),
                Node::Exp(_) => ("exponential", None),
                Node::Log(_) => ("logarithm", None),
                Node::Factorial(_) => ("factorial", None),
                Node::Max(_) => ("max", None),
            };
            let id = out.len();
            out.push(json!({"id": id, "kind": kind, "value": payload, "label": e.label(), "children": children}));
            ids.insert(e.key(), id);
            id
        }
        let mut out = Vec::new();
        let root = visit(self, &mut HashMap::new(), &mut out);
        json!({"root": root, "nodes": out})
    }
}

impl fmt::Display for BoundExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(false, false))
    }
}

impl std::ops::Add for BoundExpr {
    type Output = BoundExpr;
    fn add(self, rhs: BoundExpr) -> BoundExpr {
        BoundExpr::sum(vec![self, rhs])
    }
}

impl std::ops::Mul for BoundExpr {
    type Output = BoundExpr;
    fn mul(self, rhs: BoundExpr) -> BoundExpr {
        BoundExpr::product(vec![self, rhs])
    }
}

impl std::ops::Div for BoundExpr {
    type Output = BoundExpr;
    fn div(self, rhs: BoundExpr) -> BoundExpr {
        BoundExpr::quotient(self, rhs)
    }
}

/// log10 of a non-negative real lies in [lo, hi]; zero is [-inf, -inf].
#[derive(Clone, Debug)]
pub struct Bound {
    pub lo: Float,
    pub hi: Float,
    /// The exact value, when every node below is rational and small enough.
    pub exact: Option<Rational>,
}

fn rounded(prec: u32, round: Round, f: impl FnOnce(&mut Float, Round)) -> Float {
    let mut x = Float::new(prec);
    f(&mut x, round);
    x
}

fn set<T>(x: &mut Float, v: T, r: Round)
where
    Float: rug::ops::AssignRound<T, Round = Round, Ordering = std::cmp::Ordering>,
{
    use rug::ops::AssignRound;
    x.assign_round(v, r);
}

fn neg_inf(prec: u32) -> Float {
    Float::with_val(prec, rug::float::Special::NegInfinity)
}

fn log10_rational(q: &Rational, prec: u32, r: Round) -> Float {
    if *q == 0 {
        return neg_inf(prec);
    }
    let mut x = Float::with_val_round(prec, q, r).0;
    x.log10_round(r);
    x
}

/// log10(10^a + 10^b)
fn log_add(a: &Float, b: &Float, prec: u32, r: Round) -> Float {
    if a.is_infinite() && *a < 0 {
        return b.clone();
    }
    if b.is_infinite() && *b < 0 {
        return a.clone();
    }
    let (big, small) = if a >= b { (a, b) } else { (b, a) };
    let mut t = rounded(prec, r, |x, r| set(x, small - big, r));
    t.exp10_round(r);
    let mut t = rounded(prec, r, |x, r| set(x, &t + 1u32, r));
    t.log10_round(r);
    rounded(prec, r, |x, r| set(x, &t + big, r))
}

fn ln10(prec: u32, r: Round) -> Float {
    let mut x = Float::with_val(prec, 10);
    x.ln_round(r);
    x
}

fn log10_e(prec: u32, r: Round) -> Float {
    // 1/ln 10, the rounding of ln 10 reversed
    let opp = if r == Round::Down { Round::Up } else { Round::Down };
    let l = ln10(prec, opp);
    rounded(prec, r, |x, r| set(x, 1u32 / &l, r))
}

fn small_enough(q: &Rational) -> bool {
    q.numer().significant_bits() as u64 + q.denom().significant_bits() as u64 <= EXACT_BITS
}

/// a * b with -inf * 0 taken as 0 (a zero exponent applied to anything).
fn mul_dir(a: &Float, b: &Float, prec: u32, r: Round) -> Float {
    if a.is_zero() || b.is_zero() {
        return Float::new(prec);
    }
    rounded(prec, r, |x, r| set(x, a * b, r))
}

fn pow10(l: &Float, prec: u32, r: Round) -> Float {
    let mut x = Float::with_val(prec, l);
    x.exp10_round(r);
    x
}

impl Bound {
    pub fn from_rational(q: &Rational, prec: u32) -> Self {
        Bound { lo: log10_rational(q, prec, Round::Down), hi: log10_rational(q, prec, Round::Up), exact: Some(q.clone()) }
    }

    fn sum(kids: &[Bound], prec: u32) -> Self {
        let mut lo = neg_inf(prec);
        let mut hi = neg_inf(prec);
        for k in kids {
            lo = log_add(&lo, &k.lo, prec, Round::Down);
            hi = log_add(&hi, &k.hi, prec, Round::Up);
        }
        let exact = kids
            .iter()
            .map(|k| k.exact.clone())
            .sum::<Option<Rational>>()
            .filter(small_enough);
        Bound { lo, hi, exact }
    }

    fn product(kids: &[Bound], prec: u32) -> Self {
        if let Some(z) = kids.iter().find(|k| k.exact.as_ref().is_some_and(|q| *q == 0)) {
            return z.clone();
        }
        let mut lo = Float::new(prec);
        let mut hi = Float::new(prec);
        for k in kids {
            lo = rounded(prec, Round::Down, |x, r| set(x, &lo + &k.lo, r));
            hi = rounded(prec, Round::Up, |x, r| set(x, &hi + &k.hi, r));
        }
        let exact = kids
            .iter()
            .try_fold(Rational::from(1), |acc, k| k.exact.as_ref().map(|q| acc * q))
            .filter(small_enough);
        Bound { lo, hi, exact }
    }

    fn quotient(a: &Bound, b: &Bound, prec: u32) -> Result<Self> {
        if b.lo.is_infinite() && b.lo < 0 {
            return Err(Error::DivisionByZero);
        }
        if a.exact.as_ref().is_some_and(|q| *q == 0) {
            return Ok(a.clone());
        }
        let lo = rounded(prec, Round::Down, |x, r| set(x, &a.lo - &b.hi, r));
        let hi = rounded(prec, Round::Up, |x, r| set(x, &a.hi - &b.lo, r));
        let exact = match (&a.exact, &b.exact) {
            (Some(p), Some(q)) => Some(Rational::from(p / q)).filter(small_enough),
            _ => None,
        };
        Ok(Bound { lo, hi, exact })
    }

    fn power(base: &Bound, e: &Bound, prec: u32) -> Self {
        if e.exact.as_ref().is_some_and(|q| *q == 0) {
            return Bound::from_rational(&Rational::from(1), prec);
        }
        // exponent as a real interval
        let (elo, ehi) = (pow10(&e.lo, prec, Round::Down), pow10(&e.hi, prec, Round::Up));
        let (lo, hi) = if base.lo.is_infinite() {
            let hi = if base.hi.is_infinite() {
                neg_inf(prec)
            } else if base.hi >= 0 {
                mul_dir(&ehi, &base.hi, prec, Round::Up)
            } else {
                mul_dir(&elo, &base.hi, prec, Round::Up)
            };
            (neg_inf(prec), hi)
        } else {
            let lows = [&elo, &ehi].map(|x| [&base.lo, &base.hi].map(|y| mul_dir(x, y, prec, Round::Down)));
            let highs = [&elo, &ehi].map(|x| [&base.lo, &base.hi].map(|y| mul_dir(x, y, prec, Round::Up)));
            let lo = lows.into_iter().flatten().min_by(|a, b| a.partial_cmp(b).unwrap()).unwrap();
            let hi = highs.into_iter().flatten().max_by(|a, b| a.partial_cmp(b).unwrap()).unwrap();
            (lo, hi)
        };
        let exact = match (&base.exact, &e.exact) {
            (Some(b), Some(x)) if x.denom() == &1 => x.numer().to_u32().and_then(|k| {
                let bits = (b.numer().significant_bits() as u64 + b.denom().significant_bits() as u64) * k as u64;
                (bits <= EXACT_BITS).then(|| b.clone().pow(k))
            }),
            _ => None,
        };
        Bound { lo, hi, exact }
    }

    fn exp(x: &Bound, prec: u32) -> Self {
        if x.exact.as_ref().is_some_and(|q| *q == 0) {
            return Bound::from_rational(&Rational::from(1), prec);
        }
        let xl = pow10(&x.lo, prec, Round::Down);
        let xh = pow10(&x.hi, prec, Round::Up);
        let lo = mul_dir(&xl, &log10_e(prec, Round::Down), prec, Round::Down);
        let hi = mul_dir(&xh, &log10_e(prec, Round::Up), prec, Round::Up);
        Bound { lo, hi, exact: None }
    }

    fn log(x: &Bound, prec: u32) -> Result<Self> {
        if x.exact.as_ref().is_some_and(|q| *q == 1) {
            return Ok(Bound::from_rational(&Rational::new(), prec));
        }
        if x.hi <= 0 {
            return Err(Error::NegativeValue("logarithm of a value below 1".into()));
        }
        let lo = if x.lo <= 0 {
            neg_inf(prec)
        } else {
            let mut t = mul_dir(&x.lo, &ln10(prec, Round::Down), prec, Round::Down);
            t.log10_round(Round::Down);
            t
        };
        let mut hi = mul_dir(&x.hi, &ln10(prec, Round::Up), prec, Round::Up);
        hi.log10_round(Round::Up);
        Ok(Bound { lo, hi, exact: None })
    }

    fn factorial(x: &Bound, prec: u32) -> Result<Self> {
        let n = x
            .exact
            .as_ref()
            .filter(|q| q.denom() == &1)
            .and_then(|q| q.numer().to_u32())
            .filter(|&n| n <= FACTORIAL_CAP)
            .ok_or_else(|| Error::InvalidArgument(format!("factorial needs an exact integer in 0..={FACTORIAL_CAP}")))?;
        let f = Rational::from(Integer::from(Integer::factorial(n)));
        let mut b = Bound::from_rational(&f, prec);
        b.exact = Some(f).filter(small_enough);
        Ok(b)
    }

    fn max(kids: &[Bound]) -> Self {
        let pick = |f: fn(&Bound) -> &Float| kids.iter().map(f).max_by(|a, b| a.partial_cmp(b).unwrap()).unwrap().clone();
        let exact = kids.iter().map(|k| k.exact.clone()).collect::<Option<Vec<_>>>().and_then(|v| v.into_iter().max());
        Bound { lo: pick(|k| &k.lo), hi: pick(|k| &k.hi), exact }
    }

    pub fn is_zero(&self) -> bool {
        self.hi.is_infinite() && self.hi < 0
    }

    pub fn log10_lo(&self) -> f64 {
        self.lo.to_f64_round(Round::Down)
    }

    pub fn log10_hi(&self) -> f64 {
        self.hi.to_f64_round(Round::Up)
    }

    /// Midpoint of the log10 interval.
    pub fn log10_mid(&self) -> f64 {
        if self.is_zero() {
            return f64::NEG_INFINITY;
        }
        Float::with_val(self.lo.prec(), &self.lo + &self.hi).to_f64() / 2.0
    }

    /// hi - lo
    pub fn width(&self) -> Float {
        if self.is_zero() {
            return Float::new(self.lo.prec());
        }
        rounded(self.lo.prec(), Round::Up, |x, r| set(x, &self.hi - &self.lo, r))
    }

    /// The value itself when it fits an f64.
    pub fn value_f64(&self) -> Option<f64> {
        let m = self.log10_mid();
        if let Some(q) = &self.exact {
            return Some(q.to_f64());
        }
        (m.is_finite() && m.abs() < 300.0).then(|| 10f64.powf(m)).or((m == f64::NEG_INFINITY).then_some(0.0))
    }

    /// True when the exact value q satisfies 10^lo <= q <= 10^hi.
    pub fn contains(&self, q: &Rational) -> bool {
        let prec = self.lo.prec().max(self.hi.prec());
        log10_rational(q, prec, Round::Up) >= self.lo && log10_rational(q, prec, Round::Down) <= self.hi
    }

    /// Interval inclusion: self inside other.
    pub fn within(&self, other: &Bound) -> bool {
        self.lo >= other.lo && self.hi <= other.hi
    }

    /// log10 midpoint with `digits` significant digits; works far beyond f64 range.
    pub fn log10_string(&self, digits: usize) -> String {
        if self.is_zero() {
            return "-inf".into();
        }
        let m = Float::with_val(self.lo.prec(), &self.lo + &self.hi) / 2u32;
        let f = m.to_f64();
        if f.is_finite() && f.abs() < 1e15 {
            return format!("{f}");
        }
        m.to_string_radix(10, Some(digits))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(v: i64) -> BoundExpr {
        BoundExpr::int(v)
    }

    fn ev(x: &BoundExpr) -> Bound {
        x.eval_default().unwrap()
    }

    #[test]
    fn exact_arithmetic_is_tracked() {
        let x = e(3) * e(4) + e(5) / e(2);
        let b = ev(&x);
        assert_eq!(b.exact, Some(Rational::from((29, 2))));
        assert!(b.contains(&Rational::from((29, 2))));
        assert!(b.log10_lo() <= 29f64.log10() - 2f64.log10() && b.log10_hi() >= 1.1613);
        let f = ev(&BoundExpr::factorial(e(20)));
        assert_eq!(f.exact.unwrap(), Rational::from(Integer::from(Integer::factorial(20))));
        let p = ev(&BoundExpr::pow(e(2), e(100)));
        assert_eq!(p.exact.unwrap(), Rational::from(Integer::from(1) << 100));
        assert_eq!(ev(&BoundExpr::max(vec![e(3), e(7), e(5)])).exact.unwrap(), 7);
    }

    #[test]
    fn transcendental_nodes() {
        let l = ev(&BoundExpr::log(e(10)));
        let v = 10f64.ln().log10();
        assert!(l.log10_lo() <= v && v <= l.log10_hi());
        assert!(l.width() < 1e-70);
        let x = ev(&BoundExpr::exp(e(1)));
        assert!((x.log10_mid() - std::f64::consts::LOG10_E).abs() < 1e-15);
        assert!(ev(&BoundExpr::log(e(1))).is_zero());
        assert!(BoundExpr::log(BoundExpr::rational(Rational::from((1, 2)))).eval_default().is_err());
    }

    #[test]
    fn zeros_and_division() {
        let z = e(0);
        assert!(matches!(BoundExpr::quotient(e(1), z.clone()).eval_default(), Err(Error::DivisionByZero)));
        let s = ev(&(z.clone() / e(7) + e(0) * e(5) + e(2)));
        assert_eq!(s.exact.clone().unwrap(), 2);
        assert!(s.contains(&Rational::from(2)));
    }

    #[test]
    fn huge_towers() {
        // 2^(2^100): log10 = 2^100 log10 2
        let b = ev(&BoundExpr::pow(e(2), BoundExpr::pow(e(2), e(100))));
        assert!(b.exact.is_none());
        let want = 2f64.powi(100) * 2f64.log10();
        assert!((b.log10_mid() / want - 1.0).abs() < 1e-15);
        assert!(b.log10_string(10).starts_with("3.81600"));
    }

    #[test]
    fn variables_and_labels() {
        let h = BoundExpr::var("h");
        let c = (e(2) * h.clone() + e(1)).named("c");
        let d = c.clone() * c.clone();
        assert_eq!(d.to_string(), "c * c");
        assert_eq!(d.expand(), "(2 * h + 1) * (2 * h + 1)");
        assert!(matches!(d.eval_default(), Err(Error::UnknownVariable(_))));
        let env: Env = [("h".to_string(), Rational::from(3))].into();
        assert_eq!(d.eval(&env, 128).unwrap().exact.unwrap(), 49);
        let j = d.to_json();
        // c is shared, so it appears once
        assert_eq!(j["nodes"].as_array().unwrap().iter().filter(|n| n["label"] == "c").count(), 1);
    }

    #[test]
    fn more_precision_tightens() {
        let x = BoundExpr::pow(BoundExpr::log(e(5)), e(4)) * BoundExpr::exp(e(3));
        let a = x.eval(&Env::new(), 128).unwrap();
        let b = x.eval(&Env::new(), 256).unwrap();
        assert!(b.within(&a));
        assert!(b.width() < a.width());
    }
}
