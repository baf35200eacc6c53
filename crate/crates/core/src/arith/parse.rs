//! Polynomial text grammar and canonical printing.
//!
//! ```text
//! expr    := term (("+" | "-") term)*
//! term    := unary (("*" | "/")? unary)*
//! unary   := ("+" | "-") unary | power
//! power   := primary ("^" integer)?
//! primary := integer | variable | "(" expr ")"
//! ```
//! Division is only allowed by nonzero constants.

use rug::{Integer, Rational};
use std::cmp::Reverse;

use super::bipoly::BiPoly;
use super::mpoly::MPoly;
use super::ring::Ring;
use super::unipoly::UniPoly;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub enum ParsedPoly {
    Uni(UniPoly),
    Bi(BiPoly),
    Multi(MPoly<Rational>),
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    vars: &'a [&'a str],
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.pos, msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<MPoly<Rational>> {
        let mut acc = self.term()?;
        while let Some(c) = self.peek() {
            match c {
                b'+' => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                b'-' => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<MPoly<Rational>> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = acc.mul(&self.unary()?);
                }
                Some(b'/') => {
                    self.pos += 1;
                    let at = self.pos;
                    let d = self.unary()?;
                    if d.total_degree() > 0 || d.is_zero() {
                        self.pos = at;
                        return self.err("division only by a nonzero constant");
                    }
                    let c = d.coeff(&vec![0; d.nvars()]);
                    acc = acc.scale(&c.recip());
                }
                Some(c) if c.is_ascii_alphanumeric() || c == b'(' => {
                    acc = acc.mul(&self.unary()?);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<MPoly<Rational>> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(self.unary()?.neg())
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<MPoly<Rational>> {
        let base = self.primary()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            if start == self.pos {
                return self.err("expected non-negative integer exponent");
            }
            let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
            let e: u32 = match s.parse() {
                Ok(e) if e <= 100_000 => e,
                _ => {
                    self.pos = start;
                    return self.err("exponent too large");
                }
            };
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<MPoly<Rational>> {
        let n = self.vars.len();
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return self.err("expected `)`");
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                let v = Integer::from_str_radix(s, 10).expect("digits");
                Ok(MPoly::constant(n, Rational::from(v)))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                match self.vars.iter().position(|v| *v == name) {
                    Some(i) => Ok(MPoly::var(n, i)),
                    None => {
                        self.pos = start;
                        Err(Error::UnknownVariable(name.to_string()))
                    }
                }
            }
            Some(_) => self.err("unexpected character"),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses into a polynomial over Q in the given variables.
pub fn parse_mpoly(text: &str, vars: &[&str]) -> Result<MPoly<Rational>> {
    let mut p = Parser { src: text.as_bytes(), pos: 0, vars };
    if p.peek().is_none() {
        return p.err("empty input");
    }
    let e = p.expr()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(e)
}

pub fn parse_univariate(text: &str, var: &str) -> Result<UniPoly> {
    let m = parse_mpoly(text, &[var])?;
    let d = m.total_degree() as usize;
    let mut c = vec![Rational::new(); d + 1];
    for (e, v) in m.terms() {
        c[e[0] as usize] = v.clone();
    }
    Ok(UniPoly::new(c))
}

pub fn parse_bivariate(text: &str, vars: [&str; 2]) -> Result<BiPoly> {
    Ok(BiPoly::from_mpoly(&parse_mpoly(text, &vars)?))
}

/// Dispatches on the number of variables.
pub fn parse_poly(text: &str, vars: &[&str]) -> Result<ParsedPoly> {
    match vars.len() {
        1 => parse_univariate(text, vars[0]).map(ParsedPoly::Uni),
        2 => parse_bivariate(text, [vars[0], vars[1]]).map(ParsedPoly::Bi),
        _ => parse_mpoly(text, vars).map(ParsedPoly::Multi),
    }
}

fn write_term(out: &mut String, c: &Rational, mono: &str, first: bool) {
    let neg = c.cmp0().is_lt();
    let a = Rational::from(c.abs_ref());
    if first {
        if neg {
            out.push('-');
        }
    } else {
        out.push_str(if neg { " - " } else { " + " });
    }
    if mono.is_empty() {
        out.push_str(&a.to_string());
    } else if a == 1 {
        out.push_str(mono);
    } else {
        out.push_str(&a.to_string());
        out.push('*');
        out.push_str(mono);
    }
}

/// Canonical multivariate print: graded order, descending, explicit signs.
pub fn print_mpoly<C: Ring + Into<Rational>>(p: &MPoly<C>, vars: &[&str]) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut terms: Vec<_> = p.terms().iter().collect();
    terms.sort_by_key(|(e, _)| Reverse((e.iter().sum::<u32>(), (*e).clone())));
    let mut out = String::new();
    for (k, (e, c)) in terms.into_iter().enumerate() {
        let mono: Vec<String> = e
            .iter()
            .enumerate()
            .filter(|(_, &k)| k > 0)
            .map(|(i, &k)| if k == 1 { vars[i].to_string() } else { format!("{}^{}", vars[i], k) })
            .collect();
        write_term(&mut out, &c.clone().into(), &mono.join("*"), k == 0);
    }
    out
}

pub fn print_univariate(p: &UniPoly, var: &str) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    let mut first = true;
    for (i, c) in p.coeffs().iter().enumerate().rev() {
        if c.cmp0().is_eq() {
            continue;
        }
        let mono = match i {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{i}"),
        };
        write_term(&mut out, c, &mono, first);
        first = false;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smyth_poly() {
        let p = parse_bivariate("x^2 - t*x - 1", ["x", "t"]).unwrap();
        assert_eq!(p.deg_x(), 2);
        assert_eq!(p.deg_t(), 1);
    }

    #[test]
    fn zero_and_product() {
        assert!(parse_univariate("0", "x").unwrap().is_zero());
        assert_eq!(parse_univariate("(x-1)*(x+1)", "x").unwrap(), UniPoly::from_i64s(&[-1, 0, 1]));
    }

    #[test]
    fn rationals_and_print() {
        let p = parse_univariate("x^3/2 - 3/4*x + 2", "x").unwrap();
        assert_eq!(print_univariate(&p, "x"), "1/2*x^3 - 3/4*x + 2");
        assert_eq!(print_univariate(&UniPoly::from_i64s(&[-1, -1, 1]), "x"), "x^2 - x - 1");
        assert_eq!(print_univariate(&UniPoly::from_i64s(&[0, -1]), "x"), "-x");
    }

    #[test]
    fn errors_carry_position() {
        match parse_univariate("x + * 2", "x") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("{other:?}"),
        }
        assert_eq!(parse_univariate("x + y", "x"), Err(Error::UnknownVariable("y".into())));
        assert!(parse_univariate("x/(x+1)", "x").is_err());
        assert!(parse_univariate("(x+1", "x").is_err());
    }

    #[test]
    fn multivariate_roundtrip() {
        let vars = ["x0", "x1", "x2"];
        let p = parse_mpoly("(x0 - 2*x2)^2 + x1*x0 - 7", &vars).unwrap();
        let s = print_mpoly(&p, &vars);
        assert_eq!(s, "x0^2 + x0*x1 - 4*x0*x2 + 4*x2^2 - 7");
        assert_eq!(parse_mpoly(&s, &vars).unwrap(), p);
    }

    #[test]
    fn implicit_product() {
        assert_eq!(parse_univariate("2x(x+1)", "x").unwrap(), UniPoly::from_i64s(&[0, 2, 2]));
    }
}
