//! Recursive-descent parser for polynomial expressions.
//!
//! ```text
//! expr     := term (("+" | "-") term)*
//! term     := factor ("*"? factor)*
//! factor   := "-" factor | base ("^" uint)?
//! base     := rational | ident | "(" expr ")"
//! rational := int ("/" uint)?
//! ```
//!
//! Juxtaposition multiplies (`2xy^2`); a run of letters that is not a
//! declared variable is split greedily into declared names.

use std::fmt;

use foliation_core::{Poly, Rational, VectorField};
use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
    pub expected: Vec<&'static str>,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at byte {}: {}", self.offset, self.message)?;
        if !self.expected.is_empty() {
            write!(f, " (expected {})", self.expected.join(", "))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Num(Rational),
    Var(usize),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

impl Expr {
    pub fn lower(&self, nvars: usize) -> Poly {
        match self {
            Expr::Num(q) => Poly::constant(nvars, q.clone()),
            Expr::Var(i) => Poly::var(nvars, *i),
            Expr::Add(a, b) => &a.lower(nvars) + &b.lower(nvars),
            Expr::Sub(a, b) => &a.lower(nvars) - &b.lower(nvars),
            Expr::Neg(a) => -a.lower(nvars),
            Expr::Mul(a, b) => &a.lower(nvars) * &b.lower(nvars),
            Expr::Pow(a, e) => a.lower(nvars).pow(*e),
        }
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    vars: &'a [String],
}

const FACTOR_START: &[&str] = &["number", "variable", "'('", "'-'"];

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn err(&self, offset: usize, message: impl Into<String>, expected: &[&'static str]) -> ParseError {
        ParseError { offset, message: message.into(), expected: expected.to_vec() }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Some(b'-') => {
                    self.pos += 1;
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
                }
                Some(c) if c.is_ascii_alphanumeric() || c == b'(' || c == b'_' => {
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        if self.peek() == Some(b'-') {
            self.pos += 1;
            return Ok(Expr::Neg(Box::new(self.factor()?)));
        }
        let base = self.base()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            let digits = self.digits();
            if digits.is_empty() {
                return Err(self.err(start, "malformed exponent", &["unsigned integer"]));
            }
            let e: u32 =
                digits.parse().map_err(|_| self.err(start, "exponent too large", &["unsigned integer"]))?;
            return Ok(Expr::Pow(Box::new(base), e));
        }
        Ok(base)
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn base(&mut self) -> Result<Expr, ParseError> {
        let start = self.pos;
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err(self.pos, "unbalanced parentheses", &["')'"]));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => self.rational(),
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => self.ident(),
            Some(_) => Err(self.err(self.pos, "unexpected character", FACTOR_START)),
            None => Err(self.err(start.max(self.pos), "unexpected end of input", FACTOR_START)),
        }
    }

    fn rational(&mut self) -> Result<Expr, ParseError> {
        let num: BigInt = self.digits().parse().expect("digits");
        if self.peek() == Some(b'/') {
            self.pos += 1;
            self.skip_ws();
            let at = self.pos;
            let den = self.digits();
            if den.is_empty() {
                return Err(self.err(at, "malformed denominator", &["unsigned integer"]));
            }
            let den: BigInt = den.parse().expect("digits");
            if den == BigInt::from(0) {
                return Err(self.err(at, "zero denominator", &[]));
            }
            return Ok(Expr::Num(Rational::new(num, den)));
        }
        Ok(Expr::Num(Rational::from_integer(num)))
    }

    fn ident(&mut self) -> Result<Expr, ParseError> {
        let start = self.pos;
        while self.pos < self.src.len()
            && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
        {
            self.pos += 1;
        }
        let word = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
        let parts = split_identifier(word, self.vars)
            .ok_or_else(|| self.err(start, format!("unknown identifier '{word}'"), &["variable"]))?;
        // consume one variable; the remainder is picked up by implicit
        // multiplication so that `xy^2` binds the exponent to `y` only
        let first = parts[0];
        self.pos = start + self.vars[first].len();
        Ok(Expr::Var(first))
    }
}

/// Splits `word` into declared variable names, preferring an exact match
/// and otherwise the longest matching prefix at each step.
fn split_identifier(word: &str, vars: &[String]) -> Option<Vec<usize>> {
    if let Some(i) = vars.iter().position(|v| v == word) {
        return Some(vec![i]);
    }
    let mut out = Vec::new();
    let mut rest = word;
    while !rest.is_empty() {
        let (i, len) = vars
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_empty() && rest.starts_with(v.as_str()))
            .map(|(i, v)| (i, v.len()))
            .max_by_key(|&(_, len)| len)?;
        out.push(i);
        rest = &rest[len..];
    }
    Some(out)
}

pub fn parse_expr(text: &str, vars: &[String]) -> Result<Expr, ParseError> {
    let mut p = Parser { src: text.as_bytes(), pos: 0, vars };
    if p.peek().is_none() {
        return Err(p.err(0, "empty expression", FACTOR_START));
    }
    let e = p.expr()?;
    if let Some(c) = p.peek() {
        let expected: &[&'static str] =
            if c == b')' { &["'+'", "'-'", "end of input"] } else { &["'+'", "'-'", "'*'", "end of input"] };
        let message = if c == b')' {
            "unbalanced parentheses".to_string()
        } else {
            format!("unexpected '{}'", c as char)
        };
        return Err(p.err(p.pos, message, expected));
    }
    Ok(e)
}

pub fn parse_polynomial(text: &str, vars: &[String]) -> Result<Poly, ParseError> {
    Ok(parse_expr(text, vars)?.lower(vars.len()))
}

/// Semicolon-separated components in variable order.
pub fn parse_field(text: &str, vars: &[String]) -> Result<VectorField<Rational>, ParseError> {
    let mut comps = Vec::new();
    let mut offset = 0;
    for part in text.split(';') {
        let p = parse_polynomial(part, vars).map_err(|mut e| {
            e.offset += offset;
            e
        })?;
        comps.push(p);
        offset += part.len() + 1;
    }
    if comps.len() != vars.len() {
        return Err(ParseError {
            offset: text.len(),
            message: format!("field has {} components, expected {}", comps.len(), vars.len()),
            expected: vec!["';'"],
        });
    }
    Ok(VectorField::new(comps).expect("components share arity"))
}

/// Canonical text of a polynomial, re-parseable with the same variables.
pub fn print_polynomial(p: &Poly, vars: &[String]) -> String {
    let names: Vec<&str> = vars.iter().map(String::as_str).collect();
    p.display_with(&names)
}

pub fn print_field(x: &VectorField<Rational>, vars: &[String]) -> String {
    let names: Vec<&str> = vars.iter().map(String::as_str).collect();
    x.display_with(&names)
}
