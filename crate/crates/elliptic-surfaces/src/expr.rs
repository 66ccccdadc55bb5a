//! Parser for polynomial and rational-function expressions.
//!
//! Variables are single letters; multiplication may be implicit
//! (`t xyz`, `3t^2`, `(x+y)(y+z)`). Numbers are integers or decimals-free
//! fractions written with `/`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{RatFunc, RatPoly};

#[derive(Debug, Clone)]
enum Ast {
    Num(BigInt),
    Var(char),
    Add(Box<Ast>, Box<Ast>),
    Sub(Box<Ast>, Box<Ast>),
    Mul(Box<Ast>, Box<Ast>),
    Div(Box<Ast>, Box<Ast>),
    Neg(Box<Ast>),
    Pow(Box<Ast>, u32),
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    src: &'a str,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser { chars: src.chars().filter(|c| !c.is_whitespace()).collect(), pos: 0, src }
    }

    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} at position {} in `{}`", self.pos, self.src))
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Ast> {
        let mut lhs = self.term()?;
        while let Some(c) = self.peek() {
            match c {
                '+' => {
                    self.pos += 1;
                    lhs = Ast::Add(Box::new(lhs), Box::new(self.term()?));
                }
                '-' => {
                    self.pos += 1;
                    lhs = Ast::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => break,
            }
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<Ast> {
        let mut lhs = self.unary()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    lhs = Ast::Mul(Box::new(lhs), Box::new(self.unary()?));
                }
                Some('/') => {
                    self.pos += 1;
                    lhs = Ast::Div(Box::new(lhs), Box::new(self.unary()?));
                }
                Some(c) if c == '(' || c.is_ascii_alphanumeric() => {
                    lhs = Ast::Mul(Box::new(lhs), Box::new(self.power()?));
                }
                _ => break,
            }
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Ast> {
        match self.peek() {
            Some('-') => {
                self.pos += 1;
                Ok(Ast::Neg(Box::new(self.unary()?)))
            }
            Some('+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Ast> {
        let base = self.atom()?;
        if self.peek() == Some('^') {
            self.pos += 1;
            let start = self.pos;
            while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                self.pos += 1;
            }
            let e: String = self.chars[start..self.pos].iter().collect();
            let e: u32 = e.parse().map_err(|_| self.err("expected exponent"))?;
            return Ok(Ast::Pow(Box::new(base), e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Ast> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                    self.pos += 1;
                }
                let s: String = self.chars[start..self.pos].iter().collect();
                Ok(Ast::Num(s.parse().map_err(|_| self.err("bad number"))?))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                self.pos += 1;
                Ok(Ast::Var(c))
            }
            Some(_) => Err(self.err("unexpected character")),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

fn parse_ast(text: &str) -> Result<Ast> {
    let mut p = Parser::new(text);
    if p.chars.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let e = p.expr()?;
    if p.pos != p.chars.len() {
        return Err(p.err("trailing input"));
    }
    Ok(e)
}

/// Sparse multivariate polynomial over ℚ; exponent vectors index into a
/// caller-supplied variable list.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MPoly {
    pub terms: BTreeMap<Vec<u32>, BigRational>,
    pub nvars: usize,
}

impl MPoly {
    pub fn zero(nvars: usize) -> Self {
        MPoly { terms: BTreeMap::new(), nvars }
    }

    pub fn constant(c: BigRational, nvars: usize) -> Self {
        let mut m = Self::zero(nvars);
        if !c.is_zero() {
            m.terms.insert(vec![0; nvars], c);
        }
        m
    }

    pub fn var(i: usize, nvars: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut m = Self::zero(nvars);
        m.terms.insert(e, BigRational::one());
        m
    }

    pub fn add(&self, o: &MPoly) -> MPoly {
        let mut r = self.clone();
        for (e, c) in &o.terms {
            let entry = r.terms.entry(e.clone()).or_insert_with(BigRational::zero);
            *entry += c;
            if entry.is_zero() {
                r.terms.remove(e);
            }
        }
        r
    }

    pub fn neg(&self) -> MPoly {
        MPoly { terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(), nvars: self.nvars }
    }

    pub fn mul(&self, o: &MPoly) -> MPoly {
        let mut r = MPoly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                let entry = r.terms.entry(e.clone()).or_insert_with(BigRational::zero);
                *entry += c1 * c2;
                if entry.is_zero() {
                    r.terms.remove(&e);
                }
            }
        }
        r
    }

    /// Partial derivative in variable i.
    pub fn diff(&self, i: usize) -> MPoly {
        let mut r = MPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[i] > 0 {
                let mut e2 = e.clone();
                e2[i] -= 1;
                r.terms.insert(e2, c * BigRational::from_integer(e[i].into()));
            }
        }
        r
    }

    fn as_constant(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => self.terms.get(&vec![0; self.nvars]).cloned(),
            _ => None,
        }
    }
}

fn eval_mpoly(ast: &Ast, vars: &[char]) -> Result<MPoly> {
    let n = vars.len();
    Ok(match ast {
        Ast::Num(x) => MPoly::constant(BigRational::from_integer(x.clone()), n),
        Ast::Var(v) => {
            let i = vars.iter().position(|c| c == v).ok_or_else(|| Error::Parse(format!("unknown variable `{v}`")))?;
            MPoly::var(i, n)
        }
        Ast::Add(a, b) => eval_mpoly(a, vars)?.add(&eval_mpoly(b, vars)?),
        Ast::Sub(a, b) => eval_mpoly(a, vars)?.add(&eval_mpoly(b, vars)?.neg()),
        Ast::Mul(a, b) => eval_mpoly(a, vars)?.mul(&eval_mpoly(b, vars)?),
        Ast::Div(a, b) => {
            let d = eval_mpoly(b, vars)?
                .as_constant()
                .ok_or_else(|| Error::Parse("division by a non-constant in a polynomial".into()))?;
            if d.is_zero() {
                return Err(Error::Parse("division by zero".into()));
            }
            let inv = MPoly::constant(BigRational::one() / d, n);
            eval_mpoly(a, vars)?.mul(&inv)
        }
        Ast::Neg(a) => eval_mpoly(a, vars)?.neg(),
        Ast::Pow(a, e) => {
            let base = eval_mpoly(a, vars)?;
            (0..*e).fold(MPoly::constant(BigRational::one(), n), |acc, _| acc.mul(&base))
        }
    })
}

fn eval_ratfunc(ast: &Ast) -> Result<RatFunc> {
    Ok(match ast {
        Ast::Num(x) => RatFunc::poly(RatPoly::constant(BigRational::from_integer(x.clone()))),
        Ast::Var('t') => RatFunc::poly(RatPoly::t()),
        Ast::Var(v) => return Err(Error::Parse(format!("unknown variable `{v}` (expected t)"))),
        Ast::Add(a, b) => eval_ratfunc(a)?.add(&eval_ratfunc(b)?),
        Ast::Sub(a, b) => eval_ratfunc(a)?.sub(&eval_ratfunc(b)?),
        Ast::Mul(a, b) => eval_ratfunc(a)?.mul(&eval_ratfunc(b)?),
        Ast::Div(a, b) => {
            let d = eval_ratfunc(b)?;
            if d.num.is_zero() {
                return Err(Error::Parse("division by zero".into()));
            }
            eval_ratfunc(a)?.div(&d)?
        }
        Ast::Neg(a) => {
            let f = eval_ratfunc(a)?;
            RatFunc { num: -&f.num, den: f.den }
        }
        Ast::Pow(a, e) => {
            let base = eval_ratfunc(a)?;
            (0..*e).fold(RatFunc::poly(RatPoly::one()), |acc, _| acc.mul(&base))
        }
    })
}

/// Polynomial in the listed variables.
pub fn parse_mpoly(text: &str, vars: &[char]) -> Result<MPoly> {
    eval_mpoly(&parse_ast(text)?, vars)
}

/// Polynomial in t.
pub fn parse_univariate(text: &str) -> Result<RatPoly> {
    let m = parse_mpoly(text, &['t'])?;
    let deg = m.terms.keys().map(|e| e[0] as usize).max().unwrap_or(0);
    let mut c = vec![BigRational::zero(); deg + 1];
    for (e, x) in m.terms {
        c[e[0] as usize] = x;
    }
    Ok(RatPoly::new(c))
}

/// Rational function of t.
pub fn parse_ratfunc(text: &str) -> Result<RatFunc> {
    eval_ratfunc(&parse_ast(text)?)
}

/// Parse a rational number `a` or `a/b` (optionally signed).
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let f = parse_ratfunc(text)?;
    if !f.is_constant() {
        return Err(Error::Parse(format!("`{text}` is not a constant")));
    }
    Ok(f.num.coeff(0) / f.den.coeff(0))
}
