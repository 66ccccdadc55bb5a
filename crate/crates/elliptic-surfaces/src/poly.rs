//! Dense univariate polynomials over ℚ and their factorization.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Polynomial in t with rational coefficients, lowest degree first; no
/// trailing zeros (the zero polynomial has no coefficients).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RatPoly {
    coeffs: Vec<BigRational>,
}

fn q(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&x| q(x)).collect())
    }

    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(q(1))
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    /// The polynomial t.
    pub fn t() -> Self {
        Self::from_ints(&[0, 1])
    }

    /// t − r.
    pub fn linear_root(r: &BigRational) -> Self {
        Self::new(vec![-r.clone(), q(1)])
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> BigRational {
        self.coeffs.last().cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let l = self.leading();
        Self::new(self.coeffs.iter().map(|c| c / &l).collect())
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut r = Self::one();
        for _ in 0..e {
            r = &r * self;
        }
        r
    }

    pub fn derivative(&self) -> Self {
        Self::new(self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c * q(i as i64)).collect())
    }

    /// Euclidean division; panics on division by zero.
    pub fn div_rem(&self, d: &RatPoly) -> (RatPoly, RatPoly) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let dd = d.degree().unwrap();
        let lead = d.leading();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut quo = vec![BigRational::zero(); r.len() - dd];
        for i in (dd..r.len()).rev() {
            let c = &r[i] / &lead;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[i - dd + j] -= &c * dc;
            }
            quo[i - dd] = c;
        }
        r.truncate(dd);
        (Self::new(quo), Self::new(r))
    }

    /// Quotient when `d` divides `self`.
    pub fn exact_div(&self, d: &RatPoly) -> Option<RatPoly> {
        let (quo, r) = self.div_rem(d);
        r.is_zero().then_some(quo)
    }

    /// Monic gcd (zero if both are zero).
    pub fn gcd(&self, other: &RatPoly) -> RatPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Multiplicity of `p` (non-constant) as a factor of `self` (nonzero).
    pub fn valuation(&self, p: &RatPoly) -> u32 {
        assert!(!self.is_zero() && !p.is_constant());
        let mut v = 0;
        let mut f = self.clone();
        while let Some(g) = f.exact_div(p) {
            f = g;
            v += 1;
        }
        v
    }

    /// Substitute a polynomial for t.
    pub fn compose(&self, g: &RatPoly) -> RatPoly {
        self.coeffs.iter().rev().fold(Self::zero(), |acc, c| &(&acc * g) + &Self::constant(c.clone()))
    }

    /// Homogenized substitution t ↦ n/d, multiplied by d^k (k ≥ degree).
    pub fn homogeneous_compose(&self, n: &RatPoly, d: &RatPoly, k: usize) -> RatPoly {
        let deg = self.degree().unwrap_or(0);
        assert!(k >= deg);
        let mut acc = Self::zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            acc = &acc + &(&(&n.pow(i as u32) * &d.pow((k - i) as u32)) * &Self::constant(c.clone()));
        }
        acc
    }

    /// Reverse t ↦ 1/s, multiplied by s^k (k ≥ degree).
    pub fn reversed(&self, k: usize) -> RatPoly {
        let mut c = vec![BigRational::zero(); k + 1];
        for (i, x) in self.coeffs.iter().enumerate() {
            c[k - i] = x.clone();
        }
        Self::new(c)
    }

    /// Exact square root when one exists in ℚ[t].
    pub fn sqrt(&self) -> Option<RatPoly> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        let deg = self.degree().unwrap();
        if deg % 2 == 1 {
            return None;
        }
        let lead = rational_sqrt(&self.leading())?;
        let m = deg / 2;
        // coefficients of the root, highest first, by matching from the top
        let mut r = vec![BigRational::zero(); m + 1];
        r[m] = lead.clone();
        for k in 1..=m {
            let target = self.coeff(deg - k);
            let mut acc = BigRational::zero();
            for i in 1..k {
                acc += &r[m - i] * &r[m - (k - i)];
            }
            r[m - k] = (target - acc) / (q(2) * &lead);
        }
        let root = Self::new(r);
        (&root * &root == *self).then_some(root)
    }

    /// Primitive integer polynomial proportional to `self` with positive
    /// leading coefficient.
    pub fn primitive_integer(&self) -> Vec<BigInt> {
        let den = self.coeffs.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        let ints: Vec<BigInt> =
            self.coeffs.iter().map(|c| (c * BigRational::from_integer(den.clone())).to_integer()).collect();
        let g = ints.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
        let sign = if self.leading().is_negative() { -BigInt::one() } else { BigInt::one() };
        ints.into_iter().map(|x| x / &g * &sign).collect()
    }

    /// Square-free decomposition: pairs (g_i, i) with self = c · Π g_i^i,
    /// each g_i monic square-free and pairwise coprime.
    pub fn squarefree_decomposition(&self) -> Vec<(RatPoly, u32)> {
        let mut out = Vec::new();
        if self.is_constant() {
            return out;
        }
        let f = self.monic();
        let mut a = f.gcd(&f.derivative());
        let mut b = f.exact_div(&a).unwrap();
        let mut i = 1;
        while !b.is_constant() {
            let c = a.gcd(&b);
            let part = b.exact_div(&c).unwrap();
            if !part.is_constant() {
                out.push((part.monic(), i));
            }
            a = a.exact_div(&c).unwrap();
            b = c;
            i += 1;
        }
        out
    }

    /// Rational roots of a nonzero polynomial, ascending, without repetition.
    pub fn rational_roots(&self) -> Result<Vec<BigRational>> {
        let mut roots = Vec::new();
        if self.is_constant() {
            return Ok(roots);
        }
        let mut ints = self.primitive_integer();
        if ints[0].is_zero() {
            roots.push(BigRational::zero());
            let k = ints.iter().position(|x| !x.is_zero()).unwrap();
            ints.drain(..k);
        }
        if ints.len() > 1 {
            let p = divisors(&ints[0])?;
            let qs = divisors(ints.last().unwrap())?;
            let g = RatPoly::new(ints.iter().map(|x| BigRational::from_integer(x.clone())).collect());
            for num in &p {
                for den in &qs {
                    for s in [1i64, -1] {
                        let r = BigRational::new(num * s, den.clone());
                        if g.eval(&r).is_zero() && !roots.contains(&r) {
                            roots.push(r);
                        }
                    }
                }
            }
        }
        roots.sort();
        Ok(roots)
    }

    /// Factorization over ℚ into monic irreducible factors with
    /// multiplicities (sorted by degree), plus the leading constant.
    pub fn factor(&self) -> Result<(BigRational, Vec<(RatPoly, u32)>)> {
        if self.is_zero() {
            return Err(Error::Invalid("cannot factor the zero polynomial".into()));
        }
        let mut out = Vec::new();
        for (g, m) in self.squarefree_decomposition() {
            for h in factor_squarefree(&g)? {
                out.push((h, m));
            }
        }
        out.sort_by(|(a, m), (b, n)| (a.degree(), a, m).cmp(&(b.degree(), b, n)));
        Ok((self.leading(), out))
    }

    pub fn parse(text: &str) -> Result<RatPoly> {
        crate::expr::parse_univariate(text)
    }
}

pub fn rational_sqrt(x: &BigRational) -> Option<BigRational> {
    if x.is_negative() {
        return None;
    }
    let n = x.numer().sqrt();
    let d = x.denom().sqrt();
    (&n * &n == *x.numer() && &d * &d == *x.denom()).then(|| BigRational::new(n, d))
}

/// Squarefree integer k with x = k · (rational square); x nonzero.
pub fn square_class(x: &BigRational) -> Option<BigInt> {
    let m = x.numer() * x.denom();
    let sign = if m.is_negative() { -BigInt::one() } else { BigInt::one() };
    let fac = factorize(&m)?;
    Some(fac.into_iter().filter(|(_, e)| e % 2 == 1).fold(sign, |acc, (p, _)| acc * p))
}

/// Prime factorization by trial division; `None` when a cofactor beyond
/// the trial bound cannot be certified prime.
fn factorize(n: &BigInt) -> Option<Vec<(BigInt, u32)>> {
    const TRIAL: u64 = 1_000_000;
    let mut n = n.abs();
    let mut out = Vec::new();
    let mut p = 2u64;
    while p <= TRIAL && BigInt::from(p) * BigInt::from(p) <= n {
        let bp = BigInt::from(p);
        let mut e = 0;
        while (&n % &bp).is_zero() {
            n /= &bp;
            e += 1;
        }
        if e > 0 {
            out.push((bp, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > BigInt::one() {
        if BigInt::from(p) * BigInt::from(p) <= n {
            return None;
        }
        out.push((n, 1));
    }
    Some(out)
}

fn divisors(n: &BigInt) -> Result<Vec<BigInt>> {
    if n.is_zero() {
        return Ok(Vec::new());
    }
    let fac = factorize(n).ok_or_else(|| Error::Bound(format!("cannot factor {n} by trial division")))?;
    let mut out = vec![BigInt::one()];
    for (p, e) in fac {
        let mut next = Vec::new();
        for d in &out {
            let mut pe = BigInt::one();
            for _ in 0..=e {
                next.push(d * &pe);
                pe *= &p;
            }
        }
        out = next;
    }
    out.sort();
    Ok(out)
}

/// Upper bound on the number of candidate factors tried by Kronecker's method.
const KRONECKER_BUDGET: usize = 2_000_000;

/// Irreducible factors of a monic square-free polynomial: rational roots
/// first, then Kronecker's method on the remainder.
fn factor_squarefree(g: &RatPoly) -> Result<Vec<RatPoly>> {
    let mut out = Vec::new();
    let mut rest = g.clone();
    for r in g.rational_roots()? {
        let lin = RatPoly::linear_root(&r);
        rest = rest.exact_div(&lin).unwrap();
        out.push(lin);
    }
    let mut stack = vec![rest];
    while let Some(f) = stack.pop() {
        let Some(d) = f.degree() else { continue };
        if d == 0 {
            continue;
        }
        if d <= 3 {
            out.push(f.monic());
            continue;
        }
        match kronecker_split(&f)? {
            Some(h) => {
                let other = f.exact_div(&h).unwrap();
                stack.push(h);
                stack.push(other);
            }
            None => out.push(f.monic()),
        }
    }
    Ok(out)
}

/// A proper factor of degree 2..=deg/2 via interpolation through divisors
/// of the values at small integer points; `None` if irreducible.
fn kronecker_split(f: &RatPoly) -> Result<Option<RatPoly>> {
    let ints: Vec<BigInt> = f.primitive_integer();
    let fi = RatPoly::new(ints.iter().map(|x| BigRational::from_integer(x.clone())).collect());
    let n = fi.degree().unwrap();
    let mut budget = KRONECKER_BUDGET;
    for k in 2..=n / 2 {
        // k+1 interpolation points with nonzero values
        let mut pts = Vec::new();
        let mut x = 0i64;
        while pts.len() < k + 1 {
            let v = fi.eval(&q(x));
            if v.is_zero() {
                return Ok(Some(RatPoly::linear_root(&q(x))));
            }
            pts.push((x, v.to_integer()));
            x = if x > 0 { -x } else { -x + 1 };
        }
        let choices: Vec<Vec<BigInt>> = pts
            .iter()
            .enumerate()
            .map(|(i, (_, v))| {
                let ds = divisors(v)?;
                Ok(if i == 0 { ds } else { ds.iter().flat_map(|d| [d.clone(), -d.clone()]).collect() })
            })
            .collect::<Result<_>>()?;
        let total: usize = choices.iter().map(Vec::len).product();
        if total > budget {
            return Err(Error::Bound(format!("factorization of a degree-{n} polynomial exceeds the search budget")));
        }
        budget -= total;
        let mut idx = vec![0usize; k + 1];
        loop {
            let vals: Vec<(i64, BigInt)> = (0..=k).map(|i| (pts[i].0, choices[i][idx[i]].clone())).collect();
            let h = interpolate(&vals);
            if h.degree() == Some(k) && h.coeffs.iter().all(|c| c.is_integer()) && fi.exact_div(&h).is_some() {
                return Ok(Some(h.monic()));
            }
            let mut i = 0;
            loop {
                if i > k {
                    break;
                }
                idx[i] += 1;
                if idx[i] < choices[i].len() {
                    break;
                }
                idx[i] = 0;
                i += 1;
            }
            if i > k {
                break;
            }
        }
    }
    Ok(None)
}

fn interpolate(pts: &[(i64, BigInt)]) -> RatPoly {
    let mut acc = RatPoly::zero();
    for (i, (xi, yi)) in pts.iter().enumerate() {
        let mut basis = RatPoly::constant(BigRational::from_integer(yi.clone()));
        for (j, (xj, _)) in pts.iter().enumerate() {
            if i != j {
                basis = &basis * &RatPoly::new(vec![q(-xj), q(1)]);
                basis = basis.scale(&BigRational::new(1.into(), (xi - xj).into()));
            }
        }
        acc = &acc + &basis;
    }
    acc
}

impl Add for &RatPoly {
    type Output = RatPoly;
    fn add(self, o: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        RatPoly::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }
}

impl Sub for &RatPoly {
    type Output = RatPoly;
    fn sub(self, o: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        RatPoly::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }
}

impl Mul for &RatPoly {
    type Output = RatPoly;
    fn mul(self, o: &RatPoly) -> RatPoly {
        if self.is_zero() || o.is_zero() {
            return RatPoly::zero();
        }
        let mut c = vec![BigRational::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        RatPoly::new(c)
    }
}

impl Neg for &RatPoly {
    type Output = RatPoly;
    fn neg(self) -> RatPoly {
        RatPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for RatPoly {
            type Output = RatPoly;
            fn $m(self, o: RatPoly) -> RatPoly {
                (&self).$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let show_coeff = !a.is_one() || i == 0;
            if show_coeff {
                write!(f, "{a}")?;
                if i > 0 {
                    write!(f, "*")?;
                }
            }
            match i {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{i}")?,
            }
        }
        Ok(())
    }
}

/// Reduced quotient of polynomials with monic denominator.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RatFunc {
    pub num: RatPoly,
    pub den: RatPoly,
}

impl RatFunc {
    pub fn new(num: RatPoly, den: RatPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::Invalid("zero denominator".into()));
        }
        let g = num.gcd(&den);
        let g = if g.is_zero() { RatPoly::one() } else { g };
        let (n, d) = (num.exact_div(&g).unwrap(), den.exact_div(&g).unwrap());
        let l = d.leading();
        Ok(RatFunc { num: n.scale(&(BigRational::one() / &l)), den: d.monic() })
    }

    pub fn poly(p: RatPoly) -> Self {
        RatFunc { num: p, den: RatPoly::one() }
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    /// max(deg num, deg den).
    pub fn degree(&self) -> usize {
        self.num.degree().unwrap_or(0).max(self.den.degree().unwrap_or(0))
    }

    pub fn add(&self, o: &RatFunc) -> RatFunc {
        RatFunc::new(&(&self.num * &o.den) + &(&o.num * &self.den), &self.den * &o.den).unwrap()
    }

    pub fn sub(&self, o: &RatFunc) -> RatFunc {
        RatFunc::new(&(&self.num * &o.den) - &(&o.num * &self.den), &self.den * &o.den).unwrap()
    }

    pub fn mul(&self, o: &RatFunc) -> RatFunc {
        RatFunc::new(&self.num * &o.num, &self.den * &o.den).unwrap()
    }

    pub fn div(&self, o: &RatFunc) -> Result<RatFunc> {
        RatFunc::new(&self.num * &o.den, &self.den * &o.num)
    }

    pub fn parse(text: &str) -> Result<RatFunc> {
        crate::expr::parse_ratfunc(text)
    }

    /// Substitution f(r(t)).
    pub fn compose(&self, r: &RatFunc) -> Result<RatFunc> {
        let horner = |p: &RatPoly| {
            p.coeffs().iter().rev().fold(RatFunc::poly(RatPoly::zero()), |acc, c| {
                acc.mul(r).add(&RatFunc::poly(RatPoly::constant(c.clone())))
            })
        };
        horner(&self.num).div(&horner(&self.den))
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_constant() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}
