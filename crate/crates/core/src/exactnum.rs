//! Exact rationals, affine forms in `s`, polynomials and rational functions.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub type Rational = BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExactError {
    #[error("function is identically zero; its order is undefined")]
    ZeroFunction,
    #[error("pole of order {order} at s = {at}")]
    Pole { at: String, order: u32 },
    #[error("division by the zero function")]
    DivisionByZero,
    #[error("cannot parse `{input}`: {reason}")]
    Parse { input: String, reason: String },
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn parse_rational(text: &str) -> Result<Rational, ExactError> {
    let err = |reason: &str| ExactError::Parse { input: text.to_string(), reason: reason.to_string() };
    let t = text.trim();
    let (num, den) = match t.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (t, "1"),
    };
    let n: BigInt = num.parse().map_err(|_| err("bad numerator"))?;
    let d: BigInt = den.parse().map_err(|_| err("bad denominator"))?;
    if d.is_zero() {
        return Err(err("zero denominator"));
    }
    Ok(Rational::new(n, d))
}

/// `slope * s + intercept`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineForm {
    pub slope: Rational,
    pub intercept: Rational,
}

impl AffineForm {
    pub fn new(slope: Rational, intercept: Rational) -> Self {
        AffineForm { slope, intercept }
    }
    pub fn constant(c: Rational) -> Self {
        AffineForm { slope: Rational::zero(), intercept: c }
    }
    pub fn s() -> Self {
        AffineForm { slope: Rational::one(), intercept: Rational::zero() }
    }
    pub fn zero() -> Self {
        Self::constant(Rational::zero())
    }
    pub fn is_zero(&self) -> bool {
        self.slope.is_zero() && self.intercept.is_zero()
    }
    pub fn eval(&self, s0: &Rational) -> Rational {
        &self.slope * s0 + &self.intercept
    }
    pub fn scale(&self, c: &Rational) -> Self {
        AffineForm { slope: &self.slope * c, intercept: &self.intercept * c }
    }
    pub fn shift(&self, c: &Rational) -> Self {
        AffineForm { slope: self.slope.clone(), intercept: &self.intercept + c }
    }
    pub fn to_poly(&self) -> Poly {
        Poly::new(vec![self.intercept.clone(), self.slope.clone()])
    }

    /// Parses forms such as `s-1`, `2s-5`, `1-s`, `(s-11)/2`, `s/2-4`, `-4`.
    pub fn parse(text: &str) -> Result<Self, ExactError> {
        let mut p = AffineParser { src: text, chars: text.chars().filter(|c| !c.is_whitespace()).collect(), pos: 0 };
        let v = p.expr()?;
        if p.pos != p.chars.len() {
            return Err(p.fail("trailing input"));
        }
        Ok(v)
    }
}

struct AffineParser<'a> {
    src: &'a str,
    chars: Vec<char>,
    pos: usize,
}

impl AffineParser<'_> {
    fn fail(&self, reason: &str) -> ExactError {
        ExactError::Parse { input: self.src.to_string(), reason: format!("{reason} at offset {}", self.pos) }
    }
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }
    fn expr(&mut self) -> Result<AffineForm, ExactError> {
        let mut acc = self.term()?;
        while let Some(c) = self.peek() {
            match c {
                '+' => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                '-' => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }
    fn term(&mut self) -> Result<AffineForm, ExactError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    let rhs = self.factor()?;
                    acc = self.product(acc, rhs)?;
                }
                Some('/') => {
                    self.pos += 1;
                    let rhs = self.factor()?;
                    if !rhs.slope.is_zero() || rhs.intercept.is_zero() {
                        return Err(self.fail("division by a non-constant or zero"));
                    }
                    acc = acc.scale(&rhs.intercept.recip());
                }
                Some(c) if c == 's' || c == '(' => {
                    let rhs = self.factor()?;
                    acc = self.product(acc, rhs)?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }
    fn product(&self, a: AffineForm, b: AffineForm) -> Result<AffineForm, ExactError> {
        if a.slope.is_zero() {
            Ok(b.scale(&a.intercept))
        } else if b.slope.is_zero() {
            Ok(a.scale(&b.intercept))
        } else {
            Err(self.fail("product is not affine"))
        }
    }
    fn factor(&mut self) -> Result<AffineForm, ExactError> {
        match self.peek() {
            Some('-') => {
                self.pos += 1;
                Ok(-&self.factor()?)
            }
            Some('+') => {
                self.pos += 1;
                self.factor()
            }
            Some('(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.fail("expected `)`"));
                }
                self.pos += 1;
                Ok(v)
            }
            Some('s') => {
                self.pos += 1;
                Ok(AffineForm::s())
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
                    self.pos += 1;
                }
                let digits: String = self.chars[start..self.pos].iter().collect();
                let n: BigInt = digits.parse().map_err(|_| self.fail("bad integer"))?;
                Ok(AffineForm::constant(Rational::from_integer(n)))
            }
            _ => Err(self.fail("unexpected token")),
        }
    }
}

impl Add for &AffineForm {
    type Output = AffineForm;
    fn add(self, o: &AffineForm) -> AffineForm {
        AffineForm { slope: &self.slope + &o.slope, intercept: &self.intercept + &o.intercept }
    }
}

impl Sub for &AffineForm {
    type Output = AffineForm;
    fn sub(self, o: &AffineForm) -> AffineForm {
        AffineForm { slope: &self.slope - &o.slope, intercept: &self.intercept - &o.intercept }
    }
}

impl Neg for &AffineForm {
    type Output = AffineForm;
    fn neg(self) -> AffineForm {
        AffineForm { slope: -&self.slope, intercept: -&self.intercept }
    }
}

fn fmt_coeff_s(c: &Rational) -> String {
    if c.is_one() {
        "s".into()
    } else if *c == -Rational::one() {
        "-s".into()
    } else if c.is_integer() {
        format!("{c}s")
    } else {
        // 3/2 s is written 3s/2
        let n = c.numer();
        let head = if n.is_one() {
            "s".to_string()
        } else if *n == -BigInt::one() {
            "-s".to_string()
        } else {
            format!("{n}s")
        };
        format!("{head}/{}", c.denom())
    }
}

impl fmt::Display for AffineForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.slope.is_zero() {
            return write!(f, "{}", self.intercept);
        }
        let head = fmt_coeff_s(&self.slope);
        if self.intercept.is_zero() {
            write!(f, "{head}")
        } else if self.intercept.is_positive() {
            write!(f, "{head}+{}", self.intercept)
        } else {
            write!(f, "{head}-{}", -&self.intercept)
        }
    }
}

/// Dense polynomial in `s`, coefficients in ascending degree, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }
    pub fn zero() -> Self {
        Poly { coeffs: vec![] }
    }
    pub fn one() -> Self {
        Self::constant(Rational::one())
    }
    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }
    /// `s - root`
    pub fn linear_root(root: &Rational) -> Self {
        Self::new(vec![-root, Rational::one()])
    }
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }
    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }
    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }
    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }
    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.leading().recip())
    }
    pub fn derivative(&self) -> Self {
        Self::new(self.coeffs.iter().enumerate().skip(1).map(|(k, c)| c * int(k as i64)).collect())
    }
    /// Euclidean division; panics on a zero divisor (callers check).
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let dd = d.degree().unwrap();
        let lead_inv = d.leading().recip();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Poly::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] * &lead_inv;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    rem[k + j] -= &c * dc;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Poly::new(quot), Poly::new(rem))
    }
    /// Monic gcd; gcd(0, 0) = 0.
    pub fn gcd(a: &Poly, b: &Poly) -> Poly {
        let (mut x, mut y) = (a.clone(), b.clone());
        while !y.is_zero() {
            let r = x.div_rem(&y).1;
            x = y;
            y = r;
        }
        x.monic()
    }
    /// Multiplicity of `root` as a root (0 if not a root). Zero polynomial is rejected.
    pub fn root_multiplicity(&self, root: &Rational) -> Result<u32, ExactError> {
        if self.is_zero() {
            return Err(ExactError::ZeroFunction);
        }
        let lin = Poly::linear_root(root);
        let mut p = self.clone();
        let mut k = 0;
        while p.eval(root).is_zero() {
            p = p.div_rem(&lin).0;
            k += 1;
        }
        Ok(k)
    }
    pub fn pow(&self, n: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, o: &Poly) -> Poly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let z = Rational::zero();
        Poly::new((0..n).map(|k| self.coeffs.get(k).unwrap_or(&z) + o.coeffs.get(k).unwrap_or(&z)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, o: &Poly) -> Poly {
        self + &(-o)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { "-" } else { "+" })?;
            }
            first = false;
            let mono = match k {
                0 => String::new(),
                1 => "s".to_string(),
                _ => format!("s^{k}"),
            };
            if k == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{mono}")?;
            } else if mag.is_integer() {
                write!(f, "{mag}{mono}")?;
            } else {
                write!(f, "({mag}){mono}")?;
            }
        }
        Ok(())
    }
}

/// Reduced quotient with monic denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> Result<Self, ExactError> {
        if den.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = Poly::gcd(&num, &den);
        let num = num.div_rem(&g).0;
        let den = den.div_rem(&g).0;
        let lead = den.leading();
        Ok(RatFunc { num: num.scale(&lead.recip()), den: den.monic() })
    }
    pub fn from_poly(p: Poly) -> Self {
        RatFunc { num: p, den: Poly::one() }
    }
    pub fn constant(c: Rational) -> Self {
        Self::from_poly(Poly::constant(c))
    }
    pub fn zero() -> Self {
        Self::from_poly(Poly::zero())
    }
    pub fn one() -> Self {
        Self::from_poly(Poly::one())
    }
    pub fn affine(a: &AffineForm) -> Self {
        Self::from_poly(a.to_poly())
    }
    pub fn numer(&self) -> &Poly {
        &self.num
    }
    pub fn denom(&self) -> &Poly {
        &self.den
    }
    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    pub fn recip(&self) -> Result<Self, ExactError> {
        Self::new(self.den.clone(), self.num.clone())
    }
    pub fn div(&self, o: &RatFunc) -> Result<Self, ExactError> {
        if o.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        Self::new(&self.num * &o.den, &self.den * &o.num)
    }
    pub fn pow(&self, n: i32) -> Result<Self, ExactError> {
        let base = if n < 0 { self.recip()? } else { self.clone() };
        let k = n.unsigned_abs();
        Ok(RatFunc { num: base.num.pow(k), den: base.den.pow(k) })
    }
    pub fn derivative(&self) -> Self {
        let n = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        Self::new(n, &self.den * &self.den).expect("square of a nonzero denominator")
    }
    /// Order of vanishing at `s0`: positive for zeros, negative for poles.
    pub fn order_at(&self, s0: &Rational) -> Result<i64, ExactError> {
        let z = self.num.root_multiplicity(s0)? as i64;
        let p = self.den.root_multiplicity(s0)? as i64;
        Ok(z - p)
    }
    pub fn eval_at(&self, s0: &Rational) -> Result<Rational, ExactError> {
        let d = self.den.eval(s0);
        if d.is_zero() {
            let order = self.den.root_multiplicity(s0)?;
            return Err(ExactError::Pole { at: s0.to_string(), order });
        }
        Ok(self.num.eval(s0) / d)
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, o: &RatFunc) -> RatFunc {
        let n = &(&self.num * &o.den) + &(&o.num * &self.den);
        RatFunc::new(n, &self.den * &o.den).expect("nonzero denominators")
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, o: &RatFunc) -> RatFunc {
        self + &(-o)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, o: &RatFunc) -> RatFunc {
        RatFunc::new(&self.num * &o.num, &self.den * &o.den).expect("nonzero denominators")
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.degree() == Some(0) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

/// Rising factorial `z (z+1) ... (z+n-1)`.
pub fn pochhammer(z: &AffineForm, n: u32) -> RatFunc {
    let mut acc = Poly::one();
    for k in 0..n {
        acc = &acc * &z.shift(&int(k as i64)).to_poly();
    }
    RatFunc::from_poly(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn af(t: &str) -> AffineForm {
        AffineForm::parse(t).unwrap()
    }

    #[test]
    fn affine_parse_and_display() {
        assert_eq!(af("s-1"), AffineForm::new(int(1), int(-1)));
        assert_eq!(af("2s-5"), AffineForm::new(int(2), int(-5)));
        assert_eq!(af("1-s"), AffineForm::new(int(-1), int(1)));
        assert_eq!(af("(s-11)/2"), AffineForm::new(rat(1, 2), rat(-11, 2)));
        assert_eq!(af("s/2-4"), AffineForm::new(rat(1, 2), int(-4)));
        assert_eq!(af("-4"), AffineForm::constant(int(-4)));
        assert_eq!(af("18 - s"), AffineForm::new(int(-1), int(18)));
        for t in ["s-1", "2s-10", "-s+1", "s/2-4", "3s/2+1", "0", "-7/3", "s"] {
            assert_eq!(af(t).to_string(), t);
            assert_eq!(af(&af(t).to_string()), af(t));
        }
        assert!(AffineForm::parse("s*s").is_err());
        assert!(AffineForm::parse("s-").is_err());
        assert!(AffineForm::parse("(s-1)/0").is_err());
    }

    #[test]
    fn pochhammer_examples() {
        assert_eq!(pochhammer(&AffineForm::s(), 0), RatFunc::one());
        assert_eq!(pochhammer(&af("(1-s)/2"), 1), RatFunc::affine(&af("(1-s)/2")));
        let p = pochhammer(&af("(s-11)/2"), 3);
        assert_eq!(p.eval_at(&int(7)).unwrap(), int(0));
        // (-2)(-1)(0) with a simple zero coming from the last factor
        assert_eq!(p.order_at(&int(7)).unwrap(), 1);
    }

    #[test]
    fn order_examples() {
        let s5 = RatFunc::affine(&af("s-5"));
        let f = (&s5 * &s5).div(&s5).unwrap();
        assert_eq!(f.order_at(&int(5)).unwrap(), 1);
        let g = &s5 * &RatFunc::affine(&af("s-3"));
        assert_eq!(g.order_at(&int(3)).unwrap(), 1);
        let v1 = RatFunc::affine(&af("1-s")).div(&RatFunc::affine(&af("1+s"))).unwrap();
        assert_eq!(v1.order_at(&int(1)).unwrap(), 1);
        assert_eq!(RatFunc::zero().order_at(&int(1)), Err(ExactError::ZeroFunction));
    }

    #[test]
    fn eval_examples() {
        let v1 = RatFunc::affine(&af("1-s")).div(&RatFunc::affine(&af("1+s"))).unwrap();
        assert_eq!(v1.eval_at(&int(4)).unwrap(), rat(-3, 5));
        let v2 = (&RatFunc::affine(&af("1-s")) * &RatFunc::affine(&af("3-s")))
            .div(&(&RatFunc::affine(&af("1+s")) * &RatFunc::affine(&af("3+s"))))
            .unwrap();
        assert_eq!(v2.eval_at(&int(4)).unwrap(), rat(3, 35));
        assert_eq!(RatFunc::one().derivative(), RatFunc::zero());
        let pole = RatFunc::one().div(&RatFunc::affine(&af("s-2")).pow(2).unwrap()).unwrap();
        assert_eq!(pole.eval_at(&int(2)), Err(ExactError::Pole { at: "2".into(), order: 2 }));
    }

    #[test]
    fn canonical_form_and_display() {
        let a = RatFunc::affine(&af("2s-2")).div(&RatFunc::affine(&af("4s+4"))).unwrap();
        let b = RatFunc::affine(&af("s-1")).div(&RatFunc::affine(&af("2s+2"))).unwrap();
        assert_eq!(a, b);
        assert_eq!(b.denom().leading(), int(1));
        assert_eq!(b.to_string(), "((1/2)s-1/2)/(s+1)");
        assert_eq!(Poly::new(vec![int(2), int(-3), int(1)]).to_string(), "s^2-3s+2");
    }
}
