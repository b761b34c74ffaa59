//! Archimedean multiplier recipes: products of `A1`-conjugated diagonal Pochhammer ratios
//! applied to the base vector, evaluated exactly as rational functions of `s`.

use std::fmt;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::exactnum::{int, pochhammer, rat, AffineForm, ExactError, RatFunc, Rational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ArchError {
    #[error("malformed recipe {input:?}: {reason}")]
    Malformed { input: String, reason: String },
    #[error("recipe refers to unknown entry {0}")]
    UnknownReference(String),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

pub type Mat3 = [[Rational; 3]; 3];

pub fn base_matrix() -> Mat3 {
    let a = [[2, 2, 1], [56, 8, -4], [140, -20, 6]];
    a.map(|row| row.map(int))
}

pub fn transpose(m: &Mat3) -> Mat3 {
    std::array::from_fn(|i| std::array::from_fn(|j| m[j][i].clone()))
}

pub fn mat_mul(a: &Mat3, b: &Mat3) -> Mat3 {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| (0..3).fold(Rational::zero(), |acc, k| acc + &a[i][k] * &b[k][j]))
    })
}

/// Gauss-Jordan inverse; `None` when singular.
pub fn mat_inverse(m: &Mat3) -> Option<Mat3> {
    let mut a: Vec<Vec<Rational>> = (0..3)
        .map(|i| {
            let mut row = m[i].to_vec();
            row.extend((0..3).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            row
        })
        .collect();
    for c in 0..3 {
        let p = (c..3).find(|&r| !a[r][c].is_zero())?;
        a.swap(c, p);
        let inv = Rational::one() / &a[c][c];
        for x in a[c].iter_mut() {
            *x *= &inv;
        }
        for r in 0..3 {
            if r != c && !a[r][c].is_zero() {
                let f = a[r][c].clone();
                let pivot = a[c].clone();
                for (x, y) in a[r].iter_mut().zip(&pivot) {
                    *x -= &f * y;
                }
            }
        }
    }
    Some(std::array::from_fn(|i| std::array::from_fn(|j| a[i][j + 3].clone())))
}

pub fn a1() -> Mat3 {
    transpose(&base_matrix())
}

pub fn a1_inverse() -> Mat3 {
    mat_inverse(&a1()).expect("A1 is invertible")
}

/// `v_k(x) = ((1-x)/2)_k / ((1+x)/2)_k`.
pub fn v_entry(k: u32, x: &AffineForm) -> RatFunc {
    let half = rat(1, 2);
    let num = (&AffineForm::constant(int(1)) - x).scale(&half);
    let den = x.shift(&int(1)).scale(&half);
    pochhammer(&num, k).div(&pochhammer(&den, k)).expect("Pochhammer denominator is a nonzero polynomial")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Token {
    A1,
    A1Inv,
    /// `d(arg)^power`.
    D(AffineForm, u32),
    /// The base vector `(0,0,1)^t`.
    Base,
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::A1 => write!(f, "A1"),
            Token::A1Inv => write!(f, "A1^-1"),
            Token::D(x, 1) => write!(f, "d({x})"),
            Token::D(x, k) => write!(f, "d({x})^{k}"),
            Token::Base => write!(f, "e3"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixRecipe {
    pub tokens: Vec<Token>,
}

impl fmt::Display for MatrixRecipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.tokens.iter().map(|t| t.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

impl MatrixRecipe {
    /// Whitespace-separated tokens `A1`, `A1^-1`, `d(<affine>)`, `d(<affine>)^k`, `e3`.
    /// `lookup` resolves references of the form `v[<word>]` to previously parsed recipes.
    pub fn parse_with(text: &str, lookup: &dyn Fn(&str) -> Option<MatrixRecipe>) -> Result<Self, ArchError> {
        let bad = |reason: &str| ArchError::Malformed { input: text.to_string(), reason: reason.to_string() };
        let mut tokens = Vec::new();
        for tok in text.split_whitespace() {
            match tok {
                "A1" => tokens.push(Token::A1),
                "A1^-1" => tokens.push(Token::A1Inv),
                "e3" => tokens.push(Token::Base),
                t if t.starts_with("d(") => {
                    let close = t.rfind(')').ok_or_else(|| bad("unclosed d("))?;
                    let arg = AffineForm::parse(&t[2..close])?;
                    let power = match &t[close + 1..] {
                        "" => 1,
                        p => p.strip_prefix('^').and_then(|k| k.parse().ok()).filter(|&k| k >= 1).ok_or_else(|| bad("bad d exponent"))?,
                    };
                    tokens.push(Token::D(arg, power));
                }
                t if t.starts_with("v[") => {
                    let sub = lookup(t).ok_or_else(|| ArchError::UnknownReference(t.to_string()))?;
                    tokens.extend(sub.tokens);
                }
                _ => return Err(bad(&format!("unknown token {tok}"))),
            }
        }
        let r = MatrixRecipe { tokens };
        r.validate().map_err(|e| bad(&e))?;
        Ok(r)
    }

    pub fn parse(text: &str) -> Result<Self, ArchError> {
        Self::parse_with(text, &|_| None)
    }

    fn validate(&self) -> Result<(), String> {
        match self.tokens.iter().position(|t| *t == Token::Base) {
            Some(p) if p + 1 == self.tokens.len() => Ok(()),
            Some(_) => Err("base vector must be the last token".into()),
            None => Err("missing base vector".into()),
        }
    }

    /// Exact product, applied right to left to the base vector.
    pub fn evaluate(&self) -> Result<MultiplierVector, ArchError> {
        self.validate().map_err(|reason| ArchError::Malformed { input: self.to_string(), reason })?;
        let mut v = vec![RatFunc::zero(), RatFunc::zero(), RatFunc::one()];
        let (a, ai) = (a1(), a1_inverse());
        for t in self.tokens.iter().rev().skip(1) {
            v = match t {
                Token::A1 => apply_const(&a, &v),
                Token::A1Inv => apply_const(&ai, &v),
                Token::D(x, k) => {
                    let mut out = v.clone();
                    for _ in 0..*k {
                        out = vec![&v_entry(2, x) * &out[0], &v_entry(1, x) * &out[1], out[2].clone()];
                    }
                    out
                }
                Token::Base => unreachable!("validated"),
            };
        }
        Ok(MultiplierVector { entries: v })
    }
}

fn apply_const(m: &Mat3, v: &[RatFunc]) -> Vec<RatFunc> {
    (0..3)
        .map(|i| (0..3).fold(RatFunc::zero(), |acc, j| &acc + &(&RatFunc::constant(m[i][j].clone()) * &v[j])))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplierVector {
    pub entries: Vec<RatFunc>,
}

impl MultiplierVector {
    pub fn eval_at(&self, s0: &Rational) -> Result<Vec<Rational>, ExactError> {
        self.entries.iter().map(|e| e.eval_at(s0)).collect()
    }

    pub fn derivative_at(&self, s0: &Rational) -> Result<Vec<Rational>, ExactError> {
        self.entries.iter().map(|e| e.derivative().eval_at(s0)).collect()
    }
}

/// Per-coordinate constraint: `Zero` asserts exact vanishing, `Any` records only.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Slot {
    Zero,
    Any,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pattern(pub Vec<Slot>);

impl Pattern {
    /// `"00*"` style, or a single `"0"` for the whole vector.
    pub fn parse(text: &str) -> Result<Self, ArchError> {
        let slots: Result<Vec<Slot>, ArchError> = text
            .chars()
            .filter(|c| !matches!(c, '(' | ')' | ',' | ' '))
            .map(|c| match c {
                '0' => Ok(Slot::Zero),
                '*' => Ok(Slot::Any),
                _ => Err(ArchError::Malformed { input: text.into(), reason: "pattern uses 0 and * only".into() }),
            })
            .collect();
        let slots = slots?;
        match slots.len() {
            1 => Ok(Pattern(vec![slots[0]; 3])),
            3 => Ok(Pattern(slots)),
            _ => Err(ArchError::Malformed { input: text.into(), reason: "pattern needs 1 or 3 slots".into() }),
        }
    }

    fn matches(&self, v: &[Rational]) -> bool {
        self.0.iter().zip(v).all(|(p, x)| *p == Slot::Any || x.is_zero())
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<&str> = self.0.iter().map(|p| if *p == Slot::Zero { "0" } else { "*" }).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatternCheck {
    pub ok: bool,
    pub value: Vec<Rational>,
    pub derivative: Vec<Rational>,
}

pub fn pattern_check(
    v: &MultiplierVector,
    s0: &Rational,
    value: &Pattern,
    derivative: Option<&Pattern>,
) -> Result<PatternCheck, ArchError> {
    let val = v.eval_at(s0)?;
    let der = v.derivative_at(s0)?;
    let ok = value.matches(&val) && derivative.is_none_or(|p| p.matches(&der));
    Ok(PatternCheck { ok, value: val, derivative: der })
}

/// Order of vanishing of the whole vector at `s0` (minimum over coordinates).
pub fn vanishing_order(v: &MultiplierVector, s0: &Rational) -> Result<Option<i64>, ExactError> {
    let mut best: Option<i64> = None;
    for e in &v.entries {
        if e.is_zero() {
            continue;
        }
        let k = e.order_at(s0)?;
        best = Some(best.map_or(k, |b| b.min(k)));
    }
    Ok(best)
}
