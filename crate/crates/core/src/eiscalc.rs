//! Constant-term calculus: exponent traces along Weyl words, zeta-product c-functions,
//! pole/zero ledgers at special points and convergence verdicts.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::exactnum::{int, pochhammer, AffineForm, ExactError, Rational};
use crate::rootsys::{coroot_pairing, reflect_affine, RootError, RootSystem, Vector, WeylElem, WeylWord};

pub type CoordVector = Vec<AffineForm>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EisError {
    #[error(transparent)]
    Root(#[from] RootError),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error("no step rule for roots of squared length {0}")]
    MissingRule(String),
    #[error("cannot parse zeta product {input:?}: {reason}")]
    Parse { input: String, reason: String },
    #[error("trace of {0} disagrees with the matrix action")]
    TraceMismatch(String),
}

/// `coeff * nu - rho`; the usual choice is `coeff = s`.
pub fn lambda_with(sys: &RootSystem, nu: &[Rational], coeff: &AffineForm) -> CoordVector {
    nu.iter().zip(sys.rho()).map(|(n, r)| &coeff.scale(n) - &AffineForm::constant(r)).collect()
}

pub fn lambda_s(sys: &RootSystem, nu: &[Rational]) -> CoordVector {
    lambda_with(sys, nu, &AffineForm::s())
}

pub fn constant_vector(v: &[Rational]) -> CoordVector {
    v.iter().map(|x| AffineForm::constant(x.clone())).collect()
}

pub fn add_vectors(a: &[AffineForm], b: &[AffineForm]) -> CoordVector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn fmt_vector(v: &[AffineForm]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(", "))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceStep {
    /// Letters already applied, in word order.
    pub prefix: WeylWord,
    pub index: usize,
    /// Coroot pairing of the vector before this step.
    pub pairing: AffineForm,
    pub result: CoordVector,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaTrace {
    pub steps: Vec<TraceStep>,
    pub result: CoordVector,
}

/// Apply a reduced word to `lambda`, rightmost letter first, recording each pairing.
pub fn apply_word(sys: &RootSystem, lambda: &[AffineForm], word: &WeylWord) -> Result<LambdaTrace, EisError> {
    if !sys.is_reduced(word)? {
        return Err(RootError::NotReduced(word.to_string()).into());
    }
    let mut cur: CoordVector = lambda.to_vec();
    let mut steps = Vec::with_capacity(word.len());
    for (k, &i) in word.0.iter().enumerate().rev() {
        let alpha = sys.alpha(i);
        let pairing = coroot_pairing(&cur, alpha);
        cur = reflect_affine(&cur, alpha);
        steps.push(TraceStep { prefix: WeylWord(word.0[k + 1..].to_vec()), index: i, pairing, result: cur.clone() });
    }
    if sys.elem(word)?.apply_affine(lambda) != cur {
        return Err(EisError::TraceMismatch(word.to_string()));
    }
    Ok(LambdaTrace { steps, result: cur })
}

/// `w(lambda) + rho`.
pub fn shifted_exponent(sys: &RootSystem, lambda: &[AffineForm], w: &WeylElem) -> CoordVector {
    add_vectors(&w.apply_affine(lambda), &constant_vector(&sys.rho()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ConvergenceStatus {
    AbsolutelyConvergent,
    Boundary,
    NotConvergent,
}

impl fmt::Display for ConvergenceStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ConvergenceStatus::AbsolutelyConvergent => "absolutely-convergent",
            ConvergenceStatus::Boundary => "boundary",
            ConvergenceStatus::NotConvergent => "not-convergent",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConvergenceVerdict {
    pub status: ConvergenceStatus,
    pub value: Rational,
    pub threshold: Rational,
    pub margin: Rational,
}

/// Compare `pairing(s0)` against a threshold; equality is reported as a boundary case.
pub fn convergence_verdict(pairing: &AffineForm, s0: &Rational, threshold: &Rational) -> ConvergenceVerdict {
    let value = pairing.eval(s0);
    let margin = &value - threshold;
    let status = if margin.is_positive() {
        ConvergenceStatus::AbsolutelyConvergent
    } else if margin.is_zero() {
        ConvergenceStatus::Boundary
    } else {
        ConvergenceStatus::NotConvergent
    };
    ConvergenceVerdict { status, value, threshold: threshold.clone(), margin }
}

/// Which cubic etale algebra a `zetaE` factor belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Etale {
    Split,
    QxF,
    Field,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FactorKind {
    Zeta,
    ZetaTheta,
    ZetaE(Etale),
    /// Dedekind zeta of the quadratic field in the `QxF` algebra.
    ZetaF,
    Gamma,
    GammaR,
    GammaC,
    Pochhammer(u32),
}

impl FactorKind {
    pub fn name(&self) -> String {
        match self {
            FactorKind::Zeta => "zeta".into(),
            FactorKind::ZetaTheta => "zetaTheta".into(),
            FactorKind::ZetaE(Etale::Split) => "zetaE_split".into(),
            FactorKind::ZetaE(Etale::QxF) => "zetaE_qxf".into(),
            FactorKind::ZetaE(Etale::Field) => "zetaE_field".into(),
            FactorKind::ZetaF => "zetaF".into(),
            FactorKind::Gamma => "gamma".into(),
            FactorKind::GammaR => "gammaR".into(),
            FactorKind::GammaC => "gammaC".into(),
            FactorKind::Pochhammer(_) => "poch".into(),
        }
    }

    fn from_name(name: &str) -> Option<Self> {
        Some(match name {
            "zeta" => FactorKind::Zeta,
            "zetaTheta" => FactorKind::ZetaTheta,
            "zetaE_split" => FactorKind::ZetaE(Etale::Split),
            "zetaE_qxf" => FactorKind::ZetaE(Etale::QxF),
            "zetaE_field" => FactorKind::ZetaE(Etale::Field),
            "zetaF" => FactorKind::ZetaF,
            "gamma" => FactorKind::Gamma,
            "gammaR" => FactorKind::GammaR,
            "gammaC" => FactorKind::GammaC,
            _ => return None,
        })
    }

    fn is_zeta_like(&self) -> bool {
        matches!(self, FactorKind::Zeta | FactorKind::ZetaTheta | FactorKind::ZetaE(_) | FactorKind::ZetaF)
    }

    fn is_gamma_like(&self) -> bool {
        matches!(self, FactorKind::Gamma | FactorKind::GammaR | FactorKind::GammaC)
    }
}

/// Factor argument: an affine form plus an optional opaque symbol such as `+j`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FactorArg {
    pub affine: AffineForm,
    pub symbol: Option<(bool, String)>,
}

impl FactorArg {
    pub fn plain(affine: AffineForm) -> Self {
        FactorArg { affine, symbol: None }
    }

    pub fn parse(text: &str) -> Result<Self, ExactError> {
        let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let bytes: Vec<char> = t.chars().collect();
        let mut depth = 0i32;
        for (k, &c) in bytes.iter().enumerate() {
            match c {
                '(' => depth += 1,
                ')' => depth -= 1,
                c if c.is_ascii_alphabetic() && c != 's' => {
                    if depth != 0 || k == 0 || !(bytes[k - 1] == '+' || bytes[k - 1] == '-') {
                        return Err(ExactError::Parse { input: text.into(), reason: "opaque symbol must be a top-level +x or -x term".into() });
                    }
                    let end = bytes[k..].iter().position(|c| !c.is_ascii_alphanumeric()).map_or(bytes.len(), |e| k + e);
                    let sym: String = bytes[k..end].iter().collect();
                    let negative = bytes[k - 1] == '-';
                    let rest: String = bytes[..k - 1].iter().chain(bytes[end..].iter()).collect();
                    let affine = if rest.is_empty() { AffineForm::zero() } else { AffineForm::parse(&rest)? };
                    return Ok(FactorArg { affine, symbol: Some((negative, sym)) });
                }
                _ => {}
            }
        }
        Ok(FactorArg::plain(AffineForm::parse(&t)?))
    }

    fn shifted(&self, c: &Rational) -> Self {
        FactorArg { affine: self.affine.shift(c), symbol: self.symbol.clone() }
    }
}

impl fmt::Display for FactorArg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.symbol {
            None => write!(f, "{}", self.affine),
            Some((neg, sym)) => {
                let sign = if *neg { '-' } else { '+' };
                if self.affine.is_zero() {
                    write!(f, "{}{}", if *neg { "-" } else { "" }, sym)
                } else {
                    write!(f, "{}{}{}", self.affine, sign, sym)
                }
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ZetaFactor {
    pub kind: FactorKind,
    pub arg: FactorArg,
    pub exponent: i32,
}

impl fmt::Display for ZetaFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            FactorKind::Pochhammer(n) => write!(f, "poch({},{})", self.arg, n)?,
            k => write!(f, "{}({})", k.name(), self.arg)?,
        }
        if self.exponent.abs() != 1 {
            write!(f, "^{}", self.exponent.abs())?;
        }
        Ok(())
    }
}

/// Canonical multiset of factors: equal arguments merged, zero exponents dropped.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ZetaProduct {
    factors: BTreeMap<(FactorKind, FactorArg), i32>,
}

impl ZetaProduct {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn single(kind: FactorKind, arg: FactorArg, exponent: i32) -> Self {
        let mut p = Self::one();
        p.push(kind, arg, exponent);
        p
    }

    pub fn push(&mut self, kind: FactorKind, arg: FactorArg, exponent: i32) {
        let key = (kind, arg);
        let e = self.factors.get(&key).copied().unwrap_or(0) + exponent;
        if e == 0 {
            self.factors.remove(&key);
        } else {
            self.factors.insert(key, e);
        }
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn factors(&self) -> Vec<ZetaFactor> {
        self.factors.iter().map(|((k, a), e)| ZetaFactor { kind: *k, arg: a.clone(), exponent: *e }).collect()
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn mul(&self, o: &ZetaProduct) -> ZetaProduct {
        let mut out = self.clone();
        for ((k, a), e) in &o.factors {
            out.push(*k, a.clone(), *e);
        }
        out
    }

    pub fn inv(&self) -> ZetaProduct {
        ZetaProduct { factors: self.factors.iter().map(|(k, e)| (k.clone(), -e)).collect() }
    }

    pub fn div(&self, o: &ZetaProduct) -> ZetaProduct {
        self.mul(&o.inv())
    }

    /// Replace `zetaTheta(x)` by `zeta(x) zeta(x-3)`; a no-op on products without such factors.
    pub fn expand_theta(&self) -> ZetaProduct {
        let mut out = ZetaProduct::one();
        for ((k, a), e) in &self.factors {
            if *k == FactorKind::ZetaTheta {
                out.push(FactorKind::Zeta, a.clone(), *e);
                out.push(FactorKind::Zeta, a.shifted(&int(-3)), *e);
            } else {
                out.push(*k, a.clone(), *e);
            }
        }
        out
    }

    /// Keep only the zeta-type factors.
    pub fn finite_part(&self) -> ZetaProduct {
        ZetaProduct { factors: self.factors.iter().filter(|((k, _), _)| k.is_zeta_like()).map(|(k, e)| (k.clone(), *e)).collect() }
    }

    pub fn parse(text: &str) -> Result<ZetaProduct, EisError> {
        let chars: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
        let mut p = ProductParser { chars: &chars, pos: 0, input: text };
        let out = p.product()?;
        if p.pos != chars.len() {
            return Err(p.err("trailing input"));
        }
        Ok(out)
    }
}

impl fmt::Display for ZetaProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fs = self.factors();
        let num: Vec<String> = fs.iter().filter(|x| x.exponent > 0).map(|x| x.to_string()).collect();
        let den: Vec<String> = fs.iter().filter(|x| x.exponent < 0).map(|x| x.to_string()).collect();
        let top = if num.is_empty() { "1".to_string() } else { num.join("*") };
        match den.len() {
            0 => write!(f, "{top}"),
            1 => write!(f, "{top}/{}", den[0]),
            _ => write!(f, "{top}/({})", den.join("*")),
        }
    }
}

struct ProductParser<'a> {
    chars: &'a [char],
    pos: usize,
    input: &'a str,
}

impl ProductParser<'_> {
    fn err(&self, reason: &str) -> EisError {
        EisError::Parse { input: self.input.to_string(), reason: format!("{reason} at offset {}", self.pos) }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn product(&mut self) -> Result<ZetaProduct, EisError> {
        let mut acc = self.item()?;
        while let Some(c) = self.peek() {
            match c {
                '*' => {
                    self.pos += 1;
                    acc = acc.mul(&self.item()?);
                }
                '/' => {
                    self.pos += 1;
                    acc = acc.div(&self.item()?);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn item(&mut self) -> Result<ZetaProduct, EisError> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let inner = self.product()?;
                if self.peek() != Some(')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some('1') => {
                self.pos += 1;
                Ok(ZetaProduct::one())
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.peek().is_some_and(|c| c.is_ascii_alphanumeric() || c == '_') {
                    self.pos += 1;
                }
                let name: String = self.chars[start..self.pos].iter().collect();
                if self.peek() != Some('(') {
                    return Err(self.err("expected '(' after factor name"));
                }
                let open = self.pos;
                let mut depth = 0;
                let mut close = None;
                for k in open..self.chars.len() {
                    match self.chars[k] {
                        '(' => depth += 1,
                        ')' => {
                            depth -= 1;
                            if depth == 0 {
                                close = Some(k);
                                break;
                            }
                        }
                        _ => {}
                    }
                }
                let close = close.ok_or_else(|| self.err("unbalanced parentheses"))?;
                let inside: String = self.chars[open + 1..close].iter().collect();
                self.pos = close + 1;
                let mut exponent = 1i32;
                if self.peek() == Some('^') {
                    self.pos += 1;
                    let start = self.pos;
                    while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                        self.pos += 1;
                    }
                    let digits: String = self.chars[start..self.pos].iter().collect();
                    exponent = digits.parse().map_err(|_| self.err("bad exponent"))?;
                }
                let (kind, arg_text) = if name == "poch" {
                    let comma = top_level_comma(&inside).ok_or_else(|| self.err("poch needs (arg,n)"))?;
                    let n: u32 = inside[comma + 1..].parse().map_err(|_| self.err("bad pochhammer length"))?;
                    (FactorKind::Pochhammer(n), inside[..comma].to_string())
                } else {
                    (FactorKind::from_name(&name).ok_or_else(|| self.err("unknown factor name"))?, inside)
                };
                let arg = FactorArg::parse(&arg_text)?;
                Ok(ZetaProduct::single(kind, arg, exponent))
            }
            _ => Err(self.err("expected a factor")),
        }
    }
}

fn top_level_comma(s: &str) -> Option<usize> {
    let mut depth = 0;
    for (k, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => return Some(k),
            _ => {}
        }
    }
    None
}

/// Order of vanishing with possibly one-sided knowledge.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OrderBound {
    pub lower: Option<i64>,
    pub upper: Option<i64>,
}

impl OrderBound {
    pub fn exact(k: i64) -> Self {
        OrderBound { lower: Some(k), upper: Some(k) }
    }
    pub fn at_least(k: i64) -> Self {
        OrderBound { lower: Some(k), upper: None }
    }
    pub fn at_most(k: i64) -> Self {
        OrderBound { lower: None, upper: Some(k) }
    }
    pub fn unknown() -> Self {
        OrderBound { lower: None, upper: None }
    }
    pub fn exact_value(&self) -> Option<i64> {
        match (self.lower, self.upper) {
            (Some(a), Some(b)) if a == b => Some(a),
            _ => None,
        }
    }
    /// Whether `k` is consistent with the bounds.
    pub fn admits(&self, k: i64) -> bool {
        self.lower.is_none_or(|l| l <= k) && self.upper.is_none_or(|u| k <= u)
    }

    pub fn add(&self, o: &OrderBound) -> OrderBound {
        OrderBound {
            lower: self.lower.zip(o.lower).map(|(a, b)| a + b),
            upper: self.upper.zip(o.upper).map(|(a, b)| a + b),
        }
    }
    pub fn times(&self, e: i32) -> OrderBound {
        let e = e as i64;
        if e >= 0 {
            OrderBound { lower: self.lower.map(|x| x * e), upper: self.upper.map(|x| x * e) }
        } else {
            OrderBound { lower: self.upper.map(|x| x * e), upper: self.lower.map(|x| x * e) }
        }
    }
}

impl fmt::Display for OrderBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.lower, self.upper) {
            (Some(a), Some(b)) if a == b => write!(f, "{a}"),
            (Some(a), Some(b)) => write!(f, "[{a},{b}]"),
            (Some(a), None) => write!(f, ">={a}"),
            (None, Some(b)) => write!(f, "<={b}"),
            (None, None) => write!(f, "unknown"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrderClass {
    Regular,
    SimplePole,
    PoleOrder(i64),
    ZeroOrder(i64),
    AtLeast(i64),
    AtMost(i64),
    Undetermined,
}

impl fmt::Display for OrderClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrderClass::Regular => write!(f, "regular"),
            OrderClass::SimplePole => write!(f, "simple-pole"),
            OrderClass::PoleOrder(k) => write!(f, "pole-order-{k}"),
            OrderClass::ZeroOrder(k) => write!(f, "zero-order-{k}"),
            OrderClass::AtLeast(k) => write!(f, "order>={k}"),
            OrderClass::AtMost(k) => write!(f, "order<={k}"),
            OrderClass::Undetermined => write!(f, "undetermined"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LedgerEntry {
    pub factor: String,
    pub value_at: String,
    pub order: OrderBound,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderReport {
    pub s0: Rational,
    pub ledger: Vec<LedgerEntry>,
    pub total: OrderBound,
    pub class: OrderClass,
}

impl OrderReport {
    /// No pole: the order is provably nonnegative.
    pub fn is_regular(&self) -> bool {
        self.total.lower.is_some_and(|k| k >= 0)
    }
}

fn is_integer_le(x: &Rational, bound: i64) -> bool {
    x.is_integer() && *x <= int(bound)
}

fn riemann_order(x: &Rational) -> OrderBound {
    if *x == int(1) {
        return OrderBound::exact(-1);
    }
    if x.is_integer() && x.is_negative() {
        let n = x.to_integer();
        if (n % 2u32) == 0u32.into() {
            return OrderBound::exact(1);
        }
    }
    OrderBound::exact(0)
}

/// Dedekind zeta of a genuine number field: only the Euler-product half plane and the pole are used.
fn dedekind_order(x: &Rational) -> OrderBound {
    if *x == int(1) {
        OrderBound::exact(-1)
    } else if *x > int(1) {
        OrderBound::exact(0)
    } else {
        OrderBound::unknown()
    }
}

/// Order of one factor (exponent 1) at `s0`.
pub fn factor_order(kind: FactorKind, arg: &FactorArg, s0: &Rational) -> Result<OrderBound, EisError> {
    if arg.symbol.is_some() {
        // gamma functions have poles and no zeros
        return Ok(if kind.is_gamma_like() { OrderBound::at_most(0) } else { OrderBound::unknown() });
    }
    let x = arg.affine.eval(s0);
    Ok(match kind {
        FactorKind::Zeta => riemann_order(&x),
        FactorKind::ZetaTheta => riemann_order(&x).add(&riemann_order(&(&x - int(3)))),
        FactorKind::ZetaE(Etale::Split) => riemann_order(&x).times(3),
        FactorKind::ZetaE(Etale::QxF) => riemann_order(&x).add(&dedekind_order(&x)),
        FactorKind::ZetaE(Etale::Field) | FactorKind::ZetaF => dedekind_order(&x),
        FactorKind::Gamma | FactorKind::GammaC => OrderBound::exact(if is_integer_le(&x, 0) { -1 } else { 0 }),
        FactorKind::GammaR => {
            let half = &x / int(2);
            OrderBound::exact(if is_integer_le(&half, 0) { -1 } else { 0 })
        }
        FactorKind::Pochhammer(n) => OrderBound::exact(pochhammer(&arg.affine, n).order_at(s0)?),
    })
}

fn fmt_value(kind: FactorKind, arg: &FactorArg, s0: &Rational) -> String {
    if arg.symbol.is_some() {
        return "opaque".into();
    }
    let x = arg.affine.eval(s0);
    match kind {
        FactorKind::Pochhammer(n) => format!("poch({x},{n})"),
        k => format!("{}({x})", k.name()),
    }
}

pub fn order_report(p: &ZetaProduct, s0: &Rational) -> Result<OrderReport, EisError> {
    let mut ledger = Vec::new();
    let mut total = OrderBound::exact(0);
    for f in p.factors() {
        let o = factor_order(f.kind, &f.arg, s0)?.times(f.exponent);
        total = total.add(&o);
        let mut factor = f.to_string();
        if f.exponent < 0 {
            factor = format!("1/{factor}");
        }
        ledger.push(LedgerEntry { factor, value_at: fmt_value(f.kind, &f.arg, s0), order: o });
    }
    let class = match (total.lower, total.upper) {
        (Some(a), Some(b)) if a == b => match a {
            0 => OrderClass::Regular,
            -1 => OrderClass::SimplePole,
            k if k < 0 => OrderClass::PoleOrder(-k),
            k => OrderClass::ZeroOrder(k),
        },
        (Some(a), _) => OrderClass::AtLeast(a),
        (None, Some(b)) => OrderClass::AtMost(b),
        (None, None) => OrderClass::Undetermined,
    };
    Ok(OrderReport { s0: s0.clone(), ledger, total, class })
}

/// Per-length block rule: `kind(scale*p) / kind(scale*p + shift)` for a step with pairing `p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StepRule {
    pub lengthsq: Rational,
    pub kind: FactorKind,
    pub scale: Rational,
    pub shift: Rational,
}

impl StepRule {
    pub fn block(&self, pairing: &AffineForm) -> ZetaProduct {
        let x = pairing.scale(&self.scale);
        let mut p = ZetaProduct::one();
        p.push(self.kind, FactorArg::plain(x.clone()), 1);
        p.push(self.kind, FactorArg::plain(x.shift(&self.shift)), -1);
        p
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CStep {
    pub index: usize,
    pub pairing: AffineForm,
    pub block: ZetaProduct,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CFunction {
    pub steps: Vec<CStep>,
    pub product: ZetaProduct,
}

impl CFunction {
    /// Every step integral converges: all numerator zeta arguments exceed 1 at `s0`.
    pub fn converges_at(&self, s0: &Rational) -> bool {
        self.steps.iter().all(|st| {
            st.block.expand_theta().factors().iter().filter(|f| f.exponent > 0).all(|f| {
                f.arg.symbol.is_none() && f.arg.affine.eval(s0) > int(1)
            })
        })
    }
}

/// Product of per-step blocks along a reduced word on a rational system.
pub fn rational_cfunction(
    sys: &RootSystem,
    lambda: &[AffineForm],
    word: &WeylWord,
    rules: &[StepRule],
) -> Result<CFunction, EisError> {
    let trace = apply_word(sys, lambda, word)?;
    let mut steps = Vec::new();
    let mut product = ZetaProduct::one();
    for st in &trace.steps {
        let lsq = crate::rootsys::dot(sys.alpha(st.index), sys.alpha(st.index));
        let rule = rules.iter().find(|r| r.lengthsq == lsq).ok_or_else(|| EisError::MissingRule(lsq.to_string()))?;
        let block = rule.block(&st.pairing);
        product = product.mul(&block);
        steps.push(CStep { index: st.index, pairing: st.pairing.clone(), block });
    }
    Ok(CFunction { steps, product })
}

/// Gindikin-Karpelevich product over the positive roots flipped by `w` on a split system.
pub fn gk_cfunction(sys: &RootSystem, lambda: &[AffineForm], w: &WeylElem) -> CFunction {
    let rule = StepRule { lengthsq: Rational::one(), kind: FactorKind::Zeta, scale: Rational::one(), shift: Rational::one() };
    let mut steps = Vec::new();
    let mut product = ZetaProduct::one();
    for r in sys.inversions(w) {
        let pairing = coroot_pairing(lambda, &r.coords);
        let block = rule.block(&pairing);
        product = product.mul(&block);
        steps.push(CStep { index: 0, pairing, block });
    }
    CFunction { steps, product }
}

/// Lift a rational word to an absolute Weyl element through a Tits index.
pub fn lift_word(abs: &RootSystem, kernel: &[usize], nodes: &[usize], word: &WeylWord) -> WeylElem {
    let mut w = abs.identity();
    for &i in &word.0 {
        w = w.mul(&crate::rootsys::tits_lift(abs, kernel, nodes[i - 1]));
    }
    w
}

/// Threshold cross-check: `<2 rho_P, beta^vee>` for the parabolic of the connected component of
/// `levi` containing `beta` whose radical is `assoc`.
pub fn levi_modulus_pairing(sys: &RootSystem, levi: &[usize], assoc: &[usize], beta: usize) -> Rational {
    let comp = component(sys, levi, beta);
    let mut sum: Vector = vec![Rational::zero(); sys.dim];
    for r in sys.positive_roots() {
        let inside = r.coeffs.iter().enumerate().all(|(k, c)| c.is_zero() || comp.contains(&(k + 1)));
        let radical = assoc.iter().any(|&a| comp.contains(&a) && r.coeffs[a - 1].is_positive());
        if inside && radical {
            let m = int(sys.mult(r) as i64);
            for (a, c) in sum.iter_mut().zip(&r.coords) {
                *a += &m * c;
            }
        }
    }
    crate::rootsys::coroot(&sum, sys.alpha(beta))
}

/// Connected component of the Dynkin subdiagram on `levi` containing `beta`.
pub fn component(sys: &RootSystem, levi: &[usize], beta: usize) -> Vec<usize> {
    let mut comp = vec![beta];
    let mut k = 0;
    while k < comp.len() {
        let a = comp[k];
        for &b in levi {
            if !comp.contains(&b) && !crate::rootsys::dot(sys.alpha(a), sys.alpha(b)).is_zero() {
                comp.push(b);
            }
        }
        k += 1;
    }
    comp.sort();
    comp
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;
    use crate::rootsys::Multiplicity;

    fn v(xs: &[i64]) -> Vector {
        xs.iter().map(|&x| int(x)).collect()
    }

    fn af(t: &str) -> AffineForm {
        AffineForm::parse(t).unwrap()
    }

    fn c3() -> RootSystem {
        let m = Multiplicity { table: vec![(int(2), 8), (int(4), 1)] };
        RootSystem::generate("C3", vec![v(&[1, -1, 0]), v(&[0, 1, -1]), v(&[0, 0, 2])], m).unwrap()
    }

    fn c3_rules() -> Vec<StepRule> {
        vec![
            StepRule { lengthsq: int(4), kind: FactorKind::Zeta, scale: int(1), shift: int(1) },
            StepRule { lengthsq: int(2), kind: FactorKind::ZetaTheta, scale: rat(1, 2), shift: int(4) },
        ]
    }

    #[test]
    fn c3_trace() {
        let sys = c3();
        let lam = lambda_s(&sys, &v(&[1, 1, 1]));
        assert_eq!(lam, vec![af("s-17"), af("s-9"), af("s-1")]);
        let tr = apply_word(&sys, &lam, &WeylWord(vec![3, 2, 1, 3, 2, 3])).unwrap();
        let got: Vec<AffineForm> = tr.steps.iter().map(|s| s.pairing.clone()).collect();
        let want: Vec<AffineForm> = ["s-1", "2s-10", "s-9", "2s-18", "2s-26", "s-17"].iter().map(|t| af(t)).collect();
        assert_eq!(got, want);
        assert_eq!(tr.result, vec![af("1-s"), af("9-s"), af("17-s")]);
        let w0 = sys.elem(&WeylWord(vec![3, 2, 1, 3, 2, 3])).unwrap();
        assert_eq!(shifted_exponent(&sys, &lam, &w0), vec![af("18-s"); 3]);
        assert!(apply_word(&sys, &lam, &WeylWord(vec![3, 3])).is_err());
    }

    #[test]
    fn c3_cfunctions() {
        let sys = c3();
        let lam = lambda_s(&sys, &v(&[1, 1, 1]));
        let c = rational_cfunction(&sys, &lam, &WeylWord(vec![3, 2, 1, 3, 2, 3]), &c3_rules()).unwrap();
        let want = ZetaProduct::parse("zeta(s-9)*zeta(s-13)*zeta(s-17)/(zeta(s)*zeta(s-4)*zeta(s-8))").unwrap();
        assert_eq!(c.product.expand_theta(), want);
        let rep = order_report(&c.product, &int(14)).unwrap();
        assert_eq!(rep.class, OrderClass::SimplePole);
        assert!(!c.converges_at(&int(14)));
        let c1 = rational_cfunction(&sys, &lam, &WeylWord(vec![3]), &c3_rules()).unwrap();
        assert!(c1.converges_at(&int(14)));
    }

    #[test]
    fn parse_roundtrip() {
        for t in [
            "zeta(s-4)*zeta(s-7)/(zeta(s)*zeta(s-3))",
            "gammaC(s-1)/(gammaR(s-j)*gammaR(s+j))",
            "poch((s-5)/2,2)*gamma(s-6)/poch(s/2-1,3)",
            "1",
            "zeta(s)^2/zetaTheta(s-1)",
        ] {
            let p = ZetaProduct::parse(t).unwrap();
            assert_eq!(ZetaProduct::parse(&p.to_string()).unwrap(), p, "{t}");
        }
        assert!(ZetaProduct::parse("zeta(s").is_err());
        assert!(ZetaProduct::parse("eta(s)").is_err());
    }

    #[test]
    fn d7_ledger() {
        let p = ZetaProduct::parse(
            "zeta(s-6)*zeta(s-11)/(zeta(s)*zeta(s-5))*poch((s-5)/2,2)*gamma(s-6)*poch((s-14)/2,2)/(poch((s-2)/2,3)*gamma(s-2)*poch((s-11)/2,3))",
        )
        .unwrap();
        let rep = order_report(&p, &int(7)).unwrap();
        assert_eq!(rep.total, OrderBound::exact(-1));
        assert_eq!(rep.class, OrderClass::SimplePole);
    }

    #[test]
    fn opaque_bounds() {
        let p = ZetaProduct::parse("zeta(s-1)/zeta(s)*gammaC(s-1)/(gammaR(s-j)*gammaR(s+j))").unwrap();
        let rep = order_report(&p, &int(6)).unwrap();
        assert_eq!(rep.total, OrderBound::at_least(0));
        assert!(rep.is_regular());
    }

    #[test]
    fn verdicts() {
        let v = convergence_verdict(&af("s-6"), &int(24), &int(12));
        assert_eq!((v.status, v.margin), (ConvergenceStatus::AbsolutelyConvergent, int(6)));
        let v = convergence_verdict(&af("s-1"), &int(5), &int(4));
        assert_eq!((v.status, v.margin), (ConvergenceStatus::Boundary, int(0)));
        let v = convergence_verdict(&af("s-3"), &int(5), &int(1));
        assert_eq!((v.status, v.margin), (ConvergenceStatus::AbsolutelyConvergent, int(1)));
    }
}
