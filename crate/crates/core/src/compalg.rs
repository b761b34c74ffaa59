//! Octonions by Cayley-Dickson doubling, the cubic Jordan algebra of 3x3 Hermitian octonion
//! matrices, cubic etale subalgebras and their trace complements, the Freudenthal space and
//! triality triples built from reflections and multiplications.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::Signed;
use rand::Rng;
use thiserror::Error;

use crate::exactnum::Rational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgError {
    #[error("operands come from different octonion flavors")]
    FlavorMismatch,
    #[error("invalid etale descriptor: {0}")]
    InvalidDescriptor(String),
    #[error("norm-product condition violated: product of norms is {0}, expected 1")]
    NormProduct(String),
    #[error("zero-norm generator")]
    ZeroNorm,
    #[error("requires quadratic extension: {0} is not a square")]
    RequiresQuadraticExtension(String),
    #[error("sampler exhausted after {0} attempts")]
    Degenerate(usize),
}

/// Exact base field.
pub trait Scalar:
    Clone + PartialEq + fmt::Debug + fmt::Display + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Neg<Output = Self>
{
    fn from_i64(n: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn inv(&self) -> Option<Self>;
    fn sqrt(&self) -> Option<Self>;
    /// Sign where the field is ordered.
    fn is_positive(&self) -> Option<bool>;

    fn zero() -> Self {
        Self::from_i64(0)
    }
    fn one() -> Self {
        Self::from_i64(1)
    }
}

impl Scalar for Rational {
    fn from_i64(n: i64) -> Self {
        Rational::from_integer(n.into())
    }
    fn is_zero(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
    fn inv(&self) -> Option<Self> {
        (!Scalar::is_zero(self)).then(|| self.recip())
    }
    fn sqrt(&self) -> Option<Self> {
        if self.is_negative() {
            return None;
        }
        let root = |n: &BigInt| {
            let r = n.sqrt();
            (&r * &r == *n).then_some(r)
        };
        Some(Rational::new(root(self.numer())?, root(self.denom())?))
    }
    fn is_positive(&self) -> Option<bool> {
        Some(Signed::is_positive(self))
    }
}

/// Prime field `Z/PZ`, `P` odd and below 2^32.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub struct Fp<const P: u64>(pub u64);

impl<const P: u64> Fp<P> {
    fn pow(self, mut e: u64) -> Self {
        let (mut base, mut acc) = (self, Fp(1 % P));
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }
}

impl<const P: u64> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Add for Fp<P> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Fp((self.0 + o.0) % P)
    }
}

impl<const P: u64> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Fp((self.0 + P - o.0) % P)
    }
}

impl<const P: u64> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Fp(((self.0 as u128 * o.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Fp((P - self.0) % P)
    }
}

impl<const P: u64> Scalar for Fp<P> {
    fn from_i64(n: i64) -> Self {
        Fp(n.rem_euclid(P as i64) as u64)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn inv(&self) -> Option<Self> {
        (self.0 != 0).then(|| self.pow(P - 2))
    }
    /// Tonelli-Shanks.
    fn sqrt(&self) -> Option<Self> {
        if self.0 == 0 {
            return Some(*self);
        }
        if self.pow((P - 1) / 2).0 != 1 {
            return None;
        }
        let (mut q, mut m) = (P - 1, 0u32);
        while q % 2 == 0 {
            q /= 2;
            m += 1;
        }
        let z = (2..P).map(Fp::<P>).find(|z| z.pow((P - 1) / 2).0 == P - 1)?;
        let (mut c, mut t, mut r) = (z.pow(q), self.pow(q), self.pow(q.div_ceil(2)));
        while t.0 != 1 {
            let mut i = 0;
            let mut tt = t;
            while tt.0 != 1 {
                tt = tt * tt;
                i += 1;
            }
            let b = c.pow(1 << (m - i - 1));
            m = i;
            c = b * b;
            t = t * c;
            r = r * b;
        }
        Some(r)
    }
    fn is_positive(&self) -> Option<bool> {
        None
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Flavor {
    Definite,
    Split,
}

impl Flavor {
    /// Cayley-Dickson doubling parameters, innermost first.
    pub fn doubling(&self) -> [i64; 3] {
        match self {
            Flavor::Definite => [-1, -1, -1],
            Flavor::Split => [-1, -1, 1],
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Octonion<S> {
    pub coords: Vec<S>,
    pub flavor: Flavor,
}

/// Octonion algebra with its structure constants: `e_i e_j = coef * e_k`.
#[derive(Clone, Debug)]
pub struct OctAlgebra<S> {
    pub flavor: Flavor,
    pub doubling: [S; 3],
    table: Vec<(usize, S)>,
    /// `N(e_i)`; the basis is orthogonal, so the norm is diagonal in it.
    norms: Vec<S>,
}

fn cd_conj<S: Scalar>(x: &[S]) -> Vec<S> {
    if x.len() == 1 {
        return x.to_vec();
    }
    let h = x.len() / 2;
    let mut out = cd_conj(&x[..h]);
    out.extend(x[h..].iter().map(|v| -v.clone()));
    out
}

fn cd_add<S: Scalar>(x: &[S], y: &[S]) -> Vec<S> {
    x.iter().zip(y).map(|(a, b)| a.clone() + b.clone()).collect()
}

/// `(a,b)(c,d) = (ac + mu d* b, da + b c*)`.
fn cd_mul<S: Scalar>(x: &[S], y: &[S], params: &[S]) -> Vec<S> {
    if x.len() == 1 {
        return vec![x[0].clone() * y[0].clone()];
    }
    let h = x.len() / 2;
    let level = h.trailing_zeros() as usize;
    let mu = &params[level];
    let (a, b, c, d) = (&x[..h], &x[h..], &y[..h], &y[h..]);
    let dbb: Vec<S> = cd_mul(&cd_conj(d), b, params).into_iter().map(|v| mu.clone() * v).collect();
    let mut out = cd_add(&cd_mul(a, c, params), &dbb);
    out.extend(cd_add(&cd_mul(d, a, params), &cd_mul(b, &cd_conj(c), params)));
    out
}

impl<S: Scalar> OctAlgebra<S> {
    pub fn new(flavor: Flavor) -> Self {
        let d = flavor.doubling();
        Self::with_doubling(flavor, [S::from_i64(d[0]), S::from_i64(d[1]), S::from_i64(d[2])])
    }

    pub fn with_doubling(flavor: Flavor, doubling: [S; 3]) -> Self {
        let unit = |i: usize| (0..8).map(|k| if k == i { S::one() } else { S::zero() }).collect::<Vec<S>>();
        let mut table = Vec::with_capacity(64);
        for i in 0..8 {
            for j in 0..8 {
                let p = cd_mul(&unit(i), &unit(j), &doubling);
                let k = p.iter().position(|v| !v.is_zero()).expect("basis products are nonzero");
                table.push((k, p[k].clone()));
            }
        }
        // e_i conj(e_i) = N(e_i); conj(e_i) = -e_i for i > 0
        let norms = (0..8)
            .map(|i| {
                let c = table[i * 8 + i].1.clone();
                if i == 0 { c } else { -c }
            })
            .collect();
        OctAlgebra { flavor, doubling, table, norms }
    }

    /// `(k, coef)` with `e_i e_j = coef e_k`.
    pub fn structure(&self, i: usize, j: usize) -> (usize, S) {
        self.table[i * 8 + j].clone()
    }

    pub fn from_coords(&self, coords: Vec<S>) -> Octonion<S> {
        assert_eq!(coords.len(), 8, "octonions have 8 coordinates");
        Octonion { coords, flavor: self.flavor }
    }

    pub fn from_ints(&self, c: [i64; 8]) -> Octonion<S> {
        self.from_coords(c.iter().map(|&v| S::from_i64(v)).collect())
    }

    pub fn scalar(&self, c: S) -> Octonion<S> {
        let mut v = vec![S::zero(); 8];
        v[0] = c;
        self.from_coords(v)
    }

    pub fn zero(&self) -> Octonion<S> {
        self.scalar(S::zero())
    }

    pub fn one(&self) -> Octonion<S> {
        self.scalar(S::one())
    }

    pub fn unit(&self, i: usize) -> Octonion<S> {
        let mut v = vec![S::zero(); 8];
        v[i] = S::one();
        self.from_coords(v)
    }

    pub fn mul(&self, x: &Octonion<S>, y: &Octonion<S>) -> Octonion<S> {
        let mut out = vec![S::zero(); 8];
        for (i, a) in x.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.coords.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let (k, c) = &self.table[i * 8 + j];
                out[*k] = out[*k].clone() + c.clone() * a.clone() * b.clone();
            }
        }
        self.from_coords(out)
    }

    pub fn try_mul(&self, x: &Octonion<S>, y: &Octonion<S>) -> Result<Octonion<S>, AlgError> {
        if x.flavor != self.flavor || y.flavor != self.flavor {
            return Err(AlgError::FlavorMismatch);
        }
        Ok(self.mul(x, y))
    }

    pub fn conj(&self, x: &Octonion<S>) -> Octonion<S> {
        let mut v: Vec<S> = x.coords.iter().map(|c| -c.clone()).collect();
        v[0] = x.coords[0].clone();
        self.from_coords(v)
    }

    pub fn trace(&self, x: &Octonion<S>) -> S {
        x.coords[0].clone() + x.coords[0].clone()
    }

    pub fn norm(&self, x: &Octonion<S>) -> S {
        x.coords.iter().zip(&self.norms).filter(|(v, _)| !v.is_zero()).fold(S::zero(), |acc, (v, n)| acc + n.clone() * v.clone() * v.clone())
    }

    /// `(x, y) = tr(x y*) = N(x+y) - N(x) - N(y)`.
    pub fn bilinear(&self, x: &Octonion<S>, y: &Octonion<S>) -> S {
        let dot = x.coords.iter().zip(&y.coords).zip(&self.norms).filter(|((a, b), _)| !a.is_zero() && !b.is_zero());
        let half = dot.fold(S::zero(), |acc, ((a, b), n)| acc + n.clone() * a.clone() * b.clone());
        half.clone() + half
    }

    /// `tr(x1 (x2 x3))`.
    pub fn trilinear(&self, x1: &Octonion<S>, x2: &Octonion<S>, x3: &Octonion<S>) -> S {
        self.trace(&self.mul(x1, &self.mul(x2, x3)))
    }

    pub fn add(&self, x: &Octonion<S>, y: &Octonion<S>) -> Octonion<S> {
        self.from_coords(cd_add(&x.coords, &y.coords))
    }

    pub fn sub(&self, x: &Octonion<S>, y: &Octonion<S>) -> Octonion<S> {
        self.from_coords(x.coords.iter().zip(&y.coords).map(|(a, b)| a.clone() - b.clone()).collect())
    }

    pub fn scale(&self, c: &S, x: &Octonion<S>) -> Octonion<S> {
        self.from_coords(x.coords.iter().map(|a| c.clone() * a.clone()).collect())
    }

    pub fn is_zero(&self, x: &Octonion<S>) -> bool {
        x.coords.iter().all(|c| c.is_zero())
    }

    /// Reflection `s_c(x) = x - ((x,c)/N(c)) c`.
    pub fn reflect(&self, c: &Octonion<S>, x: &Octonion<S>) -> Result<Octonion<S>, AlgError> {
        let n = self.norm(c).inv().ok_or(AlgError::ZeroNorm)?;
        Ok(self.sub(x, &self.scale(&(self.bilinear(x, c) * n), c)))
    }

    /// Rescale `x` to norm one; needs `N(x)` to be a square in the base field.
    pub fn normalize_unit(&self, x: &Octonion<S>) -> Result<Octonion<S>, AlgError> {
        let n = self.norm(x);
        let r = n.sqrt().ok_or_else(|| AlgError::RequiresQuadraticExtension(n.to_string()))?;
        let inv = r.inv().ok_or(AlgError::ZeroNorm)?;
        Ok(self.scale(&inv, x))
    }

    pub fn random(&self, rng: &mut impl Rng, height: i64) -> Octonion<S> {
        self.from_coords((0..8).map(|_| S::from_i64(rng.random_range(-height..=height))).collect())
    }
}

/// Hermitian matrix `[[c1, x3, x2*], [x3*, c2, x1], [x2, x1*, c3]]`.
#[derive(Clone, Debug, PartialEq)]
pub struct JordanElement<S> {
    pub c: [S; 3],
    pub x: [Octonion<S>; 3],
}

/// `J = H_3(Theta)` over a fixed octonion algebra.
#[derive(Clone, Debug)]
pub struct Albert<S> {
    pub oct: OctAlgebra<S>,
}

type OctMatrix<S> = Vec<Vec<Octonion<S>>>;

impl<S: Scalar> Albert<S> {
    pub fn new(flavor: Flavor) -> Self {
        Albert { oct: OctAlgebra::new(flavor) }
    }

    pub fn element(&self, c: [S; 3], x: [Octonion<S>; 3]) -> JordanElement<S> {
        JordanElement { c, x }
    }

    pub fn zero(&self) -> JordanElement<S> {
        self.diag([S::zero(), S::zero(), S::zero()])
    }

    pub fn identity(&self) -> JordanElement<S> {
        self.diag([S::one(), S::one(), S::one()])
    }

    pub fn diag(&self, c: [S; 3]) -> JordanElement<S> {
        JordanElement { c, x: [self.oct.zero(), self.oct.zero(), self.oct.zero()] }
    }

    /// Diagonal idempotent `e_ii`, `i` in 1..=3.
    pub fn e(&self, i: usize) -> JordanElement<S> {
        let mut c = [S::zero(), S::zero(), S::zero()];
        c[i - 1] = S::one();
        self.diag(c)
    }

    pub fn to_matrix(&self, a: &JordanElement<S>) -> OctMatrix<S> {
        let o = &self.oct;
        let [x1, x2, x3] = &a.x;
        vec![
            vec![o.scalar(a.c[0].clone()), x3.clone(), o.conj(x2)],
            vec![o.conj(x3), o.scalar(a.c[1].clone()), x1.clone()],
            vec![x2.clone(), o.conj(x1), o.scalar(a.c[2].clone())],
        ]
    }

    /// Read back the Hermitian coordinates of a matrix.
    pub fn from_matrix(&self, m: &OctMatrix<S>) -> JordanElement<S> {
        JordanElement {
            c: [m[0][0].coords[0].clone(), m[1][1].coords[0].clone(), m[2][2].coords[0].clone()],
            x: [m[1][2].clone(), m[2][0].clone(), m[0][1].clone()],
        }
    }

    fn mat_mul(&self, a: &OctMatrix<S>, b: &OctMatrix<S>) -> OctMatrix<S> {
        (0..3)
            .map(|i| {
                (0..3)
                    .map(|j| (0..3).fold(self.oct.zero(), |acc, k| self.oct.add(&acc, &self.oct.mul(&a[i][k], &b[k][j]))))
                    .collect()
            })
            .collect()
    }

    pub fn add(&self, a: &JordanElement<S>, b: &JordanElement<S>) -> JordanElement<S> {
        JordanElement {
            c: std::array::from_fn(|i| a.c[i].clone() + b.c[i].clone()),
            x: std::array::from_fn(|i| self.oct.add(&a.x[i], &b.x[i])),
        }
    }

    pub fn scale(&self, k: &S, a: &JordanElement<S>) -> JordanElement<S> {
        JordanElement {
            c: std::array::from_fn(|i| k.clone() * a.c[i].clone()),
            x: std::array::from_fn(|i| self.oct.scale(k, &a.x[i])),
        }
    }

    pub fn sub(&self, a: &JordanElement<S>, b: &JordanElement<S>) -> JordanElement<S> {
        self.add(a, &self.scale(&-S::one(), b))
    }

    pub fn is_zero(&self, a: &JordanElement<S>) -> bool {
        a.c.iter().all(|c| c.is_zero()) && a.x.iter().all(|x| self.oct.is_zero(x))
    }

    /// Matrix square `X.X`; Hermitian because octonion conjugation reverses products.
    pub fn square(&self, a: &JordanElement<S>) -> JordanElement<S> {
        let m = self.to_matrix(a);
        self.from_matrix(&self.mat_mul(&m, &m))
    }

    /// `X o Y = (XY + YX)/2`.
    pub fn jordan_product(&self, a: &JordanElement<S>, b: &JordanElement<S>) -> JordanElement<S> {
        let (ma, mb) = (self.to_matrix(a), self.to_matrix(b));
        let sum = self.add(&self.from_matrix(&self.mat_mul(&ma, &mb)), &self.from_matrix(&self.mat_mul(&mb, &ma)));
        let half = S::from_i64(2).inv().expect("characteristic is not two");
        self.scale(&half, &sum)
    }

    pub fn trace(&self, a: &JordanElement<S>) -> S {
        a.c[0].clone() + a.c[1].clone() + a.c[2].clone()
    }

    /// `(X,Y) = sum c_i c'_i + sum tr(x_i x'_i*)`, the trace of `X o Y`.
    pub fn pairing(&self, a: &JordanElement<S>, b: &JordanElement<S>) -> S {
        let mut acc = S::zero();
        for i in 0..3 {
            acc = acc + a.c[i].clone() * b.c[i].clone() + self.oct.bilinear(&a.x[i], &b.x[i]);
        }
        acc
    }

    /// Adjoint in coordinates: `c_i# = c_j c_k - N(x_i)`, `x_i# = (x_j x_k)* - c_i x_i` for `(i,j,k)` cyclic.
    pub fn sharp(&self, a: &JordanElement<S>) -> JordanElement<S> {
        let o = &self.oct;
        let (c, x) = (&a.c, &a.x);
        let at = |i: usize| ((i + 1) % 3, (i + 2) % 3);
        JordanElement {
            c: std::array::from_fn(|i| {
                let (j, k) = at(i);
                c[j].clone() * c[k].clone() - o.norm(&x[i])
            }),
            x: std::array::from_fn(|i| {
                let (j, k) = at(i);
                o.sub(&o.conj(&o.mul(&x[j], &x[k])), &o.scale(&c[i], &x[i]))
            }),
        }
    }

    /// `X# = X.X - tr(X) X + sigma(X) I`, through matrix multiplication.
    pub fn sharp_by_matrices(&self, a: &JordanElement<S>) -> JordanElement<S> {
        let sq = self.square(a);
        let t = self.trace(a);
        let half = S::from_i64(2).inv().expect("characteristic is not two");
        let sigma = half * (t.clone() * t.clone() - self.trace(&sq));
        let out = self.sub(&sq, &self.scale(&t, a));
        self.add(&out, &self.diag([sigma.clone(), sigma.clone(), sigma]))
    }

    /// `c1 c2 c3 - sum c_i N(x_i) + tr(x1 x2 x3)`.
    pub fn norm(&self, a: &JordanElement<S>) -> S {
        let o = &self.oct;
        let [c1, c2, c3] = &a.c;
        let [x1, x2, x3] = &a.x;
        c1.clone() * c2.clone() * c3.clone()
            - c1.clone() * o.norm(x1)
            - c2.clone() * o.norm(x2)
            - c3.clone() * o.norm(x3)
            + o.trace(&o.mul(&o.mul(x1, x2), x3))
    }

    pub fn rank(&self, a: &JordanElement<S>) -> u8 {
        if self.is_zero(a) {
            0
        } else if self.is_zero(&self.sharp(a)) {
            1
        } else if self.norm(a).is_zero() {
            2
        } else {
            3
        }
    }

    /// Simultaneous cyclic shift of diagonal and off-diagonal slots.
    pub fn cycle(&self, a: &JordanElement<S>) -> JordanElement<S> {
        JordanElement {
            c: [a.c[2].clone(), a.c[0].clone(), a.c[1].clone()],
            x: [a.x[2].clone(), a.x[0].clone(), a.x[1].clone()],
        }
    }

    pub fn to_vec(&self, a: &JordanElement<S>) -> Vec<S> {
        let mut v: Vec<S> = a.c.to_vec();
        for x in &a.x {
            v.extend(x.coords.iter().cloned());
        }
        v
    }

    pub fn from_vec(&self, v: &[S]) -> JordanElement<S> {
        let oct = |k: usize| self.oct.from_coords(v[3 + 8 * k..11 + 8 * k].to_vec());
        JordanElement { c: [v[0].clone(), v[1].clone(), v[2].clone()], x: [oct(0), oct(1), oct(2)] }
    }

    pub fn random(&self, rng: &mut impl Rng, height: i64) -> JordanElement<S> {
        let c = std::array::from_fn(|_| S::from_i64(rng.random_range(-height..=height)));
        let x = std::array::from_fn(|_| self.oct.random(rng, height));
        JordanElement { c, x }
    }

    /// `Y#` for a random `Y` with `N(Y) = 0` and `Y# != 0`: `N` is affine in `c1`, so solve for it.
    pub fn rank_one_sample(&self, rng: &mut impl Rng, height: i64) -> Result<JordanElement<S>, AlgError> {
        const ATTEMPTS: usize = 64;
        for _ in 0..ATTEMPTS {
            let mut y = self.random(rng, height);
            y.c[0] = S::zero();
            let rest = self.norm(&y);
            let slope = y.c[1].clone() * y.c[2].clone() - self.oct.norm(&y.x[0]);
            let Some(inv) = slope.inv() else { continue };
            y.c[0] = -(rest * inv);
            let z = self.sharp(&y);
            if !self.is_zero(&z) {
                return Ok(z);
            }
        }
        Err(AlgError::Degenerate(ATTEMPTS))
    }

    /// All elements whose `c_i` lie in `-h..=h` and whose `x_i` lie in `{0, +-e_k : k in units}`.
    pub fn small_height_elements(&self, h: i64, units: &[usize]) -> Vec<JordanElement<S>> {
        let mut octs = vec![self.oct.zero()];
        for &k in units {
            octs.push(self.oct.unit(k));
            octs.push(self.oct.scale(&-S::one(), &self.oct.unit(k)));
        }
        let cs: Vec<i64> = (-h..=h).collect();
        let mut out = Vec::new();
        for c1 in &cs {
            for c2 in &cs {
                for c3 in &cs {
                    for x1 in &octs {
                        for x2 in &octs {
                            for x3 in &octs {
                                out.push(JordanElement {
                                    c: [S::from_i64(*c1), S::from_i64(*c2), S::from_i64(*c3)],
                                    x: [x1.clone(), x2.clone(), x3.clone()],
                                });
                            }
                        }
                    }
                }
            }
        }
        out
    }
}

/// Nullspace of the row vectors (all of length `n`).
pub fn nullspace<S: Scalar>(rows: &[Vec<S>], n: usize) -> Vec<Vec<S>> {
    let mut m: Vec<Vec<S>> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = m[r][c].inv().expect("pivot is nonzero");
        m[r] = m[r].iter().map(|v| v.clone() * inv.clone()).collect();
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                let pivot = m[r].clone();
                m[i] = m[i].iter().zip(&pivot).map(|(a, b)| a.clone() - f.clone() * b.clone()).collect();
            }
        }
        pivots.push(c);
        r += 1;
    }
    let mut basis = Vec::new();
    for free in (0..n).filter(|c| !pivots.contains(c)) {
        let mut v = vec![S::zero(); n];
        v[free] = S::one();
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = -m[row][free].clone();
        }
        basis.push(v);
    }
    basis
}

/// Solve a square system; `None` when singular.
pub fn solve<S: Scalar>(a: &[Vec<S>], b: &[S]) -> Option<Vec<S>> {
    let n = b.len();
    let mut m: Vec<Vec<S>> = a.iter().zip(b).map(|(row, v)| row.iter().cloned().chain([v.clone()]).collect()).collect();
    for c in 0..n {
        let p = (c..n).find(|&i| !m[i][c].is_zero())?;
        m.swap(c, p);
        let inv = m[c][c].inv()?;
        m[c] = m[c].iter().map(|v| v.clone() * inv.clone()).collect();
        for i in 0..n {
            if i != c && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                let pivot = m[c].clone();
                m[i] = m[i].iter().zip(&pivot).map(|(a, b)| a.clone() - f.clone() * b.clone()).collect();
            }
        }
    }
    Some(m.into_iter().map(|row| row[n].clone()).collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EtaleDescriptor {
    Split3,
    /// `Q x Q(sqrt d)`, with `a^2 + b^2 = d` giving the image of `sqrt d`.
    QtimesF { d: i64, a: i64, b: i64 },
    /// Field cut out by `x^3 + p2 x^2 + p1 x + p0`, realised by a symmetric integer matrix.
    Field { min_poly: [i64; 3], matrix: [[i64; 3]; 3] },
}

impl EtaleDescriptor {
    pub fn default_qxf() -> Self {
        EtaleDescriptor::QtimesF { d: 2, a: 1, b: 1 }
    }

    /// `x^3 - 3x - 1`.
    pub fn default_field() -> Self {
        EtaleDescriptor::Field { min_poly: [-1, -3, 0], matrix: [[0, 1, 0], [1, 1, 1], [0, 1, -1]] }
    }

    pub fn name(&self) -> &'static str {
        match self {
            EtaleDescriptor::Split3 => "split",
            EtaleDescriptor::QtimesF { .. } => "qxf",
            EtaleDescriptor::Field { .. } => "field",
        }
    }
}

fn is_square_i64(n: i64) -> bool {
    n >= 0 && {
        let r = (n as f64).sqrt().round() as i64;
        (r - 1..=r + 1).any(|k| k >= 0 && k * k == n)
    }
}

/// Cubic etale subalgebra `E` of `J` with its trace-pairing complement `V_E`.
#[derive(Clone, Debug)]
pub struct CubicEtale<S> {
    pub descriptor: EtaleDescriptor,
    /// Images of the chosen `E` basis.
    pub images: [JordanElement<S>; 3],
    /// Coordinates of `1` in that basis.
    pub unit: [i64; 3],
    pub ve_basis: Vec<JordanElement<S>>,
}

impl<S: Scalar> CubicEtale<S> {
    pub fn build(alg: &Albert<S>, desc: &EtaleDescriptor) -> Result<Self, AlgError> {
        let (images, unit) = match desc {
            EtaleDescriptor::Split3 => ([alg.e(1), alg.e(2), alg.e(3)], [1, 1, 1]),
            EtaleDescriptor::QtimesF { d, a, b } => {
                if a * a + b * b != *d {
                    return Err(AlgError::InvalidDescriptor(format!("{a}^2 + {b}^2 != {d}")));
                }
                if is_square_i64(*d) {
                    return Err(AlgError::InvalidDescriptor(format!("{d} is a square")));
                }
                let f1 = alg.diag([S::zero(), S::one(), S::one()]);
                let mut root = alg.diag([S::zero(), S::from_i64(*a), S::from_i64(-a)]);
                root.x[0] = alg.oct.scalar(S::from_i64(*b));
                ([alg.e(1), f1, root], [1, 1, 0])
            }
            EtaleDescriptor::Field { min_poly, matrix } => {
                check_field(min_poly, matrix)?;
                let m = real_symmetric(alg, matrix);
                let m2 = alg.square(&m);
                ([alg.identity(), m, m2], [1, 0, 0])
            }
        };
        let rows: Vec<Vec<S>> = images
            .iter()
            .map(|e| (0..27).map(|k| alg.pairing(e, &alg.from_vec(&unit_vec::<S>(k)))).collect())
            .collect();
        let ve_basis: Vec<JordanElement<S>> = nullspace(&rows, 27).iter().map(|v| alg.from_vec(v)).collect();
        Ok(CubicEtale { descriptor: desc.clone(), images, unit, ve_basis })
    }

    pub fn embed(&self, alg: &Albert<S>, coords: &[S; 3]) -> JordanElement<S> {
        (0..3).fold(alg.zero(), |acc, k| alg.add(&acc, &alg.scale(&coords[k], &self.images[k])))
    }

    pub fn is_in_ve(&self, alg: &Albert<S>, a: &JordanElement<S>) -> bool {
        self.images.iter().all(|e| alg.pairing(e, a).is_zero())
    }

    /// Split `a = a_E + a_V` along `J = E + V_E`.
    pub fn decompose(&self, alg: &Albert<S>, a: &JordanElement<S>) -> (JordanElement<S>, JordanElement<S>) {
        let gram: Vec<Vec<S>> =
            self.images.iter().map(|e| self.images.iter().map(|f| alg.pairing(e, f)).collect()).collect();
        let rhs: Vec<S> = self.images.iter().map(|e| alg.pairing(e, a)).collect();
        let t = solve(&gram, &rhs).expect("trace pairing is nondegenerate on E");
        let coords = [t[0].clone(), t[1].clone(), t[2].clone()];
        let ae = self.embed(alg, &coords);
        let av = alg.sub(a, &ae);
        (ae, av)
    }

    /// Norm on `E` computed independently of `J`.
    pub fn norm_e(&self, coords: &[S; 3]) -> S {
        let [p, q, r] = coords.clone();
        match &self.descriptor {
            EtaleDescriptor::Split3 => p * q * r,
            EtaleDescriptor::QtimesF { d, .. } => p * (q.clone() * q - S::from_i64(*d) * r.clone() * r),
            EtaleDescriptor::Field { min_poly, .. } => {
                // determinant of multiplication by p + q t + r t^2 on the companion basis
                let comp: Vec<Vec<S>> = vec![
                    vec![S::zero(), S::zero(), S::from_i64(-min_poly[0])],
                    vec![S::one(), S::zero(), S::from_i64(-min_poly[1])],
                    vec![S::zero(), S::one(), S::from_i64(-min_poly[2])],
                ];
                let id = mat_id::<S>();
                let c2 = mat3_mul(&comp, &comp);
                let m: Vec<Vec<S>> = (0..3)
                    .map(|i| {
                        (0..3)
                            .map(|j| p.clone() * id[i][j].clone() + q.clone() * comp[i][j].clone() + r.clone() * c2[i][j].clone())
                            .collect()
                    })
                    .collect();
                det3(&m)
            }
        }
    }
}

fn unit_vec<S: Scalar>(k: usize) -> Vec<S> {
    (0..27).map(|i| if i == k { S::one() } else { S::zero() }).collect()
}

fn mat_id<S: Scalar>() -> Vec<Vec<S>> {
    (0..3).map(|i| (0..3).map(|j| if i == j { S::one() } else { S::zero() }).collect()).collect()
}

fn mat3_mul<S: Scalar>(a: &[Vec<S>], b: &[Vec<S>]) -> Vec<Vec<S>> {
    (0..3)
        .map(|i| (0..3).map(|j| (0..3).fold(S::zero(), |acc, k| acc + a[i][k].clone() * b[k][j].clone())).collect())
        .collect()
}

fn det3<S: Scalar>(m: &[Vec<S>]) -> S {
    let t = |i: usize, j: usize| m[i][j].clone();
    t(0, 0) * (t(1, 1) * t(2, 2) - t(1, 2) * t(2, 1)) - t(0, 1) * (t(1, 0) * t(2, 2) - t(1, 2) * t(2, 0))
        + t(0, 2) * (t(1, 0) * t(2, 1) - t(1, 1) * t(2, 0))
}

fn real_symmetric<S: Scalar>(alg: &Albert<S>, m: &[[i64; 3]; 3]) -> JordanElement<S> {
    let s = |v: i64| alg.oct.scalar(S::from_i64(v));
    JordanElement {
        c: [S::from_i64(m[0][0]), S::from_i64(m[1][1]), S::from_i64(m[2][2])],
        x: [s(m[1][2]), s(m[2][0]), s(m[0][1])],
    }
}

fn check_field(p: &[i64; 3], m: &[[i64; 3]; 3]) -> Result<(), AlgError> {
    let bad = |r: String| Err(AlgError::InvalidDescriptor(r));
    if (0..3).any(|i| (0..3).any(|j| m[i][j] != m[j][i])) {
        return bad("matrix is not symmetric".into());
    }
    let mr: Vec<Vec<Rational>> = m.iter().map(|r| r.iter().map(|&v| Rational::from_i64(v)).collect()).collect();
    let tr = m[0][0] + m[1][1] + m[2][2];
    let minors = m[0][0] * m[1][1] - m[0][1] * m[1][0] + m[0][0] * m[2][2] - m[0][2] * m[2][0] + m[1][1] * m[2][2]
        - m[1][2] * m[2][1];
    let det = det3(&mr);
    let char_poly = [-det, Rational::from_i64(minors), Rational::from_i64(-tr)];
    if char_poly.iter().zip(p).any(|(a, &b)| *a != Rational::from_i64(b)) {
        return bad("characteristic polynomial differs from the minimal polynomial".into());
    }
    // monic integer cubic: a rational root is an integer divisor of p0
    let c0 = p[0].abs();
    let has_root = c0 == 0
        || (1..=c0).filter(|d| c0 % d == 0).any(|d| {
            [d, -d].iter().any(|&x| x * x * x + p[2] * x * x + p[1] * x + p[0] == 0)
        });
    if has_root {
        return bad("minimal polynomial has a rational root".into());
    }
    Ok(())
}

/// Element `(a, b, c, d)` of `W_J = k + J + J + k`.
#[derive(Clone, Debug, PartialEq)]
pub struct FreudenthalElement<S> {
    pub a: S,
    pub b: JordanElement<S>,
    pub c: JordanElement<S>,
    pub d: S,
}

/// `lambda * (1, -Z, Z#, -N(Z))`.
pub fn freudenthal_r0<S: Scalar>(alg: &Albert<S>, z: &JordanElement<S>, lambda: &S) -> FreudenthalElement<S> {
    FreudenthalElement {
        a: lambda.clone(),
        b: alg.scale(&-lambda.clone(), z),
        c: alg.scale(lambda, &alg.sharp(z)),
        d: -(lambda.clone() * alg.norm(z)),
    }
}

/// `(a, b, c, d) -> (-d, c, -b, a)`; sends `r0(Z)` to `N(Z) r0(-Z#/N(Z))` and so keeps rank one.
pub fn freudenthal_swap<S: Scalar>(alg: &Albert<S>, x: &FreudenthalElement<S>) -> FreudenthalElement<S> {
    FreudenthalElement { a: -x.d.clone(), b: x.c.clone(), c: alg.scale(&-S::one(), &x.b), d: x.a.clone() }
}

#[derive(Clone, Debug, PartialEq)]
pub struct WeProjection<S> {
    pub we: FreudenthalElement<S>,
    pub ve_b: JordanElement<S>,
    pub ve_c: JordanElement<S>,
}

impl<S: Scalar> WeProjection<S> {
    pub fn we_is_zero(&self, alg: &Albert<S>) -> bool {
        self.we.a.is_zero() && self.we.d.is_zero() && alg.is_zero(&self.we.b) && alg.is_zero(&self.we.c)
    }
}

pub fn we_projection<S: Scalar>(alg: &Albert<S>, e: &CubicEtale<S>, x: &FreudenthalElement<S>) -> WeProjection<S> {
    let (be, bv) = e.decompose(alg, &x.b);
    let (ce, cv) = e.decompose(alg, &x.c);
    WeProjection { we: FreudenthalElement { a: x.a.clone(), b: be, c: ce, d: x.d.clone() }, ve_b: bv, ve_c: cv }
}

/// Generators `(a_i, b_i)` for a triality triple; `prod N(a_i) N(b_i) = 1`.
#[derive(Clone, Debug)]
pub struct TrialityData<S> {
    pub pairs: Vec<(Octonion<S>, Octonion<S>)>,
}

/// `(hat t1, t2, t3)` as 8x8 matrices acting on coordinate columns, plus `t1` itself.
#[derive(Clone, Debug, PartialEq)]
pub struct TrialityTriple<S> {
    pub t1: Vec<Vec<S>>,
    pub g1: Vec<Vec<S>>,
    pub g2: Vec<Vec<S>>,
    pub g3: Vec<Vec<S>>,
}

impl<S: Scalar> TrialityData<S> {
    pub fn check(&self, oct: &OctAlgebra<S>) -> Result<(), AlgError> {
        let mut prod = S::one();
        for (a, b) in &self.pairs {
            let (na, nb) = (oct.norm(a), oct.norm(b));
            if na.is_zero() || nb.is_zero() {
                return Err(AlgError::ZeroNorm);
            }
            prod = prod * na * nb;
        }
        if prod != S::one() {
            return Err(AlgError::NormProduct(prod.to_string()));
        }
        Ok(())
    }

    /// `t1 = s_{a1} s_{b1} ...`.
    pub fn t1(&self, oct: &OctAlgebra<S>, x: &Octonion<S>) -> Octonion<S> {
        self.pairs.iter().rev().fold(x.clone(), |acc, (a, b)| {
            let y = oct.reflect(b, &acc).expect("checked nonzero norm");
            oct.reflect(a, &y).expect("checked nonzero norm")
        })
    }

    /// `t2 = l_{a1} l_{b1*} ...`.
    pub fn t2(&self, oct: &OctAlgebra<S>, x: &Octonion<S>) -> Octonion<S> {
        self.pairs.iter().rev().fold(x.clone(), |acc, (a, b)| oct.mul(a, &oct.mul(&oct.conj(b), &acc)))
    }

    /// `t3 = r_{a1} r_{b1*} ...`.
    pub fn t3(&self, oct: &OctAlgebra<S>, x: &Octonion<S>) -> Octonion<S> {
        self.pairs.iter().rev().fold(x.clone(), |acc, (a, b)| oct.mul(&oct.mul(&acc, &oct.conj(b)), a))
    }

    /// `hat t(x) = t(x*)*`.
    pub fn t1_hat(&self, oct: &OctAlgebra<S>, x: &Octonion<S>) -> Octonion<S> {
        oct.conj(&self.t1(oct, &oct.conj(x)))
    }

    /// Random data with `k` pairs; the last `b` is `x*/N(x)` for `x` the product of the others.
    pub fn random(oct: &OctAlgebra<S>, rng: &mut impl Rng, k: usize, height: i64) -> Self {
        loop {
            let mut gens: Vec<Octonion<S>> = (0..2 * k - 1).map(|_| oct.random(rng, height)).collect();
            let x = gens.iter().fold(oct.one(), |acc, g| oct.mul(&acc, g));
            let Some(inv) = oct.norm(&x).inv() else { continue };
            if gens.iter().any(|g| oct.norm(g).is_zero()) {
                continue;
            }
            gens.push(oct.scale(&inv, &oct.conj(&x)));
            let pairs = gens.chunks(2).map(|c| (c[0].clone(), c[1].clone())).collect();
            return TrialityData { pairs };
        }
    }

    pub fn triple(&self, oct: &OctAlgebra<S>) -> Result<TrialityTriple<S>, AlgError> {
        self.check(oct)?;
        let matrix = |f: &dyn Fn(&Octonion<S>) -> Octonion<S>| -> Vec<Vec<S>> {
            let cols: Vec<Octonion<S>> = (0..8).map(|j| f(&oct.unit(j))).collect();
            (0..8).map(|i| (0..8).map(|j| cols[j].coords[i].clone()).collect()).collect()
        };
        Ok(TrialityTriple {
            t1: matrix(&|x| self.t1(oct, x)),
            g1: matrix(&|x| self.t1_hat(oct, x)),
            g2: matrix(&|x| self.t2(oct, x)),
            g3: matrix(&|x| self.t3(oct, x)),
        })
    }
}

pub fn apply8<S: Scalar>(oct: &OctAlgebra<S>, m: &[Vec<S>], x: &Octonion<S>) -> Octonion<S> {
    oct.from_coords(
        (0..8).map(|i| (0..8).fold(S::zero(), |acc, j| acc + m[i][j].clone() * x.coords[j].clone())).collect(),
    )
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrialityVerdict {
    pub composition: bool,
    pub isometries: bool,
    pub trilinear: bool,
}

impl TrialityVerdict {
    pub fn ok(&self) -> bool {
        self.composition && self.isometries && self.trilinear
    }
}

/// Full check on basis vectors: `t1(xy) = t2(x) t3(y)`, each component preserves the bilinear form,
/// and `(g1, g2, g3)` preserves `tr(x1(x2 x3))` on the basis cube.
pub fn triality_verify<S: Scalar>(oct: &OctAlgebra<S>, t: &TrialityTriple<S>) -> TrialityVerdict {
    let units: Vec<Octonion<S>> = (0..8).map(|i| oct.unit(i)).collect();
    let img = |m: &[Vec<S>]| -> Vec<Octonion<S>> { units.iter().map(|u| apply8(oct, m, u)).collect() };
    let (i1, g1, g2, g3) = (img(&t.t1), img(&t.g1), img(&t.g2), img(&t.g3));
    let mut composition = true;
    for i in 0..8 {
        for j in 0..8 {
            let lhs = apply8(oct, &t.t1, &oct.mul(&units[i], &units[j]));
            composition &= lhs == oct.mul(&g2[i], &g3[j]);
        }
    }
    let mut isometries = true;
    for g in [&i1, &g1, &g2, &g3] {
        for i in 0..8 {
            for j in 0..8 {
                isometries &= oct.bilinear(&g[i], &g[j]) == oct.bilinear(&units[i], &units[j]);
            }
        }
    }
    let mut trilinear = true;
    for i in 0..8 {
        for j in 0..8 {
            for k in 0..8 {
                trilinear &= oct.trilinear(&g1[i], &g2[j], &g3[k]) == oct.trilinear(&units[i], &units[j], &units[k]);
            }
        }
    }
    TrialityVerdict { composition, isometries, trilinear }
}

/// Cheap randomized check for property suites: the same three identities on sampled vectors.
pub fn triality_spot_check<S: Scalar>(
    oct: &OctAlgebra<S>,
    data: &TrialityData<S>,
    rng: &mut impl Rng,
    samples: usize,
) -> TrialityVerdict {
    let mut v = TrialityVerdict { composition: true, isometries: true, trilinear: true };
    for _ in 0..samples {
        let (x, y, z) = (oct.random(rng, 2), oct.random(rng, 2), oct.random(rng, 2));
        v.composition &= data.t1(oct, &oct.mul(&x, &y)) == oct.mul(&data.t2(oct, &x), &data.t3(oct, &y));
        let n = oct.norm(&x);
        v.isometries &= oct.norm(&data.t1(oct, &x)) == n
            && oct.norm(&data.t1_hat(oct, &x)) == n
            && oct.norm(&data.t2(oct, &x)) == n
            && oct.norm(&data.t3(oct, &x)) == n;
        v.trilinear &= oct.trilinear(&data.t1_hat(oct, &x), &data.t2(oct, &y), &data.t3(oct, &z)) == oct.trilinear(&x, &y, &z);
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::int;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    type Q = Rational;

    #[test]
    fn coordinate_sharp_matches_matrix_formula() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for flavor in [Flavor::Definite, Flavor::Split] {
            let j = Albert::<Q>::new(flavor);
            for _ in 0..30 {
                let a = j.random(&mut rng, 3);
                assert_eq!(j.sharp(&a), j.sharp_by_matrices(&a));
            }
        }
    }

    #[test]
    fn diagonal_norm_matches_product_with_conjugate() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for flavor in [Flavor::Definite, Flavor::Split] {
            let o = OctAlgebra::<Q>::new(flavor);
            for _ in 0..50 {
                let (x, y) = (o.random(&mut rng, 4), o.random(&mut rng, 4));
                assert_eq!(o.norm(&x), o.mul(&x, &o.conj(&x)).coords[0]);
                assert_eq!(o.bilinear(&x, &y), o.trace(&o.mul(&x, &o.conj(&y))));
            }
        }
    }

    #[test]
    fn units_and_norms() {
        let o = OctAlgebra::<Q>::new(Flavor::Definite);
        assert_eq!(o.norm(&o.one()), int(1));
        assert_eq!(o.trace(&o.one()), int(2));
        assert_eq!(o.trilinear(&o.one(), &o.one(), &o.one()), int(2));
        for i in 0..8 {
            assert_eq!(o.norm(&o.unit(i)), int(1));
        }
        let s = OctAlgebra::<Q>::new(Flavor::Split);
        let iso = s.add(&s.one(), &s.unit(4));
        assert_eq!(s.norm(&iso), int(0));
    }

    #[test]
    fn composition_both_flavors() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for f in [Flavor::Definite, Flavor::Split] {
            let o = OctAlgebra::<Q>::new(f);
            for _ in 0..50 {
                let (x, y) = (o.random(&mut rng, 3), o.random(&mut rng, 3));
                assert_eq!(o.norm(&o.mul(&x, &y)), o.norm(&x) * o.norm(&y));
            }
        }
        let o = OctAlgebra::<Fp<11>>::new(Flavor::Split);
        for _ in 0..50 {
            let (x, y) = (o.random(&mut rng, 5), o.random(&mut rng, 5));
            assert_eq!(o.norm(&o.mul(&x, &y)), o.norm(&x) * o.norm(&y));
        }
    }

    #[test]
    fn adjoint_identities() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let j = Albert::<Q>::new(Flavor::Definite);
        for _ in 0..20 {
            let x = j.random(&mut rng, 2);
            let xs = j.sharp(&x);
            let n = j.norm(&x);
            assert_eq!(j.jordan_product(&x, &xs), j.scale(&n, &j.identity()));
            assert_eq!(j.sharp(&xs), j.scale(&n, &x));
        }
        assert_eq!(j.rank(&j.e(1)), 1);
        let y = j.diag([int(1), int(1), int(0)]);
        assert_eq!(j.sharp(&y), j.e(3));
        assert_eq!(j.norm(&j.diag([int(2), int(3), int(5)])), int(30));
    }

    #[test]
    fn etale_embeddings() {
        let j = Albert::<Q>::new(Flavor::Definite);
        for d in [EtaleDescriptor::Split3, EtaleDescriptor::default_qxf(), EtaleDescriptor::default_field()] {
            let e = CubicEtale::build(&j, &d).unwrap();
            assert_eq!(e.ve_basis.len(), 24, "{d:?}");
            let one = e.unit.map(int);
            assert_eq!(e.embed(&j, &one), j.identity());
            for b in &e.ve_basis {
                assert!(e.is_in_ve(&j, b));
            }
            let x = [int(2), int(-1), int(3)];
            assert_eq!(j.norm(&e.embed(&j, &x)), e.norm_e(&x), "{d:?}");
        }
        assert!(CubicEtale::build(&j, &EtaleDescriptor::QtimesF { d: 3, a: 1, b: 1 }).is_err());
        assert!(CubicEtale::build(&j, &EtaleDescriptor::QtimesF { d: 4, a: 2, b: 0 }).is_err());
        let bad = EtaleDescriptor::Field { min_poly: [0, -1, 0], matrix: [[0, 1, 0], [1, 0, 0], [0, 0, 0]] };
        assert!(CubicEtale::build(&j, &bad).is_err());
    }

    #[test]
    fn freudenthal_basics() {
        let j = Albert::<Q>::new(Flavor::Definite);
        let r = freudenthal_r0(&j, &j.zero(), &int(1));
        assert_eq!((r.a.clone(), r.d.clone()), (int(1), int(0)));
        assert!(j.is_zero(&r.b) && j.is_zero(&r.c));
        let r = freudenthal_r0(&j, &j.identity(), &int(1));
        assert_eq!(r.b, j.scale(&int(-1), &j.identity()));
        assert_eq!(r.c, j.identity());
        assert_eq!(r.d, int(-1));
    }

    #[test]
    fn triality_small() {
        let o = OctAlgebra::<Q>::new(Flavor::Definite);
        let ident = TrialityData { pairs: vec![(o.one(), o.one())] };
        let t = ident.triple(&o).unwrap();
        let id: Vec<Vec<Q>> = (0..8).map(|i| (0..8).map(|j| if i == j { int(1) } else { int(0) }).collect()).collect();
        assert_eq!((t.g1.clone(), t.g2.clone(), t.g3.clone()), (id.clone(), id.clone(), id));
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let data = TrialityData::random(&o, &mut rng, 1, 2);
        assert!(triality_verify(&o, &data.triple(&o).unwrap()).ok());
        let bad = TrialityData { pairs: vec![(o.scale(&int(2), &o.one()), o.one())] };
        assert!(matches!(bad.triple(&o), Err(AlgError::NormProduct(_))));
    }

    #[test]
    fn square_roots() {
        assert_eq!(Scalar::sqrt(&Q::new(9.into(), 4.into())), Some(Q::new(3.into(), 2.into())));
        assert_eq!(Scalar::sqrt(&int(2)), None);
        for a in 1..13u64 {
            let x = Fp::<13>(a);
            if let Some(r) = x.sqrt() {
                assert_eq!(r * r, x);
            }
        }
        let o = OctAlgebra::<Q>::new(Flavor::Definite);
        assert!(matches!(o.normalize_unit(&o.from_ints([1, 1, 0, 0, 0, 0, 0, 0])), Err(AlgError::RequiresQuadraticExtension(_))));
        assert_eq!(o.norm(&o.normalize_unit(&o.from_ints([1, 1, 1, 1, 0, 0, 0, 0])).unwrap()), int(1));
    }
}
