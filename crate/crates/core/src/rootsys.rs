//! Root systems in explicit Euclidean coordinates, Weyl groups as rational matrix groups,
//! and minimal (double) coset representatives.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::exactnum::{int, AffineForm, Rational};

pub type Vector = Vec<Rational>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RootError {
    #[error("simple roots must be nonzero vectors of equal dimension")]
    BadSimpleRoots,
    #[error("simple roots {0} and {1} have a non-integral or positive Cartan entry")]
    NotCartan(usize, usize),
    #[error("root closure exceeded {0} roots; the simple roots do not span a finite system")]
    Infinite(usize),
    #[error("no multiplicity configured for roots of squared length {0}")]
    MissingMultiplicity(String),
    #[error("simple root index {0} out of range 1..={1}")]
    BadIndex(usize, usize),
    #[error("parabolic is not maximal: radical has {0} simple roots")]
    NotMaximal(usize),
    #[error("character nu is not proportional to the modulus character on the root span")]
    NuMismatch,
    #[error("word {0} is not a minimal double coset representative")]
    NotMinimal(String),
    #[error("word {0} is not reduced")]
    NotReduced(String),
    #[error("unsupported Cartan type {0:?}")]
    UnknownType(String),
    #[error("matrix does not lie in the Weyl group")]
    NotInWeyl,
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// `2(v, a)/(a, a)`.
pub fn coroot(v: &[Rational], a: &[Rational]) -> Rational {
    dot(v, a) * int(2) / dot(a, a)
}

pub fn coroot_pairing(v: &[AffineForm], a: &[Rational]) -> AffineForm {
    let scale = int(2) / dot(a, a);
    let mut acc = AffineForm::zero();
    for (x, y) in v.iter().zip(a) {
        if !y.is_zero() {
            acc = &acc + &x.scale(y);
        }
    }
    acc.scale(&scale)
}

/// `s_a(v) = v - <v, a^vee> a` on a vector of affine forms.
pub fn reflect_affine(v: &[AffineForm], a: &[Rational]) -> Vec<AffineForm> {
    let p = coroot_pairing(v, a);
    v.iter().zip(a).map(|(x, y)| x - &p.scale(y)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct WeylWord(pub Vec<usize>);

impl fmt::Display for WeylWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|i| i.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl WeylWord {
    pub fn len(&self) -> usize {
        self.0.len()
    }
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Square rational matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matrix {
    pub n: usize,
    pub data: Vec<Rational>,
}

impl Matrix {
    pub fn identity(n: usize) -> Self {
        let mut data = vec![Rational::zero(); n * n];
        for i in 0..n {
            data[i * n + i] = Rational::one();
        }
        Matrix { n, data }
    }
    pub fn reflection(a: &[Rational]) -> Self {
        let n = a.len();
        let c = int(2) / dot(a, a);
        let mut m = Self::identity(n);
        for i in 0..n {
            for j in 0..n {
                m.data[i * n + j] -= &c * &a[i] * &a[j];
            }
        }
        m
    }
    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.n + j]
    }
    pub fn mul(&self, o: &Matrix) -> Matrix {
        let n = self.n;
        let mut data = vec![Rational::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = o.get(k, j);
                    if !b.is_zero() {
                        data[i * n + j] += a * b;
                    }
                }
            }
        }
        Matrix { n, data }
    }
    pub fn apply(&self, v: &[Rational]) -> Vector {
        (0..self.n).map(|i| (0..self.n).map(|j| self.get(i, j) * &v[j]).sum()).collect()
    }
    pub fn apply_affine(&self, v: &[AffineForm]) -> Vec<AffineForm> {
        (0..self.n)
            .map(|i| {
                let mut acc = AffineForm::zero();
                for (j, x) in v.iter().enumerate() {
                    let c = self.get(i, j);
                    if !c.is_zero() {
                        acc = &acc + &x.scale(c);
                    }
                }
                acc
            })
            .collect()
    }
    pub fn transpose(&self) -> Matrix {
        let n = self.n;
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(self.get(j, i).clone());
            }
        }
        Matrix { n, data }
    }
}

/// A Weyl group element, identified by its orthogonal matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElem {
    pub mat: Matrix,
}

impl WeylElem {
    pub fn identity(n: usize) -> Self {
        WeylElem { mat: Matrix::identity(n) }
    }
    pub fn mul(&self, o: &WeylElem) -> WeylElem {
        WeylElem { mat: self.mat.mul(&o.mat) }
    }
    /// Orthogonal, so the inverse is the transpose.
    pub fn inverse(&self) -> WeylElem {
        WeylElem { mat: self.mat.transpose() }
    }
    pub fn apply(&self, v: &[Rational]) -> Vector {
        self.mat.apply(v)
    }
    pub fn apply_affine(&self, v: &[AffineForm]) -> Vec<AffineForm> {
        self.mat.apply_affine(v)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Root {
    pub coords: Vector,
    pub lengthsq: Rational,
    /// Coordinates in the basis of simple roots.
    pub coeffs: Vec<Rational>,
    pub positive: bool,
}

/// Per-length multiplicity table `m(alpha)`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Multiplicity {
    pub table: Vec<(Rational, u32)>,
}

impl Multiplicity {
    pub fn uniform() -> Self {
        Multiplicity { table: vec![] }
    }
    pub fn get(&self, lengthsq: &Rational) -> Option<u32> {
        if self.table.is_empty() {
            return Some(1);
        }
        self.table.iter().find(|(l, _)| l == lengthsq).map(|(_, m)| *m)
    }
}

/// Parabolic subgroup named by the simple roots in its unipotent radical (1-based).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Parabolic {
    pub radical: BTreeSet<usize>,
}

impl Parabolic {
    pub fn from_radical<I: IntoIterator<Item = usize>>(it: I) -> Self {
        Parabolic { radical: it.into_iter().collect() }
    }
    /// `P = G`.
    pub fn full() -> Self {
        Parabolic { radical: BTreeSet::new() }
    }
    /// Minimal parabolic of a system of the given rank.
    pub fn minimal(rank: usize) -> Self {
        Self::from_radical(1..=rank)
    }
    pub fn levi(&self, rank: usize) -> Vec<usize> {
        (1..=rank).filter(|i| !self.radical.contains(i)).collect()
    }
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    pub name: String,
    pub dim: usize,
    pub simple: Vec<Vector>,
    pub roots: Vec<Root>,
    pub multiplicity: Multiplicity,
    index: HashMap<Vector, usize>,
    reflections: Vec<Matrix>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetRep {
    pub elem: WeylElem,
    pub word: WeylWord,
}

const ROOT_LIMIT: usize = 2000;

impl RootSystem {
    pub fn generate(name: &str, simple: Vec<Vector>, multiplicity: Multiplicity) -> Result<Self, RootError> {
        let dim = simple.first().map(|v| v.len()).ok_or(RootError::BadSimpleRoots)?;
        if simple.iter().any(|v| v.len() != dim || v.iter().all(|c| c.is_zero())) {
            return Err(RootError::BadSimpleRoots);
        }
        let rank = simple.len();
        for i in 0..rank {
            for j in 0..rank {
                if i == j {
                    continue;
                }
                let c = coroot(&simple[i], &simple[j]);
                if !c.is_integer() || c.is_positive() {
                    return Err(RootError::NotCartan(i + 1, j + 1));
                }
            }
        }
        let mut roots: Vec<Root> = Vec::new();
        let mut index = HashMap::new();
        let mut queue = VecDeque::new();
        for (i, a) in simple.iter().enumerate() {
            let mut coeffs = vec![Rational::zero(); rank];
            coeffs[i] = Rational::one();
            index.insert(a.clone(), roots.len());
            queue.push_back(roots.len());
            roots.push(Root { coords: a.clone(), lengthsq: dot(a, a), coeffs, positive: true });
        }
        while let Some(k) = queue.pop_front() {
            for (i, a) in simple.iter().enumerate() {
                let b = &roots[k];
                let p = coroot(&b.coords, a);
                if p.is_zero() && k != i {
                    continue;
                }
                let coords: Vector = b.coords.iter().zip(a).map(|(x, y)| x - &p * y).collect();
                if index.contains_key(&coords) {
                    continue;
                }
                let mut coeffs = b.coeffs.clone();
                coeffs[i] -= &p;
                let positive = coeffs.iter().all(|c| !c.is_negative());
                let lengthsq = b.lengthsq.clone();
                index.insert(coords.clone(), roots.len());
                queue.push_back(roots.len());
                roots.push(Root { coords, lengthsq, coeffs, positive });
                if roots.len() > ROOT_LIMIT {
                    return Err(RootError::Infinite(ROOT_LIMIT));
                }
            }
        }
        for r in &roots {
            if multiplicity.get(&r.lengthsq).is_none() {
                return Err(RootError::MissingMultiplicity(r.lengthsq.to_string()));
            }
        }
        let reflections = simple.iter().map(|a| Matrix::reflection(a)).collect();
        Ok(RootSystem { name: name.to_string(), dim, simple, roots, multiplicity, index, reflections })
    }

    pub fn rank(&self) -> usize {
        self.simple.len()
    }

    pub fn check_index(&self, i: usize) -> Result<(), RootError> {
        if i == 0 || i > self.rank() {
            Err(RootError::BadIndex(i, self.rank()))
        } else {
            Ok(())
        }
    }

    pub fn check_parabolic(&self, p: &Parabolic) -> Result<(), RootError> {
        p.radical.iter().try_for_each(|&i| self.check_index(i))
    }

    pub fn positive_roots(&self) -> impl Iterator<Item = &Root> {
        self.roots.iter().filter(|r| r.positive)
    }

    pub fn root_index(&self, v: &[Rational]) -> Option<usize> {
        self.index.get(v).copied()
    }

    pub fn is_positive_root(&self, v: &[Rational]) -> Option<bool> {
        self.root_index(v).map(|k| self.roots[k].positive)
    }

    pub fn mult(&self, r: &Root) -> u32 {
        self.multiplicity.get(&r.lengthsq).expect("validated at generation")
    }

    /// Simple root `i` (1-based).
    pub fn alpha(&self, i: usize) -> &Vector {
        &self.simple[i - 1]
    }

    pub fn reflection(&self, i: usize) -> WeylElem {
        WeylElem { mat: self.reflections[i - 1].clone() }
    }

    pub fn identity(&self) -> WeylElem {
        WeylElem::identity(self.dim)
    }

    /// `s_{i1} ... s_{iN}`; the rightmost letter acts first.
    pub fn elem(&self, word: &WeylWord) -> Result<WeylElem, RootError> {
        let mut m = self.identity();
        for &i in &word.0 {
            self.check_index(i)?;
            m = m.mul(&self.reflection(i));
        }
        Ok(m)
    }

    fn sends_negative(&self, w: &WeylElem, v: &[Rational]) -> bool {
        !self.is_positive_root(&w.apply(v)).expect("Weyl elements permute roots")
    }

    /// Number of positive roots sent to negative roots.
    pub fn length(&self, w: &WeylElem) -> usize {
        self.positive_roots().filter(|r| self.sends_negative(w, &r.coords)).count()
    }

    pub fn inversions<'a>(&'a self, w: &'a WeylElem) -> impl Iterator<Item = &'a Root> + 'a {
        self.positive_roots().filter(move |r| self.sends_negative(w, &r.coords))
    }

    pub fn is_reduced(&self, word: &WeylWord) -> Result<bool, RootError> {
        Ok(self.length(&self.elem(word)?) == word.len())
    }

    /// Lexicographically smallest reduced word, found by peeling left descents.
    pub fn canonical_word(&self, w: &WeylElem) -> WeylWord {
        let mut letters = Vec::new();
        let mut cur = w.clone();
        'outer: loop {
            let inv = cur.inverse();
            for i in 1..=self.rank() {
                if self.sends_negative(&inv, self.alpha(i)) {
                    letters.push(i);
                    cur = self.reflection(i).mul(&cur);
                    continue 'outer;
                }
            }
            break;
        }
        WeylWord(letters)
    }

    /// `w(alpha) > 0` for every simple alpha in `levi`.
    pub fn is_minimal_right(&self, w: &WeylElem, levi: &[usize]) -> bool {
        levi.iter().all(|&i| !self.sends_negative(w, self.alpha(i)))
    }

    /// Minimal length representatives `[W_L \ W / W_M]`, sorted by length then word.
    pub fn coset_reps(&self, left: &Parabolic, right: &Parabolic) -> Result<Vec<CosetRep>, RootError> {
        self.check_parabolic(left)?;
        self.check_parabolic(right)?;
        let levi_l = left.levi(self.rank());
        let levi_m = right.levi(self.rank());
        let id = self.identity();
        let mut seen: HashSet<WeylElem> = HashSet::from([id.clone()]);
        let mut frontier = vec![id];
        let mut all = Vec::new();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for w in &frontier {
                let inv = w.inverse();
                for i in 1..=self.rank() {
                    // s_i w is longer than w exactly when w^{-1}(alpha_i) > 0
                    if self.sends_negative(&inv, self.alpha(i)) {
                        continue;
                    }
                    let cand = self.reflection(i).mul(w);
                    if seen.contains(&cand) || !self.is_minimal_right(&cand, &levi_m) {
                        continue;
                    }
                    seen.insert(cand.clone());
                    next.push(cand);
                }
            }
            all.extend(std::mem::replace(&mut frontier, next));
        }
        let mut out: Vec<CosetRep> = all
            .into_iter()
            .filter(|w| self.is_minimal_right(&w.inverse(), &levi_l))
            .map(|w| CosetRep { word: self.canonical_word(&w), elem: w })
            .collect();
        out.sort_by(|a, b| a.word.len().cmp(&b.word.len()).then_with(|| a.word.cmp(&b.word)));
        Ok(out)
    }

    /// The unique longest element of `[W/W_M]`.
    pub fn longest_rep(&self, right: &Parabolic) -> Result<CosetRep, RootError> {
        let reps = self.coset_reps(&Parabolic::minimal(self.rank()), right)?;
        Ok(reps.into_iter().last().expect("identity is always present"))
    }

    /// Longest element of the parabolic subgroup generated by `subset`.
    pub fn longest_in(&self, subset: &[usize]) -> WeylElem {
        let mut w = self.identity();
        'outer: loop {
            for &i in subset {
                if !self.sends_negative(&w, self.alpha(i)) {
                    w = w.mul(&self.reflection(i));
                    continue 'outer;
                }
            }
            return w;
        }
    }

    /// Roots of the unipotent radical of `p`.
    pub fn radical_roots<'a>(&'a self, p: &'a Parabolic) -> impl Iterator<Item = &'a Root> + 'a {
        self.positive_roots().filter(move |r| p.radical.iter().any(|&i| r.coeffs[i - 1].is_positive()))
    }

    /// `Delta^w(L) = { beta simple in L : w^{-1}(beta) in Phi(N_P) }`.
    pub fn associated_simple_roots(
        &self,
        w: &WeylElem,
        left: &Parabolic,
        source: &Parabolic,
    ) -> Result<BTreeSet<usize>, RootError> {
        let levi_l = left.levi(self.rank());
        let levi_m = source.levi(self.rank());
        if !self.is_minimal_right(w, &levi_m) || !self.is_minimal_right(&w.inverse(), &levi_l) {
            return Err(RootError::NotMinimal(self.canonical_word(w).to_string()));
        }
        let inv = w.inverse();
        let mut out = BTreeSet::new();
        for &b in &levi_l {
            let img = inv.apply(self.alpha(b));
            let k = self.root_index(&img).expect("Weyl elements permute roots");
            let r = &self.roots[k];
            if r.positive && source.radical.iter().any(|&i| r.coeffs[i - 1].is_positive()) {
                out.insert(b);
            }
        }
        Ok(out)
    }

    /// `rho = 1/2 sum_{alpha > 0} m(alpha) alpha`.
    pub fn rho(&self) -> Vector {
        let mut acc = vec![Rational::zero(); self.dim];
        for r in self.positive_roots() {
            let m = int(self.mult(r) as i64);
            for (a, c) in acc.iter_mut().zip(&r.coords) {
                *a += &m * c;
            }
        }
        acc.into_iter().map(|x| x / int(2)).collect()
    }

    /// `sum_{alpha in N} m(alpha) alpha`, i.e. the modulus character of `p` additively.
    pub fn modulus_vector(&self, p: &Parabolic) -> Vector {
        let mut acc = vec![Rational::zero(); self.dim];
        for r in self.radical_roots(p) {
            let m = int(self.mult(r) as i64);
            for (a, c) in acc.iter_mut().zip(&r.coords) {
                *a += &m * c;
            }
        }
        acc
    }

    /// `s_P` with `delta_P = |nu|^{s_P}` for a maximal parabolic.
    pub fn modulus_exponent(&self, p: &Parabolic, nu: &[Rational]) -> Result<Rational, RootError> {
        self.check_parabolic(p)?;
        if p.radical.len() != 1 {
            return Err(RootError::NotMaximal(p.radical.len()));
        }
        let beta = self.alpha(*p.radical.iter().next().unwrap());
        let sum = self.modulus_vector(p);
        let denom = coroot(nu, beta);
        if denom.is_zero() {
            return Err(RootError::NuMismatch);
        }
        let sp = coroot(&sum, beta) / denom;
        // the two characters must agree on every coroot, not only on beta
        for a in &self.simple {
            let diff: Vector = sum.iter().zip(nu).map(|(x, y)| x - &sp * y).collect();
            if !coroot(&diff, a).is_zero() {
                return Err(RootError::NuMismatch);
            }
        }
        Ok(sp)
    }

    /// Full group by BFS closure. Only sensible for small groups; used as an oracle.
    pub fn all_elements(&self) -> Vec<WeylElem> {
        let id = self.identity();
        let mut seen: HashSet<WeylElem> = HashSet::from([id.clone()]);
        let mut queue = VecDeque::from([id]);
        let mut out = Vec::new();
        while let Some(w) = queue.pop_front() {
            for i in 1..=self.rank() {
                let n = w.mul(&self.reflection(i));
                if seen.insert(n.clone()) {
                    queue.push_back(n);
                }
            }
            out.push(w);
        }
        out
    }
}

/// Simple roots in Bourbaki coordinates for `D<n>` (n >= 4), `E6`, `E7`, `E8`.
pub fn cartan_simple_roots(cartan_type: &str) -> Result<Vec<Vector>, RootError> {
    let unknown = || RootError::UnknownType(cartan_type.to_string());
    let e = |n: usize, i: usize| -> Vector { (0..n).map(|k| if k == i { int(1) } else { Rational::zero() }).collect() };
    let sub = |a: &Vector, b: &Vector| -> Vector { a.iter().zip(b).map(|(x, y)| x - y).collect() };
    let add = |a: &Vector, b: &Vector| -> Vector { a.iter().zip(b).map(|(x, y)| x + y).collect() };
    if let Some(n) = cartan_type.strip_prefix('D') {
        let n: usize = n.parse().map_err(|_| unknown())?;
        if n < 4 {
            return Err(unknown());
        }
        let mut out: Vec<Vector> = (0..n - 1).map(|i| sub(&e(n, i), &e(n, i + 1))).collect();
        out.push(add(&e(n, n - 2), &e(n, n - 1)));
        return Ok(out);
    }
    let rank = match cartan_type {
        "E6" => 6,
        "E7" => 7,
        "E8" => 8,
        _ => return Err(unknown()),
    };
    let half = Rational::new(1.into(), 2.into());
    let mut a1: Vector = vec![-half.clone(); 8];
    a1[0] = half.clone();
    a1[7] = half;
    let mut out = vec![a1, add(&e(8, 0), &e(8, 1))];
    for i in 0..6 {
        out.push(sub(&e(8, i + 1), &e(8, i)));
    }
    out.truncate(rank);
    Ok(out)
}

impl RootSystem {
    /// Split system of the given Cartan type, all multiplicities one.
    pub fn cartan(cartan_type: &str) -> Result<Self, RootError> {
        Self::generate(cartan_type, cartan_simple_roots(cartan_type)?, Multiplicity::uniform())
    }

    /// Element with the given images of the coordinate vectors, checked to lie in `W`.
    pub fn elem_from_images(&self, images: &[Vector]) -> Result<WeylElem, RootError> {
        let n = self.dim;
        if images.len() != n || images.iter().any(|v| v.len() != n) {
            return Err(RootError::NotInWeyl);
        }
        let mut data = vec![Rational::zero(); n * n];
        for (j, img) in images.iter().enumerate() {
            for (i, x) in img.iter().enumerate() {
                data[i * n + j] = x.clone();
            }
        }
        let w = WeylElem { mat: Matrix { n, data } };
        if w.mat.transpose().mul(&w.mat) != Matrix::identity(n) || self.roots.iter().any(|r| self.root_index(&w.apply(&r.coords)).is_none()) {
            return Err(RootError::NotInWeyl);
        }
        if self.elem(&self.canonical_word(&w))? != w {
            return Err(RootError::NotInWeyl);
        }
        Ok(w)
    }
}

/// Lift of a rational simple reflection through a Tits index: `w0(K + d) w0(K)`.
pub fn tits_lift(abs: &RootSystem, kernel: &[usize], node: usize) -> WeylElem {
    let mut with_node: Vec<usize> = kernel.to_vec();
    with_node.push(node);
    abs.longest_in(&with_node).mul(&abs.longest_in(kernel))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    fn v(xs: &[i64]) -> Vector {
        xs.iter().map(|&x| int(x)).collect()
    }

    fn g2() -> RootSystem {
        let m = Multiplicity { table: vec![(int(2), 3), (int(6), 1)] };
        RootSystem::generate("G2", vec![v(&[0, 1, -1]), v(&[1, -2, 1])], m).unwrap()
    }

    fn f4() -> RootSystem {
        let h = rat(1, 2);
        let simple = vec![v(&[0, 1, -1, 0]), v(&[0, 0, 1, -1]), v(&[0, 0, 0, 1]), vec![h.clone(), -&h, -&h, -&h]];
        let m = Multiplicity { table: vec![(int(2), 1), (int(1), 8)] };
        RootSystem::generate("F4", simple, m).unwrap()
    }

    fn words(reps: &[CosetRep]) -> Vec<Vec<usize>> {
        reps.iter().map(|r| r.word.0.clone()).collect()
    }

    #[test]
    fn counts() {
        let g = g2();
        assert_eq!(g.roots.len(), 12);
        assert_eq!(g.all_elements().len(), 12);
        let f = f4();
        assert_eq!(f.roots.len(), 48);
        assert_eq!(f.all_elements().len(), 1152);
    }

    #[test]
    fn g2_double_cosets() {
        let g = g2();
        // heisenberg parabolic has alpha_2 in its radical
        let heis = Parabolic::from_radical([2]);
        let reps = g.coset_reps(&heis, &heis).unwrap();
        let want: Vec<WeylElem> =
            [vec![], vec![2], vec![2, 1, 2], vec![2, 1, 2, 1, 2]].iter().map(|w| g.elem(&WeylWord(w.clone())).unwrap()).collect();
        let got: Vec<WeylElem> = reps.iter().map(|r| r.elem.clone()).collect();
        assert_eq!(got, want);
        assert_eq!(g.longest_rep(&heis).unwrap().elem, g.elem(&WeylWord(vec![2, 1, 2, 1, 2])).unwrap());
    }

    #[test]
    fn full_parabolic_gives_identity() {
        let f = f4();
        let reps = f.coset_reps(&Parabolic::full(), &Parabolic::full()).unwrap();
        assert_eq!(words(&reps), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn f4_quotient_and_longest() {
        let f = f4();
        let p1 = Parabolic::from_radical([1]);
        let reps = f.coset_reps(&Parabolic::minimal(4), &p1).unwrap();
        assert_eq!(reps.len(), 24);
        let w0 = f.longest_rep(&p1).unwrap();
        assert_eq!(w0.word.len(), 15);
        let printed = f.elem(&WeylWord(vec![1, 2, 3, 4, 2, 3, 1, 2, 3, 4, 1, 2, 3, 2, 1])).unwrap();
        assert_eq!(w0.elem, printed);
    }

    #[test]
    fn f4_rho_and_modulus() {
        let f = f4();
        assert_eq!(f.rho(), v(&[23, 6, 5, 4]));
        assert_eq!(f.modulus_exponent(&Parabolic::from_radical([1]), &v(&[1, 1, 0, 0])).unwrap(), int(29));
        assert!(matches!(f.modulus_exponent(&Parabolic::from_radical([1, 2]), &v(&[1, 1, 0, 0])), Err(RootError::NotMaximal(2))));
    }

    #[test]
    fn f4_associated_roots() {
        let f = f4();
        let p1 = Parabolic::from_radical([1]);
        let w = f.elem(&WeylWord(vec![2, 3, 2, 1])).unwrap();
        let d = f.associated_simple_roots(&w, &Parabolic::from_radical([2]), &p1).unwrap();
        assert_eq!(d, BTreeSet::from([1, 4]));
        let d = f.associated_simple_roots(&f.identity(), &Parabolic::from_radical([4]), &p1).unwrap();
        assert_eq!(d, BTreeSet::from([1]));
        let w = f.elem(&WeylWord(vec![2])).unwrap();
        assert!(f.associated_simple_roots(&w, &Parabolic::from_radical([4]), &p1).is_err());
    }

    #[test]
    fn pairing_examples() {
        let lam: Vec<AffineForm> = ["s-17", "s-9", "s-1"].iter().map(|t| AffineForm::parse(t).unwrap()).collect();
        assert_eq!(coroot_pairing(&lam, &v(&[0, 0, 2])), AffineForm::parse("s-1").unwrap());
        let zero = vec![AffineForm::zero(); 3];
        assert!(coroot_pairing(&zero, &v(&[1, -1, 0])).is_zero());
    }

    #[test]
    fn bad_inputs() {
        assert!(matches!(
            RootSystem::generate("x", vec![v(&[1, 0]), v(&[1, 1])], Multiplicity::uniform()),
            Err(RootError::NotCartan(_, _))
        ));
        let m = Multiplicity { table: vec![(int(2), 1)] };
        assert!(matches!(RootSystem::generate("x", vec![v(&[1, -1]), v(&[0, 1])], m), Err(RootError::MissingMultiplicity(_))));
    }
}
