//! The module A over K[F_n] with spanning set `{1} ∪ {v_i} ∪ {b_ij}`, where
//! `g_i = lambda_i + v_i` and `b_ij = [v_i, v_j]`.
//!
//! For n ≥ 3 the spanning set is not free (there are K[F_n]-linear relations
//! among the `v_i` and `b_ij`), so two elements with different coefficient
//! vectors can be equal. [`GroupAlgebra::equivalent`] decides equality by
//! comparing scalar parts and all dot products with the spanning set.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use once_cell::sync::Lazy;
use thiserror::Error;

use crate::poly::chebyshev_pair_at;
use crate::ring::{build_kf, canonical_m, lambda, w_poly, QuotientRing};
use crate::poly::{Accumulator, Var};
use crate::words::Word;
use crate::{Poly, Rational};

pub mod selftest;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("generator index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("elements belong to different algebras ({0} vs {1} generators)")]
    MismatchedAmbient(usize, usize),
}

static KF_CACHE: Lazy<Mutex<HashMap<usize, Arc<QuotientRing>>>> = Lazy::new(|| Mutex::new(HashMap::new()));

/// R_n, built once per process.
pub fn kf_ring(n: usize) -> Arc<QuotientRing> {
    if let Some(r) = KF_CACHE.lock().expect("cache poisoned").get(&n) {
        return r.clone();
    }
    let r = Arc::new(build_kf(n).expect("n >= 1"));
    KF_CACHE.lock().expect("cache poisoned").entry(n).or_insert(r).clone()
}

/// An element `scalar·1 + Σ vecs[i]·v_{i+1} + Σ brs[p]·b_p` of A.
#[derive(Clone, PartialEq)]
pub struct AElem {
    n: usize,
    scalar: Poly,
    vecs: Vec<Poly>,
    brs: Vec<Poly>,
}

/// Index of `b_ij` (i < j, 1-based) in the lexicographic list of pairs.
fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j <= n);
    // Pairs (1,2)..(1,n), (2,3).. : offset of row i is sum_{a<i} (n-a).
    (1..i).map(|a| n - a).sum::<usize>() + (j - i - 1)
}

fn pairs(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            out.push((i, j));
        }
    }
    out
}

impl AElem {
    pub fn zero(n: usize) -> Self {
        AElem {
            n,
            scalar: Poly::zero(),
            vecs: vec![Poly::zero(); n],
            brs: vec![Poly::zero(); n * n.saturating_sub(1) / 2],
        }
    }

    pub fn scalar(n: usize, p: Poly) -> Self {
        let mut a = Self::zero(n);
        a.scalar = p;
        a
    }

    pub fn one(n: usize) -> Self {
        Self::scalar(n, Poly::one())
    }

    /// The basis element `v_i`.
    pub fn v(n: usize, i: usize) -> Self {
        let mut a = Self::zero(n);
        a.vecs[i - 1] = Poly::one();
        a
    }

    /// `b_ij = [v_i, v_j]` for any `i ≠ j` (with sign), zero if `i = j`.
    pub fn b(n: usize, i: usize, j: usize) -> Self {
        let mut a = Self::zero(n);
        a.add_b(i, j, &Poly::one());
        a
    }

    fn add_b(&mut self, i: usize, j: usize, c: &Poly) {
        if c.is_zero() || i == j {
            return;
        }
        if i < j {
            let p = pair_index(self.n, i, j);
            self.brs[p] = &self.brs[p] + c;
        } else {
            let p = pair_index(self.n, j, i);
            self.brs[p] = &self.brs[p] - c;
        }
    }

    fn add_v(&mut self, i: usize, c: &Poly) {
        if !c.is_zero() {
            self.vecs[i - 1] = &self.vecs[i - 1] + c;
        }
    }

    pub fn generators(&self) -> usize {
        self.n
    }

    pub fn bar(&self) -> &Poly {
        &self.scalar
    }

    /// The component in Λ (scalar part set to zero).
    pub fn vec(&self) -> AElem {
        let mut a = self.clone();
        a.scalar = Poly::zero();
        a
    }

    pub fn vec_coeff(&self, i: usize) -> &Poly {
        &self.vecs[i - 1]
    }

    pub fn bracket_coeff(&self, i: usize, j: usize) -> &Poly {
        &self.brs[pair_index(self.n, i, j)]
    }

    pub fn is_lambda(&self) -> bool {
        self.scalar.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.scalar.is_zero() && self.vecs.iter().all(|p| p.is_zero()) && self.brs.iter().all(|p| p.is_zero())
    }

    fn map(&self, f: impl Fn(&Poly) -> Poly) -> AElem {
        AElem {
            n: self.n,
            scalar: f(&self.scalar),
            vecs: self.vecs.iter().map(&f).collect(),
            brs: self.brs.iter().map(&f).collect(),
        }
    }

    fn zip(&self, other: &AElem, f: impl Fn(&Poly, &Poly) -> Poly) -> AElem {
        assert_eq!(self.n, other.n, "elements from different algebras");
        AElem {
            n: self.n,
            scalar: f(&self.scalar, &other.scalar),
            vecs: self.vecs.iter().zip(&other.vecs).map(|(a, b)| f(a, b)).collect(),
            brs: self.brs.iter().zip(&other.brs).map(|(a, b)| f(a, b)).collect(),
        }
    }

    pub fn add(&self, other: &AElem) -> AElem {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &AElem) -> AElem {
        self.zip(other, |a, b| a - b)
    }

    pub fn neg(&self) -> AElem {
        self.map(|a| -a)
    }

    /// Multiplication by an element of K[F_n] (without normal form).
    pub fn scale(&self, c: &Poly) -> AElem {
        self.map(|a| a * c)
    }

    /// Nonzero Λ coordinates as `(basis element, coefficient)`.
    fn lambda_terms(&self) -> Vec<(Basis, &Poly)> {
        let mut out = Vec::new();
        for (i, c) in self.vecs.iter().enumerate() {
            if !c.is_zero() {
                out.push((Basis::V(i + 1), c));
            }
        }
        for (p, (i, j)) in pairs(self.n).into_iter().enumerate() {
            if !self.brs[p].is_zero() {
                out.push((Basis::B(i, j), &self.brs[p]));
            }
        }
        out
    }
}

/// Coordinate-wise accumulators for building an [`AElem`].
struct AAcc {
    n: usize,
    scalar: Accumulator<Rational>,
    vecs: Vec<Accumulator<Rational>>,
    brs: Vec<Accumulator<Rational>>,
}

impl AAcc {
    fn new(n: usize) -> Self {
        AAcc {
            n,
            scalar: Accumulator::new(),
            vecs: (0..n).map(|_| Accumulator::new()).collect(),
            brs: (0..n * n.saturating_sub(1) / 2).map(|_| Accumulator::new()).collect(),
        }
    }

    /// `b_ij += ±cx·cy·k`, respecting `b_ji = −b_ij`.
    fn b(&mut self, i: usize, j: usize, cx: &Poly, cy: &Poly, k: &Poly, negate: bool) {
        if i < j {
            self.brs[pair_index(self.n, i, j)].add_product(cx, cy, k, negate);
        } else if j < i {
            self.brs[pair_index(self.n, j, i)].add_product(cx, cy, k, !negate);
        }
    }

    fn finish(self) -> AElem {
        AElem {
            n: self.n,
            scalar: self.scalar.finish(),
            vecs: self.vecs.into_iter().map(Accumulator::finish).collect(),
            brs: self.brs.into_iter().map(Accumulator::finish).collect(),
        }
    }
}

#[derive(Clone, Copy, Debug)]
enum Basis {
    V(usize),
    B(usize, usize),
}

impl fmt::Display for AElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if !self.scalar.is_zero() {
            parts.push(self.scalar.to_string());
        }
        for (b, c) in self.lambda_terms() {
            let name = match b {
                Basis::V(i) => format!("v{}", i),
                Basis::B(i, j) => format!("b{}{}", i, j),
            };
            parts.push(format!("({})*{}", c, name));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

impl fmt::Debug for AElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// The algebra A for the free group of rank `n`, with R_n for normal forms.
#[derive(Clone)]
pub struct GroupAlgebra {
    n: usize,
    ring: Arc<QuotientRing>,
    // `(w, d)` when the relations are the single rule `w^2 = d` with `d` free of `w`.
    square_rule: Option<(Var, Poly)>,
}

fn square_rule(ring: &QuotientRing) -> Option<(Var, Poly)> {
    let gens = ring.groebner_basis().generators();
    if gens.len() != 1 {
        return None;
    }
    let g = &gens[0];
    g.vars().into_iter().find_map(|w| {
        let cs = g.coefficients_in(w);
        let keys: Vec<u32> = cs.keys().copied().collect();
        (keys == [0, 2] && cs[&2].is_one()).then(|| (w, -cs[&0].clone()))
    })
}

fn m(i: usize, j: usize) -> Poly {
    canonical_m(i, j)
}

fn w(i: usize, j: usize, k: usize) -> Poly {
    w_poly(i, j, k)
}

impl GroupAlgebra {
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "at least one generator");
        let ring = kf_ring(n);
        let square_rule = square_rule(&ring);
        GroupAlgebra { n, ring, square_rule }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ring(&self) -> &QuotientRing {
        &self.ring
    }

    pub fn reduce(&self, p: &Poly) -> Poly {
        if self.n < 3 {
            return p.clone();
        }
        match &self.square_rule {
            Some((w, d)) => {
                let cs = p.coefficients_in(*w);
                if cs.keys().all(|&k| k < 2) {
                    return p.clone();
                }
                let wp = Poly::var(*w);
                let mut powers = vec![Poly::one()];
                let mut acc = Poly::zero();
                for (k, c) in cs {
                    let half = (k / 2) as usize;
                    while powers.len() <= half {
                        let next = powers.last().expect("nonempty") * d;
                        powers.push(next);
                    }
                    let t = c * &powers[half];
                    acc = acc + if k % 2 == 1 { t * &wp } else { t };
                }
                acc
            }
            None => self.ring.reduce(p),
        }
    }

    /// Normal form of every coefficient.
    pub fn normalize(&self, a: &AElem) -> AElem {
        if self.n < 3 {
            a.clone()
        } else {
            a.map(|p| self.reduce(p))
        }
    }

    fn check(&self, a: &AElem) -> Result<(), AlgebraError> {
        if a.n != self.n {
            Err(AlgebraError::MismatchedAmbient(self.n, a.n))
        } else {
            Ok(())
        }
    }

    fn check_index(&self, i: usize) -> Result<(), AlgebraError> {
        if i < 1 || i > self.n {
            Err(AlgebraError::IndexOutOfRange { index: i, n: self.n })
        } else {
            Ok(())
        }
    }

    pub fn one(&self) -> AElem {
        AElem::one(self.n)
    }

    pub fn v(&self, i: usize) -> AElem {
        AElem::v(self.n, i)
    }

    pub fn b(&self, i: usize, j: usize) -> AElem {
        AElem::b(self.n, i, j)
    }

    /// The spanning set of Λ: all `v_i`, then all `b_ij` with `i < j`.
    pub fn lambda_basis(&self) -> Vec<AElem> {
        let mut out: Vec<AElem> = (1..=self.n).map(|i| self.v(i)).collect();
        out.extend(pairs(self.n).into_iter().map(|(i, j)| self.b(i, j)));
        out
    }

    /// `{1}` followed by [`Self::lambda_basis`].
    pub fn module_basis(&self) -> Vec<AElem> {
        let mut out = vec![self.one()];
        out.extend(self.lambda_basis());
        out
    }

    /// `lambda_i ± v_i`, the image of `g_i^{±1}`.
    pub fn embed_generator(&self, i: usize, sign: i64) -> Result<AElem, AlgebraError> {
        self.check_index(i)?;
        let mut a = AElem::scalar(self.n, Poly::var(lambda(i)));
        let c = if sign < 0 { -Poly::one() } else { Poly::one() };
        a.add_v(i, &c);
        Ok(a)
    }

    pub fn embed_word(&self, word: &Word) -> Result<AElem, AlgebraError> {
        let mut acc = self.one();
        for &(i, e) in word.syllables() {
            let g = self.embed_generator(i, e.signum())?;
            for _ in 0..e.unsigned_abs() {
                acc = self.mul_unchecked(&acc, &g);
            }
        }
        Ok(acc)
    }

    pub fn bar_word(&self, word: &Word) -> Result<Poly, AlgebraError> {
        Ok(self.embed_word(word)?.scalar)
    }

    pub fn mul(&self, a: &AElem, b: &AElem) -> Result<AElem, AlgebraError> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.mul_unchecked(a, b))
    }

    fn mul_unchecked(&self, a: &AElem, b: &AElem) -> AElem {
        // ab = ā b̄ + ā b⃗ + b̄ a⃗ + a⃗ b⃗, with a⃗ b⃗ from the product table.
        let one = Poly::one();
        let mut out = AAcc::new(self.n);
        out.scalar.add_product(&a.scalar, &b.scalar, &one, false);
        for i in 0..self.n {
            out.vecs[i].add_product(&a.scalar, &b.vecs[i], &one, false);
            out.vecs[i].add_product(&b.scalar, &a.vecs[i], &one, false);
        }
        for p in 0..a.brs.len() {
            out.brs[p].add_product(&a.scalar, &b.brs[p], &one, false);
            out.brs[p].add_product(&b.scalar, &a.brs[p], &one, false);
        }
        for (x, cx) in a.lambda_terms() {
            for (y, cy) in b.lambda_terms() {
                Self::add_basis_product(&mut out, x, y, cx, cy);
            }
        }
        self.normalize(&out.finish())
    }

    /// `out += cx·cy · x·y` for spanning elements `x, y` of Λ.
    fn add_basis_product(out: &mut AAcc, x: Basis, y: Basis, cx: &Poly, cy: &Poly) {
        let one = Poly::one();
        match (x, y) {
            (Basis::V(i), Basis::V(j)) => {
                out.scalar.add_product(cx, cy, &m(i, j), true);
                out.b(i, j, cx, cy, &one, false);
            }
            (Basis::B(i, j), Basis::V(k)) => {
                out.scalar.add_product(cx, cy, &w(i, j, k), true);
                out.vecs[j - 1].add_product(cx, cy, &m(i, k), false);
                out.vecs[i - 1].add_product(cx, cy, &m(j, k), true);
            }
            (Basis::V(k), Basis::B(i, j)) => {
                out.scalar.add_product(cx, cy, &w(i, j, k), true);
                out.vecs[j - 1].add_product(cx, cy, &m(i, k), true);
                out.vecs[i - 1].add_product(cx, cy, &m(j, k), false);
            }
            (Basis::B(i, j), Basis::B(k, l)) => {
                out.scalar.add_product(cx, cy, &(m(i, l) * m(j, k)), false);
                out.scalar.add_product(cx, cy, &(m(i, k) * m(j, l)), true);
                out.vecs[l - 1].add_product(cx, cy, &w(i, j, k), true);
                out.vecs[k - 1].add_product(cx, cy, &w(i, j, l), false);
            }
        }
    }

    fn add_basis_dot(acc: &mut Accumulator<Rational>, x: Basis, y: Basis, cx: &Poly, cy: &Poly) {
        match (x, y) {
            (Basis::V(i), Basis::V(j)) => acc.add_product(cx, cy, &m(i, j), false),
            (Basis::V(i), Basis::B(j, k)) | (Basis::B(j, k), Basis::V(i)) => acc.add_product(cx, cy, &w(j, k, i), false),
            (Basis::B(i, j), Basis::B(k, l)) => {
                acc.add_product(cx, cy, &(m(i, k) * m(j, l)), false);
                acc.add_product(cx, cy, &(m(i, l) * m(j, k)), true);
            }
        }
    }

    fn add_basis_bracket(out: &mut AAcc, x: Basis, y: Basis, cx: &Poly, cy: &Poly) {
        match (x, y) {
            (Basis::V(i), Basis::V(j)) => out.b(i, j, cx, cy, &Poly::one(), false),
            (Basis::V(i), Basis::B(j, k)) => {
                out.vecs[j - 1].add_product(cx, cy, &m(i, k), false);
                out.vecs[k - 1].add_product(cx, cy, &m(i, j), true);
            }
            (Basis::B(j, k), Basis::V(i)) => {
                out.vecs[j - 1].add_product(cx, cy, &m(i, k), true);
                out.vecs[k - 1].add_product(cx, cy, &m(i, j), false);
            }
            (Basis::B(i, j), Basis::B(k, l)) => {
                out.b(j, l, cx, cy, &m(i, k), false);
                out.b(i, k, cx, cy, &m(j, l), false);
                out.b(j, k, cx, cy, &m(i, l), true);
                out.b(i, l, cx, cy, &m(j, k), true);
            }
        }
    }

    /// Symmetric bilinear form on Λ; scalar parts are ignored.
    pub fn dot(&self, a: &AElem, b: &AElem) -> Poly {
        let mut acc = Accumulator::new();
        for (x, cx) in a.lambda_terms() {
            for (y, cy) in b.lambda_terms() {
                Self::add_basis_dot(&mut acc, x, y, cx, cy);
            }
        }
        self.reduce(&acc.finish())
    }

    /// Antisymmetric bracket on Λ; scalar parts are ignored.
    pub fn bracket(&self, a: &AElem, b: &AElem) -> AElem {
        let mut out = AAcc::new(self.n);
        for (x, cx) in a.lambda_terms() {
            for (y, cy) in b.lambda_terms() {
                Self::add_basis_bracket(&mut out, x, y, cx, cy);
            }
        }
        self.normalize(&out.finish())
    }

    /// `[a, b]·c`.
    pub fn triple(&self, a: &AElem, b: &AElem, c: &AElem) -> Poly {
        self.dot(&self.bracket(a, b), c)
    }

    /// `bar(g h^n k)` via `bar(ghk) P_n(bar h) − bar(gk) P_{n−1}(bar h)`.
    pub fn power_bar(&self, g: &Word, h: &Word, k: &Word, n: i64) -> Result<Poly, AlgebraError> {
        let ghk = self.bar_word(&g.multiply(h).multiply(k))?;
        let gk = self.bar_word(&g.multiply(k))?;
        let hb = self.bar_word(h)?;
        let (pm1, pn) = chebyshev_pair_at(n, &hb);
        Ok(self.reduce(&(ghk * pn - gk * pm1)))
    }

    /// Equality in A: equal scalar parts and equal dot products of the Λ parts
    /// with every spanning element.
    pub fn equivalent(&self, a: &AElem, b: &AElem) -> bool {
        let d = a.sub(b);
        if !self.reduce(&d.scalar).is_zero() {
            return false;
        }
        self.lambda_basis().iter().all(|e| self.dot(&d, e).is_zero())
    }

    /// True when the element is zero in A.
    pub fn is_zero(&self, a: &AElem) -> bool {
        self.equivalent(a, &AElem::zero(self.n))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse_poly;

    fn p(s: &str) -> Poly {
        parse_poly(s).unwrap()
    }

    fn word(l: &[i64]) -> Word {
        Word::from_letters(l)
    }

    #[test]
    fn generator_embedding() {
        let a = GroupAlgebra::new(2);
        let g = a.embed_generator(1, 1).unwrap();
        let gi = a.embed_generator(1, -1).unwrap();
        assert_eq!(g.to_string(), "lambda1 + (1)*v1");
        assert_eq!(gi.bar(), &p("lambda1"));
        assert!(a.mul(&g, &gi).unwrap() == a.one());
        assert!(a.embed_generator(3, 1).is_err());
    }

    #[test]
    fn product_examples() {
        let a = GroupAlgebra::new(2);
        assert_eq!(a.bar_word(&word(&[1, 2])).unwrap(), p("lambda1*lambda2 - m12"));
        assert_eq!(a.bar_word(&word(&[1, 1])).unwrap(), p("2*lambda1^2 - 1"));
        let sq = a.embed_word(&word(&[1, 1])).unwrap();
        assert_eq!(sq.vec_coeff(1), &p("2*lambda1"));
        assert!(a.embed_word(&Word::identity()).unwrap() == a.one());
    }

    #[test]
    fn commutator_bar() {
        let a = GroupAlgebra::new(2);
        let c = a.bar_word(&word(&[1, 2, -1, -2])).unwrap();
        let ab = p("lambda1*lambda2 - m12");
        let expect = p("2").clone() * ab.pow(2) - p("4*lambda1*lambda2") * ab + p("2*lambda1^2 + 2*lambda2^2 - 1");
        assert_eq!(c, expect);
    }

    #[test]
    fn dot_examples() {
        let a = GroupAlgebra::new(2);
        assert_eq!(a.dot(&a.v(1), &a.v(1)), p("1 - lambda1^2"));
        assert!(a.dot(&a.v(1), &a.b(1, 2)).is_zero());
        assert_eq!(a.dot(&a.b(1, 2), &a.b(1, 2)), p("(1-lambda1^2)*(1-lambda2^2) - m12^2"));
    }

    #[test]
    fn bracket_and_triple_examples() {
        let a = GroupAlgebra::new(3);
        assert!(a.bracket(&a.v(1), &a.v(2)) == a.b(1, 2));
        let e = a.bracket(&a.b(1, 2), &a.v(3));
        let expect = a.v(2).scale(&p("m13")).sub(&a.v(1).scale(&p("m23")));
        assert!(e == expect);
        assert_eq!(a.triple(&a.v(1), &a.v(2), &a.v(3)), p("w123"));
        assert!(a.triple(&a.v(1), &a.v(2), &a.v(1)).is_zero());
        assert_eq!(a.triple(&a.v(2), &a.v(1), &a.v(3)), p("-w123"));
        let x = a.embed_word(&word(&[1, 3, -2])).unwrap().vec();
        assert!(a.bracket(&x, &x).is_zero());
    }

    #[test]
    fn power_bar_examples() {
        let a = GroupAlgebra::new(2);
        let e = Word::identity();
        let g1 = Word::generator(1);
        assert_eq!(a.power_bar(&e, &g1, &e, 0).unwrap(), Poly::one());
        assert_eq!(a.power_bar(&e, &g1, &e, 2).unwrap(), p("2*lambda1^2 - 1"));
        let g2 = Word::generator(2);
        let expect = a.bar_word(&word(&[2, 1])).unwrap() * p("4*lambda1^2 - 1") - p("lambda2") * p("2*lambda1");
        assert_eq!(a.power_bar(&g2, &g1, &e, 3).unwrap(), expect);
    }

    #[test]
    fn the_spanning_set_is_not_free_for_three_generators() {
        // w123·v_l equals m1l·b23 − m2l·b13 + m3l·b12 although the coefficient
        // vectors differ.
        let a = GroupAlgebra::new(3);
        for l in 1..=3 {
            let lhs = a.v(l).scale(&p("w123"));
            let rhs = a
                .b(2, 3)
                .scale(&canonical_m(1, l))
                .sub(&a.b(1, 3).scale(&canonical_m(2, l)))
                .add(&a.b(1, 2).scale(&canonical_m(3, l)));
            assert!(lhs != rhs);
            assert!(a.equivalent(&lhs, &rhs));
        }
    }
}
