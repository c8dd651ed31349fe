//! Evaluation of words and ring elements at rational points of a product of
//! unit 3-spheres, via quaternions.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::agmod::GroupAlgebra;
use crate::poly::Var;
use crate::ring::{lambda, m_var, w_var};
use crate::scalar::{Field, Scalar};
use crate::words::Word;
use crate::{Poly, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("no point assigned to generator {0}")]
    MissingGenerator(usize),
    #[error("variable {0} is not a ring symbol")]
    ForeignVariable(String),
}

/// `mu + a·e1 + b·e2 + c·e3` with `e1² = e2² = e3² = e1e2e3 = −1`.
#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct Quaternion<T> {
    pub mu: T,
    pub a: T,
    pub b: T,
    pub c: T,
}

impl<T: Scalar> Quaternion<T> {
    pub fn new(mu: T, a: T, b: T, c: T) -> Self {
        Quaternion { mu, a, b, c }
    }

    pub fn one() -> Self {
        Self::new(T::one(), T::zero(), T::zero(), T::zero())
    }

    pub fn conj(&self) -> Self {
        Self::new(self.mu.clone(), -self.a.clone(), -self.b.clone(), -self.c.clone())
    }

    /// `mu² + a² + b² + c²`.
    pub fn norm(&self) -> T {
        self.mu.mul_ref(&self.mu) + self.a.mul_ref(&self.a) + self.b.mul_ref(&self.b) + self.c.mul_ref(&self.c)
    }

    pub fn vector(&self) -> [T; 3] {
        [self.a.clone(), self.b.clone(), self.c.clone()]
    }
}

impl<T: Field> Quaternion<T> {
    /// The Cayley transform of the pure quaternion `(x, y, z)`, a point of norm 1.
    pub fn cayley(x: T, y: T, z: T) -> Self {
        let n = x.mul_ref(&x) + y.mul_ref(&y) + z.mul_ref(&z);
        let d = (T::one() + n.clone()).inv();
        let m2 = T::from_i64(-2);
        Self::new(
            (T::one() - n).mul_ref(&d),
            m2.mul_ref(&x).mul_ref(&d),
            m2.mul_ref(&y).mul_ref(&d),
            m2.mul_ref(&z).mul_ref(&d),
        )
    }
}

impl<T: Scalar> Mul for &Quaternion<T> {
    type Output = Quaternion<T>;
    fn mul(self, q: &Quaternion<T>) -> Quaternion<T> {
        let p = self;
        Quaternion::new(
            p.mu.mul_ref(&q.mu) - p.a.mul_ref(&q.a) - p.b.mul_ref(&q.b) - p.c.mul_ref(&q.c),
            p.mu.mul_ref(&q.a) + p.a.mul_ref(&q.mu) + p.b.mul_ref(&q.c) - p.c.mul_ref(&q.b),
            p.mu.mul_ref(&q.b) - p.a.mul_ref(&q.c) + p.b.mul_ref(&q.mu) + p.c.mul_ref(&q.a),
            p.mu.mul_ref(&q.c) + p.a.mul_ref(&q.b) - p.b.mul_ref(&q.a) + p.c.mul_ref(&q.mu),
        )
    }
}

impl<T: Scalar> Add for &Quaternion<T> {
    type Output = Quaternion<T>;
    fn add(self, q: &Quaternion<T>) -> Quaternion<T> {
        Quaternion::new(self.mu.add_ref(&q.mu), self.a.add_ref(&q.a), self.b.add_ref(&q.b), self.c.add_ref(&q.c))
    }
}

impl<T: Scalar> Sub for &Quaternion<T> {
    type Output = Quaternion<T>;
    fn sub(self, q: &Quaternion<T>) -> Quaternion<T> {
        Quaternion::new(self.mu.sub_ref(&q.mu), self.a.sub_ref(&q.a), self.b.sub_ref(&q.b), self.c.sub_ref(&q.c))
    }
}

impl<T: Scalar> Neg for &Quaternion<T> {
    type Output = Quaternion<T>;
    fn neg(self) -> Quaternion<T> {
        Quaternion::new(-self.mu.clone(), -self.a.clone(), -self.b.clone(), -self.c.clone())
    }
}

impl<T: Scalar> fmt::Display for Quaternion<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {}, {}, {})",
            self.mu.render(),
            self.a.render(),
            self.b.render(),
            self.c.render()
        )
    }
}

pub fn quat_mul<T: Scalar>(p: &Quaternion<T>, q: &Quaternion<T>) -> Quaternion<T> {
    p * q
}

pub fn quat_conj<T: Scalar>(p: &Quaternion<T>) -> Quaternion<T> {
    p.conj()
}

pub fn cayley_point(x: Rational, y: Rational, z: Rational) -> Quaternion<Rational> {
    Quaternion::cayley(x, y, z)
}

fn dot3<T: Scalar>(u: &[T; 3], v: &[T; 3]) -> T {
    u[0].mul_ref(&v[0]) + u[1].mul_ref(&v[1]) + u[2].mul_ref(&v[2])
}

fn det3<T: Scalar>(u: &[T; 3], v: &[T; 3], w: &[T; 3]) -> T {
    u[0].mul_ref(&v[1].mul_ref(&w[2]).sub_ref(&v[2].mul_ref(&w[1])))
        - u[1].mul_ref(&v[0].mul_ref(&w[2]).sub_ref(&v[2].mul_ref(&w[0])))
        + u[2].mul_ref(&v[0].mul_ref(&w[1]).sub_ref(&v[1].mul_ref(&w[0])))
}

/// One unit quaternion per generator (index 1 first).
#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct EvalPoint<T> {
    pub points: Vec<Quaternion<T>>,
}

impl<T: Scalar> EvalPoint<T> {
    pub fn new(points: Vec<Quaternion<T>>) -> Self {
        EvalPoint { points }
    }

    pub fn generator(&self, i: usize) -> Result<&Quaternion<T>, OracleError> {
        self.points.get(i.wrapping_sub(1)).ok_or(OracleError::MissingGenerator(i))
    }

    /// Values of all ring symbols `lambda_i`, `m_ij`, `w_ijk` at this point.
    pub fn symbol_values(&self) -> HashMap<Var, T> {
        let n = self.points.len();
        let vecs: Vec<[T; 3]> = self.points.iter().map(|q| q.vector()).collect();
        let mut vals = HashMap::new();
        for i in 1..=n {
            vals.insert(lambda(i), self.points[i - 1].mu.clone());
            for j in i + 1..=n {
                vals.insert(m_var(i, j), dot3(&vecs[i - 1], &vecs[j - 1]));
                for k in j + 1..=n {
                    vals.insert(w_var(i, j, k), det3(&vecs[i - 1], &vecs[j - 1], &vecs[k - 1]));
                }
            }
        }
        vals
    }
}

impl EvalPoint<Rational> {
    /// Cayley points from random rationals with numerators and denominators
    /// bounded by `height`.
    pub fn random<R: Rng + ?Sized>(rng: &mut R, n: usize, height: i64) -> Self {
        let h = height.max(1);
        let mut r = || crate::rat(rng.gen_range(-h..=h), rng.gen_range(1..=h));
        EvalPoint::new((0..n).map(|_| Quaternion::cayley(r(), r(), r())).collect())
    }
}

pub fn eval_word<T: Scalar>(w: &Word, pt: &EvalPoint<T>) -> Result<Quaternion<T>, OracleError> {
    let mut acc = Quaternion::one();
    for &(i, e) in w.syllables() {
        let g = pt.generator(i)?;
        let g = if e < 0 { g.conj() } else { g.clone() };
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &g;
        }
    }
    Ok(acc)
}

pub fn eval_ring_elem(p: &Poly, pt: &EvalPoint<Rational>) -> Result<Rational, OracleError> {
    let vals = pt.symbol_values();
    if let Some(v) = p.vars().into_iter().find(|v| !vals.contains_key(v)) {
        return Err(OracleError::ForeignVariable(v.name()));
    }
    Ok(p.evaluate(|v| vals.get(&v).cloned()).expect("all variables assigned"))
}

/// A disagreement between the two sides of the oracle check.
#[derive(Clone, Debug, Serialize)]
pub struct Mismatch {
    pub trial: usize,
    pub word: String,
    pub point: Vec<String>,
    pub quaternion_mu: String,
    pub symbolic_bar: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct FuzzReport {
    pub seed: u64,
    pub trials: usize,
    pub max_word_length: usize,
    pub generators: usize,
    pub height: i64,
    pub mismatches: Vec<Mismatch>,
}

impl FuzzReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Compares `mu(ψ(w))` with `bar(w)` evaluated at the same random point.
pub fn fuzz_bar(trials: usize, max_len: usize, n: usize, seed: u64, height: i64) -> FuzzReport {
    let alg = GroupAlgebra::new(n);
    let mut mismatches: Vec<Mismatch> = (0..trials)
        .into_par_iter()
        .filter_map(|t| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (t as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15));
            let len = rng.gen_range(0..=max_len);
            let w = Word::random(&mut rng, n, len);
            let pt = EvalPoint::random(&mut rng, n, height);
            let q = eval_word(&w, &pt).expect("point covers all generators");
            let bar = alg.bar_word(&w).expect("indices in range");
            let s = eval_ring_elem(&bar, &pt).expect("ring symbols only");
            (q.mu != s).then(|| Mismatch {
                trial: t,
                word: w.to_string(),
                point: pt.points.iter().map(|q| q.to_string()).collect(),
                quaternion_mu: q.mu.render(),
                symbolic_bar: s.render(),
            })
        })
        .collect();
    mismatches.sort_by_key(|m| m.trial);
    FuzzReport {
        seed,
        trials,
        max_word_length: max_len,
        generators: n,
        height,
        mismatches,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;
    use num_traits::{One, Zero};

    fn q(mu: i64, a: i64, b: i64, c: i64) -> Quaternion<Rational> {
        Quaternion::new(rat(mu, 1), rat(a, 1), rat(b, 1), rat(c, 1))
    }

    #[test]
    fn cayley_examples() {
        let z = Rational::zero;
        assert_eq!(cayley_point(z(), z(), z()), q(1, 0, 0, 0));
        assert_eq!(cayley_point(Rational::one(), z(), z()), q(0, -1, 0, 0));
        let p = cayley_point(rat(2, 3), rat(-1, 5), rat(7, 2));
        assert!(p.norm().is_one());
    }

    #[test]
    fn hamilton_relations() {
        let (e1, e2, e3) = (q(0, 1, 0, 0), q(0, 0, 1, 0), q(0, 0, 0, 1));
        assert_eq!(&e1 * &e2, e3);
        assert_eq!(&e2 * &e1, -&e3);
        assert_eq!(&(&e1 * &e2) * &e3, q(-1, 0, 0, 0));
        let p = q(1, 2, -3, 4);
        assert_eq!(&p * &p.conj(), q(30, 0, 0, 0));
        assert_eq!(p.conj().conj(), p);
        let r = q(0, 5, 1, -2);
        assert_eq!((&p * &r).conj(), &r.conj() * &p.conj());
    }

    #[test]
    fn word_evaluation() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let pt = EvalPoint::random(&mut rng, 2, 5);
        assert_eq!(eval_word(&Word::identity(), &pt).unwrap(), Quaternion::one());
        assert_eq!(eval_word(&Word::from_letters(&[1, -1]), &pt).unwrap(), Quaternion::one());
        let w = Word::from_letters(&[1, 2, 2, -1]);
        assert_eq!(eval_word(&w.inverse(), &pt).unwrap(), eval_word(&w, &pt).unwrap().conj());
        assert!(matches!(eval_word(&Word::generator(3), &pt), Err(OracleError::MissingGenerator(3))));
    }

    #[test]
    fn ring_symbols_at_points() {
        let z = Rational::zero;
        let pt = EvalPoint::new(vec![
            cayley_point(z(), z(), z()),
            cayley_point(Rational::one(), z(), z()),
            cayley_point(z(), Rational::one(), z()),
        ]);
        assert!(eval_ring_elem(&Poly::var(lambda(1)), &pt).unwrap().is_one());
        assert!(eval_ring_elem(&Poly::var(m_var(2, 3)), &pt).unwrap().is_zero());
        let p2 = EvalPoint::new(vec![q(0, 1, 0, 0), q(0, 0, 1, 0), q(0, 0, 0, 1)]);
        assert!(eval_ring_elem(&Poly::var(w_var(1, 2, 3)), &p2).unwrap().is_one());
        assert!(eval_ring_elem(&crate::parse_poly("foreign_sym").unwrap(), &pt).is_err());
    }

    #[test]
    fn bar_of_product_matches() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let pt = EvalPoint::random(&mut rng, 2, 4);
        let w = Word::from_letters(&[1, 2]);
        let mu = eval_word(&w, &pt).unwrap().mu;
        let bar = GroupAlgebra::new(2).bar_word(&w).unwrap();
        assert_eq!(eval_ring_elem(&bar, &pt).unwrap(), mu);
    }

    #[test]
    fn small_fuzz_run() {
        let r = fuzz_bar(40, 8, 3, 1, 4);
        assert!(r.passed(), "{:?}", r.mismatches);
    }

    #[test]
    fn floats_are_supported() {
        let p: Quaternion<f64> = Quaternion::cayley(0.5, -1.0, 2.0);
        assert!((p.norm() - 1.0).abs() < 1e-12);
    }
}
