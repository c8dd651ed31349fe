//! Randomized check of the algebraic identities satisfied by A, K[F_n] and Λ.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::{AElem, GroupAlgebra};
use crate::poly::chebyshev_pair_at;
use crate::words::Word;
use crate::{rat, Poly};

/// Outcome of one identity over all trials.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: String,
    pub trials: usize,
    pub failures: usize,
    /// The words of the first failing trial, if any.
    pub first_failure: Option<String>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct IdentityReport {
    pub seed: u64,
    pub trials: usize,
    pub generators: usize,
    pub max_word_length: usize,
    pub max_power: i64,
    pub checks: Vec<IdentityCheck>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.failures == 0)
    }
}

/// Names of the identities, in report order.
pub const IDENTITY_NAMES: &[&str] = &[
    "mul_associative",
    "mul_unit",
    "bar_commutes",
    "bar_star",
    "bar_middle_inverse",
    "dot_via_bar",
    "bracket_via_commutator",
    "triple_via_bar",
    "dot_symmetric",
    "bracket_skew",
    "jacobi",
    "triple_alternating",
    "double_bracket",
    "product_decomposition",
    "vector_product",
    "bracket_vector_product",
    "bracket_bracket_product",
    "triple_cyclic",
    "bracket_dot_bracket",
    "bracket_of_brackets",
    "triple_times_vector",
    "bracket_of_brackets_expanded",
    "symmetrized_triple_bar",
    "four_term_vanishing",
    "triple_product_gram",
    "gram_4x4_vanishes",
    "power_bar",
    "power_difference",
];

struct Trial<'a> {
    alg: &'a GroupAlgebra,
    words: Vec<Word>,
    // Images of `words`, and integer combinations of two of them.
    g: Vec<AElem>,
    e: Vec<AElem>,
    // Λ parts of images of shorter words, for identities in five or more vectors.
    short: Vec<AElem>,
    short_words: Vec<Word>,
    power: i64,
}

impl<'a> Trial<'a> {
    fn new(alg: &'a GroupAlgebra, rng: &mut ChaCha8Rng, max_len: usize, max_power: i64) -> Self {
        let n = alg.n();
        let mut words = Vec::new();
        let mut g = Vec::new();
        for _ in 0..8 {
            let len = rng.gen_range(0..=max_len);
            let w = Word::random(rng, n, len);
            g.push(alg.embed_word(&w).expect("in range"));
            words.push(w);
        }
        let mut e = Vec::new();
        for i in 0..3 {
            let a = Poly::from_i64(rng.gen_range(1..=3));
            let b = Poly::from_i64(rng.gen_range(-2..=2));
            e.push(alg.normalize(&g[i].scale(&a).add(&g[i + 3].scale(&b))));
        }
        let short_len = max_len.div_ceil(2);
        let short_words: Vec<Word> = (0..8)
            .map(|_| {
                let len = rng.gen_range(0..=short_len);
                Word::random(rng, n, len)
            })
            .collect();
        let short = short_words
            .iter()
            .map(|w| alg.embed_word(w).expect("in range").vec())
            .collect();
        let power = rng.gen_range(-max_power..=max_power);
        Trial {
            alg,
            words,
            g,
            e,
            short,
            short_words,
            power,
        }
    }

    fn describe(&self) -> String {
        let ws: Vec<String> = self.words.iter().map(|w| w.to_string()).collect();
        let ss: Vec<String> = self.short_words.iter().map(|w| w.to_string()).collect();
        format!("words [{}], short words [{}], n = {}", ws.join(", "), ss.join(", "), self.power)
    }

    fn zero(&self, p: &Poly) -> bool {
        self.alg.reduce(p).is_zero()
    }

    fn same(&self, a: &AElem, b: &AElem) -> bool {
        self.alg.equivalent(a, b)
    }

    fn mul(&self, a: &AElem, b: &AElem) -> AElem {
        self.alg.mul(a, b).expect("same algebra")
    }

    fn dot(&self, a: &AElem, b: &AElem) -> Poly {
        self.alg.dot(a, b)
    }

    fn br(&self, a: &AElem, b: &AElem) -> AElem {
        self.alg.bracket(a, b)
    }

    fn triple(&self, a: &AElem, b: &AElem, c: &AElem) -> Poly {
        self.alg.triple(a, b, c)
    }

    /// Λ parts: the three general elements, then images of words 4..8.
    fn vecs(&self) -> Vec<AElem> {
        let mut v: Vec<AElem> = self.e.iter().map(|a| a.vec()).collect();
        v.extend(self.g[3..].iter().map(|a| a.vec()));
        v
    }

    fn scal(&self, p: Poly) -> AElem {
        AElem::scalar(self.alg.n(), p)
    }

    fn star(a: &AElem) -> AElem {
        AElem::scalar(a.generators(), a.bar().clone()).sub(&a.vec())
    }

    fn check(&self, name: &str) -> bool {
        let half = Poly::constant(rat(1, 2));
        let (x, y, z) = (&self.e[0], &self.e[1], &self.e[2]);
        // Cost grows quickly with arity: general elements for up to three
        // vectors, single words for four, shorter words beyond that.
        let v: Vec<AElem> = match name {
            "bracket_bracket_product" | "bracket_dot_bracket" | "bracket_of_brackets" | "triple_times_vector"
            | "bracket_of_brackets_expanded" => self.g.iter().map(|a| a.vec()).collect(),
            "four_term_vanishing" | "triple_product_gram" | "gram_4x4_vanishes" => self.short.clone(),
            _ => self.vecs(),
        };
        let (vx, vy, vz, vw, vu, vv) = (&v[0], &v[1], &v[2], &v[3], &v[4], &v[5]);
        match name {
            "mul_associative" => self.same(&self.mul(&self.mul(x, y), z), &self.mul(x, &self.mul(y, z))),
            "mul_unit" => {
                let one = self.alg.one();
                self.same(&self.mul(&one, x), x) && self.same(&self.mul(x, &one), x)
            }
            "bar_commutes" => self.zero(&(self.mul(x, y).bar() - self.mul(y, x).bar())),
            "bar_star" => {
                let w = &self.words[0];
                self.zero(&(self.alg.bar_word(&w.inverse()).unwrap() - self.g[0].bar()))
            }
            "bar_middle_inverse" => {
                let (gx, gy, gz) = (&self.words[0], &self.words[1], &self.words[2]);
                let b = |w: &Word| self.alg.bar_word(w).unwrap();
                let lhs = Poly::from_i64(2) * b(gy) * b(&gx.multiply(gz));
                let rhs = b(&gx.multiply(gy).multiply(gz)) + b(&gx.multiply(&gy.inverse()).multiply(gz));
                self.zero(&(lhs - rhs))
            }
            "dot_via_bar" => {
                let d = self.dot(&x.vec(), &y.vec());
                let a = x.bar() * y.bar() - self.mul(x, y).bar();
                let b = -(self.mul(x, y).bar() - self.mul(x, &Self::star(y)).bar()) * &half;
                self.zero(&(&d - a)) && self.zero(&(d - b))
            }
            "bracket_via_commutator" => {
                let c = self.mul(x, y).sub(&self.mul(y, x)).scale(&half);
                self.same(&self.br(&x.vec(), &y.vec()), &c)
            }
            "triple_via_bar" => {
                let t = self.triple(&x.vec(), &y.vec(), &z.vec());
                let xyz = self.mul(&self.mul(x, y), z);
                let zyx = self.mul(&self.mul(z, y), x);
                self.zero(&(t + (xyz.bar() - zyx.bar()) * &half))
            }
            "dot_symmetric" => self.zero(&(self.dot(vx, vy) - self.dot(vy, vx))),
            "bracket_skew" => {
                self.same(&self.br(vx, vy), &self.br(vy, vx).neg()) && self.alg.is_zero(&self.br(vx, vx))
            }
            "jacobi" => {
                let s = self
                    .br(&self.br(vx, vy), vz)
                    .add(&self.br(&self.br(vy, vz), vx))
                    .add(&self.br(&self.br(vz, vx), vy));
                self.alg.is_zero(&s)
            }
            "triple_alternating" => {
                let t = self.triple(vx, vy, vz);
                self.zero(&(&t + self.triple(vy, vx, vz)))
                    && self.zero(&(&t + self.triple(vx, vz, vy)))
                    && self.zero(&self.triple(vx, vy, vx))
            }
            "double_bracket" => {
                let lhs = self.br(&self.br(vx, vy), vz);
                let rhs = vy.scale(&self.dot(vx, vz)).sub(&vx.scale(&self.dot(vy, vz)));
                self.same(&lhs, &rhs)
            }
            "product_decomposition" => {
                let (xv, yv) = (x.vec(), y.vec());
                let rhs = self
                    .scal(x.bar() * y.bar() - self.dot(&xv, &yv))
                    .add(&yv.scale(x.bar()))
                    .add(&xv.scale(y.bar()))
                    .add(&self.br(&xv, &yv));
                self.same(&self.mul(x, y), &rhs)
            }
            "vector_product" => {
                let rhs = self.scal(-self.dot(vx, vy)).add(&self.br(vx, vy));
                self.same(&self.mul(vx, vy), &rhs)
            }
            "bracket_vector_product" => {
                let b = self.br(vx, vy);
                let t = self.triple(vx, vy, vz);
                let l = self
                    .scal(-&t)
                    .add(&vy.scale(&self.dot(vx, vz)))
                    .sub(&vx.scale(&self.dot(vy, vz)));
                let r = self
                    .scal(-&t)
                    .sub(&vy.scale(&self.dot(vx, vz)))
                    .add(&vx.scale(&self.dot(vy, vz)));
                self.same(&self.mul(&b, vz), &l) && self.same(&self.mul(vz, &b), &r)
            }
            "bracket_bracket_product" => {
                let lhs = self.mul(&self.br(vx, vy), &self.br(vz, vw));
                let s = -(self.dot(vx, vz) * self.dot(vy, vw)) + self.dot(vx, vw) * self.dot(vy, vz);
                let r1 = self
                    .scal(s.clone())
                    .add(&vy.scale(&self.triple(vx, vz, vw)))
                    .sub(&vx.scale(&self.triple(vy, vz, vw)));
                let r2 = self
                    .scal(s)
                    .sub(&vw.scale(&self.triple(vx, vy, vz)))
                    .add(&vz.scale(&self.triple(vx, vy, vw)));
                self.same(&lhs, &r1) && self.same(&lhs, &r2)
            }
            "triple_cyclic" => {
                let t = self.triple(vx, vy, vz);
                self.zero(&(&t - self.triple(vy, vz, vx))) && self.zero(&(t - self.triple(vz, vx, vy)))
            }
            "bracket_dot_bracket" => {
                let lhs = self.dot(&self.br(vx, vy), &self.br(vz, vw));
                let rhs = self.dot(vx, vz) * self.dot(vy, vw) - self.dot(vx, vw) * self.dot(vy, vz);
                self.zero(&(lhs - rhs))
            }
            "bracket_of_brackets" => {
                let lhs = self.br(&self.br(vx, vy), &self.br(vz, vw));
                let r1 = vy.scale(&self.triple(vx, vz, vw)).sub(&vx.scale(&self.triple(vy, vz, vw)));
                let r2 = vz.scale(&self.triple(vx, vy, vw)).sub(&vw.scale(&self.triple(vx, vy, vz)));
                self.same(&lhs, &r1) && self.same(&lhs, &r2)
            }
            "triple_times_vector" => {
                let lhs = vw.scale(&self.triple(vx, vy, vz));
                let rhs = self
                    .br(vy, vz)
                    .scale(&self.dot(vx, vw))
                    .sub(&self.br(vx, vz).scale(&self.dot(vy, vw)))
                    .add(&self.br(vx, vy).scale(&self.dot(vz, vw)));
                self.same(&lhs, &rhs)
            }
            "bracket_of_brackets_expanded" => {
                let lhs = self.br(&self.br(vx, vy), &self.br(vz, vw));
                let rhs = self
                    .br(vy, vw)
                    .scale(&self.dot(vx, vz))
                    .add(&self.br(vx, vz).scale(&self.dot(vy, vw)))
                    .sub(&self.br(vy, vz).scale(&self.dot(vx, vw)))
                    .sub(&self.br(vx, vw).scale(&self.dot(vy, vz)));
                self.same(&lhs, &rhs)
            }
            "symmetrized_triple_bar" => {
                let xyz = self.mul(&self.mul(x, y), z);
                let zyx = self.mul(&self.mul(z, y), x);
                let lhs = (xyz.bar() + zyx.bar()) * &half;
                let rhs = self.mul(x, y).bar() * z.bar() + self.mul(x, z).bar() * y.bar() + self.mul(y, z).bar() * x.bar()
                    - Poly::from_i64(2) * x.bar() * y.bar() * z.bar();
                self.zero(&(lhs - rhs))
            }
            "four_term_vanishing" => {
                let s = self.triple(vy, vz, vw) * self.dot(vx, vu) - self.triple(vx, vz, vw) * self.dot(vy, vu)
                    + self.triple(vx, vy, vw) * self.dot(vz, vu)
                    - self.triple(vx, vy, vz) * self.dot(vw, vu);
                self.zero(&s)
            }
            "triple_product_gram" => {
                let lhs = self.triple(vx, vy, vz) * self.triple(vu, vv, vw);
                let rows = [vx, vy, vz];
                let cols = [vu, vv, vw];
                let m: Vec<Vec<Poly>> = rows
                    .iter()
                    .map(|r| cols.iter().map(|c| self.dot(r, c)).collect())
                    .collect();
                self.zero(&(lhs - det(&m)))
            }
            "gram_4x4_vanishes" => {
                let rows = &v[0..4];
                let cols = &v[4..8];
                let m: Vec<Vec<Poly>> = rows
                    .iter()
                    .map(|r| cols.iter().map(|c| self.dot(r, c)).collect())
                    .collect();
                self.zero(&det(&m))
            }
            "power_bar" => {
                let (gw, hw, kw) = (&self.words[0], &self.words[1], &self.words[2]);
                let direct = self.alg.bar_word(&gw.multiply(&hw.pow(self.power)).multiply(kw)).unwrap();
                let via = self.alg.power_bar(gw, hw, kw, self.power).unwrap();
                self.zero(&(direct - via))
            }
            "power_difference" => {
                let (gw, hw) = (&self.words[0], &self.words[1]);
                let b = |w: &Word| self.alg.bar_word(w).unwrap();
                let n = self.power;
                let lhs = b(&gw.multiply(&hw.pow(n))) - b(&gw.multiply(&hw.pow(-n)));
                let (_, pn) = chebyshev_pair_at(n, &b(hw));
                let rhs = (b(&gw.multiply(hw)) - b(&gw.multiply(&hw.inverse()))) * pn;
                self.zero(&(lhs - rhs))
            }
            other => panic!("unknown identity {}", other),
        }
    }
}

/// Determinant by cofactor expansion along the first row.
fn det(m: &[Vec<Poly>]) -> Poly {
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = Poly::zero();
    for j in 0..n {
        let minor: Vec<Vec<Poly>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, p)| p.clone()).collect())
            .collect();
        let term = &m[0][j] * &det(&minor);
        acc = if j % 2 == 0 { acc + term } else { acc - term };
    }
    acc
}

/// Runs every identity on `trials` seeded random inputs. Words have length
/// at most `max_len`; the word raised to a power in the power identities is
/// shortened to at most two letters and the exponent ranges over
/// `-max_power..=max_power`.
pub fn identity_selftest(n: usize, trials: usize, max_len: usize, max_power: i64, seed: u64) -> IdentityReport {
    let alg = GroupAlgebra::new(n);
    let per_trial: Vec<(Vec<bool>, String)> = (0..trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (t as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15));
            let mut trial = Trial::new(&alg, &mut rng, max_len, max_power);
            let h_len = rng.gen_range(1..=max_len.clamp(1, 2));
            trial.words[1] = Word::random(&mut rng, n, h_len);
            trial.g[1] = alg.embed_word(&trial.words[1]).expect("in range");
            (IDENTITY_NAMES.iter().map(|name| trial.check(name)).collect(), trial.describe())
        })
        .collect();
    let checks = IDENTITY_NAMES
        .iter()
        .enumerate()
        .map(|(k, name)| {
            let failing: Vec<usize> = (0..trials).filter(|&t| !per_trial[t].0[k]).collect();
            IdentityCheck {
                name: name.to_string(),
                trials,
                failures: failing.len(),
                first_failure: failing.first().map(|&t| format!("trial {}: {}", t, per_trial[t].1)),
            }
        })
        .collect();
    IdentityReport {
        seed,
        trials,
        generators: n,
        max_word_length: max_len,
        max_power,
        checks,
    }
}
