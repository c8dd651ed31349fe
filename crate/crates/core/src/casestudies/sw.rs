//! Single-element normal generation of `C_r * C_s * C_t`.
//!
//! K[F_3] maps to A = E'[x, y, u, v] / ((1-x^2)(1-y^2) - u^2 - v^2), where E'
//! adjoins roots `mu_i` of `P_r, P_s, P_t` and `s_i` with `s_i^2 + mu_i^2 = 1`.
//! A word `w` gives five elements of A; if they generate a proper ideal then
//! `w` does not normally generate the group.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};
use std::time::{Duration, Instant};

use once_cell::sync::Lazy;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::boyer::{base_field, mu, sv};
use super::{check_orders, normalize_word, CaseError, InstanceDescriptor};
use crate::agmod::{kf_ring, GroupAlgebra};
use crate::poly::Var;
use crate::ring::{lambda, m_var, w_var, MonomialOrder, QuotientRing, RingError};
use crate::words::Word;
use crate::{Poly, Rational};

fn xv() -> Poly {
    Poly::var(Var::named("x"))
}
fn yv() -> Poly {
    Poly::var(Var::named("y"))
}
fn uv() -> Poly {
    Poly::var(Var::named("u"))
}
fn vv() -> Poly {
    Poly::var(Var::named("v"))
}

fn top_vars() -> Vec<Var> {
    ["x", "y", "u", "v"].iter().map(|n| Var::named(n)).collect()
}

/// `(1-x^2)(1-y^2) - u^2 - v^2`.
pub fn sw_relation() -> Poly {
    let one = Poly::one();
    (&one - xv().pow(2)) * (&one - yv().pow(2)) - uv().pow(2) - vv().pow(2)
}

/// Generators `u, v, 1-x^2, 1-y^2` of J.
pub fn j_generators() -> Vec<Poly> {
    let one = Poly::one();
    vec![uv(), vv(), &one - xv().pow(2), &one - yv().pow(2)]
}

/// The 4x4 matrix whose rows annihilate `(w2, w2', w3, w3')`.
pub fn relation_matrix() -> Vec<Vec<Poly>> {
    let (u, v, z) = (uv(), vv(), Poly::zero());
    let a = Poly::one() - xv().pow(2);
    let b = Poly::one() - yv().pow(2);
    vec![
        vec![-&u, v.clone(), a.clone(), z.clone()],
        vec![-&v, -&u, z.clone(), a],
        vec![b.clone(), z.clone(), -&u, -&v],
        vec![z, b, v, -u],
    ]
}

/// The matrix M whose columns span the kernel of [`relation_matrix`].
pub fn kernel_matrix() -> Vec<Vec<Poly>> {
    let (u, v, z) = (uv(), vv(), Poly::zero());
    let a = Poly::one() - xv().pow(2);
    let b = Poly::one() - yv().pow(2);
    vec![
        vec![u.clone(), v.clone(), a.clone(), z.clone()],
        vec![-&v, u.clone(), z.clone(), a],
        vec![b.clone(), z.clone(), u.clone(), -&v],
        vec![z, b, v, u],
    ]
}

/// The theta map from the symbols of R_3 into A (unreduced).
pub fn sw_theta_raw(p: &Poly) -> Result<Poly, RingError> {
    let s = |i| Poly::var(sv(i));
    let mut map = HashMap::new();
    for i in 1..=3 {
        map.insert(lambda(i), Poly::var(mu(i)));
    }
    map.insert(m_var(1, 2), s(1) * s(2) * xv());
    map.insert(m_var(1, 3), s(3) * s(1) * yv());
    map.insert(m_var(2, 3), s(2) * s(3) * (uv() + xv() * yv()));
    map.insert(w_var(1, 2, 3), s(1) * s(2) * s(3) * vv());
    if let Some(v) = p.vars().into_iter().find(|v| !map.contains_key(v)) {
        return Err(RingError::ForeignVariable(v.name()));
    }
    Ok(p.substitute(&map))
}

/// `W = -s1^2 s2 s3 xy + mu1 mu3 s1 s2 x + mu1 mu2 s1 s3 y + s1^2 mu2 mu3`.
pub fn w_element() -> Poly {
    let s = |i| Poly::var(sv(i));
    let m = |i| Poly::var(mu(i));
    -(s(1).pow(2) * s(2) * s(3) * xv() * yv())
        + m(1) * m(3) * s(1) * s(2) * xv()
        + m(1) * m(2) * s(1) * s(3) * yv()
        + s(1).pow(2) * m(2) * m(3)
}

/// E' and A for one triple `(r, s, t)`, with the inverses of the `s_i`.
#[derive(Debug)]
pub struct SwRing {
    pub orders: [i64; 3],
    pub e: QuotientRing,
    pub a: QuotientRing,
    pub s_inv: [Poly; 3],
}

impl SwRing {
    pub fn theta(&self, p: &Poly) -> Result<Poly, CaseError> {
        Ok(self.a.reduce(&sw_theta_raw(p)?))
    }
}

static RINGS: Lazy<Mutex<HashMap<[i64; 3], Arc<SwRing>>>> = Lazy::new(|| Mutex::new(HashMap::new()));

pub fn sw_build(r: i64, s: i64, t: i64) -> Result<Arc<SwRing>, CaseError> {
    check_orders(&[("r", r), ("s", s), ("t", t)])?;
    let key = [r, s, t];
    if let Some(ring) = RINGS.lock().expect("cache poisoned").get(&key) {
        return Ok(ring.clone());
    }
    let e = base_field(&key)?;
    let a = e.extend(top_vars(), vec![sw_relation()])?;
    let s_inv = [
        e.invert(&Poly::var(sv(1)))?,
        e.invert(&Poly::var(sv(2)))?,
        e.invert(&Poly::var(sv(3)))?,
    ];
    let ring = Arc::new(SwRing { orders: key, e, a, s_inv });
    Ok(RINGS.lock().expect("cache poisoned").entry(key).or_insert(ring).clone())
}

/// A over Q[mu_i, s_i] / (s_i^2 + mu_i^2 - 1), valid for every triple.
fn generic_a() -> QuotientRing {
    let mut vars: Vec<Var> = (1..=3).map(sv).collect();
    vars.extend((1..=3).map(mu));
    let rels: Vec<Poly> = (1..=3)
        .map(|i| Poly::var(sv(i)).pow(2) + Poly::var(mu(i)).pow(2) - Poly::one())
        .collect();
    let mut all = rels;
    all.push(sw_relation());
    QuotientRing::new(MonomialOrder::blocks(vec![top_vars(), vars]), all).expect("no deadline")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SwInstance {
    pub r: i64,
    pub s: i64,
    pub t: i64,
    pub word: Word,
}

impl SwInstance {
    pub fn new(r: i64, s: i64, t: i64, word: Word) -> Result<Self, CaseError> {
        check_orders(&[("r", r), ("s", s), ("t", t)])?;
        normalize_word(&word, &[r, s, t])?;
        Ok(SwInstance { r, s, t, word })
    }

    pub fn normalized_word(&self) -> Result<Word, CaseError> {
        normalize_word(&self.word, &[self.r, self.s, self.t])
    }

    fn descriptor(&self) -> Result<InstanceDescriptor, CaseError> {
        Ok(InstanceDescriptor {
            orders: vec![self.r, self.s, self.t],
            power: None,
            word: self.word.to_string(),
            normalized_word: self.normalized_word()?.to_string(),
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SwElements {
    pub w1: Poly,
    pub w2: Poly,
    pub w2p: Poly,
    pub w3: Poly,
    pub w3p: Poly,
}

impl SwElements {
    pub fn all(&self) -> Vec<Poly> {
        vec![self.w1.clone(), self.w2.clone(), self.w2p.clone(), self.w3.clone(), self.w3p.clone()]
    }
}

pub fn sw_elements(inst: &SwInstance) -> Result<SwElements, CaseError> {
    let ring = sw_build(inst.r, inst.s, inst.t)?;
    let word = inst.normalized_word()?;
    let alg = GroupAlgebra::new(3);
    let wv = alg.embed_word(&word)?.vec();
    let v1 = alg.v(1);
    let c = alg.bracket(&v1, &wv);
    let (b12, b13) = (alg.b(1, 2), alg.b(1, 3));
    let [i1, i2, i3] = &ring.s_inv;
    let th = |p: Poly, k: Poly| -> Result<Poly, CaseError> { Ok(ring.a.mul(&ring.theta(&p)?, &k)) };
    Ok(SwElements {
        w1: th(alg.dot(&v1, &wv), Poly::one())?,
        w2: th(alg.dot(&b12, &wv), i2.clone())?,
        w2p: th(alg.dot(&b12, &c), i1 * i2)?,
        w3: th(alg.dot(&b13, &wv), i3.clone())?,
        w3p: th(alg.dot(&b13, &c), i1 * i3)?,
    })
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    /// Normal form of the quantity that should vanish (or "0").
    pub residue: String,
}

impl CheckResult {
    fn zero_test(name: impl Into<String>, residue: &Poly) -> Self {
        CheckResult {
            name: name.into(),
            passed: residue.is_zero(),
            residue: residue.to_string(),
        }
    }
}

#[derive(Clone, Copy, Debug, Serialize, PartialEq, Eq)]
#[serde(rename_all = "snake_case")]
pub enum Properness {
    Proper,
    WholeRing,
    TimedOut,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct SwReport {
    pub kind: String,
    pub instance: InstanceDescriptor,
    pub order: String,
    pub elements: Vec<String>,
    pub checks: Vec<CheckResult>,
    pub properness: Option<Properness>,
    pub conclusion: Option<String>,
}

impl SwReport {
    pub fn checks_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Matrix relation rows and `w1 - W ∈ J`; with `properness`, also whether
/// the five elements generate a proper ideal (aborted after the timeout).
pub fn sw_verify(inst: &SwInstance, properness: Option<Option<Duration>>) -> Result<SwReport, CaseError> {
    let ring = sw_build(inst.r, inst.s, inst.t)?;
    let el = sw_elements(inst)?;
    let vecw = [&el.w2, &el.w2p, &el.w3, &el.w3p];
    let mut checks = Vec::new();
    for (k, row) in relation_matrix().iter().enumerate() {
        let sum: Poly = row.iter().zip(vecw).map(|(a, w)| a * w).sum();
        checks.push(CheckResult::zero_test(format!("matrix_row_{}", k + 1), &ring.a.reduce(&sum)));
    }
    let jb = ring.a.ideal(&j_generators());
    let diff = &el.w1 - &w_element();
    checks.push(CheckResult::zero_test("w1_minus_W_in_J", &jb.normal_form(&diff)));

    let prop = match properness {
        None => None,
        Some(timeout) => {
            let deadline = timeout.map(|d| Instant::now() + d);
            Some(match ring.a.is_whole_ring_until(&el.all(), deadline) {
                Ok(true) => Properness::WholeRing,
                Ok(false) => Properness::Proper,
                Err(RingError::Timeout) => Properness::TimedOut,
                Err(e) => return Err(e.into()),
            })
        }
    };
    let passed = checks.iter().all(|c| c.passed);
    let conclusion = (passed && prop == Some(Properness::Proper)).then(|| {
        format!(
            "{} does not normally generate C_{} * C_{} * C_{}",
            inst.word, inst.r, inst.s, inst.t
        )
    });
    Ok(SwReport {
        kind: "sw".into(),
        instance: inst.descriptor()?,
        order: ring.a.order().describe(),
        elements: el.all().iter().map(|p| p.to_string()).collect(),
        checks,
        properness: prop,
        conclusion,
    })
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct StaticReport {
    pub checks: Vec<CheckResult>,
}

impl StaticReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Identities that hold for every triple: relation matrix times M is zero,
/// the three reductions of the J generators, and theta respects the single
/// relation of R_3.
pub fn sw_static_checks() -> StaticReport {
    let a = generic_a();
    let mut checks = Vec::new();
    let n = relation_matrix();
    let m = kernel_matrix();
    for i in 0..4 {
        for j in 0..4 {
            let e: Poly = (0..4).map(|k| &n[i][k] * &m[k][j]).sum();
            checks.push(CheckResult::zero_test(format!("nm_{}{}", i + 1, j + 1), &a.reduce(&e)));
        }
    }
    let (x, y, u, one) = (xv(), yv(), uv(), Poly::one());
    let uxy = &u + &x * &y;
    let ids = [
        (
            "j_reduction_1",
            &one - uxy.pow(2) - ((&one - x.pow(2)) + x.pow(2) * (&one - y.pow(2)) - (&u + &x * &y * Poly::from_i64(2)) * &u),
        ),
        ("j_reduction_2", &x * &uxy - &y - (&x * &u - &y * (&one - x.pow(2)))),
        ("j_reduction_3", &x - &y * &uxy - (&x * (&one - y.pow(2)) - &y * &u)),
    ];
    for (name, e) in ids {
        checks.push(CheckResult::zero_test(name, &a.reduce(&e)));
    }
    let kf = kf_ring(3);
    let rels = kf.groebner_basis().generators();
    checks.push(CheckResult {
        name: "single_relation".into(),
        passed: rels.len() == 1,
        residue: format!("{} relations", rels.len()),
    });
    for (k, rel) in rels.iter().enumerate() {
        let image = sw_theta_raw(rel).expect("R_3 symbols only");
        checks.push(CheckResult::zero_test(format!("theta_relation_{}", k + 1), &a.reduce(&image)));
    }
    StaticReport { checks }
}

/// Q[x, y, u, v] / ((1-x^2)(1-y^2) - u^2 - v^2).
fn rational_a() -> QuotientRing {
    QuotientRing::new(MonomialOrder::degrevlex(top_vars()), vec![sw_relation()]).expect("no deadline")
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ProbeCase {
    pub q1: Vec<String>,
    pub q2: Vec<String>,
    pub a: String,
    pub alpha: String,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ProbeReport {
    pub seed: u64,
    pub trials: usize,
    pub coefficients: Vec<String>,
    pub w_prime: String,
    pub counterexamples: Vec<ProbeCase>,
}

/// `c3 xy + c2 y + c1 x + c0`.
pub fn w_prime(c: &[Rational; 4]) -> Poly {
    Poly::constant(c[3].clone()) * xv() * yv()
        + Poly::constant(c[2].clone()) * yv()
        + Poly::constant(c[1].clone()) * xv()
        + Poly::constant(c[0].clone())
}

/// True when `{a, W' + alpha}` generates a proper ideal of A over Q.
pub fn probe_is_proper(c: &[Rational; 4], a: &Poly, alpha: &Poly) -> bool {
    !rational_a().is_whole_ring(&[a.clone(), w_prime(c) + alpha])
}

fn random_linear(rng: &mut ChaCha8Rng) -> Poly {
    let mut p = Poly::from_i64(rng.gen_range(-2..=2));
    for v in [xv(), yv(), uv(), vv()] {
        p = p + v * Poly::from_i64(rng.gen_range(-2..=2));
    }
    p
}

/// Random `a = q1^T M q2` (entries of degree at most 1) and `alpha ∈ J`;
/// records every trial where `{a, W' + alpha}` generates the whole ring.
pub fn conjecture_probe(c: &[Rational; 4], seed: u64, trials: usize) -> Result<ProbeReport, CaseError> {
    if num_traits::Zero::is_zero(&c[3]) {
        return Err(CaseError::InvalidInstance("c3 must be nonzero".into()));
    }
    let ring = rational_a();
    let m = kernel_matrix();
    let wp = w_prime(c);
    let mut counterexamples = Vec::new();
    for trial in 0..trials {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (trial as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15));
        let q1: Vec<Poly> = (0..4).map(|_| random_linear(&mut rng)).collect();
        let q2: Vec<Poly> = (0..4).map(|_| random_linear(&mut rng)).collect();
        let mut a = Poly::zero();
        for i in 0..4 {
            for j in 0..4 {
                a = a + &q1[i] * &m[i][j] * &q2[j];
            }
        }
        let alpha: Poly = j_generators().iter().map(|g| g * &random_linear(&mut rng)).sum();
        let a = ring.reduce(&a);
        let alpha = ring.reduce(&alpha);
        if ring.is_whole_ring(&[a.clone(), &wp + &alpha]) {
            counterexamples.push(ProbeCase {
                q1: q1.iter().map(|p| p.to_string()).collect(),
                q2: q2.iter().map(|p| p.to_string()).collect(),
                a: a.to_string(),
                alpha: alpha.to_string(),
            });
        }
    }
    Ok(ProbeReport {
        seed,
        trials,
        coefficients: c.iter().map(|x| x.to_string()).collect(),
        w_prime: wp.to_string(),
        counterexamples,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{parse_poly, rat};

    fn p(s: &str) -> Poly {
        parse_poly(s).unwrap()
    }

    #[test]
    fn theta_table() {
        assert_eq!(sw_theta_raw(&p("m12")).unwrap(), p("s1*s2*x"));
        assert_eq!(sw_theta_raw(&p("m13")).unwrap(), p("s1*s3*y"));
        assert_eq!(sw_theta_raw(&p("w123")).unwrap(), p("s1*s2*s3*v"));
        assert!(sw_theta_raw(&p("m14")).is_err());
    }

    #[test]
    fn static_checks_pass() {
        let r = sw_static_checks();
        assert!(r.passed(), "{:?}", r.checks.iter().filter(|c| !c.passed).collect::<Vec<_>>());
        assert_eq!(r.checks.len(), 16 + 3 + 2);
    }

    #[test]
    fn g1g2g3_structure() {
        let inst = SwInstance::new(2, 3, 5, Word::from_letters(&[1, 2, 3])).unwrap();
        let rep = sw_verify(&inst, None).unwrap();
        assert!(rep.checks_passed(), "{:?}", rep.checks);
        assert_eq!(rep.properness, None);
        assert_eq!(rep.conclusion, None);
    }

    #[test]
    fn w_single_letter_contributions_vanish() {
        let alg = GroupAlgebra::new(3);
        let v1 = alg.v(1);
        assert!(alg.is_zero(&alg.bracket(&v1, &v1)));
    }

    #[test]
    fn probe_examples() {
        let c = [rat(0, 1), rat(0, 1), rat(0, 1), rat(1, 1)];
        assert!(probe_is_proper(&c, &Poly::zero(), &Poly::zero()));
        assert!(probe_is_proper(&c, &uv(), &Poly::zero()));
        let rep = conjecture_probe(&c, 5, 5).unwrap();
        assert!(rep.counterexamples.is_empty());
        assert!(conjecture_probe(&[rat(1, 1), rat(0, 1), rat(0, 1), rat(0, 1)], 1, 1).is_err());
    }
}
