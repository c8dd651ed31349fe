//! Proper powers in `C_s * C_t`.
//!
//! K[C_s * C_t] maps to E[x], where E = Q[mu1, mu2, s1, s2] modulo
//! `P_s(mu1), P_t(mu2), s_i^2 + mu_i^2 - 1`. For `w` with unit exponent sums,
//! if `P_r(theta(bar w))` is not a unit in E[x] then `w^r` does not normally
//! generate the group.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use once_cell::sync::Lazy;
use serde::Serialize;

use super::{check_orders, normalize_word, CaseError, InstanceDescriptor};
use crate::agmod::GroupAlgebra;
use crate::poly::{chebyshev_at, chebyshev_pair_with, Var};
use crate::ring::{lambda, m_var, MonomialOrder, QuotientRing, RingError};
use crate::words::Word;
use crate::Poly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoyerInstance {
    pub s: i64,
    pub t: i64,
    pub r: i64,
    pub word: Word,
}

impl BoyerInstance {
    pub fn new(s: i64, t: i64, r: i64, word: Word) -> Result<Self, CaseError> {
        check_orders(&[("s", s), ("t", t), ("r", r)])?;
        normalize_word(&word, &[s, t])?;
        Ok(BoyerInstance { s, t, r, word })
    }

    /// The word with relator powers appended so both exponent sums are 1.
    pub fn normalized_word(&self) -> Result<Word, CaseError> {
        normalize_word(&self.word, &[self.s, self.t])
    }
}

/// E, E[x] and E[x]/(x^2 - 1) for one pair `(s, t)`.
#[derive(Debug)]
pub struct BoyerRing {
    pub s: i64,
    pub t: i64,
    pub e: QuotientRing,
    pub ex: QuotientRing,
    ex_mod: QuotientRing,
}

pub(crate) fn mu(i: usize) -> Var {
    Var::named(&format!("mu{}", i))
}

pub(crate) fn sv(i: usize) -> Var {
    Var::named(&format!("s{}", i))
}

pub fn x_var() -> Var {
    Var::named("x")
}

/// `Q[mu_i, s_i]` modulo `P_{n_i}(mu_i)` and `s_i^2 + mu_i^2 - 1`, with the
/// `s` variables above the `mu` variables.
pub(crate) fn base_field(orders: &[i64]) -> Result<QuotientRing, RingError> {
    let k = orders.len();
    let mut vars: Vec<Var> = (1..=k).map(sv).collect();
    vars.extend((1..=k).map(mu));
    let mut rels = Vec::new();
    for (idx, &n) in orders.iter().enumerate() {
        let i = idx + 1;
        rels.push(chebyshev_at(n, &Poly::var(mu(i))));
        rels.push(Poly::var(sv(i)).pow(2) + Poly::var(mu(i)).pow(2) - Poly::one());
    }
    QuotientRing::new(MonomialOrder::degrevlex(vars), rels)
}

static RINGS: Lazy<Mutex<HashMap<(i64, i64), Arc<BoyerRing>>>> = Lazy::new(|| Mutex::new(HashMap::new()));

/// The rings for `(s, t)`, built once per process.
pub fn boyer_ring(s: i64, t: i64) -> Result<Arc<BoyerRing>, CaseError> {
    check_orders(&[("s", s), ("t", t)])?;
    if let Some(r) = RINGS.lock().expect("cache poisoned").get(&(s, t)) {
        return Ok(r.clone());
    }
    let e = base_field(&[s, t])?;
    let x = x_var();
    let ex = e.extend(vec![x], Vec::new())?;
    let ex_mod = e.extend(vec![x], vec![Poly::var(x).pow(2) - Poly::one()])?;
    let ring = Arc::new(BoyerRing { s, t, e, ex, ex_mod });
    Ok(RINGS.lock().expect("cache poisoned").entry((s, t)).or_insert(ring).clone())
}

/// `lambda1 -> mu1, lambda2 -> mu2, m12 -> s1 s2 x`, then normal form in E[x].
pub fn boyer_theta(ring: &BoyerRing, p: &Poly) -> Result<Poly, CaseError> {
    let (l1, l2, m12) = (lambda(1), lambda(2), m_var(1, 2));
    if let Some(v) = p.vars().into_iter().find(|v| ![l1, l2, m12].contains(v)) {
        return Err(RingError::ForeignVariable(v.name()).into());
    }
    let mut map = HashMap::new();
    map.insert(l1, Poly::var(mu(1)));
    map.insert(l2, Poly::var(mu(2)));
    map.insert(m12, Poly::var(sv(1)) * Poly::var(sv(2)) * Poly::var(x_var()));
    Ok(ring.ex.reduce(&p.substitute(&map)))
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct UnitCertificate {
    pub inverse: String,
    /// Normal form of `leading_coefficient * inverse`; always "1".
    pub product: String,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Certificate {
    pub kind: String,
    pub instance: InstanceDescriptor,
    pub order: String,
    pub ring_relations: Vec<String>,
    pub theta_image: String,
    pub remainder: String,
    pub degree: u32,
    pub leading_coefficient: String,
    /// Extra relations cutting E down to the components where the leading
    /// coefficient is nonzero; empty when it is already a unit in E.
    pub component: Vec<String>,
    pub unit_certificate: UnitCertificate,
    pub conclusion: String,
}

/// Highest power of `x` with a coefficient that is nonzero in `e`, and that coefficient.
fn leading_in_x(e: &QuotientRing, p: &Poly) -> Option<(u32, Poly)> {
    p.coefficients_in(x_var())
        .into_iter()
        .rev()
        .map(|(d, c)| (d, e.reduce(&c)))
        .find(|(_, c)| !c.is_zero())
}

/// `e` localized at `c`: the relations of `e` plus everything forced by
/// `c·T = 1`, with `T` eliminated. Errors if `c` is nilpotent.
fn localize(e: &QuotientRing, c: &Poly) -> Result<QuotientRing, CaseError> {
    let t = Var::named("_loc");
    let order = e.order().with_top_block(vec![t]);
    let mut gens = e.groebner_basis().generators().to_vec();
    gens.push(c * &Poly::var(t) - Poly::one());
    let g = crate::ring::buchberger(&gens, &order);
    let kept: Vec<Poly> = g.generators().iter().filter(|p| !p.vars().contains(&t)).cloned().collect();
    let out = QuotientRing::new(e.order().clone(), kept)?;
    if out.groebner_basis().is_unit_ideal() {
        return Err(CaseError::NotAUnit(c.to_string()));
    }
    Ok(out)
}

pub fn boyer_certificate(inst: &BoyerInstance) -> Result<Certificate, CaseError> {
    check_orders(&[("s", inst.s), ("t", inst.t), ("r", inst.r)])?;
    let word = inst.normalized_word()?;
    let ring = boyer_ring(inst.s, inst.t)?;
    let alg = GroupAlgebra::new(2);
    let p = boyer_theta(&ring, &alg.bar_word(&word)?)?;

    let (x, s1, s2) = (Poly::var(x_var()), Poly::var(sv(1)), Poly::var(sv(2)));
    let expected = ring.ex_mod.reduce(&(Poly::var(mu(1)) * Poly::var(mu(2)) - s1 * s2 * x));
    let remainder = ring.ex_mod.reduce(&p);
    if remainder != expected {
        return Err(CaseError::FormCheckFailed {
            expected: expected.to_string(),
            got: remainder.to_string(),
        });
    }

    let (_, pr) = chebyshev_pair_with(inst.r, &p, |q| ring.ex.reduce(&q));
    let lead = |e: &QuotientRing| {
        leading_in_x(e, &pr).ok_or_else(|| CaseError::CheckFailed {
            name: "degree".into(),
            residue: "0".into(),
        })
    };
    let (mut degree, mut lc) = lead(&ring.e)?;
    // E is a product of fields; a zero-divisor leading coefficient means the
    // degree drops on some factors, so keep only the factors where it does not.
    let mut field = ring.e.clone();
    let mut component = Vec::new();
    if !field.is_whole_ring(&[lc.clone()]) {
        field = localize(&ring.e, &lc)?;
        component = field
            .groebner_basis()
            .generators()
            .iter()
            .filter(|g| !ring.e.is_zero(g))
            .map(|g| g.to_string())
            .collect();
        (degree, lc) = lead(&field)?;
    }
    if (degree as i64) < inst.r - 1 {
        return Err(CaseError::CheckFailed {
            name: "degree".into(),
            residue: format!("degree {} < {}", degree, inst.r - 1),
        });
    }
    if !field.is_whole_ring(&[lc.clone()]) {
        return Err(CaseError::NotAUnit(lc.to_string()));
    }
    let inverse = field.invert(&lc)?;
    let product = field.mul(&lc, &inverse);

    Ok(Certificate {
        kind: "boyer".into(),
        instance: InstanceDescriptor {
            orders: vec![inst.s, inst.t],
            power: Some(inst.r),
            word: inst.word.to_string(),
            normalized_word: word.to_string(),
        },
        order: ring.ex.order().describe(),
        ring_relations: ring.e.groebner_basis().generators().iter().map(|g| g.to_string()).collect(),
        theta_image: p.to_string(),
        remainder: remainder.to_string(),
        degree,
        leading_coefficient: lc.to_string(),
        component,
        unit_certificate: UnitCertificate {
            inverse: inverse.to_string(),
            product: product.to_string(),
        },
        conclusion: format!(
            "({})^{} does not normally generate C_{} * C_{}",
            inst.word, inst.r, inst.s, inst.t
        ),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse_poly;

    fn p(s: &str) -> Poly {
        parse_poly(s).unwrap()
    }

    #[test]
    fn theta_examples() {
        let ring = boyer_ring(2, 3).unwrap();
        let th = |s: &str| boyer_theta(&ring, &p(s)).unwrap();
        assert!(ring.ex.is_zero(&(th("lambda1*lambda2 - m12") - p("mu1*mu2 - s1*s2*x"))));
        assert_eq!(th("lambda1"), ring.ex.reduce(&p("mu1")));
        assert!(ring.ex.is_zero(&(th("m12^2") - p("(1-mu1^2)*(1-mu2^2)*x^2"))));
        assert!(matches!(
            boyer_theta(&ring, &p("lambda3")),
            Err(CaseError::Ring(RingError::ForeignVariable(_)))
        ));
    }

    #[test]
    fn g1g2_squared_in_c2_c3() {
        let inst = BoyerInstance::new(2, 3, 2, Word::from_letters(&[1, 2])).unwrap();
        let c = boyer_certificate(&inst).unwrap();
        let ring = boyer_ring(2, 3).unwrap();
        assert_eq!(c.degree, 1);
        assert_eq!(p(&c.theta_image), ring.ex.reduce(&p("mu1*mu2 - s1*s2*x")));
        assert_eq!(p(&c.leading_coefficient), ring.e.reduce(&p("-2*s1*s2")));
        assert_eq!(c.unit_certificate.product, "1");
        assert_eq!(c.conclusion, "(g1*g2)^2 does not normally generate C_2 * C_3");
    }

    #[test]
    fn cube_has_degree_two() {
        let inst = BoyerInstance::new(2, 3, 3, Word::from_letters(&[1, 2])).unwrap();
        assert_eq!(boyer_certificate(&inst).unwrap().degree, 2);
    }

    #[test]
    fn rejects_bad_exponent_sums() {
        assert!(BoyerInstance::new(2, 3, 2, Word::from_letters(&[1, 1, 2])).is_err());
        assert!(BoyerInstance::new(1, 3, 2, Word::from_letters(&[1, 2])).is_err());
    }

    #[test]
    fn random_words_certify() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for &(s, t, r) in &[(2, 3, 2), (3, 4, 3), (2, 4, 2), (3, 3, 3)] {
            for _ in 0..6 {
                let w = super::super::random_valid_word(&mut rng, &[s, t], 8).unwrap();
                let inst = BoyerInstance::new(s, t, r, w.clone()).unwrap();
                let c = boyer_certificate(&inst).unwrap_or_else(|e| panic!("{} {:?}: {}", w, (s, t, r), e));
                assert!(c.degree as i64 >= r - 1);
            }
        }
    }
}
