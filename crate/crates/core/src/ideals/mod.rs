//! The ideals L^#, L^## and L^• of K[F_n] attached to a set of words, and
//! presentation-level queries built on them.

use std::time::Instant;

use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::agmod::{AElem, GroupAlgebra};
use crate::ring::{kf_order, kf_relations, QuotientRing, RingError};
use crate::words::{Presentation, Word};
use crate::{Poly, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    Hash,
    Hashhash,
    Bullet,
    Custom,
}

/// Generators of an ideal of K[F_n], in normal form.
#[derive(Clone, Debug)]
pub struct IdealSpec {
    pub n: usize,
    pub generators: Vec<Poly>,
    pub provenance: Provenance,
}

#[derive(Clone, Debug, Serialize)]
pub struct AmbientDescriptor {
    pub generators: usize,
    pub variables: Vec<String>,
    pub relations: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct IdealSpecJson {
    pub ambient: AmbientDescriptor,
    pub generators: Vec<String>,
    pub provenance: Provenance,
}

impl IdealSpec {
    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn to_json(&self) -> IdealSpecJson {
        let alg = GroupAlgebra::new(self.n);
        let ring = alg.ring();
        IdealSpecJson {
            ambient: AmbientDescriptor {
                generators: self.n,
                variables: ring.vars().iter().map(|v| v.name()).collect(),
                relations: ring.relations().iter().map(|r| r.to_string()).collect(),
            },
            generators: self.generators.iter().map(|g| g.to_string()).collect(),
            provenance: self.provenance,
        }
    }

    /// The sum of two ideals of the same ring.
    pub fn sum(&self, other: &IdealSpec) -> IdealSpec {
        assert_eq!(self.n, other.n);
        let mut g = self.generators.clone();
        g.extend(other.generators.iter().cloned());
        IdealSpec {
            n: self.n,
            generators: drop_zeros(g),
            provenance: Provenance::Custom,
        }
    }
}

/// Scales so the first stored coefficient is 1; two generators that agree up
/// to a nonzero constant become equal.
fn normalize_scalar(p: &Poly) -> Poly {
    match p.terms().first() {
        Some((_, c)) if !c.is_one() => p.scale(&(Rational::one() / c)),
        _ => p.clone(),
    }
}

fn drop_zeros(gens: Vec<Poly>) -> Vec<Poly> {
    gens.into_iter().filter(|g| !g.is_zero()).collect()
}

/// Drops zeros and generators that repeat up to a constant factor.
pub fn prune(gens: Vec<Poly>) -> Vec<Poly> {
    let mut seen: Vec<Poly> = Vec::new();
    let mut out = Vec::new();
    for g in gens {
        if g.is_zero() {
            continue;
        }
        let key = normalize_scalar(&g);
        if !seen.contains(&key) {
            seen.push(key);
            out.push(g);
        }
    }
    out
}

fn max_index(words: &[Word]) -> usize {
    words.iter().map(|w| w.max_generator()).max().unwrap_or(0)
}

fn check_words(words: &[Word], n: usize) {
    assert!(max_index(words) <= n, "word uses a generator beyond {}", n);
}

/// `{bar(β·l) − bar(β)}` for `β` in `basis`.
pub fn hash_generators_with_basis(words: &[Word], n: usize, basis: &[AElem]) -> IdealSpec {
    check_words(words, n);
    let alg = GroupAlgebra::new(n);
    let mut gens = Vec::new();
    for l in words {
        let el = alg.embed_word(l).expect("indices checked");
        for b in basis {
            let prod = alg.mul(b, &el).expect("same algebra");
            gens.push(alg.reduce(&(prod.bar() - b.bar())));
        }
    }
    IdealSpec {
        n,
        generators: drop_zeros(gens),
        provenance: Provenance::Hash,
    }
}

/// L^# over the spanning set `{1, v_i, b_ij}`.
pub fn hash_generators(words: &[Word], n: usize) -> IdealSpec {
    let basis = GroupAlgebra::new(n).module_basis();
    hash_generators_with_basis(words, n, &basis)
}

/// L^##: `{β·vec(l)}` for `β ∈ {v_i, b_ij}`.
pub fn hashhash_generators(words: &[Word], n: usize) -> IdealSpec {
    check_words(words, n);
    let alg = GroupAlgebra::new(n);
    let basis = alg.lambda_basis();
    let mut gens = Vec::new();
    for l in words {
        let lv = alg.embed_word(l).expect("indices checked").vec();
        for b in &basis {
            gens.push(alg.dot(b, &lv));
        }
    }
    IdealSpec {
        n,
        generators: drop_zeros(gens),
        provenance: Provenance::Hashhash,
    }
}

/// L^•: `{1 − bar(l)}`.
pub fn bullet_generators(words: &[Word], n: usize) -> IdealSpec {
    check_words(words, n);
    let alg = GroupAlgebra::new(n);
    let gens = words
        .iter()
        .map(|l| alg.reduce(&(Poly::one() - alg.bar_word(l).expect("indices checked"))))
        .collect::<Vec<_>>();
    IdealSpec {
        n,
        generators: drop_zeros(gens),
        provenance: Provenance::Bullet,
    }
}

fn cyclic_pair_sets() -> [(usize, [Word; 4]); 2] {
    let (g1, g2) = (Word::generator(1), Word::generator(2));
    [
        (1, [Word::identity(), g1.clone(), g2.clone(), g2.multiply(&g1)]),
        (2, [Word::identity(), g2.clone(), g1.clone(), g1.multiply(&g2)]),
    ]
}

/// The eight generators `bar(β·g_i^e) − bar(β)` of L^# for `L = {g1^s, g2^t}`,
/// with `β` running over `{1, g1, g2, g2g1}` for `g1^s` and `{1, g2, g1, g1g2}`
/// for `g2^t`.
pub fn cyclic_pair_generators(s: i64, t: i64) -> Vec<Poly> {
    let alg = GroupAlgebra::new(2);
    let mut out = Vec::new();
    for (i, betas) in cyclic_pair_sets() {
        let e = if i == 1 { s } else { t };
        let rel = Word::power(i, e);
        for b in &betas {
            let direct = alg.bar_word(&b.multiply(&rel)).expect("two generators") - alg.bar_word(b).expect("two generators");
            out.push(alg.reduce(&direct));
        }
    }
    out
}

/// [`cyclic_pair_generators`] with each `bar(β·g_i^e)` expanded through the
/// P-polynomials in `bar(g_i)` instead of multiplying out the word.
pub fn cyclic_pair_generators_via_powers(s: i64, t: i64) -> Vec<Poly> {
    let alg = GroupAlgebra::new(2);
    let mut out = Vec::new();
    for (i, betas) in cyclic_pair_sets() {
        let e = if i == 1 { s } else { t };
        let g = Word::generator(i);
        for b in &betas {
            let pb = alg.power_bar(b, &g, &Word::identity(), e).expect("two generators");
            out.push(alg.reduce(&(pb - alg.bar_word(b).expect("two generators"))));
        }
    }
    out
}

/// K[G] for `G = <names | relators>`: R_n modulo the hash ideal of the relators.
pub fn quotient_ring_of_presentation(p: &Presentation) -> Result<QuotientRing, RingError> {
    let n = p.generator_count();
    let mut rels = kf_relations(n);
    rels.extend(hash_generators(&p.relators, n).generators);
    QuotientRing::new(kf_order(n), rels)
}

/// The kernel of K[F_n] → K[Z^n]: `{[v_a, v_b]·β}` over `a < b` and `β ∈ Λ`.
pub fn abelianization_kernel_generators(n: usize) -> IdealSpec {
    let alg = GroupAlgebra::new(n);
    let basis = alg.lambda_basis();
    let mut gens = Vec::new();
    for a in 1..=n {
        for b in a + 1..=n {
            let br = alg.bracket(&alg.v(a), &alg.v(b));
            for beta in &basis {
                gens.push(alg.dot(&br, beta));
            }
        }
    }
    IdealSpec {
        n,
        generators: prune(gens),
        provenance: Provenance::Custom,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    /// The ideals differ, so the words do not normally generate the group.
    CertifiedNo,
    /// The ideals agree; nothing can be concluded.
    Inconclusive,
}

/// Compares `(relators ∪ L)^##` with `{g_1, …, g_n}^##` in K[F_n] (or the
/// `#` ideals if `use_hash`).
pub fn normally_generates_check(p: &Presentation, words: &[Word], use_hash: bool) -> Verdict {
    normally_generates_check_until(p, words, use_hash, None).expect("no deadline given")
}

pub fn normally_generates_check_until(
    p: &Presentation,
    words: &[Word],
    use_hash: bool,
    deadline: Option<Instant>,
) -> Result<Verdict, RingError> {
    let n = p.generator_count();
    let mut lhs_words = p.relators.clone();
    lhs_words.extend(words.iter().cloned());
    let all: Vec<Word> = (1..=n).map(Word::generator).collect();
    let ideal = |ws: &[Word]| {
        if use_hash {
            hash_generators(ws, n)
        } else {
            hashhash_generators(ws, n)
        }
    };
    let alg = GroupAlgebra::new(n);
    let ring = alg.ring();
    let lhs = ring.ideal_until(&prune(ideal(&lhs_words).generators), deadline)?;
    let rhs = ring.ideal_until(&prune(ideal(&all).generators), deadline)?;
    Ok(if lhs == rhs {
        Verdict::Inconclusive
    } else {
        Verdict::CertifiedNo
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{parse_poly, parse_presentation};

    fn p(s: &str) -> Poly {
        parse_poly(s).unwrap()
    }

    fn w(l: &[i64]) -> Word {
        Word::from_letters(l)
    }

    #[test]
    fn trivial_inputs_give_zero_ideals() {
        assert!(hash_generators(&[], 2).is_zero());
        assert!(hash_generators(&[Word::identity()], 2).is_zero());
        assert!(hashhash_generators(&[Word::identity()], 2).is_zero());
        assert!(bullet_generators(&[Word::identity()], 2).is_zero());
        assert!(abelianization_kernel_generators(1).is_zero());
    }

    #[test]
    fn bullet_examples() {
        assert_eq!(bullet_generators(&[w(&[1])], 1).generators, vec![p("1 - lambda1")]);
        assert_eq!(bullet_generators(&[w(&[1, 2])], 2).generators, vec![p("1 - lambda1*lambda2 + m12")]);
    }

    #[test]
    fn hash_for_two_cyclic_factors() {
        let rels = [Word::power(1, 2), Word::power(2, 3)];
        let ideal = hash_generators(&rels, 2);
        // The b12 rows vanish: b12·g1^s and b12·g2^t have zero scalar part.
        assert_eq!(ideal.generators.len(), 6);
        let alg = GroupAlgebra::new(2);
        let first = alg.bar_word(&Word::power(1, 2)).unwrap() - Poly::one();
        assert_eq!(ideal.generators[0], first);
        // Same ideal as the per-relator sets {1, g1, g2, g2g1} and {1, g2, g1, g1g2}.
        let set = |ws: &[&[i64]]| -> Vec<AElem> { ws.iter().map(|l| alg.embed_word(&w(l)).unwrap()).collect() };
        let mut other = hash_generators_with_basis(&rels[..1], 2, &set(&[&[], &[1], &[2], &[2, 1]])).generators;
        other.extend(hash_generators_with_basis(&rels[1..], 2, &set(&[&[], &[2], &[1], &[1, 2]])).generators);
        assert_eq!(other.len(), 8);
        assert!(alg.ring().ideal_equal(&ideal.generators, &other));
    }

    #[test]
    fn cyclic_pair_generators_agree() {
        for (s, t) in [(2, 3), (3, 4)] {
            let direct = cyclic_pair_generators(s, t);
            assert_eq!(direct.len(), 8);
            assert_eq!(direct, cyclic_pair_generators_via_powers(s, t));
            let alg = GroupAlgebra::new(2);
            let basis = hash_generators(&[Word::power(1, s), Word::power(2, t)], 2);
            assert!(alg.ring().ideal_equal(&direct, &basis.generators));
        }
        assert_eq!(cyclic_pair_generators(2, 3)[0], p("2*lambda1^2 - 2"));
    }

    #[test]
    fn hashhash_examples() {
        let alg = GroupAlgebra::new(2);
        let sq = hashhash_generators(&[Word::power(1, 2)], 2);
        assert!(alg.ring().ideal_contains(&[p("lambda1")], &sq.generators[0]));
        assert!(sq.generators.iter().all(|g| alg.ring().ideal_contains(&[p("lambda1")], g)));
        let g1 = hashhash_generators(&[w(&[1])], 2);
        assert!(alg.ring().ideal_contains(&g1.generators, &p("1 - lambda1^2")));
    }

    #[test]
    fn abelianization_kernel_sizes() {
        let two = abelianization_kernel_generators(2);
        assert_eq!(two.generators, vec![p("(1-lambda1^2)*(1-lambda2^2) - m12^2")]);
        assert_eq!(abelianization_kernel_generators(3).generators.len(), 7);
    }

    #[test]
    fn presentation_rings() {
        let free = quotient_ring_of_presentation(&parse_presentation("<g1|>").unwrap()).unwrap();
        assert!(free.relations().is_empty());
        let c4 = quotient_ring_of_presentation(&parse_presentation("<g1|g1^4>").unwrap()).unwrap();
        assert_eq!(c4.dimension(), Some(3));
    }

    #[test]
    fn normal_generation_examples() {
        let p1 = parse_presentation("<g1,g2|g1^2,g2^3>").unwrap();
        assert_eq!(
            normally_generates_check(&p1, &[w(&[1, 2]).pow(2)], false),
            Verdict::CertifiedNo
        );
        let p2 = parse_presentation("<g1|>").unwrap();
        assert_eq!(normally_generates_check(&p2, &[w(&[1])], false), Verdict::Inconclusive);
        let p3 = parse_presentation("<g1,g2|>").unwrap();
        assert_eq!(normally_generates_check(&p3, &[w(&[1])], false), Verdict::CertifiedNo);
        assert_eq!(normally_generates_check(&p3, &[w(&[1])], true), Verdict::CertifiedNo);
    }

    #[test]
    fn json_shape() {
        let j = serde_json::to_value(bullet_generators(&[w(&[1])], 1).to_json()).unwrap();
        assert_eq!(j["provenance"], "bullet");
        assert_eq!(j["generators"][0], "-lambda1 + 1");
        assert_eq!(j["ambient"]["variables"][0], "lambda1");
    }
}
