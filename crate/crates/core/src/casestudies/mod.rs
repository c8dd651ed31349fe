//! Certificate drivers for free products of cyclic groups: two factors
//! ([`boyer`]) and three factors ([`sw`]).

pub mod boyer;
pub mod sw;

pub use boyer::{boyer_certificate, boyer_ring, boyer_theta, BoyerInstance, BoyerRing, Certificate};
pub use sw::{
    conjecture_probe, sw_build, sw_elements, sw_static_checks, sw_verify, CheckResult, ProbeReport, Properness,
    StaticReport, SwElements, SwInstance, SwReport, SwRing,
};

use serde::Serialize;
use thiserror::Error;

use crate::agmod::AlgebraError;
use crate::ring::RingError;
use crate::words::Word;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CaseError {
    #[error("invalid instance: {0}")]
    InvalidInstance(String),
    #[error("form check failed: expected {expected}, got {got}")]
    FormCheckFailed { expected: String, got: String },
    #[error("leading coefficient {0} is not a unit")]
    NotAUnit(String),
    #[error("check {name} failed with residue {residue}")]
    CheckFailed { name: String, residue: String },
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Appends relator powers so that each exponent sum becomes exactly 1.
///
/// `orders[i]` is the order of generator `i + 1`. Sums not congruent to 1
/// are rejected.
pub fn normalize_word(word: &Word, orders: &[i64]) -> Result<Word, CaseError> {
    if word.max_generator() > orders.len() {
        return Err(CaseError::InvalidInstance(format!(
            "word {} uses more than {} generators",
            word,
            orders.len()
        )));
    }
    let mut out = word.clone();
    for (k, &n) in orders.iter().enumerate() {
        let i = k + 1;
        let e = word.exponent_sum(i);
        if (e - 1).rem_euclid(n) != 0 {
            return Err(CaseError::InvalidInstance(format!(
                "exponent sum of g{} in {} is {}, not 1 mod {}",
                i, word, e, n
            )));
        }
        if e != 1 {
            out = out.multiply(&Word::power(i, 1 - e));
        }
    }
    Ok(out)
}

fn check_orders(orders: &[(&str, i64)]) -> Result<(), CaseError> {
    for &(name, v) in orders {
        if v < 2 {
            return Err(CaseError::InvalidInstance(format!("{} must be at least 2, got {}", name, v)));
        }
    }
    Ok(())
}

/// A random word of length at most `max_len` whose exponent sums are 1 modulo
/// the orders, by rejection sampling.
pub fn random_valid_word<R: rand::Rng + ?Sized>(rng: &mut R, orders: &[i64], max_len: usize) -> Option<Word> {
    for _ in 0..10_000 {
        let len = rng.gen_range(1..=max_len);
        let w = Word::random(rng, orders.len(), len);
        if normalize_word(&w, orders).is_ok() {
            return Some(w);
        }
    }
    None
}

/// Instance fields shared by the JSON reports.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct InstanceDescriptor {
    pub orders: Vec<i64>,
    pub power: Option<i64>,
    pub word: String,
    pub normalized_word: String,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalization_appends_relator_powers() {
        let w = Word::from_letters(&[1, 1, 1, 2]);
        let n = normalize_word(&w, &[2, 3]).unwrap();
        assert_eq!(n.exponent_sum(1), 1);
        assert_eq!(n.exponent_sum(2), 1);
        assert_eq!(n.to_string(), "g1^3*g2*g1^-2");
        assert!(normalize_word(&Word::from_letters(&[1, 1, 2]), &[3, 3]).is_err());
        assert!(normalize_word(&Word::from_letters(&[1, 2, 3]), &[2, 3]).is_err());
    }

    #[test]
    fn random_valid_words_normalize() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let w = random_valid_word(&mut rng, &[2, 3, 5], 8).unwrap();
            assert!(w.len() <= 8);
            assert!(normalize_word(&w, &[2, 3, 5]).is_ok());
        }
    }
}
