//! Free-group words in syllable form, and presentation parsing.

mod parse;

pub use parse::{parse_presentation, parse_word, parse_word_list, WordError};

use std::fmt;

use rand::Rng;
use serde::{Deserialize, Serialize};

/// A freely reduced word, stored as `(generator, exponent)` syllables.
/// Generators are numbered from 1.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct Word {
    syllables: Vec<(usize, i64)>,
}

impl Word {
    pub fn identity() -> Self {
        Word::default()
    }

    pub fn generator(i: usize) -> Self {
        Self::power(i, 1)
    }

    pub fn power(i: usize, e: i64) -> Self {
        assert!(i >= 1, "generator indices start at 1");
        if e == 0 {
            Word::identity()
        } else {
            Word { syllables: vec![(i, e)] }
        }
    }

    /// Free reduction of an arbitrary syllable list.
    pub fn from_syllables<I: IntoIterator<Item = (usize, i64)>>(syls: I) -> Self {
        let mut w = Word::identity();
        for (i, e) in syls {
            w.push(i, e);
        }
        w
    }

    /// Word from letters `±i` (negative means inverse).
    pub fn from_letters(letters: &[i64]) -> Self {
        Self::from_syllables(letters.iter().map(|&l| (l.unsigned_abs() as usize, l.signum())))
    }

    fn push(&mut self, i: usize, e: i64) {
        assert!(i >= 1, "generator indices start at 1");
        if e == 0 {
            return;
        }
        match self.syllables.last_mut() {
            Some(last) if last.0 == i => {
                last.1 += e;
                if last.1 == 0 {
                    self.syllables.pop();
                }
            }
            _ => self.syllables.push((i, e)),
        }
    }

    pub fn syllables(&self) -> &[(usize, i64)] {
        &self.syllables
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Number of letters, i.e. the sum of absolute exponents.
    pub fn len(&self) -> usize {
        self.syllables.iter().map(|s| s.1.unsigned_abs() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.is_identity()
    }

    /// Letter-by-letter expansion as signed generator indices.
    pub fn letters(&self) -> impl Iterator<Item = i64> + '_ {
        self.syllables
            .iter()
            .flat_map(|&(i, e)| std::iter::repeat_n(e.signum() * i as i64, e.unsigned_abs() as usize))
    }

    pub fn max_generator(&self) -> usize {
        self.syllables.iter().map(|s| s.0).max().unwrap_or(0)
    }

    pub fn multiply(&self, other: &Word) -> Word {
        let mut w = self.clone();
        for &(i, e) in &other.syllables {
            w.push(i, e);
        }
        w
    }

    pub fn inverse(&self) -> Word {
        Word {
            syllables: self.syllables.iter().rev().map(|&(i, e)| (i, -e)).collect(),
        }
    }

    pub fn pow(&self, n: i64) -> Word {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut w = Word::identity();
        for _ in 0..n.unsigned_abs() {
            w = w.multiply(&base);
        }
        w
    }

    pub fn conjugate_by(&self, h: &Word) -> Word {
        h.multiply(self).multiply(&h.inverse())
    }

    pub fn exponent_sum(&self, i: usize) -> i64 {
        self.syllables.iter().filter(|s| s.0 == i).map(|s| s.1).sum()
    }

    /// Renders with the given generator names (`g1, g2, …` if `names` is too short).
    pub fn render_with(&self, names: &[String]) -> String {
        if self.syllables.is_empty() {
            return "e".to_string();
        }
        self.syllables
            .iter()
            .map(|&(i, e)| {
                let name = names.get(i - 1).cloned().unwrap_or_else(|| format!("g{}", i));
                if e == 1 {
                    name
                } else {
                    format!("{}^{}", name, e)
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }

    /// A freely reduced random word of exactly `len` letters over generators `1..=n`.
    pub fn random<R: Rng + ?Sized>(rng: &mut R, n: usize, len: usize) -> Word {
        let mut letters: Vec<i64> = Vec::with_capacity(len);
        while letters.len() < len {
            let g = rng.gen_range(1..=n) as i64;
            let l = if rng.gen_bool(0.5) { g } else { -g };
            if letters.last() == Some(&-l) {
                continue;
            }
            letters.push(l);
        }
        Word::from_letters(&letters)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render_with(&[]))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// A finite presentation `<names | relators>`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Presentation {
    pub names: Vec<String>,
    pub relators: Vec<Word>,
}

impl Presentation {
    /// The presentation with generators `g1..gn` and the given relators.
    pub fn standard(n: usize, relators: Vec<Word>) -> Self {
        Presentation {
            names: (1..=n).map(|i| format!("g{}", i)).collect(),
            relators,
        }
    }

    pub fn generator_count(&self) -> usize {
        self.names.len()
    }

    pub fn render(&self) -> String {
        let rels: Vec<String> = self.relators.iter().map(|r| r.render_with(&self.names)).collect();
        format!("<{}|{}>", self.names.join(","), rels.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn w(l: &[i64]) -> Word {
        Word::from_letters(l)
    }

    #[test]
    fn multiply_examples() {
        assert_eq!(w(&[1, 2]).multiply(&w(&[-2, 1])), Word::power(1, 2));
        assert_eq!(Word::identity().multiply(&w(&[1, -2])), w(&[1, -2]));
        assert_eq!(w(&[1]).multiply(&w(&[1])), Word::power(1, 2));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(w(&[1, 2]).inverse(), w(&[-2, -1]));
        assert_eq!(Word::identity().inverse(), Word::identity());
        assert_eq!(Word::power(1, 3).inverse(), Word::power(1, -3));
    }

    #[test]
    fn exponent_sum_examples() {
        assert_eq!(Word::from_syllables([(1, 1), (2, -1), (1, 2)]).exponent_sum(1), 3);
        assert_eq!(Word::identity().exponent_sum(4), 0);
        assert_eq!(w(&[1, 2, -1, -2]).exponent_sum(2), 0);
    }

    #[test]
    fn random_words_are_reduced_with_requested_length() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for len in 0..20 {
            let x = Word::random(&mut rng, 3, len);
            assert_eq!(x.len(), len);
            assert!(x.syllables().windows(2).all(|p| p[0].0 != p[1].0));
        }
    }

    #[test]
    fn letters_round_trip() {
        let x = Word::from_syllables([(2, -3), (1, 2)]);
        let letters: Vec<i64> = x.letters().collect();
        assert_eq!(letters, vec![-2, -2, -2, 1, 1]);
        assert_eq!(Word::from_letters(&letters), x);
    }
}
