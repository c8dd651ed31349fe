use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

use super::vars::{natural_cmp, Var};

/// A power product stored sparsely as `(variable, exponent)` pairs sorted by
/// variable id. Zero exponents are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    factors: SmallVec<[(Var, u32); 4]>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(v: Var) -> Self {
        Self::power(v, 1)
    }

    pub fn power(v: Var, e: u32) -> Self {
        let mut m = Monomial::default();
        if e > 0 {
            m.factors.push((v, e));
        }
        m
    }

    /// Builds a monomial from arbitrary pairs, merging repeats and dropping zeros.
    pub fn from_pairs<I: IntoIterator<Item = (Var, u32)>>(pairs: I) -> Self {
        let mut factors: SmallVec<[(Var, u32); 4]> = pairs.into_iter().filter(|p| p.1 > 0).collect();
        factors.sort_by_key(|p| p.0);
        let mut merged: SmallVec<[(Var, u32); 4]> = SmallVec::new();
        for (v, e) in factors {
            match merged.last_mut() {
                Some(last) if last.0 == v => last.1 += e,
                _ => merged.push((v, e)),
            }
        }
        Monomial { factors: merged }
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.factors.iter().map(|p| p.1).sum()
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.factors
            .binary_search_by_key(&v, |p| p.0)
            .map(|i| self.factors[i].1)
            .unwrap_or(0)
    }

    pub fn factors(&self) -> &[(Var, u32)] {
        &self.factors
    }

    pub fn vars(&self) -> impl Iterator<Item = Var> + '_ {
        self.factors.iter().map(|p| p.0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.factors, &other.factors);
        let mut out: SmallVec<[(Var, u32); 4]> = SmallVec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial { factors: out }
    }

    pub fn pow(&self, k: u32) -> Monomial {
        if k == 0 {
            return Monomial::one();
        }
        Monomial {
            factors: self.factors.iter().map(|&(v, e)| (v, e * k)).collect(),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.factors.iter().all(|&(v, e)| other.exponent(v) >= e)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn divide_into(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial::from_pairs(
            other.factors.iter().map(|&(v, e)| (v, e - self.exponent(v))),
        ))
    }

    /// Removes `v`, returning its exponent and the remaining cofactor.
    pub fn split_off(&self, v: Var) -> (u32, Monomial) {
        let e = self.exponent(v);
        let rest = Monomial {
            factors: self.factors.iter().copied().filter(|p| p.0 != v).collect(),
        };
        (e, rest)
    }

    /// Deterministic, registry-independent ordering used for rendering:
    /// graded, then lexicographic on natural-sorted variable names.
    pub(crate) fn display_cmp(&self, other: &Monomial) -> Ordering {
        let key = |m: &Monomial| {
            let mut names: Vec<(String, u32)> = m.factors.iter().map(|&(v, e)| (v.name(), e)).collect();
            names.sort_by(|a, b| natural_cmp(&a.0, &b.0));
            names
        };
        other.degree().cmp(&self.degree()).then_with(|| {
            let (ka, kb) = (key(self), key(other));
            for (a, b) in ka.iter().zip(kb.iter()) {
                let c = natural_cmp(&a.0, &b.0).then_with(|| b.1.cmp(&a.1));
                if c != Ordering::Equal {
                    return c;
                }
            }
            kb.len().cmp(&ka.len())
        })
    }
}

impl Ord for Monomial {
    /// Graded reverse lexicographic order with lower variable ids ranking higher.
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.revlex_cmp(other))
    }
}

impl Monomial {
    /// The tie-break of [`Ord`] for monomials of equal degree.
    pub(crate) fn revlex_cmp(&self, other: &Self) -> Ordering {
        // Revlex: look at the highest-id variable where exponents differ;
        // the monomial with the smaller exponent there is larger.
        let (a, b) = (&self.factors, &other.factors);
        let (mut i, mut j) = (a.len(), b.len());
        while i > 0 || j > 0 {
            let va = if i > 0 { Some(a[i - 1]) } else { None };
            let vb = if j > 0 { Some(b[j - 1]) } else { None };
            match (va, vb) {
                (Some(x), Some(y)) if x.0 == y.0 => {
                    if x.1 != y.1 {
                        return y.1.cmp(&x.1);
                    }
                    i -= 1;
                    j -= 1;
                }
                (Some(x), Some(y)) => {
                    // The larger id appears in only one of them.
                    return if x.0 > y.0 { Ordering::Less } else { Ordering::Greater };
                }
                (Some(_), None) => return Ordering::Less,
                (None, Some(_)) => return Ordering::Greater,
                (None, None) => unreachable!(),
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut names: Vec<(String, u32)> = self.factors.iter().map(|&(v, e)| (v.name(), e)).collect();
        names.sort_by(|a, b| natural_cmp(&a.0, &b.0));
        let parts: Vec<String> = names
            .into_iter()
            .map(|(n, e)| if e == 1 { n } else { format!("{}^{}", n, e) })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xyz() -> (Var, Var, Var) {
        (Var::named("mono_x"), Var::named("mono_y"), Var::named("mono_z"))
    }

    #[test]
    fn multiply_and_divide() {
        let (x, y, _) = xyz();
        let a = Monomial::from_pairs([(x, 2), (y, 1)]);
        let b = Monomial::var(y);
        let ab = a.mul(&b);
        assert_eq!(ab.exponent(y), 2);
        assert_eq!(b.divide_into(&ab), Some(a.clone()));
        assert!(!ab.divides(&a));
        assert_eq!(Monomial::from_pairs([(x, 0)]), Monomial::one());
    }

    #[test]
    fn grevlex_ordering() {
        let (x, y, z) = xyz();
        // Degree dominates.
        assert!(Monomial::power(z, 3) > Monomial::from_pairs([(x, 1), (y, 1)]));
        // x > y > z at equal degree.
        assert!(Monomial::var(x) > Monomial::var(y));
        assert!(Monomial::var(y) > Monomial::var(z));
        // Revlex: x*z^... smaller exponent in the last variable wins.
        assert!(Monomial::from_pairs([(x, 1), (y, 1)]) > Monomial::from_pairs([(x, 1), (z, 1)]));
        assert!(Monomial::power(y, 2) > Monomial::from_pairs([(x, 1), (z, 1)]));
    }
}
