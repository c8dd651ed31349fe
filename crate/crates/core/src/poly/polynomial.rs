use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use rustc_hash::FxHashMap;

use super::monomial::Monomial;
use super::vars::Var;
use crate::scalar::{Field, Scalar};

/// A sparse multivariate polynomial.
///
/// Terms are kept sorted in descending graded-reverse-lexicographic order of
/// variable ids, with no zero coefficients and no repeated monomials, so two
/// polynomials are equal exactly when their term lists are equal.
#[derive(Clone, PartialEq)]
pub struct Polynomial<C> {
    terms: Vec<(Monomial, C)>,
}

impl<C: Scalar> Polynomial<C> {
    pub fn zero() -> Self {
        Polynomial { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn from_i64(v: i64) -> Self {
        Self::constant(C::from_i64(v))
    }

    pub fn var(v: Var) -> Self {
        Self::term(C::one(), Monomial::var(v))
    }

    pub fn term(c: C, m: Monomial) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Polynomial { terms: vec![(m, c)] }
        }
    }

    /// Builds a polynomial from arbitrary terms, combining like monomials.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, C)>>(terms: I) -> Self {
        let mut acc: FxHashMap<Monomial, C> = FxHashMap::default();
        for (m, c) in terms {
            match acc.get_mut(&m) {
                Some(existing) => *existing = existing.add_ref(&c),
                None => {
                    acc.insert(m, c);
                }
            }
        }
        Self::from_map(acc)
    }

    fn from_map(acc: FxHashMap<Monomial, C>) -> Self {
        let mut keyed: Vec<(u32, Monomial, C)> = acc
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, c)| (m.degree(), m, c))
            .collect();
        keyed.sort_unstable_by(|a, b| b.0.cmp(&a.0).then_with(|| b.1.revlex_cmp(&a.1)));
        Polynomial {
            terms: keyed.into_iter().map(|(_, m, c)| (m, c)).collect(),
        }
    }

    pub fn terms(&self) -> &[(Monomial, C)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, C)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.0.is_one())
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    /// The constant coefficient.
    pub fn constant_term(&self) -> C {
        self.terms
            .iter()
            .find(|t| t.0.is_one())
            .map(|t| t.1.clone())
            .unwrap_or_else(C::zero)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &Monomial) -> C {
        self.terms
            .iter()
            .find(|t| &t.0 == m)
            .map(|t| t.1.clone())
            .unwrap_or_else(C::zero)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.0.degree()).max()
    }

    /// Largest exponent of `v` over all terms; `None` stands for −∞ (the zero polynomial).
    pub fn degree_in(&self, v: Var) -> Option<u32> {
        self.terms.iter().map(|t| t.0.exponent(v)).max()
    }

    /// All variables that occur, sorted by id.
    pub fn vars(&self) -> Vec<Var> {
        let mut vs: Vec<Var> = self.terms.iter().flat_map(|t| t.0.vars()).collect();
        vs.sort();
        vs.dedup();
        vs
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .filter_map(|(m, a)| {
                    let p = a.mul_ref(c);
                    (!p.is_zero()).then(|| (m.clone(), p))
                })
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        // Multiplying by a monomial preserves a monomial order.
        Polynomial {
            terms: self.terms.iter().map(|(t, c)| (t.mul(m), c.clone())).collect(),
        }
    }

    pub fn pow(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    fn merge(&self, other: &Self, negate_other: bool) -> Self {
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    let c = if negate_other { -b[j].1.clone() } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate_other {
                        a[i].1.sub_ref(&b[j].1)
                    } else {
                        a[i].1.add_ref(&b[j].1)
                    };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(m, c)| {
            let c = if negate_other { -c.clone() } else { c.clone() };
            (m.clone(), c)
        }));
        Polynomial { terms: out }
    }

    fn product(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut acc: FxHashMap<Monomial, C> =
            FxHashMap::with_capacity_and_hasher((self.terms.len() * other.terms.len()).min(1 << 16), Default::default());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let c = ca.mul_ref(cb);
                match acc.get_mut(&m) {
                    Some(e) => *e = e.add_ref(&c),
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        Self::from_map(acc)
    }

    /// Homomorphic substitution. Variables missing from `assignment` pass through.
    pub fn substitute(&self, assignment: &HashMap<Var, Polynomial<C>>) -> Self {
        let mut power_cache: HashMap<(Var, u32), Polynomial<C>> = HashMap::new();
        let mut acc = Self::zero();
        for (m, c) in &self.terms {
            let mut term = Self::constant(c.clone());
            let mut kept: Vec<(Var, u32)> = Vec::new();
            for &(v, e) in m.factors() {
                match assignment.get(&v) {
                    Some(image) => {
                        let p = power_cache
                            .entry((v, e))
                            .or_insert_with(|| image.pow(e))
                            .clone();
                        term = &term * &p;
                    }
                    None => kept.push((v, e)),
                }
            }
            if !kept.is_empty() {
                term = term.mul_monomial(&Monomial::from_pairs(kept));
            }
            acc = &acc + &term;
        }
        acc
    }

    /// Evaluates at a point given by `value`; `None` if some variable is unassigned.
    pub fn evaluate<F: Fn(Var) -> Option<C>>(&self, value: F) -> Option<C> {
        let mut cache: HashMap<Var, C> = HashMap::new();
        let mut total = C::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for &(v, e) in m.factors() {
                let x = match cache.get(&v) {
                    Some(x) => x.clone(),
                    None => {
                        let x = value(v)?;
                        cache.insert(v, x.clone());
                        x
                    }
                };
                for _ in 0..e {
                    t = t.mul_ref(&x);
                }
            }
            total = total.add_ref(&t);
        }
        Some(total)
    }

    /// Splits into coefficients of powers of `v`: `self = Σ coeff[k]·v^k`.
    pub fn coefficients_in(&self, v: Var) -> BTreeMap<u32, Polynomial<C>> {
        let mut groups: BTreeMap<u32, Vec<(Monomial, C)>> = BTreeMap::new();
        for (m, c) in &self.terms {
            let (e, rest) = m.split_off(v);
            groups.entry(e).or_default().push((rest, c.clone()));
        }
        groups
            .into_iter()
            .map(|(e, ts)| (e, Polynomial::from_terms(ts)))
            .filter(|(_, p)| !p.is_zero())
            .collect()
    }

    pub fn leading_term(&self) -> Option<&(Monomial, C)> {
        self.terms.first()
    }
}

impl<C: Field> Polynomial<C> {
    /// Scales so that the leading coefficient (in the storage order) is 1.
    pub fn monic(&self) -> Self {
        match self.terms.first() {
            None => Self::zero(),
            Some((_, c)) => self.scale(&c.inv()),
        }
    }
}

/// Sums many products into one polynomial with a single final sort.
pub struct Accumulator<C> {
    acc: FxHashMap<Monomial, C>,
}

impl<C: Scalar> Default for Accumulator<C> {
    fn default() -> Self {
        Accumulator { acc: FxHashMap::default() }
    }
}

impl<C: Scalar> Accumulator<C> {
    pub fn new() -> Self {
        Self::default()
    }

    fn push(&mut self, m: Monomial, c: C) {
        match self.acc.get_mut(&m) {
            Some(e) => *e = e.add_ref(&c),
            None => {
                self.acc.insert(m, c);
            }
        }
    }

    pub fn add(&mut self, p: &Polynomial<C>) {
        for (m, c) in &p.terms {
            self.push(m.clone(), c.clone());
        }
    }

    /// Adds `±a·b·k`.
    pub fn add_product(&mut self, a: &Polynomial<C>, b: &Polynomial<C>, k: &Polynomial<C>, negate: bool) {
        for (mk, ck) in &k.terms {
            let ck = if negate { -ck.clone() } else { ck.clone() };
            for (ma, ca) in &a.terms {
                let mak = ma.mul(mk);
                let cak = ca.mul_ref(&ck);
                for (mb, cb) in &b.terms {
                    self.push(mak.mul(mb), cak.mul_ref(cb));
                }
            }
        }
    }

    pub fn is_empty(&self) -> bool {
        self.acc.is_empty()
    }

    pub fn finish(self) -> Polynomial<C> {
        Polynomial::from_map(self.acc)
    }
}

impl<C: Scalar> fmt::Display for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut sorted: Vec<&(Monomial, C)> = self.terms.iter().collect();
        sorted.sort_by(|a, b| a.0.display_cmp(&b.0));
        for (idx, (m, c)) in sorted.into_iter().enumerate() {
            let neg = c.is_negative_value();
            let mag = if neg { -c.clone() } else { c.clone() };
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            if m.is_one() {
                write!(f, "{}", mag.render())?;
            } else if mag.is_one() {
                write!(f, "{}", m)?;
            } else {
                write!(f, "{}*{}", mag.render(), m)?;
            }
        }
        Ok(())
    }
}

impl<C: Scalar> fmt::Debug for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl<C: Scalar> Default for Polynomial<C> {
    fn default() -> Self {
        Self::zero()
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl<'a, C: Scalar> $tr<&'a Polynomial<C>> for &'a Polynomial<C> {
            type Output = Polynomial<C>;
            fn $method(self, rhs: &'a Polynomial<C>) -> Polynomial<C> {
                let f: fn(&Polynomial<C>, &Polynomial<C>) -> Polynomial<C> = $body;
                f(self, rhs)
            }
        }
        impl<C: Scalar> $tr<Polynomial<C>> for Polynomial<C> {
            type Output = Polynomial<C>;
            fn $method(self, rhs: Polynomial<C>) -> Polynomial<C> {
                (&self).$method(&rhs)
            }
        }
        impl<'a, C: Scalar> $tr<&'a Polynomial<C>> for Polynomial<C> {
            type Output = Polynomial<C>;
            fn $method(self, rhs: &'a Polynomial<C>) -> Polynomial<C> {
                (&self).$method(rhs)
            }
        }
        impl<'a, C: Scalar> $tr<Polynomial<C>> for &'a Polynomial<C> {
            type Output = Polynomial<C>;
            fn $method(self, rhs: Polynomial<C>) -> Polynomial<C> {
                self.$method(&rhs)
            }
        }
    };
}

binop!(Add, add, |a, b| a.merge(b, false));
binop!(Sub, sub, |a, b| a.merge(b, true));
binop!(Mul, mul, |a, b| a.product(b));

impl<C: Scalar> Neg for Polynomial<C> {
    type Output = Polynomial<C>;
    fn neg(self) -> Polynomial<C> {
        Polynomial {
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl<C: Scalar> Neg for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn neg(self) -> Polynomial<C> {
        -(self.clone())
    }
}

impl<C: Scalar> std::iter::Sum for Polynomial<C> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |a, b| &a + &b)
    }
}
