//! Quotient rings, the Gröbner engine, and the ring R_n ≅ K[F_n].

mod groebner;
mod kf;
mod order;

pub use groebner::{
    buchberger, buchberger_until, default_order, ideal_contains, ideal_equal, normal_form, GroebnerBasis,
};
pub use kf::{build_kf, kf_order, kf_relations, canonical_m, canonical_w, lambda, m_var, r3_raw, r4_raw, w_poly, w_var};
pub use order::MonomialOrder;

use std::time::Instant;

use serde::Serialize;
use thiserror::Error;

use crate::poly::Var;
use crate::Poly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("computation timed out")]
    Timeout,
    #[error("not a unit: {0}")]
    NotAUnit(String),
    #[error("variable {0} does not belong to the ring")]
    ForeignVariable(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

/// A polynomial ring over the rationals modulo an ideal, with elements
/// represented by normal forms.
#[derive(Clone, Debug)]
pub struct QuotientRing {
    order: MonomialOrder,
    relations: Vec<Poly>,
    gb: GroebnerBasis,
}

/// Summary of a quotient ring for printing and JSON output.
#[derive(Clone, Debug, Serialize)]
pub struct RingDescription {
    pub variables: Vec<String>,
    pub order: MonomialOrder,
    pub relations: Vec<String>,
    pub groebner_basis: Vec<String>,
    pub dimension: Option<usize>,
}

impl QuotientRing {
    pub fn new(order: MonomialOrder, relations: Vec<Poly>) -> Result<Self, RingError> {
        Self::new_until(order, relations, None)
    }

    pub fn new_until(order: MonomialOrder, relations: Vec<Poly>, deadline: Option<Instant>) -> Result<Self, RingError> {
        for r in &relations {
            for v in r.vars() {
                if !order.contains(v) {
                    return Err(RingError::ForeignVariable(v.name()));
                }
            }
        }
        let gb = buchberger_until(&relations, &order, deadline)?;
        Ok(QuotientRing { order, relations, gb })
    }

    /// The polynomial ring itself.
    pub fn free(order: MonomialOrder) -> Self {
        Self::new(order, Vec::new()).expect("no relations")
    }

    pub fn vars(&self) -> Vec<Var> {
        self.order.vars()
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn relations(&self) -> &[Poly] {
        &self.relations
    }

    pub fn groebner_basis(&self) -> &GroebnerBasis {
        &self.gb
    }

    pub fn check_vars(&self, p: &Poly) -> Result<(), RingError> {
        match p.vars().into_iter().find(|v| !self.order.contains(*v)) {
            Some(v) => Err(RingError::ForeignVariable(v.name())),
            None => Ok(()),
        }
    }

    pub fn reduce(&self, p: &Poly) -> Poly {
        self.gb.normal_form(p)
    }

    pub fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        self.reduce(&(a * b))
    }

    pub fn is_zero(&self, p: &Poly) -> bool {
        self.reduce(p).is_zero()
    }

    /// Gröbner basis of `gens` plus the relations.
    pub fn ideal(&self, gens: &[Poly]) -> GroebnerBasis {
        self.ideal_until(gens, None).expect("no deadline given")
    }

    pub fn ideal_until(&self, gens: &[Poly], deadline: Option<Instant>) -> Result<GroebnerBasis, RingError> {
        let mut all: Vec<Poly> = self.gb.generators().to_vec();
        all.extend(gens.iter().map(|g| self.reduce(g)).filter(|g| !g.is_zero()));
        buchberger_until(&all, &self.order, deadline)
    }

    pub fn is_whole_ring(&self, gens: &[Poly]) -> bool {
        self.ideal(gens).is_unit_ideal()
    }

    pub fn is_whole_ring_until(&self, gens: &[Poly], deadline: Option<Instant>) -> Result<bool, RingError> {
        Ok(self.ideal_until(gens, deadline)?.is_unit_ideal())
    }

    pub fn ideal_contains(&self, gens: &[Poly], p: &Poly) -> bool {
        self.ideal(gens).contains(p)
    }

    /// Equality of the ideals generated (together with the relations).
    pub fn ideal_equal(&self, a: &[Poly], b: &[Poly]) -> bool {
        self.ideal(a) == self.ideal(b)
    }

    /// The inverse of `elem`, found as `T − t` in a Gröbner basis of
    /// `relations + ⟨elem·T − 1⟩` with `T` in a top elimination block.
    pub fn invert(&self, elem: &Poly) -> Result<Poly, RingError> {
        self.check_vars(elem)?;
        let e = self.reduce(elem);
        if e.is_zero() {
            return Err(RingError::NotAUnit(elem.to_string()));
        }
        if e.is_constant() {
            return Ok(Poly::constant(num_traits::Inv::inv(e.constant_term())));
        }
        let t = Var::named("_inv");
        let order = self.order.with_top_block(vec![t]);
        let mut gens: Vec<Poly> = self.gb.generators().to_vec();
        gens.push(&e * &Poly::var(t) - Poly::one());
        let g = buchberger(&gens, &order);
        let tp = Poly::var(t);
        let found = g
            .generators()
            .iter()
            .find(|q| q.degree_in(t) == Some(1) && g.leading_monomial(q) == Some(crate::Monomial::var(t)));
        let inv = match found {
            Some(q) => self.reduce(&(&tp - q)),
            None => return Err(RingError::NotAUnit(elem.to_string())),
        };
        if !self.reduce(&(&e * &inv - Poly::one())).is_zero() {
            return Err(RingError::NotAUnit(elem.to_string()));
        }
        Ok(inv)
    }

    /// Vector-space dimension over the rationals, if finite.
    pub fn dimension(&self) -> Option<usize> {
        if self.gb.is_unit_ideal() {
            return Some(0);
        }
        // Ambient variables absent from the basis have no pure-power leading
        // monomial, so the staircase check covers them via the order layout.
        self.gb.dimension()
    }

    /// The same relations over a larger ring with new variables in a top block.
    pub fn extend(&self, top: Vec<Var>, extra: Vec<Poly>) -> Result<QuotientRing, RingError> {
        self.extend_until(top, extra, None)
    }

    pub fn extend_until(&self, top: Vec<Var>, extra: Vec<Poly>, deadline: Option<Instant>) -> Result<QuotientRing, RingError> {
        let order = self.order.with_top_block(top);
        let mut rels = self.gb.generators().to_vec();
        rels.extend(extra);
        QuotientRing::new_until(order, rels, deadline)
    }

    pub fn describe(&self) -> RingDescription {
        RingDescription {
            variables: self.vars().iter().map(|v| v.name()).collect(),
            order: self.order.clone(),
            relations: self.relations.iter().map(|r| r.to_string()).collect(),
            groebner_basis: self.gb.generators().iter().map(|g| g.to_string()).collect(),
            dimension: self.dimension(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{parse_poly, rat};

    fn p(s: &str) -> Poly {
        parse_poly(s).unwrap()
    }

    fn ring(vars: &[&str], rels: &[&str]) -> QuotientRing {
        let order = MonomialOrder::degrevlex(vars.iter().map(|v| Var::named(v)).collect());
        QuotientRing::new(order, rels.iter().map(|r| p(r)).collect()).unwrap()
    }

    #[test]
    fn whole_ring_examples() {
        let q = ring(&["x"], &[]);
        assert!(!q.is_whole_ring(&[]));
        assert!(q.is_whole_ring(&[p("x-1"), p("x+1")]));
        // s^2 = 3/4 makes s a unit.
        let e = ring(&["qs"], &["qs^2 - 3/4"]);
        assert!(e.is_whole_ring(&[p("qs^2")]));
    }

    #[test]
    fn invert_examples() {
        let q = ring(&["x"], &[]);
        assert_eq!(q.invert(&Poly::from_i64(2)).unwrap(), Poly::constant(rat(1, 2)));
        assert!(matches!(q.invert(&p("x")), Err(RingError::NotAUnit(_))));
        let e = ring(&["iv_s", "iv_mu"], &["iv_mu^2 - 1/4", "iv_s^2 + iv_mu^2 - 1"]);
        let inv = e.invert(&p("iv_s")).unwrap();
        assert!(e.reduce(&(p("iv_s") * inv - Poly::one())).is_zero());
        // A zero divisor in a product of fields is not a unit.
        let split = ring(&["zd"], &["zd^2 - 1"]);
        assert!(split.invert(&p("zd - 1")).is_err());
        assert_eq!(split.invert(&p("zd")).unwrap(), p("zd"));
    }

    #[test]
    fn foreign_variables_rejected() {
        let q = ring(&["x"], &[]);
        assert!(matches!(q.invert(&p("fv_y")), Err(RingError::ForeignVariable(_))));
        let order = MonomialOrder::degrevlex(vec![Var::named("x")]);
        assert!(QuotientRing::new(order, vec![p("fv_y")]).is_err());
    }

    #[test]
    fn dimension_of_finite_quotient() {
        assert_eq!(ring(&["x", "y"], &["x^2", "y^3"]).dimension(), Some(6));
        assert_eq!(ring(&["x", "y"], &["x^2"]).dimension(), None);
        assert_eq!(ring(&["x"], &["1"]).dimension(), Some(0));
    }

    #[test]
    fn j_identity_in_sw_ring() {
        let a = ring(&["x", "y", "u", "v"], &["(1-x^2)*(1-y^2) - u^2 - v^2"]);
        let j = [p("u"), p("v"), p("1-x^2"), p("1-y^2")];
        assert!(a.ideal_contains(&j, &p("1-(u+x*y)^2")));
    }
}
