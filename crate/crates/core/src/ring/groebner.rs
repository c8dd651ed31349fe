//! Buchberger's algorithm with the sugar strategy and the Gebauer–Möller
//! criteria.
//!
//! Polynomials are converted to a dense internal form: each block of the order
//! contributes `[degree, -e_last, …, -e_first]` to an integer key, so plain
//! lexicographic comparison of keys is the block order and monomial
//! multiplication is elementwise addition. Coefficients are kept as primitive
//! integers (fraction-free reduction with content removal).

use std::collections::HashMap;
use std::sync::Arc;
use std::time::Instant;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use smallvec::SmallVec;

use super::order::MonomialOrder;
use super::RingError;
use crate::poly::{Monomial, Var};
use crate::{Poly, Rational};

type Key = SmallVec<[i32; 16]>;
type IPoly = Vec<(Key, BigInt)>;

#[derive(Debug)]
pub(crate) struct Layout {
    vars: Vec<Var>,
    slot: HashMap<Var, usize>,
    /// Per block: key index of the degree entry and key indices of its exponents.
    blocks: Vec<(usize, Vec<usize>)>,
    is_exp: Vec<bool>,
    width: usize,
}

impl Layout {
    fn new(order: &MonomialOrder, extra: &[Var]) -> Self {
        let mut blocks_in: Vec<Vec<Var>> = order.blocks.clone();
        let mut rest: Vec<Var> = extra.iter().copied().filter(|v| !order.contains(*v)).collect();
        rest.sort_by(|a, b| crate::poly::natural_name_cmp(*a, *b));
        rest.dedup();
        if !rest.is_empty() {
            blocks_in.push(rest);
        }
        let mut vars = Vec::new();
        let mut slot = HashMap::new();
        let mut blocks = Vec::new();
        let mut is_exp = Vec::new();
        let mut offset = 0;
        for b in &blocks_in {
            let k = b.len();
            let deg_slot = offset;
            is_exp.push(false);
            let mut exps = Vec::with_capacity(k);
            for _ in 0..k {
                is_exp.push(true);
            }
            for (j, &v) in b.iter().enumerate() {
                let s = offset + 1 + (k - 1 - j);
                slot.insert(v, s);
                vars.push(v);
                exps.push(s);
            }
            blocks.push((deg_slot, exps));
            offset += k + 1;
        }
        Layout {
            vars,
            slot,
            blocks,
            is_exp,
            width: offset,
        }
    }

    fn covers(&self, p: &Poly) -> bool {
        p.terms().iter().all(|(m, _)| m.vars().all(|v| self.slot.contains_key(&v)))
    }

    fn key(&self, m: &Monomial) -> Key {
        let mut k: Key = SmallVec::from_elem(0, self.width);
        for &(v, e) in m.factors() {
            let s = self.slot[&v];
            k[s] = -(e as i32);
        }
        self.fix_degrees(&mut k);
        k
    }

    fn fix_degrees(&self, k: &mut Key) {
        for (d, exps) in &self.blocks {
            k[*d] = -exps.iter().map(|&s| k[s]).sum::<i32>();
        }
    }

    fn monomial(&self, k: &Key) -> Monomial {
        Monomial::from_pairs(
            self.vars
                .iter()
                .map(|&v| (v, (-k[self.slot[&v]]) as u32)),
        )
    }

    fn total_degree(&self, k: &Key) -> u32 {
        self.blocks.iter().map(|(d, _)| k[*d] as u32).sum()
    }

    fn divides(&self, a: &Key, b: &Key) -> bool {
        a.iter()
            .zip(b.iter())
            .zip(self.is_exp.iter())
            .all(|((x, y), &e)| !e || x >= y)
    }

    fn lcm(&self, a: &Key, b: &Key) -> Key {
        let mut k: Key = a.iter().zip(b.iter()).map(|(x, y)| *x.min(y)).collect();
        self.fix_degrees(&mut k);
        k
    }

    fn coprime(&self, a: &Key, b: &Key) -> bool {
        a.iter()
            .zip(b.iter())
            .zip(self.is_exp.iter())
            .all(|((x, y), &e)| !e || *x == 0 || *y == 0)
    }

    fn to_ipoly(&self, p: &Poly) -> (IPoly, Rational) {
        // p = ip / scale
        let mut den = BigInt::one();
        for (_, c) in p.terms() {
            den = den.lcm(c.denom());
        }
        let mut t: IPoly = p
            .terms()
            .iter()
            .map(|(m, c)| (self.key(m), c.numer() * (&den / c.denom())))
            .collect();
        t.sort_by(|a, b| b.0.cmp(&a.0));
        (t, Rational::from_integer(den))
    }

    fn to_poly(&self, p: &IPoly, scale: &Rational) -> Poly {
        Poly::from_terms(
            p.iter()
                .map(|(k, c)| (self.monomial(k), Rational::from_integer(c.clone()) / scale)),
        )
    }
}

fn key_mul(a: &Key, b: &Key) -> Key {
    a.iter().zip(b.iter()).map(|(x, y)| x + y).collect()
}

fn key_div(a: &Key, b: &Key) -> Key {
    a.iter().zip(b.iter()).map(|(x, y)| x - y).collect()
}

/// `a·(ma·p) − b·(mb·q)`, all inputs sorted descending.
fn lincomb(p: &[(Key, BigInt)], ma: Option<&Key>, a: &BigInt, q: &[(Key, BigInt)], mb: &Key, b: &BigInt) -> IPoly {
    let mut out = Vec::with_capacity(p.len() + q.len());
    let shift = |k: &Key, m: Option<&Key>| match m {
        Some(m) => key_mul(k, m),
        None => k.clone(),
    };
    let a_one = a.is_one();
    let (mut i, mut j) = (0, 0);
    let mut pk = p.first().map(|t| shift(&t.0, ma));
    let mut qk = q.first().map(|t| key_mul(&t.0, mb));
    loop {
        match (&pk, &qk) {
            (None, None) => break,
            (Some(x), Some(y)) if x == y => {
                let c = if a_one { p[i].1.clone() } else { &p[i].1 * a } - &q[j].1 * b;
                if !c.is_zero() {
                    out.push((pk.take().unwrap(), c));
                }
                i += 1;
                j += 1;
                pk = p.get(i).map(|t| shift(&t.0, ma));
                qk = q.get(j).map(|t| key_mul(&t.0, mb));
            }
            (Some(x), y) if y.as_ref().is_none_or(|y| x > y) => {
                let c = if a_one { p[i].1.clone() } else { &p[i].1 * a };
                out.push((pk.take().unwrap(), c));
                i += 1;
                pk = p.get(i).map(|t| shift(&t.0, ma));
            }
            _ => {
                out.push((qk.take().unwrap(), -(&q[j].1 * b)));
                j += 1;
                qk = q.get(j).map(|t| key_mul(&t.0, mb));
            }
        }
    }
    out
}

fn content(polys: &[&[(Key, BigInt)]]) -> BigInt {
    let mut g = BigInt::zero();
    for p in polys {
        for (_, c) in p.iter() {
            g = g.gcd(c);
            if g.is_one() {
                return g;
            }
        }
    }
    g
}

fn divide_all(p: &mut [(Key, BigInt)], g: &BigInt) {
    for t in p.iter_mut() {
        t.1 = &t.1 / g;
    }
}

/// Primitive with positive leading coefficient.
fn make_primitive(mut p: IPoly) -> IPoly {
    if p.is_empty() {
        return p;
    }
    let mut g = content(&[&p]);
    if p[0].1.is_negative() {
        g = -g;
    }
    if !g.is_one() {
        divide_all(&mut p, &g);
    }
    p
}

struct Reducer<'a> {
    layout: &'a Layout,
    basis: Vec<&'a IPoly>,
    deadline: Option<Instant>,
}

impl<'a> Reducer<'a> {
    fn find(&self, k: &Key) -> Option<&'a IPoly> {
        self.basis.iter().copied().find(|g| self.layout.divides(&g[0].0, k))
    }

    /// Returns `(r, mult)` with `mult·p ≡ r` modulo the basis. If `full`, no term
    /// of `r` is divisible by a basis leading monomial; otherwise only the
    /// leading one.
    fn reduce(&self, mut p: IPoly, full: bool) -> Result<(IPoly, Rational), RingError> {
        let mut r: IPoly = Vec::new();
        let mut mult = Rational::one();
        let mut head = 0;
        let mut steps = 0u64;
        while head < p.len() {
            match self.find(&p[head].0) {
                Some(g) => {
                    let m = key_div(&p[head].0, &g[0].0);
                    let lg = &g[0].1;
                    let c = &p[head].1;
                    let gcd = c.gcd(lg);
                    let a = lg / &gcd;
                    let b = c / &gcd;
                    if !a.is_one() {
                        for t in r.iter_mut() {
                            t.1 *= &a;
                        }
                        mult *= Rational::from_integer(a.clone());
                    }
                    p = lincomb(&p[head + 1..], None, &a, &g[1..], &m, &b);
                    head = 0;
                    steps += 1;
                    if steps.is_multiple_of(16) {
                        if let Some(d) = self.deadline {
                            if Instant::now() > d {
                                return Err(RingError::Timeout);
                            }
                        }
                        let g = content(&[&r, &p]);
                        if !g.is_zero() && !g.is_one() {
                            divide_all(&mut r, &g);
                            divide_all(&mut p, &g);
                            mult /= Rational::from_integer(g);
                        }
                    }
                }
                None if full => {
                    let k = std::mem::take(&mut p[head].0);
                    let c = std::mem::take(&mut p[head].1);
                    r.push((k, c));
                    head += 1;
                }
                None => {
                    r.extend(p.drain(head..));
                    break;
                }
            }
        }
        Ok((r, mult))
    }
}

struct Elem {
    poly: IPoly,
    sugar: u32,
    active: bool,
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Key,
    sugar: u32,
}

struct Engine<'a> {
    layout: &'a Layout,
    elems: Vec<Elem>,
    pairs: Vec<Pair>,
    deadline: Option<Instant>,
}

impl<'a> Engine<'a> {
    fn lm(&self, i: usize) -> &Key {
        &self.elems[i].poly[0].0
    }

    fn check_deadline(&self) -> Result<(), RingError> {
        match self.deadline {
            Some(d) if Instant::now() > d => Err(RingError::Timeout),
            _ => Ok(()),
        }
    }

    fn reduce(&self, p: IPoly, full: bool) -> Result<IPoly, RingError> {
        let red = Reducer {
            layout: self.layout,
            basis: self.elems.iter().filter(|e| e.active).map(|e| &e.poly).collect(),
            deadline: self.deadline,
        };
        Ok(make_primitive(red.reduce(p, full)?.0))
    }

    /// The Gebauer–Möller update after appending element `h`.
    fn update(&mut self, h: usize) {
        let lay = self.layout;
        let lh = self.lm(h).clone();
        let sugar_h = self.elems[h].sugar;
        let deg_h = lay.total_degree(&lh);
        let mut c: Vec<(usize, Key)> = (0..h)
            .filter(|&g| self.elems[g].active)
            .map(|g| (g, lay.lcm(&lh, self.lm(g))))
            .collect();
        let mut d: Vec<(usize, Key)> = Vec::new();
        while let Some((g1, l1)) = c.pop() {
            let keep = lay.coprime(&lh, self.lm(g1))
                || !c.iter().chain(d.iter()).any(|(_, l2)| lay.divides(l2, &l1));
            if keep {
                d.push((g1, l1));
            }
        }
        let new_pairs: Vec<Pair> = d
            .into_iter()
            .filter(|(g, _)| !lay.coprime(&lh, self.lm(*g)))
            .map(|(g, l)| {
                let dl = lay.total_degree(&l);
                let sg = self.elems[g].sugar + dl - lay.total_degree(self.lm(g));
                let sh = sugar_h + dl - deg_h;
                Pair {
                    i: g,
                    j: h,
                    lcm: l,
                    sugar: sg.max(sh),
                }
            })
            .collect();
        let elems = &self.elems;
        self.pairs.retain(|p| {
            !(lay.divides(&lh, &p.lcm)
                && lay.lcm(&elems[p.i].poly[0].0, &lh) != p.lcm
                && lay.lcm(&elems[p.j].poly[0].0, &lh) != p.lcm)
        });
        self.pairs.extend(new_pairs);
        for g in 0..h {
            if self.elems[g].active && lay.divides(&lh, &self.elems[g].poly[0].0) {
                self.elems[g].active = false;
            }
        }
    }

    fn add(&mut self, poly: IPoly, sugar: u32) {
        self.elems.push(Elem {
            poly,
            sugar,
            active: true,
        });
        let h = self.elems.len() - 1;
        self.update(h);
    }

    fn select(&mut self) -> Option<Pair> {
        let idx = (0..self.pairs.len()).min_by(|&a, &b| {
            let (p, q) = (&self.pairs[a], &self.pairs[b]);
            p.sugar
                .cmp(&q.sugar)
                .then_with(|| p.lcm.cmp(&q.lcm))
                .then_with(|| (p.i, p.j).cmp(&(q.i, q.j)))
        })?;
        Some(self.pairs.swap_remove(idx))
    }

    fn spoly(&self, pair: &Pair) -> IPoly {
        let (f, g) = (&self.elems[pair.i].poly, &self.elems[pair.j].poly);
        let mf = key_div(&pair.lcm, &f[0].0);
        let mg = key_div(&pair.lcm, &g[0].0);
        let gcd = f[0].1.gcd(&g[0].1);
        let a = &g[0].1 / &gcd;
        let b = &f[0].1 / &gcd;
        lincomb(&f[1..], Some(&mf), &a, &g[1..], &mg, &b)
    }

    /// Runs to completion; `Ok(false)` means the ideal is the whole ring.
    /// Inputs enter in sugar order alongside the S-pairs.
    fn run(&mut self, inputs: Vec<IPoly>) -> Result<bool, RingError> {
        let mut pending: Vec<(u32, IPoly)> = inputs
            .into_iter()
            .map(|p| (p.iter().map(|t| self.layout.total_degree(&t.0)).max().unwrap_or(0), p))
            .collect();
        // Lowest sugar last, so pop() yields it.
        pending.sort_by(|a, b| b.0.cmp(&a.0).then_with(|| b.1[0].0.cmp(&a.1[0].0)));
        loop {
            self.check_deadline()?;
            let next_pair = self.pairs.iter().map(|p| p.sugar).min();
            let (p, sugar) = match (pending.last(), next_pair) {
                (Some((s, _)), Some(ps)) if *s <= ps => {
                    let (s, p) = pending.pop().expect("nonempty");
                    (p, s)
                }
                (Some(_), None) => {
                    let (s, p) = pending.pop().expect("nonempty");
                    (p, s)
                }
                (_, Some(_)) => {
                    let pair = self.select().expect("nonempty");
                    (self.spoly(&pair), pair.sugar)
                }
                (None, None) => break,
            };
            let h = self.reduce(p, true)?;
            if h.is_empty() {
                continue;
            }
            if self.layout.total_degree(&h[0].0) == 0 {
                return Ok(false);
            }
            self.add(h, sugar);
        }
        Ok(true)
    }

    /// The reduced basis, sorted by leading monomial ascending.
    fn finish(self) -> Result<Vec<IPoly>, RingError> {
        let mut active: Vec<IPoly> = self.elems.into_iter().filter(|e| e.active).map(|e| e.poly).collect();
        active.sort_by(|a, b| a[0].0.cmp(&b[0].0));
        let mut out = Vec::with_capacity(active.len());
        for i in 0..active.len() {
            let red = Reducer {
                layout: self.layout,
                basis: active.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, p)| p).collect(),
                deadline: self.deadline,
            };
            let (r, _) = red.reduce(active[i].clone(), true)?;
            out.push(make_primitive(r));
        }
        Ok(out)
    }
}

/// A reduced Gröbner basis together with the data needed for fast normal forms.
#[derive(Clone)]
pub struct GroebnerBasis {
    generators: Vec<Poly>,
    order: MonomialOrder,
    layout: Arc<Layout>,
    internal: Arc<Vec<IPoly>>,
}

impl std::fmt::Debug for GroebnerBasis {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("GroebnerBasis")
            .field("order", &self.order.describe())
            .field("generators", &self.generators)
            .finish()
    }
}

impl PartialEq for GroebnerBasis {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.generators == other.generators
    }
}

fn all_vars(gens: &[Poly]) -> Vec<Var> {
    let mut vs: Vec<Var> = gens.iter().flat_map(|g| g.vars()).collect();
    vs.sort();
    vs.dedup();
    vs
}

/// Degree-reverse-lexicographic order on the variables of `gens`, by name.
pub fn default_order(gens: &[Poly]) -> MonomialOrder {
    let mut vs = all_vars(gens);
    vs.sort_by(|a, b| crate::poly::natural_name_cmp(*a, *b));
    MonomialOrder::degrevlex(vs)
}

/// The reduced Gröbner basis of `gens` under `order`. Variables outside
/// `order` are placed in a lowest block.
pub fn buchberger(gens: &[Poly], order: &MonomialOrder) -> GroebnerBasis {
    buchberger_until(gens, order, None).expect("no deadline given")
}

/// As [`buchberger`], failing with [`RingError::Timeout`] after `deadline`.
pub fn buchberger_until(
    gens: &[Poly],
    order: &MonomialOrder,
    deadline: Option<Instant>,
) -> Result<GroebnerBasis, RingError> {
    let layout = Arc::new(Layout::new(order, &all_vars(gens)));
    let inputs: Vec<IPoly> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| make_primitive(layout.to_ipoly(g).0))
        .collect();
    let mut eng = Engine {
        layout: &layout,
        elems: Vec::new(),
        pairs: Vec::new(),
        deadline,
    };
    let internal = if eng.run(inputs)? {
        eng.finish()?
    } else {
        vec![vec![(SmallVec::from_elem(0, layout.width), BigInt::one())]]
    };
    let generators = internal
        .iter()
        .map(|p| {
            let lc = Rational::from_integer(p[0].1.clone());
            layout.to_poly(p, &lc)
        })
        .collect();
    Ok(GroebnerBasis {
        generators,
        order: order.clone(),
        layout,
        internal: Arc::new(internal),
    })
}

impl GroebnerBasis {
    /// Monic generators sorted by leading monomial, smallest first.
    pub fn generators(&self) -> &[Poly] {
        &self.generators
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn reduced(&self) -> bool {
        true
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.generators.len() == 1 && self.generators[0].is_one()
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.generators.is_empty()
    }

    /// Variables the basis knows about, in order (largest first).
    pub fn vars(&self) -> &[Var] {
        &self.layout.vars
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.internal.iter().map(|p| self.layout.monomial(&p[0].0)).collect()
    }

    /// Leading monomial of an arbitrary polynomial under this basis's order.
    pub fn leading_monomial(&self, p: &Poly) -> Option<Monomial> {
        if !self.layout.covers(p) {
            let lay = Layout::new(&self.order, &[self.layout.vars.clone(), p.vars()].concat());
            return lay.to_ipoly(p).0.first().map(|t| lay.monomial(&t.0));
        }
        self.layout.to_ipoly(p).0.first().map(|t| self.layout.monomial(&t.0))
    }

    pub fn normal_form(&self, p: &Poly) -> Poly {
        self.normal_form_until(p, None).expect("no deadline given")
    }

    pub fn normal_form_until(&self, p: &Poly, deadline: Option<Instant>) -> Result<Poly, RingError> {
        if p.is_zero() || self.internal.is_empty() {
            return Ok(p.clone());
        }
        if self.is_unit_ideal() {
            return Ok(Poly::zero());
        }
        if !self.layout.covers(p) {
            // Foreign variables go into a lowest block; the basis stays a basis.
            let lay = Layout::new(&self.order, &[self.layout.vars.clone(), p.vars()].concat());
            let internal: Vec<IPoly> = self
                .generators
                .iter()
                .map(|g| make_primitive(lay.to_ipoly(g).0))
                .collect();
            return nf_with(&lay, &internal, p, deadline);
        }
        nf_with(&self.layout, &self.internal, p, deadline)
    }

    pub fn contains(&self, p: &Poly) -> bool {
        self.normal_form(p).is_zero()
    }

    /// Monomials not divisible by any leading monomial, if there are finitely
    /// many; `None` otherwise or if there are more than `limit`.
    pub fn standard_monomials(&self, limit: usize) -> Option<Vec<Monomial>> {
        if self.is_unit_ideal() {
            return Some(Vec::new());
        }
        let lms: Vec<&Key> = self.internal.iter().map(|p| &p[0].0).collect();
        let lay = &self.layout;
        let mut bounds = Vec::with_capacity(lay.vars.len());
        for v in &lay.vars {
            let s = lay.slot[v];
            let pure = lms
                .iter()
                .filter(|k| (0..lay.width).all(|i| !lay.is_exp[i] || i == s || k[i] == 0))
                .map(|k| (-k[s]) as u32)
                .min()?;
            bounds.push(pure);
        }
        let mut out = Vec::new();
        let mut exps = vec![0u32; lay.vars.len()];
        loop {
            let m = Monomial::from_pairs(lay.vars.iter().copied().zip(exps.iter().copied()));
            let k = lay.key(&m);
            if !lms.iter().any(|l| lay.divides(l, &k)) {
                out.push(m);
                if out.len() > limit {
                    return None;
                }
            }
            // Odometer increment.
            let mut i = 0;
            loop {
                if i == exps.len() {
                    out.sort_by(|a, b| a.display_cmp(b));
                    return Some(out);
                }
                exps[i] += 1;
                if exps[i] < bounds[i] {
                    break;
                }
                exps[i] = 0;
                i += 1;
            }
        }
    }

    /// Vector-space dimension of the quotient, if finite.
    pub fn dimension(&self) -> Option<usize> {
        self.standard_monomials(1 << 20).map(|v| v.len())
    }
}

fn nf_with(lay: &Layout, internal: &[IPoly], p: &Poly, deadline: Option<Instant>) -> Result<Poly, RingError> {
    let (ip, scale) = lay.to_ipoly(p);
    let red = Reducer {
        layout: lay,
        basis: internal.iter().collect(),
        deadline,
    };
    let (r, mult) = red.reduce(ip, true)?;
    Ok(lay.to_poly(&r, &(scale * mult)))
}

pub fn normal_form(p: &Poly, gb: &GroebnerBasis) -> Poly {
    gb.normal_form(p)
}

pub fn ideal_contains(gens: &[Poly], p: &Poly) -> bool {
    let mut all = gens.to_vec();
    all.push(p.clone());
    buchberger(gens, &default_order(&all)).contains(p)
}

/// Equality of ideals via reduced Gröbner bases under a common order.
pub fn ideal_equal(a: &[Poly], b: &[Poly]) -> bool {
    let order = default_order(&[a, b].concat());
    buchberger(a, &order) == buchberger(b, &order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse_poly;

    fn p(s: &str) -> Poly {
        parse_poly(s).unwrap()
    }

    fn gb(gens: &[&str]) -> GroebnerBasis {
        let gens: Vec<Poly> = gens.iter().map(|s| p(s)).collect();
        buchberger(&gens, &default_order(&gens))
    }

    #[test]
    fn spec_examples() {
        assert_eq!(gb(&["x^2 - 1", "x - 1"]).generators(), &[p("x - 1")]);
        assert!(gb(&[]).is_zero_ideal());
        assert_eq!(gb(&["2"]).generators(), &[Poly::one()]);
    }

    #[test]
    fn normal_forms() {
        let g = gb(&["x - 1"]);
        assert_eq!(g.normal_form(&p("x^2")), Poly::one());
        assert_eq!(gb(&[]).normal_form(&p("x^2+y")), p("x^2+y"));
        // Foreign variables pass through.
        assert_eq!(g.normal_form(&p("x*zz + 1/2")), p("zz + 1/2"));
    }

    #[test]
    fn membership_and_equality() {
        assert!(ideal_contains(&[p("x")], &p("x*y")));
        assert!(!ideal_contains(&[p("x")], &p("y")));
        assert!(ideal_equal(&[p("x"), p("y")], &[p("y"), p("x+y")]));
        assert!(!ideal_equal(&[p("x^2")], &[p("x")]));
        assert!(ideal_equal(&[p("2*lambda1")], &[p("lambda1")]));
    }

    #[test]
    fn twisted_cubic() {
        // Classic example: the twisted cubic in grevlex x > y > z > w.
        let vars: Vec<Var> = ["tc_x", "tc_y", "tc_z", "tc_w"].iter().map(|s| Var::named(s)).collect();
        let order = MonomialOrder::degrevlex(vars);
        let gens = vec![
            p("tc_x*tc_z - tc_y^2"),
            p("tc_y*tc_w - tc_z^2"),
            p("tc_x*tc_w - tc_y*tc_z"),
        ];
        let g = buchberger(&gens, &order);
        assert_eq!(g.generators().len(), 3);
        assert!(g.contains(&p("tc_x*tc_z^2 - tc_y^2*tc_z")));
        assert!(!g.contains(&p("tc_x")));
    }

    #[test]
    fn elimination_order() {
        // Eliminating t from x = t^2, y = t^3 gives y^2 - x^3.
        let t = Var::named("el_t");
        let x = Var::named("el_x");
        let y = Var::named("el_y");
        let order = MonomialOrder::blocks(vec![vec![t], vec![x, y]]);
        let g = buchberger(&[p("el_x - el_t^2"), p("el_y - el_t^3")], &order);
        let elim: Vec<&Poly> = g.generators().iter().filter(|q| q.degree_in(t) == Some(0)).collect();
        assert_eq!(elim, vec![&p("el_x^3 - el_y^2")]);
    }

    #[test]
    fn staircase_dimension() {
        let g = gb(&["x^3", "y^2", "x*y"]);
        assert_eq!(g.dimension(), Some(4));
        assert_eq!(gb(&["x*y"]).dimension(), None);
    }

    #[test]
    fn deadline_in_the_past_times_out() {
        let gens = vec![p("x^3 - y*z"), p("y^3 - x*z"), p("z^3 - x*y")];
        let r = buchberger_until(&gens, &default_order(&gens), Instant::now().checked_sub(std::time::Duration::from_secs(1)));
        assert!(matches!(r, Err(RingError::Timeout)));
    }
}
