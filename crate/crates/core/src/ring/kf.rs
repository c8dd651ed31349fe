//! The ring R_n: symbols `lambda_i`, `m_ij` (i<j), `w_ijk` (i<j<k) modulo the
//! relations R3 and R4. Symmetry of `m` and antisymmetry of `w` are built into
//! the choice of symbols, and `m_ii` is rewritten to `1 - lambda_i^2`.

use super::{MonomialOrder, QuotientRing, RingError};
use crate::poly::Var;
use crate::Poly;

fn sym(prefix: &str, idx: &[usize]) -> String {
    if idx.iter().all(|&i| i < 10) {
        let s: String = idx.iter().map(|i| i.to_string()).collect();
        format!("{}{}", prefix, s)
    } else {
        let s: Vec<String> = idx.iter().map(|i| i.to_string()).collect();
        format!("{}_{}", prefix, s.join("_"))
    }
}

pub fn lambda(i: usize) -> Var {
    assert!(i >= 1);
    Var::named(&sym("lambda", &[i]))
}

/// The variable `m_ij` for `i < j`.
pub fn m_var(i: usize, j: usize) -> Var {
    assert!(1 <= i && i < j);
    Var::named(&sym("m", &[i, j]))
}

/// The variable `w_ijk` for `i < j < k`.
pub fn w_var(i: usize, j: usize, k: usize) -> Var {
    assert!(1 <= i && i < j && j < k);
    Var::named(&sym("w", &[i, j, k]))
}

/// `m_{min,max}`, or `1 - lambda_i^2` on the diagonal.
pub fn canonical_m(i: usize, j: usize) -> Poly {
    match i.cmp(&j) {
        std::cmp::Ordering::Less => Poly::var(m_var(i, j)),
        std::cmp::Ordering::Greater => Poly::var(m_var(j, i)),
        std::cmp::Ordering::Equal => Poly::one() - Poly::var(lambda(i)).pow(2),
    }
}

/// `(sign, w_sorted)`; `(0, 0)` when two indices coincide.
pub fn canonical_w(i: usize, j: usize, k: usize) -> (i32, Poly) {
    if i == j || j == k || i == k {
        return (0, Poly::zero());
    }
    let mut idx = [i, j, k];
    let mut sign = 1;
    for a in 0..3 {
        for b in 0..2 - a {
            if idx[b] > idx[b + 1] {
                idx.swap(b, b + 1);
                sign = -sign;
            }
        }
    }
    (sign, Poly::var(w_var(idx[0], idx[1], idx[2])))
}

/// `w_ijk` as a signed polynomial.
pub fn w_poly(i: usize, j: usize, k: usize) -> Poly {
    let (s, p) = canonical_w(i, j, k);
    match s {
        1 => p,
        -1 => -p,
        _ => Poly::zero(),
    }
}

/// R3 for an arbitrary index tuple:
/// `w_jkl m_is − w_ikl m_js + w_ijl m_ks − w_ijk m_ls`.
pub fn r3_raw(i: usize, j: usize, k: usize, l: usize, s: usize) -> Poly {
    w_poly(j, k, l) * canonical_m(i, s) - w_poly(i, k, l) * canonical_m(j, s) + w_poly(i, j, l) * canonical_m(k, s)
        - w_poly(i, j, k) * canonical_m(l, s)
}

/// R4 for an arbitrary index tuple: `w_ijk w_lst − det[m_pq]` with rows
/// `p ∈ (i,j,k)` and columns `q ∈ (l,s,t)`.
pub fn r4_raw(i: usize, j: usize, k: usize, l: usize, s: usize, t: usize) -> Poly {
    let rows = [i, j, k];
    let cols = [l, s, t];
    let m = |a: usize, b: usize| canonical_m(rows[a], cols[b]);
    let det = m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0))
        + m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
    w_poly(i, j, k) * w_poly(l, s, t) - det
}

fn triples(n: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            for k in j + 1..=n {
                out.push((i, j, k));
            }
        }
    }
    out
}

/// The monomial order used for R_n: the `w` symbols in a top block, then the
/// `m` and `lambda` symbols.
pub fn kf_order(n: usize) -> MonomialOrder {
    let ws: Vec<Var> = triples(n).into_iter().map(|(i, j, k)| w_var(i, j, k)).collect();
    let mut rest = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            rest.push(m_var(i, j));
        }
    }
    rest.extend((1..=n).map(lambda));
    MonomialOrder::blocks(vec![ws, rest])
}

/// The canonical R3 and R4 generators for `n` generators.
pub fn kf_relations(n: usize) -> Vec<Poly> {
    let mut rels = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            for k in j + 1..=n {
                for l in k + 1..=n {
                    for s in 1..=n {
                        rels.push(r3_raw(i, j, k, l, s));
                    }
                }
            }
        }
    }
    let ts = triples(n);
    for (a, &(i, j, k)) in ts.iter().enumerate() {
        for &(l, s, t) in &ts[a..] {
            rels.push(r4_raw(i, j, k, l, s, t));
        }
    }
    rels.retain(|r| !r.is_zero());
    rels
}

/// R_n ≅ K[F_n].
pub fn build_kf(n: usize) -> Result<QuotientRing, RingError> {
    if n < 1 {
        return Err(RingError::InvalidArgument("at least one generator is required".into()));
    }
    QuotientRing::new(kf_order(n), kf_relations(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse_poly;

    fn p(s: &str) -> Poly {
        parse_poly(s).unwrap()
    }

    #[test]
    fn canonical_symbols() {
        assert_eq!(canonical_m(2, 1), p("m12"));
        assert_eq!(canonical_m(1, 1), p("1 - lambda1^2"));
        assert_eq!(canonical_m(1, 3), p("m13"));
        assert_eq!(canonical_w(1, 2, 3), (1, p("w123")));
        assert_eq!(canonical_w(3, 2, 1), (-1, p("w123")));
        assert_eq!(canonical_w(1, 1, 2), (0, Poly::zero()));
        assert_eq!(canonical_w(3, 1, 2), (1, p("w123")));
        assert_eq!(canonical_w(2, 1, 3), (-1, p("w123")));
    }

    #[test]
    fn small_rings_have_no_relations() {
        let r1 = build_kf(1).unwrap();
        assert!(r1.relations().is_empty());
        assert_eq!(r1.vars(), vec![lambda(1)]);
        let r2 = build_kf(2).unwrap();
        assert!(r2.relations().is_empty());
        assert_eq!(r2.vars().len(), 3);
        assert!(build_kf(0).is_err());
    }

    #[test]
    fn three_generators_single_relation() {
        let r = build_kf(3).unwrap();
        assert_eq!(r.vars().len(), 7);
        assert_eq!(r.relations().len(), 1);
        let nf = r.reduce(&p("w123^2"));
        let det = -r4_raw(1, 2, 3, 1, 2, 3) + p("w123^2");
        assert_eq!(nf, det);
        assert_eq!(nf.degree_in(w_var(1, 2, 3)), Some(0));
    }

    #[test]
    fn raw_r3_instances_vanish_for_three_generators() {
        let r = build_kf(3).unwrap();
        for i in 1..=3 {
            for j in 1..=3 {
                for k in 1..=3 {
                    for l in 1..=3 {
                        for s in 1..=3 {
                            assert!(r.is_zero(&r3_raw(i, j, k, l, s)));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn raw_r4_instances_reduce_to_zero_for_three_generators() {
        let r = build_kf(3).unwrap();
        for t in (0..729).map(|x| (x / 243 % 3 + 1, x / 81 % 3 + 1, x / 27 % 3 + 1, x / 9 % 3 + 1, x / 3 % 3 + 1, x % 3 + 1)) {
            assert!(r.is_zero(&r4_raw(t.0, t.1, t.2, t.3, t.4, t.5)), "{:?}", t);
        }
    }
}
