use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use cgring::agmod::GroupAlgebra;
use cgring::oracle::{eval_ring_elem, eval_word, EvalPoint};
use cgring::poly::chebyshev_var;
use cgring::{chebyshev_like, parse_poly, parse_word, Monomial, Poly, Rational, Var, Word};

fn names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("g{}", i)).collect()
}

fn word(n: i64, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec((1..=n, prop::bool::ANY), 0..=max_len).prop_map(|letters| {
        let l: Vec<i64> = letters.into_iter().map(|(g, neg)| if neg { -g } else { g }).collect();
        Word::from_letters(&l)
    })
}

fn poly() -> impl Strategy<Value = Poly> {
    let vars = [Var::named("x"), Var::named("y"), Var::named("z")];
    prop::collection::vec((-5i64..=5, 0u32..3, 0u32..3, 0u32..3), 0..6).prop_map(move |terms| {
        terms
            .into_iter()
            .map(|(c, a, b, d)| {
                Poly::term(
                    Rational::from_integer(c.into()),
                    Monomial::from_pairs([(vars[0], a), (vars[1], b), (vars[2], d)]),
                )
            })
            .sum()
    })
}

fn ring_poly(n: usize) -> impl Strategy<Value = Poly> {
    let alg = GroupAlgebra::new(n);
    let vars = alg.ring().vars();
    let k = vars.len();
    prop::collection::vec((-3i64..=3, prop::collection::vec(0u32..3, k)), 0..5).prop_map(move |terms| {
        terms
            .into_iter()
            .map(|(c, e)| {
                Poly::term(
                    Rational::from_integer(c.into()),
                    Monomial::from_pairs(vars.iter().copied().zip(e)),
                )
            })
            .sum()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn words_form_a_group(a in word(3, 8), b in word(3, 8), c in word(3, 8)) {
        prop_assert_eq!(a.multiply(&b).multiply(&c), a.multiply(&b.multiply(&c)));
        prop_assert!(a.multiply(&a.inverse()).is_identity());
        prop_assert_eq!(a.inverse().inverse(), a.clone());
        prop_assert_eq!(a.multiply(&b).inverse(), b.inverse().multiply(&a.inverse()));
        for i in 1..=3 {
            prop_assert_eq!(a.multiply(&b).exponent_sum(i), a.exponent_sum(i) + b.exponent_sum(i));
        }
    }

    #[test]
    fn words_are_freely_reduced(a in word(3, 10)) {
        let letters: Vec<i64> = a.letters().collect();
        prop_assert!(letters.windows(2).all(|p| p[0] != -p[1]));
        prop_assert_eq!(letters.len(), a.len());
    }

    #[test]
    fn word_render_roundtrip(a in word(3, 10)) {
        prop_assert_eq!(parse_word(&a.to_string(), &names(3)).unwrap(), a);
    }

    #[test]
    fn powers_add(a in word(2, 4), m in -4i64..=4, k in -4i64..=4) {
        prop_assert_eq!(a.pow(m).multiply(&a.pow(k)), a.pow(m + k));
    }

    #[test]
    fn polynomial_ring_axioms(p in poly(), q in poly(), r in poly()) {
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert!((&p - &p).is_zero());
        prop_assert_eq!(&p * &Poly::one(), p.clone());
    }

    #[test]
    fn polynomial_render_roundtrip(p in poly()) {
        prop_assert_eq!(parse_poly(&p.to_string()).unwrap(), p);
    }

    #[test]
    fn polynomial_power_matches_repeated_product(p in poly(), k in 0u32..4) {
        let mut acc = Poly::one();
        for _ in 0..k {
            acc = &acc * &p;
        }
        prop_assert_eq!(p.pow(k), acc);
    }

    #[test]
    fn chebyshev_recurrence_and_symmetry(n in -60i64..=60) {
        let x = Poly::var(chebyshev_var());
        let p: Poly = chebyshev_like(n);
        prop_assert_eq!(&x * &p * Poly::from_i64(2), chebyshev_like::<Rational>(n - 1) + chebyshev_like::<Rational>(n + 1));
        prop_assert_eq!(p, -chebyshev_like::<Rational>(-n));
    }

    #[test]
    fn normal_form_is_idempotent_and_linear(p in ring_poly(3), q in ring_poly(3)) {
        let alg = GroupAlgebra::new(3);
        let ring = alg.ring();
        let np = ring.reduce(&p);
        prop_assert_eq!(ring.reduce(&np), np.clone());
        prop_assert_eq!(ring.reduce(&(&p + &q)), &np + &ring.reduce(&q));
        prop_assert_eq!(ring.reduce(&(&p * &q)), ring.mul(&np, &ring.reduce(&q)));
    }

    #[test]
    fn bar_is_a_class_function(a in word(3, 6), b in word(3, 6)) {
        let alg = GroupAlgebra::new(3);
        prop_assert_eq!(alg.bar_word(&a.multiply(&b)).unwrap(), alg.bar_word(&b.multiply(&a)).unwrap());
        prop_assert_eq!(alg.bar_word(&a.inverse()).unwrap(), alg.bar_word(&a).unwrap());
    }

    #[test]
    fn bar_matches_quaternion_model(a in word(3, 8), seed in any::<u64>()) {
        let alg = GroupAlgebra::new(3);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let pt = EvalPoint::random(&mut rng, 3, 4);
        let q = eval_word(&a, &pt).unwrap();
        prop_assert_eq!(q.mu, eval_ring_elem(&alg.bar_word(&a).unwrap(), &pt).unwrap());
    }

    #[test]
    fn cayley_points_have_unit_norm(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let pt = EvalPoint::random(&mut rng, 2, 6);
        for q in &pt.points {
            prop_assert_eq!(q.norm(), Rational::from_integer(1.into()));
        }
    }
}
