use cgring::agmod::GroupAlgebra;
use cgring::casestudies::{boyer_certificate, sw_verify, BoyerInstance, SwInstance};
use cgring::ideals::{
    abelianization_kernel_generators, bullet_generators, hashhash_generators, normally_generates_check,
    quotient_ring_of_presentation, Verdict,
};
use cgring::{parse_poly, parse_presentation, parse_word, Poly, Word};

fn p(s: &str) -> Poly {
    parse_poly(s).unwrap()
}

fn w(s: &str) -> Word {
    let names: Vec<String> = (1..=3).map(|i| format!("g{}", i)).collect();
    parse_word(s, &names).unwrap()
}

#[test]
fn free_group_rings() {
    let two = quotient_ring_of_presentation(&parse_presentation("<g1,g2|>").unwrap()).unwrap();
    assert_eq!(two.vars().len(), 3);
    assert!(two.relations().is_empty());
    let three = quotient_ring_of_presentation(&parse_presentation("<g1,g2,g3|>").unwrap()).unwrap();
    assert_eq!(three.vars().len(), 7);
    assert_eq!(three.relations().len(), 1);
}

#[test]
fn bar_values() {
    let alg = GroupAlgebra::new(2);
    assert_eq!(alg.bar_word(&w("g1")).unwrap(), p("lambda1"));
    assert_eq!(alg.bar_word(&w("g1*g2")).unwrap(), p("lambda1*lambda2 - m12"));
    assert_eq!(alg.bar_word(&w("g2*g1")).unwrap(), p("lambda1*lambda2 - m12"));
    let ab = p("lambda1*lambda2 - m12");
    let expected = Poly::from_i64(2) * &ab * &ab - Poly::from_i64(4) * p("lambda1*lambda2") * &ab
        + p("2*lambda1^2 + 2*lambda2^2 - 1");
    assert_eq!(alg.bar_word(&w("g1*g2*g1^-1*g2^-1")).unwrap(), alg.reduce(&expected));
}

#[test]
fn products_in_a() {
    let alg = GroupAlgebra::new(3);
    let (v1, v2, v3) = (alg.v(1), alg.v(2), alg.v(3));
    assert_eq!(alg.dot(&v1, &v1), p("1 - lambda1^2"));
    assert!(alg.dot(&v1, &alg.b(1, 2)).is_zero());
    assert_eq!(alg.dot(&alg.b(1, 2), &alg.b(1, 2)), p("(1 - lambda1^2)*(1 - lambda2^2) - m12^2"));
    assert_eq!(alg.triple(&v1, &v2, &v3), p("w123"));
    assert_eq!(alg.triple(&v2, &v1, &v3), p("-w123"));
    assert!(alg.triple(&v1, &v2, &v1).is_zero());
}

#[test]
fn ideal_examples() {
    assert_eq!(bullet_generators(&[w("g1")], 1).generators, vec![p("1 - lambda1")]);
    assert!(hashhash_generators(&[], 2).is_zero());
    assert_eq!(
        abelianization_kernel_generators(2).generators,
        vec![p("(1 - lambda1^2)*(1 - lambda2^2) - m12^2")]
    );
    let c = parse_presentation("<g1,g2|g1^2,g2^3>").unwrap();
    assert_eq!(normally_generates_check(&c, &[w("g1*g2").pow(2)], false), Verdict::CertifiedNo);
}

#[test]
fn boyer_g1g2() {
    let cert = boyer_certificate(&BoyerInstance::new(2, 3, 2, w("g1*g2")).unwrap()).unwrap();
    // P_2(mu1) = 2 mu1 forces mu1 = 0 in E.
    assert_eq!(cert.theta_image, "-s1*s2*x");
    assert!(cert.degree >= 1);
    assert_eq!(cert.unit_certificate.product, "1");
    let again = boyer_certificate(&BoyerInstance::new(2, 3, 2, w("g1*g2")).unwrap()).unwrap();
    assert_eq!(cert, again);
}

#[test]
fn sw_g1g2g3() {
    let rep = sw_verify(&SwInstance::new(2, 3, 5, w("g1*g2*g3")).unwrap(), None).unwrap();
    assert!(rep.checks_passed(), "{:?}", rep.checks);
    assert!(rep.properness.is_none());
}
