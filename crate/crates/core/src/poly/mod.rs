//! Sparse multivariate polynomials and the recurrence family P_n.

mod monomial;
mod parse;
mod polynomial;
mod vars;

pub use monomial::Monomial;
pub use parse::{parse_poly, ParsePolyError};
pub use polynomial::{Accumulator, Polynomial};
pub use vars::Var;

use crate::scalar::Scalar;

/// Orders variables by name, digit runs compared numerically (`m2 < m10`).
pub(crate) fn natural_name_cmp(a: Var, b: Var) -> std::cmp::Ordering {
    vars::natural_cmp(&a.name(), &b.name()).then(a.cmp(&b))
}

/// The distinguished variable of [`chebyshev_like`].
pub fn chebyshev_var() -> Var {
    Var::named("x")
}

/// P_n in the variable `x`, for any integer `n`.
///
/// P_0 = 0, P_1 = 1 and 2x P_n = P_{n-1} + P_{n+1}.
pub fn chebyshev_like<C: Scalar>(n: i64) -> Polynomial<C> {
    chebyshev_at(n, &Polynomial::var(chebyshev_var()))
}

/// P_n evaluated at an arbitrary polynomial, by running the recurrence on `p`.
pub fn chebyshev_at<C: Scalar>(n: i64, p: &Polynomial<C>) -> Polynomial<C> {
    chebyshev_pair_at(n, p).1
}

/// `(P_{n-1}(p), P_n(p))`, computed together since the recurrence yields both.
pub fn chebyshev_pair_at<C: Scalar>(n: i64, p: &Polynomial<C>) -> (Polynomial<C>, Polynomial<C>) {
    chebyshev_pair_with(n, p, |q| q)
}

/// As [`chebyshev_pair_at`], applying `reduce` after every step (for quotient rings).
pub fn chebyshev_pair_with<C: Scalar, F: Fn(Polynomial<C>) -> Polynomial<C>>(
    n: i64,
    p: &Polynomial<C>,
    reduce: F,
) -> (Polynomial<C>, Polynomial<C>) {
    let two_p = p.scale(&C::from_i64(2));
    if n >= 1 {
        // (P_{k-1}, P_k) starting at k = 1.
        let (mut prev, mut cur) = (Polynomial::zero(), Polynomial::one());
        for _ in 1..n {
            let next = reduce(&(&two_p * &cur) - &prev);
            prev = std::mem::replace(&mut cur, next);
        }
        (prev, cur)
    } else {
        // Walk downwards: P_{k-1} = 2x P_k - P_{k+1}, starting from (P_0, P_1).
        let (mut cur, mut above) = (Polynomial::zero(), Polynomial::one());
        let mut k = 0;
        loop {
            let below = reduce(&(&two_p * &cur) - &above);
            if k == n {
                return (below, cur);
            }
            above = std::mem::replace(&mut cur, below);
            k -= 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Poly;

    #[test]
    fn small_values() {
        let x = Poly::var(chebyshev_var());
        assert_eq!(chebyshev_like::<crate::Rational>(0), Poly::zero());
        assert_eq!(chebyshev_like::<crate::Rational>(1), Poly::one());
        assert_eq!(chebyshev_like::<crate::Rational>(-1), -Poly::one());
        assert_eq!(chebyshev_like::<crate::Rational>(2), x.scale(&crate::rat(2, 1)));
        assert_eq!(
            chebyshev_like::<crate::Rational>(3),
            x.pow(2).scale(&crate::rat(4, 1)) - Poly::one()
        );
    }

    #[test]
    fn pairs_are_consecutive() {
        let x = Poly::var(chebyshev_var());
        for n in -6..8 {
            let (a, b) = chebyshev_pair_at(n, &x);
            assert_eq!(a, chebyshev_like(n - 1), "n={}", n);
            assert_eq!(b, chebyshev_like(n), "n={}", n);
        }
    }

    #[test]
    fn float_instantiation() {
        let p: Polynomial<f64> = chebyshev_like(4);
        // P_4(x) = 8x^3 - 4x
        assert_eq!(p.evaluate(|_| Some(0.5)), Some(-1.0));
    }
}
