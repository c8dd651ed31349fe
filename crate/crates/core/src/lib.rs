//! Commutative group rings of finitely presented groups.
//!
//! The ring K[F_n] is modelled as a quotient of a polynomial ring in the
//! symbols `lambda_i`, `m_ij`, `w_ijk`; the module A over it is [`agmod::AElem`].
//! Obstruction ideals live in [`ideals`], the quaternion evaluation model in
//! [`oracle`], and the two certificate drivers in [`casestudies`].

pub mod agmod;
pub mod ideals;
pub mod oracle;
pub mod casestudies;
pub mod poly;
pub mod ring;
pub mod words;
pub mod scalar;

pub use poly::{chebyshev_like, parse_poly, Monomial, Polynomial, Var};
pub use words::{parse_presentation, parse_word, Presentation, Word};
pub use scalar::{rat, ExactField, Field, Scalar};

/// Exact rational numbers.
pub type Rational = num_rational::BigRational;
/// Polynomials with exact rational coefficients.
pub type Poly = Polynomial<Rational>;
