//! Exact arithmetic: rationals, sparse polynomials, rational functions,
//! truncated multivariate series and Laurent expansion in `1/N`.

pub mod laurent;
pub mod parse;
pub mod poly;
pub mod ratfun;
pub mod series;

/// Arbitrary-precision rational; always normalized with a positive denominator.
pub type Rational = num_rational::BigRational;

pub use laurent::{laurent_expand, LaurentInN};
pub use parse::{parse_ratfun, parse_ratfun_auto};
pub use poly::{Monomial, SparsePoly, VarSet, SLOT_A, SLOT_B, SLOT_N};
pub use ratfun::{ratfun_eq, sum_is_zero, RationalFunction};
pub use series::{series_divide_by_difference, TruncatedSeries};

/// Rational from a pair of machine integers.
pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// Integer as a rational.
pub fn qi(n: i64) -> Rational {
    Rational::from_integer(n.into())
}
