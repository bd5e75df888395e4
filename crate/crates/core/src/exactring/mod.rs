//! Exact coefficient arithmetic: rationals, Laurent polynomials in `q`, and
//! the rational function field `Q(q)`. Nothing here ever rounds.

mod laurent;
mod ratfunc;

pub(crate) use laurent::forward_owned;
pub use laurent::{pretty, LaurentPoly};
pub use num_bigint::BigInt;
pub use num_rational::BigRational;
pub use ratfunc::RatFunc;

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Shorthand for `n/d`.
pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}
