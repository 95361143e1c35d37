//! Exact arithmetic substrate.

mod cyclo;
mod poly;
mod ratfunc;
mod snf;

pub use cyclo::{divisors, FactoredCyclo, RootOfUnity, DEFAULT_DEGREE_CAP};
pub(crate) use cyclo::sign;
pub use poly::{poly_gcd, UniPoly};
pub use ratfunc::RationalFunction;
pub use snf::{elementary_divisors, integer_rank, lattice_index, snf_index};

/// Arbitrary-precision signed integer.
pub type Integer = num_bigint::BigInt;
/// Arbitrary-precision rational in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

/// Integer as a rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// `num / den` as a reduced rational. Panics on a zero denominator.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}

/// Non-negative gcd of a slice of machine integers (0 for the empty slice).
pub fn gcd_slice(xs: &[i64]) -> i64 {
    xs.iter().fold(0i64, |g, &x| num_integer::gcd(g, x))
}
