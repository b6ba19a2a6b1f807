//! Exact scalars: big integers and rationals (from `num`), cyclotomic
//! integers, and the quadratic field `Q[√5]`.

mod cyclotomic;
pub mod linalg;
pub mod poly;
mod quadratic;

pub use cyclotomic::{cyclo_from_power_sums, cyclotomic_polynomial, totient, CyclotomicInt, CyclotomicRing};
pub use num_bigint::BigInt;
pub use num_rational::BigRational;
pub use quadratic::{golden_ratio, quad_add, quad_mul, QuadSurd};

/// Rational from an integer.
pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Rational `n/d`.
pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}
