//! Exact rational scalars.
//!
//! A [`Scalar`] is an arbitrary-precision rational, always stored in lowest
//! terms with a positive denominator. All arithmetic in this crate is exact.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Scalar {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn one() -> Scalar {
    Scalar::one()
}

/// True iff `x` is an integer multiple of `step` (`step` > 0).
pub fn is_multiple_of(x: &Scalar, step: &Scalar) -> bool {
    (x / step).is_integer()
}

pub fn floor_div(x: &Scalar, step: &Scalar) -> BigInt {
    (x / step).floor().to_integer()
}

pub fn ceil_div(x: &Scalar, step: &Scalar) -> BigInt {
    (x / step).ceil().to_integer()
}

/// Greatest common divisor of a slice of integers, zero for an empty slice.
pub fn gcd_all<'a>(values: impl IntoIterator<Item = &'a BigInt>) -> BigInt {
    let mut g = BigInt::zero();
    for v in values {
        g = g.gcd(v);
    }
    g
}

/// Scales a rational vector to a primitive integer vector: clears denominators
/// and divides by the gcd of the entries. The zero vector stays zero.
pub fn primitive_integer(v: &[Scalar]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for x in v {
        lcm = lcm.lcm(x.denom());
    }
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let g = gcd_all(ints.iter());
    if g.is_zero() {
        return ints;
    }
    ints.into_iter().map(|x| x / &g).collect()
}

/// Same as [`primitive_integer`] but returns rationals.
pub fn primitive_scaled(v: &[Scalar]) -> Vec<Scalar> {
    primitive_integer(v)
        .into_iter()
        .map(BigRational::from_integer)
        .collect()
}

/// The positive factor `c` with `c * v` primitive integer (`v` nonzero).
pub fn primitive_factor(v: &[Scalar]) -> Scalar {
    let mut lcm = BigInt::one();
    for x in v {
        lcm = lcm.lcm(x.denom());
    }
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let g = gcd_all(ints.iter());
    assert!(!g.is_zero(), "primitive_factor of zero vector");
    BigRational::new(lcm, g.abs())
}
