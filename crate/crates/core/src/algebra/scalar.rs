use std::fmt::{Debug, Display};
use std::ops::Neg;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, One, Signed, Zero};

/// Coefficient ring for the polynomial and series types.
///
/// Every arithmetic routine in [`crate::algebra`] is written against this
/// trait. The engine itself only instantiates it with [`BigRational`]; the
/// division routines assume exact field arithmetic.
pub trait Scalar: Clone + PartialEq + Debug + Display + Num + Neg<Output = Self> + FromPrimitive {}

impl<T> Scalar for T where T: Clone + PartialEq + Debug + Display + Num + Neg<Output = T> + FromPrimitive {}

pub fn int<C: Scalar>(n: i64) -> C {
    C::from_i64(n).expect("scalar type represents small integers")
}

/// `n / d` as an exact rational.
pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn is_integer(q: &BigRational) -> bool {
    q.denom().is_one()
}

pub fn floor(q: &BigRational) -> BigInt {
    q.numer().div_floor(q.denom())
}

pub fn ceil(q: &BigRational) -> BigInt {
    -((-q.numer()).div_floor(q.denom()))
}

/// Fractional part in `[0, 1)`.
pub fn frac(q: &BigRational) -> BigRational {
    q - BigRational::from_integer(floor(q))
}

pub fn is_nonneg_integer(q: &BigRational) -> bool {
    is_integer(q) && !q.is_negative()
}

pub fn is_negative_integer(q: &BigRational) -> bool {
    is_integer(q) && q.is_negative()
}

/// Parse `"p/q"`, `"p"` or `"-p/q"`; the result is reduced.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(BigRational::new(n, d))
        }
        None => s.parse::<BigInt>().ok().map(BigRational::from_integer),
    }
}

/// Least common multiple of the denominators, i.e. the smallest positive
/// integer clearing every entry.
pub fn common_denominator(v: &[BigRational]) -> BigInt {
    v.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()))
}

pub fn dot_int(beta: &[BigRational], xi: &[i64]) -> BigRational {
    debug_assert_eq!(beta.len(), xi.len());
    beta.iter().zip(xi).filter(|(_, &w)| w != 0).fold(BigRational::zero(), |acc, (b, &w)| acc + b * rat_int(w))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn floor_ceil_frac_on_negatives() {
        let q = rat(-3, 2);
        assert_eq!(floor(&q), BigInt::from(-2));
        assert_eq!(ceil(&q), BigInt::from(-1));
        assert_eq!(frac(&q), rat(1, 2));
        assert_eq!(frac(&rat_int(-4)), rat_int(0));
    }

    #[test]
    fn parse_and_display_round_trip() {
        for s in ["0", "7", "-3/2", "5/10"] {
            let q = parse_rational(s).unwrap();
            assert_eq!(parse_rational(&q.to_string()).unwrap(), q);
        }
        assert_eq!(rat(5, 10).to_string(), "1/2");
        assert_eq!(rat_int(-3).to_string(), "-3");
        assert!(parse_rational("1/0").is_none());
        assert!(parse_rational("x").is_none());
    }
}
