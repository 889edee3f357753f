//! Rational scalars.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

pub fn frac(p: i64, q: i64) -> Scalar {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn one() -> Scalar {
    Scalar::one()
}

pub fn factorial(n: u64) -> Scalar {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= k;
    }
    BigRational::from_integer(acc)
}

/// `m (m-1) ... (m-b+1)` for an integer `m`.
pub fn falling(m: i64, b: u64) -> Scalar {
    let mut acc = BigInt::one();
    for s in 0..b as i64 {
        acc *= m - s;
    }
    BigRational::from_integer(acc)
}

/// `p/q`, or just `p` for integers.
pub fn fmt_scalar(c: &Scalar) -> String {
    c.to_string()
}

pub fn parse_scalar(s: &str) -> Option<Scalar> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                return None;
            }
            Some(BigRational::new(p, q))
        }
        None => Some(BigRational::from_integer(s.parse().ok()?)),
    }
}

/// Integer value when the scalar is an integer that fits in i64.
pub fn as_i64(c: &Scalar) -> Option<i64> {
    if c.is_integer() {
        c.to_integer().to_i64()
    } else {
        None
    }
}

pub fn abs(c: &Scalar) -> Scalar {
    c.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        assert_eq!(parse_scalar("6/4").unwrap(), frac(3, 2));
        assert_eq!(fmt_scalar(&frac(3, 2)), "3/2");
        assert_eq!(fmt_scalar(&int(-5)), "-5");
        assert!(parse_scalar("1/0").is_none());
    }

    #[test]
    fn falling_factorials() {
        assert_eq!(falling(5, 2), int(20));
        assert_eq!(falling(1, 2), int(0));
        assert_eq!(falling(7, 0), int(1));
        assert_eq!(factorial(5), int(120));
    }
}
