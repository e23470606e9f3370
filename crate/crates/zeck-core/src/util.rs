//! Numeric helpers shared across modules.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

/// Converts `num / den` to the nearest representable `f64` without ever
/// materializing either operand as a float. Plain `numer.to_f64() /
/// denom.to_f64()` fails once an operand exceeds the f64 range, which
/// happens around n = 1800 for Fibonacci-sized counts.
pub fn big_ratio_to_f64(num: &BigInt, den: &BigInt) -> f64 {
    assert!(!den.is_zero(), "zero denominator");
    if num.is_zero() {
        return 0.0;
    }
    let negative = num.is_negative() != den.is_negative();
    let num = num.abs().to_biguint().unwrap();
    let den = den.abs().to_biguint().unwrap();

    // Scale so the integer quotient carries ~64 significant bits, divide
    // exactly, then undo the scaling in the exponent.
    let shift: i64 = 64 + den.bits() as i64 - num.bits() as i64;
    let q = if shift >= 0 {
        (num << shift as u64) / den
    } else {
        num / (den << (-shift) as u64)
    };
    let v = libm::ldexp(q.to_f64().expect("quotient fits after scaling"), -shift as i32);
    if negative {
        -v
    } else {
        v
    }
}

pub fn rational_to_f64(r: &BigRational) -> f64 {
    big_ratio_to_f64(r.numer(), r.denom())
}

pub fn uint_ratio_to_f64(num: &BigUint, den: &BigUint) -> f64 {
    big_ratio_to_f64(&BigInt::from(num.clone()), &BigInt::from(den.clone()))
}

/// Standard normal CDF, accurate to well under 1e-12 in absolute terms.
pub fn normal_cdf(z: f64) -> f64 {
    0.5 * libm::erfc(-z / std::f64::consts::SQRT_2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_traits::One;

    #[test]
    fn small_ratios_are_exact() {
        let r = big_ratio_to_f64(&BigInt::from(1), &BigInt::from(4));
        assert_eq!(r, 0.25);
        assert_eq!(big_ratio_to_f64(&BigInt::from(-3), &BigInt::from(2)), -1.5);
        assert_eq!(big_ratio_to_f64(&BigInt::from(0), &BigInt::from(7)), 0.0);
        assert_eq!(big_ratio_to_f64(&BigInt::from(10), &BigInt::from(-4)), -2.5);
    }

    #[test]
    fn huge_operands_survive() {
        // ratio of consecutive huge Fibonacci-like values: both operands far
        // beyond f64 range, quotient near the golden ratio
        let mut a = BigInt::one();
        let mut b = BigInt::from(2);
        for _ in 0..3000 {
            let c = &a + &b;
            a = b;
            b = c;
        }
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        assert!((big_ratio_to_f64(&b, &a) - phi).abs() < 1e-14);
    }

    #[test]
    fn normal_cdf_reference_values() {
        assert!((normal_cdf(0.0) - 0.5).abs() < 1e-15);
        // Phi(1) from the standard tabulation
        assert!((normal_cdf(1.0) - 0.841344746068543).abs() < 1e-12);
        assert!((normal_cdf(-1.0) - 0.158655253931457).abs() < 1e-12);
        assert!((normal_cdf(8.0) - 1.0).abs() < 1e-14);
        assert!(normal_cdf(-40.0) >= 0.0);
    }
}
