//! Binary fixed-point reals with a few hundred bits of precision, enough to
//! evaluate `(n/4) cot(pi/n)` to fifty or more decimal digits without a
//! symbolic algebra system.

use std::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::sexagesimal::Rational;

/// Extra bits carried beyond the requested precision to absorb the
/// rounding of each series term.
const GUARD_BITS: u64 = 96;

/// A real number `mantissa / 2^frac_bits`, accurate to `digits` decimal
/// significant digits.
#[derive(Clone, PartialEq, Eq)]
pub struct HighPrecision {
    mantissa: BigInt,
    frac_bits: u64,
    digits: u32,
}

impl HighPrecision {
    pub fn digits(&self) -> u32 {
        self.digits
    }

    /// The exact dyadic rational held internally.
    pub fn to_rational(&self) -> Rational {
        let denom = BigInt::one() << self.frac_bits;
        Rational::from_bigints(self.mantissa.clone(), denom).expect("power of two is non-zero")
    }

    pub fn to_f64(&self) -> f64 {
        self.to_rational().to_f64()
    }

    /// Decimal expansion truncated to `places` digits after the point.
    pub fn to_decimal_string(&self, places: usize) -> String {
        let scaled = (self.mantissa.abs() * num_traits::pow(BigInt::from(10), places)) >> self.frac_bits;
        let s = scaled.to_string();
        let s = if s.len() <= places { format!("{}{}", "0".repeat(places + 1 - s.len()), s) } else { s };
        let (int, frac) = s.split_at(s.len() - places);
        let sign = if self.mantissa.sign() == Sign::Minus { "-" } else { "" };
        if places == 0 {
            format!("{sign}{int}")
        } else {
            format!("{sign}{int}.{frac}")
        }
    }
}

impl fmt::Display for HighPrecision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_decimal_string(self.digits as usize))
    }
}

impl fmt::Debug for HighPrecision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HighPrecision({})", self.to_decimal_string(20))
    }
}

/// Fixed-point arithmetic context with a common scale of `2^bits`.
struct Fixed {
    bits: u64,
}

impl Fixed {
    fn for_digits(digits: u32) -> Self {
        // log2(10) < 3.33
        let bits = (digits as u64 * 333).div_ceil(100) + GUARD_BITS;
        Fixed { bits }
    }

    fn one(&self) -> BigInt {
        BigInt::one() << self.bits
    }

    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        (a * b) >> self.bits
    }

    fn div(&self, a: &BigInt, b: &BigInt) -> BigInt {
        (a << self.bits).div_floor(b)
    }

    /// atan(1/k) by its alternating Taylor series.
    fn atan_inv(&self, k: u32) -> BigInt {
        let k = BigInt::from(k);
        let k2 = &k * &k;
        let mut power = self.one() / &k;
        let mut sum = BigInt::zero();
        let mut n = 1u64;
        let mut add = true;
        while !power.is_zero() {
            let term = &power / n;
            if add {
                sum += term;
            } else {
                sum -= term;
            }
            power /= &k2;
            n += 2;
            add = !add;
        }
        sum
    }

    /// Machin's formula.
    fn pi(&self) -> BigInt {
        self.atan_inv(5) * 16 - self.atan_inv(239) * 4
    }

    /// (sin x, cos x) for |x| <= pi/3 by Taylor series.
    fn sin_cos(&self, x: &BigInt) -> (BigInt, BigInt) {
        let mut sin = BigInt::zero();
        let mut cos = BigInt::zero();
        // term_k = x^k / k!
        let mut term = self.one();
        let mut k = 0u64;
        loop {
            match k % 4 {
                0 => cos += &term,
                1 => sin += &term,
                2 => cos -= &term,
                _ => sin -= &term,
            }
            k += 1;
            term = self.mul(&term, x) / k;
            if term.is_zero() {
                break;
            }
        }
        (sin, cos)
    }
}

/// `pi` to `digits` decimal digits.
pub fn pi(digits: u32) -> HighPrecision {
    let ctx = Fixed::for_digits(digits);
    HighPrecision { mantissa: ctx.pi(), frac_bits: ctx.bits, digits }
}

/// `cot(pi / n)` for `n >= 3`.
pub(crate) fn cot_pi_over(n: u32, digits: u32) -> HighPrecision {
    debug_assert!(n >= 3);
    let ctx = Fixed::for_digits(digits);
    let x = ctx.pi() / n;
    let (sin, cos) = ctx.sin_cos(&x);
    HighPrecision { mantissa: ctx.div(&cos, &sin), frac_bits: ctx.bits, digits }
}

/// `(n/4) cot(pi/n)` for `n >= 3`.
pub(crate) fn area_coefficient(n: u32, digits: u32) -> HighPrecision {
    let cot = cot_pi_over(n, digits);
    HighPrecision { mantissa: (cot.mantissa * n) / 4, frac_bits: cot.frac_bits, digits }
}
