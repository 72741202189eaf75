//! Binomial coefficients with polynomial and integer upper arguments.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{MultiPoly, Scalar};

/// `p (p-1) ··· (p-k+1) / k!`, the binomial coefficient with a polynomial
/// upper argument. `binom_poly(p, 0) = 1`.
pub fn binom_poly<C: Scalar>(p: &MultiPoly<C>, k: u32) -> MultiPoly<C> {
    let mut acc = MultiPoly::one();
    let mut factorial = C::one();
    for i in 0..k {
        let factor = p - &MultiPoly::int(i as i64);
        acc = &acc * &factor;
        factorial = factorial * C::int(i as i64 + 1);
    }
    acc.scale(&(C::one() / factorial))
}

/// Integer binomial `binom(a, b)` for arbitrary integer `a`.
///
/// Conventions: `0` when `b < 0`, `1` when `b = 0` (so `binom(-1, 0) = 1`),
/// otherwise the falling factorial `a (a-1) ··· (a-b+1) / b!`, which is `0`
/// whenever `0 <= a < b`.
pub fn int_binom(a: i64, b: i64) -> BigInt {
    if b < 0 {
        return BigInt::zero();
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..b {
        num *= BigInt::from(a - i);
        den *= BigInt::from(i + 1);
    }
    let q = &num / &den;
    debug_assert!((&num % &den).is_zero());
    q
}

/// [`int_binom`] as an `i64`, for callers working in small ranges.
pub fn int_binom_i64(a: i64, b: i64) -> i64 {
    i64::try_from(int_binom(a, b)).expect("binomial coefficient exceeds i64")
}
