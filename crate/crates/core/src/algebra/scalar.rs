//! Coefficient types for the algebra kernel.
//!
//! Everything in [`crate::algebra`] is generic over a [`Scalar`]. The
//! combinatorial identities only hold literally over an exact field, so the
//! rest of the crate instantiates the kernel with [`crate::Rat`]
//! (`BigRational`). Fixed-width rationals such as `Rational64` also satisfy
//! the bound and are handy for cross-checking small cases.

use std::fmt::{Debug, Display};

use num_traits::{FromPrimitive, Num};

/// A field-like coefficient type.
pub trait Scalar:
    Num + Clone + Debug + Display + FromPrimitive + std::ops::Neg<Output = Self> + Send + Sync
{
    /// Converts a machine integer; panics only if the target type cannot
    /// represent it, which does not happen for the rational types used here.
    fn int(value: i64) -> Self {
        Self::from_i64(value).expect("integer not representable in scalar type")
    }

    /// Converts an `i128`.
    fn int128(value: i128) -> Self {
        Self::from_i128(value).expect("integer not representable in scalar type")
    }

    /// `numer / denom` computed in the field.
    fn ratio(numer: i64, denom: i64) -> Self {
        Self::int(numer) / Self::int(denom)
    }
}

impl<T> Scalar for T where
    T: Num + Clone + Debug + Display + FromPrimitive + std::ops::Neg<Output = T> + Send + Sync
{
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::{BigRational, Rational64};

    #[test]
    fn conversions_agree_across_types() {
        let a = BigRational::ratio(6, 4);
        let b = Rational64::ratio(6, 4);
        assert_eq!(a.to_string(), "3/2");
        assert_eq!(b.to_string(), "3/2");
        assert_eq!(
            BigRational::int128(1 << 70).to_string(),
            "1180591620717411303424"
        );
    }
}
