//! The integer scalar abstraction shared by every ring type in the crate.
//!
//! Ring elements (`Gaussian<T>`, `Quadratic<T>`, `Cyclotomic<T>`, group ring
//! elements, rationals) are generic over [`Int`], so the same code runs on
//! machine integers for speed and on [`BigInt`] when exactness must not
//! depend on magnitude. The crate root exposes `BigInt`-backed aliases.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_bigint::{BigInt, ToBigInt};
use num_integer::Integer;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

/// A signed, exact integer type.
///
/// Machine integers overflow silently in release builds; callers choosing
/// `i64`/`i128` are responsible for staying within range.
pub trait Int:
    Integer + Signed + Clone + Debug + Display + Hash + FromPrimitive + ToPrimitive + ToBigInt + Send + Sync + 'static
{
    /// Narrowing conversion back from a big integer; `None` when out of range.
    fn from_bigint(value: &BigInt) -> Option<Self>;

    fn big(&self) -> BigInt {
        self.to_bigint().expect("integer types always convert to BigInt")
    }

    fn of(value: i64) -> Self {
        <Self as FromPrimitive>::from_i64(value).expect("i64 fits every Int")
    }
}

macro_rules! impl_int_for_primitive {
    ($($t:ty),*) => {$(
        impl Int for $t {
            fn from_bigint(value: &BigInt) -> Option<Self> {
                <$t>::try_from(value).ok()
            }
        }
    )*};
}

impl_int_for_primitive!(i32, i64, i128);

impl Int for BigInt {
    fn from_bigint(value: &BigInt) -> Option<Self> {
        Some(value.clone())
    }

    fn big(&self) -> BigInt {
        self.clone()
    }
}

/// `base^exp` by repeated squaring for any [`Int`].
pub fn pow<T: Int>(base: &T, mut exp: u32) -> T {
    let mut acc = T::one();
    let mut b = base.clone();
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b.clone();
        }
        exp >>= 1;
        if exp > 0 {
            b = b.clone() * b;
        }
    }
    acc
}

/// Rounds `num / den` (with `den > 0`) to the nearest integer, ties toward
/// negative infinity.
pub fn round_half_down<T: Int>(num: &T, den: &T) -> T {
    debug_assert!(den.is_positive());
    // ceil((2num - den) / 2den)
    let two = T::one() + T::one();
    let shifted = two.clone() * num.clone() - den.clone();
    let d2 = two * den.clone();
    let (q, r) = shifted.div_mod_floor(&d2);
    if r.is_zero() {
        q
    } else {
        q + T::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rounding_ties_go_down() {
        assert_eq!(round_half_down(&5i64, &2), 2);
        assert_eq!(round_half_down(&-5i64, &2), -3);
        assert_eq!(round_half_down(&7i64, &3), 2);
        assert_eq!(round_half_down(&-7i64, &3), -2);
        assert_eq!(round_half_down(&12i64, &5), 2);
        assert_eq!(round_half_down(&13i64, &5), 3);
        assert_eq!(round_half_down(&BigInt::from(-1), &BigInt::from(2)), BigInt::from(-1));
    }

    #[test]
    fn pow_matches_std() {
        for b in -5i64..=5 {
            for e in 0..10u32 {
                assert_eq!(pow(&b, e), b.pow(e));
            }
        }
    }

    #[test]
    fn bigint_narrowing() {
        let big = BigInt::from(i64::MAX) + 1;
        assert_eq!(<i64 as Int>::from_bigint(&big), None);
        assert_eq!(<i128 as Int>::from_bigint(&big), Some(i64::MAX as i128 + 1));
    }
}
