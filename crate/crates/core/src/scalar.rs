use std::fmt::Debug;
use std::ops::Neg;

use num_traits::{FromPrimitive, Num};

/// Ring element usable by the counting kernels.
///
/// Determinants use fraction-free elimination, so every division performed
/// is exact in an integral domain. Any integer type (`i64`, `i128`,
/// [`num_bigint::BigInt`]) or a rational type qualifies. Machine integers
/// overflow silently on large shapes; use [`crate::Count`] when in doubt.
pub trait Scalar: Num + Clone + Neg<Output = Self> + FromPrimitive + Debug {}

impl<T> Scalar for T where T: Num + Clone + Neg<Output = T> + FromPrimitive + Debug {}

pub(crate) fn from_i64<T: Scalar>(v: i64) -> T {
    T::from_i64(v).expect("scalar type cannot represent a small integer")
}
