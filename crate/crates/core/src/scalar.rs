//! Scalar traits the numeric kernels are generic over.
//!
//! Exact quantities (heights, scopes, invariant values, polynomial
//! coefficients) are carried by an [`IntScalar`]; root isolation runs in a
//! [`RealScalar`]. The crate root fixes the everyday choices as aliases.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_integer::Integer;
use num_traits::{Float, FromPrimitive, NumCast, PrimInt, Signed};

/// Machine integer backing exact rationals and integer polynomials.
pub trait IntScalar:
    PrimInt + Integer + Signed + FromPrimitive + Hash + Debug + Display + Send + Sync + 'static
{
}

impl IntScalar for i32 {}
impl IntScalar for i64 {}
impl IntScalar for i128 {}

/// Floating point type used for polynomial evaluation and root isolation.
pub trait RealScalar:
    Float + FromPrimitive + NumCast + Debug + Display + Send + Sync + 'static
{
}

impl RealScalar for f32 {}
impl RealScalar for f64 {}

pub(crate) fn int<T: IntScalar>(n: usize) -> T {
    T::from_usize(n).expect("integer does not fit the scalar type")
}

pub(crate) fn real<F: RealScalar>(x: f64) -> F {
    F::from_f64(x).expect("value does not fit the real scalar type")
}
