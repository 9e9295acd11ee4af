//! Parsing and formatting of exact rationals as `m/n`.

use num_rational::Ratio;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::scalar::{int, IntScalar};
use crate::Rational;

/// Parses `m/n` (or a bare integer) into a reduced ratio with positive denominator.
pub fn parse_ratio<T: IntScalar>(s: &str) -> Result<Ratio<T>> {
    let bad = || Error::MalformedRational(s.to_string());
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s, "1"),
    };
    let num = T::from_str_radix(num, 10).map_err(|_| bad())?;
    let den = T::from_str_radix(den, 10).map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Ratio::new(num, den))
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    parse_ratio::<i64>(s)
}

/// `m/n`, with integers printed bare (`0`, `1`).
pub fn format_ratio<T: IntScalar>(q: &Ratio<T>) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn half<T: IntScalar>() -> Ratio<T> {
    Ratio::new(T::one(), int(2))
}

pub(crate) fn ratio<T: IntScalar>(num: usize, den: usize) -> Ratio<T> {
    Ratio::new(int(num), int(den))
}

pub(crate) fn den_usize(q: &Rational) -> usize {
    *q.denom() as usize
}

pub(crate) fn num_usize(q: &Rational) -> usize {
    *q.numer() as usize
}

/// Checks `lo < q < hi` (or `<=` at the top when `closed_top`).
pub(crate) fn require_in(
    q: &Rational,
    lo: Rational,
    hi: Rational,
    closed_top: bool,
    range: &'static str,
) -> Result<()> {
    let ok = *q > lo && (if closed_top { *q <= hi } else { *q < hi });
    if ok {
        Ok(())
    } else {
        Err(Error::OutOfRange { value: *q, range })
    }
}

pub(crate) fn zero() -> Rational {
    Rational::zero()
}
