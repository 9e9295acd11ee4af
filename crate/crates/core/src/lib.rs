//! Symbolic dynamics of Smale's horseshoe: heights of kneading-style
//! sequences, classification of periodic orbit codes by height and
//! decoration, the decoration invariants `r^w` that decide forcing between
//! horseshoe braid types, an independent disk-membership forcing oracle, and
//! the entropy polynomials of the `1^{2i+1}` decoration family.
//!
//! Exact quantities are rationals ([`Rational`]); only polynomial root
//! isolation uses floating point.

pub mod disks;
pub mod entropy;
pub mod error;
pub mod families;
pub mod height;
pub mod invariants;
pub mod orbit;
pub mod rational;
pub mod scalar;
pub mod survey;
pub mod word;

use num_rational::Ratio;

/// Exact rational used for heights, scopes and invariant values.
pub type Rational = Ratio<i64>;

/// Integer polynomial with `i64` coefficients.
pub type IntPolynomial = entropy::Polynomial<i64>;

pub use error::{Error, Result};
pub use rational::{format_ratio, half, parse_rational};
pub use word::{unimodal_cmp, OrbitCode, OrbitPoint, Parity, Seq, Word};
