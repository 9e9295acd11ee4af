//! Integer polynomials whose largest real roots bound the topological
//! entropy of orbits forcing the `1^{2i+1}` family.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::families::r_sequence;
use crate::rational::{den_usize, half, num_usize, require_in, zero};
use crate::scalar::{int, real, IntScalar, RealScalar};
use crate::word::OrbitCode;
use crate::Rational;

/// Dense polynomial, constant term first, no trailing zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial<T>(Vec<T>);

impl<T: IntScalar> Polynomial<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial(coeffs)
    }

    pub fn zero() -> Self {
        Polynomial(Vec::new())
    }

    /// `c x^k`.
    pub fn monomial(c: T, k: usize) -> Self {
        let mut v = vec![T::zero(); k + 1];
        v[k] = c;
        Self::new(v)
    }

    /// `x^k`.
    pub fn x_pow(k: usize) -> Self {
        Self::monomial(T::one(), k)
    }

    pub fn constant(c: T) -> Self {
        Self::monomial(c, 0)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree, with the zero polynomial at degree 0.
    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    /// `x^d p(1/x)`, for `d` at least the degree.
    pub fn reciprocal(&self, d: usize) -> Self {
        assert!(self.is_zero() || d >= self.degree());
        let mut v = vec![T::zero(); d + 1];
        for (k, &c) in self.0.iter().enumerate() {
            v[d - k] = c;
        }
        Self::new(v)
    }

    pub fn eval_int(&self, x: T) -> T {
        self.0.iter().rev().fold(T::zero(), |acc, &c| acc * x + c)
    }

    pub fn eval<F: RealScalar>(&self, x: F) -> F {
        self.0.iter().rev().fold(F::zero(), |acc, &c| {
            acc * x + F::from(c).expect("coefficient fits the real scalar")
        })
    }
}

impl<T: IntScalar> Add for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn add(self, rhs: Self) -> Polynomial<T> {
        let n = self.0.len().max(rhs.0.len());
        let at = |p: &Polynomial<T>, k: usize| p.0.get(k).copied().unwrap_or_else(T::zero);
        Polynomial::new((0..n).map(|k| at(self, k) + at(rhs, k)).collect())
    }
}

impl<T: IntScalar> Neg for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn neg(self) -> Polynomial<T> {
        Polynomial(self.0.iter().map(|&c| -c).collect())
    }
}

impl<T: IntScalar> Sub for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn sub(self, rhs: Self) -> Polynomial<T> {
        self + &(-rhs)
    }
}

impl<T: IntScalar> Mul for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn mul(self, rhs: Self) -> Polynomial<T> {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut v = vec![T::zero(); self.0.len() + rhs.0.len() - 1];
        for (i, &a) in self.0.iter().enumerate() {
            for (j, &b) in rhs.0.iter().enumerate() {
                v[i + j] = v[i + j] + a * b;
            }
        }
        Polynomial::new(v)
    }
}

impl<T: IntScalar> fmt::Display for Polynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, &c) in self.0.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c < T::zero() { "-" } else { "+" };
            if first {
                if c < T::zero() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match (k, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (_, true) => {}
                (_, false) => write!(f, "{a}")?,
            }
            match k {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

impl<T: IntScalar> fmt::Debug for Polynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

fn poly<T: IntScalar>(terms: &[(i64, usize)]) -> Polynomial<T> {
    terms.iter().fold(Polynomial::zero(), |acc, &(c, k)| {
        &acc + &Polynomial::monomial(T::from_i64(c).expect("small coefficient"), k)
    })
}

/// `g_i(x) = x^{2i+3}(x³ − x² − x − 1) − 2`.
pub fn g_poly<T: IntScalar>(i: usize) -> Polynomial<T> {
    let e = 2 * i + 3;
    poly(&[(1, e + 3), (-1, e + 2), (-1, e + 1), (-1, e), (-2, 0)])
}

/// `f_{m/n}(x) = Σ_{j=1}^{m-1} x^{⌊jn/m⌋}`.
pub fn f_poly<T: IntScalar>(q: &Rational) -> Result<Polynomial<T>> {
    require_in(q, zero(), half(), false, "(0, 1/2)")?;
    let (m, n) = (num_usize(q), den_usize(q));
    Ok((1..m).fold(Polynomial::zero(), |acc, j| {
        &acc + &Polynomial::x_pow(j * n / m)
    }))
}

// (x² − 1)(x^{2i+4} + 1)
fn bracket<T: IntScalar>(i: usize) -> Polynomial<T> {
    let a: Polynomial<T> = poly(&[(1, 2), (-1, 0)]);
    let b: Polynomial<T> = poly(&[(1, 2 * i + 4), (1, 0)]);
    &a * &b
}

/// `H^i_q(x) = x^{n+1} g_i(x) + 2x(x²−1)(x^{2i+4}+1) f_q(x) − x^{2i+6} g_i(1/x)`.
pub fn h_poly<T: IntScalar>(i: usize, q: &Rational) -> Result<Polynomial<T>> {
    let f = f_poly::<T>(q)?;
    let g = g_poly::<T>(i);
    let n = den_usize(q);
    let two_x = Polynomial::monomial(int::<T>(2), 1);
    let lead = &Polynomial::x_pow(n + 1) * &g;
    let middle = &(&two_x * &bracket(i)) * &f;
    Ok(&(&lead + &middle) - &g.reciprocal(2 * i + 6))
}

/// `H̄^i_q(x) = (xⁿ − 1) g_i(x) + 2(x²−1)(x^{2i+4}+1)(1 + f_q(x))`.
pub fn hbar_poly<T: IntScalar>(i: usize, q: &Rational) -> Result<Polynomial<T>> {
    let f = f_poly::<T>(q)?;
    let g = g_poly::<T>(i);
    let n = den_usize(q);
    let xn1 = &Polynomial::x_pow(n) - &Polynomial::constant(T::one());
    let one_f = &f + &Polynomial::constant(T::one());
    let middle = &(&Polynomial::constant(int::<T>(2)) * &bracket(i)) * &one_f;
    Ok(&(&xn1 * &g) + &middle)
}

const GRID_STEP: f64 = 1e-3;

/// Largest root of `p` in `(lo, hi]`: a downward grid scan from `hi` for the
/// first sign change, refined by bisection to within `tol`.
pub fn largest_root<T: IntScalar, F: RealScalar>(
    p: &Polynomial<T>,
    lo: F,
    hi: F,
    tol: F,
) -> Result<F> {
    assert!(lo < hi, "empty bracket");
    let eps = real::<F>(1e-12);
    let mut hi = hi;
    if p.eval(hi).abs() <= eps {
        hi = hi + real(1e-6);
    }
    let step = real::<F>(GRID_STEP);
    let mut b = hi;
    let mut pb = p.eval(b);
    while b > lo {
        let a = (b - step).max(lo);
        let pa = p.eval(a);
        if pa == F::zero() && a > lo {
            return Ok(a);
        }
        if (pa < F::zero()) != (pb < F::zero()) && pa != F::zero() {
            return Ok(bisect(p, a, b, tol));
        }
        b = a;
        pb = pa;
    }
    Err(Error::NoSignChange)
}

fn bisect<T: IntScalar, F: RealScalar>(p: &Polynomial<T>, mut a: F, mut b: F, tol: F) -> F {
    let two = real::<F>(2.0);
    let neg_a = p.eval(a) < F::zero();
    while b - a > tol {
        let mid = (a + b) / two;
        let pm = p.eval(mid);
        if pm == F::zero() {
            return mid;
        }
        if (pm < F::zero()) == neg_a {
            a = mid;
        } else {
            b = mid;
        }
    }
    (a + b) / two
}

/// Largest root of `H̄^i_q` in `(1, 2]`.
pub fn hbar_root(i: usize, q: &Rational) -> Result<f64> {
    largest_root(&hbar_poly::<i64>(i, q)?, 1.0, 2.0, 1e-9)
}

/// Lower bound on the entropy of `R` from its invariants `r^i(R)`.
pub fn entropy_lower_bound(code: &OrbitCode, i_max: usize) -> Result<f64> {
    let mut best = 0.0f64;
    for (i, r) in r_sequence(code, i_max).into_iter().enumerate() {
        if r < half() {
            best = best.max(hbar_root(i, &r)?.ln());
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::parse_rational as r;
    use crate::word::code;

    type P = Polynomial<i64>;

    fn rq(s: &str) -> Rational {
        r(s).unwrap()
    }

    #[test]
    fn building_blocks() {
        assert_eq!(g_poly::<i64>(1).to_string(), "x^8 - x^7 - x^6 - x^5 - 2");
        for i in 0..6 {
            assert_eq!(g_poly::<i64>(i).eval_int(1), -4);
            assert!(g_poly::<i64>(i).eval_int(2) >= 0);
        }
        assert!(f_poly::<i64>(&rq("1/3")).unwrap().is_zero());
        assert_eq!(f_poly::<i64>(&rq("2/5")).unwrap(), P::x_pow(2));
        assert_eq!(
            f_poly::<i64>(&rq("3/10")).unwrap(),
            &P::x_pow(3) + &P::x_pow(6)
        );
        assert!(f_poly::<i64>(&half()).is_err());
    }

    #[test]
    fn factored_forms() {
        let x4m1 = P::new(vec![-1, 0, 0, 0, 1]);
        let hbar = &(&P::x_pow(2) * &x4m1) * &P::new(vec![-2, 2, 0, -1, -1, 1]);
        assert_eq!(hbar_poly::<i64>(1, &rq("1/3")).unwrap(), hbar);
        let h = &x4m1 * &P::new(vec![1, -1, -1, -1, 3, -1, -1, -1, 1]);
        assert_eq!(h_poly::<i64>(1, &rq("1/3")).unwrap(), h);
        assert_eq!(hbar_poly::<i128>(2, &rq("3/7")).unwrap().eval_int(1), 0);
    }

    #[test]
    fn roots() {
        let s2 = P::new(vec![-2, 0, 1]);
        assert!((largest_root(&s2, 1.0, 2.0, 1e-9).unwrap() - 2f64.sqrt()).abs() < 1e-8);
        let hb: f64 =
            largest_root(&hbar_poly::<i64>(1, &rq("1/3")).unwrap(), 1.0, 2.0, 1e-6).unwrap();
        assert!((hb - 1.47669).abs() < 5e-5, "{hb}");
        let h: f64 = largest_root(&h_poly::<i64>(1, &rq("1/3")).unwrap(), 1.0, 2.0, 1e-6).unwrap();
        assert!((h - 1.56294).abs() < 5e-5, "{h}");
        let f32_root: f32 = largest_root(&s2, 1.0, 2.0, 1e-5).unwrap();
        assert!((f32_root - std::f32::consts::SQRT_2).abs() < 1e-4);
        assert_eq!(
            largest_root(&P::new(vec![1, 0, 1]), 1.0, 2.0, 1e-9),
            Err(Error::NoSignChange)
        );
    }

    #[test]
    fn root_at_the_upper_end() {
        let p = P::new(vec![-2, 1]);
        let x: f64 = largest_root(&p, 1.0, 2.0, 1e-9).unwrap();
        assert!((x - 2.0).abs() < 1e-8);
    }

    #[test]
    fn lower_bounds() {
        assert_eq!(entropy_lower_bound(&code("10"), 3).unwrap(), 0.0);
        let b = entropy_lower_bound(&code("100111111"), 2).unwrap();
        assert!((b - hbar_root(1, &rq("1/3")).unwrap().ln()).abs() < 1e-12);
    }

    #[test]
    fn display() {
        assert_eq!(P::new(vec![-1, 2, 0, -3]).to_string(), "-3x^3 + 2x - 1");
        assert_eq!(P::zero().to_string(), "0");
        assert_eq!(P::new(vec![0, 0]).degree(), 0);
    }
}
