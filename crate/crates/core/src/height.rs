//! The words `c_q`, the height function on sequences, and the scope of a
//! decoration.
//!
//! For `q = m/n` in `(0, 1/2]`, `c_q` is the length `n+1` cutting word of the
//! segment from `(0,0)` to `(n,m)`. The height `q(c)` of a sequence `c` is
//! the cut point in `[0, 1/2]` with `c ≺ (c_q 0)^∞` for smaller `q` and
//! `(c_q 0)^∞ ≺ c` for larger `q`. [`height`] computes it with the interval
//! algorithm on the run decomposition `c = 1 0^κ1 1^μ1 0^κ2 1^μ2 …`;
//! [`height_oracle`] finds it by Stern–Brocot search using only
//! comparisons, and exists to cross-check the fast path.

use std::cmp::Ordering;

use num_rational::Ratio;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rational::{den_usize, half, num_usize, ratio, require_in, zero};
use crate::scalar::IntScalar;
use crate::word::{cmp_symbols, Seq, Word};
use crate::Rational;

/// `c_q` for `0 < q ≤ 1/2`.
pub fn cq_word(q: &Rational) -> Result<Word> {
    require_in(q, zero(), half(), true, "(0, 1/2]")?;
    let (m, n) = (num_usize(q), den_usize(q));
    let symbols = (0..=n)
        .map(|i| {
            // some k in 0..=m with (i-1)m < kn < (i+1)m
            let lo = (i * m).saturating_sub(m);
            let hi = (i + 1) * m;
            let k = lo / n + 1;
            let hit = (i == 0) || (k * n < hi && k <= m);
            u8::from(hit)
        })
        .collect();
    Ok(Word::from_vec(symbols))
}

/// `d_q`, the first `n-1` symbols of `c_q`, for `0 < q < 1/2`.
pub fn finite_order_word(q: &Rational) -> Result<Word> {
    require_in(q, zero(), half(), false, "(0, 1/2)")?;
    let c = cq_word(q)?;
    Ok(c.prefix(den_usize(q) - 1))
}

/// The exponents `κ_1 … κ_m` with `c_q = 1 0^κ1 11 0^κ2 11 … 11 0^κm 1`.
pub fn cq_kappas(q: &Rational) -> Result<Vec<usize>> {
    let c = cq_word(q)?;
    let inner = &c.symbols()[1..c.len() - 1];
    let mut kappas = vec![0];
    let mut i = 0;
    while i < inner.len() {
        if inner[i] == 0 {
            *kappas.last_mut().expect("nonempty") += 1;
            i += 1;
        } else {
            kappas.push(0);
            i += 2;
        }
    }
    Ok(kappas)
}

/// One step `(κ, μ)` of the run decomposition; `None` for `κ` marks an
/// all-zero tail.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Step {
    kappa: Option<usize>,
    mu: u8,
}

const INFINITE: usize = usize::MAX;

/// Walks `c = 1 0^κ1 1^μ1 0^κ2 1^μ2 …` step by step over an eventually
/// periodic symbol source.
struct Runs<'a> {
    seq: &'a Seq,
    pos: usize,
    pending: usize,
}

impl<'a> Runs<'a> {
    fn new(seq: &'a Seq) -> Self {
        Runs {
            seq,
            pos: 1,
            pending: 0,
        }
    }

    fn normalize(&mut self) {
        let pre = self.seq.preperiod().len();
        let per = self.seq.period().len();
        if self.pos >= pre {
            self.pos = pre + (self.pos - pre) % per;
        }
    }

    /// State identifying the rest of the step stream.
    fn key(&self) -> (usize, usize) {
        if self.pending == INFINITE {
            (0, INFINITE)
        } else {
            (self.pos, self.pending)
        }
    }

    fn in_period(&self) -> bool {
        self.pos >= self.seq.preperiod().len()
    }

    /// Length of the run of `symbol` starting at the current position, or
    /// `INFINITE` when the tail is constant.
    fn run(&mut self, symbol: u8) -> usize {
        let per = self.seq.period().len();
        let mut count = 0;
        while self.seq.at(self.pos + count) == symbol {
            count += 1;
            if self.pos + count > self.seq.preperiod().len() + per && count > per {
                return INFINITE;
            }
        }
        self.pos += count;
        count
    }

    fn next_step(&mut self) -> Step {
        let mut kappa = 0;
        if self.pending == 0 {
            kappa = self.run(0);
            if kappa == INFINITE {
                return Step { kappa: None, mu: 2 };
            }
            self.pending = self.run(1);
        }
        let mu = if self.pending >= 2 {
            if self.pending != INFINITE {
                self.pending -= 2;
            }
            2
        } else {
            self.pending = 0;
            1
        };
        self.normalize();
        Step {
            kappa: Some(kappa),
            mu,
        }
    }
}

fn starts_10(c: &Seq) -> bool {
    c.at(0) == 1 && c.at(1) == 0
}

/// Leading steps of the run decomposition of a sequence beginning `10`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunDecomposition {
    /// `κ_i`; `None` stands for an infinite run of zeros.
    pub kappas: Vec<Option<usize>>,
    pub mus: Vec<u8>,
}

/// The first `steps` steps, stopping early at an all-zero tail. `None` when
/// `c` does not begin with `10`.
pub fn run_decomposition(c: &Seq, steps: usize) -> Option<RunDecomposition> {
    if !starts_10(c) {
        return None;
    }
    let mut runs = Runs::new(c);
    let mut out = RunDecomposition {
        kappas: Vec::new(),
        mus: Vec::new(),
    };
    for _ in 0..steps {
        let step = runs.next_step();
        out.kappas.push(step.kappa);
        if step.kappa.is_none() {
            break;
        }
        out.mus.push(step.mu);
    }
    Some(out)
}

fn interval<T: IntScalar>(r: usize, ksum: usize) -> (Ratio<T>, Ratio<T>) {
    (ratio(r, 2 * r + ksum), ratio(r, 2 * r - 1 + ksum))
}

/// Height of `c`, computed in `Ratio<T>`.
pub fn height_in<T: IntScalar>(c: &Seq) -> Ratio<T> {
    if !starts_10(c) {
        return half();
    }
    let mut runs = Runs::new(c);
    let first = runs.next_step();
    let Some(k1) = first.kappa else {
        return Ratio::zero();
    };
    let (mut s, mut ksum, mut mu) = (1usize, k1, first.mu);
    let (mut x, mut y) = interval::<T>(1, ksum);
    let mut seen: Vec<((usize, usize), usize, usize)> = Vec::new();
    loop {
        if mu == 1 {
            return y;
        }
        if runs.in_period() {
            let key = runs.key();
            if let Some(&(_, s0, k0)) = seen.iter().find(|(k, _, _)| *k == key) {
                // the steps from s0 on repeat with period a, adding b to Σκ
                let (a, b) = (s - s0, ksum - k0);
                let limit: Ratio<T> = ratio(a, 2 * a + b);
                return if limit <= x {
                    x
                } else if limit >= y {
                    y
                } else {
                    limit
                };
            }
            seen.push((key, s, ksum));
        }
        let step = runs.next_step();
        let Some(kappa) = step.kappa else {
            return x;
        };
        s += 1;
        ksum += kappa;
        mu = step.mu;
        let (lo, hi) = interval::<T>(s, ksum);
        if hi <= x {
            return x;
        }
        if lo >= y {
            return y;
        }
        if lo > x {
            x = lo;
        }
        if hi < y {
            y = hi;
        }
    }
}

/// Height of `c` as a [`Rational`].
pub fn height(c: &Seq) -> Rational {
    height_in::<i64>(c)
}

/// `(c_q 0)^∞`.
pub fn cq0_seq(q: &Rational) -> Result<Seq> {
    let mut w = cq_word(q)?;
    w.push(0);
    Ok(Seq::periodic(&w))
}

fn cmp_cq0(c: &Seq, q: &Rational) -> Ordering {
    let t = cq0_seq(q).expect("q in range");
    cmp_symbols(c.decision_bound(&t), |i| c.at(i), |i| t.at(i))
}

/// Height by Stern–Brocot search over `(0, 1/2]`, using nothing but the
/// unimodal comparison against `(c_q 0)^∞`. Exact when the height has
/// denominator at most `max_den`.
pub fn height_oracle(c: &Seq, max_den: u64) -> Result<Rational> {
    if max_den < 2 {
        return Err(Error::DenominatorBound(max_den));
    }
    if cmp_cq0(c, &half()) != Ordering::Greater {
        return Ok(half());
    }
    let (mut lo, mut hi) = ((0i64, 1i64), (1i64, 2i64));
    loop {
        let m = (lo.0 + hi.0, lo.1 + hi.1);
        if m.1 as u64 > max_den {
            break;
        }
        let q = Rational::new(m.0, m.1);
        match cmp_cq0(c, &q) {
            Ordering::Equal => return Ok(q),
            Ordering::Less => lo = m,
            Ordering::Greater => hi = m,
        }
    }
    // no denominator <= max_den lies strictly between lo and hi
    let near = |k: i64, toward_lo: bool| {
        if toward_lo {
            Rational::new(k * lo.0 + hi.0, k * lo.1 + hi.1)
        } else {
            Rational::new(lo.0 + k * hi.0, lo.1 + k * hi.1)
        }
    };
    let k = max_den as i64;
    let above_lo = [k, 2 * k]
        .iter()
        .all(|&j| cmp_cq0(c, &near(j, true)) == Ordering::Greater);
    if above_lo {
        return Ok(Rational::new(lo.0, lo.1));
    }
    let below_hi = [k, 2 * k]
        .iter()
        .all(|&j| cmp_cq0(c, &near(j, false)) == Ordering::Less);
    if below_hi {
        return Ok(Rational::new(hi.0, hi.1));
    }
    Err(Error::DenominatorBound(max_den))
}

/// `q_w`: the least height over the orbit of `(10w0)^∞`.
pub fn scope(w: &Word) -> Rational {
    let base = Word::concat([&Word::from_vec(vec![1, 0]), w, &Word::from_vec(vec![0])]);
    (0..base.len())
        .map(|i| height(&Seq::periodic(&base.rotate(i))))
        .min()
        .expect("nonempty")
}

/// Checks `q(1 0^{κ_r+1} 11 0^{κ_{r+1}} 11 … 11 0^{κ_m} 1 · f) ≤ m/n`.
pub fn starlem_check(q: &Rational, r: usize, f: &Seq) -> Result<bool> {
    let kappas = cq_kappas(q)?;
    let m = kappas.len();
    if r < 1 || r > m {
        return Err(Error::IndexOutOfRange { index: r, max: m });
    }
    let mut w = vec![1];
    for (j, &k) in kappas.iter().enumerate().skip(r - 1) {
        if j > r - 1 {
            w.extend([1, 1]);
        }
        let zeros = if j == r - 1 { k + 1 } else { k };
        w.extend(std::iter::repeat_n(0, zeros));
    }
    w.push(1);
    let c = f.prepend(&Word::from_vec(w));
    Ok(height(&c) <= *q)
}
