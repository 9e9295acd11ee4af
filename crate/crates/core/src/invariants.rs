//! The decoration invariants `μ^w`, `ν^w`, `λ^w`, the `w`-depth
//! `r^w = min(λ, max(μ, ν))`, and the NBT invariant `r^*`.
//!
//! All of them are minima of heights taken over occurrences of short words
//! in one period of the biinfinite code. For an occurrence of `v` ending just
//! before position `i`, the point splits as `b v · f`: `f` reads forward
//! from `i` and `b` reads backward from the symbol preceding `v`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::height::{height, scope};
use crate::orbit::working_code;
use crate::rational::{half, require_in, zero};
use crate::word::{backward_word, OrbitCode, Seq, Word};
use crate::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    Forward,
    Backward,
    Both,
}

/// Heights of every forward and backward sequence of one orbit code.
#[derive(Debug, Clone)]
pub struct CodeProfile {
    word: Word,
    fwd: Vec<Rational>,
    bwd: Vec<Rational>,
}

impl CodeProfile {
    /// Profile of the orbit, read from its height code (the paired variant
    /// ending in 0 when there is one).
    pub fn new(code: &OrbitCode) -> Self {
        Self::of_cyclic(&working_code(code))
    }

    /// Profile of an arbitrary nonempty cyclic word.
    pub fn of_cyclic(word: &Word) -> Self {
        let n = word.len();
        assert!(n > 0, "empty cyclic word");
        let fwd = (0..n)
            .map(|i| height(&Seq::periodic(&word.rotate(i))))
            .collect();
        let bwd = (0..n)
            .map(|j| height(&Seq::periodic(&backward_word(word, j))))
            .collect();
        CodeProfile {
            word: word.clone(),
            fwd,
            bwd,
        }
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    /// Height of the sequence read forward from position `i`.
    pub fn forward_height(&self, i: usize) -> Rational {
        self.fwd[i % self.word.len()]
    }

    /// Height of the sequence read backward from position `j`.
    pub fn backward_height(&self, j: usize) -> Rational {
        self.bwd[j % self.word.len()]
    }

    /// Minimum over patterns and positions of the directional height,
    /// starting from 1/2.
    pub fn r_dir(&self, patterns: &[Word], direction: Direction) -> Rational {
        let n = self.word.len();
        let mut best = half();
        for v in patterns {
            let k = v.len();
            for i in 0..n {
                if !self.word.cyclic_match_before(i, v.symbols()) {
                    continue;
                }
                let f = || self.fwd[i];
                let b = || self.bwd[(i + n * (k / n + 2) - k - 1) % n];
                let value = match direction {
                    Direction::Forward => f(),
                    Direction::Backward => b(),
                    Direction::Both => f().max(b()),
                };
                best = best.min(value);
            }
        }
        best
    }

    pub fn mu(&self, w: &Word) -> Rational {
        self.r_dir(&mu_patterns(w), Direction::Forward)
            .min(scope(w))
    }

    pub fn nu(&self, w: &Word) -> Rational {
        self.r_dir(&nu_patterns(w), Direction::Backward)
            .min(scope(w))
    }

    pub fn lambda(&self, w: &Word) -> Rational {
        self.r_dir(&lambda_patterns(w), Direction::Both)
            .min(scope(w))
    }

    pub fn invariants(&self, w: &Word) -> Invariants {
        let (mu, nu, lambda) = (self.mu(w), self.nu(w), self.lambda(w));
        Invariants {
            mu,
            nu,
            lambda,
            r: lambda.min(mu.max(nu)),
        }
    }

    pub fn r_w(&self, w: &Word) -> Rational {
        self.invariants(w).r
    }

    pub fn r_star(&self) -> Rational {
        let v = [Word::from_vec(vec![0]), Word::from_vec(vec![1])];
        self.r_dir(&v, Direction::Both)
    }
}

/// The three component invariants together with `r^w`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Invariants {
    pub mu: Rational,
    pub nu: Rational,
    pub lambda: Rational,
    pub r: Rational,
}

impl fmt::Display for Invariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use crate::rational::format_ratio as fr;
        write!(
            f,
            "mu={} nu={} lambda={} r={}",
            fr(&self.mu),
            fr(&self.nu),
            fr(&self.lambda),
            fr(&self.r)
        )
    }
}

fn with_symbol_after(v: &Word) -> impl Iterator<Item = Word> + '_ {
    (0..2).map(move |x| {
        let mut out = v.clone();
        out.push(x);
        out
    })
}

fn with_symbol_before(v: &Word) -> impl Iterator<Item = Word> + '_ {
    (0..2).map(move |x| Word::from_vec(vec![x]).cat(v))
}

/// `{ v̆ x : v a nonempty even final subword of ⁺w }`.
pub fn mu_patterns(w: &Word) -> Vec<Word> {
    w.prepend_even()
        .even_final_subwords()
        .iter()
        .flat_map(|v| {
            let flipped = v.flip_first().expect("nonempty");
            with_symbol_after(&flipped).collect::<Vec<_>>()
        })
        .collect()
}

/// `{ x ṽ : v a nonempty even initial subword of w⁺ }`.
pub fn nu_patterns(w: &Word) -> Vec<Word> {
    w.append_even()
        .even_initial_subwords()
        .iter()
        .flat_map(|v| {
            let flipped = v.flip_last().expect("nonempty");
            with_symbol_before(&flipped).collect::<Vec<_>>()
        })
        .collect()
}

/// `{ 0w0, 0w1, 1w0, 1w1 }`.
pub fn lambda_patterns(w: &Word) -> Vec<Word> {
    with_symbol_before(w)
        .flat_map(|v| with_symbol_after(&v).collect::<Vec<_>>())
        .collect()
}

/// Directional minimum over occurrences of `patterns` in the orbit code.
pub fn r_dir(code: &OrbitCode, patterns: &[Word], direction: Direction) -> Result<Rational> {
    if patterns.is_empty() || patterns.iter().any(Word::is_empty) {
        return Err(Error::EmptyWord);
    }
    Ok(CodeProfile::new(code).r_dir(patterns, direction))
}

pub fn mu(w: &Word, code: &OrbitCode) -> Rational {
    CodeProfile::new(code).mu(w)
}

pub fn nu(w: &Word, code: &OrbitCode) -> Rational {
    CodeProfile::new(code).nu(w)
}

pub fn lambda(w: &Word, code: &OrbitCode) -> Rational {
    CodeProfile::new(code).lambda(w)
}

pub fn invariants(w: &Word, code: &OrbitCode) -> Invariants {
    CodeProfile::new(code).invariants(w)
}

/// The `w`-depth `r^w(R)`.
pub fn r_w(w: &Word, code: &OrbitCode) -> Rational {
    CodeProfile::new(code).r_w(w)
}

pub fn r_star(code: &OrbitCode) -> Rational {
    CodeProfile::new(code).r_star()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Forcing {
    Forced,
    NotForced,
    AtThreshold,
}

impl fmt::Display for Forcing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Forcing::Forced => "FORCED",
            Forcing::NotForced => "NOT-FORCED",
            Forcing::AtThreshold => "THRESHOLD",
        })
    }
}

/// Whether `R` forces the orbits of height `q` and lone decoration `w`,
/// read off from `r^w(R)`. Loneness of `w` and pseudo-Anosov type of the
/// target are the caller's responsibility.
pub fn forces(code: &OrbitCode, w: &Word, q: &Rational) -> Result<Forcing> {
    require_in(q, zero(), scope(w), false, "(0, q_w)")?;
    let r = r_w(w, code);
    Ok(match q.cmp(&r) {
        std::cmp::Ordering::Greater => Forcing::Forced,
        std::cmp::Ordering::Less => Forcing::NotForced,
        std::cmp::Ordering::Equal => Forcing::AtThreshold,
    })
}

/// Whether the right-hand end of the rotation interval is 1/2: the cyclic
/// code contains `01010` or `0 1^{2m+1} 0` with `m ≥ 1`.
pub fn rhe_is_half(code: &OrbitCode) -> bool {
    let word = code.word();
    let n = word.len();
    let s = word.symbols();
    if (0..n).any(|i| word.cyclic_match_before(i, &[0, 1, 0, 1, 0])) {
        return true;
    }
    let Some(start) = s.iter().position(|&x| x == 0) else {
        return false;
    };
    // walk the cyclic runs of ones, each bounded by zeros
    let mut run = 0;
    for k in 1..=n {
        if s[(start + k) % n] == 1 {
            run += 1;
        } else {
            if run >= 3 && run % 2 == 1 {
                return true;
            }
            run = 0;
        }
    }
    false
}
