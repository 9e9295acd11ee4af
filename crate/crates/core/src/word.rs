//! Binary words, eventually periodic sequences, cyclic orbit codes and the
//! unimodal order.
//!
//! Symbols are stored as `u8` values `0` and `1`. Words print as plain 0/1
//! strings; sequences print as `PRE(PER)`, e.g. `10(110)`, or `(PER)` when
//! purely periodic.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

/// A finite binary word, possibly empty.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(Vec<u8>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// Builds a word from symbols, rejecting anything other than 0 and 1.
    pub fn from_symbols(symbols: Vec<u8>) -> Result<Self> {
        if let Some(&s) = symbols.iter().find(|&&s| s > 1) {
            return Err(Error::InvalidSymbol(char::from(b'0' + s.min(9))));
        }
        Ok(Word(symbols))
    }

    pub(crate) fn from_vec(symbols: Vec<u8>) -> Self {
        debug_assert!(symbols.iter().all(|&s| s <= 1));
        Word(symbols)
    }

    /// `symbol` repeated `count` times.
    pub fn repeat(symbol: u8, count: usize) -> Self {
        Word(vec![symbol; count])
    }

    pub fn symbols(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> Option<u8> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<u8> {
        self.0.last().copied()
    }

    pub fn ones(&self) -> usize {
        self.0.iter().filter(|&&s| s == 1).count()
    }

    pub fn parity(&self) -> Parity {
        if self.ones().is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn is_even(&self) -> bool {
        self.parity() == Parity::Even
    }

    pub fn reverse(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    /// The word with its initial symbol changed.
    pub fn flip_first(&self) -> Result<Word> {
        let mut v = self.0.clone();
        let s = v.first_mut().ok_or(Error::EmptyWord)?;
        *s ^= 1;
        Ok(Word(v))
    }

    /// The word with its final symbol changed.
    pub fn flip_last(&self) -> Result<Word> {
        let mut v = self.0.clone();
        let s = v.last_mut().ok_or(Error::EmptyWord)?;
        *s ^= 1;
        Ok(Word(v))
    }

    /// Appends the one symbol that makes the result even.
    pub fn append_even(&self) -> Word {
        let mut v = self.0.clone();
        v.push((self.ones() % 2) as u8);
        Word(v)
    }

    /// Prepends the one symbol that makes the result even.
    pub fn prepend_even(&self) -> Word {
        let mut v = Vec::with_capacity(self.len() + 1);
        v.push((self.ones() % 2) as u8);
        v.extend_from_slice(&self.0);
        Word(v)
    }

    /// Nonempty even suffixes, shortest first.
    pub fn even_final_subwords(&self) -> Vec<Word> {
        (1..=self.len())
            .map(|k| Word(self.0[self.len() - k..].to_vec()))
            .filter(Word::is_even)
            .collect()
    }

    /// Nonempty even prefixes, shortest first.
    pub fn even_initial_subwords(&self) -> Vec<Word> {
        (1..=self.len())
            .map(|k| Word(self.0[..k].to_vec()))
            .filter(Word::is_even)
            .collect()
    }

    pub fn cat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn push(&mut self, symbol: u8) {
        assert!(symbol <= 1, "symbols are 0 or 1");
        self.0.push(symbol);
    }

    /// Concatenation of all parts.
    pub fn concat<'a>(parts: impl IntoIterator<Item = &'a Word>) -> Word {
        Word(
            parts
                .into_iter()
                .flat_map(|w| w.0.iter().copied())
                .collect(),
        )
    }

    pub fn prefix(&self, n: usize) -> Word {
        Word(self.0[..n.min(self.len())].to_vec())
    }

    pub fn slice(&self, start: usize, end: usize) -> Word {
        Word(self.0[start..end].to_vec())
    }

    /// The cyclic rotation starting at symbol `k`.
    pub fn rotate(&self, k: usize) -> Word {
        if self.is_empty() {
            return self.clone();
        }
        let mut v = self.0.clone();
        v.rotate_left(k % self.len());
        Word(v)
    }

    pub fn starts_with(&self, prefix: &Word) -> bool {
        self.0.starts_with(&prefix.0)
    }

    pub fn is_palindrome(&self) -> bool {
        self.0.iter().eq(self.0.iter().rev())
    }

    /// Least period of the word viewed cyclically (the length of its
    /// primitive root). The empty word has least period 0.
    pub fn least_period(&self) -> usize {
        let n = self.len();
        (1..=n)
            .filter(|p| n.is_multiple_of(*p))
            .find(|&p| (p..n).all(|i| self.0[i] == self.0[i - p]))
            .unwrap_or(0)
    }

    pub fn is_primitive(&self) -> bool {
        !self.is_empty() && self.least_period() == self.len()
    }

    /// Number of (possibly overlapping, possibly wrapping) occurrences of
    /// `pattern` ending just before position `end` of the cyclic word.
    pub(crate) fn cyclic_match_before(&self, end: usize, pattern: &[u8]) -> bool {
        let n = self.len();
        let k = pattern.len();
        pattern
            .iter()
            .enumerate()
            .all(|(j, &s)| self.0[(end + n * (k / n + 1) - k + j) % n] == s)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &s in &self.0 {
            f.write_str(if s == 0 { "0" } else { "1" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            f.write_str("ε")
        } else {
            fmt::Display::fmt(self, f)
        }
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                other => Err(Error::InvalidSymbol(other)),
            })
            .collect::<Result<Vec<u8>>>()
            .map(Word)
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Parses a literal word; panics on bad input. Intended for constants and tests.
pub fn w(s: &str) -> Word {
    s.parse().expect("literal word")
}

/// A one-sided, eventually periodic binary sequence `pre · per per per …`.
///
/// Always normalized: the period is primitive and the preperiod is as
/// short as possible, so structural equality is sequence equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Seq {
    pre: Word,
    per: Word,
}

impl Seq {
    pub fn new(pre: Word, per: Word) -> Result<Self> {
        if per.is_empty() {
            return Err(Error::EmptyWord);
        }
        let p = per.least_period();
        let mut pre = pre.0;
        let mut per = per.0[..p].to_vec();
        while let Some(&last) = pre.last() {
            if last != per[p - 1] {
                break;
            }
            pre.pop();
            per.rotate_right(1);
        }
        Ok(Seq {
            pre: Word(pre),
            per: Word(per),
        })
    }

    /// `(per)^∞`; panics on an empty period.
    pub fn periodic(per: &Word) -> Self {
        Seq::new(Word::empty(), per.clone()).expect("nonempty period")
    }

    pub fn preperiod(&self) -> &Word {
        &self.pre
    }

    pub fn period(&self) -> &Word {
        &self.per
    }

    #[inline]
    pub fn at(&self, i: usize) -> u8 {
        let k = self.pre.len();
        if i < k {
            self.pre.0[i]
        } else {
            self.per.0[(i - k) % self.per.len()]
        }
    }

    pub fn prefix(&self, n: usize) -> Word {
        Word((0..n).map(|i| self.at(i)).collect())
    }

    /// Drops the first `k` symbols.
    pub fn shift(&self, k: usize) -> Seq {
        let pre = self.pre.len();
        if k <= pre {
            Seq::new(Word(self.pre.0[k..].to_vec()), self.per.clone()).expect("nonempty period")
        } else {
            Seq::new(Word::empty(), self.per.rotate((k - pre) % self.per.len()))
                .expect("nonempty period")
        }
    }

    /// `word · self`.
    pub fn prepend(&self, word: &Word) -> Seq {
        Seq::new(word.cat(&self.pre), self.per.clone()).expect("nonempty period")
    }

    /// Number of leading symbols after which two sequences that still agree
    /// must be equal.
    pub fn decision_bound(&self, other: &Seq) -> usize {
        self.pre.len().max(other.pre.len()) + self.per.len() + other.per.len()
    }
}

impl fmt::Display for Seq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.pre, self.per)
    }
}

impl fmt::Debug for Seq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Seq {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::MalformedSeq(s.to_string());
        let s = s.trim();
        let (pre, rest) = s.split_once('(').ok_or_else(bad)?;
        let per = rest.strip_suffix(')').ok_or_else(bad)?;
        let pre: Word = pre.parse().map_err(|_| bad())?;
        let per: Word = per.parse().map_err(|_| bad())?;
        Seq::new(pre, per).map_err(|_| bad())
    }
}

impl Serialize for Seq {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Parses a literal sequence; panics on bad input.
pub fn seq(s: &str) -> Seq {
    s.parse().expect("literal sequence")
}

/// Compares two sequences in the unimodal order.
///
/// At the first index `i` where they differ, `s ≺ t` iff the prefix
/// `s_0 … s_{i-1}` is even and `s_i < t_i`, or odd and `s_i > t_i`.
pub fn unimodal_cmp(s: &Seq, t: &Seq) -> Ordering {
    cmp_symbols(s.decision_bound(t), |i| s.at(i), |i| t.at(i))
}

#[inline]
pub(crate) fn cmp_symbols(
    bound: usize,
    s: impl Fn(usize) -> u8,
    t: impl Fn(usize) -> u8,
) -> Ordering {
    let mut odd = false;
    for i in 0..bound {
        let (a, b) = (s(i), t(i));
        if a != b {
            return if (a < b) != odd {
                Ordering::Less
            } else {
                Ordering::Greater
            };
        }
        odd ^= a == 1;
    }
    Ordering::Equal
}

/// The rotation of a cyclic word whose periodic sequence is unimodal-maximal.
pub fn max_rotation(word: &Word) -> Word {
    let n = word.len();
    if n == 0 {
        return Word::empty();
    }
    let at = |k: usize| move |i: usize| word.0[(k + i) % n];
    let best = (1..n).fold(0, |best, k| {
        if cmp_symbols(n, at(k), at(best)) == Ordering::Greater {
            k
        } else {
            best
        }
    });
    word.rotate(best)
}

/// A horseshoe periodic orbit, given by its code: the primitive cyclic word
/// stored in its unimodal-maximal rotation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrbitCode(Word);

impl OrbitCode {
    /// Accepts any rotation of a primitive cyclic word.
    pub fn new(cyclic: &Word) -> Result<Self> {
        if !cyclic.is_primitive() {
            return Err(if cyclic.is_empty() {
                Error::EmptyWord
            } else {
                Error::NotPrimitive(cyclic.to_string())
            });
        }
        Ok(OrbitCode(max_rotation(cyclic)))
    }

    pub fn word(&self) -> &Word {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn point(&self, offset: usize) -> OrbitPoint<'_> {
        OrbitPoint {
            code: self,
            offset: offset % self.len(),
        }
    }

    pub fn points(&self) -> impl Iterator<Item = OrbitPoint<'_>> {
        (0..self.len()).map(move |i| self.point(i))
    }
}

impl fmt::Display for OrbitCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Debug for OrbitCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OrbitCode({})", self.0)
    }
}

impl FromStr for OrbitCode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        OrbitCode::new(&s.parse()?)
    }
}

impl Serialize for OrbitCode {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Parses a literal orbit code; panics on bad input.
pub fn code(s: &str) -> OrbitCode {
    s.parse().expect("literal orbit code")
}

/// A point of a periodic orbit: the code plus an offset into it.
///
/// The biinfinite itinerary of the point is `b · f`, where `f` reads the
/// code forward from the offset and `b` reads it backward from offset − 1.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct OrbitPoint<'a> {
    pub code: &'a OrbitCode,
    pub offset: usize,
}

impl<'a> OrbitPoint<'a> {
    pub fn shift(&self, k: isize) -> OrbitPoint<'a> {
        let n = self.code.len() as isize;
        OrbitPoint {
            code: self.code,
            offset: (self.offset as isize + k).rem_euclid(n) as usize,
        }
    }

    pub fn forward_seq(&self) -> Seq {
        Seq::periodic(&self.code.word().rotate(self.offset))
    }

    pub fn backward_seq(&self) -> Seq {
        let n = self.code.len();
        Seq::periodic(&backward_word(self.code.word(), (self.offset + n - 1) % n))
    }
}

/// One period of the sequence read leftward from position `start`.
pub(crate) fn backward_word(cyclic: &Word, start: usize) -> Word {
    let n = cyclic.len();
    Word((0..n).map(|j| cyclic.0[(start + n - j) % n]).collect())
}
