//! Membership of orbit points in the disks `A_q`, `B_q`, `C_q`, `D_q`
//! bounded by stable and unstable segments through the orbits `P^w_q`, and
//! the forcing criterion built on their intersection counts.
//!
//! This is an independent route to the forcing relation: it never looks at
//! `r^w`, only at unimodal comparisons of the itineraries of `R`.

use std::cmp::Ordering;
use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::height::{cq_word, scope};
use crate::orbit::family_code;
use crate::rational::{require_in, zero};
use crate::word::{unimodal_cmp, OrbitCode, OrbitPoint, Seq, Word};
use crate::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DiskKind {
    A,
    B,
    C,
    D,
}

impl DiskKind {
    pub const ALL: [DiskKind; 4] = [DiskKind::A, DiskKind::B, DiskKind::C, DiskKind::D];

    fn letter(self) -> char {
        match self {
            DiskKind::A => 'A',
            DiskKind::B => 'B',
            DiskKind::C => 'C',
            DiskKind::D => 'D',
        }
    }
}

impl fmt::Display for DiskKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// One of the four disks for height `q` and decoration `w`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiskSpec {
    pub which: DiskKind,
    pub q: Rational,
    pub w: Word,
}

/// The two periodic sequences a point has to exceed.
struct Bounds {
    // compared against f (C, D) or b (A, B)
    first: Seq,
    // compared against σ(b) (C, D) or σ(f) (A, B)
    second: Seq,
}

fn word_of(parts: &[&Word]) -> Word {
    Word::concat(parts.iter().copied())
}

impl DiskSpec {
    pub fn new(which: DiskKind, q: Rational, w: Word) -> Result<Self> {
        require_in(&q, zero(), scope(&w), false, "(0, q_w)")?;
        Ok(DiskSpec { which, q, w })
    }

    fn bounds(&self) -> Bounds {
        let c = cq_word(&self.q).expect("q checked on construction");
        let w = &self.w;
        let wh = w.reverse();
        let s0 = Word::from_vec(vec![0]);
        let s1 = Word::from_vec(vec![1]);
        let (first, second) = match self.which {
            DiskKind::C => (word_of(&[&c, &s0, w, &s0]), word_of(&[&wh, &s0, &c, &s1])),
            DiskKind::D => (word_of(&[&c, &s1, w, &s1]), word_of(&[&wh, &s1, &c, &s0])),
            DiskKind::A => (word_of(&[&c, &s0, &wh, &s0]), word_of(&[w, &s0, &c, &s1])),
            DiskKind::B => (word_of(&[&c, &s1, &wh, &s1]), word_of(&[w, &s1, &c, &s0])),
        };
        Bounds {
            first: Seq::periodic(&first),
            second: Seq::periodic(&second),
        }
    }

    fn contains_with(&self, bounds: &Bounds, p: &OrbitPoint<'_>) -> Result<bool> {
        let (f, b) = (p.forward_seq(), p.backward_seq());
        let (lead, trail) = match self.which {
            DiskKind::C | DiskKind::D => (f, b.shift(1)),
            DiskKind::A | DiskKind::B => (b, f.shift(1)),
        };
        let boundary = Error::OnDiskBoundary(self.which.letter());
        match unimodal_cmp(&lead, &bounds.first) {
            Ordering::Equal => Err(boundary),
            Ordering::Less => Ok(false),
            Ordering::Greater => match unimodal_cmp(&trail, &bounds.second) {
                Ordering::Equal => Err(boundary),
                ord => Ok(ord == Ordering::Greater),
            },
        }
    }

    /// Whether the point lies in the interior of the disk.
    pub fn contains(&self, p: &OrbitPoint<'_>) -> Result<bool> {
        self.contains_with(&self.bounds(), p)
    }
}

pub fn in_disk(spec: &DiskSpec, p: &OrbitPoint<'_>) -> Result<bool> {
    spec.contains(p)
}

/// Number of orbit points inside each disk.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct DiskCounts {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub d: usize,
}

impl fmt::Display for DiskCounts {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A={} B={} C={} D={}", self.a, self.b, self.c, self.d)
    }
}

/// Errors when `R` is itself one of the orbits `c_q ⋄ w ⋄`.
fn check_not_member(code: &OrbitCode, q: &Rational, w: &Word) -> Result<()> {
    for x in 0..2 {
        for y in 0..2 {
            if family_code(q, x, w, y).ok().as_ref() == Some(code) {
                return Err(Error::FamilyMember(code.to_string()));
            }
        }
    }
    Ok(())
}

/// Indices of the orbit points of `code` inside `spec`.
pub fn points_in_disk(code: &OrbitCode, spec: &DiskSpec) -> Result<Vec<usize>> {
    let bounds = spec.bounds();
    let mut out = Vec::new();
    for p in code.points() {
        if spec.contains_with(&bounds, &p)? {
            out.push(p.offset);
        }
    }
    Ok(out)
}

pub fn intersection_counts(code: &OrbitCode, w: &Word, q: &Rational) -> Result<DiskCounts> {
    check_not_member(code, q, w)?;
    let counts = DiskKind::ALL
        .par_iter()
        .map(|&which| {
            let spec = DiskSpec::new(which, *q, w.clone())?;
            Ok(points_in_disk(code, &spec)?.len())
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(DiskCounts {
        a: counts[0],
        b: counts[1],
        c: counts[2],
        d: counts[3],
    })
}

/// Forcing criterion: `R ≥ P^w_q` iff `R` meets `A_q` and `C_q` (even `w`),
/// or `B_q` and `D_q` (odd `w`). Requires `den(q) > 2|R|`; that `P^w_q` is
/// pseudo-Anosov and `w` lone is the caller's assertion.
pub fn forcing_oracle(code: &OrbitCode, w: &Word, q: &Rational) -> Result<bool> {
    let den = *q.denom();
    if den <= 2 * code.len() as i64 {
        return Err(Error::DenominatorTooSmall {
            den,
            period: code.len(),
        });
    }
    let k = intersection_counts(code, w, q)?;
    Ok(if w.is_even() {
        k.a > 0 && k.c > 0
    } else {
        k.b > 0 && k.d > 0
    })
}
