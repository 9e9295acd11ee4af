//! Height and decoration of horseshoe periodic orbits.
//!
//! Every periodic orbit is a fixed point, the period two orbit, of finite
//! order type (codes `d_q⋄`), an NBT orbit (codes `c_q⋄`), or is described
//! by its height `q` and a decoration `w` (codes `c_q⋄w⋄`).

use std::fmt;

use crate::error::{Error, Result};
use crate::height::{cq_word, height, scope};
use crate::rational::{den_usize, format_ratio, half, require_in, zero};
use crate::word::{unimodal_cmp, OrbitCode, Seq, Word};
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Classification {
    FixedPoint(u8),
    PeriodTwo,
    FiniteOrder(Rational),
    Nbt(Rational),
    ReducibleNbtHalf,
    Decorated(Rational, Word),
}

impl Classification {
    pub fn kind(&self) -> &'static str {
        match self {
            Classification::FixedPoint(_) => "fixed-point",
            Classification::PeriodTwo => "period-two",
            Classification::FiniteOrder(_) => "finite-order",
            Classification::Nbt(_) => "nbt",
            Classification::ReducibleNbtHalf => "reducible-nbt-half",
            Classification::Decorated(..) => "decorated",
        }
    }

    pub fn decoration(&self) -> Option<&Word> {
        match self {
            Classification::Decorated(_, w) => Some(w),
            _ => None,
        }
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Classification::FixedPoint(s) => write!(f, "fixed point {s}"),
            Classification::PeriodTwo => f.write_str("period two"),
            Classification::FiniteOrder(q) => write!(f, "finite order {}", format_ratio(q)),
            Classification::Nbt(q) => write!(f, "NBT {}", format_ratio(q)),
            Classification::ReducibleNbtHalf => f.write_str("reducible NBT 1/2"),
            Classification::Decorated(q, w) => {
                write!(f, "height {} decoration {:?}", format_ratio(q), w)
            }
        }
    }
}

/// The unimodal-maximal rotation of a primitive cyclic word.
pub fn canonical_code(cyclic: &Word) -> Result<Word> {
    Ok(OrbitCode::new(cyclic)?.word().clone())
}

/// Whether the orbit has a partner whose code differs in the last symbol.
pub fn is_paired(code: &OrbitCode) -> bool {
    code.word()
        .flip_last()
        .map(|w| w.is_primitive())
        .unwrap_or(false)
}

/// The code used for height computations: the paired variant ending in 0
/// when there is one.
pub fn working_code(code: &OrbitCode) -> Word {
    let w = code.word();
    if w.last() == Some(1) && is_paired(code) {
        w.flip_last().expect("nonempty")
    } else {
        w.clone()
    }
}

pub fn orbit_height(code: &OrbitCode) -> Rational {
    height(&Seq::periodic(&working_code(code)))
}

/// Canonical code of the orbit obtained by reading the code backwards.
pub fn reverse_orbit(code: &OrbitCode) -> OrbitCode {
    OrbitCode::new(&code.word().reverse()).expect("reversal keeps primitivity")
}

pub fn classify(code: &OrbitCode) -> Result<Classification> {
    let word = code.word();
    let big_n = word.len();
    match big_n {
        1 => return Ok(Classification::FixedPoint(word.symbols()[0])),
        2 => return Ok(Classification::PeriodTwo),
        _ => {}
    }
    let q = orbit_height(code);
    let not_found = || Error::DecorationNotFound {
        code: word.to_string(),
        height: q,
    };
    if q == zero() {
        return Err(not_found());
    }
    let n = den_usize(&q);
    if big_n == n {
        return Ok(Classification::FiniteOrder(q));
    }
    if big_n == n + 2 {
        return Ok(if q < half() {
            Classification::Nbt(q)
        } else {
            Classification::ReducibleNbtHalf
        });
    }
    if big_n < n + 3 {
        return Err(not_found());
    }
    let rotation = decorated_rotation(code, &q)?.ok_or_else(not_found)?;
    Ok(Classification::Decorated(
        q,
        rotation.slice(n + 2, big_n - 1),
    ))
}

/// The rotation `c_q x w y` of the code read off by [`classify`]: the
/// unimodal-largest rotation beginning with `c_q`.
pub fn decorated_rotation(code: &OrbitCode, q: &Rational) -> Result<Option<Word>> {
    let cq = cq_word(q)?;
    let word = code.word();
    Ok((0..word.len())
        .map(|i| word.rotate(i))
        .filter(|r| r.starts_with(&cq))
        .max_by(|a, b| unimodal_cmp(&Seq::periodic(a), &Seq::periodic(b))))
}

/// The word `c_q x w y`.
pub fn family_word(q: &Rational, x: u8, w: &Word, y: u8) -> Result<Word> {
    let mut out = cq_word(q)?;
    out.push(x);
    let mut out = out.cat(w);
    out.push(y);
    Ok(out)
}

/// The codes `c_q x w y` that are primitive and have height exactly `q`.
pub fn family_codes(q: &Rational, w: &Word) -> Result<Vec<OrbitCode>> {
    require_in(q, zero(), half(), true, "(0, 1/2]")?;
    let mut out = Vec::new();
    for x in 0..2 {
        for y in 0..2 {
            let word = family_word(q, x, w, y)?;
            if let Ok(code) = OrbitCode::new(&word) {
                if orbit_height(&code) == *q {
                    out.push(code);
                }
            }
        }
    }
    Ok(out)
}

/// Number of the four words `c_q ⋄ w ⋄` that are codes of orbits of height `q`.
pub fn orbit_exists(q: &Rational, w: &Word) -> Result<usize> {
    Ok(family_codes(q, w)?.len())
}

fn is_prime(n: usize) -> bool {
    n >= 2
        && (2..)
            .take_while(|d| d * d <= n)
            .all(|d| !n.is_multiple_of(d))
}

/// Prime period test: `den(q) + |w| + 3` prime, for `0 < q < q_w`.
pub fn q_in_qw_sufficient(q: &Rational, w: &Word) -> Result<bool> {
    require_in(q, zero(), scope(w), false, "(0, q_w)")?;
    Ok(is_prime(den_usize(q) + w.len() + 3))
}

/// The canonical code of `c_q x w y`, rotated to its maximal rotation.
pub fn family_code(q: &Rational, x: u8, w: &Word, y: u8) -> Result<OrbitCode> {
    OrbitCode::new(&family_word(q, x, w, y)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::parse_rational as r;
    use crate::word::{code, w};

    fn rq(s: &str) -> Rational {
        r(s).unwrap()
    }

    #[test]
    fn canonical_rotations() {
        assert_eq!(canonical_code(&w("00101")).unwrap(), w("10010"));
        assert_eq!(canonical_code(&w("1")).unwrap(), w("1"));
        assert!(canonical_code(&w("0101")).is_err());
    }

    #[test]
    fn pairing() {
        assert!(is_paired(&code("10010")));
        assert!(!is_paired(&code("10")));
        assert!(!is_paired(&code("1011")));
    }

    #[test]
    fn heights() {
        assert_eq!(orbit_height(&code("10010")), rq("1/3"));
        assert_eq!(orbit_height(&code("10000011")), rq("1/6"));
        assert_eq!(orbit_height(&code("10000010")), rq("1/6"));
        assert_eq!(orbit_height(&code("1")), half());
    }

    #[test]
    fn reversal() {
        assert_eq!(reverse_orbit(&code("10010")), code("10010"));
        assert_eq!(reverse_orbit(&code("1")), code("1"));
        let r = code("100010111001010");
        assert_eq!(reverse_orbit(&r), code("010100111010001"));
        assert_eq!(reverse_orbit(&reverse_orbit(&r)), r);
    }

    #[test]
    fn classification_examples() {
        assert_eq!(
            classify(&code("10010110")).unwrap(),
            Classification::Decorated(rq("1/3"), w("11"))
        );
        assert_eq!(
            classify(&code("10000011")).unwrap(),
            Classification::Nbt(rq("1/6"))
        );
        assert_eq!(
            classify(&code("10110110")).unwrap(),
            Classification::FiniteOrder(rq("3/8"))
        );
        assert_eq!(
            classify(&code("10000011100")).unwrap(),
            Classification::Decorated(rq("1/6"), w("10"))
        );
        assert_eq!(
            classify(&code("1011")).unwrap(),
            Classification::ReducibleNbtHalf
        );
        assert_eq!(classify(&code("0")).unwrap(), Classification::FixedPoint(0));
        assert_eq!(classify(&code("10")).unwrap(), Classification::PeriodTwo);
        assert_eq!(
            classify(&code("10111010")).unwrap(),
            Classification::Decorated(half(), w("101"))
        );
    }

    #[test]
    fn existence_counts() {
        assert_eq!(orbit_exists(&rq("1/3"), &w("11")).unwrap(), 4);
        assert_eq!(orbit_exists(&rq("2/5"), &w("00")).unwrap(), 0);
        assert_eq!(orbit_exists(&rq("1/4"), &w("0")).unwrap(), 3);
    }

    #[test]
    fn prime_period_test() {
        assert!(!q_in_qw_sufficient(&rq("1/3"), &w("11")).unwrap());
        assert!(!q_in_qw_sufficient(&rq("1/5"), &w("11")).unwrap());
        assert!(q_in_qw_sufficient(&rq("1/6"), &w("11")).unwrap());
        // 1/3 is the scope of the empty decoration itself
        assert!(q_in_qw_sufficient(&rq("1/3"), &Word::empty()).is_err());
        assert!(!q_in_qw_sufficient(&rq("1/5"), &Word::empty()).unwrap());
        assert!(q_in_qw_sufficient(&rq("1/4"), &Word::empty()).unwrap());
        assert!(q_in_qw_sufficient(&rq("1/2"), &w("11")).is_err());
    }
}
