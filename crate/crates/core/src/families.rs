//! Two infinite families of lone decorations, the star words `w_{m/n}` and
//! the odd blocks of ones `w_i = 1^{2i+1}`, together with closed forms for
//! their invariants and a catalog of short lone decorations.

use std::fmt;

use crate::error::{Error, Result};
use crate::height::cq_word;
use crate::invariants::CodeProfile;
use crate::orbit::family_code;
use crate::rational::{den_usize, half, require_in, zero};
use crate::word::{OrbitCode, Word};
use crate::Rational;

/// `c_{m/n}` with the leading `10` and trailing `01` removed.
pub fn star_decoration(q: &Rational) -> Result<Word> {
    require_in(q, zero(), half(), false, "(0, 1/2)")?;
    let c = cq_word(q)?;
    Ok(c.slice(2, c.len() - 2))
}

/// Code `c_{q'} 0 w_{m/n} 0` of the star family orbit `P^{m/n}_{q'}`.
pub fn star_family_code(mn: &Rational, qp: &Rational) -> Result<OrbitCode> {
    let w = star_decoration(mn)?;
    require_in(qp, zero(), *mn, false, "(0, m/n)")?;
    family_code(qp, 0, &w, 0)
}

/// Closed form of `r^{m/n}(P^{m'/n'}_{q'})`.
pub fn starforce_expected(mn: &Rational, mpnp: &Rational, qp: &Rational) -> Result<Rational> {
    require_in(mn, zero(), half(), false, "(0, 1/2)")?;
    require_in(mpnp, zero(), half(), false, "(0, 1/2)")?;
    require_in(qp, zero(), *mpnp, false, "(0, m'/n')")?;
    Ok(if qp < mn && mn <= mpnp { *qp } else { *mn })
}

/// `w_i = 1^{2i+1}`.
pub fn ones_decoration(i: usize) -> Word {
    Word::repeat(1, 2 * i + 1)
}

/// Code `c_q 1 w_i 1` of `P^i_q`.
pub fn ones_family_code(i: usize, q: &Rational) -> Result<OrbitCode> {
    require_in(q, zero(), half(), false, "(0, 1/2)")?;
    family_code(q, 1, &ones_decoration(i), 1)
}

/// Closed form of `r^j(P^i_q)`.
pub fn interwi_expected(i: usize, j: usize, q: &Rational) -> Result<Rational> {
    require_in(q, zero(), half(), false, "(0, 1/2)")?;
    Ok(if j >= i { *q } else { half() })
}

/// `[r^0(R), …, r^{i_max}(R)]` for the decorations `1^{2i+1}`.
pub fn r_sequence(code: &OrbitCode, i_max: usize) -> Vec<Rational> {
    let profile = CodeProfile::new(code);
    (0..=i_max)
        .map(|i| profile.r_w(&ones_decoration(i)))
        .collect()
}

/// Index from which the sequence `r^i(R)` is constant.
pub fn stabilization_index(period: usize) -> usize {
    period.saturating_sub(7) / 2
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PaVerdict {
    /// Pseudo-Anosov, witnessed by the drop `r^{i-1} > r^i = q`.
    Certified {
        i: usize,
        q: Rational,
    },
    Unknown,
}

impl fmt::Display for PaVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PaVerdict::Certified { i, q } => {
                write!(f, "CERTIFIED i={i} r={}", crate::format_ratio(q))
            }
            PaVerdict::Unknown => f.write_str("UNKNOWN"),
        }
    }
}

fn largest_proper_divisor(n: usize) -> usize {
    (2..=n).find(|d| n.is_multiple_of(*d)).map_or(1, |p| n / p)
}

/// Sufficient test for pseudo-Anosov braid type from a strict drop in the
/// `r^i` sequence.
pub fn pa_test(code: &OrbitCode) -> PaVerdict {
    let big_n = code.len();
    let seq = r_sequence(code, stabilization_index(big_n) + 1);
    let d = largest_proper_divisor(big_n);
    for i in 1..seq.len() {
        let q = seq[i];
        if q < seq[i - 1] && d < den_usize(&q) + 2 * i + 4 {
            return PaVerdict::Certified { i, q };
        }
    }
    PaVerdict::Unknown
}

const LONE: [&str; 21] = [
    "", "0", "1", "00", "11", "000", "111", "101", "0000", "0110", "1111", "1001", "00000",
    "01001", "11001", "10010", "10011", "11011", "11111", "10101", "10001",
];

/// The known lone decorations of length at most `max_len` (at most 5).
pub fn lone_catalog(max_len: usize) -> Result<Vec<Word>> {
    if max_len > 5 {
        return Err(Error::CatalogExhausted);
    }
    Ok(LONE
        .iter()
        .filter(|s| s.len() <= max_len)
        .map(|s| s.parse().expect("catalog words are binary"))
        .collect())
}

/// Catalog member, star decoration or odd block of ones.
pub fn is_known_lone(w: &Word) -> bool {
    if LONE.iter().any(|s| *s == w.to_string()) {
        return true;
    }
    if w.ones() == w.len() && w.len() % 2 == 1 {
        return true;
    }
    let n = w.len() as i64 + 3;
    (1..n)
        .filter(|m| 2 * m < n)
        .any(|m| star_decoration(&Rational::new(m, n)).ok().as_ref() == Some(w))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::height::{cq_kappas, scope};
    use crate::rational::parse_rational as r;
    use crate::word::{code, w};

    fn rq(s: &str) -> Rational {
        r(s).unwrap()
    }

    #[test]
    fn star_words() {
        assert_eq!(star_decoration(&rq("1/3")).unwrap(), Word::empty());
        assert_eq!(star_decoration(&rq("1/4")).unwrap(), w("0"));
        assert_eq!(star_decoration(&rq("3/10")).unwrap(), w("0110110"));
        assert!(star_decoration(&half()).is_err());
    }

    #[test]
    fn star_words_match_the_run_formula() {
        // 0^{κ1-1} 11 0^{κ2} … 11 0^{κm-1}, for m ≥ 2
        for n in 5..=20 {
            for m in 2..n {
                let q = Rational::new(m, n);
                if *q.denom() != n || q >= half() {
                    continue;
                }
                let k = cq_kappas(&q).unwrap();
                let mut expect = Word::repeat(0, k[0] - 1);
                for (j, &kj) in k.iter().enumerate().skip(1) {
                    expect = expect.cat(&w("11"));
                    let e = if j == k.len() - 1 { kj - 1 } else { kj };
                    expect = expect.cat(&Word::repeat(0, e));
                }
                assert_eq!(star_decoration(&q).unwrap(), expect, "{q}");
            }
        }
    }

    #[test]
    fn star_scope_is_its_rational() {
        for n in 3..=16 {
            for m in 1..n {
                let q = Rational::new(m, n);
                if *q.denom() == n && q < half() {
                    assert_eq!(scope(&star_decoration(&q).unwrap()), q);
                }
            }
        }
    }

    #[test]
    fn starforce_cases() {
        let e = |a, b, c| starforce_expected(&rq(a), &rq(b), &rq(c)).unwrap();
        assert_eq!(e("1/3", "2/5", "1/4"), rq("1/4"));
        assert_eq!(e("2/5", "1/3", "1/4"), rq("2/5"));
        assert_eq!(e("1/3", "2/5", "1/3"), rq("1/3"));
        assert!(starforce_expected(&rq("1/3"), &rq("1/4"), &rq("1/3")).is_err());
    }

    #[test]
    fn ones_words() {
        assert_eq!(ones_decoration(0), w("1"));
        assert_eq!(ones_decoration(2), w("11111"));
        assert_eq!(ones_family_code(1, &rq("1/3")).unwrap(), code("100111111"));
        assert_eq!(interwi_expected(1, 3, &rq("1/5")).unwrap(), rq("1/5"));
        assert_eq!(interwi_expected(1, 0, &rq("1/5")).unwrap(), half());
        assert_eq!(interwi_expected(2, 2, &rq("1/3")).unwrap(), rq("1/3"));
    }

    #[test]
    fn r_sequences() {
        let s = r_sequence(&code("10000011100"), 4);
        assert_eq!(s[0], rq("1/3"));
        assert!(s[2..].iter().all(|x| *x == s[2]));
        assert!(r_sequence(&code("10"), 3).iter().all(|x| *x == half()));
        assert_eq!(stabilization_index(9), 1);
        assert_eq!(stabilization_index(5), 0);
    }

    #[test]
    fn pa_examples() {
        assert_eq!(
            pa_test(&code("100111111")),
            PaVerdict::Certified { i: 1, q: rq("1/3") }
        );
        assert_eq!(pa_test(&code("10")), PaVerdict::Unknown);
        assert_eq!(pa_test(&code("10000010")), PaVerdict::Unknown);
        assert_eq!(largest_proper_divisor(9), 3);
        assert_eq!(largest_proper_divisor(7), 1);
    }

    #[test]
    fn catalog() {
        assert_eq!(
            lone_catalog(1).unwrap(),
            vec![Word::empty(), w("0"), w("1")]
        );
        assert_eq!(lone_catalog(2).unwrap().len(), 5);
        assert_eq!(lone_catalog(3).unwrap().len(), 8);
        assert_eq!(lone_catalog(5).unwrap().len(), 21);
        assert_eq!(lone_catalog(6), Err(Error::CatalogExhausted));
        assert!(is_known_lone(&w("1111111")));
        assert!(is_known_lone(&w("0110110")));
        assert!(!is_known_lone(&w("10")));
    }
}
