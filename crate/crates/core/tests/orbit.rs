use horseshoe::height::{height, scope};
use horseshoe::orbit::{
    classify, family_code, family_codes, orbit_exists, orbit_height, reverse_orbit, Classification,
};
use horseshoe::survey::necklaces;
use horseshoe::{half, OrbitCode, Rational, Seq, Word};
use proptest::prelude::*;

fn words(max_len: usize) -> Vec<Word> {
    (0..=max_len)
        .flat_map(|n| {
            (0..1u32 << n).map(move |bits| {
                Word::from_symbols((0..n).map(|i| ((bits >> i) & 1) as u8).collect()).unwrap()
            })
        })
        .collect()
}

fn heights(max_den: i64) -> Vec<Rational> {
    let mut out = Vec::new();
    for n in 2..=max_den {
        for m in 1..n {
            let q = Rational::new(m, n);
            if *q.denom() == n && q <= half() {
                out.push(q);
            }
        }
    }
    out
}

#[test]
fn height_is_reversal_invariant() {
    for n in 1..=12 {
        for c in necklaces(n) {
            assert_eq!(orbit_height(&c), orbit_height(&reverse_orbit(&c)), "{c}");
        }
    }
}

#[test]
fn scope_is_reversal_invariant() {
    for w in words(6) {
        assert_eq!(scope(&w), scope(&w.reverse()), "{w}");
    }
}

#[test]
fn decorated_codes_classify_back() {
    for q in heights(8) {
        for w in words(3) {
            if q >= scope(&w) {
                continue;
            }
            for c in family_codes(&q, &w).unwrap() {
                let got = classify(&c).unwrap();
                assert_eq!(got, Classification::Decorated(q, w.clone()), "{c}");
            }
        }
    }
}

#[test]
fn every_short_code_classifies() {
    for n in 1..=10 {
        for c in necklaces(n) {
            let class = classify(&c).unwrap_or_else(|e| panic!("{c}: {e}"));
            let q = orbit_height(&c);
            let den = *q.denom() as usize;
            match class {
                Classification::FixedPoint(_) => assert_eq!(n, 1),
                Classification::PeriodTwo => assert_eq!(n, 2),
                Classification::FiniteOrder(h) => assert_eq!((h, n), (q, den)),
                Classification::Nbt(h) => assert_eq!((h, n), (q, den + 2)),
                Classification::ReducibleNbtHalf => assert_eq!(q, half()),
                Classification::Decorated(h, w) => {
                    assert_eq!(h, q);
                    assert_eq!(n, den + w.len() + 3, "{c}");
                    assert!(q <= scope(&w), "{c}");
                }
            }
        }
    }
}

#[test]
fn family_heights() {
    let q = Rational::new(1, 3);
    let w: Word = "111".parse().unwrap();
    assert_eq!(orbit_exists(&q, &w).unwrap(), 4);
    let c = family_code(&q, 1, &w, 1).unwrap();
    assert_eq!(c.to_string(), "100111111");
    assert_eq!(height(&Seq::periodic(c.word())), q);
    assert!(orbit_exists(&Rational::new(0, 1), &w).is_err());
}

proptest! {
    #[test]
    fn reverse_orbit_is_an_involution(bits in prop::collection::vec(0u8..2, 1..16)) {
        if let Ok(c) = OrbitCode::new(&Word::from_symbols(bits).unwrap()) {
            prop_assert_eq!(reverse_orbit(&reverse_orbit(&c)), c.clone());
            prop_assert_eq!(reverse_orbit(&c).len(), c.len());
        }
    }

    #[test]
    fn height_is_at_most_half(bits in prop::collection::vec(0u8..2, 1..24)) {
        let h = height(&Seq::periodic(&Word::from_symbols(bits).unwrap()));
        prop_assert!(h >= Rational::new(0, 1) && h <= half());
    }
}
