use std::cmp::Ordering;

use horseshoe::families::{
    interwi_expected, is_known_lone, lone_catalog, ones_decoration, ones_family_code, pa_test,
    r_sequence, stabilization_index, star_decoration, star_family_code, starforce_expected,
    PaVerdict,
};
use horseshoe::height::{cq_word, height, scope};
use horseshoe::invariants::r_w;
use horseshoe::survey::necklaces;
use horseshoe::{half, unimodal_cmp, OrbitCode, Rational, Seq, Word};

fn reduced(max_den: i64, below: Rational) -> Vec<Rational> {
    let mut out = Vec::new();
    for n in 2..=max_den {
        for m in 1..n {
            let q = Rational::new(m, n);
            if *q.denom() == n && q < below {
                out.push(q);
            }
        }
    }
    out
}

fn words_of_len(n: usize) -> impl Iterator<Item = Word> {
    (0..1u32 << n).map(move |bits| {
        Word::from_symbols((0..n).map(|i| ((bits >> i) & 1) as u8).collect()).unwrap()
    })
}

#[test]
fn star_family_closed_form() {
    for mn in reduced(8, half()) {
        let w = star_decoration(&mn).unwrap();
        for mpnp in reduced(8, half()) {
            for qp in reduced(9, mpnp) {
                let c = star_family_code(&mpnp, &qp).unwrap();
                let want = starforce_expected(&mn, &mpnp, &qp).unwrap();
                assert_eq!(r_w(&w, &c), want, "w={w} R={c}");
            }
        }
    }
}

#[test]
fn ones_family_closed_form() {
    for q in reduced(8, half()) {
        for i in 0..=3 {
            let c = ones_family_code(i, &q).unwrap();
            for j in 0..=3 {
                assert_eq!(
                    r_w(&ones_decoration(j), &c),
                    interwi_expected(i, j, &q).unwrap(),
                    "i={i} j={j} q={q}"
                );
            }
        }
    }
}

#[test]
fn ones_scope_is_half() {
    for i in 0..=5 {
        assert_eq!(scope(&ones_decoration(i)), half());
        assert!(is_known_lone(&ones_decoration(i)));
    }
}

#[test]
fn r_sequence_decreases_then_stabilizes() {
    for n in 1..=12 {
        let s = stabilization_index(n);
        for c in necklaces(n) {
            let seq = r_sequence(&c, s + 3);
            assert!(seq.windows(2).all(|p| p[0] >= p[1]), "{c}: {seq:?}");
            assert!(seq[s..].iter().all(|x| *x == seq[s]), "{c}: {seq:?}");
        }
    }
}

#[test]
fn drop_needs_odd_block() {
    for n in 1..=12 {
        for c in necklaces(n) {
            let seq = r_sequence(&c, 4);
            let sym = c.word().symbols();
            let has_block = |k: usize| {
                (0..n).any(|s| {
                    let at = |t: usize| sym[(s + t) % n];
                    n >= 2 * k + 3
                        && at(0) == 0
                        && (1..=2 * k + 1).all(|t| at(t) == 1)
                        && at(2 * k + 2) == 0
                })
            };
            for (i, r) in seq.iter().enumerate() {
                if *r < half() {
                    assert!((0..=i + 2).any(has_block), "{c} i={i}");
                }
            }
        }
    }
}

#[test]
fn pa_test_certifies_ones_family() {
    for q in reduced(7, half()) {
        for i in 1..=2 {
            let c = ones_family_code(i, &q).unwrap();
            match pa_test(&c) {
                PaVerdict::Certified { q: r, .. } => assert_eq!(r, q, "{c}"),
                PaVerdict::Unknown => panic!("{c} not certified"),
            }
        }
    }
}

#[test]
fn catalog_members_are_lone() {
    for w in lone_catalog(5).unwrap() {
        assert!(is_known_lone(&w), "{w}");
    }
}

// `q(c) = q` exactly when `(10 w_q 1)^∞ ⪯ c ⪯ 10 w_q 0 (11 w_q 0)^∞`.
#[test]
fn height_sandwich() {
    for q in reduced(8, half()) {
        let wq = star_decoration(&q).unwrap();
        let lo = Seq::periodic(&Word::concat([
            &"10".parse().unwrap(),
            &wq,
            &"1".parse().unwrap(),
        ]));
        let hi = Seq::new(
            Word::concat([&"10".parse().unwrap(), &wq, &"0".parse().unwrap()]),
            Word::concat([&"11".parse().unwrap(), &wq, &"0".parse().unwrap()]),
        )
        .unwrap();
        assert_eq!(height(&lo), q);
        assert_eq!(height(&hi), q);
        assert!(cq_word(&q).unwrap().starts_with(&"10".parse().unwrap()));
        let den = *q.denom() as usize;
        for len in 1..=den + 3 {
            for per in words_of_len(len) {
                let c = Seq::periodic(&per);
                let inside = unimodal_cmp(&lo, &c) != Ordering::Greater
                    && unimodal_cmp(&c, &hi) != Ordering::Greater;
                assert_eq!(height(&c) == q, inside, "q={q} c=({per})");
            }
        }
    }
}

#[test]
fn primitive_star_codes() {
    let c: OrbitCode = star_family_code(&Rational::new(3, 10), &Rational::new(1, 4)).unwrap();
    assert_eq!(c.len(), 5 + 7 + 2);
}
