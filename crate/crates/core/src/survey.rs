//! Enumeration of periodic orbits by period, tables of decoration
//! invariants grouped by braid type, and the universality scan.

use std::collections::BTreeMap;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::height::{cq_word, finite_order_word, scope};
use crate::invariants::CodeProfile;
use crate::orbit::{classify, decorated_rotation, Classification};
use crate::rational::{format_ratio, half, require_in, zero};
use crate::word::{unimodal_cmp, OrbitCode, Seq, Word};
use crate::Rational;

/// Lyndon words of length exactly `n` (Fredricksen–Kessler–Maiorana).
fn lyndon_words(n: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut a = vec![0u8; n + 1];
    let mut t = 1;
    loop {
        if t == n {
            out.push(a[1..=n].to_vec());
        }
        // next pre-necklace
        let mut i = n;
        while i > 0 && a[i] == 1 {
            i -= 1;
        }
        if i == 0 {
            break;
        }
        a[i] += 1;
        for j in i + 1..=n {
            a[j] = a[j - i];
        }
        t = i;
    }
    out
}

/// Every periodic orbit of least period `n`, once each, as canonical codes
/// in decreasing unimodal order.
pub fn necklaces(n: usize) -> Vec<OrbitCode> {
    assert!(n >= 1, "period must be positive");
    let mut out: Vec<OrbitCode> = lyndon_words(n)
        .into_iter()
        .map(|v| OrbitCode::new(&Word::from_symbols(v).expect("binary")).expect("primitive"))
        .collect();
    out.sort_by(|a, b| unimodal_cmp(&Seq::periodic(b.word()), &Seq::periodic(a.word())));
    out
}

/// A table column: the NBT invariant `r^*` or the depth `r^w` for one `w`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Column {
    Star,
    Word(Word),
}

impl Column {
    pub fn scope(&self) -> Rational {
        match self {
            Column::Star => half(),
            Column::Word(w) => scope(w),
        }
    }

    fn value(&self, profile: &CodeProfile) -> Rational {
        match self {
            Column::Star => profile.r_star(),
            Column::Word(w) => profile.r_w(w),
        }
    }

    /// `*` for the star column, `.` for the empty word, else the word.
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "*" => Ok(Column::Star),
            "." => Ok(Column::Word(Word::empty())),
            _ => Ok(Column::Word(s.parse()?)),
        }
    }
}

impl fmt::Display for Column {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Column::Star => f.write_str("*"),
            Column::Word(w) if w.is_empty() => f.write_str("."),
            Column::Word(w) => write!(f, "{w}"),
        }
    }
}

/// The columns `∗, ε, 0, 1, 00, 11, 000, 101, 111`.
pub fn standard_columns() -> Vec<Column> {
    let mut out = vec![Column::Star];
    out.extend(
        ["", "0", "1", "00", "11", "000", "101", "111"]
            .iter()
            .map(|s| Column::Word(s.parse().expect("binary"))),
    );
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Row {
    pub label: String,
    pub class: Option<Classification>,
    pub members: Vec<OrbitCode>,
    pub values: Vec<Rational>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table {
    pub period: usize,
    pub columns: Vec<Column>,
    pub scopes: Vec<Rational>,
    pub rows: Vec<Row>,
}

impl Table {
    pub fn row(&self, label: &str) -> Option<&Row> {
        self.rows.iter().find(|r| r.label == label)
    }

    pub fn to_tsv(&self) -> String {
        let mut out = String::from("decoration");
        for c in &self.columns {
            out += &format!("\t{c}");
        }
        out += "\nscope";
        for s in &self.scopes {
            out += &format!("\t{}", format_ratio(s));
        }
        out.push('\n');
        for r in &self.rows {
            out += &r.label;
            for v in &r.values {
                out += &format!("\t{}", format_ratio(v));
            }
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for Table {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_tsv())
    }
}

fn slot(values: &[u8]) -> String {
    match values {
        [x] => x.to_string(),
        _ => ".".into(),
    }
}

/// Row label with `.` standing for a symbol that takes both values.
fn group_label(class: &Classification, members: &[OrbitCode]) -> String {
    let has = |c: &OrbitCode| members.contains(c);
    let tail_label = |head: &Word| {
        let xs: Vec<u8> = (0..2)
            .filter(|&x| {
                let mut w = head.clone();
                w.push(x);
                OrbitCode::new(&w).is_ok_and(|c| has(&c))
            })
            .collect();
        format!("{head}{}", slot(&xs))
    };
    match class {
        Classification::FiniteOrder(q) => tail_label(&finite_order_word(q).expect("valid height")),
        Classification::Nbt(q) => tail_label(&cq_word(q).expect("valid height")),
        Classification::Decorated(q, w) => {
            let n = crate::rational::den_usize(q);
            let present: Vec<(u8, u8)> = members
                .iter()
                .filter_map(|c| decorated_rotation(c, q).ok().flatten())
                .map(|r| (r.symbols()[n + 1], r.symbols()[r.len() - 1]))
                .collect();
            let xs: Vec<u8> = [0, 1]
                .into_iter()
                .filter(|x| present.iter().any(|p| p.0 == *x))
                .collect();
            let ys: Vec<u8> = [0, 1]
                .into_iter()
                .filter(|y| present.iter().any(|p| p.1 == *y))
                .collect();
            let c = cq_word(q).expect("valid height");
            let y = if present.len() == 3 {
                "(.)".to_string()
            } else {
                slot(&ys)
            };
            format!("{c}{}{w}{y}", slot(&xs))
        }
        _ => members[0].to_string(),
    }
}

type GroupKey = (Option<Classification>, String);

/// Invariants of every orbit of one period, one row per braid-type group.
/// Members of a group must agree on every column.
pub fn decinv_table(period: usize, columns: &[Column]) -> Result<Table> {
    let codes = necklaces(period);
    let computed: Vec<(OrbitCode, Option<Classification>, Vec<Rational>)> = codes
        .par_iter()
        .map(|c| {
            let profile = CodeProfile::new(c);
            let values = columns.iter().map(|col| col.value(&profile)).collect();
            (c.clone(), classify(c).ok(), values)
        })
        .collect();

    // group key: the classification, or the code itself when unclassified
    let mut groups: BTreeMap<GroupKey, Vec<(OrbitCode, Vec<Rational>)>> = BTreeMap::new();
    for (code, class, values) in computed {
        let key = match &class {
            Some(_) => (class.clone(), String::new()),
            None => (None, code.to_string()),
        };
        groups.entry(key).or_default().push((code, values));
    }

    let mut rows = Vec::new();
    for ((class, _), members) in groups {
        let codes: Vec<OrbitCode> = members.iter().map(|m| m.0.clone()).collect();
        let label = match &class {
            Some(c) => group_label(c, &codes),
            None => codes[0].to_string(),
        };
        if members.iter().any(|m| m.1 != members[0].1) {
            return Err(Error::GroupDisagreement(label));
        }
        rows.push(Row {
            label,
            class,
            values: members[0].1.clone(),
            members: codes,
        });
    }
    // increasing unimodal order of the smallest member
    let key = |r: &Row| {
        r.members
            .iter()
            .map(|m| Seq::periodic(m.word()))
            .min_by(unimodal_cmp)
            .expect("groups are nonempty")
    };
    rows.sort_by(|a, b| unimodal_cmp(&key(a), &key(b)));
    Ok(Table {
        period,
        scopes: columns.iter().map(Column::scope).collect(),
        columns: columns.to_vec(),
        rows,
    })
}

fn check_scan_args(w: &Word, q: &Rational) -> Result<()> {
    require_in(q, zero(), scope(w), false, "(0, q_w)")?;
    Ok(())
}

/// Proportion of period-`n` orbits `R` with `r^w(R) < q`, over all of them.
pub fn universality_scan(w: &Word, q: &Rational, n: usize) -> Result<Rational> {
    check_scan_args(w, q)?;
    let codes = necklaces(n);
    let hits = codes
        .par_iter()
        .filter(|c| CodeProfile::new(c).r_w(w) < *q)
        .count();
    Ok(Rational::new(hits as i64, codes.len() as i64))
}

/// Same proportion estimated from `samples` uniformly drawn period-`n`
/// orbits (words of length `n` are drawn until one is primitive).
pub fn universality_sample(
    w: &Word,
    q: &Rational,
    n: usize,
    samples: usize,
    seed: u64,
) -> Result<Rational> {
    check_scan_args(w, q)?;
    assert!(samples > 0 && n > 0);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut codes = Vec::with_capacity(samples);
    while codes.len() < samples {
        let word = Word::from_vec((0..n).map(|_| rng.gen_range(0..2u8)).collect());
        if let Ok(c) = OrbitCode::new(&word) {
            codes.push(c);
        }
    }
    let hits = codes
        .par_iter()
        .filter(|c| CodeProfile::new(c).r_w(w) < *q)
        .count();
    Ok(Rational::new(hits as i64, samples as i64))
}
