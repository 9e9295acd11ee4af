use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use horseshoe::disks::{forcing_oracle, intersection_counts};
use horseshoe::entropy::{h_poly, hbar_poly, largest_root};
use horseshoe::families::{
    lone_catalog, pa_test, r_sequence, star_decoration, star_family_code, starforce_expected,
    PaVerdict,
};
use horseshoe::height::{cq_word, height, height_oracle, scope};
use horseshoe::invariants::{forces, CodeProfile};
use horseshoe::orbit::{classify, Classification};
use horseshoe::survey::{
    decinv_table, standard_columns, universality_sample, universality_scan, Column, Table,
};
use horseshoe::{format_ratio, parse_rational, OrbitCode, Rational, Seq, Word};

#[derive(Parser)]
#[command(
    name = "horseshoe",
    version,
    about = "Heights, decorations and forcing invariants of horseshoe periodic orbits"
)]
struct Cli {
    /// Output format; tsv is an alias of text
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Tsv,
    Json,
}

fn rational(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

// "." and "" both stand for the empty word
fn word(s: &str) -> Result<Word, String> {
    if s == "." {
        return Ok(Word::empty());
    }
    s.parse().map_err(|e: horseshoe::Error| e.to_string())
}

fn orbit(s: &str) -> Result<OrbitCode, String> {
    s.parse().map_err(|e: horseshoe::Error| e.to_string())
}

fn sequence(s: &str) -> Result<Seq, String> {
    s.parse().map_err(|e: horseshoe::Error| e.to_string())
}

fn column(s: &str) -> Result<Column, String> {
    Column::parse(s).map_err(|e| e.to_string())
}

#[derive(Subcommand)]
enum Command {
    /// Height of an eventually periodic sequence written PRE(PER)
    Height {
        #[arg(value_parser = sequence)]
        seq: Seq,
        /// Also locate the height by comparisons only, up to this denominator
        #[arg(long)]
        oracle: Option<u64>,
    },
    /// The word c_q
    Cq {
        #[arg(value_parser = rational)]
        q: Rational,
    },
    /// Scope q_w of a decoration ("." for the empty word)
    Scope {
        #[arg(value_parser = word)]
        w: Word,
    },
    /// Height and decoration of an orbit code
    Classify {
        #[arg(value_parser = orbit)]
        code: OrbitCode,
    },
    /// mu, nu, lambda and r for a decoration
    Rinv {
        #[arg(value_parser = orbit)]
        code: OrbitCode,
        #[arg(value_parser = word)]
        w: Word,
    },
    /// The NBT invariant r^*
    Rstar {
        #[arg(value_parser = orbit)]
        code: OrbitCode,
    },
    /// Whether the orbit forces the height-q orbits of decoration w
    Force {
        #[arg(value_parser = orbit)]
        code: OrbitCode,
        #[arg(value_parser = word)]
        w: Word,
        #[arg(value_parser = rational)]
        q: Rational,
    },
    /// Disk intersection counts and the disk forcing criterion
    Disks {
        #[arg(value_parser = orbit)]
        code: OrbitCode,
        #[arg(value_parser = word)]
        w: Word,
        #[arg(value_parser = rational)]
        q: Rational,
    },
    /// r^{m/n} of the star-family orbit P^{m'/n'}_{q'}, computed and closed form
    Star {
        #[arg(value_parser = rational)]
        mn: Rational,
        #[arg(value_parser = rational)]
        mpnp: Rational,
        #[arg(value_parser = rational)]
        qp: Rational,
    },
    /// The 1^{2i+1} decoration family
    Family {
        #[command(subcommand)]
        op: FamilyOp,
    },
    /// Known lone decorations
    Lone {
        #[arg(long, default_value_t = 3)]
        max_len: usize,
    },
    /// Entropy polynomial H^i_q (or H-bar with --bar) and its largest root in (1, 2]
    Entropy {
        #[arg(long)]
        i: usize,
        #[arg(long, value_parser = rational)]
        q: Rational,
        #[arg(long)]
        bar: bool,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
    /// Table of invariants for all orbits of one period
    Table {
        #[arg(long)]
        period: usize,
        /// Comma separated columns: * for r^*, . for the empty word
        #[arg(long, value_delimiter = ',', value_parser = column)]
        decorations: Option<Vec<Column>>,
    },
    /// Proportion of period-n orbits with r^w < q
    Scan {
        #[arg(long, value_parser = word)]
        w: Word,
        #[arg(long, value_parser = rational)]
        q: Rational,
        #[arg(long)]
        n: usize,
        /// Draw this many random orbits instead of enumerating all of them
        #[arg(long)]
        sample: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum FamilyOp {
    /// r^0(R), ..., r^{imax}(R)
    RSeq {
        #[arg(value_parser = orbit)]
        code: OrbitCode,
        imax: usize,
    },
    /// Pseudo-Anosov certificate from the r^i sequence
    Pa {
        #[arg(value_parser = orbit)]
        code: OrbitCode,
    },
}

fn fr(q: &Rational) -> String {
    format_ratio(q)
}

fn class_json(c: &Classification) -> Value {
    match c {
        Classification::FixedPoint(s) => json!({"kind": c.kind(), "symbol": s}),
        Classification::PeriodTwo | Classification::ReducibleNbtHalf => json!({"kind": c.kind()}),
        Classification::FiniteOrder(q) | Classification::Nbt(q) => {
            json!({"kind": c.kind(), "height": fr(q)})
        }
        Classification::Decorated(q, w) => {
            json!({"kind": c.kind(), "height": fr(q), "decoration": w.to_string()})
        }
    }
}

fn table_json(t: &Table) -> Value {
    json!({
        "period": t.period,
        "columns": t.columns.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        "scope": t.scopes.iter().map(fr).collect::<Vec<_>>(),
        "rows": t.rows.iter().map(|r| json!({
            "label": r.label,
            "members": r.members.iter().map(|m| m.to_string()).collect::<Vec<_>>(),
            "values": r.values.iter().map(fr).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
    })
}

/// Text and JSON renderings of one result.
struct Output {
    text: String,
    json: Value,
}

fn out(text: impl Into<String>, json: Value) -> Result<Output> {
    Ok(Output {
        text: text.into(),
        json,
    })
}

fn run(command: Command) -> Result<Output> {
    match command {
        Command::Height { seq, oracle } => {
            let q = height(&seq);
            match oracle {
                None => out(fr(&q), json!({"seq": seq.to_string(), "height": fr(&q)})),
                Some(max_den) => {
                    let o = height_oracle(&seq, max_den)?;
                    out(
                        format!("{}\noracle {}", fr(&q), fr(&o)),
                        json!({"seq": seq.to_string(), "height": fr(&q), "oracle": fr(&o)}),
                    )
                }
            }
        }
        Command::Cq { q } => {
            let c = cq_word(&q)?;
            out(c.to_string(), json!({"q": fr(&q), "cq": c.to_string()}))
        }
        Command::Scope { w } => {
            let s = scope(&w);
            out(fr(&s), json!({"w": w.to_string(), "scope": fr(&s)}))
        }
        Command::Classify { code } => {
            let c = classify(&code)?;
            let mut j = class_json(&c);
            j["code"] = json!(code.to_string());
            out(c.to_string(), j)
        }
        Command::Rinv { code, w } => {
            let inv = CodeProfile::new(&code).invariants(&w);
            out(
                inv.to_string(),
                json!({"code": code.to_string(), "w": w.to_string(), "mu": fr(&inv.mu),
                       "nu": fr(&inv.nu), "lambda": fr(&inv.lambda), "r": fr(&inv.r)}),
            )
        }
        Command::Rstar { code } => {
            let r = CodeProfile::new(&code).r_star();
            out(fr(&r), json!({"code": code.to_string(), "rstar": fr(&r)}))
        }
        Command::Force { code, w, q } => {
            let v = forces(&code, &w, &q)?;
            out(
                v.to_string(),
                json!({"code": code.to_string(), "w": w.to_string(), "q": fr(&q), "verdict": v.to_string()}),
            )
        }
        Command::Disks { code, w, q } => {
            let k = intersection_counts(&code, &w, &q)?;
            let verdict = match forcing_oracle(&code, &w, &q) {
                Ok(true) => "FORCED".to_string(),
                Ok(false) => "NOT-FORCED".to_string(),
                Err(e) => format!("UNDECIDED ({e})"),
            };
            out(
                format!("{k}\n{verdict}"),
                json!({"A": k.a, "B": k.b, "C": k.c, "D": k.d, "verdict": verdict}),
            )
        }
        Command::Star { mn, mpnp, qp } => {
            let expected = starforce_expected(&mn, &mpnp, &qp)?;
            let code = star_family_code(&mpnp, &qp)?;
            let r = CodeProfile::new(&code).r_w(&star_decoration(&mn)?);
            out(
                format!("code={code} r={} expected={}", fr(&r), fr(&expected)),
                json!({"code": code.to_string(), "r": fr(&r), "expected": fr(&expected)}),
            )
        }
        Command::Family { op } => match op {
            FamilyOp::RSeq { code, imax } => {
                let s: Vec<String> = r_sequence(&code, imax).iter().map(fr).collect();
                out(s.join(" "), json!({"code": code.to_string(), "r": s}))
            }
            FamilyOp::Pa { code } => {
                let v = pa_test(&code);
                let j = match v {
                    PaVerdict::Certified { i, q } => {
                        json!({"verdict": "certified", "i": i, "r": fr(&q)})
                    }
                    PaVerdict::Unknown => json!({"verdict": "unknown"}),
                };
                out(v.to_string(), j)
            }
        },
        Command::Lone { max_len } => {
            let ws: Vec<String> = lone_catalog(max_len)?
                .iter()
                .map(|w| {
                    if w.is_empty() {
                        ".".into()
                    } else {
                        w.to_string()
                    }
                })
                .collect();
            out(ws.join("\n"), json!(ws))
        }
        Command::Entropy { i, q, bar, tol } => {
            if tol.is_nan() || tol <= 0.0 {
                bail!("tolerance must be positive");
            }
            let p = if bar {
                hbar_poly::<i64>(i, &q)?
            } else {
                h_poly::<i64>(i, &q)?
            };
            let root: f64 = largest_root(&p, 1.0, 2.0, tol)?;
            out(
                format!("{:?}\nroot {root:.9}\nlog {:.9}", p.coeffs(), root.ln()),
                json!({"coefficients": p.coeffs(), "root": root, "log": root.ln()}),
            )
        }
        Command::Table {
            period,
            decorations,
        } => {
            if period < 3 {
                bail!("period must be at least 3");
            }
            let cols = decorations.unwrap_or_else(standard_columns);
            let t = decinv_table(period, &cols)?;
            let j = table_json(&t);
            out(t.to_tsv().trim_end().to_string(), j)
        }
        Command::Scan {
            w,
            q,
            n,
            sample,
            seed,
        } => {
            if n == 0 {
                bail!("period must be positive");
            }
            let p = match sample {
                Some(0) => bail!("sample size must be positive"),
                Some(k) => universality_sample(&w, &q, n, k, seed)?,
                None => universality_scan(&w, &q, n)?,
            };
            let x = *p.numer() as f64 / *p.denom() as f64;
            out(
                format!("{} {x:.6}", fr(&p)),
                json!({"w": w.to_string(), "q": fr(&q), "n": n, "p": fr(&p), "value": x}),
            )
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command).context("computation failed") {
        Ok(o) => {
            match cli.format {
                Format::Json => println!("{}", o.json),
                Format::Text | Format::Tsv => println!("{}", o.text),
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {:#}", e);
            ExitCode::from(1)
        }
    }
}
