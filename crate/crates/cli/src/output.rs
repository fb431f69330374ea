//! Rendering of results as JSON, CSV or plain tables.

use std::fmt::{Display, Write};

use clap::ValueEnum;
use modfusion::admissible::AdmissibleLevel;
use modfusion::coset::CosetDecomposition;
use modfusion::linalg::Matrix;
use modfusion::walg::{WLabels, WLevel};
use modfusion::{FusionTable, Report, Weight};
use serde::Serialize;
use serde_json::json;

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Table,
}

/// Decimal digits shown for a given number of mantissa bits.
pub fn digits_for_bits(bits: u32) -> usize {
    ((bits.min(53) as f64) * std::f64::consts::LOG10_2).floor().max(1.0) as usize
}

fn to_json(v: &impl Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn complex(re: f64, im: f64, d: usize) -> String {
    // Avoid printing "-0.000".
    let clean = |x: f64| if x.abs() < 0.5 * 10f64.powi(-(d as i32)) { 0.0 } else { x };
    let (re, im) = (clean(re), clean(im));
    if im == 0.0 {
        format!("{re:.d$}")
    } else if im < 0.0 {
        format!("{re:.d$}-{:.d$}i", -im)
    } else {
        format!("{re:.d$}+{im:.d$}i")
    }
}

pub fn simples(fmt: Format, l: &AdmissibleLevel, simples: &[Weight]) -> String {
    match fmt {
        Format::Json => to_json(&json!({
            "algebra": l.rs().to_string(),
            "u": l.u(),
            "v": l.v(),
            "level": l.level().to_string(),
            "simples": simples,
        })),
        Format::Csv => {
            let mut s = String::from("index,label\n");
            for (i, w) in simples.iter().enumerate() {
                let _ = writeln!(s, "{i},{}", csv_field(&w.to_string()));
            }
            s
        }
        Format::Table => {
            let mut s = format!("{} at level {}: {} simples\n", l.rs(), l.level(), simples.len());
            for (i, w) in simples.iter().enumerate() {
                let _ = writeln!(s, "{i:>4}  {w}");
            }
            s
        }
    }
}

pub fn w_simples(fmt: Format, k: &WLevel, labels: &WLabels) -> String {
    match fmt {
        Format::Json => to_json(&json!({
            "algebra": format!("W({})", k.rs()),
            "u": k.u(),
            "v": k.v(),
            "k": k.k().to_string(),
            "labels": labels,
        })),
        Format::Csv => {
            let mut s = String::from("index,label,orbit_size\n");
            for (i, c) in labels.classes.iter().enumerate() {
                let _ = writeln!(s, "{i},{},{}", csv_field(&c.label.to_string()), c.orbit_size);
            }
            s
        }
        Format::Table => {
            let mut s = format!(
                "W({}) at k = {}: {} classes from {} labels\n",
                k.rs(),
                k.k(),
                labels.classes.len(),
                labels.raw_count
            );
            for (i, c) in labels.classes.iter().enumerate() {
                let _ = writeln!(s, "{i:>4}  {}  (orbit {})", c.label, c.orbit_size);
            }
            s
        }
    }
}

pub fn matrix<L: Display + Serialize>(
    fmt: Format,
    algebra: &str,
    u: i64,
    v: i64,
    labels: &[L],
    m: &Matrix,
    digits: usize,
) -> String {
    match fmt {
        Format::Json => {
            let float: Vec<Vec<[f64; 2]>> = m
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|x| {
                            let (re, im) = x.to_complex();
                            [re, im]
                        })
                        .collect()
                })
                .collect();
            to_json(&json!({
                "algebra": algebra,
                "u": u,
                "v": v,
                "labels": labels,
                "exact": m,
                "float": float,
            }))
        }
        Format::Csv => {
            let mut s = String::from("i,j,re,im,exact\n");
            for (i, row) in m.iter().enumerate() {
                for (j, x) in row.iter().enumerate() {
                    let (re, im) = x.to_complex();
                    let _ = writeln!(s, "{i},{j},{re:.digits$},{im:.digits$},{}", csv_field(&x.to_string()));
                }
            }
            s
        }
        Format::Table => {
            let names: Vec<String> = labels.iter().map(|l| l.to_string()).collect();
            let cells: Vec<Vec<String>> = m
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|x| {
                            let (re, im) = x.to_complex();
                            complex(re, im, digits)
                        })
                        .collect()
                })
                .collect();
            let head = names.iter().map(|s| s.chars().count()).max().unwrap_or(1);
            let width = cells
                .iter()
                .flatten()
                .chain(names.iter())
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(1);
            let mut s = format!("{:head$}", "");
            for n in &names {
                let _ = write!(s, "  {n:>width$}");
            }
            s.push('\n');
            for (n, row) in names.iter().zip(&cells) {
                let _ = write!(s, "{n:>head$}");
                for c in row {
                    let _ = write!(s, "  {c:>width$}");
                }
                s.push('\n');
            }
            s
        }
    }
}

pub fn fusion<L: Display + Serialize>(fmt: Format, t: &FusionTable<L>) -> String {
    match fmt {
        Format::Json => to_json(t),
        Format::Csv => t.to_csv(),
        Format::Table => t.to_table(),
    }
}

pub fn coset(fmt: Format, d: &CosetDecomposition) -> String {
    match fmt {
        Format::Json => to_json(d),
        Format::Csv => {
            let mut s = String::from("lambda,wlabel,raw,weight_mod1\n");
            for t in &d.terms {
                let _ = writeln!(
                    s,
                    "{},{},{},{}",
                    csv_field(&t.lambda.to_string()),
                    csv_field(&t.wlabel.to_string()),
                    csv_field(&t.raw.to_string()),
                    t.weight_mod1
                );
            }
            s
        }
        Format::Table => {
            let mut s = format!("L{} ⊗ L{} at level {} =\n", d.mu, d.nu, d.ell);
            for t in &d.terms {
                let _ = writeln!(s, "  L{} ⊗ W{}   h ≡ {} mod 1", t.lambda, t.wlabel, t.weight_mod1);
            }
            s
        }
    }
}

pub fn report(fmt: Format, r: &Report, digits: usize) -> String {
    match fmt {
        Format::Json => to_json(r),
        Format::Csv => {
            let mut s = String::from("name,pass,lhs,rhs,detail\n");
            for c in &r.checks {
                let f = |x: &Option<[f64; 2]>| x.map(|[a, b]| complex(a, b, digits)).unwrap_or_default();
                let _ = writeln!(
                    s,
                    "{},{},{},{},{}",
                    csv_field(&c.name),
                    c.pass,
                    csv_field(&f(&c.lhs_float)),
                    csv_field(&f(&c.rhs_float)),
                    csv_field(c.detail.as_deref().unwrap_or(""))
                );
            }
            s
        }
        Format::Table => {
            let mut s = format!(
                "{} for {} at u/v = {}/{}: {}\n",
                r.theorem,
                r.algebra,
                r.u,
                r.v,
                if r.pass { "PASS" } else { "FAIL" }
            );
            let failed = r.checks.iter().filter(|c| !c.pass).count();
            let _ = writeln!(s, "{} checks, {} failed", r.checks.len(), failed);
            for c in &r.checks {
                let _ = write!(s, "  [{}] {}", if c.pass { " ok " } else { "FAIL" }, c.name);
                if let (Some([a, b]), Some([x, y])) = (c.lhs_float, c.rhs_float) {
                    let _ = write!(s, "   {} vs {}", complex(a, b, digits), complex(x, y, digits));
                }
                if let Some(d) = &c.detail {
                    let _ = write!(s, "   {d}");
                }
                s.push('\n');
            }
            for n in &r.notes {
                let _ = writeln!(s, "note: {n}");
            }
            s
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digits() {
        assert_eq!(digits_for_bits(53), 15);
        assert_eq!(digits_for_bits(200), 15);
        assert_eq!(digits_for_bits(10), 3);
        assert_eq!(digits_for_bits(0), 1);
    }

    #[test]
    fn complex_formatting() {
        assert_eq!(complex(1.0, 0.0, 3), "1.000");
        assert_eq!(complex(-0.0000001, 1.0, 3), "0.000+1.000i");
        assert_eq!(complex(0.5, -0.25, 2), "0.50-0.25i");
    }

    #[test]
    fn csv_quoting() {
        assert_eq!(csv_field("(1,0)"), "\"(1,0)\"");
        assert_eq!(csv_field("plain"), "plain");
    }
}
