//! Renderers for tables and values.

use std::fmt::Write as _;

use clap::ValueEnum;

use crate::chartab::GenericTable;
use crate::cyclotomic::CycNum;

pub const CSV_DIGITS: u32 = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Latex,
    Text,
}

/// "zeta8^5" for roots of unity of order dividing 8, the exact form otherwise.
pub fn root_name(z: &CycNum) -> String {
    if z.is_one() {
        return "1".into();
    }
    for n in [2u64, 4, 8] {
        for k in (1..n).filter(|k| num_integer::gcd(*k, n) == 1) {
            if CycNum::root(n, k as i64).ok().as_ref() == Some(z) {
                return format!("zeta{n}^{k}");
            }
        }
    }
    z.to_string()
}

pub fn approx(z: &CycNum) -> String {
    let (re, im) = z.to_complex(CSV_DIGITS).to_decimal(CSV_DIGITS);
    format!("{re} {} {}i", if im.starts_with('-') { "-" } else { "+" }, im.trim_start_matches('-'))
}

pub fn latex_value(z: &CycNum) -> String {
    let s = z.to_string();
    let mut out = String::new();
    for tok in s.split(' ') {
        let tok = tok.replace('*', " ");
        match tok.find('z') {
            Some(i) => {
                let (coef, root) = tok.split_at(i);
                let (n, e) = root[1..].split_once('^').unwrap_or((&root[1..], "1"));
                let _ = write!(out, "{coef}\\zeta_{{{n}}}^{{{e}}}");
            }
            None => out.push_str(&tok),
        }
        out.push(' ');
    }
    out.trim_end().to_string()
}

pub fn table_json(t: &GenericTable) -> String {
    serde_json::to_string_pretty(t).expect("tables serialize")
}

pub fn table_csv(t: &GenericTable) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "# {} at n={}: complex values rounded to {CSV_DIGITS} decimals (lossy); the JSON export holds the exact values",
        t.title, t.n
    );
    s.push_str("row,class,re,im\n");
    for r in &t.rows {
        for (c, v) in t.classes.iter().zip(&r.values) {
            let (re, im) = v.to_complex(CSV_DIGITS).to_decimal(CSV_DIGITS);
            let _ = writeln!(s, "{},{},{re},{im}", csv_field(&r.name), csv_field(&c.label));
        }
    }
    s
}

fn csv_field(x: &str) -> String {
    if x.contains([',', '"']) {
        format!("\"{}\"", x.replace('"', "\"\""))
    } else {
        x.to_string()
    }
}

fn latex_label(x: &str) -> String {
    x.replace('_', "\\_").replace('^', "\\^{}")
}

pub fn table_latex(t: &GenericTable) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "% {} at n={}, q={}", t.title, t.n, t.q);
    let _ = writeln!(s, "\\begin{{tabular}}{{l|{}}}", "c".repeat(t.classes.len()));
    let head: Vec<String> = t.classes.iter().map(|c| format!("${}$", latex_label(&c.label))).collect();
    let _ = writeln!(s, " & {} \\\\\\hline", head.join(" & "));
    for r in &t.rows {
        let cells: Vec<String> = r.values.iter().map(|v| format!("${}$", latex_value(v))).collect();
        let _ = writeln!(s, "${}$ & {} \\\\", latex_label(&r.name), cells.join(" & "));
    }
    s.push_str("\\end{tabular}\n");
    s
}

pub fn table_text(t: &GenericTable) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{} (n={}, q={}, theta={})", t.title, t.n, t.q, t.theta);
    for (i, c) in t.classes.iter().enumerate() {
        let _ = writeln!(s, "  class {i}: {} |C| = {}", c.label, c.centralizer_order);
    }
    for r in &t.rows {
        let cells: Vec<String> = r.values.iter().map(|v| v.to_string()).collect();
        let _ = writeln!(s, "{}: {}", r.name, cells.join(" | "));
    }
    for note in &t.notes {
        let _ = writeln!(s, "note: {note}");
    }
    s
}

pub fn render_table(t: &GenericTable, f: Format) -> String {
    match f {
        Format::Json => table_json(t) + "\n",
        Format::Csv => table_csv(t),
        Format::Latex => table_latex(t),
        Format::Text => table_text(t),
    }
}
