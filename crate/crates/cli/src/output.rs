use clap::ValueEnum;
use riordan_core::{format_coef, BivariateSeries, Coef, ExactMatrix};
use serde_json::{json, Value};

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Pretty,
    Csv,
    Json,
}

fn strings(v: &[Coef]) -> Vec<String> {
    v.iter().map(format_coef).collect()
}

fn json_text(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("json value serializes") + "\n"
}

pub fn sequence(terms: &[Coef], format: Format) -> String {
    let s = strings(terms);
    match format {
        Format::Pretty => s.join(" ") + "\n",
        Format::Csv => s.join(",") + "\n",
        Format::Json => json_text(&json!({ "terms": s })),
    }
}

pub fn matrix(m: &ExactMatrix, format: Format) -> String {
    match format {
        Format::Pretty => {
            let mut s = m.to_string();
            if !s.ends_with('\n') {
                s.push('\n');
            }
            s
        }
        Format::Csv => m.to_csv(),
        Format::Json => json_text(&json!({
            "rows": m.rows(),
            "cols": m.cols(),
            "entries": m.to_string_rows(),
        })),
    }
}

/// Row `n` holds the coefficients of `x^n y^k`, `k` ascending.
pub fn grid(b: &BivariateSeries, format: Format) -> String {
    matrix(&ExactMatrix::from_bivariate(b), format)
}

/// The caret under `text` at byte offset `pos`.
pub fn caret(text: &str, pos: usize) -> String {
    let col = text
        .get(..pos.min(text.len()))
        .map_or(pos, |p| p.chars().count());
    format!("  {text}\n  {}^", " ".repeat(col))
}
