//! Uniform output envelope for every subcommand.
//!
//! CSV: one header row, one data row per result, then summary values as
//! `# key,value` comment lines. Warnings go to the diagnostic stream only.
//!
//! JSON: a single object with the tool identity, echoed parameters, rows,
//! summary, and warnings. Exact rationals appear as
//! `{"num": ..., "den": ..., "decimal": ...}` with the decimal convenience
//! string carrying 12 significant digits. Keys are sorted, so output is
//! byte-stable.

use cyclemix::exactmath::Ratio;
use serde_json::{json, Map, Value};

use crate::render::{csv_field, decimal12, decimal12_f64};

pub struct Report {
    pub subcommand: &'static str,
    pub parameters: Map<String, Value>,
    pub columns: &'static [&'static str],
    pub csv_rows: Vec<Vec<String>>,
    pub json_rows: Vec<Value>,
    pub csv_summary: Vec<(String, String)>,
    pub json_summary: Map<String, Value>,
    pub warnings: Vec<String>,
}

impl Report {
    pub fn new(subcommand: &'static str, columns: &'static [&'static str]) -> Self {
        Report {
            subcommand,
            parameters: Map::new(),
            columns,
            csv_rows: Vec::new(),
            json_rows: Vec::new(),
            csv_summary: Vec::new(),
            json_summary: Map::new(),
            warnings: Vec::new(),
        }
    }

    pub fn parameter(&mut self, key: &str, value: Value) {
        self.parameters.insert(key.to_string(), value);
    }

    pub fn summary(&mut self, key: &str, csv_value: String, json_value: Value) {
        self.csv_summary.push((key.to_string(), csv_value));
        self.json_summary.insert(key.to_string(), json_value);
    }

    /// Exact rational summary entry: numerator/denominator plus decimal.
    pub fn summary_rational(&mut self, key: &str, value: &Ratio) {
        self.csv_summary
            .push((format!("{key}_num"), value.numer().to_string()));
        self.csv_summary
            .push((format!("{key}_den"), value.denom().to_string()));
        self.csv_summary
            .push((format!("{key}_decimal"), decimal12(value)));
        self.json_summary
            .insert(key.to_string(), rational_value(value));
    }

    pub fn warn(&mut self, message: impl Into<String>) {
        self.warnings.push(message.into());
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(&self.columns.join(","));
        out.push('\n');
        for row in &self.csv_rows {
            debug_assert_eq!(row.len(), self.columns.len());
            let line: Vec<String> = row.iter().map(|cell| csv_field(cell)).collect();
            out.push_str(&line.join(","));
            out.push('\n');
        }
        for (key, value) in &self.csv_summary {
            out.push_str(&format!("# {key},{}\n", csv_field(value)));
        }
        out
    }

    pub fn to_json(&self) -> String {
        let envelope = json!({
            "tool": "cyclemix",
            "version": env!("CARGO_PKG_VERSION"),
            "subcommand": self.subcommand,
            "parameters": Value::Object(self.parameters.clone()),
            "rows": self.json_rows,
            "summary": Value::Object(self.json_summary.clone()),
            "warnings": self.warnings,
        });
        let mut text = serde_json::to_string_pretty(&envelope).expect("serializable envelope");
        text.push('\n');
        text
    }
}

/// JSON object for an exact rational: separate numerator and denominator
/// strings plus the 12-significant-digit decimal.
pub fn rational_value(value: &Ratio) -> Value {
    json!({
        "num": value.numer().to_string(),
        "den": value.denom().to_string(),
        "decimal": decimal12(value),
    })
}

/// JSON string for an inexact (floating-point) quantity, same decimal policy.
pub fn float_value(value: f64) -> Value {
    Value::String(decimal12_f64(value))
}
