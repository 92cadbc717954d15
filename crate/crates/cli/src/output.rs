//! Table emitters: CSV (header + LF rows, decimal-string cells) and JSON
//! (`{config, rows, metadata}` with decimal strings, never binary floats).

use std::io::Write;
use std::time::{SystemTime, UNIX_EPOCH};

use anyhow::{Context, Result};

use crate::args::OutputFormat;

pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
    /// Key/value pairs echoed into the JSON config block.
    pub config: Vec<(String, String)>,
    pub policy_digits: u32,
    pub basis: String,
}

impl Table {
    pub fn new(columns: &[&str]) -> Self {
        Table {
            columns: columns.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
            config: Vec::new(),
            policy_digits: 0,
            basis: String::new(),
        }
    }

    pub fn push_row(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn set_config(&mut self, key: &str, value: impl ToString) {
        self.config.push((key.to_string(), value.to_string()));
    }

    fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(&self.columns.join(","));
        out.push('\n');
        for r in &self.rows {
            out.push_str(&r.join(","));
            out.push('\n');
        }
        out
    }

    fn to_json(&self, golden: bool) -> serde_json::Value {
        let config: serde_json::Map<String, serde_json::Value> = self
            .config
            .iter()
            .map(|(k, v)| (k.clone(), serde_json::Value::String(v.clone())))
            .collect();
        let mut metadata = serde_json::json!({
            "policy_digits": self.policy_digits,
            "basis": self.basis,
        });
        if !golden {
            let now = SystemTime::now().duration_since(UNIX_EPOCH).unwrap_or_default();
            metadata["timestamp"] = serde_json::Value::from(now.as_secs());
        }
        serde_json::json!({
            "config": config,
            "columns": self.columns,
            "rows": self.rows,
            "metadata": metadata,
        })
    }

    pub fn emit(
        &self,
        format: OutputFormat,
        out: Option<&std::path::Path>,
        golden: bool,
    ) -> Result<()> {
        let text = match format {
            OutputFormat::Csv => self.to_csv(),
            OutputFormat::Json => {
                let mut s = serde_json::to_string_pretty(&self.to_json(golden))?;
                s.push('\n');
                s
            }
        };
        match out {
            Some(path) => {
                let mut f = std::fs::File::create(path)
                    .with_context(|| format!("cannot create {}", path.display()))?;
                f.write_all(text.as_bytes())?;
            }
            None => {
                std::io::stdout().write_all(text.as_bytes())?;
            }
        }
        Ok(())
    }
}

/// Result of a golden comparison: mismatch descriptions, empty on success.
#[derive(Debug, Default)]
pub struct GoldenReport {
    pub mismatches: Vec<String>,
    pub cells_checked: usize,
}

impl GoldenReport {
    pub fn check_rel(&mut self, context: &str, got: f64, want_str: &str, tol: f64) {
        self.cells_checked += 1;
        let want: f64 = want_str.parse().unwrap_or(f64::NAN);
        let rel = (got - want).abs() / want.abs().max(f64::MIN_POSITIVE);
        if !(rel <= tol) {
            self.mismatches.push(format!(
                "{context}: computed {got:.12e}, reference {want_str} (rel {rel:.2e} > {tol:.0e})"
            ));
        }
    }

    pub fn check_abs(&mut self, context: &str, got: f64, want_str: &str, tol: f64) {
        self.cells_checked += 1;
        let want: f64 = want_str.parse().unwrap_or(f64::NAN);
        let diff = (got - want).abs();
        if !(diff <= tol) {
            self.mismatches.push(format!(
                "{context}: computed {got:.12e}, reference {want_str} (abs {diff:.2e} > {tol:.0e})"
            ));
        }
    }

    /// High-precision relative check for the many-digit coefficient table.
    pub fn check_rel_precise(&mut self, context: &str, got: &rug::Float, want_str: &str, tol: f64) {
        self.cells_checked += 1;
        let prec = 340;
        let want = match oscbox::scalar::float_from_str(want_str, prec) {
            Ok(w) => w,
            Err(_) => {
                self.mismatches.push(format!("{context}: unparseable reference {want_str}"));
                return;
            }
        };
        let mut diff = rug::Float::with_val(prec, got - &want);
        diff /= &want;
        diff.abs_mut();
        if !(diff.to_f64() <= tol) {
            self.mismatches.push(format!(
                "{context}: computed {}, reference {want_str} (rel {:.2e} > {tol:.0e})",
                oscbox::scalar::format_sig(got, 33),
                diff.to_f64()
            ));
        }
    }
}
