//! Command implementations. Each returns a process exit code: 0 success,
//! 1 computational failure or golden mismatch, 2 usage error.

pub mod converge;
pub mod figure;
pub mod limits;
pub mod pt;
pub mod spectrum;
pub mod table;

use anyhow::{anyhow, Result};
use oscbox::scalar::format_sig;
use oscbox::{BasisKind, Parity, Real, ScalarPolicy};
use rug::Float;

use crate::args::{BasisArg, OutputFormat, ParityArg};
use crate::output::GoldenReport;

/// Resolved global options shared by every command.
pub struct Ctx {
    pub format: OutputFormat,
    pub out: Option<std::path::PathBuf>,
    /// Printed significant digits.
    pub digits: u32,
    /// Working policy: at least 30 digits, more if printing more.
    pub policy: ScalarPolicy,
    pub golden: bool,
}

impl Ctx {
    pub fn new(
        format: Option<OutputFormat>,
        out: Option<std::path::PathBuf>,
        digits: Option<u32>,
        golden: bool,
    ) -> Result<Self> {
        let digits = digits.unwrap_or(10);
        if digits == 0 {
            return Err(usage("--digits must be at least 1"));
        }
        let policy = ScalarPolicy::decimal(digits.max(30))?;
        Ok(Ctx {
            format: format.unwrap_or(OutputFormat::Csv),
            out,
            digits,
            policy,
            golden,
        })
    }

    pub fn fmt(&self, x: &Float) -> String {
        format_sig(x, self.digits as usize)
    }

    pub fn emit(&self, table: &crate::output::Table) -> Result<()> {
        table.emit(self.format, self.out.as_deref(), self.golden)
    }

    /// Print mismatches (if any) and turn them into an exit code.
    pub fn finish_golden(&self, report: GoldenReport) -> i32 {
        if report.mismatches.is_empty() {
            eprintln!("golden check: {} cells ok", report.cells_checked);
            0
        } else {
            for m in &report.mismatches {
                eprintln!("golden mismatch: {m}");
            }
            1
        }
    }
}

/// Marker for usage errors (exit code 2).
pub fn usage(msg: &str) -> anyhow::Error {
    anyhow!("usage: {msg}")
}

pub fn is_usage(err: &anyhow::Error) -> bool {
    err.to_string().starts_with("usage: ")
}

pub fn parse_real(name: &str, s: &str) -> Result<Real> {
    Real::parse(s).map_err(|_| usage(&format!("--{name} {s:?} is not a decimal number")))
}

pub fn require<'a>(name: &str, v: &'a Option<String>) -> Result<&'a str> {
    v.as_deref().ok_or_else(|| usage(&format!("--{name} is required")))
}

pub fn basis_kind(arg: Option<BasisArg>) -> BasisKind {
    match arg.unwrap_or(BasisArg::Poly) {
        BasisArg::Poly => BasisKind::Polynomial,
        BasisArg::Gauss => BasisKind::Gaussian,
    }
}

pub fn sector_parity(arg: ParityArg) -> Option<Parity> {
    match arg {
        ParityArg::Even => Some(Parity::Even),
        ParityArg::Odd => Some(Parity::Odd),
        ParityArg::Both => None,
    }
}

/// Parse `lo..hi` into an inclusive ascending range.
pub fn parse_n_range(s: &str) -> Result<Vec<u32>> {
    let (lo, hi) = s
        .split_once("..")
        .ok_or_else(|| usage(&format!("--n-range {s:?} must look like 2..10")))?;
    let lo: u32 = lo.trim().parse().map_err(|_| usage("bad n-range start"))?;
    let hi: u32 = hi.trim().parse().map_err(|_| usage("bad n-range end"))?;
    if hi < lo {
        return Err(usage("n-range end below start"));
    }
    Ok((lo..=hi).collect())
}

/// Parse `a:b:step` into an exact decimal grid (inclusive of b up to
/// rounding of the last step).
pub fn parse_lambda_range(s: &str) -> Result<Vec<Real>> {
    let parts: Vec<&str> = s.split(':').collect();
    if parts.len() != 3 {
        return Err(usage(&format!("--lambda-range {s:?} must look like 0.05:6:0.5")));
    }
    let lo = oscbox::scalar::parse_decimal_rational(parts[0])
        .map_err(|_| usage("bad range start"))?;
    let hi = oscbox::scalar::parse_decimal_rational(parts[1]).map_err(|_| usage("bad range end"))?;
    let step =
        oscbox::scalar::parse_decimal_rational(parts[2]).map_err(|_| usage("bad range step"))?;
    if step.cmp0() != std::cmp::Ordering::Greater {
        return Err(usage("range step must be positive"));
    }
    let mut out = Vec::new();
    let mut v = lo;
    while v <= hi {
        out.push(Real::Exact(v.clone()));
        v += &step;
    }
    if out.is_empty() {
        return Err(usage("empty lambda range"));
    }
    Ok(out)
}

/// Parse `1,2,3` or `1..5` into a list of decimal values.
pub fn parse_list(name: &str, s: &str) -> Result<Vec<Real>> {
    if let Some((lo, hi)) = s.split_once("..") {
        let lo: i64 = lo.trim().parse().map_err(|_| usage(&format!("bad {name} range")))?;
        let hi: i64 = hi.trim().parse().map_err(|_| usage(&format!("bad {name} range")))?;
        if hi < lo {
            return Err(usage(&format!("{name} range end below start")));
        }
        return Ok((lo..=hi).map(Real::from_int).collect());
    }
    s.split(',')
        .map(|p| {
            Real::parse(p.trim())
                .map_err(|_| usage(&format!("--{name}: {p:?} is not a decimal number")))
        })
        .collect()
}

pub fn parity_tag(p: Parity) -> &'static str {
    match p {
        Parity::Even => "e",
        Parity::Odd => "o",
    }
}
