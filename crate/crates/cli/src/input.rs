//! Length parsing and problem files.

use std::path::Path;

use pyramid_core::geom::EdgeLengthSet;
use pyramid_core::solver::SweepLengths;
use serde::Deserialize;

use crate::error::CliError;

/// Parses a decimal literal or `sqrt(N)`.
pub fn parse_length(s: &str) -> Result<f64, CliError> {
    let t = s.trim();
    let value = match t.strip_prefix("sqrt(").and_then(|r| r.strip_suffix(')')) {
        Some(inner) => inner.trim().parse::<f64>().map(f64::sqrt),
        None => t.parse::<f64>(),
    }
    .map_err(|_| CliError::Input(format!("cannot parse length {s:?}")))?;
    if !(value.is_finite() && value > 0.0) {
        return Err(CliError::Input(format!("length {s:?} must be positive and finite")));
    }
    Ok(value)
}

/// A length slot that may be left open with `-`.
fn parse_slot(s: &str) -> Result<Option<f64>, CliError> {
    if s.trim() == "-" {
        Ok(None)
    } else {
        parse_length(s).map(Some)
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
enum LengthEntry {
    Number(f64),
    Text(String),
}

impl LengthEntry {
    fn to_slot(&self) -> Result<Option<f64>, CliError> {
        match self {
            LengthEntry::Number(x) => parse_length(&x.to_string()).map(Some),
            LengthEntry::Text(s) => parse_slot(s),
        }
    }
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileOptions {
    pub grid: Option<usize>,
    pub tol: Option<f64>,
    pub congruence_tol: Option<f64>,
    pub include_degenerate: Option<bool>,
    pub seed: Option<u64>,
}

/// JSON problem description: eight lengths in the order
/// `AB, BC, CD, DA, EA, EB, EC, ED`, plus optional settings.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    lengths: Vec<LengthEntry>,
    #[serde(default)]
    pub options: FileOptions,
}

impl ProblemFile {
    pub fn read(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
        serde_json::from_str(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
    }

    fn slots(&self) -> Result<Vec<Option<f64>>, CliError> {
        self.lengths.iter().map(LengthEntry::to_slot).collect()
    }
}

/// Lengths from the command line or from a problem file, not both.
pub fn length_slots(args: &[String], file: Option<&ProblemFile>) -> Result<Vec<Option<f64>>, CliError> {
    match (args.is_empty(), file) {
        (false, Some(_)) => Err(CliError::Input("give lengths either inline or with --file".into())),
        (true, Some(f)) => f.slots(),
        (_, None) => args.iter().map(|s| parse_slot(s)).collect(),
    }
}

pub fn full_lengths(slots: &[Option<f64>]) -> Result<EdgeLengthSet, CliError> {
    if slots.len() != 8 {
        return Err(CliError::Input(format!("expected 8 lengths, got {}", slots.len())));
    }
    let mut out = [0.0; 8];
    for (o, s) in out.iter_mut().zip(slots) {
        *o = s.ok_or_else(|| CliError::Input("every length must be given; '-' is only valid for sweeps".into()))?;
    }
    Ok(EdgeLengthSet::new(out)?)
}

/// Seven lengths, or eight with the `EC` slot ignored.
pub fn sweep_lengths(slots: &[Option<f64>]) -> Result<SweepLengths, CliError> {
    let kept: Vec<Option<f64>> = match slots.len() {
        7 => slots.to_vec(),
        8 => slots.iter().enumerate().filter(|&(i, _)| i != 6).map(|(_, s)| *s).collect(),
        n => return Err(CliError::Input(format!("expected 7 lengths (or 8 with '-' for EC), got {n}"))),
    };
    let mut out = [0.0; 7];
    for (o, s) in out.iter_mut().zip(&kept) {
        *o = s.ok_or_else(|| CliError::Input("only the EC length may be left open".into()))?;
    }
    Ok(SweepLengths::new(out)?)
}

/// Exactly `n` comma-separated reals, negative values allowed.
pub fn parse_reals(s: &str, n: usize) -> Result<Vec<f64>, CliError> {
    let v: Vec<f64> = s
        .split(',')
        .map(|x| {
            x.trim()
                .parse::<f64>()
                .ok()
                .filter(|v| v.is_finite())
                .ok_or_else(|| CliError::Input(format!("cannot parse {x:?} as a number")))
        })
        .collect::<Result<_, _>>()?;
    if v.len() != n {
        return Err(CliError::Input(format!("expected {n} comma-separated values, got {}", v.len())));
    }
    Ok(v)
}
