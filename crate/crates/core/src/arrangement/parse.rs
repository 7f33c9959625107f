//! Arrangement input formats.
//!
//! Text:
//! ```text
//! # three lines through the origin
//! n: 2
//! hyperplanes:
//! 1 0
//! 0 1
//! 1/2 1/2
//! ```
//! A row with `n + 1` entries is read as an affine form whose last entry is
//! the constant term; it is accepted only when that constant is zero.
//!
//! JSON: `{ "n": 2, "hyperplanes": [["1", "0"], ["0", "1"]] }`, entries given
//! as rational strings or integers.

use num_rational::BigRational;
use num_traits::Zero;
use serde_json::{json, Value};

use super::{canonicalize_hyperplane, Arrangement, ArrangementError, Hyperplane};

fn malformed(msg: impl Into<String>) -> ArrangementError {
    ArrangementError::Malformed(msg.into())
}

fn parse_rational(tok: &str, line: usize) -> Result<BigRational, ArrangementError> {
    tok.parse::<BigRational>()
        .map_err(|_| malformed(format!("line {line}: `{tok}` is not a rational number")))
}

fn row_to_hyperplane(n: usize, mut row: Vec<BigRational>, line: usize) -> Result<Hyperplane, ArrangementError> {
    if row.len() == n + 1 {
        let c = row.pop().expect("row has n + 1 entries");
        if !c.is_zero() {
            return Err(ArrangementError::NonCentral { line, constant: c.to_string() });
        }
    }
    if row.len() != n {
        return Err(ArrangementError::DimensionMismatch { expected: n, got: row.len() });
    }
    canonicalize_hyperplane(&row)
}

/// Parses either format, choosing JSON when the input starts with `{`.
pub fn parse_arrangement(input: &str) -> Result<Arrangement, ArrangementError> {
    if input.trim_start().starts_with('{') {
        parse_arrangement_json(input)
    } else {
        parse_arrangement_text(input)
    }
}

pub fn parse_arrangement_text(input: &str) -> Result<Arrangement, ArrangementError> {
    let mut lines = input
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (ln, header) = lines.next().ok_or_else(|| malformed("empty input"))?;
    let n = header
        .strip_prefix("n:")
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&n| n > 0)
        .ok_or_else(|| malformed(format!("line {ln}: expected `n: <positive int>`")))?;

    match lines.next() {
        Some((_, "hyperplanes:")) => {}
        Some((ln, _)) => return Err(malformed(format!("line {ln}: expected `hyperplanes:`"))),
        None => return Err(malformed("missing `hyperplanes:` section")),
    }

    let mut hs = Vec::new();
    for (ln, l) in lines {
        let row = l.split_whitespace().map(|t| parse_rational(t, ln)).collect::<Result<Vec<_>, _>>()?;
        hs.push(row_to_hyperplane(n, row, ln)?);
    }
    Arrangement::new(n, hs)
}

pub fn parse_arrangement_json(input: &str) -> Result<Arrangement, ArrangementError> {
    let v: Value = serde_json::from_str(input).map_err(|e| malformed(format!("invalid JSON: {e}")))?;
    let n = v
        .get("n")
        .and_then(Value::as_u64)
        .filter(|&n| n > 0)
        .ok_or_else(|| malformed("`n` must be a positive integer"))? as usize;
    let rows = v
        .get("hyperplanes")
        .and_then(Value::as_array)
        .ok_or_else(|| malformed("`hyperplanes` must be an array"))?;
    let mut hs = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        let entries = row.as_array().ok_or_else(|| malformed(format!("hyperplane {i} is not an array")))?;
        let parsed = entries
            .iter()
            .map(|e| match e {
                Value::String(s) => parse_rational(s, i + 1),
                Value::Number(num) if num.is_i64() || num.is_u64() => parse_rational(&num.to_string(), i + 1),
                _ => Err(malformed(format!("hyperplane {i}: entries must be rational strings or integers"))),
            })
            .collect::<Result<Vec<_>, _>>()?;
        hs.push(row_to_hyperplane(n, parsed, i + 1)?);
    }
    Arrangement::new(n, hs)
}

/// The canonical JSON block; parsing it back reproduces the arrangement.
pub fn arrangement_to_json(arr: &Arrangement) -> Value {
    let rows: Vec<Vec<String>> =
        arr.hyperplanes().iter().map(|h| h.normal().iter().map(ToString::to_string).collect()).collect();
    json!({ "n": arr.n(), "hyperplanes": rows })
}
