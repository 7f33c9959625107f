//! Canonical text and LaTeX renderings of sparse polynomials.
//!
//! Text form: terms in ascending exponent order, each `c*t^a*y^b` with the
//! coefficient always explicit; a variable with exponent 0 is omitted and
//! exponent 1 is written bare. The zero polynomial prints as `0`.

use std::fmt::{self, Write};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub(crate) fn write_terms<'a, W: Write>(
    out: &mut W,
    terms: impl Iterator<Item = (&'a BigInt, Vec<(&'static str, i64)>)>,
) -> fmt::Result {
    let mut first = true;
    for (c, vars) in terms {
        let mag = if first {
            c.clone()
        } else {
            out.write_str(if c.is_negative() { " - " } else { " + " })?;
            c.abs()
        };
        first = false;
        write!(out, "{mag}")?;
        for (v, e) in vars {
            match e {
                0 => {}
                1 => write!(out, "*{v}")?,
                _ => write!(out, "*{v}^{e}")?,
            }
        }
    }
    if first {
        out.write_char('0')?;
    }
    Ok(())
}

pub(crate) fn write_terms_latex<'a, W: Write>(
    out: &mut W,
    terms: impl Iterator<Item = (&'a BigInt, Vec<(&'static str, i64)>)>,
) -> fmt::Result {
    let mut first = true;
    for (c, vars) in terms {
        if first {
            if c.is_negative() {
                out.write_char('-')?;
            }
        } else {
            out.write_str(if c.is_negative() { " - " } else { " + " })?;
        }
        first = false;
        let mag = c.abs();
        let bare = vars.iter().all(|(_, e)| *e == 0);
        if bare || !mag.is_one() {
            write!(out, "{mag}")?;
        }
        for (v, e) in vars {
            match e {
                0 => {}
                1 => out.write_str(v)?,
                _ => write!(out, "{v}^{{{e}}}")?,
            }
        }
    }
    if first {
        out.write_char('0')?;
    }
    Ok(())
}

/// Renders a dense coefficient list in the variable `var`, lowest degree first.
pub fn dense_to_string(coeffs: &[BigInt], var: &'static str) -> String {
    let mut s = String::new();
    write_terms(
        &mut s,
        coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (c, vec![(var, i as i64)])),
    )
    .expect("writing to a String cannot fail");
    s
}

pub fn dense_to_latex(coeffs: &[BigInt], var: &'static str) -> String {
    let mut s = String::new();
    write_terms_latex(
        &mut s,
        coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (c, vec![(var, i as i64)])),
    )
    .expect("writing to a String cannot fail");
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dense_rendering() {
        let c: Vec<BigInt> = [1, 2, 1].iter().map(|&v| v.into()).collect();
        assert_eq!(dense_to_string(&c, "x"), "1 + 2*x + 1*x^2");
        let c: Vec<BigInt> = [1, -3, 0, 2].iter().map(|&v| v.into()).collect();
        assert_eq!(dense_to_string(&c, "x"), "1 - 3*x + 2*x^3");
        assert_eq!(dense_to_string(&[], "x"), "0");
    }
}
