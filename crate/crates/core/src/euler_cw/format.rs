//! Plain-text format for twisted CW complexes.
//!
//! ```text
//! # S^1 x S^2
//! dim 3
//! cells 1 1 1 1
//! orientable yes
//! betti 1 1 1 1
//! conditions31 yes
//! boundary 1 1 1
//! t-1
//! boundary 2 1 1
//! 0
//! boundary 3 1 1
//! t-1
//! ```
//!
//! Entries are integer Laurent polynomials in `t`, the generator of `H`.
//! The header lines are mandatory and come in this order. [`print`] emits
//! the canonical form.

use std::fmt::Write as _;

use super::complex::{GroupRingMatrix, TwistedCWComplex};
use crate::det_torsion::format::{header_values, perr, read_boundaries, write_dims, Lines};
use crate::error::{Error, Result};
use crate::scalar::LaurentPoly;

fn flag(line: usize, text: &str, keyword: &str) -> Result<bool> {
    let mut parts = text.split_whitespace();
    if parts.next() != Some(keyword) {
        return Err(perr(line, format!("expected `{keyword} yes|no`")));
    }
    let v = match parts.next() {
        Some("yes") => true,
        Some("no") => false,
        _ => return Err(perr(line, format!("expected `{keyword} yes|no`"))),
    };
    if parts.next().is_some() {
        return Err(perr(line, "trailing tokens"));
    }
    Ok(v)
}

pub fn parse(text: &str) -> Result<TwistedCWComplex> {
    let mut lines = Lines::new(text);
    let last = lines.last_line();
    let mut header = |kw: &str| {
        lines
            .next()
            .ok_or_else(|| perr(last, format!("missing `{kw}`")))
    };

    let (ln, t) = header("dim")?;
    let dim = header_values(ln, t, "dim")?;
    if dim.len() != 1 {
        return Err(perr(ln, "expected `dim <m>`"));
    }
    if dim[0] % 2 == 0 {
        return Err(Error::ComplexInvalid(format!(
            "dimension {} is even",
            dim[0]
        )));
    }
    let (ln, t) = header("cells")?;
    let cells = header_values(ln, t, "cells")?;
    if cells.len() != dim[0] + 1 {
        return Err(perr(ln, format!("expected {} cell counts", dim[0] + 1)));
    }
    let (ln, t) = header("orientable")?;
    let orientable = flag(ln, t, "orientable")?;
    let (ln, t) = header("betti")?;
    let betti = header_values(ln, t, "betti")?;
    let (ln, t) = header("conditions31")?;
    let conditions31 = flag(ln, t, "conditions31")?;

    let mut next = || lines.next();
    let blocks = read_boundaries(&mut next, last, &cells, &|s: &str| {
        let p: LaurentPoly = s.parse()?;
        if !p.is_integral() {
            return Err(Error::ComplexInvalid(format!("non-integral entry {p}")));
        }
        Ok(p)
    })?;
    let mut mats = Vec::with_capacity(blocks.len());
    for (i, (_, entries)) in blocks.into_iter().enumerate() {
        mats.push(GroupRingMatrix::new(cells[i], cells[i + 1], entries)?);
    }
    if let Some((ln, _)) = lines.next() {
        return Err(perr(ln, "trailing content"));
    }
    TwistedCWComplex::new(cells, mats, orientable, betti, conditions31)
}

pub fn print(x: &TwistedCWComplex) -> String {
    let yn = |b: bool| if b { "yes" } else { "no" };
    let mut out = String::new();
    let _ = writeln!(out, "dim {}", x.dim());
    write_dims(&mut out, "cells", x.cells());
    let _ = writeln!(out, "orientable {}", yn(x.orientable()));
    write_dims(&mut out, "betti", x.betti());
    let _ = writeln!(out, "conditions31 {}", yn(x.conditions31()));
    for (q, d) in x.boundaries().iter().enumerate() {
        let _ = writeln!(out, "boundary {} {} {}", q + 1, d.rows(), d.cols());
        for i in 0..d.rows() {
            let row: Vec<String> = (0..d.cols()).map(|j| d.get(i, j).to_string()).collect();
            let _ = writeln!(out, "{}", row.join(" "));
        }
    }
    out
}
