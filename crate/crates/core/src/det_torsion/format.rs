//! Plain-text chain complex format.
//!
//! ```text
//! # comments start with '#'
//! field rational          # rational | laurent | ratfunc
//! dims 1 1
//! boundary 1 1 1          # degree q, rows, cols; then `rows` lines
//! 2
//! ```
//!
//! Entries are whitespace separated: rationals (`3/2`), Laurent polynomials
//! in `t` (`1-t+2t^-1`) or rational functions (`(t)/(t-1)`). Every degree
//! `1..=m` needs a `boundary` block; blocks with zero rows carry no lines.
//! [`print`] emits the canonical form, so parse/print round trips are
//! byte-exact on canonical input.

use std::fmt::Write as _;

use super::{CellFrame, ChainComplex, GradedDims};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{parse_rational, Field, RatFunc, Rational};

/// Coefficient field declared by a complex file.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldKind {
    Rational,
    Laurent,
    RatFunc,
}

impl FieldKind {
    pub fn name(self) -> &'static str {
        match self {
            FieldKind::Rational => "rational",
            FieldKind::Laurent => "laurent",
            FieldKind::RatFunc => "ratfunc",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "rational" => Some(FieldKind::Rational),
            "laurent" => Some(FieldKind::Laurent),
            "ratfunc" => Some(FieldKind::RatFunc),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum ParsedComplex {
    Rational(ChainComplex<Rational>),
    /// Laurent and rational-function entries both live in `Q(t)`.
    RatFunc(FieldKind, ChainComplex<RatFunc>),
}

impl ParsedComplex {
    pub fn kind(&self) -> FieldKind {
        match self {
            ParsedComplex::Rational(_) => FieldKind::Rational,
            ParsedComplex::RatFunc(k, _) => *k,
        }
    }
}

pub(crate) fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

pub(crate) struct Lines<'a> {
    inner: Vec<(usize, &'a str)>,
    pos: usize,
}

impl<'a> Lines<'a> {
    pub(crate) fn new(text: &'a str) -> Self {
        let inner = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap().trim()))
            .filter(|(_, l)| !l.is_empty())
            .collect();
        Self { inner, pos: 0 }
    }

    pub(crate) fn next(&mut self) -> Option<(usize, &'a str)> {
        let r = self.inner.get(self.pos).copied();
        self.pos += 1;
        r
    }

    pub(crate) fn last_line(&self) -> usize {
        self.inner.last().map_or(0, |l| l.0)
    }
}

/// Parses a `keyword v1 v2 …` header into its numeric values.
pub(crate) fn header_values(line: usize, text: &str, keyword: &str) -> Result<Vec<usize>> {
    let mut parts = text.split_whitespace();
    if parts.next() != Some(keyword) {
        return Err(perr(line, format!("expected `{keyword}`")));
    }
    parts
        .map(|p| {
            p.parse()
                .map_err(|_| perr(line, format!("bad number `{p}`")))
        })
        .collect()
}

/// Reads `boundary q rows cols` blocks for `q = 1..=m`.
pub(crate) fn read_boundaries<'a, T>(
    lines: &mut impl FnMut() -> Option<(usize, &'a str)>,
    last_line: usize,
    dims: &[usize],
    parse_entry: &impl Fn(&str) -> Result<T>,
) -> Result<Vec<(usize, Vec<T>)>> {
    let m = dims.len() - 1;
    let mut out = Vec::with_capacity(m);
    for q in 1..=m {
        let (ln, text) = lines().ok_or_else(|| perr(last_line, format!("missing boundary {q}")))?;
        let h = header_values(ln, text, "boundary")?;
        if h.len() != 3 || h[0] != q {
            return Err(perr(ln, format!("expected `boundary {q} <rows> <cols>`")));
        }
        let (rows, cols) = (h[1], h[2]);
        if rows != dims[q - 1] || cols != dims[q] {
            return Err(perr(
                ln,
                format!("boundary {q} must be {}x{}", dims[q - 1], dims[q]),
            ));
        }
        let mut entries = Vec::with_capacity(rows * cols);
        for _ in 0..rows {
            let (ln, row) = lines().ok_or_else(|| perr(last_line, "truncated matrix"))?;
            let cells: Vec<&str> = row.split_whitespace().collect();
            if cells.len() != cols {
                return Err(perr(
                    ln,
                    format!("expected {cols} entries, found {}", cells.len()),
                ));
            }
            for c in cells {
                entries.push(parse_entry(c).map_err(|e| perr(ln, e.to_string()))?);
            }
        }
        out.push((ln, entries));
    }
    Ok(out)
}

pub fn parse(text: &str) -> Result<ParsedComplex> {
    let mut lines = Lines::new(text);
    let last = lines.last_line();
    let (ln, field_line) = lines.next().ok_or_else(|| perr(0, "empty complex file"))?;
    let kind = field_line
        .strip_prefix("field")
        .map(str::trim)
        .and_then(FieldKind::parse)
        .ok_or_else(|| perr(ln, "expected `field rational|laurent|ratfunc`"))?;
    let (ln, dims_line) = lines.next().ok_or_else(|| perr(last, "missing dims"))?;
    let dims = header_values(ln, dims_line, "dims")?;
    if dims.is_empty() {
        return Err(perr(ln, "dims needs at least one degree"));
    }
    let mut next = || lines.next();
    let parsed = match kind {
        FieldKind::Rational => {
            let blocks = read_boundaries(&mut next, last, &dims, &parse_rational)?;
            ParsedComplex::Rational(build(&dims, blocks)?)
        }
        FieldKind::Laurent => {
            let blocks = read_boundaries(&mut next, last, &dims, &|s: &str| {
                Ok(RatFunc::from_laurent(s.parse()?))
            })?;
            ParsedComplex::RatFunc(kind, build(&dims, blocks)?)
        }
        FieldKind::RatFunc => {
            let blocks = read_boundaries(&mut next, last, &dims, &|s: &str| s.parse())?;
            ParsedComplex::RatFunc(kind, build(&dims, blocks)?)
        }
    };
    if let Some((ln, _)) = lines.next() {
        return Err(perr(ln, "trailing content"));
    }
    Ok(parsed)
}

fn build<F: crate::scalar::Field>(
    dims: &[usize],
    blocks: Vec<(usize, Vec<F>)>,
) -> Result<ChainComplex<F>> {
    let mut mats = Vec::with_capacity(blocks.len());
    for (i, (_, entries)) in blocks.into_iter().enumerate() {
        mats.push(Matrix::from_vec(dims[i], dims[i + 1], entries)?);
    }
    ChainComplex::new(GradedDims::new(dims.to_vec()), mats)
}

/// Reference bases for [`torsion_phi`](super::torsion_phi): blocks
/// `frame q n n` followed by `n` rows, columns being the basis vectors.
/// Degrees without a block keep the unit vectors.
pub fn parse_frames<F: Field>(
    text: &str,
    dims: &GradedDims,
    parse_entry: impl Fn(&str) -> Result<F>,
) -> Result<CellFrame<F>> {
    let mut lines = Lines::new(text);
    let last = lines.last_line();
    let mut bases: Vec<Option<Matrix<F>>> = vec![None; dims.top_degree() + 1];
    while let Some((ln, header)) = lines.next() {
        let h = header_values(ln, header, "frame")?;
        if h.len() != 3 || h[1] != h[2] {
            return Err(perr(ln, "expected `frame <q> <n> <n>`"));
        }
        let (q, n) = (h[0], h[1]);
        if q > dims.top_degree() || n != dims.get(q) {
            return Err(perr(ln, format!("degree {q} has {} cells", dims.get(q))));
        }
        if bases[q].is_some() {
            return Err(perr(ln, format!("second frame for degree {q}")));
        }
        let mut entries = Vec::with_capacity(n * n);
        for _ in 0..n {
            let (ln, row) = lines.next().ok_or_else(|| perr(last, "truncated frame"))?;
            let cells: Vec<&str> = row.split_whitespace().collect();
            if cells.len() != n {
                return Err(perr(
                    ln,
                    format!("expected {n} entries, found {}", cells.len()),
                ));
            }
            for c in cells {
                entries.push(parse_entry(c).map_err(|e| perr(ln, e.to_string()))?);
            }
        }
        bases[q] = Some(Matrix::from_vec(n, n, entries)?);
    }
    if bases.iter().all(Option::is_none) {
        return Ok(CellFrame::Standard);
    }
    Ok(CellFrame::Bases(
        bases
            .into_iter()
            .enumerate()
            .map(|(q, b)| b.unwrap_or_else(|| Matrix::identity(dims.get(q))))
            .collect(),
    ))
}

pub(crate) fn write_dims(out: &mut String, keyword: &str, dims: &[usize]) {
    out.push_str(keyword);
    for d in dims {
        let _ = write!(out, " {d}");
    }
    out.push('\n');
}

pub(crate) fn write_matrix<F: Field>(out: &mut String, q: usize, m: &Matrix<F>) {
    let _ = writeln!(out, "boundary {q} {} {}", m.rows(), m.cols());
    for i in 0..m.rows() {
        let row: Vec<String> = (0..m.cols()).map(|j| m[(i, j)].to_string()).collect();
        let _ = writeln!(out, "{}", row.join(" "));
    }
}

pub fn print(parsed: &ParsedComplex) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "field {}", parsed.kind().name());
    match parsed {
        ParsedComplex::Rational(c) => print_body(&mut out, c),
        ParsedComplex::RatFunc(_, c) => print_body(&mut out, c),
    }
    out
}

fn print_body<F: crate::scalar::Field>(out: &mut String, c: &ChainComplex<F>) {
    write_dims(out, "dims", c.dims().dims());
    for (i, d) in c.boundaries().iter().enumerate() {
        write_matrix(out, i + 1, d);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_rational() {
        let text = "field rational\ndims 1 1\nboundary 1 1 1\n3/2\n";
        let p = parse(text).unwrap();
        assert_eq!(print(&p), text);
    }

    #[test]
    fn round_trip_laurent() {
        let text =
            "field laurent\ndims 1 2 1\nboundary 1 1 2\nt-1 0\nboundary 2 2 1\n0\n-t+1+2t^-1\n";
        let p = parse(text).unwrap();
        assert_eq!(print(&p), text);
    }

    #[test]
    fn comments_and_blank_lines() {
        let text = "# circle\nfield laurent\n\ndims 1 1 # two cells\nboundary 1 1 1\nt-1\n";
        let p = parse(text).unwrap();
        assert_eq!(print(&p), "field laurent\ndims 1 1\nboundary 1 1 1\nt-1\n");
    }

    #[test]
    fn errors_carry_line_numbers() {
        let e = parse("field rational\ndims 1 1\nboundary 1 1 1\nx\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 4, .. }), "{e:?}");
        let e = parse("field rational\ndims 1 1\nboundary 1 2 1\n1\n1\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 3, .. }));
        let e = parse("field reals\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 1, .. }));
    }

    #[test]
    fn rejects_nonzero_composite() {
        let text = "field rational\ndims 1 1 1\nboundary 1 1 1\n1\nboundary 2 1 1\n1\n";
        assert!(matches!(parse(text), Err(Error::ComplexInvalid(_))));
    }

    #[test]
    fn frames() {
        let dims = GradedDims::new(vec![2, 1]);
        let f = parse_frames("# none\n", &dims, parse_rational).unwrap();
        assert_eq!(f, CellFrame::Standard);
        let f = parse_frames("frame 0 2 2\n1 1\n0 2\n", &dims, parse_rational).unwrap();
        match f {
            CellFrame::Bases(b) => {
                assert_eq!(b[0].det().unwrap(), Rational::from_integer(2.into()));
                assert_eq!(b[1], Matrix::identity(1));
            }
            CellFrame::Standard => panic!("expected bases"),
        }
        assert!(matches!(
            parse_frames("frame 1 2 2\n1 0\n0 1\n", &dims, parse_rational),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_frames("frame 0 2 2\n1 0\n", &dims, parse_rational),
            Err(Error::Parse { line: 2, .. })
        ));
    }
}
