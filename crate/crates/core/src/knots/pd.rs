//! Planar diagram codes.
//!
//! One crossing per line, `X i j k l` with an optional `+` or `-`; the
//! KnotTheory form `X[i,j,k,l]` is accepted too. Slots run counterclockwise
//! starting at the incoming under-strand `i`, so `k` is the outgoing
//! under-strand. Labels are positive integers naming the edges between
//! crossings and each must occur exactly twice. `#` starts a comment and a
//! file without crossings is the unknot.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};

/// A crossing with its edges oriented by traversal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct OrientedCrossing {
    pub under_in: usize,
    pub under_out: usize,
    pub over_in: usize,
    pub over_out: usize,
    /// `+1` when the over-strand crosses from right to left.
    pub sign: i8,
}

/// Validated, oriented diagram. Edge indices refer to [`KnotDiagram::labels`].
#[derive(Clone, Debug, PartialEq)]
pub struct KnotDiagram {
    codes: Vec<[u64; 4]>,
    labels: Vec<u64>,
    crossings: Vec<OrientedCrossing>,
    components: Vec<Vec<usize>>,
}

fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn parse_line(line: usize, text: &str) -> Result<([u64; 4], Option<i8>)> {
    let body = text
        .strip_prefix('X')
        .ok_or_else(|| perr(line, "crossing lines start with `X`"))?;
    let cleaned: String = body
        .chars()
        .map(|c| if matches!(c, '[' | ']' | ',') { ' ' } else { c })
        .collect();
    let mut tokens: Vec<&str> = cleaned.split_whitespace().collect();
    let sign = match tokens.last() {
        Some(&"+") => Some(1),
        Some(&"-") => Some(-1),
        _ => None,
    };
    if sign.is_some() {
        tokens.pop();
    }
    if tokens.len() != 4 {
        return Err(perr(
            line,
            format!("expected 4 labels, found {}", tokens.len()),
        ));
    }
    let mut labels = [0u64; 4];
    for (slot, tok) in labels.iter_mut().zip(&tokens) {
        *slot = tok
            .parse()
            .ok()
            .filter(|&v| v > 0)
            .ok_or_else(|| perr(line, format!("bad label `{tok}`")))?;
    }
    Ok((labels, sign))
}

/// Parses and validates a PD code.
pub fn parse_pd(text: &str) -> Result<KnotDiagram> {
    let mut codes = Vec::new();
    let mut signs = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let t = raw.split('#').next().unwrap().trim();
        if t.is_empty() {
            continue;
        }
        let (c, s) = parse_line(i + 1, t)?;
        codes.push(c);
        signs.push(s);
    }
    KnotDiagram::from_codes(codes, &signs)
}

impl KnotDiagram {
    /// Orients the diagram; `stated` signs, where present, must agree.
    pub fn from_codes(codes: Vec<[u64; 4]>, stated: &[Option<i8>]) -> Result<Self> {
        let mut occurrences: BTreeMap<u64, Vec<(usize, usize)>> = BTreeMap::new();
        for (c, code) in codes.iter().enumerate() {
            for (s, &l) in code.iter().enumerate() {
                occurrences.entry(l).or_default().push((c, s));
            }
        }
        if let Some((l, occ)) = occurrences.iter().find(|(_, o)| o.len() != 2) {
            return Err(Error::InconsistentArcs(format!(
                "label {l} occurs {} times",
                occ.len()
            )));
        }
        let labels: Vec<u64> = occurrences.keys().copied().collect();
        let index: BTreeMap<u64, usize> = labels.iter().enumerate().map(|(i, &l)| (l, i)).collect();
        let edge_at = |c: usize, s: usize| index[&codes[c][s]];
        let other = |e: usize, here: (usize, usize)| {
            let occ = &occurrences[&labels[e]];
            if occ[0] == here {
                occ[1]
            } else {
                occ[0]
            }
        };

        let n = codes.len();
        let mut slot_in: Vec<[Option<usize>; 2]> = vec![[None; 2]; n];
        let mut visited = vec![false; labels.len()];
        let mut components = Vec::new();
        let mut under_seen = vec![false; n];
        for start in 0..n {
            if under_seen[start] {
                continue;
            }
            let e0 = edge_at(start, 0);
            if visited[e0] {
                return Err(Error::MalformedCode(format!(
                    "crossing {} has its under-strand running from slot 3 to slot 1",
                    start + 1
                )));
            }
            let mut comp = Vec::new();
            let (mut c, mut s) = (start, 0usize);
            let mut e = e0;
            loop {
                visited[e] = true;
                comp.push(e);
                match s {
                    0 => under_seen[c] = true,
                    2 => {
                        return Err(Error::MalformedCode(format!(
                            "crossing {} is entered through its outgoing under-slot",
                            c + 1
                        )))
                    }
                    _ => {}
                }
                slot_in[c][s % 2] = Some(s);
                let exit = (s + 2) % 4;
                let next = edge_at(c, exit);
                let (nc, ns) = other(next, (c, exit));
                if next == e0 {
                    break;
                }
                e = next;
                c = nc;
                s = ns;
            }
            components.push(comp);
        }
        if visited.iter().any(|v| !v) {
            return Err(Error::MissingOrientation);
        }

        let mut crossings = Vec::with_capacity(n);
        for (c, code) in codes.iter().enumerate() {
            let over_entry = slot_in[c][1].ok_or(Error::MissingOrientation)?;
            let sign = if over_entry == 3 { 1 } else { -1 };
            if let Some(Some(st)) = stated.get(c) {
                if *st != sign {
                    return Err(Error::MalformedCode(format!(
                        "crossing {} is stated {} but the orientation makes it {}",
                        c + 1,
                        if *st > 0 { '+' } else { '-' },
                        if sign > 0 { '+' } else { '-' }
                    )));
                }
            }
            let e = |s: usize| index[&code[s]];
            crossings.push(OrientedCrossing {
                under_in: e(0),
                under_out: e(2),
                over_in: e(over_entry),
                over_out: e((over_entry + 2) % 4),
                sign,
            });
        }
        if n == 0 {
            components.push(Vec::new());
        }
        Ok(Self {
            codes,
            labels,
            crossings,
            components,
        })
    }

    pub fn codes(&self) -> &[[u64; 4]] {
        &self.codes
    }

    pub fn labels(&self) -> &[u64] {
        &self.labels
    }

    pub fn crossings(&self) -> &[OrientedCrossing] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn edge_count(&self) -> usize {
        self.labels.len()
    }

    /// Edges of each component in traversal order. The unknot diagram has a
    /// single component without edges.
    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    pub fn is_knot(&self) -> bool {
        self.components.len() == 1
    }

    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|c| c.sign as i64).sum()
    }

    /// Fails unless the diagram has exactly one component.
    pub fn require_knot(&self) -> Result<()> {
        if self.is_knot() {
            Ok(())
        } else {
            Err(Error::MalformedCode(format!(
                "expected a knot, found {} components",
                self.components.len()
            )))
        }
    }

    /// The diagram with every crossing switched.
    pub fn mirror(&self) -> Self {
        // Reading the same four slots counterclockwise from the old
        // over-strand's incoming end.
        let l = |e: usize| self.labels[e];
        let codes = self
            .crossings
            .iter()
            .map(|x| {
                if x.sign > 0 {
                    [l(x.over_in), l(x.under_in), l(x.over_out), l(x.under_out)]
                } else {
                    [l(x.over_in), l(x.under_out), l(x.over_out), l(x.under_in)]
                }
            })
            .collect();
        Self::from_codes(codes, &[]).expect("mirror of a valid diagram")
    }

    pub fn to_pd_string(&self) -> String {
        let mut out = String::new();
        for (code, x) in self.codes.iter().zip(&self.crossings) {
            let _ = writeln!(
                out,
                "X {} {} {} {} {}",
                code[0],
                code[1],
                code[2],
                code[3],
                if x.sign > 0 { '+' } else { '-' }
            );
        }
        out
    }
}
