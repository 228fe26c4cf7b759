use num_traits::Zero;

use super::pd::KnotDiagram;
use crate::error::Result;
use crate::scalar::{LaurentPoly, Rational};

/// Letter `x_g^{±1}` of a free group word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    pub gen: usize,
    pub exp: i8,
}

pub type Word = Vec<Letter>;

/// One generator per arc, one relator per crossing, and the longitude.
#[derive(Clone, Debug, PartialEq)]
pub struct WirtingerPresentation {
    pub generators: usize,
    pub relators: Vec<Word>,
    /// Longitude commuting with `x_0`, with exponent sum zero.
    pub longitude: Word,
}

fn letter(gen: usize, exp: i8) -> Letter {
    Letter { gen, exp }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, x: usize) -> usize {
        let p = self.0[x];
        if p == x {
            return x;
        }
        let r = self.find(p);
        self.0[x] = r;
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[rb] = ra;
        }
    }
}

/// Arc of every edge; arcs are numbered in order of first appearance along
/// the traversal, so the starting edge lies on arc 0.
pub fn arcs(d: &KnotDiagram) -> Vec<usize> {
    let mut uf = UnionFind((0..d.edge_count()).collect());
    for x in d.crossings() {
        uf.union(x.over_in, x.over_out);
    }
    let mut number = vec![usize::MAX; d.edge_count()];
    let mut out = vec![0; d.edge_count()];
    let mut next = 0;
    for comp in d.components() {
        for &e in comp {
            let r = uf.find(e);
            if number[r] == usize::MAX {
                number[r] = next;
                next += 1;
            }
            out[e] = number[r];
        }
    }
    out
}

/// Relator `x_j^{-ε} x_i x_j^{ε} x_k^{-1}` at a crossing of sign `ε` where
/// the under-strand passes from arc `i` to arc `k` beneath arc `j`.
pub fn wirtinger(d: &KnotDiagram) -> Result<WirtingerPresentation> {
    d.require_knot()?;
    if d.crossing_count() == 0 {
        return Ok(WirtingerPresentation {
            generators: 1,
            relators: Vec::new(),
            longitude: Vec::new(),
        });
    }
    let arc = arcs(d);
    let generators = arc.iter().max().map_or(1, |m| m + 1);
    let relators = d
        .crossings()
        .iter()
        .map(|x| {
            let (i, j, k) = (arc[x.under_in], arc[x.over_in], arc[x.under_out]);
            vec![
                letter(j, -x.sign),
                letter(i, 1),
                letter(j, x.sign),
                letter(k, -1),
            ]
        })
        .collect();

    // Passing under crossing c conjugates the current meridian by x_j^{ε}.
    let mut under_at = vec![None; d.edge_count()];
    for (c, x) in d.crossings().iter().enumerate() {
        under_at[x.under_in] = Some(c);
    }
    let mut longitude = Vec::new();
    for &e in &d.components()[0] {
        if let Some(c) = under_at[e] {
            let x = d.crossings()[c];
            longitude.push(letter(arc[x.over_in], x.sign));
        }
    }
    let w = d.writhe();
    let base = arc[d.components()[0][0]];
    for _ in 0..w.unsigned_abs() {
        longitude.push(letter(base, if w > 0 { -1 } else { 1 }));
    }
    Ok(WirtingerPresentation {
        generators,
        relators,
        longitude: reduce(longitude),
    })
}

/// Free reduction.
pub fn reduce(word: Word) -> Word {
    let mut out: Word = Vec::with_capacity(word.len());
    for l in word {
        match out.last() {
            Some(prev) if prev.gen == l.gen && prev.exp == -l.exp => {
                out.pop();
            }
            _ => out.push(l),
        }
    }
    out
}

/// Fox derivative `∂w/∂x_g` pushed to `Z[t, t^-1]` by `x_i ↦ t`.
pub fn fox_derivative(word: &[Letter], g: usize) -> LaurentPoly {
    let mut acc = LaurentPoly::zero();
    let mut prefix = 0i64;
    for l in word {
        if l.gen == g {
            if l.exp > 0 {
                acc.add_term(prefix, Rational::from_integer(1.into()));
            } else {
                acc.add_term(prefix - 1, Rational::from_integer((-1).into()));
            }
        }
        prefix += l.exp as i64;
    }
    acc
}

/// Exponent sum of a word, i.e. its image in `H ≅ Z`.
pub fn abelianize(word: &[Letter]) -> i64 {
    word.iter().map(|l| l.exp as i64).sum()
}

/// `generators × relators` matrix of abelianized Fox derivatives.
pub fn fox_matrix(p: &WirtingerPresentation) -> Vec<Vec<LaurentPoly>> {
    (0..p.generators)
        .map(|g| p.relators.iter().map(|r| fox_derivative(r, g)).collect())
        .collect()
}
