//! Conway polynomial by skein resolution towards a descending diagram.
//!
//! Components are traversed in order, each from its smallest edge. A
//! crossing is good when it is first reached along its over-strand; a
//! diagram whose crossings are all good is a stack of unknotted, unlinked
//! components. Otherwise the lowest-index bad crossing of sign `ε` is
//! resolved by `∇(L_ε) = ∇(L_{-ε}) + ε z ∇(L_0)`.

use std::collections::{BTreeMap, HashMap};

use super::conway::ConwayPoly;
use super::pd::{KnotDiagram, OrientedCrossing};
use crate::error::{Error, Result};

/// Default cap on the number of diagrams visited.
pub const DEFAULT_BUDGET: usize = 2_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct Diagram {
    /// `(under_in, under_out, over_in, over_out, sign)`.
    crossings: Vec<(usize, usize, usize, usize, i8)>,
    free_loops: usize,
}

/// One resolved crossing: `∇(L_+) - ∇(L_-) = z ∇(L_0)` must hold.
#[derive(Clone, Debug, PartialEq)]
pub struct SkeinTriple {
    pub plus: ConwayPoly,
    pub minus: ConwayPoly,
    pub zero: ConwayPoly,
}

impl SkeinTriple {
    pub fn holds(&self) -> bool {
        self.plus.sub(&self.minus) == self.zero.mul_z()
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct SkeinReport {
    pub conway: ConwayPoly,
    /// Number of distinct diagrams evaluated.
    pub nodes: usize,
    pub triples: Vec<SkeinTriple>,
}

impl SkeinReport {
    pub fn failures(&self) -> usize {
        self.triples.iter().filter(|t| !t.holds()).count()
    }
}

impl Diagram {
    fn from_knot_diagram(d: &KnotDiagram) -> Self {
        let crossings = d
            .crossings()
            .iter()
            .map(
                |&OrientedCrossing {
                     under_in,
                     under_out,
                     over_in,
                     over_out,
                     sign,
                 }| { (under_in, under_out, over_in, over_out, sign) },
            )
            .collect();
        let free_loops = d.components().iter().filter(|c| c.is_empty()).count();
        Self {
            crossings,
            free_loops,
        }
    }

    /// For each edge: the crossing it enters and whether it enters as over.
    fn heads(&self) -> BTreeMap<usize, (usize, bool)> {
        let mut m = BTreeMap::new();
        for (c, x) in self.crossings.iter().enumerate() {
            m.insert(x.0, (c, false));
            m.insert(x.2, (c, true));
        }
        m
    }

    /// Components as edge sequences, each from its smallest edge, ordered by
    /// that edge.
    fn components(&self) -> Vec<Vec<(usize, usize, bool)>> {
        let heads = self.heads();
        let mut seen = BTreeMap::new();
        let mut comps = Vec::new();
        for &start in heads.keys() {
            if seen.contains_key(&start) {
                continue;
            }
            let mut comp = Vec::new();
            let mut e = start;
            loop {
                seen.insert(e, ());
                let (c, over) = heads[&e];
                comp.push((e, c, over));
                let x = self.crossings[c];
                e = if over { x.3 } else { x.1 };
                if e == start {
                    break;
                }
            }
            comps.push(comp);
        }
        comps
    }

    fn component_count(&self) -> usize {
        self.components().len() + self.free_loops
    }

    /// Relabels edges in traversal order and sorts crossings.
    fn canonical(&self) -> Self {
        let mut map = HashMap::new();
        for comp in self.components() {
            for (e, _, _) in comp {
                let n = map.len();
                map.insert(e, n);
            }
        }
        let mut crossings: Vec<_> = self
            .crossings
            .iter()
            .map(|x| (map[&x.0], map[&x.1], map[&x.2], map[&x.3], x.4))
            .collect();
        crossings.sort();
        Self {
            crossings,
            free_loops: self.free_loops,
        }
    }

    fn first_bad(&self) -> Option<usize> {
        let mut first_visit: Vec<Option<bool>> = vec![None; self.crossings.len()];
        for comp in self.components() {
            for (_, c, over) in comp {
                if first_visit[c].is_none() {
                    first_visit[c] = Some(over);
                }
            }
        }
        first_visit.iter().position(|v| *v == Some(false))
    }

    fn switched(&self, c: usize) -> Self {
        let mut d = self.clone();
        let (ui, uo, oi, oo, s) = d.crossings[c];
        d.crossings[c] = (oi, oo, ui, uo, -s);
        d
    }

    /// Oriented smoothing: `under_in → over_out` and `over_in → under_out`.
    fn smoothed(&self, c: usize) -> Self {
        let mut d = self.clone();
        let (ui, uo, oi, oo, _) = d.crossings.remove(c);
        let rename = |from: usize, to: usize, d: &mut Diagram| {
            for x in &mut d.crossings {
                for e in [&mut x.0, &mut x.1, &mut x.2, &mut x.3] {
                    if *e == from {
                        *e = to;
                    }
                }
            }
        };
        // Edge `oo` continues `ui`; edge `uo` continues `oi`.
        let mut pairs = vec![(oo, ui), (uo, oi)];
        while let Some((from, to)) = pairs.pop() {
            if from == to {
                d.free_loops += 1;
                continue;
            }
            rename(from, to, &mut d);
            for p in &mut pairs {
                if p.0 == from {
                    p.0 = to;
                }
                if p.1 == from {
                    p.1 = to;
                }
            }
        }
        d
    }
}

struct Solver {
    memo: HashMap<Diagram, ConwayPoly>,
    triples: Vec<SkeinTriple>,
    budget: usize,
}

impl Solver {
    fn solve(&mut self, d: &Diagram) -> Result<ConwayPoly> {
        let d = d.canonical();
        if let Some(v) = self.memo.get(&d) {
            return Ok(v.clone());
        }
        if self.memo.len() >= self.budget {
            return Err(Error::RecursionBudgetExceeded(self.budget));
        }
        let value = match d.first_bad() {
            None => {
                if d.component_count() == 1 {
                    ConwayPoly::one()
                } else {
                    ConwayPoly::zero()
                }
            }
            Some(c) => {
                let eps = d.crossings[c].4;
                let other = self.solve(&d.switched(c))?;
                let zero = self.solve(&d.smoothed(c))?;
                let z_term = zero.mul_z();
                let value = if eps > 0 {
                    other.add(&z_term)
                } else {
                    other.sub(&z_term)
                };
                let (plus, minus) = if eps > 0 {
                    (value.clone(), other)
                } else {
                    (other, value.clone())
                };
                self.triples.push(SkeinTriple { plus, minus, zero });
                value
            }
        };
        self.memo.insert(d, value.clone());
        Ok(value)
    }
}

/// Conway polynomial of an oriented knot or link diagram.
pub fn conway_skein(d: &KnotDiagram) -> Result<SkeinReport> {
    conway_skein_with_budget(d, DEFAULT_BUDGET)
}

pub fn conway_skein_with_budget(d: &KnotDiagram, budget: usize) -> Result<SkeinReport> {
    let mut solver = Solver {
        memo: HashMap::new(),
        triples: Vec::new(),
        budget,
    };
    let conway = solver.solve(&Diagram::from_knot_diagram(d))?;
    Ok(SkeinReport {
        conway,
        nodes: solver.memo.len(),
        triples: solver.triples,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::knots::pd::parse_pd;

    #[test]
    fn smoothing_a_kink_adds_a_loop() {
        // A one-crossing unknot: the over-strand feeds the under-strand.
        let d = parse_pd("X 1 1 2 2").unwrap();
        let g = Diagram::from_knot_diagram(&d);
        let s = g.smoothed(0);
        assert!(s.crossings.is_empty());
        assert_eq!(s.free_loops, 2);
        assert_eq!(conway_skein(&d).unwrap().conway, ConwayPoly::one());
    }

    #[test]
    fn budget_is_enforced() {
        let d = parse_pd("X 1 4 2 5\nX 3 6 4 1\nX 5 2 6 3").unwrap();
        assert_eq!(
            conway_skein_with_budget(&d, 1).unwrap_err(),
            Error::RecursionBudgetExceeded(1)
        );
    }
}
