//! Diagrams shipped with the crate, embedded from the `fixtures/` directory.

use super::pd::{parse_pd, KnotDiagram};
use crate::error::Result;

/// A named diagram with its known Conway polynomial, lowest power first.
#[derive(Clone, Copy, Debug)]
pub struct Fixture {
    pub name: &'static str,
    pub file: &'static str,
    pub text: &'static str,
    pub conway: &'static [i64],
    pub is_knot: bool,
}

impl Fixture {
    pub fn diagram(&self) -> Result<KnotDiagram> {
        parse_pd(self.text)
    }
}

macro_rules! fixture {
    ($name:literal, $file:literal, $conway:expr, $knot:literal) => {
        Fixture {
            name: $name,
            file: $file,
            text: include_str!(concat!("../../../../fixtures/", $file)),
            conway: $conway,
            is_knot: $knot,
        }
    };
}

pub const FIXTURES: &[Fixture] = &[
    fixture!("unknot", "unknot.pd", &[1], true),
    fixture!("trefoil-left", "trefoil_left.pd", &[1, 0, 1], true),
    fixture!("trefoil-right", "trefoil_right.pd", &[1, 0, 1], true),
    fixture!("figure-eight", "figure_eight.pd", &[1, 0, -1], true),
    fixture!("5_1", "knot_5_1.pd", &[1, 0, 3, 0, 1], true),
    fixture!("5_2", "knot_5_2.pd", &[1, 0, 2], true),
    fixture!("6_1", "knot_6_1.pd", &[1, 0, -2], true),
    fixture!("granny", "granny.pd", &[1, 0, 2, 0, 1], true),
    fixture!("square", "square.pd", &[1, 0, 2, 0, 1], true),
    fixture!("trefoil-4", "trefoil_4crossing.pd", &[1, 0, 1], true),
    fixture!("hopf", "hopf.pd", &[0, -1], false),
];

/// Knots covered by the pipeline-equality check.
pub const ACCEPTANCE_KNOTS: &[&str] = &[
    "unknot",
    "trefoil-left",
    "trefoil-right",
    "figure-eight",
    "5_1",
    "5_2",
    "6_1",
    "granny",
    "square",
];

pub fn fixture(name: &str) -> Option<&'static Fixture> {
    FIXTURES.iter().find(|f| f.name == name)
}
