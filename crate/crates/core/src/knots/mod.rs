//! Knot diagrams, the Wirtinger presentation and Fox calculus, torsions of
//! the exterior and of the 0-surgery, and two independent routes to the
//! Conway polynomial.

mod conway;
pub mod fixtures;
mod pd;
mod skein;
mod torsion;
pub mod wirtinger;

pub use conway::ConwayPoly;
pub use pd::{parse_pd, KnotDiagram, OrientedCrossing};
pub use skein::{conway_skein, conway_skein_with_budget, SkeinReport, SkeinTriple, DEFAULT_BUDGET};
pub use torsion::{
    absolute_torsion_at, absolute_torsion_at_complex, absolute_torsion_from, alexander_poly,
    canonical_normalize, canonical_torsion, conway_from_torsion, conway_of_canonical,
    exterior_complex, exterior_torsion, exterior_torsion_phi, surgery_complex, surgery_torsion,
    Normalization, TorsionRep,
};
pub use wirtinger::{wirtinger, WirtingerPresentation};
