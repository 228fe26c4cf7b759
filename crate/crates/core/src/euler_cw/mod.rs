//! Torsions of Euler structures on twisted CW complexes with `H ≅ Z`:
//! the torsor action, canonical Euler structures, absolute torsion, the
//! Poincaré–Reidemeister product, the canonical involution and the phase.

mod bundle;
mod complex;
pub mod format;
mod torsion;

pub use bundle::{twist, FlatBundle};
pub use complex::{GroupRingMatrix, TwistedCWComplex};
pub use torsion::{
    absolute_torsion, canonical_euler, canonical_from_class, char_class_base, char_class_of,
    evaluate_acyclic, involution_bar, phase, phase_distance, pr_product, pr_product_coords,
    torsion_at_complex, torsion_euler, universal_torsion, AbsoluteTorsion, EulerStructure,
    HomOrientation,
};

#[cfg(test)]
mod tests;
