//! Determinant lines of chain complexes: the torsion isomorphism
//! `φ_C : det C → det H_*(C)` with its sign `N(C)`, the fusion
//! isomorphism with sign `M(V,W)`, and the duality operator with sign `s(V)`.

mod complex;
pub mod format;
mod line;
mod phi;
mod signs;

pub use complex::{compute_homology, random_complex, ChainComplex, HomologyData, HomologyDegree};
pub use line::{dualize, fuse, identity_pairing};
pub use phi::{torsion_phi, transition_determinants, CellFrame, DetLineCoord};
pub use signs::{alpha_beta, duality_sign, fusion_sign, sign_n, GradedDims, SignResidue};

#[cfg(test)]
mod tests;
