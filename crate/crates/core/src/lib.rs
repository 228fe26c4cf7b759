pub mod det_torsion;
pub mod error;
pub mod euler_cw;
pub mod knots;
pub mod matrix;
pub mod scalar;
pub mod verify;

pub use error::{Error, Result};
pub use matrix::{KernelImage, Matrix};
pub use scalar::{ComplexSample, Field, LaurentPoly, RatFunc, Rational};

pub use det_torsion::{ChainComplex, DetLineCoord, GradedDims, SignResidue};
pub use euler_cw::{EulerStructure, FlatBundle, HomOrientation, TwistedCWComplex};
pub use knots::{ConwayPoly, KnotDiagram};
pub use verify::CheckResult;
