use thiserror::Error;

/// Errors raised anywhere in the torsion pipelines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole at evaluation point {0}")]
    PoleAtEvaluationPoint(String),
    #[error("matrix is {rows}x{cols}, expected square")]
    NonSquareMatrix { rows: usize, cols: usize },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("invalid chain complex: {0}")]
    ComplexInvalid(String),
    #[error("assembled change-of-basis matrix in degree {degree} is singular or not square")]
    SingularAssembly { degree: usize },
    #[error("zero element has no torsion coordinate")]
    ZeroInput,
    #[error("graded dimensions have different top degrees ({0} vs {1})")]
    DegreeMismatch(usize, usize),
    #[error("top degree {0} is even; duality needs odd top degree")]
    EvenTopDegree(usize),
    #[error("intersection pairing block in degree {0} is degenerate")]
    DegeneratePairing(usize),
    #[error("monodromy matrices do not commute")]
    NonCommutingMonodromy,
    #[error("bundle: {0}")]
    InvalidBundle(String),
    #[error("torsion vanishes identically (homology is nontrivial over the fraction field)")]
    ZeroTorsion,
    #[error("characteristic class exponent {0} is odd; it must be a square in H_1")]
    ParityError(i64),
    #[error("ratio of conjugate torsion to torsion is not a monomial: {0}")]
    NotMonomialRatio(String),
    #[error("conditions on w_(m-1)(X) and w_1(F) are not declared to hold")]
    Conditions31Violated,
    #[error("declared metadata disagrees with the complex: {0}")]
    MetadataMismatch(String),
    #[error("torsion of F + F* vanishes")]
    ZeroDenominatorTorsion,
    #[error("monodromy is not unitary")]
    NonUnitaryMonodromy,
    #[error("zero element has no phase")]
    ZeroElement,
    #[error("bundle is not acyclic: {0}")]
    NonAcyclicBundle(String),
    #[error("homological orientation required for odd-rank bundles")]
    MissingOrientation,
    #[error("malformed code: {0}")]
    MalformedCode(String),
    #[error("inconsistent arcs: {0}")]
    InconsistentArcs(String),
    #[error("all Fox minors vanish")]
    ZeroMinor,
    #[error("rational function is not a polynomial in z: {0}")]
    NonPolynomialInZ(String),
    #[error("skein recursion exceeded budget of {0} nodes")]
    RecursionBudgetExceeded(usize),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
