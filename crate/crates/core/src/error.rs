use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("branch points out of order: {0}")]
    OrderingViolation(String),
    #[error("branch point {0} outside (-1, 1)")]
    RangeViolation(f64),
    #[error("alphas and betas differ in length ({0} vs {1})")]
    LengthMismatch(usize, usize),
    #[error("x = {0} is not interior to the support")]
    DomainError(f64),
    #[error("quadrature did not converge: {0}")]
    ConvergenceError(String),
    #[error("loss of orthogonality at degree {degree}: {measure:e}")]
    LossOfOrthogonality { degree: usize, measure: f64 },
    #[error("index {needed} exceeds table horizon {horizon}")]
    HorizonExceeded { needed: usize, horizon: usize },
    #[error("non-positive a_{0} in difference iteration")]
    SingularStep(usize),
    #[error("gamma root {root} escaped gap {gap}")]
    RootEscape { gap: usize, root: f64 },
    #[error("closed form only available for genus 1 or 2, got {0}")]
    UnsupportedGenus(usize),
    #[error("denominator vanishes at x = {0}")]
    SingularDenominator(f64),
    #[error("P_n vanishes at branch point {0}")]
    BranchZero(f64),
    #[error("singular linear system: {0}")]
    SingularSystem(String),
    #[error("reflection normaliser D_n vanishes")]
    SingularDeterminant,
    #[error("division by prod(x + beta) left remainder {0:e}")]
    NonExactDivision(f64),
    #[error("mapping constraint failed: {0}")]
    ConstraintViolation(String),
    #[error("parameter region violated: {0}")]
    RegionViolation(String),
    #[error("zero census failed: {0}")]
    CensusViolation(String),
    #[error("invalid index: {0}")]
    IndexError(String),
}

pub type Result<T> = std::result::Result<T, Error>;
