use thiserror::Error;

use crate::cli::ParseError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("zero germ has no multiplicity")]
    ZeroGerm,
    #[error("curve germ must vanish at the origin")]
    CurveNotThroughOrigin,
    #[error("foliation is zero: P and Q both vanish identically")]
    ZeroFoliation,
    #[error("foliation singularity is not isolated: P and Q share a branch through the origin")]
    NotIsolated,
    #[error("curve is not invariant by the foliation: f does not divide P*f_y - Q*f_x")]
    NotInvariant,
    #[error("curve is not reduced: its Tjurina number is infinite")]
    NotReduced,
    #[error("{0} is infinite")]
    InfiniteColength(String),
    #[error("degenerate decomposition: every GSV certificate has infinite intersection numbers")]
    DegenerateDecomposition,
    #[error("polar degenerate against C: every sampled polar curve shares a branch with C")]
    PolarDegenerate,
    #[error("could not draw {0} admissible polar directions")]
    PolarSampling(usize),
    #[error("polynomial is not weighted homogeneous")]
    NotWeightedHomogeneous,
    #[error("f is not in <P, Q>: the foliation is not quasi-homogeneous along C")]
    NotQuasiHomogeneous,
    #[error("hypothesis not asserted: {0}")]
    HypothesisNotAsserted(&'static str),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("unknown scenario id `{0}`")]
    UnknownScenario(String),
    #[error("scenario registry line {line}: {message}")]
    Registry { line: usize, message: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
