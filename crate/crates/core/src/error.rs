use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("malformed encoding: {0}")]
    MalformedEncoding(String),
    #[error("not cubic: vertex {vertex} has degree {degree}")]
    NotCubic { vertex: usize, degree: usize },
    #[error("not simple: {0}")]
    NotSimple(String),
    #[error("graph has no vertices")]
    Empty,
    #[error("order {0} exceeds the supported maximum of 64")]
    TooLarge(usize),
    #[error("an edge cut must contain at least one edge")]
    EmptyCut,
    #[error("edge index {0} out of range")]
    EdgeOutOfRange(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OddnessError {
    #[error("oddness is only defined for bridgeless cubic graphs")]
    NotBridgeless,
    #[error("no perfect matching found (precondition breach)")]
    NoPerfectMatching,
    #[error("no 2-factor found (precondition breach)")]
    NoTwoFactor,
    #[error("edge set is not a perfect matching: {0}")]
    InvalidMatching(String),
    #[error("oddness algorithms disagree: matchings gave {by_matchings}, 2-factors gave {by_two_factors}")]
    AlgorithmDisagreement {
        by_matchings: usize,
        by_two_factors: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConnectivityError {
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph is not 2-connected")]
    NotTwoConnected,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenerationError {
    #[error("order {order} exceeds the generation ceiling {ceiling}")]
    OrderTooLarge { order: usize, ceiling: usize },
    #[error("invalid generation request: {0}")]
    InvalidSpec(String),
}

#[derive(Debug, Error)]
pub enum PipelineError {
    #[error(transparent)]
    Generation(#[from] GenerationError),
    #[error(transparent)]
    Oddness(#[from] OddnessError),
    #[error(transparent)]
    Connectivity(#[from] ConnectivityError),
    #[error("line {line}: {source}")]
    Parse { line: usize, source: GraphError },
}
