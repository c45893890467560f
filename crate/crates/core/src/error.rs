use thiserror::Error;

#[derive(Debug, Error)]
pub enum PosetError {
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown label `{0}`")]
    UnknownLabel(String),
    #[error("relation has a cycle through `{0}` and `{1}`")]
    Cycle(String, String),
    #[error("order is not transitive: {0} <= {1} <= {2} but not {0} <= {2}")]
    NotTransitive(String, String, String),
    #[error("element id {id} out of range for a poset of {size} elements")]
    InvalidElement { id: usize, size: usize },
    #[error("poset is not graded")]
    NotGraded,
    #[error("chain length must be at least 1")]
    ZeroChainLength,
    #[error("tuple {0:?} is not a multichain of the base poset")]
    NotAMultichain(Vec<usize>),
    #[error("number of mark classes must be at least 1")]
    ZeroMarkClasses,
    #[error("antichain count must be at least 1")]
    ZeroAntichainCount,
    #[error("level {level} has {size} elements, the exhaustive check allows at most {limit}")]
    LevelTooLarge { level: usize, size: usize, limit: usize },
    #[error("poset has {size} elements, the brute-force oracle allows at most {limit}")]
    PosetTooLarge { size: usize, limit: usize },
    #[error("malformed poset JSON: {0}")]
    Json(#[from] serde_json::Error),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FlowError {
    #[error("node {0} out of range")]
    InvalidNode(usize),
    #[error("source and sink must differ")]
    SourceIsSink,
    #[error("arc {0} has negative capacity")]
    NegativeCapacity(usize),
    #[error("arc {0} enters the source or leaves the sink")]
    TerminalArc(usize),
    #[error("requested flow {requested} exceeds the maximum flow {max}")]
    Infeasible { requested: i64, max: i64 },
    #[error("network has a negative-cost cycle")]
    NegativeCycle,
}

pub type Result<T, E = PosetError> = std::result::Result<T, E>;
