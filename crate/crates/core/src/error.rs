use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("not a group: {reason} (witness elements {witness:?})")]
    NotAGroup { reason: String, witness: Vec<usize> },

    #[error("group order {order} exceeds the cap of {cap}")]
    TooLarge { order: usize, cap: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("element set is not a subgroup")]
    NotASubgroup,

    #[error("monomial of arity {expected} applied to {got} arguments")]
    ArityMismatch { expected: usize, got: usize },

    #[error("element {target} is not in the normal closure of {generator}")]
    NotInClosure { generator: usize, target: usize },

    #[error("group is nilpotent")]
    GroupIsNilpotent,

    #[error("internal contradiction: {0}")]
    InternalContradiction(String),

    #[error("monomial is not homogeneous")]
    NotHomogeneous,

    #[error("monomial arity {0} is too small for this check")]
    ArityTooSmall(usize),

    #[error("search space of {words} words exceeds the cap of {cap}")]
    SearchSpaceTooLarge { words: u128, cap: u64 },

    #[error("family violates the hypothesis: {0}")]
    HypothesisViolated(String),

    #[error("iteration bound {n} exceeds the supported maximum {max}")]
    BoundTooLarge { n: usize, max: usize },

    #[error("universe of size {0} exceeds 16")]
    UniverseTooLarge(usize),

    #[error("mask {mask} does not fit a universe of size {universe}")]
    MaskOutOfRange { mask: u32, universe: usize },

    #[error("set size {size} exceeds the cap of {cap}")]
    SizeCap { size: usize, cap: usize },

    #[error("state space {states} exceeds the cap of {cap}")]
    StateSpaceTooLarge { states: u128, cap: u64 },

    #[error("distance exceeds the 254-step limit of the distance array")]
    DistanceOverflow,

    #[error("generating set does not generate the group")]
    NotGenerating,

    #[error("unknown group `{0}`")]
    UnknownGroup(String),

    #[error("unknown suite `{0}`")]
    UnknownSuite(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::TooLarge { .. }
            | Error::SearchSpaceTooLarge { .. }
            | Error::SizeCap { .. }
            | Error::StateSpaceTooLarge { .. }
            | Error::BoundTooLarge { .. }
            | Error::DistanceOverflow => 3,
            Error::InternalContradiction(_) => 1,
            _ => 2,
        }
    }
}
