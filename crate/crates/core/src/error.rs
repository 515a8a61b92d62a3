use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank n = {0} is not supported (need n >= 3)")]
    RankTooSmall(i64),

    #[error("malformed index [{i},{j}]: i and j are congruent modulo {n}")]
    MalformedIndex { i: i64, j: i64, n: u32 },

    #[error("index [{i},{j}] is not in W^P for n = {n}")]
    NotInWp { i: i64, j: i64, n: u32 },

    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(u32, u32),

    #[error("degree ({0},{1}) is not effective")]
    NegativeDegree(i64, i64),

    #[error("divisor index must be 1 or 2, got {0}")]
    BadDivisor(i64),

    #[error("element is not classical: it has a term of nonzero q-degree")]
    NotClassical,

    #[error("coefficient has negative exponents and is not a polynomial in the positivity variables")]
    NotPolynomial,

    #[error("equivariant product requires one factor to be a combination of O^0 and O^1")]
    EquivariantNonDivisor,

    #[error("not a permutation of 1..{0}")]
    NotPermutation(usize),

    #[error("unknown verification suite `{0}`")]
    UnknownSuite(String),

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("internal invariant breach: {0}")]
    Internal(String),
}

impl Error {
    pub fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }

    /// Internal faults map to exit status 3 in the CLI; everything else is a usage error.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Internal(_))
    }
}
