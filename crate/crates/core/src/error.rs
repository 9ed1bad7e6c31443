use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("field too large: {p}^{s} exceeds the 2^20 table budget")]
    FieldTooLarge { p: u32, s: u32 },

    #[error("{0} is not a prime")]
    NotPrime(u32),

    #[error("no primitive polynomial of degree {s} over GF({p})")]
    NoPrimitivePolynomial { p: u32, s: u32 },

    #[error("operands belong to different fields")]
    MixedFields,

    #[error("zero has no multiplicative inverse")]
    ZeroInverse,

    #[error("gcd({n}, {q}) != 1")]
    NotCoprime { n: u32, q: u32 },

    #[error("length {n} does not divide {order} (multiplicative group of the field)")]
    LengthDoesNotDivide { n: u32, order: u32 },

    #[error("residue set is not a single cyclotomic coset mod {n}")]
    NotACoset { n: u32 },

    #[error("generating set is not closed under multiplication by {q} mod {n}")]
    NotClosed { n: u32, q: u32 },

    #[error("codes live in different ambient spaces: ({q1}, {n1}) vs ({q2}, {n2})")]
    Mismatch { q1: u32, n1: u32, q2: u32, n2: u32 },

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("matrix rows are linearly dependent (rank {rank} < {rows})")]
    RankDeficient { rank: usize, rows: usize },

    #[error("{what} exceeds the size budget ({detail})")]
    Budget { what: &'static str, detail: String },

    #[error("invalid Reed-Muller parameters: {0}")]
    ReedMuller(String),

    #[error("star product fills the whole space: nothing is retrievable")]
    StarFillsSpace,

    #[error("scheme is unusable: {0}")]
    Unusable(String),

    #[error("responses are inconsistent with the storage code")]
    InconsistentResponses,

    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("internal consistency failure: {0}")]
    Internal(String),
}
