use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("list is not strictly ascending at position {index}")]
    NotSorted { index: usize },
    #[error("list contains 0")]
    ContainsZero,
    #[error("complement is not closed under addition: gap {gap} = {summand} + {} with both summands in the semigroup", gap - summand)]
    NotClosed { gap: u64, summand: u64 },
    #[error("small elements must start at 0")]
    MissingZero,
    #[error("small elements run past the conductor: {0} follows its predecessor")]
    PastConductor(u64),
    #[error("membership witness {witness} is not a member")]
    WitnessInvalid { witness: u64 },
    #[error("modulus must be nonzero")]
    ZeroModulus,
    #[error("{0} is not a nonzero member of the semigroup")]
    NotANonzeroMember(u64),
    #[error("{0} is not a member of the semigroup")]
    NotAMember(u64),
    #[error("index list is not descending at position {index}")]
    NotDescending { index: usize },
    #[error("index {index} exceeds bound {bound}")]
    IndexOutOfBound { index: usize, bound: usize },
    #[error("generator list is empty")]
    Empty,
    #[error("generators are not coprime (gcd {0})")]
    NotCoprime(u64),
    #[error("no run of consecutive members found within {0} iterations")]
    IterationCapExceeded(u64),
    #[error("arithmetic overflow")]
    Overflow,
}

impl Error {
    /// Whether the error stems from malformed or out-of-contract input, as
    /// opposed to a resource limit being hit.
    pub fn is_invalid_input(&self) -> bool {
        !matches!(self, Error::IterationCapExceeded(_) | Error::Overflow)
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
