use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("expected a natural number >= 1, got 0")]
    ZeroNatural,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("operands live in different prime universes")]
    UniverseMismatch,
    #[error("prime {0} is outside the universe")]
    PrimeOutsideUniverse(u64),
    #[error("{den} does not divide {num}")]
    NotDivisible { num: String, den: String },
    #[error("order is only defined for t >= 2, got {0}")]
    OrderArgument(u64),
    #[error("characteristic mismatch: {0} vs {1}")]
    CharacteristicMismatch(u64, u64),
    #[error("{sub} is not a subfield of {sup}")]
    NotSubfield { sub: String, sup: String },
    #[error("the subfield must be proper")]
    NotProper,
    #[error("countably infinitely many maximal subrings (finite-order primes: {0})")]
    InfinitelyManyMaximal(String),
    #[error("extension is not finite (degree {0})")]
    NonFiniteExtension(String),
    #[error("count does not fit in 64 bits")]
    CountOverflow,
    #[error("chain enumeration exceeded the cap of {0} chains")]
    ChainLimit(u64),
    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("exponent overflow at offset {0}")]
    ExponentOverflow(usize),
    #[error("ring of {size} elements exceeds the size bound {bound}")]
    BoundExceeded { size: u64, bound: u64 },
    #[error("subring lattice exceeded the cap of {0} members")]
    LatticeOverflow(usize),
    #[error("ring is not a field")]
    NotAField,
    #[error("invalid ring tables: {0}")]
    InvalidRing(String),
    #[error("reduced product components have mixed characteristics")]
    MixedCharacteristics,
    #[error("malformed descriptor: {0}")]
    Malformed(String),
    #[error("a variety needs at least one point")]
    ZeroPoints,
}
