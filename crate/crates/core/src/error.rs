use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("input must be nonzero")]
    ZeroInput,
    #[error("product N = 0 admits infinitely many triples")]
    ZeroProduct,
    #[error("infinite family: n=t³")]
    InfiniteFamily,
    #[error("({x}, {y}, {z}) is not a representation of {n}")]
    NotASolution {
        x: String,
        y: String,
        z: String,
        n: String,
    },
    #[error("search bound {0} exceeds the supported maximum")]
    BoundTooLarge(u64),
    #[error("limit {0} exceeds the supported maximum")]
    LimitTooLarge(u64),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("arithmetic overflow in fixed-width scalar")]
    Overflow,
    #[error("comparison undecided at {0} bits")]
    Undecided(u32),
}
