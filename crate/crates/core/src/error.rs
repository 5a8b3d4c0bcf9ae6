use thiserror::Error;

use crate::profile::{Color, Profile};

/// Errors raised by the structural operations of the crate.
///
/// Axiom failures are not errors: validators collect them into a
/// [`Report`](crate::report::Report) instead.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown color `{0}`")]
    UnknownColor(Color),
    #[error("involution is not involutive at color `{color}`: `{color}` -> `{image}` -> `{back}`")]
    NotInvolutive { color: Color, image: Color, back: Color },
    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("index {index} out of range (at most {max})")]
    IndexOutOfRange { index: i64, max: i64 },
    #[error("not a permutation: {0:?}")]
    InvalidPermutation(Vec<usize>),
    #[error("colors do not match for grafting: `{left}` against `{right}`")]
    ColorMismatch { left: Color, right: Color },
    #[error("entry {0} is empty")]
    EmptyEntry(Profile),
    #[error("`{element}` is not an element of entry {profile}")]
    NotAnElement { profile: Profile, element: String },
    #[error("profile {profile} exceeds the arity bound {bound}")]
    BeyondBound { profile: Profile, bound: usize },
    #[error("entry {profile} has {size} elements, over the limit of {limit}")]
    EntryTooLarge { profile: Profile, size: String, limit: u128 },
    #[error("no identity for color `{0}`")]
    MissingIdentity(Color),
    #[error("table has no value for {0}")]
    MissingTable(String),
    #[error("closure violated: {0}")]
    Closure(String),
    #[error("involution on colors is not free at `{0}`")]
    NonFreeInvolution(Color),
    #[error("involution on colors is not trivial at `{0}`")]
    NontrivialInvolution(Color),
    #[error("unbound variable `{0}`")]
    UnboundVariable(String),
    #[error("size guard: {0}")]
    SizeGuard(String),
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
