use thiserror::Error;

use crate::letter::Letter;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid multiplication table: {0}")]
    InvalidTable(String),
    #[error("table is not associative: ({0}*{1})*{2} != {0}*({1}*{2})")]
    NotAssociative(usize, usize, usize),
    #[error("table has no identity element")]
    NoIdentity,
    #[error("element {0} has no inverse")]
    NoInverse(usize),

    #[error("generator index {0} is out of range")]
    GeneratorOutOfRange(usize),
    #[error("generator {0} is listed twice")]
    DuplicateGenerator(usize),
    #[error("generating set contains the identity")]
    ContainsIdentity,
    #[error("generating set is not inverse-closed: inverse of {0} is missing")]
    NotInverseClosed(usize),
    #[error("generating set does not generate the group: element {0} is unreachable")]
    DoesNotGenerate(usize),

    #[error("homomorphism enumeration exceeded the cap of {0} assignments")]
    EnumerationCapExceeded(u64),

    #[error("graph is disconnected: vertex {0} is unreachable from vertex 0")]
    Disconnected(usize),
    #[error("vertex {to} is unreachable from vertex {from}")]
    Unreachable { from: usize, to: usize },
    #[error("invalid labelled graph: {0}")]
    InvalidGraph(String),
    #[error("circuit enumeration exceeded its cap: {0}")]
    CircuitCapExceeded(String),

    #[error("letter {0} is not in the alphabet")]
    UnknownLetter(Letter),
    #[error("letter {0} has no inverse in the alphabet")]
    MissingInverse(Letter),
    #[error("invalid rule: {0}")]
    InvalidRule(String),
    #[error("normal form computation exceeded {0} rewrite steps")]
    StepCapExceeded(usize),
    #[error("irreducible word census exceeded the cap of {0} words")]
    CensusCapExceeded(u64),
    #[error("alphabets collide on letter {0}")]
    AlphabetCollision(Letter),
    #[error("rewriting system is not inverse-closed")]
    SystemNotInverseClosed,
    #[error("letter map is not a bijection: {0}")]
    NotBijective(String),
    #[error("invalid letter order: {0}")]
    InvalidOrder(String),

    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
