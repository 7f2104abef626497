use thiserror::Error;

/// Which group axiom a Cayley table failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axiom {
    Latin,
    Identity,
    Inverse,
    Associativity,
}

impl std::fmt::Display for Axiom {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            Axiom::Latin => "latin square",
            Axiom::Identity => "identity",
            Axiom::Inverse => "inverse",
            Axiom::Associativity => "associativity",
        };
        f.write_str(name)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("size limit exceeded: {what} would exceed the cap of {cap}")]
    SizeLimit { what: String, cap: usize },

    #[error("malformed table: {0}")]
    Shape(String),

    #[error("{axiom} axiom violated at {witness:?}: {detail}")]
    Axiom {
        axiom: Axiom,
        witness: Vec<usize>,
        detail: String,
    },

    #[error("not a subgroup: {0}")]
    NotSubgroup(String),

    #[error("subgroup is not normal: conjugating {element} by {conjugator} leaves the subgroup")]
    NotNormal { element: usize, conjugator: usize },

    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("cannot amalgamate: {0}")]
    Amalgamation(String),

    #[error("invalid action: {0}")]
    Action(String),

    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("time budget exhausted; best bounds found: {lower} <= sigma <= {upper}")]
    Timeout { lower: usize, upper: String },

    #[error("catalog integrity error: {0}")]
    Catalog(String),

    #[error("exchange format error on line {line}: {message}")]
    Exchange { line: usize, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
