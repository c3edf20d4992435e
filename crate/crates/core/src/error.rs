use thiserror::Error;

/// Every failure the toolkit can report. Axiom and theorem failures carry the
/// witnessing elements (as dense indices) so reports are reproducible.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty table")]
    Empty,
    #[error("table is not square: row {row} has length {len}, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },
    #[error("NotClosed at ({row},{col}): entry {value} is out of range")]
    NotClosed { row: usize, col: usize, value: usize },
    #[error("NotAssociative at ({a},{b},{c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("NoIdentity")]
    NoIdentity,
    #[error("NoInverse(element {0})")]
    NoInverse(usize),
    #[error("{map}: length {len}, expected {expected}")]
    BadLength { map: String, len: usize, expected: usize },
    #[error("{map}: index {index} maps to {value}, outside a carrier of size {size}")]
    OutOfRange { map: String, index: usize, value: usize, size: usize },
    #[error("NotHom({map}) at ({a},{b})")]
    NotHom { map: String, a: usize, b: usize },
    #[error("NotBijective({which})")]
    NotBijective { which: String },
    #[error("ActionMismatch: {0}")]
    ActionMismatch(String),
    #[error("NotAction({detail})")]
    NotAction { detail: String },
    #[error("NotAutomorphism({what}) at {witness:?}")]
    NotAutomorphism { what: String, witness: Vec<usize> },
    #[error("NotSubgroup at {witness:?}")]
    NotSubgroup { witness: Vec<usize> },
    #[error("NotNormal: conjugate of {k} by {g} leaves the subgroup")]
    NotNormal { g: usize, k: usize },

    #[error("InterchangeFailure at (p={p}, p'={p2}, q={q}, q'={q2})")]
    InterchangeFailure { p: usize, p2: usize, q: usize, q2: usize },
    #[error("GroupoidAxiomFailure({axiom}) at {witness:?}")]
    GroupoidAxiomFailure { axiom: String, witness: Vec<usize> },
    #[error("NotGroupoidMorphism({condition}) at {witness:?}")]
    NotGroupoidMorphism { condition: String, witness: Vec<usize> },
    #[error("EqPhiFailure at {witness:?}")]
    EqPhiFailure { witness: Vec<usize> },

    #[error("Peiffer1Failure at (g1={g1}, g1'={g1p})")]
    Peiffer1Failure { g1: usize, g1p: usize },
    #[error("Peiffer2Failure at (g0={g0}, g1={g1})")]
    Peiffer2Failure { g0: usize, g1: usize },
    #[error("NotDerivation({which}) at ({h0},{h0p})")]
    NotDerivation { which: String, h0: usize, h0p: usize },
    #[error("SquareFailure({detail}) at {witness:?}")]
    SquareFailure { detail: String, witness: Vec<usize> },
    #[error("EquivarianceFailure at (g0={g0}, g1={g1})")]
    EquivarianceFailure { g0: usize, g1: usize },

    #[error("RRBFailure(h={h}, h'={h2}): lhs {lhs} != rhs {rhs}")]
    RrbFailure { h: usize, h2: usize, lhs: usize, rhs: usize },
    #[error("ComponentFailure({which}): {source}")]
    ComponentFailure { which: String, source: Box<Error> },
    #[error("MixedIdentityFailure(h0={h0}, h1={h1}): lhs {lhs} != rhs {rhs}")]
    MixedIdentityFailure { h0: usize, h1: usize, lhs: usize, rhs: usize },
    #[error("NotAdjointAction")]
    NotAdjointAction,
    #[error("InvariantViolation({lemma}) at {witness:?}")]
    InvariantViolation { lemma: String, witness: Vec<usize> },
    #[error("SearchBudgetExceeded: more than {budget} search nodes")]
    SearchBudgetExceeded { budget: u64 },

    #[error("BraidFailure at {triple:?}: lhs {lhs:?} != rhs {rhs:?}")]
    BraidFailure { triple: [usize; 3], lhs: [usize; 3], rhs: [usize; 3] },
    #[error("FunctorialityFailure({condition}) at {witness:?}")]
    FunctorialityFailure { condition: String, witness: Vec<usize> },

    #[error("CocycleFailure(g={g}, g'={g2}): lhs {lhs} != rhs {rhs}")]
    CocycleFailure { g: usize, g2: usize, lhs: usize, rhs: usize },
    #[error("MixedFailure(g0={g0}, g1={g1}): lhs {lhs} != rhs {rhs}")]
    MixedFailure { g0: usize, g1: usize, lhs: usize, rhs: usize },

    #[error("NotLieAlgebra({detail})")]
    NotLieAlgebra { detail: String },
    #[error("IdentityFailure({identity}) at basis ({i},{j}): lhs {lhs} != rhs {rhs}")]
    IdentityFailure { identity: String, i: usize, j: usize, lhs: String, rhs: String },

    #[error("I/O error: {0}")]
    Io(String),
    #[error("ParseError: {0}")]
    Parse(String),
}

impl Error {
    /// Process exit code: 1 for mathematical failures, 2 for I/O or parse
    /// errors, 3 when a search budget was exhausted.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Io(_) | Error::Parse(_) => 2,
            Error::SearchBudgetExceeded { .. } => 3,
            Error::ComponentFailure { source, .. } => source.exit_code(),
            _ => 1,
        }
    }

    pub(crate) fn component(which: &str, source: Error) -> Error {
        Error::ComponentFailure { which: which.to_string(), source: Box::new(source) }
    }

    pub(crate) fn invariant(lemma: &str, witness: Vec<usize>) -> Error {
        Error::InvariantViolation { lemma: lemma.to_string(), witness }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
