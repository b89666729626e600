use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("matrix is {rows}x{cols}, not square")]
    NotSquare { rows: usize, cols: usize },
    #[error("the zero polynomial has no finite root set")]
    ZeroPolynomial,

    #[error("duplicate {kind} name `{name}`")]
    DuplicateName { kind: &'static str, name: String },
    #[error("unknown {kind} `{name}`")]
    Unknown { kind: &'static str, name: String },
    #[error("quiver has no vertices")]
    EmptyQuiver,
    #[error("quiver is not connected")]
    Disconnected,
    #[error("paths are not composable: {0}")]
    NotComposable(String),
    #[error("invalid quiver morphism: {0}")]
    InvalidMorphism(String),

    #[error("representations live over different quivers")]
    QuiverMismatch,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("maps do not intertwine at arrow `{arrow}`")]
    NotIntertwining { arrow: String },
    #[error("morphism is not an endomorphism")]
    NotEndomorphism,
    #[error("operation requires a nonzero representation")]
    ZeroRepresentation,
    #[error("operation requires characteristic 0")]
    Characteristic,
    #[error("undecided: {0}")]
    Undecided(String),
}

pub type Result<T> = std::result::Result<T, Error>;
