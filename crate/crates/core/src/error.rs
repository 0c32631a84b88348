use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("cycle length {0} is below 3")]
    CycleTooShort(usize),
    #[error("cactus needs at least one cycle")]
    EmptyCactus,
    #[error("{cycles} cycles need {} attachments, got {attachments}", cycles - 1)]
    AttachmentCount { cycles: usize, attachments: usize },
    #[error("cycle {cycle} attaches to position {position} of cycle {target}, which does not exist yet")]
    BadAttachment {
        cycle: usize,
        target: usize,
        position: usize,
    },
    #[error("malformed cactus spec {0:?}")]
    CactusSyntax(String),
    #[error("malformed header: {0}")]
    MalformedHeader(String),
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("invalid graph6 data: {0}")]
    Graph6(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LabelingError {
    #[error("vertex labeling has length {got}, graph has {expected} vertices")]
    WrongLength { expected: usize, got: usize },
    #[error("vertex labels are not a bijection onto 1..={0}")]
    NotBijective(usize),
    #[error("graph has no edges, valence is undefined")]
    Edgeless,
    #[error("edge sums are not {0} distinct consecutive integers")]
    NotExtendable(usize),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolverError {
    #[error("graph has no edges, valence is undefined")]
    Edgeless,
    #[error("order {order} exceeds the limit of {limit}")]
    TooLarge { order: usize, limit: usize },
    #[error("invalid pin: {0}")]
    BadPin(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ObstructionError {
    #[error("graph has no edges, valence is undefined")]
    Edgeless,
    #[error("theorem formula needs even n >= 6 and 1 <= alpha <= n, got n={n}, alpha={alpha}")]
    Domain { n: i64, alpha: i64 },
}
