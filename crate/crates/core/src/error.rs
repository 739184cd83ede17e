use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Input and precondition failures raised across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    Loop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex sets overlap at vertex {0}")]
    Overlap(usize),
    #[error("invalid cut: {0}")]
    InvalidCut(String),
    #[error("pattern has {size} vertices, the search bound is {bound}")]
    PatternTooLarge { size: usize, bound: usize },
    #[error("graph has {n} vertices, the limit is {limit}")]
    SizeLimit { n: usize, limit: usize },
    #[error("label {0} occurs more than once")]
    DuplicateLabel(String),
    #[error("label sets of the two sequences differ ({0})")]
    LabelMismatch(String),
    #[error("unknown label {0}")]
    UnknownLabel(String),
    #[error("malformed label {0:?}")]
    BadLabel(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("malformed model document: {0}")]
    Model(String),
    #[error("interval for {0} has lo > hi")]
    EmptyInterval(String),
    #[error("gadget sizes must be positive (got x={x}, y={y})")]
    GadgetSize { x: u64, y: u64 },
    #[error("vertex {0} belongs to the gadget")]
    InsideGadget(usize),
    #[error("graph does not respect the gadget structure ({0} violating vertices)")]
    StructureViolated(usize),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("integer overflow while evaluating {0}")]
    Overflow(&'static str),
}
