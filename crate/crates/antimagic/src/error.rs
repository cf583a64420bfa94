use crate::graph::Side;
use crate::verify::VerifyReport;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("graph has no edges")]
    EmptyGraph,

    #[error("graph is not biregular: {side:?} side mixes degrees {a} and {b}")]
    NotBiregular { side: Side, a: usize, b: usize },

    #[error("edge ({x}, {y}) is out of bounds for a {x_count}x{y_count} graph")]
    VertexOutOfBounds {
        x: usize,
        y: usize,
        x_count: usize,
        y_count: usize,
    },

    #[error("duplicate edge ({x}, {y})")]
    DuplicateEdge { x: usize, y: usize },

    #[error("maximum matching has size {size}, cannot saturate all {required} X vertices")]
    Infeasible { size: usize, required: usize },

    #[error("operation requires {required}")]
    WrongCase { required: &'static str },

    #[error("vertex {vertex} has odd degree {degree} in the given edge set")]
    OddDegree { vertex: usize, degree: usize },

    #[error("item has odd length {length}")]
    OddLength { length: usize },

    #[error("edge set is not 2-regular: vertex {vertex} has degree {degree}")]
    NotTwoRegular { vertex: usize, degree: usize },

    #[error("label window holds {window} labels but the edge set has {needed}")]
    WindowMismatch { window: usize, needed: usize },

    #[error("window [{a}, {b}] is too small for {edges} edges")]
    BadWindow { a: i64, b: i64, edges: usize },

    #[error("cycle of length {length} has odd half-length")]
    OddHalfLength { length: usize },

    #[error("trail revisits Y vertex {y}")]
    RepeatedYVertex { y: usize },

    #[error("item of length {length} does not belong in the {bucket} bucket")]
    LengthClassViolation { length: usize, bucket: &'static str },

    #[error("items share Y vertex {y}")]
    YOverlap { y: usize },

    #[error("edge {edge} was assigned a label twice")]
    LabelCollision { edge: usize },

    #[error("labeling is incomplete: edge {edge} has no label")]
    IncompleteLabeling { edge: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("construction failed: {detail}")]
    ConstructionFailed {
        detail: String,
        report: Option<Box<VerifyReport>>,
    },

    #[error("graph has {edges} edges, oracle limit is {limit}")]
    TooLarge { edges: usize, limit: usize },

    #[error("infeasible generator spec: {0}")]
    GenInfeasible(String),

    #[error("generator gave up after {attempts} attempts without a simple graph")]
    RetriesExhausted { attempts: usize },

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}
