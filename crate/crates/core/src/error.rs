use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid family: {0}")]
    InvalidFamily(String),
    #[error("isotropic row {0} of the Cartan matrix is identically zero")]
    SingularNormalization(usize),
    #[error("even block {0} is singular")]
    SingularBlock(usize),
    #[error("no even block with index {0}")]
    NoSuchBlock(usize),
    #[error("root is odd; compactness is only defined for even roots")]
    NotAnEvenRoot,
    #[error("vector is not in the root lattice of the simple system")]
    NotInRootLattice,
    #[error("cannot flip at unpainted node {0}")]
    FlipAtUnpainted(usize),
    #[error("cannot flip at odd node {0}")]
    FlipAtOddNode(usize),
    #[error("cannot flip at node {0}: it is moved by the involution")]
    FlipAtMovedNode(usize),
    #[error("diagrams belong to different families")]
    FamilyMismatch,
    #[error("block has {0} painted vertices; reduce it first")]
    UnreducedInput(usize),
    #[error("bad node index {0}: {1}")]
    BadIndex(usize, String),
    #[error("unknown involution `{0}`")]
    UnknownInvolution(String),
    #[error("parse error at {pos}: {msg}")]
    ParseError { pos: usize, msg: String },
    #[error("diagram has {0} nodes; the limit is {1}")]
    RankGuardExceeded(usize, usize),
    #[error("{0}")]
    Unsupported(String),
    #[error("{0}")]
    Io(String),
}
