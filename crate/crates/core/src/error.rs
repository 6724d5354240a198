use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("graph order {order} outside 1..={max}")]
    OrderOutOfRange { order: usize, max: usize },
    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("empty vertex set")]
    EmptyVertexSet,
    #[error("anchor vertices must be distinct (got {0} twice)")]
    RepeatedAnchor(usize),
    #[error("disjoint union needs at least one graph")]
    EmptyUnion,
    #[error("invalid graph6: {0}")]
    Graph6(String),
    #[error("invalid edge list: {0}")]
    EdgeList(String),
    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),
    #[error("input is not a tree")]
    NotATree,
    #[error("input graph is disconnected")]
    Disconnected,
    #[error("no closed form for family {0}")]
    NoClosedForm(&'static str),
    #[error("extremizers not characterized for {0}")]
    Uncharacterized(String),
    #[error("order {order} exceeds the cap {cap} for {what}")]
    CapExceeded {
        what: &'static str,
        order: usize,
        cap: usize,
    },
}
