use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph order {order} exceeds the limit of {limit}")]
    OrderTooLarge { order: usize, limit: usize },

    #[error("{family} parameter {value} out of range: {expected}")]
    InvalidParameter {
        family: &'static str,
        value: usize,
        expected: &'static str,
    },

    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("isomorphism test on order {order} exceeds the limit of {limit}")]
    IsomorphismLimit { order: usize, limit: usize },

    #[error("enumeration on order {order} exceeds the cap of {cap}")]
    CapExceeded { order: usize, cap: usize },

    #[error("length mismatch: {orders} orders but {polys} polynomials")]
    LengthMismatch { orders: usize, polys: usize },

    #[error("empty argument list")]
    EmptyInput,

    #[error("edge list line {line}: {message}")]
    EdgeList { line: usize, message: String },
}
