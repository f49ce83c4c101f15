use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A window must satisfy `valuation < order`.
    #[error("invalid window: valuation {valuation} is not below order {order}")]
    InvalidWindow { valuation: i64, order: i64 },

    /// A coefficient was requested outside the exponents the series determines.
    #[error("exponent {exponent} lies outside the window [{valuation}, {order})")]
    OutOfWindow {
        exponent: i64,
        valuation: i64,
        order: i64,
    },

    #[error("series is not invertible: coefficient of q^{exponent} is zero")]
    NotInvertible { exponent: i64 },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("unknown identifier `{0}`")]
    UnknownId(String),

    /// The request is beyond what the exact oracles can do in reasonable time.
    #[error("{what} = {requested} exceeds the feasible bound {limit}")]
    Resource {
        what: String,
        requested: i64,
        limit: i64,
    },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
