//! Exact computer algebra for W-indexed matrix realizations of the nil affine
//! Hecke action on torus-equivariant K-groups of semi-infinite flag varieties.
//!
//! The crate works over simply-laced root systems (A1-A3, D4, D5, E6-E8) and
//! keeps every computation exact: scalars are Laurent polynomials in q^{1/2e}
//! and t^{1/2} with arbitrary-precision rational coefficients, and limits are
//! taken by exact valuation bookkeeping and single-divisor Laurent division.
//!
//! Pipeline, from generators to matrices:
//! - [`daha`] builds difference-reflection operators for the double affine
//!   Hecke algebra generators and the commuting Y-elements,
//! - [`wmatrix`] turns an operator into a W-by-W matrix over functions and
//!   applies the t-rescaling and the exact t->0 limit,
//! - [`heis`] hosts the two q-Heisenberg codomains and the duality maps
//!   (`tau`, `star`) between them,
//! - [`nildaha`] composes these into the two nil representations, the direct
//!   Demazure matrices, spherical restriction, and q-Toda operators,
//! - [`ktheory`] applies the matrices to formal K-classes, giving inverse
//!   Pieri-Chevalley expansions,
//! - [`expr`], [`cli`], [`checks`], [`golden`] provide the element grammar,
//!   the command-line surface, and the verification suites.

pub mod rootdata;
pub mod exactalg;
pub mod heis;
pub mod daha;
pub mod wmatrix;
pub mod nildaha;
pub mod ktheory;
pub mod expr;
pub mod golden;
pub mod checks;
pub mod cli;

/// Crate-wide error type. The CLI maps each variant class to a stable exit
/// code: parse errors 1, limit failures 2, domain/check failures 3, I/O 4.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("limit diverges: {0}")]
    LimitDiverges(String),
    #[error("limit is not a Laurent polynomial: {0}")]
    LimitNotLaurent(String),
    #[error("{0}")]
    Domain(String),
    #[error("check failed: {0}")]
    Check(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("malformed data: {0}")]
    Data(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Stable process exit code for this error class.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. } => 1,
            Error::LimitDiverges(_) | Error::LimitNotLaurent(_) => 2,
            Error::Domain(_) | Error::Check(_) => 3,
            Error::Io(_) | Error::Data(_) => 4,
        }
    }
}
