use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AlgebraError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("denominator vanishes at p={p}, q={q}")]
    Pole { p: f64, q: f64 },
    #[error("Gauss binomial [{n}, {k}] requires k <= n")]
    BinomialRange { n: u32, k: u32 },
    #[error("disc elements over different parameters cannot be multiplied")]
    ParamMismatch,
    #[error("element is not coinvariant (has a monomial of winding {winding})")]
    NotCoinvariant { winding: i64 },
    #[error("idempotents are indexed by a nonzero integer")]
    ZeroMu,
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix shapes do not match for multiplication")]
    ShapeMismatch,
    #[error("invalid representation parameters: {0}")]
    InvalidRep(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at position {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}
