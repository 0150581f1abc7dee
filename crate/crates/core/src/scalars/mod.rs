//! Coefficient field: rational functions in `p`, `q` over Q, and q-combinatorics.

mod parse;
pub mod poly;
mod qbinom;
mod ratfun;

pub use poly::{Poly, PqExp};
pub use qbinom::{qbinomial, qbinomial_in, qbinomial_quotient, Param};
pub use ratfun::ParamScalar;

/// Arithmetic operation selector for [`scalar_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn scalar_arith(x: &ParamScalar, y: &ParamScalar, op: ArithOp) -> Result<ParamScalar, crate::AlgebraError> {
    Ok(match op {
        ArithOp::Add => x + y,
        ArithOp::Sub => x - y,
        ArithOp::Mul => x * y,
        ArithOp::Div => x.checked_div(y)?,
    })
}

pub fn scalar_eval(x: &ParamScalar, p: f64, q: f64) -> Result<f64, crate::AlgebraError> {
    x.eval(p, q)
}
