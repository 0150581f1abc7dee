//! Idempotents of the associated line modules, the trace functional on the
//! coinvariant subalgebra, and the pairing `<tr, [E_mu]>`.

use std::fmt;

use crate::error::AlgebraError;
use crate::galois::closed_form_legs;
use crate::s3core::{is_coinvariant, AlgElement, BasisMonomial};
use crate::scalars::ParamScalar;

/// Matrix with winding-0 entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoinvariantMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<AlgElement>,
}

impl CoinvariantMatrix {
    /// Row-major construction; every entry must be coinvariant.
    pub fn new(rows: usize, cols: usize, entries: Vec<AlgElement>) -> Result<Self, AlgebraError> {
        if entries.len() != rows * cols {
            return Err(AlgebraError::ShapeMismatch);
        }
        if let Some(bad) = entries.iter().find(|e| !is_coinvariant(e)) {
            let w = bad.terms().map(|(m, _)| m.winding()).find(|w| *w != 0).unwrap_or(0);
            return Err(AlgebraError::NotCoinvariant { winding: w });
        }
        Ok(Self { rows, cols, entries })
    }

    pub fn identity(n: usize) -> Self {
        let entries = (0..n * n).map(|i| if i / n == i % n { AlgElement::one() } else { AlgElement::zero() }).collect();
        Self { rows: n, cols: n, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &AlgElement {
        &self.entries[i * self.cols + j]
    }

    pub fn entries(&self) -> &[AlgElement] {
        &self.entries
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(AlgElement::is_zero)
    }

    pub fn mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        if self.cols != other.rows {
            return Err(AlgebraError::ShapeMismatch);
        }
        let mut entries = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = AlgElement::zero();
                for k in 0..self.cols {
                    acc = acc.add(&self.get(i, k).mul(other.get(k, j)));
                }
                entries.push(acc);
            }
        }
        Ok(Self { rows: self.rows, cols: other.cols, entries })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(AlgebraError::ShapeMismatch);
        }
        let entries = self.entries.iter().zip(&other.entries).map(|(x, y)| x.sub(y)).collect();
        Ok(Self { rows: self.rows, cols: self.cols, entries })
    }

    pub fn is_idempotent(&self) -> bool {
        self.is_square() && self.mul(self).is_ok_and(|sq| sq == *self)
    }
}

impl fmt::Display for CoinvariantMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// `E_mu` for `mu != 0`.
///
/// For `mu = -n` the entries are `E_ij = r_i l_j` where `l_i`, `r_i` are the
/// left and right legs of `ℓ(u^n)` with `r_i = a^{n-i} b*^i`, so that
/// `E_{-1} = [[aa*, q a(1-aa*)b], [a*b*, q(1-aa*)b*b]]`. For `mu = n` the legs
/// of `ℓ(u*^n)` are used.
pub fn idempotent(mu: i64) -> Result<CoinvariantMatrix, AlgebraError> {
    if mu == 0 {
        return Err(AlgebraError::ZeroMu);
    }
    let n = mu.unsigned_abs() as u32;
    let mut legs = closed_form_legs(n, mu < 0);
    legs.reverse();
    let size = legs.len();
    let mut entries = Vec::with_capacity(size * size);
    for (_, r) in &legs {
        for (l, _) in &legs {
            entries.push(r.mul(l));
        }
    }
    CoinvariantMatrix::new(size, size, entries)
}

pub fn matrix_trace(e: &CoinvariantMatrix) -> Result<AlgElement, AlgebraError> {
    if !e.is_square() {
        return Err(AlgebraError::NotSquare { rows: e.rows, cols: e.cols });
    }
    Ok((0..e.rows).fold(AlgElement::zero(), |acc, i| acc.add(e.get(i, i))))
}

/// `tr` on a single winding-0 basis monomial.
pub fn trace_of_monomial(m: &BasisMonomial) -> ParamScalar {
    let one = ParamScalar::one();
    if m.mu != 0 || m.nu != 0 || m.is_unit() {
        ParamScalar::zero()
    } else if m.m > 0 {
        (&one - &ParamScalar::q_pow(i64::from(m.m))).inv().expect("1 - q^m is nonzero")
    } else {
        -(&one - &ParamScalar::p_pow(i64::from(m.n))).inv().expect("1 - p^n is nonzero")
    }
}

/// `tr(f) = Tr(ρ_2(f) - ρ_1(f))` on the coinvariant subalgebra.
pub fn trace_functional(x: &AlgElement) -> Result<ParamScalar, AlgebraError> {
    let mut acc = ParamScalar::zero();
    for (m, c) in x.terms() {
        if m.winding() != 0 {
            return Err(AlgebraError::NotCoinvariant { winding: m.winding() });
        }
        acc = &acc + &(c * &trace_of_monomial(m));
    }
    Ok(acc)
}

/// `<tr, [E_mu]> = tr(Tr E_mu)`.
pub fn pairing(mu: i64) -> Result<ParamScalar, AlgebraError> {
    trace_functional(&matrix_trace(&idempotent(mu)?)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn e_minus_one_entries() {
        let e = idempotent(-1).unwrap();
        let (a, a_s, b, b_s) = (AlgElement::a(), AlgElement::a_star(), AlgElement::b(), AlgElement::b_star());
        let q = ParamScalar::q();
        let p_atom = AlgElement::p_atom(1);
        assert_eq!(*e.get(0, 0), a.mul(&a_s));
        assert_eq!(*e.get(0, 1), a.mul(&p_atom).mul(&b).scale(&q));
        assert_eq!(*e.get(1, 0), a_s.mul(&b_s));
        assert_eq!(*e.get(1, 1), p_atom.mul(&b_s).mul(&b).scale(&q));
    }

    #[test]
    fn small_idempotents() {
        for mu in [-2, -1, 1, 2] {
            assert!(idempotent(mu).unwrap().is_idempotent(), "mu = {mu}");
        }
    }

    #[test]
    fn zero_mu_rejected() {
        assert_eq!(idempotent(0), Err(AlgebraError::ZeroMu));
    }

    #[test]
    fn trace_anchor_values() {
        assert!(trace_functional(&AlgElement::one()).unwrap().is_zero());
        let expect = (ParamScalar::one() - ParamScalar::q()).inv().unwrap();
        assert_eq!(trace_functional(&AlgElement::p_atom(1)).unwrap(), expect);
        let expect = -(ParamScalar::one() - ParamScalar::p_pow(2)).inv().unwrap();
        assert_eq!(trace_functional(&AlgElement::q_atom(2)).unwrap(), expect);
        assert!(trace_functional(&AlgElement::a()).is_err());
    }

    #[test]
    fn pairing_minus_one() {
        assert_eq!(pairing(-1).unwrap(), ParamScalar::from_int(-1));
        assert_eq!(pairing(1).unwrap(), ParamScalar::one());
    }

    #[test]
    fn trace_shape_errors() {
        let m = CoinvariantMatrix::new(1, 2, vec![AlgElement::one(), AlgElement::one()]).unwrap();
        assert_eq!(matrix_trace(&m), Err(AlgebraError::NotSquare { rows: 1, cols: 2 }));
        assert!(CoinvariantMatrix::new(1, 1, vec![AlgElement::a()]).is_err());
        let two = matrix_trace(&CoinvariantMatrix::identity(2)).unwrap();
        assert_eq!(two, AlgElement::scalar(ParamScalar::from_int(2)));
    }
}
