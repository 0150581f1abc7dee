//! Gauss binomial coefficients.

use super::poly::Poly;
use super::ParamScalar;
use crate::error::AlgebraError;

/// Which deformation parameter a q-deformed quantity is taken in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize, serde::Deserialize)]
pub enum Param {
    P,
    Q,
}

impl Param {
    pub fn scalar(self) -> ParamScalar {
        match self {
            Param::P => ParamScalar::p(),
            Param::Q => ParamScalar::q(),
        }
    }

    /// `r^k` for this parameter `r`.
    pub fn pow(self, k: i64) -> ParamScalar {
        match self {
            Param::P => ParamScalar::p_pow(k),
            Param::Q => ParamScalar::q_pow(k),
        }
    }

    pub fn swap(self) -> Param {
        match self {
            Param::P => Param::Q,
            Param::Q => Param::P,
        }
    }
}

/// Gauss binomial `[n, k]_q` by the Pascal recursion
/// `[n, k] = [n-1, k-1] + q^k [n-1, k]`; polynomial arithmetic only.
pub fn qbinomial(n: u32, k: u32) -> Result<ParamScalar, AlgebraError> {
    qbinomial_in(Param::Q, n, k)
}

/// Gauss binomial in the chosen parameter.
pub fn qbinomial_in(param: Param, n: u32, k: u32) -> Result<ParamScalar, AlgebraError> {
    if k > n {
        return Err(AlgebraError::BinomialRange { n, k });
    }
    let var = match param {
        Param::P => Poly::p(),
        Param::Q => Poly::q(),
    };
    // row[j] = [i, j]
    let mut row: Vec<Poly> = vec![Poly::one()];
    for i in 1..=n {
        let mut next = Vec::with_capacity(i as usize + 1);
        for j in 0..=i {
            let left = if j >= 1 { row[(j - 1) as usize].clone() } else { Poly::zero() };
            let right = if j < i { var.pow(j).mul(&row[j as usize]) } else { Poly::zero() };
            next.push(left.add(&right));
        }
        row = next;
    }
    Ok(ParamScalar::from_poly(row[k as usize].clone()))
}

/// Gauss binomial from the product quotient
/// `(q-1)...(q^n-1) / ((q-1)...(q^k-1) (q-1)...(q^{n-k}-1))`.
///
/// Kept as an independent route for cross-checking [`qbinomial`].
pub fn qbinomial_quotient(n: u32, k: u32) -> Result<ParamScalar, AlgebraError> {
    if k > n {
        return Err(AlgebraError::BinomialRange { n, k });
    }
    let q = Poly::q();
    let falling = |m: u32| -> Poly { (1..=m).fold(Poly::one(), |acc, i| acc.mul(&q.pow(i).sub(&Poly::one()))) };
    let num = falling(n);
    let den = falling(k).mul(&falling(n - k));
    ParamScalar::from_parts(num, den)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_product_is_one() {
        for n in 0..6 {
            assert_eq!(qbinomial(n, 0).unwrap(), ParamScalar::one());
            assert_eq!(qbinomial(n, n).unwrap(), ParamScalar::one());
        }
    }

    #[test]
    fn out_of_range() {
        assert_eq!(qbinomial(2, 3), Err(AlgebraError::BinomialRange { n: 2, k: 3 }));
        assert!(qbinomial_quotient(1, 2).is_err());
    }

    #[test]
    fn quotient_formula_agrees() {
        for n in 0..=10 {
            for k in 0..=n {
                let a = qbinomial(n, k).unwrap();
                assert_eq!(a, qbinomial_quotient(n, k).unwrap(), "n={n} k={k}");
                assert!(a.denominator().is_one());
            }
        }
    }

    #[test]
    fn classical_limit() {
        assert_eq!(qbinomial(3, 1).unwrap().eval(0.3, 1.0).unwrap(), 3.0);
        assert_eq!(qbinomial(6, 3).unwrap().eval(0.3, 1.0).unwrap(), 20.0);
    }
}
