//! The quantum disc `O(D_r)`: generated by `x` with `x*x - r xx* = 1 - r`.
//!
//! Basis: `x_mu (1-xx*)^m`, where `x_mu = x^mu` for `mu >= 0` and
//! `x*^|mu|` otherwise. Writing `P = 1 - xx*`, the rules used are
//!
//! ```text
//! xx* = 1 - P      x*x = 1 - rP      P x = r x P      P x* = r^-1 x* P
//! ```

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::AlgebraError;
use crate::scalars::{Param, ParamScalar};

/// Basis element `x_mu (1-xx*)^m` of a quantum disc.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DiscMonomial {
    pub mu: i64,
    pub m: u32,
}

impl DiscMonomial {
    pub const ONE: DiscMonomial = DiscMonomial { mu: 0, m: 0 };

    pub fn new(mu: i64, m: u32) -> Self {
        DiscMonomial { mu, m }
    }
}

/// Coefficients `c_j` with `x_mu x_nu = x_{mu+nu} * sum_j c_j P^j`.
pub(crate) fn letter_product(r: Param, mu: i64, nu: i64) -> Vec<ParamScalar> {
    let mut poly = vec![ParamScalar::one()];
    let mut times = |c: ParamScalar| {
        // poly *= (1 - c P)
        let mut next = poly.clone();
        next.push(ParamScalar::zero());
        for (j, v) in poly.iter().enumerate() {
            next[j + 1] = &next[j + 1] - &(&c * v);
        }
        poly = next;
    };
    if mu > 0 && nu < 0 {
        let k = -nu;
        for j in 1..=mu.min(k) {
            times(r.pow(-(k - j)));
        }
    } else if mu < 0 && nu > 0 {
        let k = -mu;
        for i in 0..k.min(nu) {
            times(r.pow(nu - i));
        }
    }
    poly
}

/// Product of two disc basis monomials, as `(monomial, coefficient)` pairs.
pub fn disc_monomial_mul(r: Param, x: DiscMonomial, y: DiscMonomial) -> Vec<(DiscMonomial, ParamScalar)> {
    // (x_mu P^m)(x_nu P^n) = r^{m nu} x_mu x_nu P^{m+n}
    let shift = r.pow(i64::from(x.m) * y.mu);
    letter_product(r, x.mu, y.mu)
        .into_iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(j, c)| (DiscMonomial::new(x.mu + y.mu, x.m + y.m + j as u32), &shift * &c))
        .collect()
}

/// An element of `O(D_r)`.
#[derive(Clone, PartialEq, Eq)]
pub struct DiscElement {
    param: Param,
    terms: BTreeMap<DiscMonomial, ParamScalar>,
}

impl DiscElement {
    pub fn zero(param: Param) -> Self {
        DiscElement { param, terms: BTreeMap::new() }
    }

    pub fn one(param: Param) -> Self {
        Self::monomial(param, DiscMonomial::ONE, ParamScalar::one())
    }

    pub fn monomial(param: Param, m: DiscMonomial, c: ParamScalar) -> Self {
        let mut out = Self::zero(param);
        out.add_term(m, c);
        out
    }

    /// The generator `x`.
    pub fn x(param: Param) -> Self {
        Self::monomial(param, DiscMonomial::new(1, 0), ParamScalar::one())
    }

    /// The adjoint generator `x*`.
    pub fn x_star(param: Param) -> Self {
        Self::monomial(param, DiscMonomial::new(-1, 0), ParamScalar::one())
    }

    pub fn param(&self) -> Param {
        self.param
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&DiscMonomial, &ParamScalar)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, m: DiscMonomial, c: ParamScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v = &*v + &c;
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, AlgebraError> {
        if self.param != other.param {
            return Err(AlgebraError::ParamMismatch);
        }
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &ParamScalar) -> Self {
        let mut out = Self::zero(self.param);
        for (m, v) in &self.terms {
            out.add_term(*m, v * c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.add(&other.scale(&ParamScalar::from_int(-1)))
    }

    /// Canonical product in `O(D_r)`.
    pub fn mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        if self.param != other.param {
            return Err(AlgebraError::ParamMismatch);
        }
        let mut out = Self::zero(self.param);
        for (x, cx) in &self.terms {
            for (y, cy) in &other.terms {
                let cxy = cx * cy;
                for (m, c) in disc_monomial_mul(self.param, *x, *y) {
                    out.add_term(m, &cxy * &c);
                }
            }
        }
        Ok(out)
    }

    /// Involution: `(x_mu P^m)* = r^{-m mu} x_{-mu} P^m`.
    pub fn star(&self) -> Self {
        let mut out = Self::zero(self.param);
        for (x, c) in &self.terms {
            let coeff = self.param.pow(-i64::from(x.m) * x.mu);
            out.add_term(DiscMonomial::new(-x.mu, x.m), &coeff * c);
        }
        out
    }
}

impl fmt::Display for DiscMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.mu {
            0 => {}
            1 => parts.push("x".to_string()),
            -1 => parts.push("x^*".to_string()),
            k if k > 0 => parts.push(format!("x^{k}")),
            k => parts.push(format!("x^*^{}", -k)),
        }
        match self.m {
            0 => {}
            1 => parts.push("(1 - x x^*)".to_string()),
            m => parts.push(format!("(1 - x x^*)^{m}")),
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join(" "))
        }
    }
}

impl fmt::Display for DiscElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        crate::s3core::render::write_terms(f, self.terms.iter().map(|(m, c)| (m.to_string(), c)))
    }
}

impl fmt::Debug for DiscElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DiscElement[{:?}]({self})", self.param)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p_atom(r: Param) -> DiscElement {
        DiscElement::monomial(r, DiscMonomial::new(0, 1), ParamScalar::one())
    }

    #[test]
    fn defining_relation() {
        for r in [Param::P, Param::Q] {
            let x = DiscElement::x(r);
            let xs = DiscElement::x_star(r);
            // x*x = 1 - r(1 - xx*)
            let lhs = xs.mul(&x).unwrap();
            let rhs = DiscElement::one(r).sub(&p_atom(r).scale(&r.scalar())).unwrap();
            assert_eq!(lhs, rhs);
            // x x* = 1 - (1 - xx*)
            let lhs = x.mul(&xs).unwrap();
            assert_eq!(lhs, DiscElement::one(r).sub(&p_atom(r)).unwrap());
            // x*x - r x x* = 1 - r
            let rel = xs.mul(&x).unwrap().sub(&x.mul(&xs).unwrap().scale(&r.scalar())).unwrap();
            let one_minus_r = ParamScalar::one() - r.scalar();
            assert_eq!(rel, DiscElement::one(r).scale(&one_minus_r));
        }
    }

    #[test]
    fn commutation() {
        let r = Param::P;
        let x = DiscElement::x(r);
        let lhs = p_atom(r).mul(&x).unwrap();
        let rhs = DiscElement::monomial(r, DiscMonomial::new(1, 1), ParamScalar::p());
        assert_eq!(lhs, rhs);
        let xs = DiscElement::x_star(r);
        let lhs = p_atom(r).mul(&xs).unwrap();
        let rhs = DiscElement::monomial(r, DiscMonomial::new(-1, 1), ParamScalar::p_pow(-1));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn mismatched_params() {
        let a = DiscElement::x(Param::P);
        let b = DiscElement::x(Param::Q);
        assert_eq!(a.mul(&b), Err(AlgebraError::ParamMismatch));
    }

    fn word(r: Param, letters: &[i8]) -> DiscElement {
        letters.iter().fold(DiscElement::one(r), |acc, &l| {
            let g = if l > 0 { DiscElement::x(r) } else { DiscElement::x_star(r) };
            acc.mul(&g).unwrap()
        })
    }

    #[test]
    fn closed_form_matches_letter_by_letter() {
        let r = Param::Q;
        for mu in -4i64..=4 {
            for nu in -4i64..=4 {
                let lw = vec![mu.signum() as i8; mu.unsigned_abs() as usize];
                let rw = vec![nu.signum() as i8; nu.unsigned_abs() as usize];
                let all: Vec<i8> = lw.iter().chain(rw.iter()).copied().collect();
                let direct = word(r, &all);
                let split = word(r, &lw).mul(&word(r, &rw)).unwrap();
                assert_eq!(direct, split, "mu={mu} nu={nu}");
            }
        }
    }

    #[test]
    fn star_is_antimultiplicative() {
        let r = Param::Q;
        let x = word(r, &[1, 1, -1]).add(&p_atom(r)).unwrap();
        let y = word(r, &[-1, 1, -1, -1]);
        let lhs = x.mul(&y).unwrap().star();
        let rhs = y.star().mul(&x.star()).unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(x.star().star(), x);
    }
}
