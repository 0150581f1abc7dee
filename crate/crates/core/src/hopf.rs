//! `O(U(1))` as Laurent polynomials in a group-like unitary `u`, and the
//! right coaction `Δ_R: O(S^3_pq) -> O(S^3_pq) ⊗ O(U(1))`,
//! `Δ_R(a) = a ⊗ u`, `Δ_R(b) = b ⊗ u*`.

use std::collections::BTreeMap;
use std::fmt;

use crate::s3core::{self, AlgElement, BasisMonomial};
use crate::scalars::ParamScalar;

/// Finite sum `sum_k c_k u^k`.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct LaurentElement {
    terms: BTreeMap<i64, ParamScalar>,
}

/// Element of `O(U(1)) ⊗ O(U(1))`, keyed by `(i, j)` for `u^i ⊗ u^j`.
#[derive(Clone, Default, PartialEq, Eq, Debug)]
pub struct LaurentTensor {
    terms: BTreeMap<(i64, i64), ParamScalar>,
}

impl LaurentElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::u_pow(0)
    }

    pub fn u_pow(k: i64) -> Self {
        Self::monomial(k, ParamScalar::one())
    }

    pub fn monomial(k: i64, c: ParamScalar) -> Self {
        let mut out = Self::zero();
        out.add_term(k, c);
        out
    }

    pub fn add_term(&mut self, k: i64, c: ParamScalar) {
        add_into(&mut self.terms, k, c);
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &ParamScalar)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(*k, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(*k, -c);
        }
        out
    }

    pub fn scale(&self, c: &ParamScalar) -> Self {
        let mut out = Self::zero();
        for (k, v) in &self.terms {
            out.add_term(*k, v * c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (i, x) in &self.terms {
            for (j, y) in &other.terms {
                out.add_term(i + j, x * y);
            }
        }
        out
    }

    /// `u -> u*`; coefficients are real so they are kept.
    pub fn star(&self) -> Self {
        self.antipode()
    }

    /// `Δ(u^k) = u^k ⊗ u^k`.
    pub fn coproduct(&self) -> LaurentTensor {
        let mut out = LaurentTensor::default();
        for (k, c) in &self.terms {
            out.add_term(*k, *k, c.clone());
        }
        out
    }

    /// `ε(u^k) = 1`.
    pub fn counit(&self) -> ParamScalar {
        self.terms.values().fold(ParamScalar::zero(), |acc, c| &acc + c)
    }

    /// `S(u^k) = u^{-k}`.
    pub fn antipode(&self) -> Self {
        let mut out = Self::zero();
        for (k, c) in &self.terms {
            out.add_term(-k, c.clone());
        }
        out
    }
}

/// Selector for [`hopf_structure`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HopfOp {
    Coproduct,
    Counit,
    Antipode,
}

/// Result of one of the Hopf structure maps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HopfValue {
    Tensor(LaurentTensor),
    Scalar(ParamScalar),
    Element(LaurentElement),
}

pub fn hopf_structure(x: &LaurentElement, op: HopfOp) -> HopfValue {
    match op {
        HopfOp::Coproduct => HopfValue::Tensor(x.coproduct()),
        HopfOp::Counit => HopfValue::Scalar(x.counit()),
        HopfOp::Antipode => HopfValue::Element(x.antipode()),
    }
}

impl LaurentTensor {
    pub fn add_term(&mut self, i: i64, j: i64, c: ParamScalar) {
        add_into(&mut self.terms, (i, j), c);
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(i64, i64), &ParamScalar)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

fn add_into<K: Ord>(map: &mut BTreeMap<K, ParamScalar>, k: K, c: ParamScalar) {
    if c.is_zero() {
        return;
    }
    match map.get_mut(&k) {
        Some(v) => {
            *v = &*v + &c;
            if v.is_zero() {
                map.remove(&k);
            }
        }
        None => {
            map.insert(k, c);
        }
    }
}

/// Element of `O(S^3_pq) ⊗ O(U(1))`, keyed by `(monomial, power of u)`.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct CotensorElement {
    terms: BTreeMap<(BasisMonomial, i64), ParamScalar>,
}

impl CotensorElement {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `x ⊗ u^k`.
    pub fn simple(x: &AlgElement, k: i64) -> Self {
        let mut out = Self::zero();
        for (m, c) in x.terms() {
            out.add_term(*m, k, c.clone());
        }
        out
    }

    pub fn add_term(&mut self, m: BasisMonomial, k: i64, c: ParamScalar) {
        add_into(&mut self.terms, (m, k), c);
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(BasisMonomial, i64), &ParamScalar)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for ((m, k), c) in &other.terms {
            out.add_term(*m, *k, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for ((m, k), c) in &other.terms {
            out.add_term(*m, *k, -c);
        }
        out
    }

    /// Componentwise product: algebra product on the first leg, `u`-powers add.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for ((m1, k1), c1) in &self.terms {
            for ((m2, k2), c2) in &other.terms {
                let c = c1 * c2;
                for (m, k) in s3core::monomial_mul(m1, m2) {
                    out.add_term(m, k1 + k2, &c * &k);
                }
            }
        }
        out
    }

    /// Split by `u`-power: `sum_k x_k ⊗ u^k`.
    pub fn by_power(&self) -> BTreeMap<i64, AlgElement> {
        let mut out: BTreeMap<i64, AlgElement> = BTreeMap::new();
        for ((m, k), c) in &self.terms {
            out.entry(*k).or_default().add_term(*m, c.clone());
        }
        out
    }

    /// `(id ⊗ ε)`.
    pub fn apply_counit(&self) -> AlgElement {
        let mut out = AlgElement::zero();
        for ((m, _), c) in &self.terms {
            out.add_term(*m, c.clone());
        }
        out
    }

    /// `(id ⊗ Δ)`, as a map `(monomial, i, j) -> coeff`.
    pub fn apply_coproduct(&self) -> BTreeMap<(BasisMonomial, i64, i64), ParamScalar> {
        let mut out = BTreeMap::new();
        for ((m, k), c) in &self.terms {
            for ((i, j), v) in LaurentElement::monomial(*k, c.clone()).coproduct().terms() {
                add_into(&mut out, (*m, *i, *j), v.clone());
            }
        }
        out
    }

    /// `(Δ_R ⊗ id)`, as a map `(monomial, i, j) -> coeff`.
    pub fn apply_coaction_left(&self) -> BTreeMap<(BasisMonomial, i64, i64), ParamScalar> {
        let mut out = BTreeMap::new();
        for ((m, k), c) in &self.terms {
            for ((m2, i), v) in coaction(&AlgElement::basis(*m)).terms() {
                add_into(&mut out, (*m2, *i, *k), v * c);
            }
        }
        out
    }

    /// The `*`-structure of the tensor product.
    pub fn star(&self) -> Self {
        let mut out = Self::zero();
        for ((m, k), c) in &self.terms {
            for (m2, c2) in AlgElement::monomial(*m, c.clone()).star().terms() {
                out.add_term(*m2, -k, c2.clone());
            }
        }
        out
    }
}

/// `Δ_R`: each monomial of winding `w` goes to `monomial ⊗ u^w`.
pub fn coaction(x: &AlgElement) -> CotensorElement {
    let mut out = CotensorElement::zero();
    for (m, c) in x.terms() {
        out.add_term(*m, m.winding(), c.clone());
    }
    out
}

impl fmt::Display for LaurentElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        crate::s3core::render::write_terms(f, self.terms.iter().map(|(k, c)| (fmt_u(*k), c)))
    }
}

impl fmt::Debug for LaurentElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentElement({self})")
    }
}

/// `u^k` in text form; `u^0` prints as `1`.
pub fn fmt_u(k: i64) -> String {
    match k {
        0 => "1".into(),
        1 => "u".into(),
        k => format!("u^{k}"),
    }
}

impl fmt::Display for CotensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.by_power().into_iter().map(|(k, x)| format!("({x}) ⊗ {}", fmt_u(k))).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for CotensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CotensorElement({self})")
    }
}
