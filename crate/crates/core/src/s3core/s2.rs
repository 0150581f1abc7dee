//! Free polynomials in the generators `f0`, `f1`, `f1*` of `O(S^2_pq)` and
//! the embedding `ι: f0 -> bb*, f1 -> ba` into `O(S^3_pq)`.

use std::collections::BTreeMap;
use std::fmt;

use super::{AlgElement, Generator};
use crate::scalars::ParamScalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum S2Generator {
    F0,
    F1,
    F1Star,
}

impl S2Generator {
    pub fn star(self) -> Self {
        match self {
            S2Generator::F0 => S2Generator::F0,
            S2Generator::F1 => S2Generator::F1Star,
            S2Generator::F1Star => S2Generator::F1,
        }
    }

    /// Image under ι as a word in `a, a*, b, b*`.
    fn image(self) -> AlgElement {
        use Generator::*;
        let (x, y) = match self {
            S2Generator::F0 => (B, BStar),
            S2Generator::F1 => (B, A),
            S2Generator::F1Star => (AStar, BStar),
        };
        AlgElement::generator(x).mul(&AlgElement::generator(y))
    }
}

impl fmt::Display for S2Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            S2Generator::F0 => "f0",
            S2Generator::F1 => "f1",
            S2Generator::F1Star => "f1^*",
        })
    }
}

/// Element of the free *-algebra on `f0, f1` (no relations imposed).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct S2Poly {
    terms: BTreeMap<Vec<S2Generator>, ParamScalar>,
}

impl S2Poly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::scalar(ParamScalar::one())
    }

    pub fn scalar(c: ParamScalar) -> Self {
        Self::word(vec![], c)
    }

    pub fn generator(g: S2Generator) -> Self {
        Self::word(vec![g], ParamScalar::one())
    }

    pub fn word(w: Vec<S2Generator>, c: ParamScalar) -> Self {
        let mut out = Self::zero();
        out.add_term(w, c);
        out
    }

    fn add_term(&mut self, w: Vec<S2Generator>, c: ParamScalar) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(w).or_default();
        *entry = &*entry + &c;
        self.terms.retain(|_, v| !v.is_zero());
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &ParamScalar) -> Self {
        let mut out = Self::zero();
        for (w, v) in &self.terms {
            out.add_term(w.clone(), v * c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&ParamScalar::from_int(-1)))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                let w: Vec<S2Generator> = w1.iter().chain(w2.iter()).copied().collect();
                out.add_term(w, c1 * c2);
            }
        }
        out
    }

    pub fn star(&self) -> Self {
        let mut out = Self::zero();
        for (w, c) in &self.terms {
            out.add_term(w.iter().rev().map(|g| g.star()).collect(), c.clone());
        }
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<S2Generator>, &ParamScalar)> {
        self.terms.iter()
    }
}

/// The embedding `O(S^2_pq) -> O(S^3_pq)`; images are coinvariant.
pub fn iota(f: &S2Poly) -> AlgElement {
    let mut out = AlgElement::zero();
    for (w, c) in f.terms() {
        let img = w.iter().fold(AlgElement::scalar(c.clone()), |acc, g| acc.mul(&g.image()));
        out = out.add(&img);
    }
    out
}
