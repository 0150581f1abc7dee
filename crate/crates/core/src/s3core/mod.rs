//! The *-algebra `O(S^3_pq)` in its normal-form basis.
//!
//! Generators `a`, `b` satisfy
//!
//! ```text
//! a*a - q aa* = 1 - q        b*b - p bb* = 1 - p
//! ab = ba,  a*b = ba*        (1 - aa*)(1 - bb*) = 0
//! ```
//!
//! Every element is a finite combination of `a_mu (1-aa*)^m (1-bb*)^n b_nu`
//! with `m n = 0`. The a-letters together with `P = 1-aa*` form a copy of the
//! quantum disc `O(D_q)`, the b-letters with `Q = 1-bb*` a copy of `O(D_p)`,
//! the two copies commute, and `PQ = 0`. Products are therefore computed as a
//! disc product in each half followed by discarding terms with `m, n >= 1`.

pub(crate) mod render;
mod rewrite;
mod s2;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::disc::{disc_monomial_mul, DiscMonomial};
use crate::scalars::{Param, ParamScalar};

pub use rewrite::{mul_by_generator, mul_via_generators, Side};
pub use s2::{iota, S2Generator, S2Poly};

/// Basis element `a_mu (1-aa*)^m (1-bb*)^n b_nu`.
///
/// The derived ordering is lexicographic in `(mu, m, n, nu)`, which is the
/// order terms are printed in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BasisMonomial {
    pub mu: i64,
    pub m: u32,
    pub n: u32,
    pub nu: i64,
}

impl BasisMonomial {
    pub const ONE: BasisMonomial = BasisMonomial { mu: 0, m: 0, n: 0, nu: 0 };

    /// Panics if both `m` and `n` are positive; such products vanish.
    pub fn new(mu: i64, m: u32, n: u32, nu: i64) -> Self {
        assert!(m == 0 || n == 0, "basis monomials need m*n = 0 (got m={m}, n={n})");
        BasisMonomial { mu, m, n, nu }
    }

    /// U(1)-weight: each `a` counts +1, `a*` -1, `b` -1, `b*` +1.
    pub fn winding(&self) -> i64 {
        self.mu - self.nu
    }

    /// Degree label `mu` of the homogeneous component `{x | Δ_R(x) = x ⊗ u^{-mu}}`.
    pub fn degree_label(&self) -> i64 {
        -self.winding()
    }

    /// Total number of letters (`P`, `Q` count twice).
    pub fn total_degree(&self) -> u64 {
        self.mu.unsigned_abs() + self.nu.unsigned_abs() + 2 * u64::from(self.m + self.n)
    }

    pub fn is_unit(&self) -> bool {
        *self == Self::ONE
    }

    pub(crate) fn a_part(&self) -> DiscMonomial {
        DiscMonomial::new(self.mu, self.m)
    }
}

/// A generator of `O(S^3_pq)` as a *-algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Generator {
    A,
    AStar,
    B,
    BStar,
}

impl Generator {
    pub const ALL: [Generator; 4] = [Generator::A, Generator::AStar, Generator::B, Generator::BStar];

    pub fn monomial(self) -> BasisMonomial {
        match self {
            Generator::A => BasisMonomial::new(1, 0, 0, 0),
            Generator::AStar => BasisMonomial::new(-1, 0, 0, 0),
            Generator::B => BasisMonomial::new(0, 0, 0, 1),
            Generator::BStar => BasisMonomial::new(0, 0, 0, -1),
        }
    }

    pub fn star(self) -> Generator {
        match self {
            Generator::A => Generator::AStar,
            Generator::AStar => Generator::A,
            Generator::B => Generator::BStar,
            Generator::BStar => Generator::B,
        }
    }

    pub fn is_a_letter(self) -> bool {
        matches!(self, Generator::A | Generator::AStar)
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Generator::A => "a",
            Generator::AStar => "a^*",
            Generator::B => "b",
            Generator::BStar => "b^*",
        })
    }
}

/// A word in `a, a*, b, b*` with an optional scalar prefactor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeWord {
    pub letters: Vec<Generator>,
    pub coeff: ParamScalar,
}

impl FreeWord {
    pub fn new(letters: Vec<Generator>) -> Self {
        FreeWord { letters, coeff: ParamScalar::one() }
    }

    pub fn with_coeff(mut self, c: ParamScalar) -> Self {
        self.coeff = c;
        self
    }
}

/// Element of `O(S^3_pq)`: a sparse map from basis monomials to scalars.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct AlgElement {
    terms: BTreeMap<BasisMonomial, ParamScalar>,
}

impl AlgElement {
    pub fn zero() -> Self {
        AlgElement::default()
    }

    pub fn one() -> Self {
        Self::monomial(BasisMonomial::ONE, ParamScalar::one())
    }

    pub fn scalar(c: ParamScalar) -> Self {
        Self::monomial(BasisMonomial::ONE, c)
    }

    pub fn monomial(m: BasisMonomial, c: ParamScalar) -> Self {
        let mut out = Self::zero();
        out.add_term(m, c);
        out
    }

    pub fn basis(m: BasisMonomial) -> Self {
        Self::monomial(m, ParamScalar::one())
    }

    pub fn generator(g: Generator) -> Self {
        Self::basis(g.monomial())
    }

    pub fn a() -> Self {
        Self::generator(Generator::A)
    }

    pub fn a_star() -> Self {
        Self::generator(Generator::AStar)
    }

    pub fn b() -> Self {
        Self::generator(Generator::B)
    }

    pub fn b_star() -> Self {
        Self::generator(Generator::BStar)
    }

    /// `(1 - aa*)^m` as a basis element.
    pub fn p_atom(m: u32) -> Self {
        Self::basis(BasisMonomial::new(0, m, 0, 0))
    }

    /// `(1 - bb*)^n` as a basis element.
    pub fn q_atom(n: u32) -> Self {
        Self::basis(BasisMonomial::new(0, 0, n, 0))
    }

    pub fn from_terms<I: IntoIterator<Item = (BasisMonomial, ParamScalar)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (m, c) in iter {
            out.add_term(m, c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BasisMonomial, &ParamScalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &BasisMonomial) -> ParamScalar {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Coefficient of the unit, if the element is a scalar multiple of 1.
    pub fn as_scalar(&self) -> Option<ParamScalar> {
        match self.terms.len() {
            0 => Some(ParamScalar::zero()),
            1 => self.terms.get(&BasisMonomial::ONE).cloned(),
            _ => None,
        }
    }

    pub fn add_term(&mut self, m: BasisMonomial, c: ParamScalar) {
        debug_assert!(m.m == 0 || m.n == 0);
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

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, -c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        AlgElement { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }

    pub fn scale(&self, c: &ParamScalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        AlgElement { terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        mul(self, other)
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| acc.mul(self))
    }

    pub fn star(&self) -> Self {
        star(self)
    }

    /// Largest `|mu| + |nu|` over the terms: how far a monomial can move a basis vector.
    pub fn max_shift(&self) -> u64 {
        self.terms.keys().map(|m| m.mu.unsigned_abs() + m.nu.unsigned_abs()).max().unwrap_or(0)
    }

    pub fn max_total_degree(&self) -> u64 {
        self.terms.keys().map(BasisMonomial::total_degree).max().unwrap_or(0)
    }
}

/// Product of two basis monomials.
pub fn monomial_mul(x: &BasisMonomial, y: &BasisMonomial) -> Vec<(BasisMonomial, ParamScalar)> {
    let a_terms = disc_monomial_mul(Param::Q, x.a_part(), y.a_part());

    // The b-half is stored as Q^n b_nu; the disc product wants b_nu Q^n.
    // Q^n b_nu = p^{n nu} b_nu Q^n.
    let to_right = |n: u32, nu: i64| ParamScalar::p_pow(i64::from(n) * nu);
    let pre = to_right(x.n, x.nu) * to_right(y.n, y.nu);
    let b_terms: Vec<(u32, i64, ParamScalar)> = disc_monomial_mul(Param::P, DiscMonomial::new(x.nu, x.n), DiscMonomial::new(y.nu, y.n))
        .into_iter()
        .map(|(d, c)| {
            let back = ParamScalar::p_pow(-i64::from(d.m) * d.mu);
            (d.m, d.mu, &(&pre * &c) * &back)
        })
        .collect();

    let mut out = Vec::new();
    for (da, ca) in &a_terms {
        for (n, nu, cb) in &b_terms {
            if da.m > 0 && *n > 0 {
                continue;
            }
            out.push((BasisMonomial::new(da.mu, da.m, *n, *nu), ca * cb));
        }
    }
    out
}

/// Canonical product in `O(S^3_pq)`.
pub fn mul(x: &AlgElement, y: &AlgElement) -> AlgElement {
    let mut out = AlgElement::zero();
    for (mx, cx) in &x.terms {
        for (my, cy) in &y.terms {
            let c = cx * cy;
            for (m, k) in monomial_mul(mx, my) {
                out.add_term(m, &c * &k);
            }
        }
    }
    out
}

/// The involution `a -> a*`, `b -> b*`; coefficients are fixed.
pub fn star(x: &AlgElement) -> AlgElement {
    // (a_mu P^m Q^n b_nu)* = b_{-nu} Q^n P^m a_{-mu}
    //                      = q^{-m mu} p^{n nu} a_{-mu} P^m Q^n b_{-nu}
    let mut out = AlgElement::zero();
    for (m, c) in &x.terms {
        let k = ParamScalar::q_pow(-i64::from(m.m) * m.mu) * ParamScalar::p_pow(i64::from(m.n) * m.nu);
        out.add_term(BasisMonomial::new(-m.mu, m.m, m.n, -m.nu), &k * c);
    }
    out
}

/// Normal form of a word: move a-letters left of b-letters, then reduce each
/// half by the disc rules.
pub fn normalize_word(w: &FreeWord) -> AlgElement {
    let (a_letters, b_letters): (Vec<Generator>, Vec<Generator>) = w.letters.iter().partition(|g| g.is_a_letter());
    let mut acc = AlgElement::scalar(w.coeff.clone());
    for g in a_letters.into_iter().chain(b_letters) {
        acc = mul_by_generator(&acc, g, Side::Right);
    }
    acc
}

/// Split an element by winding `mu - nu`. The degree label of the
/// homogeneous component `{x | Δ_R(x) = x ⊗ u^{-d}}` is `d = -winding`.
pub fn winding_decompose(x: &AlgElement) -> BTreeMap<i64, AlgElement> {
    let mut out: BTreeMap<i64, AlgElement> = BTreeMap::new();
    for (m, c) in &x.terms {
        out.entry(m.winding()).or_default().add_term(*m, c.clone());
    }
    out
}

/// True iff every monomial has winding 0.
pub fn is_coinvariant(x: &AlgElement) -> bool {
    x.terms.keys().all(|m| m.winding() == 0)
}

impl fmt::Display for BasisMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letters = |name: &str, k: i64| -> Option<String> {
            match k {
                0 => None,
                1 => Some(name.to_string()),
                -1 => Some(format!("{name}^*")),
                k if k > 0 => Some(format!("{name}^{k}")),
                k => Some(format!("{name}^*^{}", -k)),
            }
        };
        let atom = |name: &str, k: u32| -> Option<String> {
            match k {
                0 => None,
                1 => Some(format!("(1 - {name} {name}^*)")),
                k => Some(format!("(1 - {name} {name}^*)^{k}")),
            }
        };
        let parts: Vec<String> =
            [letters("a", self.mu), atom("a", self.m), atom("b", self.n), letters("b", self.nu)].into_iter().flatten().collect();
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join(" "))
        }
    }
}

impl fmt::Display for AlgElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        render::write_terms(f, self.terms.iter().map(|(m, c)| (m.to_string(), c)))
    }
}

impl fmt::Debug for AlgElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlgElement({self})")
    }
}

pub use render::TermRecord;

impl AlgElement {
    /// JSON-ready term list: `{mu, m, n, nu, coeff}` sorted by `(mu, m, n, nu)`.
    pub fn to_records(&self) -> Vec<TermRecord> {
        self.terms.iter().map(|(m, c)| TermRecord { mu: m.mu, m: m.m, n: m.n, nu: m.nu, coeff: c.to_string() }).collect()
    }

    pub fn from_records(records: &[TermRecord]) -> Result<Self, crate::ParseError> {
        let mut out = Self::zero();
        for r in records {
            if r.m > 0 && r.n > 0 {
                return Err(crate::ParseError { position: 0, message: "term with m*n != 0".into() });
            }
            out.add_term(BasisMonomial::new(r.mu, r.m, r.n, r.nu), r.coeff.parse()?);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: i64) -> ParamScalar {
        ParamScalar::from_int(v)
    }

    #[test]
    fn a_star_a() {
        let x = AlgElement::a_star().mul(&AlgElement::a());
        let expect = AlgElement::from_terms([(BasisMonomial::ONE, s(1)), (BasisMonomial::new(0, 1, 0, 0), -ParamScalar::q())]);
        assert_eq!(x, expect);
    }

    #[test]
    fn defining_relations_vanish() {
        let (a, ast, b, bst) = (AlgElement::a(), AlgElement::a_star(), AlgElement::b(), AlgElement::b_star());
        let one = AlgElement::one();
        let r1 = ast.mul(&a).sub(&a.mul(&ast).scale(&ParamScalar::q())).sub(&one.scale(&(s(1) - ParamScalar::q())));
        let r2 = bst.mul(&b).sub(&b.mul(&bst).scale(&ParamScalar::p())).sub(&one.scale(&(s(1) - ParamScalar::p())));
        let r3 = a.mul(&b).sub(&b.mul(&a));
        let r3s = ast.mul(&b).sub(&b.mul(&ast));
        let r4 = one.sub(&a.mul(&ast)).mul(&one.sub(&b.mul(&bst)));
        for r in [r1, r2, r3, r3s, r4] {
            assert!(r.is_zero(), "{r}");
        }
    }

    #[test]
    fn p_atom_absorbs_bb_star() {
        // (1-aa*) b b* = (1-aa*)(1 - (1-bb*)) = (1-aa*)
        let x = AlgElement::p_atom(1).mul(&AlgElement::b()).mul(&AlgElement::b_star());
        assert_eq!(x, AlgElement::p_atom(1));
    }

    #[test]
    fn normalize_words() {
        use Generator::*;
        let w = normalize_word(&FreeWord::new(vec![AStar, A]));
        assert_eq!(w, AlgElement::one().sub(&AlgElement::p_atom(1).scale(&ParamScalar::q())));
        let w = normalize_word(&FreeWord::new(vec![A, AStar]));
        assert_eq!(w, AlgElement::one().sub(&AlgElement::p_atom(1)));
        let w = normalize_word(&FreeWord::new(vec![B, BStar, A, AStar]));
        let expect = AlgElement::one().sub(&AlgElement::p_atom(1)).sub(&AlgElement::q_atom(1));
        assert_eq!(w, expect);
        assert_eq!(normalize_word(&FreeWord::new(vec![])), AlgElement::one());
    }

    #[test]
    fn windings() {
        let d = winding_decompose(&AlgElement::a());
        assert_eq!(d.keys().copied().collect::<Vec<_>>(), vec![1]);
        let d = winding_decompose(&AlgElement::b());
        assert_eq!(d.keys().copied().collect::<Vec<_>>(), vec![-1]);
        let ab = AlgElement::a().mul(&AlgElement::b());
        assert_eq!(winding_decompose(&ab).keys().copied().collect::<Vec<_>>(), vec![0]);
        assert!(is_coinvariant(&ab.add(&AlgElement::b().mul(&AlgElement::b_star()))));
        assert!(!is_coinvariant(&AlgElement::a()));
        assert_eq!(BasisMonomial::new(1, 0, 0, 0).degree_label(), -1);
    }

    #[test]
    fn star_of_generators() {
        assert_eq!(AlgElement::a().star(), AlgElement::a_star());
        let x = AlgElement::p_atom(2).mul(&AlgElement::a());
        assert_eq!(x.star().star(), x);
    }

    #[test]
    fn rendering() {
        let x = normalize_word(&FreeWord::new(vec![Generator::AStar, Generator::A]));
        assert_eq!(x.to_string(), "1 - q*(1 - a a^*)");
        let m = BasisMonomial::new(-2, 0, 3, 1);
        assert_eq!(m.to_string(), "a^*^2 (1 - b b^*)^3 b");
        assert_eq!(AlgElement::zero().to_string(), "0");
    }

    #[test]
    #[should_panic]
    fn rejects_mixed_atoms() {
        let _ = BasisMonomial::new(0, 1, 1, 0);
    }
}
