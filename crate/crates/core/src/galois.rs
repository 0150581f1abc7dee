//! Strong connection on the `O(U(1))`-extension `O(S^2_pq) ⊂ O(S^3_pq)`.
//!
//! `ℓ(u^k) ∈ O(S^3_pq) ⊗ O(S^3_pq)` is seeded by
//!
//! ```text
//! ℓ(1)  = 1 ⊗ 1
//! ℓ(u)  = a* ⊗ a + q b(1-aa*) ⊗ b*
//! ℓ(u*) = b* ⊗ b + p a(1-bb*) ⊗ a*
//! ```
//!
//! and extended by `ℓ(u^k) = u^[1] ℓ(u^{k-1}) u^[2]`. All identities are
//! checked on the plain tensor product through the lifted canonical map
//! `(m ⊗ id)(id ⊗ Δ_R)`; the balanced tensor product over the base is never
//! formed.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::hopf::{coaction, CotensorElement};
use crate::s3core::{monomial_mul, AlgElement, BasisMonomial};
use crate::scalars::{qbinomial_in, Param, ParamScalar};

/// Element of `O(S^3_pq) ⊗ O(S^3_pq)`.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct TensorElement {
    terms: BTreeMap<(BasisMonomial, BasisMonomial), ParamScalar>,
}

impl TensorElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::simple(&AlgElement::one(), &AlgElement::one())
    }

    /// `x ⊗ y`.
    pub fn simple(x: &AlgElement, y: &AlgElement) -> Self {
        let mut out = Self::zero();
        for (mx, cx) in x.terms() {
            for (my, cy) in y.terms() {
                out.add_term(*mx, *my, cx * cy);
            }
        }
        out
    }

    pub fn add_term(&mut self, l: BasisMonomial, r: BasisMonomial, c: ParamScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&(l, r)) {
            Some(v) => {
                *v = &*v + &c;
                if v.is_zero() {
                    self.terms.remove(&(l, r));
                }
            }
            None => {
                self.terms.insert((l, r), c);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(BasisMonomial, BasisMonomial), &ParamScalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for ((l, r), c) in &other.terms {
            out.add_term(*l, *r, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for ((l, r), c) in &other.terms {
            out.add_term(*l, *r, -c);
        }
        out
    }

    pub fn scale(&self, c: &ParamScalar) -> Self {
        let mut out = Self::zero();
        for ((l, r), v) in &self.terms {
            out.add_term(*l, *r, v * c);
        }
        out
    }

    /// `sum_i (x_i s) ⊗ (t y_i)` for `outer = sum_i x_i ⊗ y_i` and `self = s ⊗ t`.
    pub fn sandwich(&self, outer: &TensorElement) -> TensorElement {
        let mut out = Self::zero();
        for ((ol, or), oc) in &outer.terms {
            for ((l, r), c) in &self.terms {
                let c = oc * c;
                for (nl, kl) in monomial_mul(ol, l) {
                    let ck = &c * &kl;
                    for (nr, kr) in monomial_mul(r, or) {
                        out.add_term(nl, nr, &ck * &kr);
                    }
                }
            }
        }
        out
    }

    /// Multiply the two legs: `m(s ⊗ t) = s t`.
    pub fn multiply_legs(&self) -> AlgElement {
        let mut out = AlgElement::zero();
        for ((l, r), c) in &self.terms {
            for (m, k) in monomial_mul(l, r) {
                out.add_term(m, c * &k);
            }
        }
        out
    }

    /// Distinct left legs, in basis order.
    pub fn left_legs(&self) -> Vec<BasisMonomial> {
        let mut v: Vec<_> = self.terms.keys().map(|(l, _)| *l).collect();
        v.dedup();
        v
    }

    pub fn to_records(&self) -> Vec<TensorRecord> {
        self.terms.iter().map(|((l, r), c)| TensorRecord { left: *l, right: *r, coeff: c.to_string() }).collect()
    }
}

/// JSON form of one tensor term.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TensorRecord {
    pub left: BasisMonomial,
    pub right: BasisMonomial,
    pub coeff: String,
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        crate::s3core::render::write_terms(f, self.terms.iter().map(|((l, r), c)| (format!("{l} ⊗ {r}"), c)))
    }
}

impl fmt::Debug for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TensorElement({self})")
    }
}

/// `(m ⊗ id)(id ⊗ Δ_R)`: `s ⊗ t -> s t ⊗ u^{winding(t)}`.
pub fn lifted_can(t: &TensorElement) -> CotensorElement {
    let mut out = CotensorElement::zero();
    for ((l, r), c) in t.terms() {
        for (m, k) in monomial_mul(l, r) {
            out.add_term(m, r.winding(), c * &k);
        }
    }
    out
}

/// `ℓ(u) = a* ⊗ a + q b(1-aa*) ⊗ b*`.
pub fn seed_positive() -> TensorElement {
    TensorElement::simple(&AlgElement::a_star(), &AlgElement::a())
        .add(&TensorElement::simple(&AlgElement::p_atom(1).mul(&AlgElement::b()), &AlgElement::b_star()).scale(&ParamScalar::q()))
}

/// `ℓ(u*) = b* ⊗ b + p a(1-bb*) ⊗ a*`.
pub fn seed_negative() -> TensorElement {
    TensorElement::simple(&AlgElement::b_star(), &AlgElement::b())
        .add(&TensorElement::simple(&AlgElement::a().mul(&AlgElement::q_atom(1)), &AlgElement::a_star()).scale(&ParamScalar::p()))
}

/// `ℓ(u^k)` by the recursion `ℓ(u^k) = u^[1] ℓ(u^{k-1}) u^[2]`
/// (and its `u*` counterpart for `k < 0`).
pub fn strong_connection(k: i64) -> TensorElement {
    let seed = if k >= 0 { seed_positive() } else { seed_negative() };
    (0..k.unsigned_abs()).fold(TensorElement::one(), |acc, _| acc.sandwich(&seed))
}

/// Closed form of `ℓ(u^{±n})` with Gauss binomial coefficients:
///
/// ```text
/// ℓ(u^n) = sum_k [n,k]_q q^{n-k} (1-aa*)^{n-k} a*^k b^{n-k} ⊗ a^k b*^{n-k}
/// ```
///
/// and for `u*^n` the same with `a <-> b`, `q <-> p`.
pub fn strong_connection_closed(n: u32, positive: bool) -> TensorElement {
    let mut out = TensorElement::zero();
    for (left, right) in closed_form_legs(n, positive) {
        out = out.add(&TensorElement::simple(&left, &right));
    }
    out
}

/// The pairs `(left leg, right leg)` of the closed form, indexed by `k = 0..=n`.
pub fn closed_form_legs(n: u32, positive: bool) -> Vec<(AlgElement, AlgElement)> {
    let (param, x, x_star, y, y_star, atom): (Param, _, _, _, _, fn(u32) -> AlgElement) = if positive {
        (Param::Q, AlgElement::a(), AlgElement::a_star(), AlgElement::b(), AlgElement::b_star(), AlgElement::p_atom)
    } else {
        (Param::P, AlgElement::b(), AlgElement::b_star(), AlgElement::a(), AlgElement::a_star(), AlgElement::q_atom)
    };
    (0..=n)
        .map(|k| {
            let coeff = qbinomial_in(param, n, k).expect("k <= n") * param.pow(i64::from(n - k));
            let left = atom(n - k).mul(&x_star.pow(k)).mul(&y.pow(n - k)).scale(&coeff);
            let right = x.pow(k).mul(&y_star.pow(n - k));
            (left, right)
        })
        .collect()
}

/// `sum_k (closed-form left leg)(closed-form right leg)`; equals 1.
pub fn partition_identity(n: u32, positive: bool) -> AlgElement {
    closed_form_legs(n, positive).into_iter().fold(AlgElement::zero(), |acc, (l, r)| acc.add(&l.mul(&r)))
}

/// Combine preimages: if `can(h) = 1 ⊗ x` and `can(g) = 1 ⊗ y` then
/// `sum g_j h_i ⊗ h~_i g~_j` maps to `1 ⊗ xy`.
pub fn compose_witnesses(h: &TensorElement, g: &TensorElement) -> TensorElement {
    h.sandwich(g)
}

/// A preimage of `1 ⊗ u^k` under the lifted canonical map, built from the
/// two generator witnesses.
pub fn galois_witness(k: i64) -> TensorElement {
    let unit = if k >= 0 { seed_positive() } else { seed_negative() };
    (0..k.unsigned_abs()).fold(TensorElement::one(), |acc, _| compose_witnesses(&acc, &unit))
}

/// One identity checked for one power of `u`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConnectionCheck {
    pub k: i64,
    pub identity: &'static str,
    pub passed: bool,
    /// Rendered nonzero difference when the identity fails.
    pub defect: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ConnectionReport {
    pub checks: Vec<ConnectionCheck>,
}

impl ConnectionReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &ConnectionCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

type Triple = BTreeMap<(i64, BasisMonomial, BasisMonomial), ParamScalar>;

fn add_triple(map: &mut Triple, key: (i64, BasisMonomial, BasisMonomial), c: ParamScalar) {
    let e = map.entry(key).or_default();
    *e = &*e + &c;
    if e.is_zero() {
        map.remove(&key);
    }
}

/// `(id ⊗ Δ_R)(ℓ)` versus `ℓ ⊗ u^k`, keyed by `(u-power, left, right)`.
pub fn right_colinearity_sides(l: &TensorElement, k: i64) -> (Triple, Triple) {
    let mut lhs = Triple::new();
    let mut rhs = Triple::new();
    for ((s, t), c) in l.terms() {
        for ((t2, j), v) in coaction(&AlgElement::basis(*t)).terms() {
            add_triple(&mut lhs, (*j, *s, *t2), c * v);
        }
        add_triple(&mut rhs, (k, *s, *t), c.clone());
    }
    (lhs, rhs)
}

/// `Δ_L^⊗(ℓ) = ((S^{-1} ⊗ id) flip Δ_R ⊗ id)(ℓ)` versus `u^k ⊗ ℓ`.
/// For `O(U(1))` the inverse antipode coincides with the antipode.
pub fn left_colinearity_sides(l: &TensorElement, k: i64) -> (Triple, Triple) {
    let mut lhs = Triple::new();
    let mut rhs = Triple::new();
    for ((s, t), c) in l.terms() {
        for ((s2, j), v) in coaction(&AlgElement::basis(*s)).terms() {
            let inv_antipode = crate::hopf::LaurentElement::u_pow(*j).antipode();
            for (jj, w) in inv_antipode.terms() {
                add_triple(&mut lhs, (*jj, *s2, *t), &(c * v) * w);
            }
        }
        add_triple(&mut rhs, (k, *s, *t), c.clone());
    }
    (lhs, rhs)
}

fn check(k: i64, identity: &'static str, ok: bool, defect: impl FnOnce() -> String) -> ConnectionCheck {
    ConnectionCheck { k, identity, passed: ok, defect: if ok { None } else { Some(defect()) } }
}

/// All connection identities for one `k`.
pub fn connection_checks_for(k: i64) -> Vec<ConnectionCheck> {
    let l = strong_connection(k);
    let mut out = Vec::new();

    let target = CotensorElement::simple(&AlgElement::one(), k);
    let got = lifted_can(&l);
    out.push(check(k, "lifted_can(l(u^k)) = 1 (x) u^k", got == target, || got.sub(&target).to_string()));

    let (lhs, rhs) = right_colinearity_sides(&l, k);
    out.push(check(k, "right colinearity", lhs == rhs, || format!("{} mismatched terms", lhs.len().abs_diff(rhs.len()).max(1))));

    let (lhs, rhs) = left_colinearity_sides(&l, k);
    out.push(check(k, "left colinearity", lhs == rhs, || format!("{} mismatched terms", lhs.len().abs_diff(rhs.len()).max(1))));

    let m = l.multiply_legs();
    out.push(check(k, "m(l(u^k)) = 1", m == AlgElement::one(), || m.sub(&AlgElement::one()).to_string()));

    if k != 0 {
        let closed = strong_connection_closed(k.unsigned_abs() as u32, k > 0);
        out.push(check(k, "recursion = closed form", closed == l, || closed.sub(&l).to_string()));
    }
    out
}

/// Verify unitality, the lifted Galois identity, both colinearities and the
/// counit law for every `|k| <= k_max`.
pub fn check_connection_properties(k_max: u32) -> ConnectionReport {
    let k_max = i64::from(k_max);
    let checks = (-k_max..=k_max).flat_map(connection_checks_for).collect();
    ConnectionReport { checks }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeds() {
        assert_eq!(strong_connection(0), TensorElement::one());
        assert_eq!(strong_connection(1), seed_positive());
        assert_eq!(strong_connection(-1), seed_negative());
        assert_eq!(strong_connection_closed(1, true), seed_positive());
        assert_eq!(strong_connection_closed(1, false), seed_negative());
    }

    #[test]
    fn generator_witnesses_hit_u_and_u_star() {
        assert_eq!(lifted_can(&seed_positive()), CotensorElement::simple(&AlgElement::one(), 1));
        assert_eq!(lifted_can(&seed_negative()), CotensorElement::simple(&AlgElement::one(), -1));
        assert_eq!(lifted_can(&TensorElement::one()), CotensorElement::simple(&AlgElement::one(), 0));
    }

    #[test]
    fn closed_form_n2_by_hand() {
        // a*^2 ⊗ a^2 + (1+q) q (1-aa*) a* b ⊗ a b* + q^2 (1-aa*)^2 b^2 ⊗ b*^2
        let q = ParamScalar::q();
        let p_atom = AlgElement::p_atom;
        let t0 = TensorElement::simple(&AlgElement::a_star().pow(2), &AlgElement::a().pow(2));
        let t1 =
            TensorElement::simple(&p_atom(1).mul(&AlgElement::a_star()).mul(&AlgElement::b()), &AlgElement::a().mul(&AlgElement::b_star()))
                .scale(&(&(ParamScalar::one() + q.clone()) * &q));
        let t2 = TensorElement::simple(&p_atom(2).mul(&AlgElement::b().pow(2)), &AlgElement::b_star().pow(2)).scale(&(&q * &q));
        let expect = t0.add(&t1).add(&t2);
        assert_eq!(strong_connection_closed(2, true), expect);
        assert_eq!(strong_connection(2), expect);
    }

    #[test]
    fn partition_identity_k1() {
        // a*a + q b(1-aa*) b* = 1
        let x = AlgElement::a_star()
            .mul(&AlgElement::a())
            .add(&AlgElement::b().mul(&AlgElement::p_atom(1)).mul(&AlgElement::b_star()).scale(&ParamScalar::q()));
        assert_eq!(x, AlgElement::one());
    }

    #[test]
    fn k0_passes() {
        assert!(connection_checks_for(0).iter().all(|c| c.passed));
    }

    #[test]
    fn small_range_passes() {
        let report = check_connection_properties(3);
        assert!(report.passed(), "{:?}", report.failures().collect::<Vec<_>>());
    }

    #[test]
    fn wrong_connection_is_caught() {
        let bad = seed_positive().add(&TensorElement::simple(&AlgElement::a(), &AlgElement::a()));
        let (l, r) = right_colinearity_sides(&bad, 1);
        assert_eq!(l, r);
        let (l, r) = left_colinearity_sides(&bad, 1);
        assert_ne!(l, r);
        let bad_right = seed_positive().add(&TensorElement::simple(&AlgElement::a_star(), &AlgElement::b()));
        let (l, r) = right_colinearity_sides(&bad_right, 1);
        assert_ne!(l, r);
        assert_ne!(lifted_can(&bad), CotensorElement::simple(&AlgElement::one(), 1));
    }

    #[test]
    fn witnesses_match_connection() {
        for k in -4..=4 {
            let w = galois_witness(k);
            assert_eq!(lifted_can(&w), CotensorElement::simple(&AlgElement::one(), k));
            assert_eq!(w, strong_connection(k));
        }
    }
}
