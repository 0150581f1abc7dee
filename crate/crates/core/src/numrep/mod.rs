//! Truncated Hilbert-space representations of `O(S^3_pq)` and the numeric
//! checks built on them.
//!
//! The two infinite families act on `l^2(N)`:
//!
//! ```text
//! ρ_1θ: a e_k = e^{iθ} e_k,             b e_k = sqrt(1 - p^{k+1}) e_{k+1}
//! ρ_2θ: a e_k = sqrt(1 - q^{k+1}) e_{k+1}, b e_k = e^{iθ} e_k
//! ```
//!
//! and are cut down to the first `N` basis vectors, with the top vector sent
//! to 0. A product of generators only moves a basis vector by the number of
//! shift letters in it, so every check is restricted to the columns
//! `k < N - D` that never reach the boundary.

mod classical;
mod op;
mod witness;

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::AlgebraError;
use crate::s3core::{is_coinvariant, AlgElement, BasisMonomial, Generator};

pub use classical::{classical_maps_check, f_map, g_map, ClassicalReport};
pub use op::WeightedShift;
pub use witness::{mvn_witness_check, polar_isometry_check, spectrum_check, MvnReport, PolarReport, SpectrumReport};

/// Which irreducible family, with its phases in radians.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum Family {
    Rho1Theta { theta: f64 },
    Rho2Theta { theta: f64 },
    Classical { theta1: f64, theta2: f64 },
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Rho1Theta { .. } => "rho1theta",
            Family::Rho2Theta { .. } => "rho2theta",
            Family::Classical { .. } => "classical",
        }
    }
}

#[derive(Clone, Debug)]
pub struct TruncatedRep {
    family: Family,
    n: usize,
    p: f64,
    q: f64,
    a: WeightedShift,
    b: WeightedShift,
    // 1 - aa* and 1 - bb*
    pa: WeightedShift,
    qb: WeightedShift,
}

fn shift_weights(n: usize, r: f64) -> Vec<f64> {
    (0..n).map(|k| if k + 1 < n { (1.0 - r.powi(k as i32 + 1)).sqrt() } else { 0.0 }).collect()
}

/// Build the truncated representation. `n` is ignored for the classical
/// points, which are one-dimensional.
pub fn build_rep(family: Family, n: usize, p: f64, q: f64) -> Result<TruncatedRep, AlgebraError> {
    if !(p > 0.0 && p < 1.0 && q > 0.0 && q < 1.0) {
        return Err(AlgebraError::InvalidRep(format!("p and q must lie in (0, 1), got p={p}, q={q}")));
    }
    let phase = |t: f64| Complex64::from_polar(1.0, t);
    let (n, a, b) = match family {
        Family::Rho1Theta { theta } | Family::Rho2Theta { theta } => {
            if n < 2 {
                return Err(AlgebraError::InvalidRep(format!("truncation size must be at least 2, got {n}")));
            }
            let diag = WeightedShift::diagonal(vec![phase(theta); n]);
            if matches!(family, Family::Rho1Theta { .. }) {
                (n, diag, WeightedShift::real_shift(shift_weights(n, p)))
            } else {
                (n, WeightedShift::real_shift(shift_weights(n, q)), diag)
            }
        }
        Family::Classical { theta1, theta2 } => {
            (1, WeightedShift::diagonal(vec![phase(theta1)]), WeightedShift::diagonal(vec![phase(theta2)]))
        }
    };
    let one = WeightedShift::identity(n);
    let pa = one.sub_same_shift(&a.compose(&a.adjoint()));
    let qb = one.sub_same_shift(&b.compose(&b.adjoint()));
    Ok(TruncatedRep { family, n, p, q, a, b, pa, qb })
}

impl TruncatedRep {
    pub fn family(&self) -> Family {
        self.family
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn params(&self) -> (f64, f64) {
        (self.p, self.q)
    }

    pub fn is_truncated(&self) -> bool {
        !matches!(self.family, Family::Classical { .. })
    }

    /// Number of leading columns on which operators that move basis vectors
    /// by at most `reach` agree with the untruncated ones.
    pub fn safe_cols(&self, reach: u64) -> usize {
        if self.is_truncated() {
            self.n.saturating_sub(reach as usize)
        } else {
            self.n
        }
    }

    pub fn generator_op(&self, g: Generator) -> WeightedShift {
        match g {
            Generator::A => self.a.clone(),
            Generator::AStar => self.a.adjoint(),
            Generator::B => self.b.clone(),
            Generator::BStar => self.b.adjoint(),
        }
    }

    pub fn matrix(&self, g: Generator) -> DMatrix<Complex64> {
        self.generator_op(g).to_dense()
    }

    /// Image of `a_mu (1-aa*)^m (1-bb*)^n b_nu`.
    pub fn monomial_op(&self, t: &BasisMonomial) -> WeightedShift {
        let letter = |pos: Generator, neg: Generator, e: i64| {
            let g = self.generator_op(if e >= 0 { pos } else { neg });
            g.pow(e.unsigned_abs() as u32)
        };
        let a = letter(Generator::A, Generator::AStar, t.mu);
        let b = letter(Generator::B, Generator::BStar, t.nu);
        a.compose(&self.pa.pow(t.m)).compose(&self.qb.pow(t.n)).compose(&b)
    }
}

/// Dense image of `x`.
pub fn evaluate(x: &AlgElement, rep: &TruncatedRep) -> Result<DMatrix<Complex64>, AlgebraError> {
    let mut out = DMatrix::zeros(rep.n, rep.n);
    for (t, c) in x.terms() {
        let c = c.eval(rep.p, rep.q)?;
        rep.monomial_op(t).add_to_dense(&mut out, Complex64::new(c, 0.0));
    }
    Ok(out)
}

/// Frobenius norm of the first `cols` columns; bounds the operator norm of
/// the restriction.
pub fn block_norm(m: &DMatrix<Complex64>, cols: usize) -> f64 {
    m.columns(0, cols.min(m.ncols())).norm()
}

/// Largest column norm over the first `cols` columns; a lower bound for the
/// operator norm.
pub fn max_column_norm(m: &DMatrix<Complex64>, cols: usize) -> f64 {
    (0..cols.min(m.ncols())).map(|k| m.column(k).norm()).fold(0.0, f64::max)
}

/// `evaluate(xy)` against `evaluate(x) evaluate(y)` on the columns untouched
/// by the boundary.
pub fn homomorphism_defect(x: &AlgElement, y: &AlgElement, rep: &TruncatedRep) -> Result<f64, AlgebraError> {
    let cols = rep.safe_cols(x.max_shift() + y.max_shift());
    let lhs = evaluate(&x.mul(y), rep)?;
    let rhs = evaluate(x, rep)? * evaluate(y, rep)?;
    Ok(block_norm(&(lhs - rhs), cols))
}

/// Residual of one defining relation on the first `N - 1` columns.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RelationDefect {
    pub relation: &'static str,
    pub defect: f64,
}

/// All defining relations of `O(S^3_pq)` evaluated in `rep`.
pub fn relation_defects(rep: &TruncatedRep) -> Vec<RelationDefect> {
    let (p, q) = (rep.p, rep.q);
    let g = |g| rep.generator_op(g);
    let (a, a_s, b, b_s) = (g(Generator::A), g(Generator::AStar), g(Generator::B), g(Generator::BStar));
    let id = WeightedShift::identity(rep.n);
    let cols = rep.safe_cols(1);
    // each relation is a difference of operators with a common shift
    let rels: [(&'static str, WeightedShift); 6] = [
        ("a* a - q a a* = 1 - q", a_s.compose(&a).sub_same_shift(&a.compose(&a_s).scale(q)).sub_same_shift(&id.scale(1.0 - q))),
        ("b* b - p b b* = 1 - p", b_s.compose(&b).sub_same_shift(&b.compose(&b_s).scale(p)).sub_same_shift(&id.scale(1.0 - p))),
        ("a b = b a", a.compose(&b).sub_same_shift(&b.compose(&a))),
        ("a b* = b* a", a.compose(&b_s).sub_same_shift(&b_s.compose(&a))),
        ("a* b = b a*", a_s.compose(&b).sub_same_shift(&b.compose(&a_s))),
        ("(1 - a a*)(1 - b b*) = 0", id.sub_same_shift(&a.compose(&a_s)).compose(&id.sub_same_shift(&b.compose(&b_s)))),
    ];
    rels.into_iter().map(|(relation, r)| RelationDefect { relation, defect: r.block_norm(cols) }).collect()
}

/// `Tr(ρ_20(x) - ρ_10(x))` at truncation `n`, with a bound on the neglected tail.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct NumericTrace {
    pub re: f64,
    pub im: f64,
    pub tail_bound: f64,
}

pub fn numeric_trace(x: &AlgElement, n: usize, p: f64, q: f64) -> Result<NumericTrace, AlgebraError> {
    if !is_coinvariant(x) {
        let w = x.terms().map(|(m, _)| m.winding()).find(|w| *w != 0).unwrap_or(0);
        return Err(AlgebraError::NotCoinvariant { winding: w });
    }
    let r1 = build_rep(Family::Rho1Theta { theta: 0.0 }, n, p, q)?;
    let r2 = build_rep(Family::Rho2Theta { theta: 0.0 }, n, p, q)?;
    let mut value = Complex64::new(0.0, 0.0);
    let mut weight = 0.0;
    for (t, c) in x.terms() {
        let c = c.eval(p, q)?;
        value += (r2.monomial_op(t).trace() - r1.monomial_op(t).trace()) * c;
        weight += c.abs();
    }
    // Each diagonal is a geometric sequence in p^k or q^k; the part beyond
    // index n is at most p^n/(1-p) + q^n/(1-q).
    let n = n as i32;
    let tail_bound = weight * (p.powi(n) / (1.0 - p) + q.powi(n) / (1.0 - q));
    Ok(NumericTrace { re: value.re, im: value.im, tail_bound })
}

/// `count` phases drawn uniformly from `[0, 2π)`.
pub fn sample_phases(seed: u64, count: usize) -> Vec<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| rng.random_range(0.0..std::f64::consts::TAU)).collect()
}

/// Outcome of searching for a representation that separates `x` from 0.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FaithfulnessReport {
    pub seed: u64,
    pub dim: usize,
    pub is_zero: bool,
    pub witness_found: bool,
    /// Family, phase and column norm of the first witness.
    pub witness: Option<(String, f64, f64)>,
}

impl FaithfulnessReport {
    /// A nonzero element has a witness and the zero element has none.
    pub fn consistent(&self) -> bool {
        self.is_zero != self.witness_found
    }
}

pub const WITNESS_THRESHOLD: f64 = 1e-8;

/// Evaluate `x` in `ρ_1θ` and `ρ_2θ` for `trials` seeded phases and report
/// the first image with a column of norm above [`WITNESS_THRESHOLD`].
pub fn faithfulness_probe(x: &AlgElement, n: usize, trials: usize, p: f64, q: f64, seed: u64) -> Result<FaithfulnessReport, AlgebraError> {
    let exponent = x.terms().map(|(t, _)| t.m.max(t.n) as usize).max().unwrap_or(0);
    let reach = x.max_shift() as usize;
    let dim = n.max(reach + exponent + 10).max(2);
    let mut report = FaithfulnessReport { seed, dim, is_zero: x.is_zero(), witness_found: false, witness: None };
    for theta in sample_phases(seed, trials.max(1)) {
        for family in [Family::Rho1Theta { theta }, Family::Rho2Theta { theta }] {
            let rep = build_rep(family, dim, p, q)?;
            let norm = max_column_norm(&evaluate(x, &rep)?, rep.safe_cols(reach as u64));
            if norm > WITNESS_THRESHOLD {
                report.witness_found = true;
                report.witness = Some((family.name().to_string(), theta, norm));
                return Ok(report);
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::ParamScalar;

    fn rho1(n: usize) -> TruncatedRep {
        build_rep(Family::Rho1Theta { theta: 0.0 }, n, 0.5, 0.3).unwrap()
    }

    #[test]
    fn b_in_rho1_n3() {
        let b = rho1(3).matrix(Generator::B);
        assert!((b[(1, 0)].re - 0.5f64.sqrt()).abs() < 1e-15);
        assert!((b[(2, 1)].re - 0.75f64.sqrt()).abs() < 1e-15);
        assert_eq!(b[(0, 2)], Complex64::new(0.0, 0.0));
    }

    #[test]
    fn adjoint_consistency() {
        let rep = build_rep(Family::Rho2Theta { theta: 0.7 }, 6, 0.5, 0.3).unwrap();
        assert_eq!(rep.matrix(Generator::AStar), rep.matrix(Generator::A).adjoint());
        assert_eq!(rep.matrix(Generator::BStar), rep.matrix(Generator::B).adjoint());
    }

    #[test]
    fn invalid_params() {
        assert!(build_rep(Family::Rho1Theta { theta: 0.0 }, 1, 0.5, 0.5).is_err());
        assert!(build_rep(Family::Rho1Theta { theta: 0.0 }, 5, 1.0, 0.5).is_err());
        assert!(build_rep(Family::Rho1Theta { theta: 0.0 }, 5, 0.5, 0.0).is_err());
    }

    #[test]
    fn classical_point_is_scalar() {
        let rep = build_rep(Family::Classical { theta1: 0.3, theta2: 1.1 }, 10, 0.5, 0.3).unwrap();
        assert_eq!(rep.dim(), 1);
        assert!((rep.matrix(Generator::A)[(0, 0)] - Complex64::from_polar(1.0, 0.3)).norm() < 1e-15);
    }

    #[test]
    fn bb_star_in_rho2_is_identity() {
        let rep = build_rep(Family::Rho2Theta { theta: 0.0 }, 8, 0.5, 0.3).unwrap();
        let bbs = evaluate(&AlgElement::b().mul(&AlgElement::b_star()), &rep).unwrap();
        assert!((bbs - DMatrix::identity(8, 8)).norm() < 1e-15);
    }

    #[test]
    fn q_atom_in_rho1_is_diag_p_k() {
        let n = 12;
        let x = evaluate(&AlgElement::q_atom(1), &rho1(n)).unwrap();
        for k in 0..n {
            assert!((x[(k, k)].re - 0.5f64.powi(k as i32)).abs() < 1e-15);
        }
        assert!(evaluate(&AlgElement::zero(), &rho1(n)).unwrap().iter().all(|z| z.norm() == 0.0));
    }

    #[test]
    fn relations_hold_on_safe_block() {
        for family in [Family::Rho1Theta { theta: 1.3 }, Family::Rho2Theta { theta: 2.1 }, Family::Classical { theta1: 0.4, theta2: 5.0 }] {
            let rep = build_rep(family, 20, 0.5, 0.3).unwrap();
            for r in relation_defects(&rep) {
                assert!(r.defect <= 1e-12, "{family:?} {r:?}");
            }
        }
    }

    #[test]
    fn sparse_relations_match_dense_products() {
        let rep = build_rep(Family::Rho2Theta { theta: 0.9 }, 16, 0.5, 0.3).unwrap();
        let m = |g| rep.matrix(g);
        let (a, a_s, b, b_s) = (m(Generator::A), m(Generator::AStar), m(Generator::B), m(Generator::BStar));
        let id = DMatrix::<Complex64>::identity(16, 16);
        let c = |x: f64| Complex64::new(x, 0.0);
        let dense = [
            &a_s * &a - (&a * &a_s) * c(0.3) - &id * c(0.7),
            &b_s * &b - (&b * &b_s) * c(0.5) - &id * c(0.5),
            &a * &b - &b * &a,
            &a * &b_s - &b_s * &a,
            &a_s * &b - &b * &a_s,
            (&id - &a * &a_s) * (&id - &b * &b_s),
        ];
        for (r, d) in relation_defects(&rep).iter().zip(&dense) {
            assert!((r.defect - block_norm(d, 15)).abs() < 1e-14, "{}", r.relation);
        }
    }

    #[test]
    fn trace_values() {
        let t = numeric_trace(&AlgElement::p_atom(1), 300, 0.5, 0.3).unwrap();
        assert!((t.re - 1.0 / 0.7).abs() < 1e-12);
        assert_eq!(numeric_trace(&AlgElement::one(), 50, 0.5, 0.3).unwrap().re, 0.0);
        assert!(numeric_trace(&AlgElement::a(), 50, 0.5, 0.3).is_err());
    }

    #[test]
    fn probe_on_zero_and_relation() {
        let rel = AlgElement::a_star().mul(&AlgElement::a()).sub(&AlgElement::one()).add(&AlgElement::p_atom(1).scale(&ParamScalar::q()));
        let r = faithfulness_probe(&rel, 10, 3, 0.5, 0.3, 1).unwrap();
        assert!(r.is_zero && !r.witness_found && r.consistent());
        let r = faithfulness_probe(&AlgElement::p_atom(2), 10, 3, 0.5, 0.3, 1).unwrap();
        assert!(r.witness_found && r.consistent());
    }
}
