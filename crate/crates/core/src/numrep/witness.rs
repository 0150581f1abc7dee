//! Finite operator witnesses: spectra of `1-aa*`, `1-bb*`, the polar parts
//! of `a` and `b`, and the Murray-von Neumann equivalence `1⊗p ~ (1-p)⊗p`.

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;
use serde::Serialize;

use super::{evaluate, Family, TruncatedRep};
use crate::error::AlgebraError;
use crate::s3core::{AlgElement, Generator};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpectrumReport {
    pub family: &'static str,
    pub dim: usize,
    /// Largest `|λ_k - r^k|` after sorting both lists in decreasing order.
    pub max_error: f64,
    /// Smallest gap between consecutive computed eigenvalues.
    pub min_gap: f64,
    pub pass: bool,
}

pub const SPECTRUM_TOL: f64 = 1e-10;

/// Eigenvalues of `1-bb*` in `ρ_1θ` (or of `1-aa*` in `ρ_2θ`) against
/// `{r^k : 0 <= k < N}`.
pub fn spectrum_check(rep: &TruncatedRep) -> Result<SpectrumReport, AlgebraError> {
    let (p, q) = rep.params();
    let (x, r) = match rep.family() {
        Family::Rho1Theta { .. } => (AlgElement::q_atom(1), p),
        Family::Rho2Theta { .. } => (AlgElement::p_atom(1), q),
        Family::Classical { .. } => return Err(AlgebraError::InvalidRep("spectrum check needs a weighted-shift family".into())),
    };
    let m = evaluate(&x, rep)?;
    let mut eig: Vec<f64> = SymmetricEigen::new(m).eigenvalues.iter().copied().collect();
    eig.sort_by(|x, y| y.total_cmp(x));
    let max_error = eig.iter().enumerate().map(|(k, l)| (l - r.powi(k as i32)).abs()).fold(0.0, f64::max);
    let min_gap = eig.windows(2).map(|w| w[0] - w[1]).fold(f64::INFINITY, f64::min);
    Ok(SpectrumReport { family: rep.family().name(), dim: rep.dim(), max_error, min_gap, pass: max_error <= SPECTRUM_TOL })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PolarReport {
    pub family: &'static str,
    pub generator: &'static str,
    pub dim: usize,
    pub min_eigenvalue: f64,
    /// `1 - q` for `a`, `1 - p` for `b`.
    pub lower_bound: f64,
    pub isometry_defect: f64,
    pub pass: bool,
}

pub const POLAR_TOL: f64 = 1e-10;

/// `x*x >= 1 - r` and `V = x |x|^{-1}` is an isometry, for `x = a` or `b`,
/// restricted to the columns below the truncation boundary.
pub fn polar_isometry_check(rep: &TruncatedRep, which: Generator) -> Result<PolarReport, AlgebraError> {
    let (p, q) = rep.params();
    let (x, lower_bound, name) = match which {
        Generator::A | Generator::AStar => (rep.matrix(Generator::A), 1.0 - q, "a"),
        Generator::B | Generator::BStar => (rep.matrix(Generator::B), 1.0 - p, "b"),
    };
    let cols = rep.safe_cols(1);
    let xc = x.columns(0, cols).into_owned();
    let gram = xc.adjoint() * &xc;
    let eig = SymmetricEigen::new(gram);
    let min_eigenvalue = eig.eigenvalues.iter().copied().fold(f64::INFINITY, f64::min);
    if min_eigenvalue <= 0.0 {
        return Err(AlgebraError::InvalidRep(format!("{name}*{name} is singular on the safe block")));
    }
    let inv_sqrt = DMatrix::from_diagonal(&eig.eigenvalues.map(|l| Complex64::new(l.sqrt().recip(), 0.0)));
    let abs_inv = &eig.eigenvectors * inv_sqrt * eig.eigenvectors.adjoint();
    let v = xc * abs_inv;
    let isometry_defect = (v.adjoint() * &v - DMatrix::identity(cols, cols)).norm();
    Ok(PolarReport {
        family: rep.family().name(),
        generator: name,
        dim: rep.dim(),
        min_eigenvalue,
        lower_bound,
        isometry_defect,
        pass: min_eigenvalue >= lower_bound - POLAR_TOL && isometry_defect <= POLAR_TOL,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MvnReport {
    pub dim: usize,
    /// `max |(s⊗p)(s⊗p)* - (1-p)⊗p|`.
    pub range_defect: f64,
    /// `max |(s⊗p)*(s⊗p) - 1⊗p|`.
    pub source_defect: f64,
    pub partial_isometry_defect: f64,
    pub rank_p: usize,
    pub pass: bool,
}

pub const MVN_TOL: f64 = 1e-12;

fn max_abs_on_cols(m: &DMatrix<f64>, keep: impl Fn(usize) -> bool) -> f64 {
    (0..m.ncols()).filter(|&c| keep(c)).flat_map(|c| m.column(c).iter().map(|x| x.abs()).collect::<Vec<_>>()).fold(0.0, f64::max)
}

/// Truncated unilateral shift `s` on `C^n`, `p = 1 - ss*`, and the partial
/// isometry `s⊗p` on `C^n ⊗ C^n`. Columns whose shift index is `n - 1` are
/// excluded.
pub fn mvn_witness_check(n: usize) -> Result<MvnReport, AlgebraError> {
    if n < 2 {
        return Err(AlgebraError::InvalidRep(format!("truncation size must be at least 2, got {n}")));
    }
    let s = DMatrix::<f64>::from_fn(n, n, |i, j| if i == j + 1 { 1.0 } else { 0.0 });
    let id = DMatrix::<f64>::identity(n, n);
    let proj = &id - &s * s.transpose();
    let w = s.kronecker(&proj);
    let safe = |col: usize| col / n < n - 1;
    let range_defect = max_abs_on_cols(&(&w * w.transpose() - (&id - &proj).kronecker(&proj)), safe);
    let source_defect = max_abs_on_cols(&(w.transpose() * &w - id.kronecker(&proj)), safe);
    let partial_isometry_defect = max_abs_on_cols(&(&w * w.transpose() * &w - &w), |_| true);
    let rank_p = proj.rank(1e-12);
    let pass = range_defect <= MVN_TOL && source_defect <= MVN_TOL && partial_isometry_defect <= MVN_TOL && rank_p == 1;
    Ok(MvnReport { dim: n, range_defect, source_defect, partial_isometry_defect, rank_p, pass })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numrep::build_rep;

    #[test]
    fn spectra() {
        for n in [2, 10, 50] {
            let rep = build_rep(Family::Rho1Theta { theta: 0.2 }, n, 0.5, 0.3).unwrap();
            assert!(spectrum_check(&rep).unwrap().pass);
            let rep = build_rep(Family::Rho2Theta { theta: 0.2 }, n, 0.5, 0.3).unwrap();
            assert!(spectrum_check(&rep).unwrap().pass);
        }
    }

    #[test]
    fn polar_parts() {
        let rep = build_rep(Family::Rho2Theta { theta: 0.0 }, 100, 0.5, 0.3).unwrap();
        let r = polar_isometry_check(&rep, Generator::A).unwrap();
        assert!(r.min_eigenvalue >= 0.7 - 1e-10 && r.pass, "{r:?}");
        let rep = build_rep(Family::Rho1Theta { theta: 0.9 }, 30, 0.5, 0.3).unwrap();
        let r = polar_isometry_check(&rep, Generator::A).unwrap();
        assert!(r.isometry_defect < 1e-13 && r.pass);
        assert!(polar_isometry_check(&rep, Generator::B).unwrap().pass);
    }

    #[test]
    fn mvn() {
        let r = mvn_witness_check(10).unwrap();
        assert!(r.pass, "{r:?}");
        assert_eq!(r.rank_p, 1);
    }
}
