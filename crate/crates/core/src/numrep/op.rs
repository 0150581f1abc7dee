use nalgebra::DMatrix;
use num_complex::Complex64;

/// Operator on `C^n` sending `e_k` to `w_k e_{k+shift}` (0 when the target
/// index falls outside `0..n`). Generator images and their products all have
/// this form, so monomials are evaluated in `O(n)` per letter.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightedShift {
    shift: i64,
    weights: Vec<Complex64>,
}

impl WeightedShift {
    pub fn new(shift: i64, weights: Vec<Complex64>) -> Self {
        let n = weights.len() as i64;
        let weights = weights
            .into_iter()
            .enumerate()
            .map(|(k, w)| if (0..n).contains(&(k as i64 + shift)) { w } else { Complex64::new(0.0, 0.0) })
            .collect();
        Self { shift, weights }
    }

    pub fn diagonal(d: Vec<Complex64>) -> Self {
        Self::new(0, d)
    }

    pub fn identity(n: usize) -> Self {
        Self::diagonal(vec![Complex64::new(1.0, 0.0); n])
    }

    /// Raising shift with real weights.
    pub fn real_shift(w: Vec<f64>) -> Self {
        Self::new(1, w.into_iter().map(|x| Complex64::new(x, 0.0)).collect())
    }

    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    pub fn weights(&self) -> &[Complex64] {
        &self.weights
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        let n = self.dim() as i64;
        let weights = (0..n)
            .map(|k| {
                let mid = k + other.shift;
                if (0..n).contains(&mid) {
                    other.weights[k as usize] * self.weights[mid as usize]
                } else {
                    Complex64::new(0.0, 0.0)
                }
            })
            .collect();
        Self::new(self.shift + other.shift, weights)
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::identity(self.dim()), |acc, _| acc.compose(self))
    }

    pub fn adjoint(&self) -> Self {
        let n = self.dim() as i64;
        let weights = (0..n)
            .map(|j| {
                let src = j - self.shift;
                if (0..n).contains(&src) {
                    self.weights[src as usize].conj()
                } else {
                    Complex64::new(0.0, 0.0)
                }
            })
            .collect();
        Self::new(-self.shift, weights)
    }

    /// `self - other` for operators with equal shift.
    pub fn sub_same_shift(&self, other: &Self) -> Self {
        assert_eq!(self.shift, other.shift, "shifts differ");
        let weights = self.weights.iter().zip(&other.weights).map(|(x, y)| x - y).collect();
        Self::new(self.shift, weights)
    }

    pub fn scale(&self, c: f64) -> Self {
        Self { shift: self.shift, weights: self.weights.iter().map(|w| w * c).collect() }
    }

    /// Frobenius norm of the first `cols` columns.
    pub fn block_norm(&self, cols: usize) -> f64 {
        self.weights.iter().take(cols).map(Complex64::norm_sqr).sum::<f64>().sqrt()
    }

    pub fn trace(&self) -> Complex64 {
        if self.shift == 0 {
            self.weights.iter().sum()
        } else {
            Complex64::new(0.0, 0.0)
        }
    }

    pub fn add_to_dense(&self, out: &mut DMatrix<Complex64>, c: Complex64) {
        let n = self.dim() as i64;
        for (k, w) in self.weights.iter().enumerate() {
            let row = k as i64 + self.shift;
            if (0..n).contains(&row) {
                out[(row as usize, k)] += c * w;
            }
        }
    }

    pub fn to_dense(&self) -> DMatrix<Complex64> {
        let n = self.dim();
        let mut out = DMatrix::zeros(n, n);
        self.add_to_dense(&mut out, Complex64::new(1.0, 0.0));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(x: f64, y: f64) -> Complex64 {
        Complex64::new(x, y)
    }

    #[test]
    fn matches_dense_arithmetic() {
        let x = WeightedShift::new(1, vec![c(1.0, 0.5), c(2.0, 0.0), c(-1.0, 1.0), c(3.0, 0.0)]);
        let y = WeightedShift::new(-2, vec![c(0.5, 0.0), c(1.5, -1.0), c(2.0, 2.0), c(0.25, 0.0)]);
        assert_eq!(x.compose(&y).to_dense(), x.to_dense() * y.to_dense());
        assert_eq!(y.compose(&x).to_dense(), y.to_dense() * x.to_dense());
        assert_eq!(x.adjoint().to_dense(), x.to_dense().adjoint());
        assert_eq!(x.pow(2).to_dense(), x.to_dense() * x.to_dense());
    }

    #[test]
    fn trace_of_shift_vanishes() {
        let x = WeightedShift::real_shift(vec![1.0, 1.0, 1.0]);
        assert_eq!(x.trace(), c(0.0, 0.0));
        assert_eq!(x.compose(&x.adjoint()).trace(), c(2.0, 0.0));
    }
}
