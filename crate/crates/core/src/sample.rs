//! Seeded random elements for property checks.

use rand::Rng;

use crate::s3core::{AlgElement, BasisMonomial};
use crate::scalars::ParamScalar;

/// Bounds on sampled elements.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SampleBounds {
    pub max_terms: usize,
    /// Bound on `|mu|` and `|nu|`.
    pub max_shift: i64,
    /// Bound on the `(1-aa*)` and `(1-bb*)` exponents.
    pub max_exp: u32,
}

impl Default for SampleBounds {
    fn default() -> Self {
        Self { max_terms: 3, max_shift: 2, max_exp: 2 }
    }
}

/// Small coefficients: signed integers times `p^i q^j`, occasionally
/// divided by `1 - q` or `1 - p`.
pub fn random_scalar<R: Rng + ?Sized>(rng: &mut R) -> ParamScalar {
    let mut c = ParamScalar::from_int(*[-3, -2, -1, 1, 2, 3].get(rng.random_range(0..6)).unwrap());
    c = &c * &ParamScalar::p_pow(rng.random_range(0..=1)) * ParamScalar::q_pow(rng.random_range(0..=1));
    match rng.random_range(0..8) {
        0 => &c / &(ParamScalar::one() - ParamScalar::q()),
        1 => &c / &(ParamScalar::one() - ParamScalar::p()),
        _ => c,
    }
}

pub fn random_monomial<R: Rng + ?Sized>(rng: &mut R, b: &SampleBounds) -> BasisMonomial {
    let mu = rng.random_range(-b.max_shift..=b.max_shift);
    let nu = rng.random_range(-b.max_shift..=b.max_shift);
    let e = rng.random_range(0..=b.max_exp);
    if rng.random::<bool>() {
        BasisMonomial::new(mu, e, 0, nu)
    } else {
        BasisMonomial::new(mu, 0, e, nu)
    }
}

/// Sum of `1..=max_terms` random terms; may cancel to zero only if two terms
/// coincide with opposite coefficients.
pub fn random_element<R: Rng + ?Sized>(rng: &mut R, b: &SampleBounds) -> AlgElement {
    let terms = rng.random_range(1..=b.max_terms.max(1));
    AlgElement::from_terms((0..terms).map(|_| (random_monomial(rng, b), random_scalar(rng))))
}

/// As [`random_element`] but with every monomial of winding 0.
pub fn random_coinvariant<R: Rng + ?Sized>(rng: &mut R, b: &SampleBounds) -> AlgElement {
    let terms = rng.random_range(1..=b.max_terms.max(1));
    AlgElement::from_terms((0..terms).map(|_| {
        let mut m = random_monomial(rng, b);
        m.nu = m.mu;
        (m, random_scalar(rng))
    }))
}

/// A nonzero element; resamples on the rare exact cancellation.
pub fn random_nonzero<R: Rng + ?Sized>(rng: &mut R, b: &SampleBounds) -> AlgElement {
    loop {
        let x = random_element(rng, b);
        if !x.is_zero() {
            return x;
        }
    }
}
