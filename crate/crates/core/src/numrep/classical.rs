//! The classical `U(1)`-homeomorphism between
//! `X = {(z1, z2) : (1-|z1|^2)(1-|z2|^2) = 0, |z_i| <= 1}` and `S^3`.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::Serialize;

type Pt = (Complex64, Complex64);

/// `f(z1, z2) = (|z1|^2 + |z2|^2)^{-1/2} (z1, conj z2)`.
pub fn f_map((z1, z2): Pt) -> Pt {
    let s = (z1.norm_sqr() + z2.norm_sqr()).sqrt().recip();
    (z1 * s, z2.conj() * s)
}

/// `g(c1, c2) = sqrt 2 (c1, conj c2) / sqrt(1 + |2|c1|^2 - 1|)`.
pub fn g_map((c1, c2): Pt) -> Pt {
    let s = std::f64::consts::SQRT_2 / (1.0 + (2.0 * c1.norm_sqr() - 1.0).abs()).sqrt();
    (c1 * s, c2.conj() * s)
}

fn act_x((z1, z2): Pt, phase: Complex64) -> Pt {
    (z1 * phase, z2 * phase.conj())
}

fn act_s3((c1, c2): Pt, phase: Complex64) -> Pt {
    (c1 * phase, c2 * phase)
}

fn dist(x: Pt, y: Pt) -> f64 {
    (x.0 - y.0).norm().max((x.1 - y.1).norm())
}

fn x_defect((z1, z2): Pt) -> f64 {
    let (r1, r2) = (z1.norm_sqr(), z2.norm_sqr());
    ((1.0 - r1) * (1.0 - r2)).abs().max(z1.norm() - 1.0).max(z2.norm() - 1.0).max(0.0)
}

fn s3_defect((c1, c2): Pt) -> f64 {
    (c1.norm_sqr() + c2.norm_sqr() - 1.0).abs()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClassicalReport {
    pub samples: usize,
    pub seed: u64,
    pub f_after_g: f64,
    pub g_after_f: f64,
    pub membership: f64,
    pub equivariance: f64,
    pub max_error: f64,
}

fn random_x(rng: &mut ChaCha8Rng) -> Pt {
    let circle = Complex64::from_polar(1.0, rng.random_range(0.0..std::f64::consts::TAU));
    let disc = Complex64::from_polar(rng.random::<f64>().sqrt(), rng.random_range(0.0..std::f64::consts::TAU));
    if rng.random::<bool>() {
        (circle, disc)
    } else {
        (disc, circle)
    }
}

fn random_s3(rng: &mut ChaCha8Rng) -> Pt {
    let v: [f64; 4] = std::array::from_fn(|_| rng.sample(StandardNormal));
    let r = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    (Complex64::new(v[0] / r, v[1] / r), Complex64::new(v[2] / r, v[3] / r))
}

/// Round trips, images and equivariance of `f` and `g` on seeded samples.
pub fn classical_maps_check(samples: usize, seed: u64) -> ClassicalReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut r = ClassicalReport { samples, seed, f_after_g: 0.0, g_after_f: 0.0, membership: 0.0, equivariance: 0.0, max_error: 0.0 };
    for _ in 0..samples {
        let z = random_x(&mut rng);
        let c = random_s3(&mut rng);
        let phase = Complex64::from_polar(1.0, rng.random_range(0.0..std::f64::consts::TAU));

        r.f_after_g = r.f_after_g.max(dist(f_map(g_map(c)), c));
        r.g_after_f = r.g_after_f.max(dist(g_map(f_map(z)), z));
        r.membership = r.membership.max(s3_defect(f_map(z))).max(x_defect(g_map(c)));
        r.equivariance = r
            .equivariance
            .max(dist(f_map(act_x(z, phase)), act_s3(f_map(z), phase)))
            .max(dist(g_map(act_s3(c, phase)), act_x(g_map(c), phase)));
    }
    r.max_error = r.f_after_g.max(r.g_after_f).max(r.membership).max(r.equivariance);
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pole_points() {
        let one = (Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0));
        assert!(dist(g_map(one), one) < 1e-15);
        assert!(dist(f_map(one), one) < 1e-15);
    }

    #[test]
    fn sampled_round_trips() {
        let r = classical_maps_check(200, 3);
        assert!(r.max_error <= 1e-12, "{r:?}");
    }
}
