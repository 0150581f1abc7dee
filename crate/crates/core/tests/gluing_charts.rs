use qhopf_core::gluing::{base_trivialization_check, colinearity_check, gluing_check};
use qhopf_core::s3core::{S2Generator, S2Poly};
use qhopf_core::sample::{random_element, SampleBounds};
use qhopf_core::{AlgElement, BasisMonomial, Param};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn monomials_up_to(deg: u64) -> Vec<BasisMonomial> {
    let d = deg as i64;
    let mut out = Vec::new();
    for mu in -d..=d {
        for nu in -d..=d {
            for e in 0..=deg as u32 {
                for (m, n) in [(e, 0), (0, e)] {
                    let t = BasisMonomial::new(mu, m, n, nu);
                    if t.total_degree() <= deg && !out.contains(&t) {
                        out.push(t);
                    }
                }
            }
        }
    }
    out
}

#[test]
fn pullback_on_basis_monomials() {
    let all = monomials_up_to(6);
    assert!(all.len() > 100);
    for t in all {
        assert!(gluing_check(&AlgElement::basis(t)), "{t}");
    }
}

#[test]
fn pullback_and_colinearity_on_random_elements() {
    let mut rng = ChaCha8Rng::seed_from_u64(29);
    let b = SampleBounds::default();
    for _ in 0..100 {
        let x = random_element(&mut rng, &b);
        assert!(gluing_check(&x), "{x}");
        assert!(colinearity_check(&x, Param::P) && colinearity_check(&x, Param::Q), "{x}");
    }
}

#[test]
fn base_charts() {
    let f1 = S2Poly::generator(S2Generator::F1);
    let f0 = S2Poly::generator(S2Generator::F0);
    for f in [f0.clone(), f1.clone(), f1.mul(&f0).add(&f0.mul(&f0))] {
        assert!(base_trivialization_check(&f, Param::P) && base_trivialization_check(&f, Param::Q));
    }
}
