use qhopf_core::chern::{idempotent, matrix_trace, pairing, trace_functional};
use qhopf_core::numrep::numeric_trace;
use qhopf_core::s3core::is_coinvariant;
use qhopf_core::sample::{random_coinvariant, SampleBounds};
use qhopf_core::{AlgElement, BasisMonomial, ParamScalar};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn idempotents_up_to_five() {
    for n in 1..=5i64 {
        for mu in [-n, n] {
            let e = idempotent(mu).unwrap();
            assert_eq!(e.rows(), n as usize + 1);
            assert!(e.entries().iter().all(is_coinvariant));
            assert!(e.is_idempotent(), "mu = {mu}");
        }
    }
}

#[test]
fn trace_of_e_minus_one() {
    let tr = matrix_trace(&idempotent(-1).unwrap()).unwrap();
    let expect = AlgElement::a()
        .mul(&AlgElement::a_star())
        .add(&AlgElement::p_atom(1).mul(&AlgElement::b_star()).mul(&AlgElement::b()).scale(&ParamScalar::q()));
    assert_eq!(tr, expect);
}

#[test]
fn pairing_is_minus_one_identically() {
    assert_eq!(pairing(-1).unwrap(), ParamScalar::from_int(-1));
}

#[test]
fn pairings_are_integers_and_match_numerics() {
    let (p, q) = (0.5, 1.0 / 3.0);
    for n in 1..=5i64 {
        for mu in [-n, n] {
            let v = pairing(mu).unwrap();
            assert!(v.as_integer().is_some(), "mu = {mu}: {v}");
            let t = numeric_trace(&matrix_trace(&idempotent(mu).unwrap()).unwrap(), 300, p, q).unwrap();
            assert!((t.re - v.eval(p, q).unwrap()).abs() <= t.tail_bound + 1e-9, "mu = {mu}");
        }
    }
}

#[test]
fn tracial_on_random_pairs() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    let b = SampleBounds { max_terms: 3, max_shift: 2, max_exp: 2 };
    for _ in 0..200 {
        let (x, y) = (random_coinvariant(&mut rng, &b), random_coinvariant(&mut rng, &b));
        assert_eq!(trace_functional(&x.mul(&y)).unwrap(), trace_functional(&y.mul(&x)).unwrap());
    }
}

#[test]
fn closed_form_trace_matches_truncation() {
    for (p, q) in [(0.5, 0.3), (0.5, 1.0 / 3.0)] {
        for mu in -3..=3i64 {
            for e in 0..=6u32 {
                for (m, n) in [(e, 0), (0, e)] {
                    let x = AlgElement::basis(BasisMonomial::new(mu, m, n, mu));
                    let exact = trace_functional(&x).unwrap().eval(p, q).unwrap();
                    let t = numeric_trace(&x, 300, p, q).unwrap();
                    assert!((t.re - exact).abs() <= t.tail_bound + 1e-9, "{x}");
                    assert!(t.im.abs() <= 1e-12);
                }
            }
        }
    }
}

#[test]
fn anchors() {
    assert!(trace_functional(&AlgElement::one()).unwrap().is_zero());
    assert_eq!(trace_functional(&AlgElement::p_atom(1)).unwrap().to_string(), "1/(1 - q)");
    assert_eq!(trace_functional(&AlgElement::q_atom(2)).unwrap().to_string(), "-1/(1 - p^2)");
}
