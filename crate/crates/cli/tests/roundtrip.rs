use qhopf_cli::eval::{alg_from_text, evaluate_text};
use qhopf_core::sample::{random_element, SampleBounds};
use qhopf_core::AlgElement;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

// printing a normal form and reading it back gives the same element
#[test]
fn print_parse_fixpoint() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let b = SampleBounds { max_terms: 4, max_shift: 3, max_exp: 3 };
    for _ in 0..300 {
        let x = random_element(&mut rng, &b);
        let text = x.to_string();
        let y = alg_from_text(&text).unwrap_or_else(|e| panic!("{text}: {e}"));
        assert_eq!(x, y, "{text}");
        assert_eq!(y.to_string(), text);
    }
}

#[test]
fn fixpoint_on_typed_inputs() {
    for src in ["a^* * a", "b b^* a^2 - q a b", "(1 - a a^*)^3 b^*", "iota(f0 f1 - f1^* f0)", "p/(1 - q) * a^* b", "-(a + b)^2"] {
        let once = evaluate_text(src).unwrap().to_string();
        let twice = evaluate_text(&once).unwrap().to_string();
        assert_eq!(once, twice, "{src}");
    }
}

#[test]
fn zero_and_one_print() {
    assert_eq!(alg_from_text("0").unwrap(), AlgElement::zero());
    assert_eq!(alg_from_text("1").unwrap(), AlgElement::one());
    assert_eq!(evaluate_text("a - a").unwrap().to_string(), "0");
}
