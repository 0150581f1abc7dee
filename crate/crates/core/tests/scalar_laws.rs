use proptest::prelude::*;
use qhopf_core::scalars::{qbinomial_in, qbinomial_quotient, scalar_arith, ArithOp};
use qhopf_core::{qbinomial, AlgebraError, Param, ParamScalar};

fn scalar() -> impl Strategy<Value = ParamScalar> {
    let atom = (-4i64..=4, 0i64..=2, 0i64..=2)
        .prop_map(|(c, i, j)| &(&ParamScalar::from_int(c) * &ParamScalar::p_pow(i)) * &ParamScalar::q_pow(j));
    (atom.clone(), atom.clone(), atom).prop_map(|(x, y, z)| {
        let den = &y + &ParamScalar::one();
        if den.is_zero() {
            &x + &z
        } else {
            &(&x / &den) + &z
        }
    })
}

// Coefficient of x^k y^{n-k} in (x + y)^n when y x = q x y: every word in
// x, y contributes q^(number of y-before-x pairs).
fn free_expansion(n: u32, k: u32) -> ParamScalar {
    let mut acc = ParamScalar::zero();
    for word in 0u32..(1 << n) {
        if word.count_ones() != k {
            continue;
        }
        let (mut ys, mut inv) = (0i64, 0i64);
        for pos in 0..n {
            if word >> pos & 1 == 1 {
                inv += ys;
            } else {
                ys += 1;
            }
        }
        acc = &acc + &ParamScalar::q_pow(inv);
    }
    acc
}

#[test]
fn gauss_binomial_matches_free_expansion() {
    for n in 0..=10 {
        for k in 0..=n {
            assert_eq!(qbinomial(n, k).unwrap(), free_expansion(n, k), "[{n},{k}]");
        }
    }
}

#[test]
fn gauss_binomial_values() {
    let q = ParamScalar::q();
    assert_eq!(qbinomial(2, 1).unwrap(), ParamScalar::one() + q.clone());
    assert_eq!(qbinomial(3, 1).unwrap(), ParamScalar::one() + q.clone() + &q * &q);
    assert_eq!(qbinomial(5, 5).unwrap(), ParamScalar::one());
    assert_eq!(qbinomial(2, 3), Err(AlgebraError::BinomialRange { n: 2, k: 3 }));
    assert_eq!(qbinomial_in(Param::P, 2, 1).unwrap(), ParamScalar::one() + ParamScalar::p());
}

#[test]
fn gauss_binomial_symmetry_and_pascal() {
    for n in 1..=12u32 {
        for k in 0..=n {
            assert_eq!(qbinomial(n, k).unwrap(), qbinomial(n, n - k).unwrap());
            assert_eq!(qbinomial(n, k).unwrap(), qbinomial_quotient(n, k).unwrap());
            if k >= 1 && k < n {
                // second Pascal rule: [n,k] = q^(n-k) [n-1,k-1] + [n-1,k]
                let rhs = &(&ParamScalar::q_pow(i64::from(n - k)) * &qbinomial(n - 1, k - 1).unwrap()) + &qbinomial(n - 1, k).unwrap();
                assert_eq!(qbinomial(n, k).unwrap(), rhs);
            }
        }
    }
}

#[test]
fn anchored_arithmetic() {
    let q = ParamScalar::q();
    let x = scalar_arith(&ParamScalar::one(), &(&ParamScalar::one() - &q), ArithOp::Div).unwrap();
    assert_eq!(x.to_string(), "1/(1 - q)");
    assert!(scalar_arith(&q, &ParamScalar::zero(), ArithOp::Div).is_err());
    let s: ParamScalar = "(1 - q^2)/(1 - q)".parse().unwrap();
    assert_eq!(s, ParamScalar::one() + q);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(x in scalar(), y in scalar(), z in scalar()) {
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert!((&x - &x).is_zero());
        if !x.is_zero() {
            prop_assert!((&x / &x).is_one());
        }
    }

    #[test]
    fn print_parse_round_trip(x in scalar()) {
        let back: ParamScalar = x.to_string().parse().unwrap();
        prop_assert_eq!(back, x);
    }

    #[test]
    fn evaluation_is_a_homomorphism(x in scalar(), y in scalar()) {
        let (p, q) = (0.37, 0.61);
        let (ex, ey) = (x.eval(p, q).unwrap(), y.eval(p, q).unwrap());
        let tol = 1e-9 * (1.0 + ex.abs() * ey.abs() + ex.abs() + ey.abs());
        prop_assert!(((&x * &y).eval(p, q).unwrap() - ex * ey).abs() <= tol);
        prop_assert!(((&x + &y).eval(p, q).unwrap() - (ex + ey)).abs() <= tol);
    }
}
