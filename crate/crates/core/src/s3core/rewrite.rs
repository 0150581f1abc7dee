//! Letter-by-letter multiplication using the rewriting rules directly.
//!
//! This path does not go through the disc closed forms and serves as the
//! reference that [`super::mul`] is tested against.

use super::{AlgElement, BasisMonomial, Generator};
use crate::scalars::ParamScalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

type Terms = Vec<(BasisMonomial, ParamScalar)>;

fn push(out: &mut Terms, mu: i64, m: u32, n: u32, nu: i64, c: ParamScalar) {
    // (1-aa*)^m (1-bb*)^n = 0 once both are present
    if m > 0 && n > 0 {
        return;
    }
    out.push((BasisMonomial::new(mu, m, n, nu), c));
}

fn q(k: i64) -> ParamScalar {
    ParamScalar::q_pow(k)
}

fn p(k: i64) -> ParamScalar {
    ParamScalar::p_pow(k)
}

/// `t * g` for a basis monomial `t`.
fn right(t: &BasisMonomial, g: Generator) -> Terms {
    let BasisMonomial { mu, m, n, nu } = *t;
    let mi = i64::from(m);
    let mut out = Vec::new();
    match g {
        // a_mu P^m a = q^m a_mu a P^m;  a*^k a = a*^{k-1} (1 - qP)
        Generator::A => {
            let c = q(mi);
            push(&mut out, mu + 1, m, n, nu, c.clone());
            if mu < 0 {
                push(&mut out, mu + 1, m + 1, n, nu, -(&c * &q(1)));
            }
        }
        // a_mu P^m a* = q^-m a_mu a* P^m;  a^k a* = a^{k-1} (1 - P)
        Generator::AStar => {
            let c = q(-mi);
            push(&mut out, mu - 1, m, n, nu, c.clone());
            if mu > 0 {
                push(&mut out, mu - 1, m + 1, n, nu, -c);
            }
        }
        // b*^k b = b*^{k-1} - p b*^{k-1} Q = b*^{k-1} - p^k Q b*^{k-1}
        Generator::B => {
            push(&mut out, mu, m, n, nu + 1, ParamScalar::one());
            if nu < 0 {
                let k = -nu;
                push(&mut out, mu, m, n + 1, nu + 1, -p(k));
            }
        }
        // b^k b* = b^{k-1} - b^{k-1} Q = b^{k-1} - p^{-(k-1)} Q b^{k-1}
        Generator::BStar => {
            push(&mut out, mu, m, n, nu - 1, ParamScalar::one());
            if nu > 0 {
                let k = nu;
                push(&mut out, mu, m, n + 1, nu - 1, -p(-(k - 1)));
            }
        }
    }
    out
}

/// `g * t` for a basis monomial `t`.
fn left(t: &BasisMonomial, g: Generator) -> Terms {
    let BasisMonomial { mu, m, n, nu } = *t;
    let ni = i64::from(n);
    let mut out = Vec::new();
    match g {
        // a a*^k = (1 - P) a*^{k-1} = a*^{k-1} - q^{-(k-1)} a*^{k-1} P
        Generator::A => {
            push(&mut out, mu + 1, m, n, nu, ParamScalar::one());
            if mu < 0 {
                let k = -mu;
                push(&mut out, mu + 1, m + 1, n, nu, -q(-(k - 1)));
            }
        }
        // a* a^k = (1 - qP) a^{k-1} = a^{k-1} - q^k a^{k-1} P
        Generator::AStar => {
            push(&mut out, mu - 1, m, n, nu, ParamScalar::one());
            if mu > 0 {
                push(&mut out, mu - 1, m + 1, n, nu, -q(mu));
            }
        }
        // b Q^n = p^-n Q^n b;  b b*^k = (1 - Q) b*^{k-1}
        Generator::B => {
            let c = p(-ni);
            push(&mut out, mu, m, n, nu + 1, c.clone());
            if nu < 0 {
                push(&mut out, mu, m, n + 1, nu + 1, -c);
            }
        }
        // b* Q^n = p^n Q^n b*;  b* b^k = (1 - pQ) b^{k-1}
        Generator::BStar => {
            let c = p(ni);
            push(&mut out, mu, m, n, nu - 1, c.clone());
            if nu > 0 {
                push(&mut out, mu, m, n + 1, nu - 1, -(&c * &p(1)));
            }
        }
    }
    out
}

/// `g x` or `x g` by the rewriting rules.
pub fn mul_by_generator(x: &AlgElement, g: Generator, side: Side) -> AlgElement {
    let mut out = AlgElement::zero();
    for (t, c) in x.terms() {
        let terms = match side {
            Side::Left => left(t, g),
            Side::Right => right(t, g),
        };
        for (m, k) in terms {
            out.add_term(m, c * &k);
        }
    }
    out
}

/// Product computed by expanding each monomial of `y` into letters and
/// right-multiplying one generator at a time; `(1-aa*)` and `(1-bb*)` are
/// applied as `z - z a a*` and `z - z b b*`.
pub fn mul_via_generators(x: &AlgElement, y: &AlgElement) -> AlgElement {
    let rmul = |z: &AlgElement, g: Generator| mul_by_generator(z, g, Side::Right);
    let mut out = AlgElement::zero();
    for (t, c) in y.terms() {
        let mut acc = x.scale(c);
        let a_letter = if t.mu >= 0 { Generator::A } else { Generator::AStar };
        for _ in 0..t.mu.unsigned_abs() {
            acc = rmul(&acc, a_letter);
        }
        for _ in 0..t.m {
            acc = acc.sub(&rmul(&rmul(&acc, Generator::A), Generator::AStar));
        }
        for _ in 0..t.n {
            acc = acc.sub(&rmul(&rmul(&acc, Generator::B), Generator::BStar));
        }
        let b_letter = if t.nu >= 0 { Generator::B } else { Generator::BStar };
        for _ in 0..t.nu.unsigned_abs() {
            acc = rmul(&acc, b_letter);
        }
        out = out.add(&acc);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_times_generator() {
        for g in Generator::ALL {
            for side in [Side::Left, Side::Right] {
                assert_eq!(mul_by_generator(&AlgElement::one(), g, side), AlgElement::generator(g));
            }
        }
    }

    #[test]
    fn a_star_times_a_on_the_right() {
        let x = mul_by_generator(&AlgElement::a_star(), Generator::A, Side::Right);
        let expect = AlgElement::one().sub(&AlgElement::p_atom(1).scale(&ParamScalar::q()));
        assert_eq!(x, expect);
    }

    #[test]
    fn left_and_right_agree_with_product() {
        let x = AlgElement::from_terms([
            (BasisMonomial::new(-2, 1, 0, 1), ParamScalar::from_int(3)),
            (BasisMonomial::new(1, 0, 2, -2), ParamScalar::q()),
            (BasisMonomial::new(0, 0, 0, 3), ParamScalar::p()),
        ]);
        for g in Generator::ALL {
            let gx = AlgElement::generator(g);
            assert_eq!(mul_by_generator(&x, g, Side::Left), gx.mul(&x), "{g} x");
            assert_eq!(mul_by_generator(&x, g, Side::Right), x.mul(&gx), "x {g}");
        }
    }

    #[test]
    fn p_atom_then_b_b_star_collapses() {
        let x = mul_by_generator(&AlgElement::p_atom(1), Generator::B, Side::Right);
        let x = mul_by_generator(&x, Generator::BStar, Side::Right);
        assert_eq!(x, AlgElement::p_atom(1));
    }
}
