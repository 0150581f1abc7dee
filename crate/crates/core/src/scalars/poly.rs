//! Sparse bivariate polynomials in `p`, `q` over the rationals.
//!
//! Terms are kept in a `BTreeMap` keyed by [`PqExp`], whose ordering is
//! graded lexicographic with `p < q`. Iteration therefore runs from the
//! constant term upwards.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exponent pair of a monomial `p^p q^q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct PqExp {
    pub p: u32,
    pub q: u32,
}

impl PqExp {
    pub const ONE: PqExp = PqExp { p: 0, q: 0 };

    pub fn new(p: u32, q: u32) -> Self {
        PqExp { p, q }
    }

    pub fn total(self) -> u32 {
        self.p + self.q
    }

    fn add(self, other: PqExp) -> PqExp {
        PqExp::new(self.p + other.p, self.q + other.q)
    }

    fn divides(self, other: PqExp) -> bool {
        self.p <= other.p && self.q <= other.q
    }

    fn sub(self, other: PqExp) -> PqExp {
        PqExp::new(self.p - other.p, self.q - other.q)
    }
}

impl Ord for PqExp {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.total(), self.q).cmp(&(other.total(), other.q))
    }
}

impl PartialOrd for PqExp {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial in `p` and `q` with exact rational coefficients.
///
/// No zero coefficient is ever stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: BTreeMap<PqExp, BigRational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Poly::monomial(c, PqExp::ONE)
    }

    pub fn monomial(c: BigRational, e: PqExp) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        Poly { terms }
    }

    pub fn p() -> Self {
        Poly::monomial(BigRational::one(), PqExp::new(1, 0))
    }

    pub fn q() -> Self {
        Poly::monomial(BigRational::one(), PqExp::new(0, 1))
    }

    pub fn from_terms<I: IntoIterator<Item = (PqExp, BigRational)>>(iter: I) -> Self {
        let mut out = Poly::zero();
        for (e, c) in iter {
            out.add_term(e, c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&PqExp::ONE).is_some_and(|c| c.is_one())
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&PqExp, &BigRational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The constant term as a rational, if the polynomial is constant.
    pub fn as_constant(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => self.terms.get(&PqExp::ONE).cloned(),
            _ => None,
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Smallest term under the graded order (the first one printed).
    pub fn lowest(&self) -> Option<(&PqExp, &BigRational)> {
        self.terms.iter().next()
    }

    /// Largest term under the graded order.
    pub fn leading(&self) -> Option<(&PqExp, &BigRational)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, e: PqExp, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Poly {
        Poly { terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect() }
    }

    pub fn scale(&self, c: &BigRational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect() }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term(e1.add(*e2), c1 * c2);
            }
        }
        out
    }

    fn mul_monomial(&self, c: &BigRational, e: PqExp) -> Poly {
        Poly { terms: self.terms.iter().map(|(k, v)| (k.add(e), v * c)).collect() }
    }

    pub fn pow(&self, n: u32) -> Poly {
        let mut acc = Poly::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Componentwise minimum of the exponents over all terms, i.e. the
    /// largest monomial dividing every term.
    pub fn monomial_content(&self) -> PqExp {
        let mut it = self.terms.keys();
        let Some(first) = it.next() else {
            return PqExp::ONE;
        };
        it.fold(*first, |acc, e| PqExp::new(acc.p.min(e.p), acc.q.min(e.q)))
    }

    /// Exact division; returns `None` when `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Poly) -> Option<Poly> {
        let (lead_e, lead_c) = divisor.leading()?;
        let (lead_e, lead_c) = (*lead_e, lead_c.clone());
        let mut rem = self.clone();
        let mut quot = Poly::zero();
        while let Some((re, rc)) = rem.leading() {
            if !lead_e.divides(*re) {
                return None;
            }
            let e = re.sub(lead_e);
            let c = rc / &lead_c;
            rem = rem.sub(&divisor.mul_monomial(&c, e));
            quot.add_term(e, c);
        }
        Some(quot)
    }

    /// Evaluate at floating-point parameter values.
    pub fn eval_f64(&self, p: f64, q: f64) -> f64 {
        use num_traits::ToPrimitive;
        self.terms.iter().map(|(e, c)| c.to_f64().unwrap_or(f64::NAN) * p.powi(e.p as i32) * q.powi(e.q as i32)).sum()
    }

    /// Evaluate exactly at rational parameter values.
    pub fn eval_exact(&self, p: &BigRational, q: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            acc += c * num_traits::pow(p.clone(), e.p as usize) * num_traits::pow(q.clone(), e.q as usize);
        }
        acc
    }

    pub fn gcd(&self, other: &Poly) -> Poly {
        gcd::bivariate_gcd(self, other)
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

fn fmt_rational_abs(c: &BigRational) -> String {
    let c = c.abs();
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

fn fmt_exp(e: PqExp) -> String {
    let mut parts = Vec::new();
    for (name, k) in [("p", e.p), ("q", e.q)] {
        match k {
            0 => {}
            1 => parts.push(name.to_string()),
            _ => parts.push(format!("{name}^{k}")),
        }
    }
    parts.join("*")
}

impl fmt::Display for Poly {
    /// Terms in ascending graded order, e.g. `1 - q^2` or `1 + p*q`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let mono = fmt_exp(*e);
            let abs_one = c.abs().is_one();
            match (mono.is_empty(), abs_one) {
                (true, _) => write!(f, "{}", fmt_rational_abs(c))?,
                (false, true) => write!(f, "{mono}")?,
                (false, false) => write!(f, "{}*{mono}", fmt_rational_abs(c))?,
            }
        }
        Ok(())
    }
}

impl From<i64> for Poly {
    fn from(v: i64) -> Self {
        Poly::constant(BigRational::from_integer(BigInt::from(v)))
    }
}

mod gcd {
    //! gcd in Q[p][q] by primitive pseudo-remainder sequences, with Euclid
    //! in Q[p] for the contents.

    use super::{Poly, PqExp};
    use num_rational::BigRational;
    use num_traits::{One, Zero};

    /// Dense univariate polynomial over Q, index = degree.
    type UPoly = Vec<BigRational>;
    /// Polynomial in q whose coefficients are dense polynomials in p.
    type RPoly = Vec<UPoly>;

    fn trim(u: &mut UPoly) {
        while u.last().is_some_and(|c| c.is_zero()) {
            u.pop();
        }
    }

    fn u_is_zero(u: &UPoly) -> bool {
        u.is_empty()
    }

    fn u_mul(a: &UPoly, b: &UPoly) -> UPoly {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        trim(&mut out);
        out
    }

    fn u_sub(a: &UPoly, b: &UPoly) -> UPoly {
        let n = a.len().max(b.len());
        let mut out: UPoly = (0..n)
            .map(|i| {
                let x = a.get(i).cloned().unwrap_or_else(BigRational::zero);
                let y = b.get(i).cloned().unwrap_or_else(BigRational::zero);
                x - y
            })
            .collect();
        trim(&mut out);
        out
    }

    fn u_divrem(a: &UPoly, b: &UPoly) -> (UPoly, UPoly) {
        let mut rem = a.clone();
        let db = b.len() - 1;
        let lb = b[db].clone();
        if rem.len() < b.len() {
            return (Vec::new(), rem);
        }
        let mut quot = vec![BigRational::zero(); rem.len() - db];
        while rem.len() >= b.len() {
            let dr = rem.len() - 1;
            let c = &rem[dr] / &lb;
            let shift = dr - db;
            for (i, bc) in b.iter().enumerate() {
                rem[i + shift] -= &c * bc;
            }
            quot[shift] = c;
            trim(&mut rem);
        }
        trim(&mut quot);
        (quot, rem)
    }

    fn u_monic(mut a: UPoly) -> UPoly {
        if let Some(l) = a.last().cloned() {
            for c in a.iter_mut() {
                *c = &*c / &l;
            }
        }
        a
    }

    fn u_gcd(a: &UPoly, b: &UPoly) -> UPoly {
        let (mut x, mut y) = (a.clone(), b.clone());
        while !y.is_empty() {
            let (_, r) = u_divrem(&x, &y);
            x = y;
            y = r;
        }
        u_monic(x)
    }

    fn u_div_exact(a: &UPoly, b: &UPoly) -> UPoly {
        let (q, r) = u_divrem(a, b);
        debug_assert!(r.is_empty());
        q
    }

    fn to_rpoly(f: &Poly) -> RPoly {
        let dq = f.terms.keys().map(|e| e.q).max().unwrap_or(0) as usize;
        let mut out: RPoly = vec![Vec::new(); dq + 1];
        for (e, c) in &f.terms {
            let slot = &mut out[e.q as usize];
            if slot.len() <= e.p as usize {
                slot.resize(e.p as usize + 1, BigRational::zero());
            }
            slot[e.p as usize] = c.clone();
        }
        out
    }

    fn from_rpoly(r: &RPoly) -> Poly {
        let mut out = Poly::zero();
        for (qd, coeff) in r.iter().enumerate() {
            for (pd, c) in coeff.iter().enumerate() {
                out.add_term(PqExp::new(pd as u32, qd as u32), c.clone());
            }
        }
        out
    }

    fn r_trim(r: &mut RPoly) {
        while r.last().is_some_and(u_is_zero) {
            r.pop();
        }
    }

    fn content(r: &RPoly) -> UPoly {
        let mut g: UPoly = Vec::new();
        for c in r {
            if c.is_empty() {
                continue;
            }
            g = if g.is_empty() { u_monic(c.clone()) } else { u_gcd(&g, c) };
            if g.len() == 1 {
                break;
            }
        }
        g
    }

    fn primitive_part(r: &RPoly) -> RPoly {
        let c = content(r);
        r.iter().map(|x| if x.is_empty() { Vec::new() } else { u_div_exact(x, &c) }).collect()
    }

    /// Pseudo-remainder of `a` by `b` as polynomials in q.
    fn prem(a: &RPoly, b: &RPoly) -> RPoly {
        let mut rem = a.clone();
        let db = b.len() - 1;
        let lb = b[db].clone();
        while rem.len() >= b.len() {
            let dr = rem.len() - 1;
            let lr = rem[dr].clone();
            let shift = dr - db;
            // rem <- lb * rem - lr * q^shift * b
            let mut next: RPoly = rem.iter().map(|c| u_mul(c, &lb)).collect();
            for (i, bc) in b.iter().enumerate() {
                next[i + shift] = u_sub(&next[i + shift], &u_mul(&lr, bc));
            }
            r_trim(&mut next);
            rem = next;
        }
        rem
    }

    pub fn bivariate_gcd(f: &Poly, g: &Poly) -> Poly {
        if f.is_zero() {
            return g.clone();
        }
        if g.is_zero() {
            return f.clone();
        }
        // Monomial shortcut: gcd with a monomial is a monomial.
        if f.is_monomial() || g.is_monomial() {
            let ef = f.monomial_content();
            let eg = g.monomial_content();
            return Poly::monomial(BigRational::one(), PqExp::new(ef.p.min(eg.p), ef.q.min(eg.q)));
        }
        let a = to_rpoly(f);
        let b = to_rpoly(g);
        let ca = content(&a);
        let cb = content(&b);
        let cg = u_gcd(&ca, &cb);
        let (mut x, mut y) = (primitive_part(&a), primitive_part(&b));
        if x.len() < y.len() {
            std::mem::swap(&mut x, &mut y);
        }
        while !y.is_empty() {
            let r = prem(&x, &y);
            x = y;
            y = if r.is_empty() { r } else { primitive_part(&r) };
        }
        let mut pp = x;
        for c in pp.iter_mut() {
            *c = u_mul(c, &cg);
        }
        from_rpoly(&pp)
    }
}
