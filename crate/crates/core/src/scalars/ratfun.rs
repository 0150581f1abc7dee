use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::{Poly, PqExp};
use crate::error::AlgebraError;

/// An exact rational function in the deformation parameters `p`, `q`.
///
/// Canonical form: numerator and denominator share no non-unit factor and the
/// lowest term of the denominator (graded order, `p < q`) has coefficient 1.
/// Two scalars are equal iff their representations are equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ParamScalar {
    num: Poly,
    den: Poly,
}

impl ParamScalar {
    pub fn zero() -> Self {
        ParamScalar { num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> Self {
        ParamScalar { num: Poly::one(), den: Poly::one() }
    }

    pub fn p() -> Self {
        ParamScalar::from_poly(Poly::p())
    }

    pub fn q() -> Self {
        ParamScalar::from_poly(Poly::q())
    }

    pub fn from_poly(num: Poly) -> Self {
        ParamScalar { num, den: Poly::one() }
    }

    pub fn from_rational(c: BigRational) -> Self {
        ParamScalar::from_poly(Poly::constant(c))
    }

    pub fn from_int(n: i64) -> Self {
        ParamScalar::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// Build `num/den`, normalizing.
    pub fn from_parts(num: Poly, den: Poly) -> Result<Self, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The value as a rational constant, if it does not depend on `p`, `q`.
    pub fn as_constant(&self) -> Option<BigRational> {
        if !self.den.is_one() {
            return None;
        }
        self.num.as_constant()
    }

    pub fn as_integer(&self) -> Option<BigInt> {
        self.as_constant().filter(|c| c.is_integer()).map(|c| c.to_integer())
    }

    fn normalized(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return ParamScalar::zero();
        }
        let (num, den) = if den.as_constant().is_some() {
            (num, den)
        } else {
            let g = num.gcd(&den);
            if g.as_constant().is_some() {
                (num, den)
            } else {
                (num.div_exact(&g).expect("gcd divides numerator"), den.div_exact(&g).expect("gcd divides denominator"))
            }
        };
        let lc = den.lowest().map(|(_, c)| c.clone()).expect("nonzero denominator");
        if lc.is_one() {
            ParamScalar { num, den }
        } else {
            let inv = lc.recip();
            ParamScalar { num: num.scale(&inv), den: den.scale(&inv) }
        }
    }

    pub fn inv(&self) -> Result<Self, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(Self::normalized(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, AlgebraError> {
        if other.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(self.mul_ref(&other.inv()?))
    }

    pub fn add_ref(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            let num = self.num.add(&other.num);
            if self.den.is_one() {
                return ParamScalar { num, den: Poly::one() };
            }
            return Self::normalized(num, self.den.clone());
        }
        let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
        Self::normalized(num, self.den.mul(&other.den))
    }

    pub fn neg_ref(&self) -> Self {
        ParamScalar { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn sub_ref(&self, other: &Self) -> Self {
        self.add_ref(&other.neg_ref())
    }

    pub fn mul_ref(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return ParamScalar::zero();
        }
        if self.den.is_one() && other.den.is_one() {
            return ParamScalar { num: self.num.mul(&other.num), den: Poly::one() };
        }
        Self::normalized(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    /// Integer power; negative exponents invert.
    pub fn pow(&self, k: i64) -> Result<Self, AlgebraError> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let e = k.unsigned_abs() as u32;
        Ok(ParamScalar { num: base.num.pow(e), den: base.den.pow(e) }.renormalized())
    }

    fn renormalized(self) -> Self {
        // powers of a canonical fraction stay coprime; only rescale
        Self::normalized_coprime(self.num, self.den)
    }

    fn normalized_coprime(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return ParamScalar::zero();
        }
        let lc = den.lowest().map(|(_, c)| c.clone()).expect("nonzero denominator");
        if lc.is_one() {
            ParamScalar { num, den }
        } else {
            let inv = lc.recip();
            ParamScalar { num: num.scale(&inv), den: den.scale(&inv) }
        }
    }

    /// `q^k` for any integer `k`.
    pub fn q_pow(k: i64) -> Self {
        Self::var_pow(PqExp::new(0, 1), k)
    }

    /// `p^k` for any integer `k`.
    pub fn p_pow(k: i64) -> Self {
        Self::var_pow(PqExp::new(1, 0), k)
    }

    fn var_pow(unit: PqExp, k: i64) -> Self {
        let e = k.unsigned_abs() as u32;
        let mono = Poly::monomial(BigRational::one(), PqExp::new(unit.p * e, unit.q * e));
        if k >= 0 {
            ParamScalar { num: mono, den: Poly::one() }
        } else {
            ParamScalar { num: Poly::one(), den: mono }
        }
    }

    /// Floating evaluation; errors at a pole.
    pub fn eval(&self, p: f64, q: f64) -> Result<f64, AlgebraError> {
        let d = self.den.eval_f64(p, q);
        if d == 0.0 || !d.is_finite() {
            return Err(AlgebraError::Pole { p, q });
        }
        Ok(self.num.eval_f64(p, q) / d)
    }

    /// Exact evaluation at rational parameter values.
    pub fn eval_exact(&self, p: &BigRational, q: &BigRational) -> Result<BigRational, AlgebraError> {
        use num_traits::ToPrimitive;
        let d = self.den.eval_exact(p, q);
        if d.is_zero() {
            return Err(AlgebraError::Pole { p: p.to_f64().unwrap_or(f64::NAN), q: q.to_f64().unwrap_or(f64::NAN) });
        }
        Ok(self.num.eval_exact(p, q) / d)
    }

    /// Whether the rendered form needs parentheses when used as a factor.
    pub fn is_compound(&self) -> bool {
        !self.den.is_one() || self.num.len() > 1
    }

    /// True when the numerator is a single term with negative coefficient.
    pub fn is_negative_monomial(&self) -> bool {
        self.num.len() == 1 && self.num.lowest().is_some_and(|(_, c)| c.is_negative())
    }
}

impl Default for ParamScalar {
    fn default() -> Self {
        ParamScalar::zero()
    }
}

impl fmt::Display for ParamScalar {
    /// `(1 - q^2)/(1 - p)`, `1/(1 - q)`, `-q`, `1 + q + q^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        // a bare power of one variable can follow '/' unparenthesized
        let wrap = |p: &Poly| {
            let single_var = p.len() == 1 && p.lowest().is_some_and(|(e, c)| c.is_one() && (e.p == 0 || e.q == 0));
            if single_var {
                p.to_string()
            } else {
                format!("({p})")
            }
        };
        let num = if self.num.len() > 1 { format!("({})", self.num) } else { self.num.to_string() };
        write!(f, "{num}/{}", wrap(&self.den))
    }
}

impl fmt::Debug for ParamScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ParamScalar({self})")
    }
}

impl From<i64> for ParamScalar {
    fn from(v: i64) -> Self {
        ParamScalar::from_int(v)
    }
}

impl From<BigRational> for ParamScalar {
    fn from(v: BigRational) -> Self {
        ParamScalar::from_rational(v)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $imp:ident) => {
        impl $tr<&ParamScalar> for &ParamScalar {
            type Output = ParamScalar;
            fn $m(self, rhs: &ParamScalar) -> ParamScalar {
                self.$imp(rhs)
            }
        }
        impl $tr<ParamScalar> for ParamScalar {
            type Output = ParamScalar;
            fn $m(self, rhs: ParamScalar) -> ParamScalar {
                (&self).$imp(&rhs)
            }
        }
        impl $tr<&ParamScalar> for ParamScalar {
            type Output = ParamScalar;
            fn $m(self, rhs: &ParamScalar) -> ParamScalar {
                (&self).$imp(rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);

impl Div<&ParamScalar> for &ParamScalar {
    type Output = ParamScalar;
    /// Panics on division by zero; use [`ParamScalar::checked_div`] to handle it.
    fn div(self, rhs: &ParamScalar) -> ParamScalar {
        self.checked_div(rhs).expect("division by zero ParamScalar")
    }
}

impl Div<ParamScalar> for ParamScalar {
    type Output = ParamScalar;
    fn div(self, rhs: ParamScalar) -> ParamScalar {
        &self / &rhs
    }
}

impl Neg for ParamScalar {
    type Output = ParamScalar;
    fn neg(self) -> ParamScalar {
        self.neg_ref()
    }
}

impl Neg for &ParamScalar {
    type Output = ParamScalar;
    fn neg(self) -> ParamScalar {
        self.neg_ref()
    }
}

impl Zero for ParamScalar {
    fn zero() -> Self {
        ParamScalar::zero()
    }
    fn is_zero(&self) -> bool {
        ParamScalar::is_zero(self)
    }
}

impl One for ParamScalar {
    fn one() -> Self {
        ParamScalar::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn one_minus(x: ParamScalar) -> ParamScalar {
        ParamScalar::one() - x
    }

    #[test]
    fn self_division_is_one() {
        let x = one_minus(ParamScalar::q());
        assert_eq!(x.checked_div(&x).unwrap(), ParamScalar::one());
    }

    #[test]
    fn cancels_common_factor() {
        let num = one_minus(ParamScalar::q_pow(2));
        let den = one_minus(ParamScalar::q());
        let r = num.checked_div(&den).unwrap();
        assert_eq!(r, ParamScalar::one() + ParamScalar::q());
        assert!(r.denominator().is_one());
    }

    #[test]
    fn coefficients_commute() {
        let d = ParamScalar::p() * ParamScalar::q() - ParamScalar::q() * ParamScalar::p();
        assert!(d.is_zero());
    }

    #[test]
    fn division_by_zero_errors() {
        assert_eq!(ParamScalar::one().checked_div(&ParamScalar::zero()), Err(AlgebraError::DivisionByZero));
        assert!(ParamScalar::zero().inv().is_err());
    }

    #[test]
    fn evaluation() {
        let x = ParamScalar::one().checked_div(&one_minus(ParamScalar::q())).unwrap();
        assert_eq!(x.eval(0.5, 0.5).unwrap(), 2.0);
        assert_eq!((ParamScalar::p() * ParamScalar::q()).eval(0.5, 0.25).unwrap(), 0.125);
        assert!(matches!(x.eval(0.5, 1.0), Err(AlgebraError::Pole { .. })));
    }

    #[test]
    fn rendering() {
        let x = one_minus(ParamScalar::q_pow(2)).checked_div(&one_minus(ParamScalar::p())).unwrap();
        assert_eq!(x.to_string(), "(1 - q^2)/(1 - p)");
        let y = ParamScalar::one().checked_div(&one_minus(ParamScalar::q())).unwrap();
        assert_eq!(y.to_string(), "1/(1 - q)");
        assert_eq!(ParamScalar::q_pow(-2).to_string(), "1/q^2");
        assert_eq!((-ParamScalar::q()).to_string(), "-q");
    }

    #[test]
    fn negative_powers() {
        let q = ParamScalar::q();
        assert_eq!(q.pow(-3).unwrap() * q.pow(3).unwrap(), ParamScalar::one());
        assert_eq!(ParamScalar::q_pow(-2), q.pow(-2).unwrap());
    }
}
