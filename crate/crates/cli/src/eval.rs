use std::fmt;

use anyhow::{anyhow, bail, Result};
use qhopf_core::hopf::LaurentElement;
use qhopf_core::s3core::{iota, S2Poly};
use qhopf_core::{AlgElement, ParamScalar};

use crate::expr::{parse, Expr};

/// Value of an evaluated expression.
#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Scalar(ParamScalar),
    Alg(AlgElement),
    Sphere2(S2Poly),
    Laurent(LaurentElement),
}

impl Value {
    /// Element of the 3-sphere algebra; 2-sphere values go through iota.
    pub fn into_alg(self) -> Result<AlgElement> {
        match self {
            Value::Scalar(c) => Ok(AlgElement::scalar(c)),
            Value::Alg(x) => Ok(x),
            Value::Sphere2(f) => Ok(iota(&f)),
            Value::Laurent(_) => bail!("expected an element in a, b (or f0, f1), got one in u"),
        }
    }

    /// Canonical form: 2-sphere values are reported through iota.
    pub fn normalized(self) -> Value {
        match self {
            Value::Sphere2(f) => Value::Alg(iota(&f)),
            v => v,
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Scalar(c) => write!(f, "{c}"),
            Value::Alg(x) => write!(f, "{x}"),
            Value::Sphere2(x) => write!(f, "{}", iota(x)),
            Value::Laurent(x) => write!(f, "{x}"),
        }
    }
}

fn binary(x: Value, y: Value, op: fn(&AlgElement, &AlgElement) -> AlgElement) -> Result<Value> {
    use Value::*;
    Ok(match (x, y) {
        (Alg(x), y) => Alg(op(&x, &y.into_alg()?)),
        (x, Alg(y)) => Alg(op(&x.into_alg()?, &y)),
        (x, y) => bail!("cannot combine {x} and {y}"),
    })
}

fn scalar_to_s2(v: Value) -> Result<S2Poly> {
    match v {
        Value::Scalar(c) => Ok(S2Poly::scalar(c)),
        Value::Sphere2(f) => Ok(f),
        other => bail!("expected an expression in f0, f1, got {other}"),
    }
}

fn scalar_to_u(v: Value) -> Result<LaurentElement> {
    match v {
        Value::Scalar(c) => Ok(LaurentElement::monomial(0, c)),
        Value::Laurent(x) => Ok(x),
        other => bail!("expected an expression in u, got {other}"),
    }
}

#[derive(Clone, Copy)]
enum Op {
    Add,
    Sub,
    Mul,
}

fn combine(x: Value, y: Value, op: Op) -> Result<Value> {
    let is = |v: &Value, s2: bool| if s2 { matches!(v, Value::Sphere2(_)) } else { matches!(v, Value::Laurent(_)) };
    if is(&x, true) || is(&y, true) {
        let (x, y) = (scalar_to_s2(x)?, scalar_to_s2(y)?);
        return Ok(Value::Sphere2(match op {
            Op::Add => x.add(&y),
            Op::Sub => x.sub(&y),
            Op::Mul => x.mul(&y),
        }));
    }
    if is(&x, false) || is(&y, false) {
        let (x, y) = (scalar_to_u(x)?, scalar_to_u(y)?);
        return Ok(Value::Laurent(match op {
            Op::Add => x.add(&y),
            Op::Sub => x.sub(&y),
            Op::Mul => x.mul(&y),
        }));
    }
    if let (Value::Scalar(c), Value::Scalar(d)) = (&x, &y) {
        return Ok(Value::Scalar(match op {
            Op::Add => c + d,
            Op::Sub => c - d,
            Op::Mul => c * d,
        }));
    }
    binary(
        x,
        y,
        match op {
            Op::Add => AlgElement::add,
            Op::Sub => AlgElement::sub,
            Op::Mul => AlgElement::mul,
        },
    )
}

fn scale(v: Value, c: &ParamScalar) -> Value {
    match v {
        Value::Scalar(x) => Value::Scalar(&x * c),
        Value::Alg(x) => Value::Alg(x.scale(c)),
        Value::Sphere2(x) => Value::Sphere2(x.scale(c)),
        Value::Laurent(x) => Value::Laurent(x.scale(c)),
    }
}

fn power(v: Value, n: i64) -> Result<Value> {
    if n < 0 {
        return match v {
            Value::Scalar(c) => Ok(Value::Scalar(c.pow(n)?)),
            Value::Laurent(x) => {
                let terms: Vec<_> = x.terms().collect();
                match terms.as_slice() {
                    [(k, c)] => Ok(Value::Laurent(LaurentElement::monomial(**k * n, c.pow(n)?))),
                    _ => bail!("only monomials in u can be raised to negative powers"),
                }
            }
            _ => bail!("negative powers are only defined for u and scalars"),
        };
    }
    let one = match &v {
        Value::Scalar(_) => Value::Scalar(ParamScalar::one()),
        Value::Alg(_) => Value::Alg(AlgElement::one()),
        Value::Sphere2(_) => Value::Sphere2(S2Poly::one()),
        Value::Laurent(_) => Value::Laurent(LaurentElement::one()),
    };
    (0..n).try_fold(one, |acc, _| combine(acc, v.clone(), Op::Mul))
}

pub fn eval(e: &Expr) -> Result<Value> {
    Ok(match e {
        Expr::Num(n) => Value::Scalar(ParamScalar::from_rational(num_rational::BigRational::from_integer(n.clone()))),
        Expr::P => Value::Scalar(ParamScalar::p()),
        Expr::Q => Value::Scalar(ParamScalar::q()),
        Expr::Gen(g) => Value::Alg(AlgElement::generator(*g)),
        Expr::F(g) => Value::Sphere2(S2Poly::generator(*g)),
        Expr::U => Value::Laurent(LaurentElement::u_pow(1)),
        Expr::Add(x, y) => combine(eval(x)?, eval(y)?, Op::Add)?,
        Expr::Sub(x, y) => combine(eval(x)?, eval(y)?, Op::Sub)?,
        Expr::Mul(x, y) => combine(eval(x)?, eval(y)?, Op::Mul)?,
        Expr::Div(x, y) => {
            let Value::Scalar(d) = eval(y)? else { bail!("only division by a scalar is supported") };
            let inv = d.inv().map_err(|_| anyhow!("division by zero"))?;
            scale(eval(x)?, &inv)
        }
        Expr::Neg(x) => scale(eval(x)?, &ParamScalar::from_int(-1)),
        Expr::Star(x) => match eval(x)? {
            Value::Scalar(c) => Value::Scalar(c),
            Value::Alg(x) => Value::Alg(x.star()),
            Value::Sphere2(x) => Value::Sphere2(x.star()),
            Value::Laurent(x) => Value::Laurent(x.star()),
        },
        Expr::Pow(x, n) => power(eval(x)?, *n)?,
        Expr::Iota(x) => Value::Alg(eval(x)?.into_alg()?),
    })
}

/// Parse and evaluate.
pub fn evaluate_text(text: &str) -> Result<Value> {
    let (e, _) = parse(text)?;
    eval(&e)
}

/// Parse and evaluate to an element of the 3-sphere algebra.
pub fn alg_from_text(text: &str) -> Result<AlgElement> {
    evaluate_text(text)?.into_alg()
}
