use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use qhopf_core::ParamScalar;

/// A parameter value given on the command line as a fraction (`1/3`) or a
/// decimal (`0.3`). Decimals are read exactly.
#[derive(Clone, Debug, PartialEq)]
pub struct ParamValue {
    pub exact: BigRational,
    text: String,
}

impl ParamValue {
    pub fn as_f64(&self) -> f64 {
        self.exact.to_f64().unwrap_or(f64::NAN)
    }

    pub fn in_unit_interval(&self) -> bool {
        let v = self.as_f64();
        v > 0.0 && v < 1.0
    }
}

impl fmt::Display for ParamValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text)
    }
}

fn parse_decimal(s: &str) -> Option<BigRational> {
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let (int, frac) = body.split_once('.').unwrap_or((body, ""));
    if int.is_empty() && frac.is_empty() || !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let digits: num_bigint::BigInt = format!("0{int}{frac}").parse().ok()?;
    let scale = num_traits::pow(num_bigint::BigInt::from(10), frac.len());
    let v = BigRational::new(digits, scale);
    Some(if neg { -v } else { v })
}

impl FromStr for ParamValue {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let s = s.trim();
        let exact = if let Some((n, d)) = s.split_once('/') {
            let (n, d) = (parse_decimal(n.trim()), parse_decimal(d.trim()));
            match (n, d) {
                (Some(n), Some(d)) if !d.is_zero() => n / d,
                _ => return Err(format!("cannot read `{s}` as a fraction")),
            }
        } else {
            parse_decimal(s).ok_or_else(|| format!("cannot read `{s}` as a number"))?
        };
        Ok(Self { exact, text: s.to_string() })
    }
}

/// Evaluate a symbolic scalar exactly at rational parameters.
pub fn eval_at(x: &ParamScalar, p: &ParamValue, q: &ParamValue) -> Option<BigRational> {
    x.eval_exact(&p.exact, &q.exact).ok()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fractions_and_decimals() {
        let a: ParamValue = "1/3".parse().unwrap();
        assert_eq!(a.exact, BigRational::new(1.into(), 3.into()));
        let b: ParamValue = "0.25".parse().unwrap();
        assert_eq!(b.exact, BigRational::new(1.into(), 4.into()));
        assert!("x".parse::<ParamValue>().is_err());
        assert!("1/0".parse::<ParamValue>().is_err());
        assert!(!"1".parse::<ParamValue>().unwrap().in_unit_interval());
    }
}
