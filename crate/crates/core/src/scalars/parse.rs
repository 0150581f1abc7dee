//! Parser for the text form of [`ParamScalar`].
//!
//! Accepts integers, `p`, `q`, `+ - * /`, `^` with an integer exponent and
//! parentheses. Everything the `Display` impl produces parses back to the same
//! value.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::ParamScalar;
use crate::error::ParseError;

impl FromStr for ParamScalar {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut parser = Parser { src: s.as_bytes(), pos: 0 };
        let v = parser.expr()?;
        parser.skip_ws();
        if parser.pos != parser.src.len() {
            return Err(parser.error("unexpected trailing input"));
        }
        Ok(v)
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> ParseError {
        ParseError { position: self.pos, message: msg.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<ParamScalar, ParseError> {
        let mut acc = self.term()?;
        while let Some(c @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if c == b'+' { acc + rhs } else { acc - rhs };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<ParamScalar, ParseError> {
        let mut acc = self.unary()?;
        while let Some(c @ (b'*' | b'/')) = self.peek() {
            self.pos += 1;
            let at = self.pos;
            let rhs = self.unary()?;
            acc = if c == b'*' {
                acc * rhs
            } else {
                acc.checked_div(&rhs).map_err(|_| ParseError { position: at, message: "division by zero".into() })?
            };
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<ParamScalar, ParseError> {
        if self.peek() == Some(b'-') {
            self.pos += 1;
            return Ok(-self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<ParamScalar, ParseError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let neg = if self.peek() == Some(b'-') {
                self.pos += 1;
                true
            } else {
                false
            };
            let at = self.pos;
            let k = self.integer()?;
            let k: i64 = k.try_into().map_err(|_| self.error("exponent too large"))?;
            let k = if neg { -k } else { k };
            return base.pow(k).map_err(|_| ParseError { position: at, message: "negative power of zero".into() });
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected integer"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(digits.parse().expect("ascii digits"))
    }

    fn atom(&mut self) -> Result<ParamScalar, ParseError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(v)
            }
            Some(b'p') => {
                self.pos += 1;
                Ok(ParamScalar::p())
            }
            Some(b'q') => {
                self.pos += 1;
                Ok(ParamScalar::q())
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(ParamScalar::from_rational(BigRational::from_integer(n)))
            }
            Some(_) => Err(self.error("unexpected character")),
            None => Err(self.error("unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_canonical_forms() {
        for s in ["(1 - q^2)/(1 - p)", "1/(1 - q)", "1 + q + q^2", "-q", "1/q^2", "0", "-1/2*p*q + 3"] {
            let v: ParamScalar = s.parse().unwrap();
            let again: ParamScalar = v.to_string().parse().unwrap();
            assert_eq!(v, again, "{s}");
        }
        let x: ParamScalar = "(1 - q^2)/(1 - p)".parse().unwrap();
        assert_eq!(x.to_string(), "(1 - q^2)/(1 - p)");
    }

    #[test]
    fn reports_position() {
        let err = "1 + * q".parse::<ParamScalar>().unwrap_err();
        assert_eq!(err.position, 4);
        assert!("1/(q - q)".parse::<ParamScalar>().is_err());
        assert!("(1 + q".parse::<ParamScalar>().is_err());
    }

    #[test]
    fn cancellation_through_text() {
        let x: ParamScalar = "(1 - q^2)/(1 - q)".parse().unwrap();
        assert_eq!(x.to_string(), "1 + q");
    }
}
