//! Expressions over the generators `a, b` of the 3-sphere, `f0, f1` of the
//! 2-sphere, the unitary `u`, the parameters `p, q` and rational literals.
//!
//! ```text
//! sum     := product (('+' | '-') product)*
//! product := unary (('*' | '/' | <juxtaposition>) unary)*
//! unary   := '-' unary | postfix
//! postfix := atom ('^*' | '^' ['-'] int)*
//! atom    := int | p | q | a | b | f0 | f1 | u | 'iota' '(' sum ')' | '(' sum ')'
//! ```

use std::fmt;

use num_bigint::BigInt;
use qhopf_core::s3core::S2Generator;
use qhopf_core::{Generator, ParseError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Num(BigInt),
    P,
    Q,
    Gen(Generator),
    F(S2Generator),
    U,
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Star(Box<Expr>),
    Pow(Box<Expr>, i64),
    Iota(Box<Expr>),
}

/// Which algebra an expression lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Scalar,
    Sphere3,
    Sphere2,
    Circle,
}

impl Family {
    fn name(self) -> &'static str {
        match self {
            Family::Scalar => "scalars",
            Family::Sphere3 => "a, b",
            Family::Sphere2 => "f0, f1",
            Family::Circle => "u",
        }
    }

    fn join(self, other: Family, pos: usize) -> Result<Family, ParseError> {
        match (self, other) {
            (Family::Scalar, f) | (f, Family::Scalar) => Ok(f),
            (f, g) if f == g => Ok(f),
            (Family::Sphere3, Family::Sphere2) | (Family::Sphere2, Family::Sphere3) => {
                Err(err(pos, "f-generators and a, b can only be combined through iota(...)"))
            }
            (f, g) => Err(err(pos, &format!("cannot combine {} with {}", f.name(), g.name()))),
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Num(n) => write!(f, "{n}"),
            Expr::P => write!(f, "p"),
            Expr::Q => write!(f, "q"),
            Expr::Gen(g) => write!(f, "{}", if matches!(g, Generator::A) { "a" } else { "b" }),
            Expr::F(g) => write!(f, "{g}"),
            Expr::U => write!(f, "u"),
            Expr::Add(x, y) => write!(f, "Add({x}, {y})"),
            Expr::Sub(x, y) => write!(f, "Sub({x}, {y})"),
            Expr::Mul(x, y) => write!(f, "Mul({x}, {y})"),
            Expr::Div(x, y) => write!(f, "Div({x}, {y})"),
            Expr::Neg(x) => write!(f, "Neg({x})"),
            Expr::Star(x) => write!(f, "Star({x})"),
            Expr::Pow(x, n) => write!(f, "Pow({x}, {n})"),
            Expr::Iota(x) => write!(f, "Iota({x})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn err(position: usize, message: &str) -> ParseError {
    ParseError { position, message: message.to_string() }
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let mut out = Vec::new();
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        let single = match c {
            '+' => Some(Tok::Plus),
            '-' | '−' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '/' => Some(Tok::Slash),
            '^' => Some(Tok::Caret),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(t) = single {
            out.push((t, pos));
            i += 1;
        } else if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].1.is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().map(|(_, c)| c).collect();
            out.push((Tok::Num(s.parse().expect("digits")), pos));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && (chars[i].1.is_ascii_alphanumeric() || chars[i].1 == '_') {
                i += 1;
            }
            out.push((Tok::Ident(chars[start..i].iter().map(|(_, c)| c).collect()), pos));
        } else {
            return Err(err(pos, &format!("unexpected character `{c}`")));
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    i: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.i).map(|(t, _)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.i).map_or(self.end, |(_, p)| *p)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.i).map(|(t, _)| t.clone());
        self.i += 1;
        t
    }

    fn expect(&mut self, t: Tok, what: &str) -> Result<(), ParseError> {
        if self.peek() == Some(&t) {
            self.i += 1;
            Ok(())
        } else {
            Err(err(self.pos(), &format!("expected {what}")))
        }
    }

    fn sum(&mut self) -> Result<(Expr, Family), ParseError> {
        let (mut lhs, mut fam) = self.product()?;
        while let Some(op @ (Tok::Plus | Tok::Minus)) = self.peek().cloned() {
            let pos = self.pos();
            self.i += 1;
            let (rhs, f) = self.product()?;
            fam = fam.join(f, pos)?;
            lhs = if op == Tok::Plus { Expr::Add(lhs.into(), rhs.into()) } else { Expr::Sub(lhs.into(), rhs.into()) };
        }
        Ok((lhs, fam))
    }

    fn starts_atom(&self) -> bool {
        matches!(self.peek(), Some(Tok::Num(_) | Tok::Ident(_) | Tok::LParen))
    }

    fn product(&mut self) -> Result<(Expr, Family), ParseError> {
        let (mut lhs, mut fam) = self.unary()?;
        loop {
            let pos = self.pos();
            match self.peek() {
                Some(Tok::Star) => {
                    self.i += 1;
                    let (rhs, f) = self.unary()?;
                    fam = fam.join(f, pos)?;
                    lhs = Expr::Mul(lhs.into(), rhs.into());
                }
                Some(Tok::Slash) => {
                    self.i += 1;
                    let (rhs, f) = self.unary()?;
                    if f != Family::Scalar {
                        return Err(err(pos, "only division by a scalar is supported"));
                    }
                    lhs = Expr::Div(lhs.into(), rhs.into());
                }
                _ if self.starts_atom() => {
                    let (rhs, f) = self.postfix()?;
                    fam = fam.join(f, pos)?;
                    lhs = Expr::Mul(lhs.into(), rhs.into());
                }
                _ => return Ok((lhs, fam)),
            }
        }
    }

    fn unary(&mut self) -> Result<(Expr, Family), ParseError> {
        if self.peek() == Some(&Tok::Minus) {
            self.i += 1;
            let (x, f) = self.unary()?;
            return Ok((Expr::Neg(x.into()), f));
        }
        self.postfix()
    }

    fn postfix(&mut self) -> Result<(Expr, Family), ParseError> {
        let (mut x, fam) = self.atom()?;
        while self.peek() == Some(&Tok::Caret) {
            let pos = self.pos();
            self.i += 1;
            match self.bump() {
                Some(Tok::Star) => x = Expr::Star(x.into()),
                Some(Tok::Num(n)) => x = Expr::Pow(x.into(), exponent(n, pos)?),
                Some(Tok::Minus) => match self.bump() {
                    Some(Tok::Num(n)) => {
                        if !matches!(fam, Family::Scalar | Family::Circle) {
                            return Err(err(pos, "negative powers are only defined for u and scalars"));
                        }
                        x = Expr::Pow(x.into(), -exponent(n, pos)?);
                    }
                    _ => return Err(err(pos + 1, "expected an integer exponent")),
                },
                _ => return Err(err(pos + 1, "expected `*` or an integer after `^`")),
            }
        }
        Ok((x, fam))
    }

    fn atom(&mut self) -> Result<(Expr, Family), ParseError> {
        let pos = self.pos();
        match self.bump() {
            Some(Tok::Num(n)) => Ok((Expr::Num(n), Family::Scalar)),
            Some(Tok::LParen) => {
                let inner = self.sum()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(inner)
            }
            Some(Tok::Ident(name)) => match name.as_str() {
                "p" => Ok((Expr::P, Family::Scalar)),
                "q" => Ok((Expr::Q, Family::Scalar)),
                "a" => Ok((Expr::Gen(Generator::A), Family::Sphere3)),
                "b" => Ok((Expr::Gen(Generator::B), Family::Sphere3)),
                "f0" => Ok((Expr::F(S2Generator::F0), Family::Sphere2)),
                "f1" => Ok((Expr::F(S2Generator::F1), Family::Sphere2)),
                "u" => Ok((Expr::U, Family::Circle)),
                "iota" => {
                    self.expect(Tok::LParen, "`(` after iota")?;
                    let (inner, f) = self.sum()?;
                    self.expect(Tok::RParen, "`)`")?;
                    if !matches!(f, Family::Scalar | Family::Sphere2) {
                        return Err(err(pos, "iota applies to expressions in f0, f1"));
                    }
                    Ok((Expr::Iota(inner.into()), Family::Sphere3))
                }
                other => Err(err(pos, &format!("unknown symbol `{other}`"))),
            },
            Some(_) => Err(err(pos, "expected an operand")),
            None => Err(err(pos, "unexpected end of input")),
        }
    }
}

fn exponent(n: BigInt, pos: usize) -> Result<i64, ParseError> {
    i64::try_from(&n).ok().filter(|k| *k <= 1 << 16).ok_or_else(|| err(pos, "exponent too large"))
}

/// Parse `text` into an expression and the algebra it lives in.
pub fn parse(text: &str) -> Result<(Expr, Family), ParseError> {
    let toks = lex(text)?;
    let mut p = Parser { toks, i: 0, end: text.len() };
    let out = p.sum()?;
    if p.i < p.toks.len() {
        return Err(err(p.pos(), "unexpected trailing input"));
    }
    Ok(out)
}
