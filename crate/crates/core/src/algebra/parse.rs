//! Recursive-descent reader for polynomial text.
//!
//! Accepts the canonical output of `Polynomial`'s `Display` plus products of
//! parenthesized factors and integer powers, e.g. `(x_1 - x_2)^2*x_3 - 1/2`.

use num_bigint::BigInt;

use super::polynomial::Polynomial;
use super::var::VarId;
use super::Rational;
use crate::error::Error;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Var(VarId),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(s: &str) -> Result<Vec<Tok>, Error> {
    let bytes = s.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                out.push(Tok::Plus);
                i += 1
            }
            '-' => {
                out.push(Tok::Minus);
                i += 1
            }
            '*' => {
                out.push(Tok::Star);
                i += 1
            }
            '/' => {
                out.push(Tok::Slash);
                i += 1
            }
            '^' => {
                out.push(Tok::Caret);
                i += 1
            }
            '(' => {
                out.push(Tok::LParen);
                i += 1
            }
            ')' => {
                out.push(Tok::RParen);
                i += 1
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = s[start..i].parse().expect("digits");
                out.push(Tok::Num(n));
            }
            'a'..='z' => {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push(Tok::Var(s[start..i].parse()?));
            }
            _ => return Err(Error::Parse(format!("unexpected character `{c}` at offset {i}"))),
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<Polynomial, Error> {
        let mut neg = false;
        match self.peek() {
            Some(Tok::Minus) => {
                neg = true;
                self.pos += 1;
            }
            Some(Tok::Plus) => self.pos += 1,
            _ => {}
        }
        let first = self.term()?;
        let mut acc = if neg { -first } else { first };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = acc + t;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = acc - t;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, Error> {
        let mut acc = self.factor()?;
        while let Some(Tok::Star) = self.peek() {
            self.pos += 1;
            let f = self.factor()?;
            acc = &acc * &f;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial, Error> {
        let base = self.atom()?;
        if let Some(Tok::Caret) = self.peek() {
            self.pos += 1;
            match self.next() {
                Some(Tok::Num(n)) => {
                    let e: u32 = n
                        .try_into()
                        .map_err(|_| Error::Parse("exponent too large".into()))?;
                    return Ok(base.pow(e));
                }
                other => return Err(Error::Parse(format!("expected exponent, found {other:?}"))),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial, Error> {
        match self.next() {
            Some(Tok::Num(n)) => {
                if let Some(Tok::Slash) = self.peek() {
                    self.pos += 1;
                    match self.next() {
                        Some(Tok::Num(d)) if d != BigInt::from(0) => {
                            Ok(Polynomial::constant(Rational::new(n, d)))
                        }
                        other => Err(Error::Parse(format!("bad denominator {other:?}"))),
                    }
                } else {
                    Ok(Polynomial::constant(Rational::from_integer(n)))
                }
            }
            Some(Tok::Var(v)) => Ok(Polynomial::var(v)),
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                match self.next() {
                    Some(Tok::RParen) => Ok(inner),
                    other => Err(Error::Parse(format!("expected `)`, found {other:?}"))),
                }
            }
            Some(Tok::Minus) => {
                // `2*-x_1` style unary minus inside a product
                let a = self.factor()?;
                Ok(-a)
            }
            other => Err(Error::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

pub fn parse_polynomial(s: &str) -> Result<Polynomial, Error> {
    let toks = tokenize(s)?;
    if toks.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut p = Parser { toks, pos: 0 };
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::Parse(format!(
            "trailing input after polynomial: {:?}",
            &p.toks[p.pos..]
        )));
    }
    Ok(out)
}

/// Parses a `*`-separated product of factors into its factor list without
/// expanding it. Each parenthesized group and each bare atom is one factor.
pub fn parse_factors(s: &str) -> Result<Vec<Polynomial>, Error> {
    let toks = tokenize(s)?;
    let mut p = Parser { toks, pos: 0 };
    let mut out = Vec::new();
    loop {
        let f = p.factor()?;
        out.push(f);
        match p.peek() {
            Some(Tok::Star) => p.pos += 1,
            None => break,
            Some(t) => return Err(Error::Parse(format!("unexpected {t:?} in product"))),
        }
    }
    Ok(out)
}
