//! Polynomial text grammar: integers, rationals `a/b`, identifiers,
//! `+ - * ^`, parentheses. No implicit multiplication; `^` takes a
//! nonnegative integer literal.

use super::{Polynomial, RingRef};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn tokens(mut self) -> Result<Vec<(Tok, usize)>> {
        let mut out = Vec::new();
        while self.pos < self.src.len() {
            let start = self.pos;
            let c = self.src[self.pos];
            match c {
                b' ' | b'\t' | b'\n' | b'\r' => {
                    self.pos += 1;
                }
                b'+' => {
                    out.push((Tok::Plus, start));
                    self.pos += 1;
                }
                b'-' => {
                    out.push((Tok::Minus, start));
                    self.pos += 1;
                }
                b'*' => {
                    out.push((Tok::Star, start));
                    self.pos += 1;
                }
                b'^' => {
                    out.push((Tok::Caret, start));
                    self.pos += 1;
                }
                b'/' => {
                    out.push((Tok::Slash, start));
                    self.pos += 1;
                }
                b'(' => {
                    out.push((Tok::LParen, start));
                    self.pos += 1;
                }
                b')' => {
                    out.push((Tok::RParen, start));
                    self.pos += 1;
                }
                b'0'..=b'9' => {
                    while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                        self.pos += 1;
                    }
                    let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                    out.push((Tok::Int(text.parse().unwrap()), start));
                }
                b'A'..=b'Z' | b'a'..=b'z' => {
                    while self.pos < self.src.len()
                        && (self.src[self.pos].is_ascii_alphanumeric()
                            || self.src[self.pos] == b'_')
                    {
                        self.pos += 1;
                    }
                    let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                    out.push((Tok::Ident(text.to_string()), start));
                }
                _ => {
                    return Err(Error::SyntaxError {
                        position: start,
                        message: format!("unexpected character `{}`", c as char),
                    })
                }
            }
        }
        Ok(out)
    }
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    ring: &'a RingRef,
    end: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map(|(_, p)| *p).unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(t, _)| t.clone());
        self.pos += 1;
        t
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::SyntaxError {
            position: self.here(),
            message: message.into(),
        })
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = match self.peek() {
            Some(Tok::Minus) => {
                self.bump();
                self.term()?.neg()
            }
            Some(Tok::Plus) => {
                self.bump();
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    let t = self.term()?;
                    acc = acc.add(&t);
                }
                Some(Tok::Minus) => {
                    self.bump();
                    let t = self.term()?;
                    acc = acc.sub(&t);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        while let Some(Tok::Star) = self.peek() {
            self.bump();
            let f = self.factor()?;
            acc = acc.mul(&f);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if let Some(Tok::Caret) = self.peek() {
            self.bump();
            match self.bump() {
                Some(Tok::Int(e)) => {
                    if e.is_negative() {
                        return self.err("exponent must be nonnegative");
                    }
                    let e: u32 = e
                        .try_into()
                        .map_err(|_| Error::SyntaxError {
                            position: self.here(),
                            message: "exponent too large".into(),
                        })?;
                    return Ok(base.pow(e));
                }
                _ => return self.err("expected integer exponent after `^`"),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial> {
        match self.bump() {
            Some(Tok::Int(n)) => {
                // rational literal a/b
                if let Some(Tok::Slash) = self.peek() {
                    self.bump();
                    match self.bump() {
                        Some(Tok::Int(d)) => {
                            if d.is_zero() {
                                return self.err("zero denominator");
                            }
                            Ok(Polynomial::constant(self.ring, BigRational::new(n, d)))
                        }
                        _ => self.err("expected integer denominator"),
                    }
                } else {
                    Ok(Polynomial::constant(self.ring, BigRational::from_integer(n)))
                }
            }
            Some(Tok::Ident(name)) => match self.ring.var_index(&name) {
                Some(i) => Ok(Polynomial::var(self.ring, i)),
                None => Err(Error::UndeclaredVariable(name)),
            },
            Some(Tok::LParen) => {
                let e = self.expr()?;
                match self.bump() {
                    Some(Tok::RParen) => Ok(e),
                    _ => self.err("expected `)`"),
                }
            }
            Some(Tok::Minus) => Ok(self.factor()?.neg()),
            _ => self.err("expected integer, variable, or `(`"),
        }
    }
}

/// Parses `text` into canonical form over `ring`.
pub fn parse_polynomial(text: &str, ring: &RingRef) -> Result<Polynomial> {
    let toks = Lexer {
        src: text.as_bytes(),
        pos: 0,
    }
    .tokens()?;
    let mut parser = Parser {
        toks,
        pos: 0,
        ring,
        end: text.len(),
    };
    let p = parser.expr()?;
    if parser.pos != parser.toks.len() {
        return parser.err("trailing input");
    }
    Ok(p)
}

pub(super) fn format_polynomial(p: &Polynomial, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if p.is_zero() {
        return write!(f, "0");
    }
    for (i, (m, c)) in p.terms().iter().enumerate() {
        let neg = c.is_negative();
        let abs = if neg { -c.clone() } else { c.clone() };
        if i == 0 {
            if neg {
                write!(f, "-")?;
            }
        } else if neg {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        let mut wrote_coeff = false;
        if !abs.is_one() || m.is_one() {
            if abs.denom().is_one() {
                write!(f, "{}", abs.numer())?;
            } else {
                write!(f, "{}/{}", abs.numer(), abs.denom())?;
            }
            wrote_coeff = true;
        }
        let mut first_var = true;
        for (j, &e) in m.exps().iter().enumerate() {
            if e == 0 {
                continue;
            }
            if wrote_coeff || !first_var {
                write!(f, "*")?;
            }
            first_var = false;
            write!(f, "{}", p.ring().var_name(j))?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
            wrote_coeff = true;
        }
    }
    Ok(())
}
