//! Tokenizer and recursive-descent parser for the shared text grammar.
//!
//! The grammar covers both bare Laurent polynomials (`3/2*q^-2 - 1 + q^4`)
//! and algebra expressions (`(q^-2 - 1) z1^2 xi`). Products are written by
//! juxtaposition or with `*`; a `*` written directly after an identifier
//! (no whitespace) marks the starred generator instead.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub pos: usize,
    pub message: String,
}

impl ParseError {
    pub(crate) fn new(pos: usize, message: impl Into<String>) -> Self {
        Self {
            pos,
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at byte {}: {}", self.pos, self.message)
    }
}

impl std::error::Error for ParseError {}

/// Untyped syntax tree; identifiers are resolved by the caller.
#[derive(Clone, Debug, PartialEq)]
pub enum Syntax {
    Number(Rational),
    Ident { name: String, starred: bool, pos: usize },
    Sum(Vec<Syntax>),
    Product(Vec<Syntax>),
    Neg(Box<Syntax>),
    Pow(Box<Syntax>, i64, usize),
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Star,
    Mul,
    Slash,
    Plus,
    Minus,
    Caret,
    LParen,
    RParen,
}

fn lex(input: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let bytes = input.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        if c.is_ascii_digit() {
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let n: BigInt = input[start..i].parse().expect("digits");
            out.push((Tok::Num(n), start));
            continue;
        }
        if c.is_ascii_alphabetic() {
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            while i < bytes.len() && bytes[i] == b'\'' {
                i += 1;
            }
            let mut name = input[start..i].to_string();
            // `c-` and `c+` are single generator names.
            if name == "c" && i < bytes.len() && (bytes[i] == b'-' || bytes[i] == b'+') {
                name.push(bytes[i] as char);
                i += 1;
            }
            out.push((Tok::Ident(name), start));
            if i < bytes.len() && bytes[i] == b'*' {
                out.push((Tok::Star, i));
                i += 1;
            }
            continue;
        }
        let tok = match c {
            '*' => Tok::Mul,
            '/' => Tok::Slash,
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '⊗' => return Err(ParseError::new(start, "tensor products are not expressions")),
            _ => return Err(ParseError::new(start, format!("unexpected character {c:?}"))),
        };
        out.push((tok, start));
        i += c.len_utf8();
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(t, _)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map(|(_, p)| *p).unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.at).map(|(t, _)| t.clone());
        self.at += 1;
        t
    }

    fn sum(&mut self) -> Result<Syntax, ParseError> {
        let mut terms = Vec::new();
        let mut negate = match self.peek() {
            Some(Tok::Minus) => {
                self.bump();
                true
            }
            Some(Tok::Plus) => {
                self.bump();
                false
            }
            _ => false,
        };
        loop {
            let t = self.product()?;
            terms.push(if negate { Syntax::Neg(Box::new(t)) } else { t });
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    negate = false;
                }
                Some(Tok::Minus) => {
                    self.bump();
                    negate = true;
                }
                _ => break,
            }
        }
        Ok(if terms.len() == 1 {
            terms.pop().unwrap()
        } else {
            Syntax::Sum(terms)
        })
    }

    fn product(&mut self) -> Result<Syntax, ParseError> {
        let mut factors = vec![self.power()?];
        loop {
            match self.peek() {
                Some(Tok::Mul) => {
                    self.bump();
                    factors.push(self.power()?);
                }
                Some(Tok::Num(_)) | Some(Tok::Ident(_)) | Some(Tok::LParen) => {
                    factors.push(self.power()?);
                }
                _ => break,
            }
        }
        Ok(if factors.len() == 1 {
            factors.pop().unwrap()
        } else {
            Syntax::Product(factors)
        })
    }

    fn power(&mut self) -> Result<Syntax, ParseError> {
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            let pos = self.pos();
            self.bump();
            let neg = if self.peek() == Some(&Tok::Minus) {
                self.bump();
                true
            } else {
                false
            };
            let epos = self.pos();
            match self.bump() {
                Some(Tok::Num(n)) => {
                    let e: i64 = n
                        .try_into()
                        .map_err(|_| ParseError::new(epos, "exponent too large"))?;
                    Ok(Syntax::Pow(Box::new(base), if neg { -e } else { e }, pos))
                }
                _ => Err(ParseError::new(epos, "expected integer exponent")),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Syntax, ParseError> {
        let pos = self.pos();
        match self.bump() {
            Some(Tok::Num(n)) => {
                if self.peek() == Some(&Tok::Slash) {
                    self.bump();
                    let dpos = self.pos();
                    match self.bump() {
                        Some(Tok::Num(d)) if !d.is_zero() => {
                            Ok(Syntax::Number(Rational::new(n, d)))
                        }
                        Some(Tok::Num(_)) => Err(ParseError::new(dpos, "zero denominator")),
                        _ => Err(ParseError::new(dpos, "expected denominator")),
                    }
                } else {
                    Ok(Syntax::Number(Rational::from_integer(n)))
                }
            }
            Some(Tok::Ident(name)) => {
                let starred = if self.peek() == Some(&Tok::Star) {
                    self.bump();
                    true
                } else {
                    false
                };
                Ok(Syntax::Ident { name, starred, pos })
            }
            Some(Tok::LParen) => {
                let inner = self.sum()?;
                match self.bump() {
                    Some(Tok::RParen) => Ok(inner),
                    _ => Err(ParseError::new(self.pos_before(), "expected ')'")),
                }
            }
            Some(t) => Err(ParseError::new(pos, format!("unexpected token {t:?}"))),
            None => Err(ParseError::new(pos, "unexpected end of input")),
        }
    }

    fn pos_before(&self) -> usize {
        self.toks
            .get(self.at.saturating_sub(1))
            .map(|(_, p)| *p)
            .unwrap_or(self.end)
    }
}

/// Parses a complete expression.
pub fn parse(input: &str) -> Result<Syntax, ParseError> {
    let toks = lex(input)?;
    if toks.is_empty() {
        return Err(ParseError::new(0, "empty expression"));
    }
    let mut p = Parser {
        toks,
        at: 0,
        end: input.len(),
    };
    let s = p.sum()?;
    if p.at < p.toks.len() {
        return Err(ParseError::new(p.pos(), "trailing input"));
    }
    Ok(s)
}
