//! Text form of polynomials.
//!
//! Grammar: integer literals, declared variable names, `+ - * ^` and parentheses.
//! `^` binds tightest and takes a non-negative integer literal; multiplication must be
//! written explicitly.

use std::fmt;
use std::sync::Arc;

use super::poly::{PolyRing, Polynomial};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let start = i;
        match c {
            ' ' | '\t' | '\n' | '\r' => {
                i += 1;
                continue;
            }
            '+' => out.push((start, Tok::Plus)),
            '-' => out.push((start, Tok::Minus)),
            '*' => out.push((start, Tok::Star)),
            '^' => out.push((start, Tok::Caret)),
            '(' => out.push((start, Tok::LParen)),
            ')' => out.push((start, Tok::RParen)),
            '0'..='9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((start, Tok::Int(text[start..i].to_string())));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Tok::Ident(text[start..i].to_string())));
                continue;
            }
            other => {
                return Err(Error::Parse {
                    pos: start,
                    msg: format!("unexpected character {other:?}"),
                })
            }
        }
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
    ring: &'a Arc<PolyRing>,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos(),
            msg: msg.into(),
        })
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.at += 1;
                    acc = acc.checked_add(&self.term()?)?;
                }
                Some(Tok::Minus) => {
                    self.at += 1;
                    acc = acc.checked_sub(&self.term()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.at += 1;
                    acc = acc.checked_mul(&self.unary()?)?;
                }
                Some(Tok::Int(_) | Tok::Ident(_) | Tok::LParen) => {
                    return self.err("implicit multiplication is not allowed; use '*'")
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Polynomial> {
        if let Some(Tok::Minus) = self.peek() {
            self.at += 1;
            return Ok(self.unary()?.neg());
        }
        if let Some(Tok::Plus) = self.peek() {
            self.at += 1;
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if let Some(Tok::Caret) = self.peek() {
            self.at += 1;
            match self.peek().cloned() {
                Some(Tok::Int(s)) => {
                    let e: u64 = match s.parse() {
                        Ok(e) if e <= u32::MAX as u64 => e,
                        _ => return Err(Error::ExponentOverflow),
                    };
                    self.at += 1;
                    if let Some(Tok::Caret) = self.peek() {
                        return self.err("chained '^' is ambiguous; use parentheses");
                    }
                    return base.pow(e);
                }
                Some(Tok::Minus) => return self.err("negative exponent"),
                _ => return self.err("expected a non-negative integer exponent"),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial> {
        match self.peek().cloned() {
            Some(Tok::Int(s)) => {
                self.at += 1;
                let p = self.ring.characteristic() as u64;
                let v = s.bytes().fold(0u64, |acc, d| (acc * 10 + (d - b'0') as u64) % p);
                Ok(self.ring.constant(v as i64))
            }
            Some(Tok::Ident(name)) => match self.ring.var_index(&name) {
                Some(i) => {
                    self.at += 1;
                    Ok(self.ring.var(i))
                }
                None => self.err(format!("unknown identifier {name:?}")),
            },
            Some(Tok::LParen) => {
                self.at += 1;
                let inner = self.expr()?;
                match self.peek() {
                    Some(Tok::RParen) => {
                        self.at += 1;
                        Ok(inner)
                    }
                    _ => self.err("expected ')'"),
                }
            }
            Some(t) => self.err(format!("unexpected token {t:?}")),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses a polynomial over `ring`; coefficients are reduced mod p.
pub fn parse_poly(text: &str, ring: &Arc<PolyRing>) -> Result<Polynomial> {
    let toks = lex(text)?;
    let mut parser = Parser {
        toks,
        at: 0,
        end: text.len(),
        ring,
    };
    let f = parser.expr()?;
    if parser.at != parser.toks.len() {
        return parser.err("trailing input");
    }
    Ok(f)
}

/// Parses a comma-separated list of polynomials. Empty text gives an empty list.
pub fn parse_poly_list(text: &str, ring: &Arc<PolyRing>) -> Result<Vec<Polynomial>> {
    let mut out = Vec::new();
    let mut offset = 0;
    if text.trim().is_empty() {
        return Ok(out);
    }
    for piece in text.split(',') {
        let f = parse_poly(piece, ring).map_err(|e| match e {
            Error::Parse { pos, msg } => Error::Parse {
                pos: pos + offset,
                msg,
            },
            other => other,
        })?;
        out.push(f);
        offset += piece.len() + 1;
    }
    Ok(out)
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let ring = self.ring();
        let field = ring.field();
        for (k, (m, c)) in self.terms().iter().enumerate() {
            let s = field.signed(*c);
            let (neg, mag) = (s < 0, s.unsigned_abs());
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if mag != 1 || m.is_one() {
                factors.push(mag.to_string());
            }
            for (i, &e) in m.exponents().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(ring.vars()[i].clone()),
                    e => factors.push(format!("{}^{}", ring.vars()[i], e)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}
