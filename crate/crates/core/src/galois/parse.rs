//! Text form of polynomials.
//!
//! ```text
//! poly  := "0" | ["-"] term ((" + " | " - ") term)*
//! term  := coeff | [coeff "*"] factor ("*" factor)*
//! factor:= var ["^" exponent]
//! ```
//!
//! Coefficients are decimal and reduced mod p. Canonical output lists terms in
//! descending graded-lex order with coefficients in `[1, p)` joined by `" + "`.

use super::field::reduce_i64;
use super::poly::{Monomial, Poly, PolyRing};
use crate::error::{Error, Result};

pub(crate) struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    pub(crate) fn new(src: &'a str) -> Self {
        Cursor {
            src: src.as_bytes(),
            pos: 0,
        }
    }

    pub(crate) fn pos(&self) -> usize {
        self.pos
    }

    pub(crate) fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            position: self.pos,
            message: message.into(),
        })
    }

    pub(crate) fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    pub(crate) fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    pub(crate) fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    pub(crate) fn eat(&mut self, byte: u8) -> bool {
        if self.peek() == Some(byte) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    pub(crate) fn number(&mut self) -> Result<u64> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.error("expected a number");
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| Error::Parse {
                position: start,
                message: "number out of range".into(),
            })
    }

    pub(crate) fn ident(&mut self) -> Result<&'a str> {
        let start = self.pos;
        if !self.peek().is_some_and(|b| b.is_ascii_alphabetic() || b == b'_') {
            return self.error("expected a variable name");
        }
        while self.peek().is_some_and(|b| b.is_ascii_alphanumeric() || b == b'_') {
            self.pos += 1;
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).unwrap())
    }

    /// Parses a signed sum of terms, handing each term body to `term`.
    pub(crate) fn signed_terms<T>(&mut self, mut term: impl FnMut(&mut Self) -> Result<T>) -> Result<Vec<(bool, T)>> {
        let mut out = Vec::new();
        self.skip_ws();
        let mut negative = self.eat(b'-');
        loop {
            self.skip_ws();
            out.push((negative, term(self)?));
            self.skip_ws();
            if self.at_end() {
                return Ok(out);
            }
            negative = match self.peek() {
                Some(b'+') => false,
                Some(b'-') => true,
                _ => return self.error("expected '+' or '-'"),
            };
            self.pos += 1;
        }
    }
}

pub fn parse(ring: &PolyRing, text: &str) -> Result<Poly> {
    let mut cur = Cursor::new(text);
    if text.trim().is_empty() {
        return cur.error("empty input");
    }
    let terms = cur.signed_terms(|cur| parse_term(ring, cur))?;
    let p = ring.modulus();
    let terms = terms
        .into_iter()
        .map(|(neg, (m, c))| (m, if neg { reduce_i64(-(c as i64), p) } else { c }))
        .collect();
    Ok(ring.from_terms(terms))
}

fn parse_term(ring: &PolyRing, cur: &mut Cursor<'_>) -> Result<(Monomial, u32)> {
    let p = ring.modulus() as u64;
    let mut exps = vec![0u32; ring.arity()];
    let mut coeff = 1u64;
    let mut first = true;
    loop {
        cur.skip_ws();
        if cur.peek().is_some_and(|b| b.is_ascii_digit()) {
            if !first {
                return cur.error("coefficient must come first in a term");
            }
            coeff = cur.number()? % p;
        } else {
            let at = cur.pos();
            let name = cur.ident()?;
            let idx = ring.var_index(name).ok_or_else(|| Error::Parse {
                position: at,
                message: format!("unknown variable {name:?}"),
            })?;
            cur.skip_ws();
            let e = if cur.eat(b'^') {
                cur.skip_ws();
                let e = cur.number()?;
                u32::try_from(e).or_else(|_| cur.error("exponent out of range"))?
            } else {
                1
            };
            exps[idx] = exps[idx].checked_add(e).ok_or_else(|| Error::Parse {
                position: at,
                message: "exponent out of range".into(),
            })?;
        }
        first = false;
        cur.skip_ws();
        if !cur.eat(b'*') {
            break;
        }
    }
    Ok((Monomial::new(&exps), coeff as u32))
}
