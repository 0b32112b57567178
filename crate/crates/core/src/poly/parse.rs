//! Recursive-descent parser for polynomial text.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := signed ('*' signed | '/' INT)*
//! signed := ('+' | '-')* power
//! power  := atom ('^' INT)?
//! atom   := INT [IDENT | '(' expr ')'] | IDENT | '(' expr ')'
//! ```
//!
//! A number may be followed directly by a variable or a parenthesis (`3x`,
//! `2(x+y)`); variables must be separated by `*`.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use super::polynomial::{Polynomial, Variables};
use crate::error::{Error, Result};
use crate::scalar::Field;

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let tok = match c {
            '0'..='9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((start, Token::Int(text[start..i].parse().expect("digits"))));
                continue;
            }
            c if c.is_ascii_alphabetic() => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Token::Ident(text[start..i].to_string())));
                continue;
            }
            '+' => Token::Plus,
            '-' => Token::Minus,
            '*' => Token::Star,
            '/' => Token::Slash,
            '^' => Token::Caret,
            '(' => Token::LParen,
            ')' => Token::RParen,
            other => return Err(Error::parse(start, format!("unexpected character `{other}`"))),
        };
        out.push((start, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a, F> {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end: usize,
    vars: &'a Variables,
    _field: std::marker::PhantomData<F>,
}

impl<F: Field> Parser<'_, F> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn constant(&self, n: &BigInt, d: &BigInt, at: usize) -> Result<Polynomial<F>> {
        let c = F::from_ratio(n, d).ok_or_else(|| Error::parse(at, "coefficient does not fit the field"))?;
        Ok(Polynomial::constant(self.vars.clone(), c))
    }

    fn expr(&mut self) -> Result<Polynomial<F>> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.bump();
                    acc = acc.add(&self.term()?);
                }
                Some(Token::Minus) => {
                    self.bump();
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial<F>> {
        let mut acc = self.signed()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.bump();
                    acc = acc.mul(&self.signed()?);
                }
                Some(Token::Slash) => {
                    self.bump();
                    let at = self.offset();
                    match self.bump() {
                        Some(Token::Int(d)) if !d.is_zero() => {
                            acc = acc.mul(&self.constant(&BigInt::one(), &d, at)?);
                            // `3/2x` reads as `(3/2)*x`.
                            if matches!(self.peek(), Some(Token::Ident(_)) | Some(Token::LParen)) {
                                acc = acc.mul(&self.power()?);
                            }
                        }
                        Some(Token::Int(_)) => return Err(Error::parse(at, "division by zero")),
                        _ => return Err(Error::parse(at, "division is only allowed by an integer literal")),
                    }
                }
                _ => return Ok(acc),
            }
        }
    }

    fn signed(&mut self) -> Result<Polynomial<F>> {
        let mut negate = false;
        while let Some(t) = self.peek() {
            match t {
                Token::Minus => negate = !negate,
                Token::Plus => {}
                _ => break,
            }
            self.bump();
        }
        let p = self.power()?;
        Ok(if negate { p.neg() } else { p })
    }

    fn power(&mut self) -> Result<Polynomial<F>> {
        let base = self.atom()?;
        if self.peek() != Some(&Token::Caret) {
            return Ok(base);
        }
        self.bump();
        let at = self.offset();
        match self.bump() {
            Some(Token::Int(e)) => {
                let e = e.to_u32().ok_or_else(|| Error::parse(at, "exponent too large"))?;
                Ok(base.pow(e))
            }
            _ => Err(Error::parse(at, "malformed exponent: expected a nonnegative integer")),
        }
    }

    fn atom(&mut self) -> Result<Polynomial<F>> {
        let at = self.offset();
        match self.bump() {
            Some(Token::Int(n)) => {
                let c = self.constant(&n, &BigInt::one(), at)?;
                if matches!(self.peek(), Some(Token::Ident(_)) | Some(Token::LParen)) {
                    return Ok(c.mul(&self.power()?));
                }
                Ok(c)
            }
            Some(Token::Ident(name)) => match self.vars.index_of(&name) {
                Some(i) => Ok(Polynomial::variable(self.vars.clone(), i)),
                None => Err(Error::parse(at, format!("unknown variable `{name}`"))),
            },
            Some(Token::LParen) => {
                let inner = self.expr()?;
                let close = self.offset();
                match self.bump() {
                    Some(Token::RParen) => Ok(inner),
                    _ => Err(Error::parse(close, "expected `)`")),
                }
            }
            Some(_) => Err(Error::parse(at, "unexpected token")),
            None => Err(Error::parse(at, "unexpected end of input")),
        }
    }
}

/// Parses `text` as a polynomial in the given ring.
pub fn parse_in<F: Field>(text: &str, vars: &Variables) -> Result<Polynomial<F>> {
    let tokens = tokenize(text)?;
    let mut p = Parser { tokens, pos: 0, end: text.len(), vars, _field: std::marker::PhantomData };
    let poly = p.expr()?;
    if p.pos < p.tokens.len() {
        return Err(Error::parse(p.offset(), "unexpected trailing input"));
    }
    Ok(poly)
}

/// Parses `text` with rational coefficients over the named variables.
pub fn parse_polynomial<S: AsRef<str>>(text: &str, variables: &[S]) -> Result<Polynomial> {
    parse_in(text, &Variables::new(variables)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Monomial;
    use crate::Rational;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn parses_session_inputs() {
        let p = parse_polynomial("x+y+1", &["x", "y"]).unwrap();
        assert_eq!(p.num_terms(), 3);
        assert_eq!(p.coefficient(&Monomial(vec![0, 0])), q(1, 1));
        assert_eq!(p.coefficient(&Monomial(vec![1, 0])), q(1, 1));

        let g = parse_polynomial("x^2+y^2+z^2", &["x", "y", "z"]).unwrap();
        assert_eq!(g.num_terms(), 3);
        assert_eq!(g.degree(), Some(2));
        assert!(g.is_homogeneous());
    }

    #[test]
    fn expansion_identity_gives_zero() {
        let p = parse_polynomial("(x+y)^2 - x^2 - y^2 - 2*x*y", &["x", "y"]).unwrap();
        assert!(p.is_zero());
    }

    #[test]
    fn coefficients_and_juxtaposition() {
        let p = parse_polynomial("3/2*x - 2y + 3/4x", &["x", "y"]).unwrap();
        assert_eq!(p.coefficient(&Monomial(vec![1, 0])), q(9, 4));
        assert_eq!(p.coefficient(&Monomial(vec![0, 1])), q(-2, 1));
        let p = parse_polynomial("-x^2", &["x"]).unwrap();
        assert_eq!(p.coefficient(&Monomial(vec![2])), q(-1, 1));
        let p = parse_polynomial("2(x+1)", &["x"]).unwrap();
        assert_eq!(p.to_string(), "2*x+2");
    }

    #[test]
    fn errors_carry_positions() {
        let err = |s: &str| parse_polynomial(s, &["x", "y"]).unwrap_err();
        assert_eq!(err("x+z"), Error::Parse { position: 2, message: "unknown variable `z`".into() });
        assert!(matches!(err("x^-1"), Error::Parse { position: 2, .. }));
        assert!(matches!(err("x^y"), Error::Parse { position: 2, .. }));
        assert!(matches!(err("x/y"), Error::Parse { position: 2, .. }));
        assert!(matches!(err("x/0"), Error::Parse { .. }));
        assert!(matches!(err("xy"), Error::Parse { position: 0, .. }));
        assert!(matches!(err("(x+y"), Error::Parse { position: 4, .. }));
        assert!(matches!(err("x.5"), Error::Parse { position: 1, .. }));
    }
}
