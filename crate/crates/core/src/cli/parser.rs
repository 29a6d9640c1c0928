//! Polynomial expression grammar.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := ('+' | '-') unary | power
//! power  := atom ('^' INT)?
//! atom   := INT ('/' INT)? | 'x' | 'y' | '(' expr ')'
//! ```
//!
//! Multiplication must be written explicitly; `x5y` and `2x` are rejected.

use std::fmt;

use thiserror::Error;

use crate::ring::{Coefficient, Poly};

/// Largest accepted exponent.
pub const MAX_EXPONENT: u64 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at offset {offset}: expected {}, found {found}", expected.join(" or "))]
    Syntax {
        offset: usize,
        expected: Vec<&'static str>,
        found: String,
    },
    #[error("exponent at offset {offset} exceeds {MAX_EXPONENT}")]
    ExponentTooLarge { offset: usize },
    #[error("division by zero in rational literal at offset {offset}")]
    ZeroDenominator { offset: usize },
    #[error("literal at offset {offset} does not fit the coefficient type")]
    LiteralOutOfRange { offset: usize },
}

impl ParseError {
    pub fn offset(&self) -> usize {
        match self {
            ParseError::Syntax { offset, .. }
            | ParseError::ExponentTooLarge { offset }
            | ParseError::ZeroDenominator { offset }
            | ParseError::LiteralOutOfRange { offset } => *offset,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Tok<'a> {
    Int(&'a str),
    X,
    Y,
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
    End,
    Bad(char),
}

impl fmt::Display for Tok<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Int(s) => write!(f, "`{s}`"),
            Tok::X => f.write_str("`x`"),
            Tok::Y => f.write_str("`y`"),
            Tok::Plus => f.write_str("`+`"),
            Tok::Minus => f.write_str("`-`"),
            Tok::Star => f.write_str("`*`"),
            Tok::Caret => f.write_str("`^`"),
            Tok::Slash => f.write_str("`/`"),
            Tok::LParen => f.write_str("`(`"),
            Tok::RParen => f.write_str("`)`"),
            Tok::End => f.write_str("end of input"),
            Tok::Bad(c) => write!(f, "`{c}`"),
        }
    }
}

struct Lexer<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn next_token(&mut self) -> (usize, Tok<'a>) {
        let bytes = self.src.as_bytes();
        while self.pos < bytes.len() && bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        let start = self.pos;
        let Some(c) = self.src[start..].chars().next() else {
            return (start, Tok::End);
        };
        self.pos += c.len_utf8();
        let tok = match c {
            '0'..='9' => {
                while self.pos < bytes.len() && bytes[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                Tok::Int(&self.src[start..self.pos])
            }
            'x' => Tok::X,
            'y' => Tok::Y,
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '/' => Tok::Slash,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            other => Tok::Bad(other),
        };
        (start, tok)
    }
}

struct Parser<'a> {
    lexer: Lexer<'a>,
    peeked: (usize, Tok<'a>),
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        let mut lexer = Lexer { src, pos: 0 };
        let peeked = lexer.next_token();
        Parser { lexer, peeked }
    }

    fn bump(&mut self) -> (usize, Tok<'a>) {
        std::mem::replace(&mut self.peeked, self.lexer.next_token())
    }

    fn error(&self, expected: &[&'static str]) -> ParseError {
        ParseError::Syntax {
            offset: self.peeked.0,
            expected: expected.to_vec(),
            found: self.peeked.1.to_string(),
        }
    }

    fn expr<C: Coefficient>(&mut self) -> Result<Poly<C>, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peeked.1 {
                Tok::Plus => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term<C: Coefficient>(&mut self) -> Result<Poly<C>, ParseError> {
        let mut acc = self.unary()?;
        while self.peeked.1 == Tok::Star {
            self.bump();
            acc = &acc * &self.unary()?;
        }
        Ok(acc)
    }

    fn unary<C: Coefficient>(&mut self) -> Result<Poly<C>, ParseError> {
        match self.peeked.1 {
            Tok::Minus => {
                self.bump();
                Ok(-self.unary()?)
            }
            Tok::Plus => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power<C: Coefficient>(&mut self) -> Result<Poly<C>, ParseError> {
        let base = self.atom()?;
        if self.peeked.1 != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let (offset, tok) = self.peeked;
        let Tok::Int(digits) = tok else {
            return Err(self.error(&["integer exponent"]));
        };
        self.bump();
        let exp = digits
            .parse::<u64>()
            .ok()
            .filter(|&e| e <= MAX_EXPONENT)
            .ok_or(ParseError::ExponentTooLarge { offset })?;
        Ok(base.pow(exp as u32))
    }

    fn atom<C: Coefficient>(&mut self) -> Result<Poly<C>, ParseError> {
        match self.peeked.1 {
            Tok::X => {
                self.bump();
                Ok(Poly::x())
            }
            Tok::Y => {
                self.bump();
                Ok(Poly::y())
            }
            Tok::LParen => {
                self.bump();
                let inner = self.expr()?;
                if self.peeked.1 != Tok::RParen {
                    return Err(self.error(&["`)`", "operator"]));
                }
                self.bump();
                Ok(inner)
            }
            Tok::Int(digits) => {
                let (start, _) = self.bump();
                let numer = integer::<C>(digits, start)?;
                if self.peeked.1 != Tok::Slash {
                    return Ok(Poly::constant(numer));
                }
                self.bump();
                let (offset, tok) = self.peeked;
                let Tok::Int(den) = tok else {
                    return Err(self.error(&["integer denominator"]));
                };
                self.bump();
                let denom = integer::<C>(den, offset)?;
                if denom.is_zero() {
                    return Err(ParseError::ZeroDenominator { offset });
                }
                Ok(Poly::constant(numer / denom))
            }
            _ => Err(self.error(&["number", "`x`", "`y`", "`(`"])),
        }
    }
}

fn integer<C: Coefficient>(digits: &str, offset: usize) -> Result<C, ParseError> {
    // Rational types parse only the `numer/denom` form.
    C::from_str_radix(digits, 10)
        .or_else(|_| C::from_str_radix(&format!("{digits}/1"), 10))
        .map_err(|_| ParseError::LiteralOutOfRange { offset })
}

/// Parse a polynomial expression.
pub fn parse_poly<C: Coefficient>(text: &str) -> Result<Poly<C>, ParseError> {
    let mut p = Parser::new(text);
    let poly = p.expr()?;
    if p.peeked.1 != Tok::End {
        return Err(p.error(&["operator", "end of input"]));
    }
    Ok(poly)
}
