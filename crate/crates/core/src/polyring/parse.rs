//! Recursive-descent parser for polynomial expressions.
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := unary ('*' unary)*
//! unary   := ('-' | '+') unary | power
//! power   := atom ('^' integer)?
//! atom    := integer ('/' integer)? | identifier | '(' expr ')'
//! ```
//!
//! Juxtaposition (`2x`, `x y`) is rejected.

use thiserror::Error;

use super::Polynomial;
use crate::scalar::Coefficient;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("unknown variable `{name}` at position {position}")]
    UnknownVariable { position: usize, name: String },
}

impl ParseError {
    pub fn position(&self) -> usize {
        match self {
            ParseError::Syntax { position, .. } | ParseError::UnknownVariable { position, .. } => *position,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Int(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>, ParseError> {
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
            '+' => Token::Plus,
            '-' => Token::Minus,
            '*' => Token::Star,
            '/' => Token::Slash,
            '^' => Token::Caret,
            '(' => Token::LParen,
            ')' => Token::RParen,
            '0'..='9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((start, Token::Int(text[start..i].to_string())));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Token::Ident(text[start..i].to_string())));
                continue;
            }
            other => {
                return Err(ParseError::Syntax { position: start, message: format!("unexpected character `{other}`") })
            }
        };
        out.push((start, tok));
        i += 1;
    }
    out.push((text.len(), Token::End));
    Ok(out)
}

struct Parser<'a, C> {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    variables: &'a [&'a str],
    _coeff: std::marker::PhantomData<C>,
}

impl<C: Coefficient> Parser<'_, C> {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos].1
    }

    fn offset(&self) -> usize {
        self.tokens[self.pos].0
    }

    fn next(&mut self) -> Token {
        let t = self.tokens[self.pos].1.clone();
        if t != Token::End {
            self.pos += 1;
        }
        t
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::Syntax { position: self.offset(), message: message.into() })
    }

    fn nvars(&self) -> usize {
        self.variables.len()
    }

    fn expr(&mut self) -> Result<Polynomial<C>, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Token::Plus => {
                    self.next();
                    acc = &acc + &self.term()?;
                }
                Token::Minus => {
                    self.next();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial<C>, ParseError> {
        let mut acc = self.unary()?;
        while *self.peek() == Token::Star {
            self.next();
            acc = &acc * &self.unary()?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Polynomial<C>, ParseError> {
        match self.peek() {
            Token::Minus => {
                self.next();
                Ok(-self.unary()?)
            }
            Token::Plus => {
                self.next();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Polynomial<C>, ParseError> {
        let base = self.atom()?;
        if *self.peek() != Token::Caret {
            return Ok(base);
        }
        self.next();
        let Token::Int(digits) = self.peek().clone() else {
            return self.error("expected a non-negative integer exponent");
        };
        let Ok(e) = digits.parse::<u32>() else {
            return self.error("exponent too large");
        };
        self.next();
        Ok(base.pow(e))
    }

    fn integer(&self, digits: &str) -> Result<C, ParseError> {
        C::from_decimal(digits)
            .ok_or_else(|| ParseError::Syntax { position: self.offset(), message: format!("bad literal `{digits}`") })
    }

    fn atom(&mut self) -> Result<Polynomial<C>, ParseError> {
        let start = self.offset();
        if matches!(
            self.peek(),
            Token::End | Token::Plus | Token::Minus | Token::Star | Token::Slash | Token::Caret | Token::RParen
        ) {
            return self.error(format!("unexpected {}", describe(self.peek())));
        }
        match self.next() {
            Token::Int(digits) => {
                let mut value = self.integer(&digits)?;
                if *self.peek() == Token::Slash {
                    self.next();
                    let Token::Int(d) = self.peek().clone() else {
                        return self.error("expected an integer denominator");
                    };
                    let denom = self.integer(&d)?;
                    self.next();
                    if denom.is_zero() {
                        return Err(ParseError::Syntax { position: start, message: "zero denominator".into() });
                    }
                    value = value / denom;
                }
                Ok(Polynomial::constant(self.nvars(), value))
            }
            Token::Ident(name) => match self.variables.iter().position(|v| *v == name) {
                Some(i) => Ok(Polynomial::variable(self.nvars(), i)),
                None => Err(ParseError::UnknownVariable { position: start, name }),
            },
            Token::LParen => {
                let inner = self.expr()?;
                if *self.peek() != Token::RParen {
                    return self.error("expected `)`");
                }
                self.next();
                Ok(inner)
            }
            _ => unreachable!("operators rejected above"),
        }
    }
}

fn describe(t: &Token) -> String {
    match t {
        Token::End => "end of input".into(),
        Token::Int(d) => format!("number `{d}`"),
        Token::Ident(n) => format!("name `{n}`"),
        Token::Plus => "`+`".into(),
        Token::Minus => "`-`".into(),
        Token::Star => "`*`".into(),
        Token::Slash => "`/`".into(),
        Token::Caret => "`^`".into(),
        Token::LParen => "`(`".into(),
        Token::RParen => "`)`".into(),
    }
}

/// Parses `text` as a polynomial in `variables` (positional).
pub fn parse<C: Coefficient>(text: &str, variables: &[&str]) -> Result<Polynomial<C>, ParseError> {
    let tokens = tokenize(text)?;
    let mut parser = Parser { tokens, pos: 0, variables, _coeff: std::marker::PhantomData };
    let poly = parser.expr()?;
    if *parser.peek() != Token::End {
        let found = describe(parser.peek());
        return parser.error(format!("expected an operator or end of input, found {found}"));
    }
    Ok(poly)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Monomial, Poly, Rational};

    const XY: [&str; 2] = ["x", "y"];

    #[test]
    fn sums_of_squares() {
        let p: Poly = parse("x^2+y^2", &XY).unwrap();
        assert_eq!(p.num_terms(), 2);
        assert_eq!(p.coefficient(&Monomial::new(vec![2, 0])), Some(&Rational::from_integer(1.into())));
    }

    #[test]
    fn rational_literals() {
        let p: Poly = parse("-3/2*x*y + y^3", &XY).unwrap();
        assert_eq!(p.num_terms(), 2);
        assert_eq!(p.coefficient(&Monomial::new(vec![1, 1])), Some(&Rational::new((-3).into(), 2.into())));
    }

    #[test]
    fn cancellation_gives_zero() {
        let p: Poly = parse("x^2 - x^2", &XY).unwrap();
        assert!(p.is_zero());
    }

    #[test]
    fn parenthesised_powers() {
        let p: Poly = parse("(x+y)^2 - 2*x*y", &XY).unwrap();
        assert_eq!(p, parse("x^2+y^2", &XY).unwrap());
        let q: Poly = parse("-x^2", &XY).unwrap();
        assert_eq!(q, parse("-(x^2)", &XY).unwrap());
    }

    #[test]
    fn rejects_juxtaposition() {
        let err = parse::<Rational>("2x", &XY).unwrap_err();
        assert_eq!(err.position(), 1);
        assert!(parse::<Rational>("x y", &XY).is_err());
    }

    #[test]
    fn reports_unknown_variable() {
        let err = parse::<Rational>("x + w", &XY).unwrap_err();
        assert_eq!(err, ParseError::UnknownVariable { position: 4, name: "w".into() });
    }

    #[test]
    fn syntax_errors_have_positions() {
        assert_eq!(parse::<Rational>("x +", &XY).unwrap_err().position(), 3);
        assert_eq!(parse::<Rational>("(x", &XY).unwrap_err().position(), 2);
        assert_eq!(parse::<Rational>("x^y", &XY).unwrap_err().position(), 2);
        assert_eq!(parse::<Rational>("1/0", &XY).unwrap_err().position(), 0);
        assert_eq!(parse::<Rational>("x $ y", &XY).unwrap_err().position(), 2);
        assert!(parse::<Rational>("", &XY).is_err());
    }
}
