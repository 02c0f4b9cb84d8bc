//! Parser for the canonical string form (and ordinary infix input).
//!
//! Grammar: sums and differences of products and quotients of signed
//! powers; exponents are integers; atoms are integers, symbols and
//! parenthesized expressions.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::AlgebraError;
use crate::ratfunc::RationalFunction;
use crate::space::ParameterSpace;

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Int(BigInt),
    Ident(String),
    Op(char),
}

fn tokenize(s: &str) -> Result<Vec<Token>, AlgebraError> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let j = (i..chars.len())
                .find(|&j| !chars[j].is_ascii_digit())
                .unwrap_or(chars.len());
            let digits: String = chars[i..j].iter().collect();
            out.push(Token::Int(digits.parse().unwrap()));
            i = j;
        } else if c.is_ascii_alphabetic() || c == '_' {
            let j = (i..chars.len())
                .find(|&j| !(chars[j].is_ascii_alphanumeric() || chars[j] == '_'))
                .unwrap_or(chars.len());
            out.push(Token::Ident(chars[i..j].iter().collect()));
            i = j;
        } else if "+-*/^()".contains(c) {
            out.push(Token::Op(c));
            i += 1;
        } else {
            return Err(AlgebraError::Parse(format!("unexpected character `{}`", c)));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    space: Option<&'a Arc<ParameterSpace>>,
}

impl<'a> Parser<'a> {
    fn peek_op(&self) -> Option<char> {
        match self.tokens.get(self.pos) {
            Some(Token::Op(c)) => Some(*c),
            _ => None,
        }
    }

    fn expect(&mut self, c: char) -> Result<(), AlgebraError> {
        if self.peek_op() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(AlgebraError::Parse(format!("expected `{}`", c)))
        }
    }

    fn expr(&mut self) -> Result<RationalFunction, AlgebraError> {
        let mut acc = self.term()?;
        while let Some(op) = self.peek_op() {
            match op {
                '+' => {
                    self.pos += 1;
                    acc = acc.try_add(&self.term()?)?;
                }
                '-' => {
                    self.pos += 1;
                    acc = acc.try_sub(&self.term()?)?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<RationalFunction, AlgebraError> {
        let mut acc = self.unary()?;
        while let Some(op) = self.peek_op() {
            match op {
                '*' => {
                    self.pos += 1;
                    acc = acc.try_mul(&self.unary()?)?;
                }
                '/' => {
                    self.pos += 1;
                    acc = acc.try_div(&self.unary()?)?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<RationalFunction, AlgebraError> {
        match self.peek_op() {
            Some('-') => {
                self.pos += 1;
                Ok(-self.unary()?)
            }
            Some('+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<RationalFunction, AlgebraError> {
        let base = self.atom()?;
        if self.peek_op() != Some('^') {
            return Ok(base);
        }
        self.pos += 1;
        let mut negative = false;
        if self.peek_op() == Some('-') {
            negative = true;
            self.pos += 1;
        }
        let e = match self.tokens.get(self.pos) {
            Some(Token::Int(n)) => n.clone(),
            _ => return Err(AlgebraError::Parse("exponent must be an integer".into())),
        };
        self.pos += 1;
        let e: i64 = i64::try_from(e).map_err(|_| AlgebraError::Parse("exponent too large".into()))?;
        base.try_pow(if negative { -e } else { e })
    }

    fn atom(&mut self) -> Result<RationalFunction, AlgebraError> {
        match self.tokens.get(self.pos).cloned() {
            Some(Token::Int(n)) => {
                self.pos += 1;
                Ok(RationalFunction::from_bigint(n))
            }
            Some(Token::Ident(name)) => {
                self.pos += 1;
                match self.space {
                    Some(s) => RationalFunction::var(s, &name),
                    None => Err(AlgebraError::UnknownSymbol(name)),
                }
            }
            Some(Token::Op('(')) => {
                self.pos += 1;
                let v = self.expr()?;
                self.expect(')')?;
                Ok(v)
            }
            Some(t) => Err(AlgebraError::Parse(format!("unexpected token {:?}", t))),
            None => Err(AlgebraError::Parse("unexpected end of input".into())),
        }
    }
}

fn parse_in(s: &str, space: Option<&Arc<ParameterSpace>>) -> Result<RationalFunction, AlgebraError> {
    let tokens = tokenize(s)?;
    if tokens.is_empty() {
        return Err(AlgebraError::Parse("empty expression".into()));
    }
    let mut p = Parser {
        tokens,
        pos: 0,
        space,
    };
    let v = p.expr()?;
    if p.pos != p.tokens.len() {
        return Err(AlgebraError::Parse(format!(
            "trailing input after token {}",
            p.pos
        )));
    }
    Ok(v)
}

impl RationalFunction {
    /// Parses an expression whose symbols must all belong to `space`.
    pub fn parse(s: &str, space: &Arc<ParameterSpace>) -> Result<Self, AlgebraError> {
        parse_in(s, Some(space))
    }
}

/// Parses a symbol-free rational value such as `3/10` or `-7`.
pub fn parse_rational(s: &str) -> Result<BigRational, AlgebraError> {
    parse_in(s, None)?
        .as_rational()
        .ok_or_else(|| AlgebraError::Parse(format!("`{}` is not a rational constant", s)))
}
