//! Tokenizer and recursive-descent parser for element expressions.
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := factor ('*'? factor)*
//! factor := atom ('^' nat)?
//! atom   := rational | name ('[' nat (',' nat)* ']')? | '(' expr ')'
//! ```

use crate::error::{Error, Result};
use crate::exactnum::scalar::{self, Scalar};
use num_bigint::BigInt;

/// Exponents and indices above this are rejected to keep evaluation bounded.
pub const MAX_EXPONENT: u32 = 256;
pub const MAX_INDEX: u32 = 256;

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Num(Scalar),
    Gen {
        name: String,
        index: Vec<u32>,
        offset: usize,
    },
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Name(String),
    Sym(char),
}

fn syntax(offset: usize, msg: impl Into<String>) -> Error {
    Error::Syntax {
        offset,
        msg: msg.into(),
    }
}

fn is_name_char(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '∂' || c == '∫'
}

fn lex(src: &str) -> Result<Vec<(Tok, usize)>> {
    let mut out = Vec::new();
    let mut it = src.char_indices().peekable();
    while let Some(&(at, c)) = it.peek() {
        if c.is_whitespace() {
            it.next();
        } else if c.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&(_, d)) = it.peek().filter(|(_, d)| d.is_ascii_digit()) {
                s.push(d);
                it.next();
            }
            out.push((Tok::Num(s.parse().expect("digits")), at));
        } else if c == '∂' || c == '∫' {
            // single-character generators, so "∂∫" is a product
            out.push((Tok::Name(c.to_string()), at));
            it.next();
        } else if c.is_alphabetic() || c == '_' {
            let mut s = String::new();
            while let Some(&(_, d)) = it
                .peek()
                .filter(|(_, d)| is_name_char(*d) && *d != '∂' && *d != '∫')
            {
                s.push(d);
                it.next();
            }
            out.push((Tok::Name(s), at));
        } else if "+-*^/()[],".contains(c) {
            out.push((Tok::Sym(c), at));
            it.next();
        } else {
            return Err(syntax(at, format!("unexpected character `{c}`")));
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map(|(_, o)| *o).unwrap_or(self.end)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(syntax(self.offset(), format!("expected `{c}`")))
        }
    }

    fn nat(&mut self, cap: u32) -> Result<u32> {
        let at = self.offset();
        match self.peek() {
            Some(Tok::Num(n)) => {
                let n = n.clone();
                self.pos += 1;
                u32::try_from(&n)
                    .ok()
                    .filter(|&k| k <= cap)
                    .ok_or_else(|| syntax(at, format!("number exceeds {cap}")))
            }
            _ => Err(syntax(at, "expected a natural number")),
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut acc = if self.eat('-') {
            Expr::Neg(Box::new(self.term()?))
        } else {
            self.term()?
        };
        loop {
            if self.eat('+') {
                acc = Expr::Add(Box::new(acc), Box::new(self.term()?));
            } else if self.eat('-') {
                acc = Expr::Sub(Box::new(acc), Box::new(self.term()?));
            } else {
                return Ok(acc);
            }
        }
    }

    fn starts_factor(&self) -> bool {
        matches!(
            self.peek(),
            Some(Tok::Num(_)) | Some(Tok::Name(_)) | Some(Tok::Sym('('))
        )
    }

    fn term(&mut self) -> Result<Expr> {
        let mut acc = self.factor()?;
        loop {
            if self.eat('*') || self.starts_factor() {
                acc = Expr::Mul(Box::new(acc), Box::new(self.factor()?));
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if self.eat('^') {
            let k = self.nat(MAX_EXPONENT)?;
            return Ok(Expr::Pow(Box::new(base), k));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr> {
        let at = self.offset();
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                let mut q = scalar::Scalar::from_integer(n);
                if self.eat('/') {
                    let dat = self.offset();
                    match self.peek().cloned() {
                        Some(Tok::Num(d)) if d != BigInt::from(0) => {
                            self.pos += 1;
                            q /= scalar::Scalar::from_integer(d);
                        }
                        _ => return Err(syntax(dat, "expected a nonzero denominator")),
                    }
                }
                Ok(Expr::Num(q))
            }
            Some(Tok::Name(name)) => {
                self.pos += 1;
                let mut index = Vec::new();
                if self.eat('[') {
                    index.push(self.nat(MAX_INDEX)?);
                    while self.eat(',') {
                        index.push(self.nat(MAX_INDEX)?);
                    }
                    self.expect(']')?;
                }
                Ok(Expr::Gen {
                    name,
                    index,
                    offset: at,
                })
            }
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            _ => Err(syntax(at, "expected a number, generator or `(`")),
        }
    }
}

pub fn parse(src: &str) -> Result<Expr> {
    let toks = lex(src)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end: src.len(),
    };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(syntax(p.offset(), "trailing input"));
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gen(name: &str, offset: usize) -> Expr {
        Expr::Gen {
            name: name.into(),
            index: vec![],
            offset,
        }
    }

    #[test]
    fn products_and_sums() {
        assert_eq!(
            parse("y*x").unwrap(),
            Expr::Mul(Box::new(gen("y", 0)), Box::new(gen("x", 2)))
        );
        assert_eq!(
            parse("d i").unwrap(),
            Expr::Mul(Box::new(gen("d", 0)), Box::new(gen("i", 2)))
        );
        let e = parse("(H-2)*d + E[0,0]").unwrap();
        match e {
            Expr::Add(l, r) => {
                assert!(matches!(*l, Expr::Mul(..)));
                assert_eq!(
                    *r,
                    Expr::Gen {
                        name: "E".into(),
                        index: vec![0, 0],
                        offset: 10
                    }
                );
            }
            _ => panic!("{e:?}"),
        }
        assert_eq!(parse("3/4").unwrap(), Expr::Num(scalar::frac(3, 4)));
        assert!(matches!(parse("-x^2").unwrap(), Expr::Neg(_)));
        assert!(matches!(parse("∂∫").unwrap(), Expr::Mul(..)));
    }

    #[test]
    fn errors_carry_offsets() {
        assert_eq!(
            parse("x + ").unwrap_err(),
            syntax(4, "expected a number, generator or `(`")
        );
        assert!(matches!(parse("(x"), Err(Error::Syntax { offset: 2, .. })));
        assert!(matches!(
            parse("x ^ 100000"),
            Err(Error::Syntax { offset: 4, .. })
        ));
        assert!(matches!(parse("1/0"), Err(Error::Syntax { offset: 2, .. })));
        assert!(matches!(parse("x $"), Err(Error::Syntax { offset: 2, .. })));
        assert!(matches!(parse("x )"), Err(Error::Syntax { offset: 2, .. })));
    }
}
