//! Closed-form expressions in the index variables `n` and `k`.
//!
//! This is the little language family spec files use for the principal
//! factor `p` and the auxiliary factor `h`, so families live in data
//! files rather than code. Grammar:
//!
//! ```text
//! expr   := term  (('+' | '-') term)*          left-associative
//! term   := factor (('*' | '/') factor)*       left-associative
//! factor := '-' factor | INT | 'n' | 'k' | '(' expr ')'
//! ```
//!
//! Integer literals only; rationals arise through `/`. Evaluation is
//! exact, with a [`Error::DivisionByZero`] when a denominator vanishes
//! at the given `(n, k)`.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Var {
    N,
    K,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Lit(Scalar),
    Var(Var),
    Neg(Box<Expr>),
    Bin(BinOp, Box<Expr>, Box<Expr>),
}

impl Expr {
    pub fn parse(src: &str) -> Result<Expr> {
        Parser::new(src)?.parse_all()
    }

    /// Exact value at integer indices. Pure; a given `(n, k)` always
    /// yields the same scalar.
    pub fn eval(&self, n: i64, k: i64) -> Result<Scalar> {
        match self {
            Expr::Lit(v) => Ok(v.clone()),
            Expr::Var(Var::N) => Ok(Scalar::from(n)),
            Expr::Var(Var::K) => Ok(Scalar::from(k)),
            Expr::Neg(inner) => Ok(-inner.eval(n, k)?),
            Expr::Bin(op, lhs, rhs) => {
                let a = lhs.eval(n, k)?;
                let b = rhs.eval(n, k)?;
                Ok(match op {
                    BinOp::Add => a + b,
                    BinOp::Sub => a - b,
                    BinOp::Mul => a * b,
                    BinOp::Div => {
                        if b.is_zero() {
                            return Err(Error::DivisionByZero);
                        }
                        a / b
                    }
                })
            }
        }
    }

    pub fn uses_var(&self, var: Var) -> bool {
        match self {
            Expr::Lit(_) => false,
            Expr::Var(v) => *v == var,
            Expr::Neg(inner) => inner.uses_var(var),
            Expr::Bin(_, lhs, rhs) => lhs.uses_var(var) || rhs.uses_var(var),
        }
    }

    /// Canonical source form; `parse(render(e)) == e` for any tree in
    /// the parseable fragment (nonnegative integer literals).
    pub fn render(&self) -> String {
        let mut out = String::new();
        self.render_into(&mut out, 0);
        out
    }

    // Precedence levels: 1 = additive, 2 = multiplicative, 3 = unary minus.
    fn precedence(&self) -> u8 {
        match self {
            Expr::Lit(_) | Expr::Var(_) => 4,
            Expr::Neg(_) => 3,
            Expr::Bin(BinOp::Mul | BinOp::Div, _, _) => 2,
            Expr::Bin(BinOp::Add | BinOp::Sub, _, _) => 1,
        }
    }

    fn render_into(&self, out: &mut String, min_prec: u8) {
        let prec = self.precedence();
        let parens = prec < min_prec;
        if parens {
            out.push('(');
        }
        match self {
            Expr::Lit(v) => out.push_str(&v.to_string()),
            Expr::Var(Var::N) => out.push('n'),
            Expr::Var(Var::K) => out.push('k'),
            Expr::Neg(inner) => {
                out.push('-');
                inner.render_into(out, prec);
            }
            Expr::Bin(op, lhs, rhs) => {
                lhs.render_into(out, prec);
                out.push(match op {
                    BinOp::Add => '+',
                    BinOp::Sub => '-',
                    BinOp::Mul => '*',
                    BinOp::Div => '/',
                });
                // Left association: the right operand needs parens at
                // equal precedence.
                rhs.render_into(out, prec + 1);
            }
        }
        if parens {
            out.push(')');
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Int(Scalar),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    LParen,
    RParen,
    Eof,
}

impl Token {
    fn describe(&self) -> String {
        match self {
            Token::Int(v) => format!("integer {v}"),
            Token::Ident(s) => format!("identifier {s:?}"),
            Token::Plus => "'+'".into(),
            Token::Minus => "'-'".into(),
            Token::Star => "'*'".into(),
            Token::Slash => "'/'".into(),
            Token::LParen => "'('".into(),
            Token::RParen => "')'".into(),
            Token::Eof => "end of input".into(),
        }
    }
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    pos: usize,
}

impl Parser {
    fn new(src: &str) -> Result<Parser> {
        let mut tokens = Vec::new();
        let bytes = src.as_bytes();
        let mut i = 0;
        while i < bytes.len() {
            let c = bytes[i];
            let start = i;
            match c {
                b' ' | b'\t' | b'\n' | b'\r' => {
                    i += 1;
                }
                b'+' => {
                    tokens.push((start, Token::Plus));
                    i += 1;
                }
                b'-' => {
                    tokens.push((start, Token::Minus));
                    i += 1;
                }
                b'*' => {
                    tokens.push((start, Token::Star));
                    i += 1;
                }
                b'/' => {
                    tokens.push((start, Token::Slash));
                    i += 1;
                }
                b'(' => {
                    tokens.push((start, Token::LParen));
                    i += 1;
                }
                b')' => {
                    tokens.push((start, Token::RParen));
                    i += 1;
                }
                b'0'..=b'9' => {
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    let text = &src[start..i];
                    let value: Scalar = text.parse().map_err(|_| Error::Parse {
                        offset: start,
                        expected: "integer literal".into(),
                    })?;
                    tokens.push((start, Token::Int(value)));
                }
                c if c.is_ascii_alphabetic() || c == b'_' => {
                    while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_')
                    {
                        i += 1;
                    }
                    tokens.push((start, Token::Ident(src[start..i].to_owned())));
                }
                other => {
                    return Err(Error::Parse {
                        offset: start,
                        expected: format!(
                            "digit, variable, operator or parenthesis (found {:?})",
                            other as char
                        ),
                    });
                }
            }
        }
        tokens.push((src.len(), Token::Eof));
        Ok(Parser { tokens, pos: 0 })
    }

    fn peek(&self) -> &Token {
        &self.tokens[self.pos].1
    }

    fn offset(&self) -> usize {
        self.tokens[self.pos].0
    }

    fn bump(&mut self) -> (usize, Token) {
        let t = self.tokens[self.pos].clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    fn parse_all(&mut self) -> Result<Expr> {
        let expr = self.parse_expr()?;
        match self.peek() {
            Token::Eof => Ok(expr),
            other => Err(Error::Parse {
                offset: self.offset(),
                expected: format!("operator or end of input (found {})", other.describe()),
            }),
        }
    }

    fn parse_expr(&mut self) -> Result<Expr> {
        let mut lhs = self.parse_term()?;
        loop {
            let op = match self.peek() {
                Token::Plus => BinOp::Add,
                Token::Minus => BinOp::Sub,
                _ => return Ok(lhs),
            };
            self.bump();
            let rhs = self.parse_term()?;
            lhs = Expr::Bin(op, Box::new(lhs), Box::new(rhs));
        }
    }

    fn parse_term(&mut self) -> Result<Expr> {
        let mut lhs = self.parse_factor()?;
        loop {
            let op = match self.peek() {
                Token::Star => BinOp::Mul,
                Token::Slash => BinOp::Div,
                _ => return Ok(lhs),
            };
            self.bump();
            let rhs = self.parse_factor()?;
            lhs = Expr::Bin(op, Box::new(lhs), Box::new(rhs));
        }
    }

    fn parse_factor(&mut self) -> Result<Expr> {
        let offset = self.offset();
        match self.bump().1 {
            Token::Minus => Ok(Expr::Neg(Box::new(self.parse_factor()?))),
            Token::Int(v) => Ok(Expr::Lit(v)),
            Token::Ident(name) => match name.as_str() {
                "n" => Ok(Expr::Var(Var::N)),
                "k" => Ok(Expr::Var(Var::K)),
                _ => Err(Error::UnknownVariable { name, offset }),
            },
            Token::LParen => {
                let inner = self.parse_expr()?;
                match self.bump() {
                    (_, Token::RParen) => Ok(inner),
                    (off, other) => Err(Error::Parse {
                        offset: off,
                        expected: format!("')' (found {})", other.describe()),
                    }),
                }
            }
            other => Err(Error::Parse {
                offset,
                expected: format!("integer, variable, '-' or '(' (found {})", other.describe()),
            }),
        }
    }
}
