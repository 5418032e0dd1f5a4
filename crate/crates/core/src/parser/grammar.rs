//! Recursive-descent parser.
//!
//! ```text
//! expr     := term (('+' | '-') term)*
//! term     := unary (('*' | '/') unary)*
//! unary    := '-' unary | power
//! power    := primary ('^' exponent)?
//! exponent := '-'? NUMBER | '(' '-'? NUMBER ('/' NUMBER)? ')'
//! primary  := NUMBER | 'x' | 'y' | FUNC '(' expr ')' | '(' expr ')'
//! ```

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::ast::{Expr, ExprKind};
use super::lexer::{Function, Token, TokenKind};
use super::ExprError;

pub fn parse(tokens: &[Token]) -> Result<Expr, ExprError> {
    let end = tokens.last().map_or(0, |t| t.pos + t.text.len());
    let mut p = Parser {
        tokens,
        idx: 0,
        end,
    };
    let e = p.expr()?;
    if let Some(t) = p.peek() {
        return Err(p.syntax(t.pos, format!("unexpected '{}'", t.text)));
    }
    Ok(e)
}

struct Parser<'a> {
    tokens: &'a [Token],
    idx: usize,
    end: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&'a Token> {
        self.tokens.get(self.idx)
    }

    fn next(&mut self) -> Option<&'a Token> {
        let t = self.tokens.get(self.idx);
        self.idx += 1;
        t
    }

    fn here(&self) -> usize {
        self.peek().map_or(self.end, |t| t.pos)
    }

    fn syntax(&self, pos: usize, message: impl Into<String>) -> ExprError {
        ExprError::Syntax {
            pos,
            message: message.into(),
        }
    }

    fn eat(&mut self, kind: &TokenKind) -> bool {
        if self.peek().is_some_and(|t| &t.kind == kind) {
            self.idx += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, kind: &TokenKind, what: &str) -> Result<(), ExprError> {
        if self.eat(kind) {
            Ok(())
        } else {
            let pos = self.here();
            Err(match self.peek() {
                Some(t) => self.syntax(pos, format!("expected {what}, found '{}'", t.text)),
                None => self.syntax(pos, format!("expected {what}")),
            })
        }
    }

    fn expr(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.term()?;
        loop {
            let Some(t) = self.peek() else { break };
            let ctor: fn(Box<Expr>, Box<Expr>) -> ExprKind = match t.kind {
                TokenKind::Plus => ExprKind::Add,
                TokenKind::Minus => ExprKind::Sub,
                _ => break,
            };
            self.idx += 1;
            let rhs = self.term()?;
            lhs = Expr::new(ctor(Box::new(lhs), Box::new(rhs)), t.pos);
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.unary()?;
        loop {
            let Some(t) = self.peek() else { break };
            let ctor: fn(Box<Expr>, Box<Expr>) -> ExprKind = match t.kind {
                TokenKind::Star => ExprKind::Mul,
                TokenKind::Slash => ExprKind::Div,
                _ => break,
            };
            self.idx += 1;
            let rhs = self.unary()?;
            lhs = Expr::new(ctor(Box::new(lhs), Box::new(rhs)), t.pos);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr, ExprError> {
        if let Some(t) = self.peek() {
            if t.kind == TokenKind::Minus {
                self.idx += 1;
                let inner = self.unary()?;
                return Ok(Expr::new(ExprKind::Negate(Box::new(inner)), t.pos));
            }
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ExprError> {
        let base = self.primary()?;
        let Some(caret) = self.peek().filter(|t| t.kind == TokenKind::Caret) else {
            return Ok(base);
        };
        self.idx += 1;
        let exponent = self.exponent()?;
        if let Some(t) = self.peek().filter(|t| t.kind == TokenKind::Caret) {
            return Err(self.syntax(t.pos, "exponent must be a rational literal"));
        }
        Ok(Expr::new(
            ExprKind::Pow(Box::new(base), exponent),
            caret.pos,
        ))
    }

    fn number(&mut self) -> Result<BigInt, ExprError> {
        let pos = self.here();
        match self.next() {
            Some(Token {
                kind: TokenKind::Number(n),
                ..
            }) => Ok(n.clone()),
            Some(t) => Err(self.syntax(
                pos,
                format!("exponent must be a rational literal, found '{}'", t.text),
            )),
            None => Err(self.syntax(pos, "expected exponent")),
        }
    }

    fn exponent(&mut self) -> Result<BigRational, ExprError> {
        if self.eat(&TokenKind::LParen) {
            let negative = self.eat(&TokenKind::Minus);
            let numer = self.number()?;
            let denom = if self.eat(&TokenKind::Slash) {
                let pos = self.here();
                let d = self.number()?;
                if d.is_zero() {
                    return Err(self.syntax(pos, "zero exponent denominator"));
                }
                d
            } else {
                BigInt::from(1)
            };
            self.expect(&TokenKind::RParen, "')'")?;
            let value = BigRational::new(numer, denom);
            Ok(if negative { -value } else { value })
        } else {
            let negative = self.eat(&TokenKind::Minus);
            let value = BigRational::from_integer(self.number()?);
            Ok(if negative { -value } else { value })
        }
    }

    fn primary(&mut self) -> Result<Expr, ExprError> {
        let pos = self.here();
        let Some(t) = self.next() else {
            return Err(self.syntax(pos, "expected operand"));
        };
        let kind = match &t.kind {
            TokenKind::Number(n) => ExprKind::Literal(BigRational::from_integer(n.clone())),
            TokenKind::VarX => ExprKind::VarX,
            TokenKind::VarY => ExprKind::VarY,
            TokenKind::Func(func) => {
                self.expect(&TokenKind::LParen, "'(' after function name")?;
                let arg = Box::new(self.expr()?);
                self.expect(&TokenKind::RParen, "')'")?;
                match func {
                    Function::Log => ExprKind::Log(arg),
                    Function::Exp => ExprKind::Exp(arg),
                }
            }
            TokenKind::LParen => {
                let inner = self.expr()?;
                self.expect(&TokenKind::RParen, "')'")?;
                return Ok(inner);
            }
            _ => return Err(self.syntax(t.pos, format!("expected operand, found '{}'", t.text))),
        };
        Ok(Expr::new(kind, t.pos))
    }
}
