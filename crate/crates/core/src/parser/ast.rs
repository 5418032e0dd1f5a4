use std::fmt;

use num_traits::{One, Signed};

use crate::series::{format_coef, Coef};

/// Expression node. `pos` is the byte offset of the source text the node came
/// from; it is ignored by equality.
#[derive(Clone, Debug)]
pub struct Expr {
    pub kind: ExprKind,
    pub pos: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub enum ExprKind {
    Literal(Coef),
    VarX,
    VarY,
    Negate(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    /// Base raised to a literal rational exponent.
    Pow(Box<Expr>, Coef),
    Log(Box<Expr>),
    Exp(Box<Expr>),
}

impl PartialEq for Expr {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
    }
}

impl Expr {
    pub fn new(kind: ExprKind, pos: usize) -> Self {
        Expr { kind, pos }
    }

    /// Position of the first `y` in the tree, if any.
    pub fn find_y(&self) -> Option<usize> {
        match &self.kind {
            ExprKind::VarY => Some(self.pos),
            ExprKind::Literal(_) | ExprKind::VarX => None,
            ExprKind::Negate(e) | ExprKind::Pow(e, _) | ExprKind::Log(e) | ExprKind::Exp(e) => {
                e.find_y()
            }
            ExprKind::Add(a, b)
            | ExprKind::Sub(a, b)
            | ExprKind::Mul(a, b)
            | ExprKind::Div(a, b) => a.find_y().or_else(|| b.find_y()),
        }
    }

    fn is_atom(&self) -> bool {
        match &self.kind {
            ExprKind::Literal(c) => !c.is_negative() && c.is_integer(),
            ExprKind::VarX | ExprKind::VarY | ExprKind::Log(_) | ExprKind::Exp(_) => true,
            _ => false,
        }
    }

    fn fmt_atom(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_atom() {
            write!(f, "{self}")
        } else {
            write!(f, "({self})")
        }
    }
}

impl fmt::Display for Expr {
    /// Prints with explicit parentheses around every binary operation, so the
    /// output re-parses to the same tree.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ExprKind::Literal(c) => {
                if c.is_integer() && !c.is_negative() {
                    write!(f, "{}", format_coef(c))
                } else {
                    write!(f, "({})", format_coef(c))
                }
            }
            ExprKind::VarX => write!(f, "x"),
            ExprKind::VarY => write!(f, "y"),
            ExprKind::Negate(e) => {
                write!(f, "-")?;
                e.fmt_atom(f)
            }
            ExprKind::Add(a, b) => write!(f, "({a} + {b})"),
            ExprKind::Sub(a, b) => write!(f, "({a} - {b})"),
            ExprKind::Mul(a, b) => write!(f, "({a} * {b})"),
            ExprKind::Div(a, b) => write!(f, "({a} / {b})"),
            ExprKind::Pow(base, e) => {
                base.fmt_atom(f)?;
                if e.is_integer() && !e.is_negative() {
                    write!(f, "^{}", e.numer())
                } else if e.denom().is_one() {
                    write!(f, "^({})", e.numer())
                } else {
                    write!(f, "^({}/{})", e.numer(), e.denom())
                }
            }
            ExprKind::Log(e) => write!(f, "log({e})"),
            ExprKind::Exp(e) => write!(f, "exp({e})"),
        }
    }
}
