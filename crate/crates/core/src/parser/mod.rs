//! Generating-function expressions.
//!
//! Syntax: integer literals, the variables `x` and `y`, `+ - * / ^`,
//! parentheses, and the functions `log` (alias `ln`) and `exp`. Products need
//! an explicit `*`. Exponents are rational literals such as `2`, `-1` or
//! `(-3/2)`. Unary minus binds tighter than `*` and `/` but looser than `^`,
//! so `-x^2` is `-(x^2)`.
//!
//! Dividing by something that vanishes at `x = 0` is allowed when the
//! numerator vanishes at least as fast; the common power of `x` is cancelled,
//! so `-(g*f)/x` is fine whenever `f(0) = 0`.

mod ast;
mod eval;
mod grammar;
mod lexer;

use thiserror::Error;

pub use ast::{Expr, ExprKind};
pub use eval::{eval_bivariate, eval_univariate};
pub use grammar::parse;
pub use lexer::{tokenize, Function, Token, TokenKind};

use crate::bivariate::BivariateSeries;
use crate::series::{Series, SeriesError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExprError {
    #[error("unexpected character '{ch}' at offset {pos}")]
    Lexical { pos: usize, ch: char },
    #[error("unknown identifier '{name}' at offset {pos}")]
    UnknownIdentifier { pos: usize, name: String },
    #[error("implicit multiplication at offset {pos}; write '*' explicitly")]
    ImplicitMultiplication { pos: usize },
    #[error("syntax error at offset {pos}: {message}")]
    Syntax { pos: usize, message: String },
    #[error("'y' at offset {pos} in an expression expanded in x only")]
    Arity { pos: usize },
    #[error("{source} (subexpression at offset {pos})")]
    Domain { pos: usize, source: SeriesError },
}

impl ExprError {
    pub fn position(&self) -> usize {
        match self {
            ExprError::Lexical { pos, .. }
            | ExprError::UnknownIdentifier { pos, .. }
            | ExprError::ImplicitMultiplication { pos }
            | ExprError::Syntax { pos, .. }
            | ExprError::Arity { pos }
            | ExprError::Domain { pos, .. } => *pos,
        }
    }
}

/// Tokenizes and parses in one step.
pub fn parse_expr(input: &str) -> Result<Expr, ExprError> {
    parse(&tokenize(input)?)
}

/// Parses and expands an `x`-only expression.
pub fn expand(input: &str, order: usize) -> Result<Series, ExprError> {
    eval_univariate(&parse_expr(input)?, order)
}

/// Parses and expands an expression in `x` and `y`.
pub fn expand_bivariate(
    input: &str,
    order_x: usize,
    order_y: usize,
) -> Result<BivariateSeries, ExprError> {
    eval_bivariate(&parse_expr(input)?, order_x, order_y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{int, ratio, Coef};

    fn lit(v: i64) -> Expr {
        Expr::new(ExprKind::Literal(int(v)), 0)
    }
    fn x() -> Expr {
        Expr::new(ExprKind::VarX, 0)
    }
    fn b(e: Expr) -> Box<Expr> {
        Box::new(e)
    }

    fn ints(s: &Series) -> Vec<Coef> {
        s.coeffs().to_vec()
    }

    #[test]
    fn parses_with_precedence() {
        let e = parse_expr("x*(1-x)/(1-3*x)").unwrap();
        let expected = Expr::new(
            ExprKind::Div(
                b(Expr::new(
                    ExprKind::Mul(b(x()), b(Expr::new(ExprKind::Sub(b(lit(1)), b(x())), 0))),
                    0,
                )),
                b(Expr::new(
                    ExprKind::Sub(b(lit(1)), b(Expr::new(ExprKind::Mul(b(lit(3)), b(x())), 0))),
                    0,
                )),
            ),
            0,
        );
        assert_eq!(e, expected);
    }

    #[test]
    fn rational_exponent() {
        let e = parse_expr("(1-2*x)^(-3/2)").unwrap();
        let ExprKind::Pow(base, exp) = &e.kind else {
            panic!("expected a power, got {e:?}");
        };
        assert_eq!(exp, &ratio(-3, 2));
        assert_eq!(
            **base,
            Expr::new(
                ExprKind::Sub(b(lit(1)), b(Expr::new(ExprKind::Mul(b(lit(2)), b(x())), 0))),
                0
            )
        );
    }

    #[test]
    fn unary_minus_and_power() {
        let e = parse_expr("-x^2").unwrap();
        assert!(matches!(e.kind, ExprKind::Negate(_)));
        let e = parse_expr("1 - -x").unwrap();
        assert!(matches!(e.kind, ExprKind::Sub(_, _)));
    }

    #[test]
    fn syntax_errors() {
        let err = parse_expr("1+").unwrap_err();
        assert_eq!(
            err,
            ExprError::Syntax {
                pos: 2,
                message: "expected operand".into()
            }
        );
        assert!(matches!(
            parse_expr("(1+x"),
            Err(ExprError::Syntax { pos: 4, .. })
        ));
        assert!(matches!(
            parse_expr("1+x)"),
            Err(ExprError::Syntax { pos: 3, .. })
        ));
        assert!(matches!(
            parse_expr("x^x"),
            Err(ExprError::Syntax { pos: 2, .. })
        ));
        assert!(matches!(
            parse_expr("x^2^3"),
            Err(ExprError::Syntax { pos: 3, .. })
        ));
        assert!(matches!(
            parse_expr("x^(1/0)"),
            Err(ExprError::Syntax { .. })
        ));
        assert!(matches!(
            parse_expr(""),
            Err(ExprError::Syntax { pos: 0, .. })
        ));
    }

    #[test]
    fn univariate_expansions() {
        assert_eq!(
            ints(&expand("(1+x)/(1-2*x)", 6).unwrap()),
            [1, 3, 6, 12, 24, 48].map(int).to_vec()
        );
        assert_eq!(
            ints(&expand("1/(1-x)", 4).unwrap()),
            [1, 1, 1, 1].map(int).to_vec()
        );
        assert_eq!(
            ints(&expand("log(1/(1-x))", 4).unwrap()),
            vec![int(0), int(1), ratio(1, 2), ratio(1, 3)]
        );
        assert_eq!(
            expand("ln(1-x)", 4).unwrap(),
            expand("log(1-x)", 4).unwrap()
        );
        assert_eq!(
            ints(&expand("exp(2*x)", 3).unwrap()),
            vec![int(1), int(2), int(2)]
        );
    }

    #[test]
    fn cancelling_division_keeps_requested_order() {
        // -(g f)/x for the (1+x)/(1-2x), x(1-x)/(1-3x) pair
        let s = expand("-((1+x)/(1-2*x))*(x*(1-x)/(1-3*x))/x", 6).unwrap();
        assert_eq!(s.order(), 6);
        let gf = &expand("(1+x)/(1-2*x)", 7).unwrap() * &expand("x*(1-x)/(1-3*x)", 7).unwrap();
        assert_eq!(s, -&gf.div_x_pow(1).unwrap());
        assert!(matches!(
            expand("1/x", 4),
            Err(ExprError::Domain {
                pos: 1,
                source: SeriesError::Cancellation { .. }
            })
        ));
    }

    #[test]
    fn domain_errors_report_position() {
        let err = expand("1 + log(2-x)", 4).unwrap_err();
        assert_eq!(
            err,
            ExprError::Domain {
                pos: 4,
                source: SeriesError::LogDomain
            }
        );
        assert_eq!(expand("1 + y", 3), Err(ExprError::Arity { pos: 4 }));
    }

    #[test]
    fn bivariate_whitney_square() {
        let g = expand_bivariate("1/((1-x)*(1-y-x*y))", 6, 6).unwrap();
        let row = |n: usize| g.grid()[n].clone();
        assert_eq!(row(0), [1, 1, 1, 1, 1, 1].map(int).to_vec());
        assert_eq!(row(1), [1, 2, 3, 4, 5, 6].map(int).to_vec());
        assert_eq!(row(2), [1, 2, 4, 7, 11, 16].map(int).to_vec());
    }

    #[test]
    fn bivariate_single_column_matches_univariate() {
        let e = parse_expr("exp(x)*(1+x)^(1/2)/(1-3*x)").unwrap();
        let b = eval_bivariate(&e, 6, 1).unwrap();
        assert_eq!(b.y_coefficient(0), eval_univariate(&e, 6).unwrap());
    }

    #[test]
    fn display_round_trips() {
        for src in [
            "(1+x)/(1-2*x)",
            "-x^2 + log(1/(1-x))",
            "(1-2*x)^(-3/2) * exp(x*y) - -y",
            "1/((1-x)*(1-y-x*y))",
        ] {
            let e = parse_expr(src).unwrap();
            let again = parse_expr(&e.to_string()).unwrap();
            assert_eq!(e, again, "{src} -> {e}");
        }
    }
}
