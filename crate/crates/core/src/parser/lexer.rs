use num_bigint::BigInt;

use super::ExprError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Function {
    Log,
    Exp,
}

impl Function {
    pub fn name(self) -> &'static str {
        match self {
            Function::Log => "log",
            Function::Exp => "exp",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TokenKind {
    Number(BigInt),
    VarX,
    VarY,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Func(Function),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Token {
    pub kind: TokenKind,
    pub text: String,
    /// Byte offset of the token's first character.
    pub pos: usize,
}

/// Splits an expression into tokens, skipping whitespace.
///
/// `ln` is accepted as an alias for `log`, and the Unicode minus sign is read
/// as `-`. A number directly followed by a letter or `(` is rejected: products
/// must be written with `*`.
pub fn tokenize(input: &str) -> Result<Vec<Token>, ExprError> {
    let mut tokens = Vec::new();
    let mut chars = input.char_indices().peekable();
    while let Some(&(pos, ch)) = chars.peek() {
        if ch.is_whitespace() {
            chars.next();
            continue;
        }
        if ch.is_ascii_digit() {
            let mut end = pos;
            while let Some(&(i, c)) = chars.peek() {
                if !c.is_ascii_digit() {
                    break;
                }
                end = i + c.len_utf8();
                chars.next();
            }
            if let Some(&(i, c)) = chars.peek() {
                if c.is_alphabetic() || c == '(' {
                    return Err(ExprError::ImplicitMultiplication { pos: i });
                }
            }
            let text = &input[pos..end];
            let value: BigInt = text.parse().expect("digit run parses");
            tokens.push(Token {
                kind: TokenKind::Number(value),
                text: text.to_string(),
                pos,
            });
            continue;
        }
        if ch.is_alphabetic() {
            let mut end = pos;
            while let Some(&(i, c)) = chars.peek() {
                if !c.is_alphanumeric() {
                    break;
                }
                end = i + c.len_utf8();
                chars.next();
            }
            let text = &input[pos..end];
            let kind = match text {
                "x" => TokenKind::VarX,
                "y" => TokenKind::VarY,
                "log" | "ln" => TokenKind::Func(Function::Log),
                "exp" => TokenKind::Func(Function::Exp),
                _ => {
                    return Err(ExprError::UnknownIdentifier {
                        pos,
                        name: text.to_string(),
                    })
                }
            };
            tokens.push(Token {
                kind,
                text: text.to_string(),
                pos,
            });
            continue;
        }
        let kind = match ch {
            '+' => TokenKind::Plus,
            '-' | '\u{2212}' => TokenKind::Minus,
            '*' => TokenKind::Star,
            '/' => TokenKind::Slash,
            '^' => TokenKind::Caret,
            '(' => TokenKind::LParen,
            ')' => TokenKind::RParen,
            _ => return Err(ExprError::Lexical { pos, ch }),
        };
        tokens.push(Token {
            kind,
            text: ch.to_string(),
            pos,
        });
        chars.next();
    }
    Ok(tokens)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_function() {
        let t = tokenize("(1+x)/(1-2*x)").unwrap();
        assert_eq!(t.len(), 13);
        assert_eq!(t.last().unwrap().kind, TokenKind::RParen);
        assert!(t.windows(2).all(|w| w[0].pos < w[1].pos));
    }

    #[test]
    fn ln_alias() {
        let t = tokenize("ln(1-x)").unwrap();
        assert_eq!(t[0].kind, TokenKind::Func(Function::Log));
        assert_eq!(t[0].text, "ln");
    }

    #[test]
    fn errors_carry_offsets() {
        assert_eq!(
            tokenize("1 @ x"),
            Err(ExprError::Lexical { pos: 2, ch: '@' })
        );
        assert_eq!(
            tokenize("2x"),
            Err(ExprError::ImplicitMultiplication { pos: 1 })
        );
        assert!(matches!(
            tokenize("1+sin(x)"),
            Err(ExprError::UnknownIdentifier { pos: 2, .. })
        ));
    }

    #[test]
    fn unicode_minus() {
        let t = tokenize("1\u{2212}x").unwrap();
        assert_eq!(t[1].kind, TokenKind::Minus);
        assert_eq!(t[2].pos, 4);
    }
}
