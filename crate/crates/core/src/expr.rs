//! Offset expression language: parse, evaluate, render.
//!
//! Grammar (whitespace insignificant):
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary (('*' | '/') unary)*
//! unary := '-' unary | power
//! power := atom ('^' unary)?
//! atom  := number | 'l' | 'pi' | 'e' | fn '(' expr ')' | '(' expr ')'
//! fn    := sin | cos | tan | ln | log | exp | sqrt | abs
//! ```
//!
//! `^` is right-associative and binds tighter than unary minus, so `-2^2`
//! is −4. `pi` and `e` fold to constants at parse time. `log` is the natural
//! logarithm, same as `ln`. Evaluation never fails: `ln(0)` and `1/0` yield
//! IEEE non-finite values for the caller to police.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Maximum nesting depth accepted by the parser. Keeps arbitrary input from
/// exhausting the stack; far beyond any realistic offset function.
const MAX_DEPTH: usize = 256;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TokenKind {
    Number,
    Ident,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

/// One lexeme with its 0-based byte offset into the source text.
#[derive(Debug, Clone, PartialEq)]
pub struct Token {
    pub kind: TokenKind,
    pub text: String,
    pub position: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinaryOp {
    Add,
    Sub,
    Mul,
    Div,
    Pow,
}

impl BinaryOp {
    pub fn symbol(self) -> &'static str {
        match self {
            BinaryOp::Add => "+",
            BinaryOp::Sub => "-",
            BinaryOp::Mul => "*",
            BinaryOp::Div => "/",
            BinaryOp::Pow => "^",
        }
    }

    fn apply(self, a: f64, b: f64) -> f64 {
        match self {
            BinaryOp::Add => a + b,
            BinaryOp::Sub => a - b,
            BinaryOp::Mul => a * b,
            BinaryOp::Div => a / b,
            BinaryOp::Pow => a.powf(b),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Func {
    Sin,
    Cos,
    Tan,
    Ln,
    Exp,
    Sqrt,
    Abs,
}

impl Func {
    pub fn name(self) -> &'static str {
        match self {
            Func::Sin => "sin",
            Func::Cos => "cos",
            Func::Tan => "tan",
            Func::Ln => "ln",
            Func::Exp => "exp",
            Func::Sqrt => "sqrt",
            Func::Abs => "abs",
        }
    }

    fn apply(self, x: f64) -> f64 {
        match self {
            Func::Sin => x.sin(),
            Func::Cos => x.cos(),
            Func::Tan => x.tan(),
            Func::Ln => x.ln(),
            Func::Exp => x.exp(),
            Func::Sqrt => x.sqrt(),
            Func::Abs => x.abs(),
        }
    }

    fn from_name(name: &str) -> Option<Func> {
        Some(match name {
            "sin" => Func::Sin,
            "cos" => Func::Cos,
            "tan" => Func::Tan,
            "ln" | "log" => Func::Ln,
            "exp" => Func::Exp,
            "sqrt" => Func::Sqrt,
            "abs" => Func::Abs,
            _ => return None,
        })
    }
}

/// An offset function of the arc length variable `l`.
#[derive(Debug, Clone, PartialEq)]
pub enum OffsetExpr {
    Const(f64),
    Var,
    Neg(Box<OffsetExpr>),
    Binary(BinaryOp, Box<OffsetExpr>, Box<OffsetExpr>),
    Call(Func, Box<OffsetExpr>),
}

pub fn tokenize(text: &str) -> Result<Vec<Token>> {
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let simple = match c {
            '+' => Some(TokenKind::Plus),
            '-' => Some(TokenKind::Minus),
            '*' => Some(TokenKind::Star),
            '/' => Some(TokenKind::Slash),
            '^' => Some(TokenKind::Caret),
            '(' => Some(TokenKind::LParen),
            ')' => Some(TokenKind::RParen),
            _ => None,
        };
        if let Some(kind) = simple {
            tokens.push(Token {
                kind,
                text: c.to_string(),
                position: pos,
            });
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            while i < chars.len() && chars[i].1.is_ascii_digit() {
                i += 1;
            }
            if i < chars.len() && chars[i].1 == '.' {
                if i + 1 >= chars.len() || !chars[i + 1].1.is_ascii_digit() {
                    return Err(Error::Syntax {
                        position: chars[i].0,
                        message: "expected digit after decimal point".to_string(),
                    });
                }
                i += 1;
                while i < chars.len() && chars[i].1.is_ascii_digit() {
                    i += 1;
                }
            }
            let end = if i < chars.len() { chars[i].0 } else { text.len() };
            let lexeme = &text[pos..end];
            let value: f64 = lexeme.parse().map_err(|_| Error::Syntax {
                position: pos,
                message: format!("invalid number literal '{lexeme}'"),
            })?;
            if !value.is_finite() {
                return Err(Error::Syntax {
                    position: pos,
                    message: format!("number literal '{lexeme}' out of range"),
                });
            }
            tokens.push(Token {
                kind: TokenKind::Number,
                text: lexeme.to_string(),
                position: pos,
            });
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            while i < chars.len() && (chars[i].1.is_ascii_alphanumeric() || chars[i].1 == '_') {
                i += 1;
            }
            let end = if i < chars.len() { chars[i].0 } else { text.len() };
            tokens.push(Token {
                kind: TokenKind::Ident,
                text: text[pos..end].to_string(),
                position: pos,
            });
            continue;
        }
        return Err(Error::Syntax {
            position: pos,
            message: format!("unexpected character '{c}'"),
        });
    }
    Ok(tokens)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn here(&self) -> usize {
        self.peek().map_or(self.end, |t| t.position)
    }

    fn eat(&mut self, kind: TokenKind, what: &str) -> Result<Token> {
        match self.peek() {
            Some(t) if t.kind == kind => Ok(self.bump().unwrap()),
            Some(t) => Err(Error::Syntax {
                position: t.position,
                message: format!("expected {what}, found '{}'", t.text),
            }),
            None => Err(Error::Syntax {
                position: self.end,
                message: format!("expected {what}, found end of input"),
            }),
        }
    }

    fn guard(&self, depth: usize) -> Result<()> {
        if depth > MAX_DEPTH {
            return Err(Error::Syntax {
                position: self.here(),
                message: "expression nests too deeply".to_string(),
            });
        }
        Ok(())
    }

    fn expr(&mut self, depth: usize) -> Result<OffsetExpr> {
        self.guard(depth)?;
        let mut lhs = self.term(depth + 1)?;
        while let Some(t) = self.peek() {
            let op = match t.kind {
                TokenKind::Plus => BinaryOp::Add,
                TokenKind::Minus => BinaryOp::Sub,
                _ => break,
            };
            self.bump();
            let rhs = self.term(depth + 1)?;
            lhs = OffsetExpr::Binary(op, Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn term(&mut self, depth: usize) -> Result<OffsetExpr> {
        self.guard(depth)?;
        let mut lhs = self.unary(depth + 1)?;
        while let Some(t) = self.peek() {
            let op = match t.kind {
                TokenKind::Star => BinaryOp::Mul,
                TokenKind::Slash => BinaryOp::Div,
                _ => break,
            };
            self.bump();
            let rhs = self.unary(depth + 1)?;
            lhs = OffsetExpr::Binary(op, Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn unary(&mut self, depth: usize) -> Result<OffsetExpr> {
        self.guard(depth)?;
        if matches!(self.peek(), Some(t) if t.kind == TokenKind::Minus) {
            self.bump();
            let child = self.unary(depth + 1)?;
            return Ok(OffsetExpr::Neg(Box::new(child)));
        }
        self.power(depth + 1)
    }

    fn power(&mut self, depth: usize) -> Result<OffsetExpr> {
        self.guard(depth)?;
        let base = self.atom(depth + 1)?;
        if matches!(self.peek(), Some(t) if t.kind == TokenKind::Caret) {
            self.bump();
            let exponent = self.unary(depth + 1)?;
            return Ok(OffsetExpr::Binary(
                BinaryOp::Pow,
                Box::new(base),
                Box::new(exponent),
            ));
        }
        Ok(base)
    }

    fn atom(&mut self, depth: usize) -> Result<OffsetExpr> {
        self.guard(depth)?;
        let token = match self.bump() {
            Some(t) => t,
            None => {
                return Err(Error::Syntax {
                    position: self.end,
                    message: "expected expression, found end of input".to_string(),
                })
            }
        };
        match token.kind {
            TokenKind::Number => {
                // Finiteness is checked at lex time.
                let value: f64 = token.text.parse().expect("lexer emits parseable numbers");
                Ok(OffsetExpr::Const(value))
            }
            TokenKind::Ident => match token.text.as_str() {
                "l" => Ok(OffsetExpr::Var),
                "pi" => Ok(OffsetExpr::Const(std::f64::consts::PI)),
                "e" => Ok(OffsetExpr::Const(std::f64::consts::E)),
                name => {
                    let Some(func) = Func::from_name(name) else {
                        return Err(Error::UnknownIdentifier {
                            name: name.to_string(),
                            position: token.position,
                        });
                    };
                    self.eat(TokenKind::LParen, "'(' after function name")?;
                    let arg = self.expr(depth + 1)?;
                    self.eat(TokenKind::RParen, "')'")?;
                    Ok(OffsetExpr::Call(func, Box::new(arg)))
                }
            },
            TokenKind::LParen => {
                let inner = self.expr(depth + 1)?;
                self.eat(TokenKind::RParen, "')'")?;
                Ok(inner)
            }
            _ => Err(Error::Syntax {
                position: token.position,
                message: format!("expected expression, found '{}'", token.text),
            }),
        }
    }
}

impl OffsetExpr {
    /// Parse source text into an AST per the module grammar.
    pub fn parse(text: &str) -> Result<Self> {
        let tokens = tokenize(text)?;
        if tokens.is_empty() {
            return Err(Error::Syntax {
                position: 0,
                message: "empty expression".to_string(),
            });
        }
        let mut parser = Parser {
            tokens,
            pos: 0,
            end: text.len(),
        };
        let expr = parser.expr(0)?;
        if let Some(t) = parser.peek() {
            return Err(Error::Syntax {
                position: t.position,
                message: format!("unexpected trailing input '{}'", t.text),
            });
        }
        Ok(expr)
    }

    /// Evaluate at `l`. Total: non-finite results (ln 0, 1/0, ...) are
    /// returned as values, never errors.
    pub fn evaluate(&self, l: f64) -> f64 {
        match self {
            OffsetExpr::Const(c) => *c,
            OffsetExpr::Var => l,
            OffsetExpr::Neg(child) => -child.evaluate(l),
            OffsetExpr::Binary(op, a, b) => op.apply(a.evaluate(l), b.evaluate(l)),
            OffsetExpr::Call(func, arg) => func.apply(arg.evaluate(l)),
        }
    }

    /// Fully parenthesized canonical text; reparsing evaluates identically.
    pub fn render(&self) -> String {
        match self {
            OffsetExpr::Const(c) => {
                let text = format_const(*c);
                // A leading sign would reparse at the wrong precedence
                // ("-2 ^ 2" is -(2^2)); parenthesize to keep the literal atomic.
                if text.starts_with('-') {
                    format!("({text})")
                } else {
                    text
                }
            }
            OffsetExpr::Var => "l".to_string(),
            OffsetExpr::Neg(child) => format!("(-{})", child.render()),
            OffsetExpr::Binary(op, a, b) => {
                format!("({} {} {})", a.render(), op.symbol(), b.render())
            }
            OffsetExpr::Call(func, arg) => format!("{}({})", func.name(), arg.render()),
        }
    }

    /// True when the expression references the variable `l` anywhere.
    pub fn contains_var(&self) -> bool {
        match self {
            OffsetExpr::Const(_) => false,
            OffsetExpr::Var => true,
            OffsetExpr::Neg(child) => child.contains_var(),
            OffsetExpr::Binary(_, a, b) => a.contains_var() || b.contains_var(),
            OffsetExpr::Call(_, arg) => arg.contains_var(),
        }
    }
}

fn format_const(c: f64) -> String {
    debug_assert!(c.is_finite(), "constants are finite by construction");
    // f64 Display is shortest-round-trip, so reparsing recovers the bits.
    format!("{c}")
}

impl FromStr for OffsetExpr {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        OffsetExpr::parse(s)
    }
}

impl fmt::Display for OffsetExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{E, PI};

    fn eval(text: &str, l: f64) -> f64 {
        OffsetExpr::parse(text).unwrap().evaluate(l)
    }

    #[test]
    fn parses_sum_of_var_and_call() {
        let expr = OffsetExpr::parse("l + sin(l)").unwrap();
        assert_eq!(
            expr,
            OffsetExpr::Binary(
                BinaryOp::Add,
                Box::new(OffsetExpr::Var),
                Box::new(OffsetExpr::Call(Func::Sin, Box::new(OffsetExpr::Var))),
            )
        );
    }

    #[test]
    fn parses_bare_constant() {
        assert_eq!(OffsetExpr::parse("2").unwrap(), OffsetExpr::Const(2.0));
    }

    #[test]
    fn unclosed_call_reports_end_position() {
        match OffsetExpr::parse("sin(") {
            Err(Error::Syntax { position, .. }) => assert_eq!(position, 4),
            other => panic!("expected syntax error, got {other:?}"),
        }
    }

    #[test]
    fn precedence_and_associativity() {
        assert_eq!(eval("2+3*4", 0.0), 14.0);
        assert_eq!(eval("2*3^2", 0.0), 18.0);
        assert_eq!(eval("-2^2", 0.0), -4.0);
        assert_eq!(eval("2^3^2", 0.0), 512.0);
        assert_eq!(eval("2^-1", 0.0), 0.5);
        assert_eq!(eval("1-2-3", 0.0), -4.0);
        assert_eq!(eval("8/4/2", 0.0), 1.0);
    }

    #[test]
    fn named_constants_fold_at_parse() {
        assert_eq!(OffsetExpr::parse("pi").unwrap(), OffsetExpr::Const(PI));
        assert_eq!(OffsetExpr::parse("e").unwrap(), OffsetExpr::Const(E));
        assert_eq!(eval("9/8*pi", 0.0), 9.0 / 8.0 * PI);
        assert_eq!(eval("136/100", 0.0), 1.36);
    }

    #[test]
    fn log_is_natural_logarithm() {
        assert_eq!(
            OffsetExpr::parse("log(l)").unwrap(),
            OffsetExpr::parse("ln(l)").unwrap()
        );
        assert_eq!(eval("log(l)", E), 1.0);
    }

    #[test]
    fn evaluate_worked_offset_value() {
        let d = eval("l + sin(l)", 0.197);
        assert!((d - 0.393).abs() <= 5e-4, "got {d}");
    }

    #[test]
    fn evaluate_reciprocal_sum() {
        assert_eq!(eval("l + 1/l", 1.0), 2.0);
    }

    #[test]
    fn non_finite_results_are_values() {
        assert_eq!(eval("ln(l)", 0.0), f64::NEG_INFINITY);
        assert!(eval("ln(l)", -1.0).is_nan());
        assert_eq!(eval("1/l", 0.0), f64::INFINITY);
        assert_eq!(eval("l + 1/l", 0.0), f64::INFINITY);
    }

    #[test]
    fn render_canonical_forms() {
        assert_eq!(
            OffsetExpr::parse("l + sin(l)").unwrap().render(),
            "(l + sin(l))"
        );
        assert_eq!(OffsetExpr::Const(2.0).render(), "2");
        assert_eq!(
            OffsetExpr::Neg(Box::new(OffsetExpr::Var)).render(),
            "(-l)"
        );
    }

    #[test]
    fn render_parenthesizes_negative_constants() {
        let tricky = OffsetExpr::Binary(
            BinaryOp::Pow,
            Box::new(OffsetExpr::Const(-2.0)),
            Box::new(OffsetExpr::Const(0.5)),
        );
        assert_eq!(tricky.render(), "((-2) ^ 0.5)");
        let reparsed = OffsetExpr::parse(&tricky.render()).unwrap();
        assert!(tricky.evaluate(1.0).is_nan());
        assert!(reparsed.evaluate(1.0).is_nan());
    }

    #[test]
    fn render_round_trips_bit_exactly() {
        for text in [
            "l + sin(l)",
            "2*sin(l)",
            "ln(l)",
            "l + 1/l",
            "-2^2",
            "sqrt(abs(l - 3))",
            "exp(-l/2) * cos(3*l)",
            "0.1 + 0.2",
            "pi * e",
        ] {
            let a = OffsetExpr::parse(text).unwrap();
            let b = OffsetExpr::parse(&a.render()).unwrap();
            for i in 0..64 {
                let l = i as f64 * 0.173 - 2.0;
                let va = a.evaluate(l);
                let vb = b.evaluate(l);
                assert!(
                    va.to_bits() == vb.to_bits() || (va.is_nan() && vb.is_nan()),
                    "{text}: {va} vs {vb} at l = {l}"
                );
            }
        }
    }

    #[test]
    fn rejects_malformed_input() {
        for text in ["", "   ", "2 +", "* 3", "(1", "1)", "sin l", "1..2", "1.", "l l"] {
            assert!(
                matches!(OffsetExpr::parse(text), Err(Error::Syntax { .. })),
                "accepted {text:?}"
            );
        }
    }

    #[test]
    fn rejects_unknown_identifiers() {
        match OffsetExpr::parse("2 * foo(l)") {
            Err(Error::UnknownIdentifier { name, position }) => {
                assert_eq!(name, "foo");
                assert_eq!(position, 4);
            }
            other => panic!("expected unknown identifier, got {other:?}"),
        }
        assert!(OffsetExpr::parse("x + 1").is_err());
    }

    #[test]
    fn rejects_out_of_range_literals() {
        let huge = "9".repeat(400);
        assert!(matches!(
            OffsetExpr::parse(&huge),
            Err(Error::Syntax { .. })
        ));
    }

    #[test]
    fn deep_nesting_is_rejected_not_crashed() {
        let mut text = String::new();
        for _ in 0..400 {
            text.push('(');
        }
        text.push('1');
        for _ in 0..400 {
            text.push(')');
        }
        assert!(matches!(
            OffsetExpr::parse(&text),
            Err(Error::Syntax { .. })
        ));
        // Shallow nesting still parses.
        let ok = format!("{}1{}", "(".repeat(40), ")".repeat(40));
        assert_eq!(OffsetExpr::parse(&ok).unwrap(), OffsetExpr::Const(1.0));
    }

    #[test]
    fn token_positions_strictly_increase() {
        let tokens = tokenize("l + sin(l) * 2.5").unwrap();
        for pair in tokens.windows(2) {
            assert!(pair[0].position < pair[1].position);
        }
        assert_eq!(tokens[0].kind, TokenKind::Ident);
        assert_eq!(tokens.last().unwrap().text, "2.5");
    }

    #[test]
    fn contains_var_detection() {
        assert!(OffsetExpr::parse("l + sin(l)").unwrap().contains_var());
        assert!(OffsetExpr::parse("sin(l)").unwrap().contains_var());
        assert!(!OffsetExpr::parse("2 * pi").unwrap().contains_var());
    }
}
