//! Arithmetic over sexagesimal literals: `7 * 0;7,55`, `(0;35) * (0;35)`.
//!
//! Grammar, with the usual precedence and left associativity:
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/' | '×' | '÷') unary)*
//! unary  := '-' unary | atom
//! atom   := literal | '(' expr ')'
//! ```
//!
//! Literals follow the sexagesimal grammar without a sign. Whitespace may
//! separate tokens but not appear inside a literal. Positions in errors are
//! character offsets from zero.

use std::fmt;

use thiserror::Error;

use crate::sexagesimal::{parse_sexagesimal, rational_arithmetic, Op, ParseErrorKind, Rational};

/// Nesting limit for parentheses and unary minus.
pub const MAX_DEPTH: usize = 256;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExprError {
    #[error("empty expression")]
    Empty,
    #[error("unexpected `{found}` at position {position}")]
    Unexpected { position: usize, found: char },
    #[error("unexpected end of expression at position {position}")]
    UnexpectedEnd { position: usize },
    #[error("bad literal at position {position}: {kind}")]
    Literal { position: usize, kind: ParseErrorKind },
    #[error("unbalanced parenthesis at position {position}")]
    Unbalanced { position: usize },
    #[error("expression nested deeper than {MAX_DEPTH} at position {position}")]
    TooDeep { position: usize },
    #[error("division by zero at position {position}")]
    DivisionByZero { position: usize },
}

impl ExprError {
    pub fn position(&self) -> Option<usize> {
        match self {
            ExprError::Empty => None,
            ExprError::Unexpected { position, .. }
            | ExprError::UnexpectedEnd { position }
            | ExprError::Literal { position, .. }
            | ExprError::Unbalanced { position }
            | ExprError::TooDeep { position }
            | ExprError::DivisionByZero { position } => Some(*position),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl BinOp {
    fn symbol(self) -> char {
        match self {
            BinOp::Add => '+',
            BinOp::Sub => '-',
            BinOp::Mul => '*',
            BinOp::Div => '/',
        }
    }
}

/// Parsed expression tree.
#[derive(Debug, Clone, PartialEq)]
pub enum SexExpression {
    Literal(Rational),
    Neg(Box<SexExpression>),
    Binary {
        op: BinOp,
        /// Position of the operator, used to locate division by zero.
        position: usize,
        lhs: Box<SexExpression>,
        rhs: Box<SexExpression>,
    },
}

impl SexExpression {
    pub fn eval(&self) -> Result<Rational, ExprError> {
        match self {
            SexExpression::Literal(v) => Ok(v.clone()),
            SexExpression::Neg(e) => Ok(-e.eval()?),
            SexExpression::Binary { op, position, lhs, rhs } => {
                let (l, r) = (lhs.eval()?, rhs.eval()?);
                let op = match op {
                    BinOp::Add => Op::Add,
                    BinOp::Sub => Op::Sub,
                    BinOp::Mul => Op::Mul,
                    BinOp::Div => Op::Div,
                };
                rational_arithmetic(&l, op, &r).map_err(|_| ExprError::DivisionByZero { position: *position })
            }
        }
    }
}

impl fmt::Display for SexExpression {
    /// Fully parenthesised form with rational literals.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SexExpression::Literal(v) => write!(f, "{v}"),
            SexExpression::Neg(e) => write!(f, "(-{e})"),
            SexExpression::Binary { op, lhs, rhs, .. } => write!(f, "({lhs} {} {rhs})", op.symbol()),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Lit(Rational),
    Op(BinOp),
    Open,
    Close,
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ExprError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let tok = match c {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '0'..='9' | ',' | ';' => {
                let start = i;
                while i < chars.len() && matches!(chars[i], '0'..='9' | ',' | ';') {
                    i += 1;
                }
                let literal: String = chars[start..i].iter().collect();
                let value = parse_sexagesimal(&literal)
                    .map_err(|e| ExprError::Literal { position: start + e.position, kind: e.kind })?;
                out.push((start, Tok::Lit(value)));
                continue;
            }
            '+' => Tok::Op(BinOp::Add),
            '-' | '\u{2212}' => Tok::Op(BinOp::Sub),
            '*' | '\u{00d7}' => Tok::Op(BinOp::Mul),
            '/' | '\u{00f7}' => Tok::Op(BinOp::Div),
            '(' => Tok::Open,
            ')' => Tok::Close,
            other => return Err(ExprError::Unexpected { position: i, found: other }),
        };
        out.push((i, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    depth: usize,
}

impl Parser {
    fn peek(&self) -> Option<&(usize, Tok)> {
        self.toks.get(self.pos)
    }

    fn here(&self) -> usize {
        self.peek().map_or(self.end, |t| t.0)
    }

    fn descend(&mut self) -> Result<(), ExprError> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return Err(ExprError::TooDeep { position: self.here() });
        }
        Ok(())
    }

    fn expr(&mut self) -> Result<SexExpression, ExprError> {
        let mut lhs = self.term()?;
        while let Some(&(position, Tok::Op(op @ (BinOp::Add | BinOp::Sub)))) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            lhs = SexExpression::Binary { op, position, lhs: Box::new(lhs), rhs: Box::new(rhs) };
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<SexExpression, ExprError> {
        let mut lhs = self.unary()?;
        while let Some(&(position, Tok::Op(op @ (BinOp::Mul | BinOp::Div)))) = self.peek() {
            self.pos += 1;
            let rhs = self.unary()?;
            lhs = SexExpression::Binary { op, position, lhs: Box::new(lhs), rhs: Box::new(rhs) };
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<SexExpression, ExprError> {
        if let Some((_, Tok::Op(BinOp::Sub))) = self.peek() {
            self.pos += 1;
            self.descend()?;
            let inner = self.unary()?;
            self.depth -= 1;
            return Ok(SexExpression::Neg(Box::new(inner)));
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<SexExpression, ExprError> {
        let Some((position, tok)) = self.peek().cloned() else {
            return Err(ExprError::UnexpectedEnd { position: self.end });
        };
        self.pos += 1;
        match tok {
            Tok::Lit(v) => Ok(SexExpression::Literal(v)),
            Tok::Open => {
                self.descend()?;
                let inner = self.expr()?;
                self.depth -= 1;
                match self.peek() {
                    Some((_, Tok::Close)) => {
                        self.pos += 1;
                        Ok(inner)
                    }
                    Some(&(p, _)) => {
                        Err(ExprError::Unexpected { position: p, found: found_char(&self.toks[self.pos].1) })
                    }
                    None => Err(ExprError::Unbalanced { position }),
                }
            }
            Tok::Close => Err(ExprError::Unbalanced { position }),
            other => Err(ExprError::Unexpected { position, found: found_char(&other) }),
        }
    }
}

fn found_char(t: &Tok) -> char {
    match t {
        Tok::Lit(_) => '0',
        Tok::Op(op) => op.symbol(),
        Tok::Open => '(',
        Tok::Close => ')',
    }
}

pub fn parse_expression(text: &str) -> Result<SexExpression, ExprError> {
    let toks = lex(text)?;
    if toks.is_empty() {
        return Err(ExprError::Empty);
    }
    let mut p = Parser { toks, pos: 0, end: text.chars().count(), depth: 0 };
    let e = p.expr()?;
    match p.peek() {
        None => Ok(e),
        Some((position, Tok::Close)) => Err(ExprError::Unbalanced { position: *position }),
        Some((position, t)) => Err(ExprError::Unexpected { position: *position, found: found_char(t) }),
    }
}

/// Parses and evaluates exactly.
pub fn eval_sex_expression(text: &str) -> Result<Rational, ExprError> {
    parse_expression(text)?.eval()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sexagesimal::{render_sexagesimal, RenderMode};

    fn sexa(text: &str) -> String {
        render_sexagesimal(&eval_sex_expression(text).unwrap(), 6, RenderMode::Truncate).unwrap().to_string()
    }

    #[test]
    fn tablet_products() {
        assert_eq!(sexa("7 * 0;7,55"), "0;55,25");
        assert_eq!(sexa("(0;35) * (0;35)"), "0;20,25");
        assert_eq!(sexa("1 + 0"), "1");
        assert_eq!(sexa("4 × 0;20,25"), "1;21,40");
        assert_eq!(sexa("0;15 × 0;31,40"), "0;7,55");
    }

    #[test]
    fn precedence_and_associativity() {
        assert_eq!(eval_sex_expression("1 + 2 * 3").unwrap(), Rational::from_integer(7));
        assert_eq!(eval_sex_expression("8 - 3 - 2").unwrap(), Rational::from_integer(3));
        assert_eq!(eval_sex_expression("8 / 4 / 2").unwrap(), Rational::one());
        assert_eq!(eval_sex_expression("(1 + 2) * 3").unwrap(), Rational::from_integer(9));
        assert_eq!(eval_sex_expression("-1 - -1").unwrap(), Rational::zero());
        assert_eq!(eval_sex_expression("1 ÷ 3").unwrap(), Rational::ratio(1, 3));
        assert_eq!(eval_sex_expression("1,0 − 0;30").unwrap(), Rational::ratio(119, 2));
        assert_eq!(parse_expression("1-2*3").unwrap().to_string(), "(1 - (2 * 3))");
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(eval_sex_expression(""), Err(ExprError::Empty));
        assert_eq!(eval_sex_expression("   "), Err(ExprError::Empty));
        assert_eq!(eval_sex_expression("1 / (2 - 2)"), Err(ExprError::DivisionByZero { position: 2 }));
        assert_eq!(eval_sex_expression("1 + x"), Err(ExprError::Unexpected { position: 4, found: 'x' }));
        assert_eq!(eval_sex_expression("1 +"), Err(ExprError::UnexpectedEnd { position: 3 }));
        assert_eq!(eval_sex_expression("(1 + 2"), Err(ExprError::Unbalanced { position: 0 }));
        assert_eq!(eval_sex_expression("1 + 2)"), Err(ExprError::Unbalanced { position: 5 }));
        assert_eq!(eval_sex_expression("2 3"), Err(ExprError::Unexpected { position: 2, found: '0' }));
        assert!(matches!(
            eval_sex_expression("1 + 0;60"),
            Err(ExprError::Literal { kind: ParseErrorKind::DigitOutOfRange(_), .. })
        ));
        assert!(matches!(eval_sex_expression("1;;2"), Err(ExprError::Literal { .. })));
    }

    #[test]
    fn depth_is_bounded() {
        let deep = format!("{}1{}", "(".repeat(MAX_DEPTH + 1), ")".repeat(MAX_DEPTH + 1));
        assert!(matches!(eval_sex_expression(&deep), Err(ExprError::TooDeep { .. })));
        let ok = format!("{}1{}", "(".repeat(MAX_DEPTH), ")".repeat(MAX_DEPTH));
        assert_eq!(eval_sex_expression(&ok).unwrap(), Rational::one());
        let negs = format!("{}1", "-".repeat(MAX_DEPTH + 1));
        assert!(matches!(eval_sex_expression(&negs), Err(ExprError::TooDeep { .. })));
    }
}
