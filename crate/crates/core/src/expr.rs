//! Construction expressions: a base algebra followed by a chain of
//! `⊕⊤` (Iséki extension) and `⊔2` (union with 2) steps.
//!
//! Text form:
//!
//! ```text
//! expr := "2" | "PI" | "TC" | "(" expr "+T" ")" | "(" expr "+2" ")"
//! ```
//!
//! The parser is more permissive than the grammar: it also accepts the
//! Unicode operators `⊕⊤` / `⊔2` and postfix steps outside parentheses, so
//! `(PI⊕⊤)⊔2` and `((PI+T)+2)` parse to the same expression.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::algebra::{pi, tc, two, BckAlgebra};
use crate::commuting::CommutingReport;
use crate::construct::{extend_top, union};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Base {
    Two,
    Pi,
    Tc,
}

impl Base {
    pub fn algebra(self) -> BckAlgebra {
        match self {
            Base::Two => two(),
            Base::Pi => pi(),
            Base::Tc => tc(),
        }
    }

    pub fn order(self) -> usize {
        match self {
            Base::Two => 2,
            Base::Pi | Base::Tc => 3,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Base::Two => "2",
            Base::Pi => "PI",
            Base::Tc => "TC",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    /// `⊕⊤`
    ExtendTop,
    /// `⊔2`
    UnionTwo,
}

impl Step {
    pub fn apply(self, algebra: &BckAlgebra) -> BckAlgebra {
        match self {
            Step::ExtendTop => extend_top(algebra),
            Step::UnionTwo => union(&[algebra.clone(), two()]).expect("two components"),
        }
    }

    pub fn ascii(self) -> &'static str {
        match self {
            Step::ExtendTop => "+T",
            Step::UnionTwo => "+2",
        }
    }

    pub fn unicode(self) -> &'static str {
        match self {
            Step::ExtendTop => "⊕⊤",
            Step::UnionTwo => "⊔2",
        }
    }
}

/// A base algebra and the steps applied to it, innermost first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ConstructionExpr {
    pub base: Base,
    pub steps: Vec<Step>,
}

impl ConstructionExpr {
    pub fn leaf(base: Base) -> Self {
        ConstructionExpr { base, steps: Vec::new() }
    }

    /// This expression with one more step on the outside.
    pub fn then(&self, step: Step) -> Self {
        let mut steps = self.steps.clone();
        steps.push(step);
        ConstructionExpr { base: self.base, steps }
    }

    /// Order of the algebra this expression evaluates to.
    pub fn order(&self) -> usize {
        self.base.order() + self.steps.len()
    }

    pub fn eval(&self) -> BckAlgebra {
        self.steps
            .iter()
            .fold(self.base.algebra(), |acc, step| step.apply(&acc))
    }

    /// Directly computed commuting reports after the base and after each step.
    pub fn degree_trace(&self) -> Vec<CommutingReport> {
        let mut algebra = self.base.algebra();
        let mut trace = vec![algebra.commuting_degree()];
        for step in &self.steps {
            algebra = step.apply(&algebra);
            trace.push(algebra.commuting_degree());
        }
        trace
    }

    /// Unicode form without the outermost parentheses, e.g. `(PI⊕⊤)⊔2`.
    pub fn to_unicode(&self) -> String {
        let mut s = self.base.symbol().to_string();
        for (i, step) in self.steps.iter().enumerate() {
            if i > 0 {
                s = format!("({s})");
            }
            s.push_str(step.unicode());
        }
        s
    }
}

/// Fully parenthesized ASCII form, e.g. `((PI+T)+2)`.
impl fmt::Display for ConstructionExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for _ in &self.steps {
            f.write_str("(")?;
        }
        f.write_str(self.base.symbol())?;
        for step in &self.steps {
            write!(f, "{})", step.ascii())?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid construction expression at offset {offset}: {message}")]
pub struct ExprParseError {
    pub offset: usize,
    pub message: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Token {
    Base(Base),
    Step(Step),
    Open,
    Close,
}

fn tokenize(s: &str) -> Result<Vec<(usize, Token)>, ExprParseError> {
    const TOKENS: [(&str, Token); 9] = [
        ("PI", Token::Base(Base::Pi)),
        ("TC", Token::Base(Base::Tc)),
        ("+T", Token::Step(Step::ExtendTop)),
        ("+2", Token::Step(Step::UnionTwo)),
        ("⊕⊤", Token::Step(Step::ExtendTop)),
        ("⊔2", Token::Step(Step::UnionTwo)),
        ("2", Token::Base(Base::Two)),
        ("(", Token::Open),
        (")", Token::Close),
    ];
    let mut out = Vec::new();
    let mut rest = s;
    while let Some(c) = rest.chars().next() {
        let offset = s.len() - rest.len();
        if c.is_whitespace() {
            rest = &rest[c.len_utf8()..];
            continue;
        }
        match TOKENS.iter().find(|(text, _)| rest.starts_with(text)) {
            Some((text, token)) => {
                out.push((offset, *token));
                rest = &rest[text.len()..];
            }
            None => {
                return Err(ExprParseError {
                    offset,
                    message: format!("unexpected character {c:?}"),
                })
            }
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<Token> {
        self.tokens.get(self.pos).map(|&(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |&(o, _)| o)
    }

    fn error(&self, message: &str) -> ExprParseError {
        ExprParseError {
            offset: self.offset(),
            message: message.to_string(),
        }
    }

    // expr := primary step*
    fn expr(&mut self) -> Result<ConstructionExpr, ExprParseError> {
        let mut e = self.primary()?;
        while let Some(Token::Step(step)) = self.peek() {
            self.pos += 1;
            e.steps.push(step);
        }
        Ok(e)
    }

    // primary := base | "(" expr ")"
    fn primary(&mut self) -> Result<ConstructionExpr, ExprParseError> {
        match self.peek() {
            Some(Token::Base(b)) => {
                self.pos += 1;
                Ok(ConstructionExpr::leaf(b))
            }
            Some(Token::Open) => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(Token::Close) {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(_) => Err(self.error("expected 2, PI, TC or '('")),
            None => Err(self.error("unexpected end of input")),
        }
    }
}

impl FromStr for ConstructionExpr {
    type Err = ExprParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut parser = Parser {
            tokens: tokenize(s)?,
            pos: 0,
            end: s.len(),
        };
        let e = parser.expr()?;
        if parser.pos != parser.tokens.len() {
            return Err(parser.error("trailing input"));
        }
        Ok(e)
    }
}
