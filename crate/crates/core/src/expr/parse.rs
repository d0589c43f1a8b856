//! Recursive-descent parser for wqo expressions.
//!
//! ```text
//! expr   := union (('++' | '+') union)*
//! union  := term ('|' term)*
//! term   := factor (('*' | '.') factor)*
//! factor := base ('^<w')*
//! base   := 'o(' ord ')' | NAT | 'w' ['^' atom]
//!         | 'G(' NAT ')' | 'Pf(' expr ')' | 'PfPlus(' expr ')'
//!         | 'M(' expr ')' | 'Mn(' expr ',' NAT ')'
//!         | 'Phi(' ord ')' | 'Sim(' ord ')' | 'SimExt(' ord ',' NAT ')'
//!         | '(' expr ')'
//! ```

use std::num::NonZeroUsize;

use thiserror::Error;

use super::WqoExpr;
use crate::ordinal::{OrdinalError, Scanner};
use crate::Ordinal;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at position {position}: expected {}, found {found}", expected.join(" or "))]
pub struct ParseError {
    pub position: usize,
    pub expected: Vec<String>,
    pub found: String,
}

impl From<OrdinalError> for ParseError {
    fn from(e: OrdinalError) -> Self {
        match e {
            OrdinalError::Parse {
                position,
                expected,
                found,
            } => ParseError {
                position,
                expected: vec![expected],
                found,
            },
            other => ParseError {
                position: 0,
                expected: vec!["ordinal".into()],
                found: other.to_string(),
            },
        }
    }
}

const BASE_TOKENS: &[&str] = &[
    "'o('",
    "natural number",
    "'w'",
    "'G('",
    "'Pf('",
    "'PfPlus('",
    "'M('",
    "'Mn('",
    "'Phi('",
    "'Sim('",
    "'SimExt('",
    "'('",
];

pub fn parse(text: &str) -> Result<WqoExpr, ParseError> {
    let mut p = Parser {
        sc: Scanner::new(text),
    };
    let e = p.expr()?;
    if !p.sc.at_end() {
        return Err(p.error(&["'+'", "'++'", "'|'", "'*'", "'.'", "'^<w'", "end of input"]));
    }
    Ok(e)
}

struct Parser<'a> {
    sc: Scanner<'a>,
}

impl Parser<'_> {
    fn error(&mut self, expected: &[&str]) -> ParseError {
        ParseError {
            position: self.sc.position(),
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: self.sc.found(),
        }
    }

    fn expect(&mut self, token: &str) -> Result<(), ParseError> {
        if self.sc.eat(token) {
            Ok(())
        } else {
            Err(self.error(&[&format!("'{token}'")]))
        }
    }

    fn expr(&mut self) -> Result<WqoExpr, ParseError> {
        let mut acc = self.union()?;
        while self.sc.eat("++") || self.sc.eat("+") {
            acc = WqoExpr::lex_sum(acc, self.union()?);
        }
        Ok(acc)
    }

    fn union(&mut self) -> Result<WqoExpr, ParseError> {
        let mut acc = self.term()?;
        while self.sc.eat("|") {
            acc = WqoExpr::disj(acc, self.term()?);
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<WqoExpr, ParseError> {
        let mut acc = self.factor()?;
        loop {
            if self.sc.eat("*") {
                acc = WqoExpr::prod(acc, self.factor()?);
            } else if self.sc.eat(".") {
                acc = WqoExpr::lex_prod(acc, self.factor()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<WqoExpr, ParseError> {
        let mut acc = self.base()?;
        while self.sc.starts_with("^<") {
            self.sc.advance(2);
            self.expect("w")?;
            acc = WqoExpr::words(acc);
        }
        Ok(acc)
    }

    fn call_arg_expr(&mut self, name: &str) -> Result<WqoExpr, ParseError> {
        self.sc.advance(name.len());
        self.expect("(")?;
        let e = self.expr()?;
        self.expect(")")?;
        Ok(e)
    }

    fn call_arg_ordinal(&mut self, name: &str) -> Result<Ordinal, ParseError> {
        self.sc.advance(name.len());
        self.expect("(")?;
        let a = self.sc.ordinal()?;
        self.expect(")")?;
        Ok(a)
    }

    fn nat_arg(&mut self) -> Result<u64, ParseError> {
        let s = self
            .sc
            .digits()
            .ok_or_else(|| self.error(&["natural number"]))?;
        s.parse().map_err(|_| ParseError {
            position: self.sc.position() - s.len(),
            expected: vec!["natural number below 2^64".into()],
            found: s.to_string(),
        })
    }

    fn base(&mut self) -> Result<WqoExpr, ParseError> {
        if self.sc.eat("(") {
            let e = self.expr()?;
            self.expect(")")?;
            return Ok(e);
        }
        if self.sc.peek().is_some_and(|c| c.is_ascii_digit()) {
            return Ok(WqoExpr::Ord(self.sc.bare_ordinal()?));
        }
        let Some(ident) = self.sc.peek_ident() else {
            return Err(self.error(BASE_TOKENS));
        };
        match ident {
            "w" => Ok(WqoExpr::Ord(self.sc.bare_ordinal()?)),
            "o" => Ok(WqoExpr::Ord(self.call_arg_ordinal(ident)?)),
            "Pf" => Ok(WqoExpr::pf(self.call_arg_expr(ident)?)),
            "PfPlus" => Ok(WqoExpr::pf_plus(self.call_arg_expr(ident)?)),
            "M" => Ok(WqoExpr::multisets(self.call_arg_expr(ident)?)),
            "Phi" => Ok(WqoExpr::Phi(self.call_arg_ordinal(ident)?)),
            "Sim" => Ok(WqoExpr::Sim(self.call_arg_ordinal(ident)?)),
            "G" => {
                self.sc.advance(1);
                self.expect("(")?;
                let pos = self.sc.position();
                let k = self.nat_arg()?;
                let k = usize::try_from(k)
                    .ok()
                    .and_then(NonZeroUsize::new)
                    .ok_or_else(|| ParseError {
                        position: pos,
                        expected: vec!["positive natural number".into()],
                        found: k.to_string(),
                    })?;
                self.expect(")")?;
                Ok(WqoExpr::Gamma(k))
            }
            "Mn" => {
                self.sc.advance(2);
                self.expect("(")?;
                let e = self.expr()?;
                self.expect(",")?;
                let n = self.nat_arg()?;
                self.expect(")")?;
                Ok(WqoExpr::multisets_n(e, n as usize))
            }
            "SimExt" => {
                self.sc.advance(ident.len());
                self.expect("(")?;
                let a = self.sc.ordinal()?;
                self.expect(",")?;
                let m = self.nat_arg()?;
                self.expect(")")?;
                Ok(WqoExpr::SimExt(a, m))
            }
            _ => Err(self.error(BASE_TOKENS)),
        }
    }
}
