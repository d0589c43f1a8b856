//! Ordinal text syntax: `w^(w^2)*3+w*2+5`.
//!
//! ```text
//! ord  := term ('+' term)*
//! term := 'w' ['^' atom] ['*' nat] | nat
//! atom := nat | 'w' | '(' ord ')'
//! ```

use std::fmt::{self, Display};
use std::str::FromStr;

use super::{CnfOrdinal, Natural, OrdinalError};

/// Character cursor shared by the ordinal and expression parsers.
#[derive(Debug, Clone)]
pub struct Scanner<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Scanner<'a> {
    pub fn new(src: &'a str) -> Self {
        Scanner { src, pos: 0 }
    }

    /// Byte offset of the next unread character (after whitespace).
    pub fn position(&mut self) -> usize {
        self.skip_ws();
        self.pos
    }

    pub fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    pub fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    pub fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos == self.src.len()
    }

    pub fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    pub fn starts_with(&mut self, token: &str) -> bool {
        self.skip_ws();
        self.rest().starts_with(token)
    }

    /// Consumes `token` if it comes next.
    pub fn eat(&mut self, token: &str) -> bool {
        if self.starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    /// Description of the next token, for error messages.
    pub fn found(&mut self) -> String {
        match self.peek() {
            None => "end of input".to_string(),
            Some(c) => format!("'{c}'"),
        }
    }

    pub fn error(&mut self, expected: &str) -> OrdinalError {
        OrdinalError::Parse {
            position: self.position(),
            expected: expected.to_string(),
            found: self.found(),
        }
    }

    pub fn expect(&mut self, token: &str) -> Result<(), OrdinalError> {
        if self.eat(token) {
            Ok(())
        } else {
            Err(self.error(&format!("'{token}'")))
        }
    }

    /// A run of ASCII digits.
    pub fn digits(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let len = self
            .rest()
            .find(|c: char| !c.is_ascii_digit())
            .unwrap_or(self.rest().len());
        if len == 0 {
            return None;
        }
        let s = &self.rest()[..len];
        self.pos += len;
        Some(s)
    }

    pub fn nat<N: Natural>(&mut self) -> Result<N, OrdinalError> {
        let s = self.digits().ok_or_else(|| self.error("natural number"))?;
        N::from_str_radix(s, 10).map_err(|_| OrdinalError::Overflow(s.to_string()))
    }

    /// An identifier `[A-Za-z][A-Za-z0-9_]*`, without consuming it.
    pub fn peek_ident(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let rest = self.rest();
        if !rest.starts_with(|c: char| c.is_ascii_alphabetic()) {
            return None;
        }
        let len = rest
            .find(|c: char| !(c.is_ascii_alphanumeric() || c == '_'))
            .unwrap_or(rest.len());
        Some(&rest[..len])
    }

    pub fn advance(&mut self, bytes: usize) {
        self.pos += bytes;
    }

    /// Parses an ordinal at the cursor.
    pub fn ordinal<N: Natural>(&mut self) -> Result<CnfOrdinal<N>, OrdinalError> {
        let mut acc = self.ordinal_term()?;
        while self.starts_with("+") && !self.starts_with("++") {
            let save = self.pos;
            self.advance(1);
            match self.peek() {
                Some(c) if c == 'w' || c.is_ascii_digit() => {
                    acc = acc.add(&self.ordinal_term()?);
                }
                _ => {
                    self.pos = save;
                    break;
                }
            }
        }
        Ok(acc)
    }

    fn ordinal_term<N: Natural>(&mut self) -> Result<CnfOrdinal<N>, OrdinalError> {
        if self.peek_ident() == Some("w") {
            self.advance(1);
            let exponent = if self.starts_with("^") && !self.starts_with("^<") {
                self.advance(1);
                self.ordinal_atom()?
            } else {
                CnfOrdinal::one()
            };
            let coefficient = if self.eat("*") { self.nat()? } else { N::one() };
            return Ok(CnfOrdinal::monomial(exponent, coefficient));
        }
        if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            return Ok(CnfOrdinal::from_nat(self.nat()?));
        }
        Err(self.error("'w' or natural number"))
    }

    /// `'w' ['^' atom] | nat`, the ordinal literals allowed bare inside
    /// wqo expressions, where `+` and `*` are wqo operators.
    pub fn bare_ordinal<N: Natural>(&mut self) -> Result<CnfOrdinal<N>, OrdinalError> {
        if self.peek_ident() == Some("w") {
            self.advance(1);
            if self.starts_with("^") && !self.starts_with("^<") {
                self.advance(1);
                return Ok(CnfOrdinal::omega_pow(self.ordinal_atom()?));
            }
            return Ok(CnfOrdinal::omega());
        }
        if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            return Ok(CnfOrdinal::from_nat(self.nat()?));
        }
        Err(self.error("'w' or natural number"))
    }

    fn ordinal_atom<N: Natural>(&mut self) -> Result<CnfOrdinal<N>, OrdinalError> {
        if self.eat("(") {
            let inner = self.ordinal()?;
            self.expect(")")?;
            return Ok(inner);
        }
        if self.peek_ident() == Some("w") {
            self.advance(1);
            return Ok(CnfOrdinal::omega());
        }
        if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            return Ok(CnfOrdinal::from_nat(self.nat()?));
        }
        Err(self.error("'(', 'w' or natural number"))
    }
}

impl<N: Natural> FromStr for CnfOrdinal<N> {
    type Err = OrdinalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut sc = Scanner::new(s);
        let value = sc.ordinal()?;
        if !sc.at_end() {
            return Err(sc.error("'+' or end of input"));
        }
        Ok(value)
    }
}

impl<N: Natural> Display for CnfOrdinal<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            if t.exponent.is_zero() {
                write!(f, "{}", t.coefficient)?;
                continue;
            }
            f.write_str("w")?;
            if !t.exponent.is_one() {
                if t.exponent.is_finite() || t.exponent == CnfOrdinal::omega() {
                    write!(f, "^{}", t.exponent)?;
                } else {
                    write!(f, "^({})", t.exponent)?;
                }
            }
            if !t.coefficient.is_one() {
                write!(f, "*{}", t.coefficient)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use crate::SmallOrdinal as O;

    #[test]
    fn parses_and_prints_canonically() {
        for s in [
            "0",
            "5",
            "w",
            "w^w",
            "w^(w^2)*3+w*2+5",
            "w^(w+1)",
            "w^2*7+1",
        ] {
            let a: O = s.parse().unwrap();
            assert_eq!(a.to_string(), s);
        }
    }

    #[test]
    fn non_canonical_input_is_normalised() {
        let a: O = "1+w".parse().unwrap();
        assert_eq!(a.to_string(), "w");
        let b: O = "w + w^2 + 3 + 4".parse().unwrap();
        assert_eq!(b.to_string(), "w^2+7");
        let c: O = "w^1*1".parse().unwrap();
        assert_eq!(c.to_string(), "w");
        let d: O = "w^(0)".parse().unwrap();
        assert_eq!(d.to_string(), "1");
    }

    #[test]
    fn reports_position_of_errors() {
        let err = "w^".parse::<O>().unwrap_err();
        assert!(matches!(
            err,
            crate::ordinal::OrdinalError::Parse { position: 2, .. }
        ));
        assert!("w+".parse::<O>().is_err());
        assert!("x".parse::<O>().is_err());
        assert!("w^(w".parse::<O>().is_err());
        assert!("99999999999999999999999".parse::<O>().is_err());
    }
}
