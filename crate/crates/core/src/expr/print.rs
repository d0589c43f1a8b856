//! Printing in the parser's concrete syntax, with minimal parentheses.

use std::fmt::{self, Display};

use super::WqoExpr;
use super::WqoExpr::*;
use crate::Ordinal;

const SUM: u8 = 0;
const UNION: u8 = 1;
const PRODUCT: u8 = 2;
const POSTFIX: u8 = 3;
const ATOM: u8 = 4;

fn precedence(e: &WqoExpr) -> u8 {
    match e {
        LexSum(..) => SUM,
        DisjUnion(..) => UNION,
        CartProd(..) | LexProd(..) => PRODUCT,
        Words(_) => POSTFIX,
        _ => ATOM,
    }
}

struct Wrapped<'a>(&'a WqoExpr, u8);

impl Display for Wrapped<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if precedence(self.0) < self.1 {
            write!(f, "({})", self.0)
        } else {
            write!(f, "{}", self.0)
        }
    }
}

fn leaf(a: &Ordinal) -> String {
    if a.is_finite() || *a == Ordinal::omega() {
        a.to_string()
    } else {
        format!("o({a})")
    }
}

impl Display for WqoExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let binary = |f: &mut fmt::Formatter<'_>, l, r, op: &str, prec: u8| {
            write!(f, "{}{op}{}", Wrapped(l, prec), Wrapped(r, prec + 1))
        };
        match self {
            Ord(a) => f.write_str(&leaf(a)),
            Gamma(k) => write!(f, "G({k})"),
            LexSum(l, r) => binary(f, l, r, "+", SUM),
            DisjUnion(l, r) => binary(f, l, r, "|", UNION),
            CartProd(l, r) => binary(f, l, r, "*", PRODUCT),
            LexProd(l, r) => binary(f, l, r, ".", PRODUCT),
            Words(e) => write!(f, "{}^<w", Wrapped(e, POSTFIX)),
            Multisets(e) => write!(f, "M({e})"),
            MultisetsN(e, n) => write!(f, "Mn({e},{n})"),
            Pf(e) => write!(f, "Pf({e})"),
            PfPlus(e) => write!(f, "PfPlus({e})"),
            Phi(a) => write!(f, "Phi({a})"),
            Sim(a) => write!(f, "Sim({a})"),
            SimExt(a, m) => write!(f, "SimExt({a},{m})"),
        }
    }
}

impl fmt::Debug for WqoExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use crate::expr::parse;

    #[test]
    fn round_trips_examples() {
        for s in [
            "(w+w)|(w+w)",
            "Pf(o(w^w)^<w)",
            "G(3)*G(2)",
            "M(o(w^w))*M(o(w^w))",
            "1*(2.3)",
            "1*2.3",
            "1|2+3",
            "(1+2)|3",
            "1+2|3",
            "1+(2+3)",
            "(1*2)^<w",
            "w^<w^<w",
            "Mn(G(2)|3,2)",
            "SimExt(w^w,3)+PfPlus(Phi(w^2+1))",
            "o(w*2).Sim(w)",
        ] {
            let e = parse(s).unwrap();
            assert_eq!(e.to_string(), s);
            assert_eq!(parse(&e.to_string()).unwrap(), e);
        }
    }

    #[test]
    fn drops_redundant_parentheses() {
        assert_eq!(parse("((w))|((G(1)))").unwrap().to_string(), "w|G(1)");
        assert_eq!(parse("(1+2)+3").unwrap().to_string(), "1+2+3");
        assert_eq!(parse("o(w^2*1)").unwrap().to_string(), "o(w^2)");
        assert_eq!(parse("o(3)").unwrap().to_string(), "3");
    }
}
