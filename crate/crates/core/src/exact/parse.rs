//! Recursive-descent parser for the canonical text form of rational functions.
//!
//! Grammar: `expr := term (('+'|'-') term)*`, `term := unary (('*'|'/') unary)*`,
//! `unary := '-' unary | power`, `power := atom ('^' '-'? int)?`,
//! `atom := int | ident | '(' expr ')'`.

use num_bigint::BigInt;

use super::poly::{SparsePoly, VarSet};
use super::ratfun::RationalFunction;
use super::Rational;
use crate::error::{Error, Result};

/// Parses `s` as a rational function over `vars`.
pub fn parse_ratfun(s: &str, vars: VarSet) -> Result<RationalFunction> {
    let mut p = Parser { src: s.as_bytes(), pos: 0, vars };
    let r = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("unexpected trailing input"));
    }
    // A parenthesised product in a denominator arrives expanded; split it so
    // printed output parses back to the same factored form.
    Ok(r.split_linear_factors())
}

/// Parses `s`, choosing the variable set from the identifiers it contains
/// (`{N, alpha, beta}` when there are none).
pub fn parse_ratfun_auto(s: &str) -> Result<RationalFunction> {
    let vars = if s.contains("c_alpha") || s.contains("c_beta") {
        VarSet::Scaled
    } else if s.contains("eps") {
        VarSet::Eps
    } else {
        VarSet::Jacobi
    };
    parse_ratfun(s, vars)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    vars: VarSet,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse { pos: self.pos, msg: msg.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<RationalFunction> {
        let mut acc = self.term()?;
        while let Some(c) = self.peek() {
            match c {
                b'+' => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                b'-' => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<RationalFunction> {
        let mut acc = self.unary()?;
        while let Some(c) = self.peek() {
            match c {
                b'*' => {
                    self.pos += 1;
                    acc = acc.mul(&self.unary()?);
                }
                b'/' => {
                    self.pos += 1;
                    let at = self.pos;
                    let d = self.unary()?;
                    acc = acc.div(&d).map_err(|_| Error::Parse { pos: at, msg: "division by zero".into() })?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<RationalFunction> {
        if self.peek() == Some(b'-') {
            self.pos += 1;
            return Ok(self.unary()?.neg());
        }
        if self.peek() == Some(b'+') {
            self.pos += 1;
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<RationalFunction> {
        let base = self.atom()?;
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        self.pos += 1;
        let neg = if self.peek() == Some(b'-') {
            self.pos += 1;
            true
        } else {
            false
        };
        self.skip_ws();
        let at = self.pos;
        let e = self.integer()?;
        let e: i32 = e.try_into().map_err(|_| Error::Parse { pos: at, msg: "exponent too large".into() })?;
        base.pow(if neg { -e } else { e })
            .map_err(|_| Error::Parse { pos: at, msg: "negative power of zero".into() })
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected integer"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(s.parse().unwrap())
    }

    fn atom(&mut self) -> Result<RationalFunction> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(RationalFunction::constant(self.vars, Rational::from_integer(n)))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                match self.vars.slot_of(name) {
                    Some(slot) => Ok(RationalFunction::from_poly(SparsePoly::var(self.vars, slot))),
                    None => Err(Error::Parse {
                        pos: start,
                        msg: format!("unknown variable '{name}' for {}", self.vars.name()),
                    }),
                }
            }
            Some(_) => Err(self.err("unexpected character")),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_round_trips() {
        for s in [
            "N*(alpha+N)/(alpha+beta+2*N)",
            "-2*N^2*beta/((alpha-1)*(alpha+beta+2*N)^2)",
            "1/3*alpha+N",
            "0",
        ] {
            let f = parse_ratfun(s, VarSet::Jacobi).unwrap();
            let g = parse_ratfun(&f.to_string(), VarSet::Jacobi).unwrap();
            assert_eq!(f, g, "{s}");
        }
    }

    #[test]
    fn reports_errors() {
        assert!(matches!(parse_ratfun("N+", VarSet::Jacobi), Err(Error::Parse { .. })));
        assert!(matches!(parse_ratfun("gamma", VarSet::Jacobi), Err(Error::Parse { .. })));
        assert!(matches!(parse_ratfun("1/(N-N)", VarSet::Jacobi), Err(Error::Parse { .. })));
        assert!(matches!(parse_ratfun("(N", VarSet::Jacobi), Err(Error::Parse { .. })));
    }

    #[test]
    fn auto_detects_scaled_vars() {
        let f = parse_ratfun_auto("c_alpha/(-c_alpha-c_beta)").unwrap();
        assert_eq!(f.vars(), VarSet::Scaled);
        assert_eq!(f.to_string(), "-c_alpha/(c_alpha+c_beta)");
    }
}
