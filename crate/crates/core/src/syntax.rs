//! Textual polynomial syntax shared with the CLI: variables `x1`..`xN`,
//! the reserved symbol `t`, rationals `p/q`, and the usual `+ - * / ^ ( )`.
//! Example: `(3/2 + t^2)*x1^2*x2 - (1/(1+t))*x3^3`.
//!
//! Canonical serialization sorts terms descending under the ring's
//! weighted-grevlex order; parse(display(f)) == f.

use crate::groebner::MonomialOrder;
use crate::ringcore::{Monomial, Poly, Rat, RingError, RingSpec, TRat};
use num_bigint::BigInt;
use num_traits::{One, Signed};
use std::fmt::Write as _;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}, column {col}: {msg}")]
pub struct ParseError {
    pub line: u32,
    pub col: u32,
    pub msg: String,
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    T,
    Var(usize),
    Name(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
    line: u32,
    col: u32,
    line_offset: u32,
    col_offset: u32,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str, line_offset: u32, col_offset: u32) -> Self {
        Lexer {
            src: src.as_bytes(),
            pos: 0,
            line: 1,
            col: 1,
            line_offset,
            col_offset,
        }
    }

    fn error(&self, msg: impl Into<String>) -> ParseError {
        let col = if self.line == 1 {
            self.col + self.col_offset
        } else {
            self.col
        };
        ParseError {
            line: self.line + self.line_offset,
            col,
            msg: msg.into(),
        }
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.src.get(self.pos).copied()?;
        self.pos += 1;
        if c == b'\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn next_tok(&mut self) -> Result<(Tok, u32, u32), ParseError> {
        while matches!(self.peek(), Some(c) if c.is_ascii_whitespace()) {
            self.bump();
        }
        let (line, col) = (
            self.line + self.line_offset,
            if self.line == 1 {
                self.col + self.col_offset
            } else {
                self.col
            },
        );
        let Some(c) = self.peek() else {
            return Ok((Tok::End, line, col));
        };
        let tok = match c {
            b'+' => {
                self.bump();
                Tok::Plus
            }
            b'-' => {
                self.bump();
                Tok::Minus
            }
            b'*' => {
                self.bump();
                Tok::Star
            }
            b'/' => {
                self.bump();
                Tok::Slash
            }
            b'^' => {
                self.bump();
                Tok::Caret
            }
            b'(' => {
                self.bump();
                Tok::LParen
            }
            b')' => {
                self.bump();
                Tok::RParen
            }
            b'0'..=b'9' => {
                let mut s = String::new();
                while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
                    s.push(self.bump().unwrap() as char);
                }
                Tok::Int(s.parse().expect("digits"))
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                let mut s = String::new();
                while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == b'_') {
                    s.push(self.bump().unwrap() as char);
                }
                if s == "t" {
                    Tok::T
                } else if let Some(rest) = s.strip_prefix('x') {
                    if let Ok(i) = rest.parse::<usize>() {
                        if i == 0 {
                            return Err(self.error("variables are numbered from x1"));
                        }
                        Tok::Var(i - 1)
                    } else {
                        Tok::Name(s)
                    }
                } else {
                    Tok::Name(s)
                }
            }
            other => return Err(self.error(format!("unexpected character '{}'", other as char))),
        };
        Ok((tok, line, col))
    }
}

/// Symbol table for named polynomials referenced inside expressions.
pub trait SymbolLookup {
    fn lookup(&self, name: &str) -> Option<Poly>;
}

/// No named symbols.
pub struct NoSymbols;

impl SymbolLookup for NoSymbols {
    fn lookup(&self, _: &str) -> Option<Poly> {
        None
    }
}

impl SymbolLookup for std::collections::BTreeMap<String, Poly> {
    fn lookup(&self, name: &str) -> Option<Poly> {
        self.get(name).cloned()
    }
}

struct Parser<'a, S: SymbolLookup> {
    lexer: Lexer<'a>,
    tok: Tok,
    line: u32,
    col: u32,
    ring: RingSpec,
    symbols: &'a S,
}

impl<'a, S: SymbolLookup> Parser<'a, S> {
    fn new(
        src: &'a str,
        ring: &RingSpec,
        symbols: &'a S,
        line_offset: u32,
        col_offset: u32,
    ) -> Result<Self, ParseError> {
        let mut lexer = Lexer::new(src, line_offset, col_offset);
        let (tok, line, col) = lexer.next_tok()?;
        Ok(Parser {
            lexer,
            tok,
            line,
            col,
            // evaluate over the unrestricted field; the requested domain is
            // enforced after the whole expression is known
            ring: ring.with_domain(crate::ringcore::CoeffDomain::FieldQt),
            symbols,
        })
    }

    fn error(&self, msg: impl Into<String>) -> ParseError {
        ParseError {
            line: self.line,
            col: self.col,
            msg: msg.into(),
        }
    }

    fn ring_err(&self, e: RingError) -> ParseError {
        self.error(e.to_string())
    }

    fn advance(&mut self) -> Result<(), ParseError> {
        let (tok, line, col) = self.lexer.next_tok()?;
        self.tok = tok;
        self.line = line;
        self.col = col;
        Ok(())
    }

    fn expr(&mut self) -> Result<Poly, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.tok {
                Tok::Plus => {
                    self.advance()?;
                    let rhs = self.term()?;
                    acc = acc.add(&rhs).map_err(|e| self.ring_err(e))?;
                }
                Tok::Minus => {
                    self.advance()?;
                    let rhs = self.term()?;
                    acc = acc.sub(&rhs).map_err(|e| self.ring_err(e))?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly, ParseError> {
        let mut acc = self.factor()?;
        loop {
            match self.tok {
                Tok::Star => {
                    self.advance()?;
                    let rhs = self.factor()?;
                    acc = acc.mul(&rhs).map_err(|e| self.ring_err(e))?;
                }
                Tok::Slash => {
                    self.advance()?;
                    let rhs = self.factor()?;
                    let c = constant_of(&rhs)
                        .ok_or_else(|| self.error("division by a non-scalar polynomial"))?;
                    let inv = c
                        .inv()
                        .map_err(|_| self.error("division by zero"))?;
                    acc = acc.scaled(&inv).map_err(|e| self.ring_err(e))?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Poly, ParseError> {
        if self.tok == Tok::Minus {
            self.advance()?;
            let f = self.factor()?;
            return Ok(f.neg());
        }
        let base = self.atom()?;
        if self.tok == Tok::Caret {
            self.advance()?;
            let negative = if self.tok == Tok::Minus {
                self.advance()?;
                true
            } else {
                false
            };
            let Tok::Int(ref n) = self.tok else {
                return Err(self.error("expected an integer exponent"));
            };
            let e: i64 = n
                .try_into()
                .map_err(|_| self.error("exponent too large"))?;
            let e = if negative { -e } else { e };
            self.advance()?;
            if e < 0 {
                let c = constant_of(&base)
                    .ok_or_else(|| self.error("negative exponent on a non-scalar"))?;
                let p = c
                    .pow(e)
                    .map_err(|_| self.error("zero to a negative power"))?;
                return Poly::constant(&self.ring, p).map_err(|er| self.ring_err(er));
            }
            let mut acc = Poly::one(&self.ring);
            for _ in 0..e {
                acc = acc.mul(&base).map_err(|er| self.ring_err(er))?;
            }
            return Ok(acc);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Poly, ParseError> {
        match std::mem::replace(&mut self.tok, Tok::End) {
            Tok::Int(n) => {
                self.advance()?;
                Poly::constant(&self.ring, TRat::from_rat(Rat::from_integer(n)))
                    .map_err(|e| self.ring_err(e))
            }
            Tok::T => {
                self.advance()?;
                Poly::constant(&self.ring, TRat::t_power(1)).map_err(|e| self.ring_err(e))
            }
            Tok::Var(i) => {
                if i >= self.ring.nvars() {
                    return Err(self.error(format!(
                        "variable x{} out of range in a ring with {} variables",
                        i + 1,
                        self.ring.nvars()
                    )));
                }
                self.advance()?;
                Poly::var(&self.ring, i).map_err(|e| self.ring_err(e))
            }
            Tok::Name(name) => {
                let p = self
                    .symbols
                    .lookup(&name)
                    .ok_or_else(|| self.error(format!("undefined name '{name}'")))?;
                self.advance()?;
                p.cast_domain(crate::ringcore::CoeffDomain::FieldQt)
                    .map_err(|e| self.ring_err(e))
            }
            Tok::LParen => {
                self.advance()?;
                let inner = self.expr()?;
                if self.tok != Tok::RParen {
                    return Err(self.error("expected ')'"));
                }
                self.advance()?;
                Ok(inner)
            }
            other => {
                self.tok = other;
                Err(self.error("expected a value"))
            }
        }
    }
}

fn constant_of(p: &Poly) -> Option<TRat> {
    if p.is_zero() {
        return Some(TRat::zero());
    }
    if p.num_terms() == 1 {
        let (m, c) = p.terms().next().unwrap();
        if m.is_one() {
            return Some(c.clone());
        }
    }
    None
}

/// Parse a polynomial expression in the given ring; the ring's coefficient
/// domain is enforced on the final result.
pub fn parse_poly(ring: &RingSpec, src: &str) -> Result<Poly, ParseError> {
    parse_poly_with(ring, src, &NoSymbols, 0, 0)
}

/// Full-control entry point: named symbols plus position offsets so
/// diagnostics can point into an enclosing document.
pub fn parse_poly_with<S: SymbolLookup>(
    ring: &RingSpec,
    src: &str,
    symbols: &S,
    line_offset: u32,
    col_offset: u32,
) -> Result<Poly, ParseError> {
    let mut p = Parser::new(src, ring, symbols, line_offset, col_offset)?;
    let start = (p.line, p.col);
    let value = p.expr()?;
    if p.tok != Tok::End {
        return Err(p.error("unexpected trailing input"));
    }
    value.cast_domain(ring.domain()).map_err(|e| ParseError {
        line: start.0,
        col: start.1,
        msg: e.to_string(),
    })
}

fn scalar_fragment(c: &TRat) -> (bool, String) {
    // (needs_parens_when_multiplied, text)
    if let Some(r) = c.as_rational() {
        let s = if r.denom().is_one() {
            format!("{}", r.numer())
        } else {
            format!("{}/{}", r.numer(), r.denom())
        };
        (false, s)
    } else {
        let s = c.to_string();
        let simple = !s.contains(['+', '-', ' ']) || s.starts_with('-') && !s[1..].contains(['+', '-', ' ']);
        (!simple, s)
    }
}

/// Canonical textual form: terms sorted descending under the ring order.
pub fn poly_to_string(p: &Poly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let weights = p.ring().weights();
    let mut terms: Vec<(&Monomial, &TRat)> = p.terms().collect();
    terms.sort_by(|(a, _), (b, _)| MonomialOrder::WeightedGrevlex.cmp(weights, b, a));
    let mut out = String::new();
    for (i, (m, c)) in terms.into_iter().enumerate() {
        let rational = c.as_rational();
        let negative = rational.as_ref().map_or(false, |r| r.is_negative());
        let magnitude = if negative {
            c.neg()
        } else {
            c.clone()
        };
        if i == 0 {
            if negative {
                out.push('-');
            }
        } else if negative {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let (parens, frag) = scalar_fragment(&magnitude);
        let coeff_is_one = magnitude.is_one();
        if m.is_one() {
            if parens {
                let _ = write!(out, "({frag})");
            } else {
                out.push_str(&frag);
            }
        } else if coeff_is_one {
            let _ = write!(out, "{m}");
        } else if parens {
            let _ = write!(out, "({frag})*{m}");
        } else {
            let _ = write!(out, "{frag}*{m}");
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ringcore::{rat, CoeffDomain, Monomial};

    fn ring(n: usize, domain: CoeffDomain) -> RingSpec {
        RingSpec::standard(n, domain)
    }

    #[test]
    fn parse_spec_example() {
        let r = ring(3, CoeffDomain::FieldQt);
        let p = parse_poly(&r, "(3/2 + t^2)*x1^2*x2 - (1/(1+t))*x3^3").unwrap();
        assert_eq!(p.num_terms(), 2);
        let m = Monomial::from_exponents([(0usize, 2u32), (1, 1)]);
        let c = p.coeff(&m);
        assert_eq!(c.series_coeffs(3).unwrap(), vec![rat(3, 2), rat(0, 1), rat(1, 1)]);
    }

    #[test]
    fn roundtrip_canonical() {
        let r = ring(3, CoeffDomain::FieldQt);
        for src in [
            "x1 + x2",
            "(3/2 + t^2)*x1^2*x2 - (1/(1+t))*x3^3",
            "t*x1 - 2*x2^2 + 1/2",
            "0",
            "x1*x2*x3",
            "-x1 + t^2*x3",
        ] {
            let p = parse_poly(&r, src).unwrap();
            let s = poly_to_string(&p);
            let q = parse_poly(&r, &s).unwrap();
            assert_eq!(p, q, "roundtrip through {s:?}");
            assert_eq!(s, poly_to_string(&q), "display is stable");
        }
    }

    #[test]
    fn domain_mismatch_diagnostic() {
        let r = ring(2, CoeffDomain::Dvr);
        let err = parse_poly(&r, "(1/t)*x1").unwrap_err();
        assert!(err.msg.contains("Q[t]_(t)"), "{}", err.msg);
        let rq = ring(2, CoeffDomain::FieldQ);
        assert!(parse_poly(&rq, "t*x1").is_err());
    }

    #[test]
    fn out_of_range_variable() {
        let r = ring(2, CoeffDomain::FieldQt);
        let err = parse_poly(&r, "x1 + x3").unwrap_err();
        assert_eq!(err.line, 1);
        assert!(err.col > 1);
        assert!(err.msg.contains("x3"));
    }

    #[test]
    fn division_and_negative_powers() {
        let r = ring(1, CoeffDomain::FieldQt);
        let a = parse_poly(&r, "t^-1*x1").unwrap();
        let b = parse_poly(&r, "(1/t)*x1").unwrap();
        assert_eq!(a, b);
        assert!(parse_poly(&r, "x1/x1").is_err());
        assert!(parse_poly(&r, "1/0").is_err());
    }

    #[test]
    fn syntax_error_positions() {
        let r = ring(2, CoeffDomain::FieldQt);
        let err = parse_poly(&r, "x1 + ").unwrap_err();
        assert_eq!(err.line, 1);
        assert_eq!(err.col, 6);
    }
}
