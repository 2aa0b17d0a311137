//! Text format for polynomials.
//!
//! ```text
//! expr     := '-'? term (('+' | '-') term)*
//! term     := factor ('*' factor)*
//! factor   := NAT | NAT '/' NAT | VAR ('^' NAT)? | '(' expr ')'
//! ```
//!
//! Whitespace is ignored. Products of parenthesized sums are expanded while
//! parsing. Error positions are 0-based byte offsets into the input.

use num_bigint::BigInt;

use crate::error::ParseError;
use crate::field::FieldValue;
use crate::poly::{Polynomial, Ring};

const MAX_DEPTH: usize = 200;
const MAX_EXPONENT: u32 = u16::MAX as u32;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Nat(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Nat(n) => format!("number {n}"),
            Tok::Ident(v) => format!("identifier {v:?}"),
            Tok::Plus => "'+'".into(),
            Tok::Minus => "'-'".into(),
            Tok::Star => "'*'".into(),
            Tok::Slash => "'/'".into(),
            Tok::Caret => "'^'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::End => "end of input".into(),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let mut out = Vec::new();
    let mut it = text.char_indices().peekable();
    while let Some(&(pos, c)) = it.peek() {
        if c.is_whitespace() {
            it.next();
            continue;
        }
        if c.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&(_, d)) = it.peek() {
                if !d.is_ascii_digit() {
                    break;
                }
                s.push(d);
                it.next();
            }
            out.push((pos, Tok::Nat(s)));
            continue;
        }
        if c.is_ascii_alphabetic() {
            let mut s = String::new();
            while let Some(&(_, d)) = it.peek() {
                if !(d.is_ascii_alphanumeric() || d == '_') {
                    break;
                }
                s.push(d);
                it.next();
            }
            out.push((pos, Tok::Ident(s)));
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            other => {
                return Err(ParseError::new(
                    pos,
                    format!("unexpected character {other:?}"),
                ))
            }
        };
        out.push((pos, tok));
        it.next();
    }
    out.push((text.len(), Tok::End));
    Ok(out)
}

struct Parser<'a> {
    ring: &'a Ring,
    toks: Vec<(usize, Tok)>,
    at: usize,
    depth: usize,
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].1
    }

    fn pos(&self) -> usize {
        self.toks[self.at].0
    }

    fn bump(&mut self) -> (usize, Tok) {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn unexpected(&self, wanted: &str) -> ParseError {
        ParseError::new(
            self.pos(),
            format!("expected {wanted}, found {}", self.peek().describe()),
        )
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return Err(ParseError::new(self.pos(), "expression nested too deeply"));
        }
        let negate = if *self.peek() == Tok::Minus {
            self.bump();
            true
        } else {
            false
        };
        let first = self.term()?;
        let mut acc = if negate { first.neg() } else { first };
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    let t = self.term()?;
                    acc = acc.add(&t).expect("same ring");
                }
                Tok::Minus => {
                    self.bump();
                    let t = self.term()?;
                    acc = acc.sub(&t).expect("same ring");
                }
                _ => break,
            }
        }
        self.depth -= 1;
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.factor()?;
        while *self.peek() == Tok::Star {
            self.bump();
            let f = self.factor()?;
            acc = acc.mul(&f).expect("same ring");
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial, ParseError> {
        let spec = self.ring.spec();
        match self.peek().clone() {
            Tok::Nat(n) => {
                self.bump();
                let num: BigInt = n.parse().expect("digits");
                let value = if *self.peek() == Tok::Slash {
                    let slash = self.pos();
                    self.bump();
                    let den = match self.bump() {
                        (_, Tok::Nat(d)) => d.parse::<BigInt>().expect("digits"),
                        (pos, t) => {
                            return Err(ParseError::new(
                                pos,
                                format!("expected denominator, found {}", t.describe()),
                            ))
                        }
                    };
                    FieldValue::from_ratio(spec, &num, &den).map_err(|_| {
                        ParseError::new(slash, format!("denominator {den} is zero in field {spec}"))
                    })?
                } else {
                    FieldValue::from_bigint(spec, &num)
                };
                Ok(self
                    .ring
                    .constant(value)
                    .expect("value built in ring field"))
            }
            Tok::Ident(name) => {
                let pos = self.pos();
                self.bump();
                let index = self
                    .ring
                    .var_index(&name)
                    .ok_or_else(|| ParseError::new(pos, format!("unknown variable {name:?}")))?;
                let var = self.ring.var(index).expect("index from ring");
                if *self.peek() != Tok::Caret {
                    return Ok(var);
                }
                self.bump();
                let (epos, tok) = self.bump();
                let exp = match tok {
                    Tok::Nat(e) => e
                        .parse::<u32>()
                        .ok()
                        .filter(|&e| e <= MAX_EXPONENT)
                        .ok_or_else(|| {
                            ParseError::new(epos, format!("exponent {e} exceeds {MAX_EXPONENT}"))
                        })?,
                    other => {
                        return Err(ParseError::new(
                            epos,
                            format!(
                                "exponent must be a natural number, found {}",
                                other.describe()
                            ),
                        ))
                    }
                };
                let m = crate::poly::Monomial::one(self.ring.arity()).with(index, exp);
                Ok(self.ring.term(m, spec.one()).expect("monomial in ring"))
            }
            Tok::LParen => {
                self.bump();
                let inner = self.expr()?;
                if *self.peek() != Tok::RParen {
                    return Err(self.unexpected("')'"));
                }
                self.bump();
                Ok(inner)
            }
            _ => Err(self.unexpected("a number, variable or '('")),
        }
    }
}

/// Parses `text` into a polynomial over `ring`.
pub fn parse_polynomial(ring: &Ring, text: &str) -> Result<Polynomial, ParseError> {
    let toks = lex(text)?;
    let mut p = Parser {
        ring,
        toks,
        at: 0,
        depth: 0,
    };
    let f = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(p.unexpected("operator or end of input"));
    }
    Ok(f)
}

fn format_monomial(vars: &[String], exps: &[u32]) -> String {
    exps.iter()
        .zip(vars)
        .filter(|(&e, _)| e > 0)
        .map(|(&e, v)| {
            if e == 1 {
                v.clone()
            } else {
                format!("{v}^{e}")
            }
        })
        .collect::<Vec<_>>()
        .join("*")
}

/// Canonical rendering, graded-lex descending; `0` for the zero polynomial.
pub fn format_polynomial(f: &Polynomial) -> String {
    if f.is_zero() {
        return "0".into();
    }
    let vars = f.ring().vars();
    let mut out = String::new();
    for (i, (m, c)) in f.terms().rev().enumerate() {
        let negative = c.is_negative();
        let magnitude = if negative { -c } else { c.clone() };
        let mono = format_monomial(vars, m.exponents());
        let body = if mono.is_empty() {
            magnitude.to_string()
        } else if magnitude.is_one() {
            mono
        } else {
            format!("{magnitude}*{mono}")
        };
        match (i, negative) {
            (0, false) => {}
            (0, true) => out.push('-'),
            (_, false) => out.push_str(" + "),
            (_, true) => out.push_str(" - "),
        }
        out.push_str(&body);
    }
    out
}
