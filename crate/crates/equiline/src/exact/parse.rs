//! Parsers for exact scalars. Grammar (whitespace allowed between tokens):
//!
//! ```text
//! scalar   := term (('+' | '-') term)*
//! term     := ['+' | '-'] (number ['*' sqrt] | sqrt)   (leading sign: first term only)
//! sqrt     := 'sqrt' '(' digits ')'
//! number   := digits ['/' digits]
//! ```
//!
//! These entry points accept untrusted input (CLI arguments, fuzzers); they
//! never panic, cap digit runs, and report zero denominators exactly.

use num::{BigUint, One, Zero};

use crate::error::{Error, Result};
use crate::exact::{Rational, Surd};

const MAX_INPUT_BYTES: usize = 1 << 16;
const MAX_DIGITS: usize = 4096;

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(s: &'a str) -> Self {
        Cursor {
            bytes: s.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self
            .peek()
            .is_some_and(|b| b == b' ' || b == b'\t')
        {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn eat_keyword(&mut self, kw: &[u8]) -> bool {
        if self.bytes[self.pos..].starts_with(kw) {
            self.pos += kw.len();
            true
        } else {
            false
        }
    }

    fn at_end(&self) -> bool {
        self.pos == self.bytes.len()
    }

    fn digits(&mut self, kind: &'static str) -> Result<BigUint> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        let run = &self.bytes[start..self.pos];
        if run.is_empty() {
            return Err(parse_err(kind, format!("expected digits at byte {start}")));
        }
        if run.len() > MAX_DIGITS {
            return Err(parse_err(kind, format!("number longer than {MAX_DIGITS} digits")));
        }
        BigUint::parse_bytes(run, 10)
            .ok_or_else(|| parse_err(kind, "invalid digit run".to_string()))
    }
}

fn parse_err(kind: &'static str, reason: String) -> Error {
    Error::Parse { kind, reason }
}

fn check_len(kind: &'static str, s: &str) -> Result<()> {
    if s.len() > MAX_INPUT_BYTES {
        return Err(parse_err(kind, format!("input longer than {MAX_INPUT_BYTES} bytes")));
    }
    Ok(())
}

/// `digits [ '/' digits ]`, unsigned.
fn parse_number(cur: &mut Cursor<'_>, kind: &'static str) -> Result<Rational> {
    let numer = cur.digits(kind)?;
    cur.skip_ws();
    if cur.eat(b'/') {
        cur.skip_ws();
        let denom = cur.digits(kind)?;
        if denom.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational::new(numer.into(), denom.into()))
    } else {
        Ok(Rational::from_integer(numer.into()))
    }
}

/// `'sqrt' '(' digits ')'`, returning the radicand.
fn parse_sqrt(cur: &mut Cursor<'_>) -> Result<BigUint> {
    cur.skip_ws();
    if !cur.eat(b'(') {
        return Err(parse_err("scalar", format!("expected '(' after sqrt at byte {}", cur.pos)));
    }
    cur.skip_ws();
    let radicand = cur.digits("scalar")?;
    cur.skip_ws();
    if !cur.eat(b')') {
        return Err(parse_err("scalar", format!("expected ')' at byte {}", cur.pos)));
    }
    Ok(radicand)
}

fn parse_term(cur: &mut Cursor<'_>, allow_sign: bool) -> Result<Surd> {
    cur.skip_ws();
    let mut negative = false;
    if allow_sign {
        if cur.eat(b'-') {
            negative = true;
        } else {
            cur.eat(b'+');
        }
        cur.skip_ws();
    }
    let term = if cur.eat_keyword(b"sqrt") {
        let radicand = parse_sqrt(cur)?;
        Surd::new(Rational::zero(), Rational::one(), radicand)?
    } else {
        let number = parse_number(cur, "scalar")?;
        cur.skip_ws();
        if cur.eat(b'*') {
            cur.skip_ws();
            if !cur.eat_keyword(b"sqrt") {
                return Err(parse_err("scalar", format!("expected sqrt after '*' at byte {}", cur.pos)));
            }
            let radicand = parse_sqrt(cur)?;
            Surd::new(Rational::zero(), number, radicand)?
        } else {
            Surd::from_rational(number)
        }
    };
    Ok(if negative { term.neg() } else { term })
}

/// Parses an exact scalar such as `1/5`, `-7`, `sqrt(2)`, or
/// `-1/4 + 1/4*sqrt(5)`. All radicands must agree after square-free
/// normalization.
pub fn parse_scalar(s: &str) -> Result<Surd> {
    check_len("scalar", s)?;
    let mut cur = Cursor::new(s);
    let mut acc = parse_term(&mut cur, true)?;
    loop {
        cur.skip_ws();
        if cur.at_end() {
            return Ok(acc);
        }
        let subtract = if cur.eat(b'-') {
            true
        } else if cur.eat(b'+') {
            false
        } else {
            return Err(parse_err(
                "scalar",
                format!("expected '+' or '-' at byte {}", cur.pos),
            ));
        };
        let term = parse_term(&mut cur, false)?;
        acc = if subtract {
            acc.checked_sub(&term)?
        } else {
            acc.checked_add(&term)?
        };
    }
}

/// Parses a rational `p/q` (or a bare integer `p`), with optional sign.
pub fn parse_rational(s: &str) -> Result<Rational> {
    check_len("rational", s)?;
    let mut cur = Cursor::new(s);
    cur.skip_ws();
    let negative = if cur.eat(b'-') {
        true
    } else {
        cur.eat(b'+');
        false
    };
    cur.skip_ws();
    let value = parse_number(&mut cur, "rational")?;
    cur.skip_ws();
    if !cur.at_end() {
        return Err(parse_err(
            "rational",
            format!("unexpected trailing input at byte {}", cur.pos),
        ));
    }
    Ok(if negative { -value } else { value })
}

/// Parses a rational and checks that it reduces to an integer that fits `u64`.
pub fn parse_u64(s: &str, what: &'static str) -> Result<u64> {
    let r = parse_rational(s)?;
    crate::exact::to_u64(&r)
        .ok_or_else(|| parse_err(what, format!("{s:?} is not a nonnegative integer")))
}
