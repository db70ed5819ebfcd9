//! Base-60 numerals in the comma/semicolon notation, backed by exact
//! rationals.
//!
//! A literal such as `12,23,5;13,45,9` has integer digits `12,23,5` and
//! fractional digits `13,45,9`. Commas separate digits, the semicolon
//! separates non-negative from negative powers of 60, and a leading `-` is
//! accepted. Each digit is written in decimal and must lie in `0..=59`.

mod rational;

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::{Serialize, Serializer};
use thiserror::Error;

pub use rational::{rational_arithmetic, Op, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithmeticError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("malformed number `{0}`")]
    Malformed(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    Empty,
    UnexpectedChar(char),
    /// A separator with no digits before or after it.
    MissingDigit,
    DigitOutOfRange(String),
}

/// Failure to read a sexagesimal literal; `position` is a byte offset.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{kind} at offset {position}")]
pub struct ParseError {
    pub position: usize,
    pub kind: ParseErrorKind,
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::Empty => write!(f, "empty sexagesimal literal"),
            ParseErrorKind::UnexpectedChar(c) => write!(f, "unexpected character {c:?}"),
            ParseErrorKind::MissingDigit => write!(f, "missing digit"),
            ParseErrorKind::DigitOutOfRange(d) => write!(f, "digit {d} is not in 0..=59"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RenderError {
    #[error("{value} has no terminating sexagesimal expansion")]
    NonTerminating { value: String },
    #[error("{value} needs more than {places} sexagesimal places")]
    NeedsMorePlaces { value: String, places: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("regularity is only defined for positive integers")]
pub struct NotPositive;

/// How `render_sexagesimal` treats digits beyond `max_places`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RenderMode {
    /// Drop extra digits, as the scribes did with 3;41,40 -> 3;41.
    #[default]
    Truncate,
    /// Round the last kept digit, ties away from zero.
    Nearest,
    /// Fail unless the expansion terminates within `max_places`.
    RequireExact,
}

/// A rendered sexagesimal numeral.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SexagesimalDigits {
    sign: i8,
    integer_digits: Vec<u8>,
    fractional_digits: Vec<u8>,
    exact: bool,
}

impl SexagesimalDigits {
    /// Builds a numeral from raw parts, normalising leading integer zeros.
    /// Returns `None` when a digit is outside `0..=59` or `sign` is not in
    /// `{-1, 0, 1}`.
    pub fn from_parts(sign: i8, integer_digits: Vec<u8>, fractional_digits: Vec<u8>, exact: bool) -> Option<Self> {
        if !(-1..=1).contains(&sign) {
            return None;
        }
        if integer_digits.iter().chain(&fractional_digits).any(|&d| d >= 60) {
            return None;
        }
        let first_nonzero = integer_digits.iter().position(|&d| d != 0);
        let integer_digits = match first_nonzero {
            Some(i) => integer_digits[i..].to_vec(),
            None => vec![0],
        };
        let all_zero = integer_digits == [0] && fractional_digits.iter().all(|&d| d == 0);
        let sign = if all_zero {
            0
        } else if sign == 0 {
            1
        } else {
            sign
        };
        Some(SexagesimalDigits { sign, integer_digits, fractional_digits, exact })
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn integer_digits(&self) -> &[u8] {
        &self.integer_digits
    }

    pub fn fractional_digits(&self) -> &[u8] {
        &self.fractional_digits
    }

    /// False when rendering dropped or rounded digits.
    pub fn is_exact(&self) -> bool {
        self.exact
    }

    /// The exact value the digits denote.
    pub fn to_rational(&self) -> Rational {
        let sixty = Rational::from(60);
        let mut value = Rational::zero();
        for &d in &self.integer_digits {
            value = value * &sixty + Rational::from(d as i64);
        }
        let mut scale = Rational::one();
        for &d in &self.fractional_digits {
            scale = scale * Rational::ratio(1, 60);
            value = value + &scale * Rational::from(d as i64);
        }
        if self.sign < 0 {
            -value
        } else {
            value
        }
    }
}

impl fmt::Display for SexagesimalDigits {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sign < 0 {
            f.write_str("-")?;
        }
        write_digits(f, &self.integer_digits)?;
        if !self.fractional_digits.is_empty() {
            f.write_str(";")?;
            write_digits(f, &self.fractional_digits)?;
        }
        Ok(())
    }
}

fn write_digits(f: &mut fmt::Formatter<'_>, digits: &[u8]) -> fmt::Result {
    for (i, d) in digits.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{d}")?;
    }
    Ok(())
}

impl Serialize for SexagesimalDigits {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl std::str::FromStr for SexagesimalDigits {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_digits(s)
    }
}

/// Reads a literal into its digit lists without evaluating it.
pub fn parse_digits(text: &str) -> Result<SexagesimalDigits, ParseError> {
    if text.is_empty() {
        return Err(ParseError { position: 0, kind: ParseErrorKind::Empty });
    }
    let bytes = text.as_bytes();
    let mut pos = 0;
    let negative = bytes[0] == b'-';
    if negative {
        pos = 1;
        if bytes.len() == 1 {
            return Err(ParseError { position: 1, kind: ParseErrorKind::MissingDigit });
        }
    }

    let mut integer = Vec::new();
    let mut fraction = Vec::new();
    let mut in_fraction = false;
    loop {
        let start = pos;
        while pos < bytes.len() && bytes[pos].is_ascii_digit() {
            pos += 1;
        }
        if start == pos {
            return Err(match text[pos..].chars().next() {
                Some(c) if c != ',' && c != ';' => {
                    ParseError { position: pos, kind: ParseErrorKind::UnexpectedChar(c) }
                }
                _ => ParseError { position: pos, kind: ParseErrorKind::MissingDigit },
            });
        }
        let run = &text[start..pos];
        let digit = run
            .parse::<u32>()
            .ok()
            .filter(|&d| d < 60)
            .ok_or_else(|| ParseError { position: start, kind: ParseErrorKind::DigitOutOfRange(run.to_string()) })?;
        if in_fraction {
            fraction.push(digit as u8);
        } else {
            integer.push(digit as u8);
        }

        match bytes.get(pos) {
            None => break,
            Some(b',') => pos += 1,
            Some(b';') if !in_fraction => {
                in_fraction = true;
                pos += 1;
            }
            Some(_) => {
                let c = text[pos..].chars().next().unwrap_or('\u{fffd}');
                return Err(ParseError { position: pos, kind: ParseErrorKind::UnexpectedChar(c) });
            }
        }
    }

    let sign = if negative { -1 } else { 1 };
    // Digits were range-checked above, so from_parts cannot fail.
    SexagesimalDigits::from_parts(sign, integer, fraction, true)
        .ok_or(ParseError { position: 0, kind: ParseErrorKind::Empty })
}

/// Parses a sexagesimal literal into its exact value.
pub fn parse_sexagesimal(text: &str) -> Result<Rational, ParseError> {
    parse_digits(text).map(|d| d.to_rational())
}

/// Renders `x` with at most `max_places` fractional digits.
pub fn render_sexagesimal(x: &Rational, max_places: usize, mode: RenderMode) -> Result<SexagesimalDigits, RenderError> {
    if mode == RenderMode::RequireExact && !x.has_regular_denominator() {
        return Err(RenderError::NonTerminating { value: x.to_string() });
    }
    // long division on |x| = n/d, one base-60 digit per step
    let d = x.denom().magnitude();
    let (int_part, mut rem) = x.numer().magnitude().div_rem(d);
    let mut integer = to_base60(int_part);
    let mut fraction: Vec<u8> = Vec::new();
    while fraction.len() < max_places && !rem.is_zero() {
        let (digit, next) = (rem * 60u32).div_rem(d);
        // digit < 60 because rem < d before scaling.
        fraction.push(digit.to_u8().unwrap_or(0));
        rem = next;
    }
    let exact = rem.is_zero();

    match mode {
        RenderMode::Truncate => {}
        RenderMode::RequireExact => {
            if !exact {
                return Err(RenderError::NeedsMorePlaces { value: x.to_string(), places: max_places });
            }
        }
        RenderMode::Nearest => {
            if !exact && &rem * 2u32 >= *d {
                round_up(&mut integer, &mut fraction);
            }
            while fraction.last() == Some(&0) {
                fraction.pop();
            }
        }
    }

    let sign = x.signum();
    Ok(SexagesimalDigits::from_parts(sign, integer, fraction, exact).expect("render produces digits in range"))
}

fn to_base60(mut n: BigUint) -> Vec<u8> {
    if n.is_zero() {
        return vec![0];
    }
    let sixty = BigUint::from(60u32);
    let mut digits = Vec::new();
    while !n.is_zero() {
        let (q, r) = n.div_rem(&sixty);
        digits.push(r.to_u8().unwrap_or(0));
        n = q;
    }
    digits.reverse();
    digits
}

fn round_up(integer: &mut Vec<u8>, fraction: &mut [u8]) {
    for d in fraction.iter_mut().rev() {
        if *d == 59 {
            *d = 0;
        } else {
            *d += 1;
            return;
        }
    }
    for d in integer.iter_mut().rev() {
        if *d == 59 {
            *d = 0;
        } else {
            *d += 1;
            return;
        }
    }
    integer.insert(0, 1);
}

/// True iff `n = 2^p 3^q 5^r`, i.e. `1/n` terminates in base 60.
pub fn is_regular(n: u64) -> Result<bool, NotPositive> {
    if n == 0 {
        return Err(NotPositive);
    }
    let mut m = n;
    for p in [2, 3, 5] {
        while m.is_multiple_of(p) {
            m /= p;
        }
    }
    Ok(m == 1)
}
