//! Text form of elements: signed sums such as `e1-e10` or `0.5+2e4`.
//!
//! Lowercase `e` always introduces a basis unit, so decimal exponents use an
//! uppercase `E` (`1.5E-20e3` is `1.5·10⁻²⁰ e3`).  A JSON array of 1, 2, 4, 8
//! or 16 numbers is accepted as well.

use std::fmt;
use std::str::FromStr;

use serde::de::{self, Deserializer};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use super::{CDElement, DIM};
use crate::error::{Error, Result};

/// Formats a real with twelve significant digits and no trailing zeros.
pub fn format_number(x: f64) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return "0".into();
    }
    let ax = x.abs();
    let text = if !(1e-6..1e12).contains(&ax) {
        let s = format!("{x:.11E}");
        let (mantissa, exponent) = s.split_once('E').expect("scientific format has an exponent");
        format!("{}E{exponent}", trim_zeros(mantissa))
    } else {
        let magnitude = ax.log10().floor() as i32;
        let decimals = (11 - magnitude).max(0) as usize;
        trim_zeros(&format!("{x:.decimals$}")).to_string()
    };
    if text == "-0" {
        "0".into()
    } else {
        text
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

impl fmt::Display for CDElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (i, &c) in self.coeffs().iter().enumerate() {
            if c == 0.0 {
                continue;
            }
            let mut num = format_number(c.abs());
            if num == "0" {
                continue;
            }
            let sign = if c < 0.0 {
                "-"
            } else if wrote {
                "+"
            } else {
                ""
            };
            if i > 0 {
                if num == "1" {
                    num.clear();
                } else if num.contains('E') {
                    num.push('*');
                }
                num.push_str(&format!("e{i}"));
            }
            write!(f, "{sign}{num}")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}

struct Cursor<'a> {
    src: &'a str,
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Self { src, bytes: src.as_bytes(), pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at offset {} in `{}`", self.pos, self.src))
    }

    fn digits(&mut self) -> usize {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        self.pos - start
    }

    fn number(&mut self) -> Result<Option<f64>> {
        let start = self.pos;
        let int_digits = self.digits();
        let mut frac_digits = 0;
        if self.peek() == Some(b'.') {
            self.pos += 1;
            frac_digits = self.digits();
        }
        if int_digits + frac_digits == 0 {
            self.pos = start;
            return Ok(None);
        }
        if self.peek() == Some(b'E') {
            self.pos += 1;
            if matches!(self.peek(), Some(b'+' | b'-')) {
                self.pos += 1;
            }
            if self.digits() == 0 {
                return Err(self.err("missing exponent digits"));
            }
        }
        let value: f64 = self.src[start..self.pos].parse().map_err(|_| self.err("bad number"))?;
        self.skip_ws();
        if self.peek() == Some(b'/') {
            self.pos += 1;
            self.skip_ws();
            let denom = self.number()?.ok_or_else(|| self.err("missing denominator"))?;
            if denom == 0.0 {
                return Err(self.err("zero denominator"));
            }
            return Ok(Some(value / denom));
        }
        Ok(Some(value))
    }

    fn unit(&mut self) -> Result<Option<usize>> {
        if self.peek() != Some(b'e') {
            return Ok(None);
        }
        self.pos += 1;
        let start = self.pos;
        if self.digits() == 0 {
            return Err(self.err("basis unit needs an index"));
        }
        let index: usize = self.src[start..self.pos].parse().map_err(|_| self.err("bad index"))?;
        if index >= DIM {
            return Err(self.err("basis index above 15"));
        }
        Ok(Some(index))
    }

    fn term(&mut self) -> Result<(f64, usize)> {
        self.skip_ws();
        let coeff = self.number()?;
        self.skip_ws();
        if coeff.is_some() && self.peek() == Some(b'*') {
            self.pos += 1;
            self.skip_ws();
            let index = self.unit()?.ok_or_else(|| self.err("expected basis unit after `*`"))?;
            return Ok((coeff.unwrap_or(1.0), index));
        }
        match (coeff, self.unit()?) {
            (Some(c), Some(i)) => Ok((c, i)),
            (Some(c), None) => Ok((c, 0)),
            (None, Some(i)) => Ok((1.0, i)),
            (None, None) => Err(self.err("expected a number or basis unit")),
        }
    }
}

fn parse_sum(text: &str) -> Result<CDElement> {
    let mut cur = Cursor::new(text);
    let mut coeffs = [0.0; DIM];
    let mut max_index = 0usize;
    let mut first = true;
    loop {
        cur.skip_ws();
        let sign = match cur.peek() {
            Some(b'+') => {
                cur.pos += 1;
                1.0
            }
            Some(b'-') => {
                cur.pos += 1;
                -1.0
            }
            None if !first => break,
            _ if first => 1.0,
            _ => return Err(cur.err("expected `+` or `-`")),
        };
        let (c, i) = cur.term()?;
        coeffs[i] += sign * c;
        max_index = max_index.max(i);
        first = false;
    }
    let level = CDElement::unit(max_index).level();
    CDElement::new(level, &coeffs[..1 << level])
}

fn from_array(values: &[f64]) -> Result<CDElement> {
    let level = match values.len() {
        1 => 0,
        2 => 1,
        4 => 2,
        8 => 3,
        16 => 4,
        n => return Err(Error::Parse(format!("array of length {n} is not an algebra element"))),
    };
    CDElement::new(level, values)
}

/// Parses the text or JSON-array form; the level is the smallest that fits.
pub fn parse_sedenion(text: &str) -> Result<CDElement> {
    let t = text.trim();
    if t.is_empty() {
        return Err(Error::Parse("empty element".into()));
    }
    if t.starts_with('[') {
        let values: Vec<f64> =
            serde_json::from_str(t).map_err(|e| Error::Parse(format!("bad coefficient array: {e}")))?;
        return from_array(&values);
    }
    parse_sum(t)
}

impl FromStr for CDElement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_sedenion(s)
    }
}

impl Serialize for CDElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.dim()))?;
        for c in self.coeffs() {
            seq.serialize_element(c)?;
        }
        seq.end()
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum ElementRepr {
    Text(String),
    Number(f64),
    Array(Vec<f64>),
}

impl<'de> Deserialize<'de> for CDElement {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        match ElementRepr::deserialize(deserializer)? {
            ElementRepr::Text(s) => parse_sedenion(&s),
            ElementRepr::Number(x) => Ok(CDElement::real(0, x)),
            ElementRepr::Array(v) => from_array(&v),
        }
        .map_err(de::Error::custom)
    }
}
