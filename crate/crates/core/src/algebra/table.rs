//! Exact integer elements and basis multiplication tables.

use std::fmt;

use super::{cd_mul_slices, check_level, DIM};
use crate::error::{Error, Result};

/// An element with integer coefficients, multiplied without rounding.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExactElement {
    level: u8,
    coeffs: [i64; DIM],
}

impl ExactElement {
    pub fn new(level: u8, coeffs: &[i64]) -> Result<Self> {
        check_level(level)?;
        let dim = 1usize << level;
        if coeffs.len() != dim {
            return Err(Error::InvalidArgument(format!(
                "level {level} needs {dim} coefficients, got {}",
                coeffs.len()
            )));
        }
        let mut out = [0; DIM];
        out[..dim].copy_from_slice(coeffs);
        Ok(Self { level, coeffs: out })
    }

    pub fn basis(level: u8, index: usize) -> Result<Self> {
        check_level(level)?;
        if index >= 1 << level {
            return Err(Error::InvalidArgument(format!("e{index} is not in level {level}")));
        }
        let mut coeffs = [0; DIM];
        coeffs[index] = 1;
        Ok(Self { level, coeffs })
    }

    pub fn level(&self) -> u8 {
        self.level
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs[..1 << self.level]
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.level != other.level {
            return Err(Error::LevelMismatch { left: self.level, right: other.level });
        }
        let n = 1usize << self.level;
        let mut out = Self { level: self.level, coeffs: [0; DIM] };
        cd_mul_slices(&self.coeffs[..n], &other.coeffs[..n], &mut out.coeffs[..n]);
        Ok(out)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.level != other.level {
            return Err(Error::LevelMismatch { left: self.level, right: other.level });
        }
        let mut out = *self;
        for (a, b) in out.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b;
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// The element as `±e_k` when it is a signed basis unit.
    pub fn as_signed_basis(&self) -> Option<SignedBasis> {
        let mut found = None;
        for (i, &c) in self.coeffs().iter().enumerate() {
            match (c, found) {
                (0, _) => {}
                (1 | -1, None) => found = Some(SignedBasis { negative: c < 0, index: i }),
                _ => return None,
            }
        }
        found
    }
}

/// A table entry `±e_k`; `e_0` prints as `1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SignedBasis {
    pub negative: bool,
    pub index: usize,
}

impl fmt::Display for SignedBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.negative { "-" } else { "" };
        if self.index == 0 {
            write!(f, "{sign}1")
        } else {
            write!(f, "{sign}e{}", self.index)
        }
    }
}

impl std::str::FromStr for SignedBasis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let (negative, body) = match t.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, t.strip_prefix('+').unwrap_or(t)),
        };
        let index = if body == "1" {
            0
        } else {
            body.strip_prefix('e')
                .and_then(|d| d.parse::<usize>().ok())
                .filter(|&i| i < DIM)
                .ok_or_else(|| Error::Parse(format!("bad table entry `{s}`")))?
        };
        Ok(Self { negative, index })
    }
}

/// The `2^level × 2^level` table of basis products `e_i e_j`, generated exactly.
pub fn multiplication_table(level: u8) -> Result<Vec<Vec<SignedBasis>>> {
    check_level(level)?;
    let n = 1usize << level;
    let units: Vec<ExactElement> = (0..n).map(|i| ExactElement::basis(level, i)).collect::<Result<_>>()?;
    units
        .iter()
        .map(|a| {
            units
                .iter()
                .map(|b| {
                    a.mul(b)?
                        .as_signed_basis()
                        .ok_or_else(|| Error::Inconsistent("basis product is not a signed basis unit".into()))
                })
                .collect()
        })
        .collect()
}

/// Published sedenion table, rows `e_i`, columns `e_j`, entry `e_i e_j`.
const REFERENCE: &str = "
   1   e1   e2   e3   e4   e5   e6   e7   e8   e9  e10  e11  e12  e13  e14  e15
  e1   -1   e3  -e2   e5  -e4  -e7   e6   e9  -e8 -e11  e10 -e13  e12  e15 -e14
  e2  -e3   -1   e1   e6   e7  -e4  -e5  e10  e11  -e8  -e9 -e14 -e15  e12  e13
  e3   e2  -e1   -1   e7  -e6   e5  -e4  e11 -e10   e9  -e8 -e15  e14 -e13  e12
  e4  -e5  -e6  -e7   -1   e1   e2   e3  e12  e13  e14  e15  -e8  -e9 -e10 -e11
  e5   e4  -e7   e6  -e1   -1  -e3   e2  e13 -e12  e15 -e14   e9  -e8  e11 -e10
  e6   e7   e4  -e5  -e2   e3   -1  -e1  e14 -e15 -e12  e13  e10 -e11  -e8   e9
  e7  -e6   e5   e4  -e3  -e2   e1   -1  e15  e14 -e13 -e12  e11  e10  -e9  -e8
  e8  -e9 -e10 -e11 -e12 -e13 -e14 -e15   -1   e1   e2   e3   e4   e5   e6   e7
  e9   e8 -e11  e10 -e13  e12  e15 -e14  -e1   -1  -e3   e2  -e5   e4   e7  -e6
 e10  e11   e8  -e9 -e14 -e15  e12  e13  -e2   e3   -1  -e1  -e6  -e7   e4   e5
 e11 -e10   e9   e8 -e15  e14 -e13  e12  -e3  -e2   e1   -1  -e7   e6  -e5   e4
 e12  e13  e14  e15   e8  -e9 -e10 -e11  -e4   e5   e6   e7   -1  -e1  -e2  -e3
 e13 -e12  e15 -e14   e9   e8  e11 -e10  -e5  -e4   e7  -e6   e1   -1   e3  -e2
 e14 -e15 -e12  e13  e10 -e11   e8   e9  -e6  -e7  -e4   e5   e2  -e3   -1   e1
 e15  e14 -e13 -e12  e11  e10  -e9   e8  -e7   e6  -e5  -e4   e3   e2  -e1   -1
";

/// The published 16×16 sedenion table, parsed from its embedded text.
pub fn reference_table() -> Vec<Vec<SignedBasis>> {
    REFERENCE
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|line| line.split_whitespace().map(|cell| cell.parse().expect("embedded table is well formed")).collect())
        .collect()
}

/// CSV rendering: a header row `,e0,...`, then one row per left factor.
pub fn table_csv(table: &[Vec<SignedBasis>]) -> String {
    let n = table.len();
    let mut out = String::new();
    for j in 0..n {
        out.push_str(&format!(",e{j}"));
    }
    out.push('\n');
    for (i, row) in table.iter().enumerate() {
        out.push_str(&format!("e{i}"));
        for entry in row {
            out.push(',');
            out.push_str(&entry.to_string());
        }
        out.push('\n');
    }
    out
}
