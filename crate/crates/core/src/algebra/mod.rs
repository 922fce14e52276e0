//! Cayley-Dickson algebras up to the sedenions.
//!
//! Elements of every level share one 16-slot storage; an element of level `n`
//! only uses the first `2^n` slots and keeps the remaining ones at zero, so
//! promotion to a higher level never moves data.  Products follow the doubling
//! rule `(a + b e)(c + d e) = (ac - d̄ b) + (d a + b c̄) e`, written once over a
//! generic scalar so the same recursion serves floating-point work and exact
//! integer table generation.

mod operator;
mod table;
mod text;

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use crate::error::{Error, Result};

pub use operator::{complex_embed, left_mult_matrix, ComplexPoint, LeftMultOperator, Matrix16, Vector16};
pub use table::{multiplication_table, reference_table, table_csv, ExactElement, SignedBasis};
pub use text::{format_number, parse_sedenion};

/// Highest supported Cayley-Dickson level (sedenions).
pub const MAX_LEVEL: u8 = 4;
/// Real dimension of the sedenion algebra.
pub const DIM: usize = 16;
/// Dimension of the octonion subalgebra spanned by `e0..e7`.
pub const OCT_DIM: usize = 8;

/// Ring operations needed by the doubling recursion.
pub trait Scalar:
    Copy + Default + PartialEq + Add<Output = Self> + Sub<Output = Self> + Neg<Output = Self> + Mul<Output = Self>
{
}

impl<T> Scalar for T where
    T: Copy + Default + PartialEq + Add<Output = T> + Sub<Output = T> + Neg<Output = T> + Mul<Output = T>
{
}

fn conj_into<T: Scalar>(x: &[T], out: &mut [T]) {
    out[0] = x[0];
    for (o, &v) in out[1..].iter_mut().zip(&x[1..]) {
        *o = -v;
    }
}

/// Multiplies two coefficient slices of equal power-of-two length.
pub fn cd_mul_slices<T: Scalar>(a: &[T], b: &[T], out: &mut [T]) {
    let n = a.len();
    debug_assert!(n.is_power_of_two() && b.len() == n && out.len() == n && n <= DIM);
    if n == 1 {
        out[0] = a[0] * b[0];
        return;
    }
    let h = n / 2;
    let (a0, a1) = a.split_at(h);
    let (c, d) = b.split_at(h);
    let mut c_bar = [T::default(); OCT_DIM];
    let mut d_bar = [T::default(); OCT_DIM];
    conj_into(c, &mut c_bar[..h]);
    conj_into(d, &mut d_bar[..h]);
    let mut t1 = [T::default(); OCT_DIM];
    let mut t2 = [T::default(); OCT_DIM];

    cd_mul_slices(a0, c, &mut t1[..h]);
    cd_mul_slices(&d_bar[..h], a1, &mut t2[..h]);
    for i in 0..h {
        out[i] = t1[i] - t2[i];
    }
    cd_mul_slices(d, a0, &mut t1[..h]);
    cd_mul_slices(a1, &c_bar[..h], &mut t2[..h]);
    for i in 0..h {
        out[h + i] = t1[i] + t2[i];
    }
}

pub(crate) fn check_level(level: u8) -> Result<()> {
    if level > MAX_LEVEL {
        Err(Error::UnsupportedLevel(level))
    } else {
        Ok(())
    }
}

/// An element of the Cayley-Dickson algebra of level 0 (reals) to 4 (sedenions).
#[derive(Clone, Copy, PartialEq)]
pub struct CDElement {
    level: u8,
    coeffs: [f64; DIM],
}

impl CDElement {
    /// Builds an element from its `2^level` coefficients.
    pub fn new(level: u8, coeffs: &[f64]) -> Result<Self> {
        check_level(level)?;
        let dim = 1usize << level;
        if coeffs.len() != dim {
            return Err(Error::InvalidArgument(format!(
                "level {level} needs {dim} coefficients, got {}",
                coeffs.len()
            )));
        }
        let mut out = [0.0; DIM];
        out[..dim].copy_from_slice(coeffs);
        Ok(Self { level, coeffs: out })
    }

    /// A sedenion from its sixteen coefficients.
    pub fn sedenion(coeffs: [f64; DIM]) -> Self {
        Self { level: MAX_LEVEL, coeffs }
    }

    /// An octonion from its eight coefficients.
    pub fn octonion(coeffs: [f64; OCT_DIM]) -> Self {
        let mut out = [0.0; DIM];
        out[..OCT_DIM].copy_from_slice(&coeffs);
        Self { level: 3, coeffs: out }
    }

    pub fn zero(level: u8) -> Self {
        assert!(level <= MAX_LEVEL, "unsupported level {level}");
        Self { level, coeffs: [0.0; DIM] }
    }

    pub fn one(level: u8) -> Self {
        Self::real(level, 1.0)
    }

    pub fn real(level: u8, x: f64) -> Self {
        let mut z = Self::zero(level);
        z.coeffs[0] = x;
        z
    }

    /// The basis unit `e_index` of the smallest level containing it.
    pub fn unit(index: usize) -> Self {
        assert!(index < DIM, "basis index {index} out of range");
        let level = level_for_index(index);
        let mut z = Self::zero(level);
        z.coeffs[index] = 1.0;
        z
    }

    /// The basis unit `e_index` promoted to the sedenions.
    pub fn e(index: usize) -> Self {
        Self::unit(index).to_sedenion()
    }

    pub fn level(&self) -> u8 {
        self.level
    }

    pub fn dim(&self) -> usize {
        1 << self.level
    }

    /// The `2^level` active coefficients.
    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs[..self.dim()]
    }

    /// All sixteen storage slots; inactive slots are zero.
    pub fn padded(&self) -> &[f64; DIM] {
        &self.coeffs
    }

    pub fn coeff(&self, index: usize) -> f64 {
        self.coeffs[index]
    }

    /// Zero-pads the element into a higher level.
    pub fn promote(&self, level: u8) -> Result<Self> {
        check_level(level)?;
        if level < self.level {
            return self.demote(level);
        }
        Ok(Self { level, coeffs: self.coeffs })
    }

    /// Reinterprets the element at a lower level when the dropped slots are zero.
    pub fn demote(&self, level: u8) -> Result<Self> {
        check_level(level)?;
        let dim = 1usize << level;
        if self.coeffs[dim..].iter().any(|&c| c != 0.0) {
            return Err(Error::LossyDemotion { from: self.level, to: level });
        }
        Ok(Self { level, coeffs: self.coeffs })
    }

    pub fn to_sedenion(&self) -> Self {
        Self { level: MAX_LEVEL, coeffs: self.coeffs }
    }

    /// Lowest level that holds every nonzero coefficient.
    pub fn minimal_level(&self) -> u8 {
        match self.coeffs.iter().rposition(|&c| c != 0.0) {
            Some(i) => level_for_index(i),
            None => 0,
        }
    }

    pub fn conj(&self) -> Self {
        let mut out = *self;
        for c in &mut out.coeffs[1..] {
            *c = -*c;
        }
        out
    }

    pub fn re(&self) -> f64 {
        self.coeffs[0]
    }

    /// Imaginary part `x - Re(x)`.
    pub fn im(&self) -> Self {
        let mut out = *self;
        out.coeffs[0] = 0.0;
        out
    }

    /// Euclidean inner product of the coefficient vectors.
    pub fn inner(&self, other: &Self) -> f64 {
        self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a * b).sum()
    }

    pub fn norm_sqr(&self) -> f64 {
        self.inner(self)
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    pub fn dist(&self, other: &Self) -> f64 {
        self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| (a - b) * (a - b)).sum::<f64>().sqrt()
    }

    pub fn scale(&self, k: f64) -> Self {
        let mut out = *self;
        for c in &mut out.coeffs {
            *c *= k;
        }
        out
    }

    /// `self / |self|`; `None` for elements of norm below `tol`.
    pub fn normalized(&self, tol: f64) -> Option<Self> {
        let n = self.norm();
        (n > tol).then(|| self.scale(1.0 / n))
    }

    pub fn is_zero(&self, tol: f64) -> bool {
        self.norm() <= tol
    }

    pub fn is_real(&self, tol: f64) -> bool {
        self.im().norm() <= tol
    }

    /// Lower half `a` of `a + b e_{dim/2}`, one level down.
    pub fn lower(&self) -> Self {
        assert!(self.level > 0, "reals have no halves");
        let h = self.dim() / 2;
        let mut out = Self::zero(self.level - 1);
        out.coeffs[..h].copy_from_slice(&self.coeffs[..h]);
        out
    }

    /// Upper half `b` of `a + b e_{dim/2}`, one level down.
    pub fn upper(&self) -> Self {
        assert!(self.level > 0, "reals have no halves");
        let h = self.dim() / 2;
        let mut out = Self::zero(self.level - 1);
        out.coeffs[..h].copy_from_slice(&self.coeffs[h..2 * h]);
        out
    }

    /// Assembles `lo + hi e_{2^level}` one level up.
    pub fn from_halves(lo: &Self, hi: &Self) -> Result<Self> {
        if lo.level != hi.level {
            return Err(Error::LevelMismatch { left: lo.level, right: hi.level });
        }
        let level = lo.level + 1;
        check_level(level)?;
        let h = lo.dim();
        let mut out = Self::zero(level);
        out.coeffs[..h].copy_from_slice(lo.coeffs());
        out.coeffs[h..2 * h].copy_from_slice(hi.coeffs());
        Ok(out)
    }

    /// Replaces coefficients with magnitude at most `tol` by exact zeros.
    pub fn snapped(&self, tol: f64) -> Self {
        let mut out = *self;
        for c in &mut out.coeffs {
            if c.abs() <= tol {
                *c = 0.0;
            }
        }
        out
    }

    fn aligned(a: &Self, b: &Self) -> (Self, Self) {
        let level = a.level.max(b.level);
        (Self { level, ..*a }, Self { level, ..*b })
    }
}

fn level_for_index(index: usize) -> u8 {
    let mut level = 0u8;
    while (1usize << level) <= index {
        level += 1;
    }
    level
}

/// Product of two elements of the same level.
pub fn cd_mul(a: &CDElement, b: &CDElement) -> Result<CDElement> {
    if a.level != b.level {
        return Err(Error::LevelMismatch { left: a.level, right: b.level });
    }
    let n = a.dim();
    let mut out = CDElement::zero(a.level);
    cd_mul_slices(&a.coeffs[..n], &b.coeffs[..n], &mut out.coeffs[..n]);
    Ok(out)
}

/// Product after promoting both factors to the larger level.
pub fn mul_promoted(a: &CDElement, b: &CDElement) -> CDElement {
    let (a, b) = CDElement::aligned(a, b);
    let n = a.dim();
    let mut out = CDElement::zero(a.level);
    cd_mul_slices(&a.coeffs[..n], &b.coeffs[..n], &mut out.coeffs[..n]);
    out
}

impl Mul for CDElement {
    type Output = CDElement;

    /// Promotes the lower-level factor before multiplying.
    fn mul(self, rhs: CDElement) -> CDElement {
        mul_promoted(&self, &rhs)
    }
}

impl Mul<&CDElement> for &CDElement {
    type Output = CDElement;

    fn mul(self, rhs: &CDElement) -> CDElement {
        mul_promoted(self, rhs)
    }
}

impl Mul<f64> for CDElement {
    type Output = CDElement;

    fn mul(self, k: f64) -> CDElement {
        self.scale(k)
    }
}

impl Mul<CDElement> for f64 {
    type Output = CDElement;

    fn mul(self, x: CDElement) -> CDElement {
        x.scale(self)
    }
}

impl Add for CDElement {
    type Output = CDElement;

    fn add(self, rhs: CDElement) -> CDElement {
        let (mut a, b) = Self::aligned(&self, &rhs);
        for (x, y) in a.coeffs.iter_mut().zip(&b.coeffs) {
            *x += y;
        }
        a
    }
}

impl Sub for CDElement {
    type Output = CDElement;

    fn sub(self, rhs: CDElement) -> CDElement {
        self + (-rhs)
    }
}

impl AddAssign for CDElement {
    fn add_assign(&mut self, rhs: CDElement) {
        *self = *self + rhs;
    }
}

impl SubAssign for CDElement {
    fn sub_assign(&mut self, rhs: CDElement) {
        *self = *self - rhs;
    }
}

impl Neg for CDElement {
    type Output = CDElement;

    fn neg(self) -> CDElement {
        self.scale(-1.0)
    }
}

impl fmt::Debug for CDElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CDElement[{}]({})", self.level, self)
    }
}
