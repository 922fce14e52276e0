//! Slice units of the sedenions, their polar coordinates and points of the
//! slice cone.
//!
//! A slice unit `I` satisfies `L_I² = -id`.  Every such unit is
//! `ψ(α, θ, (ı₁, ı₂)) = sin α cos θ κ + (cos α + sin α sin θ κ) e8` with
//! `κ = cos θ ı₁ + sin θ ı₂`, and the pair `(θ, ȷ = κ)` is unique once
//! `θ ∈ [0, π)` and `I ≠ ±e8`.

mod hyper;
mod sample;

use std::f64::consts::PI;
use std::fmt;

use serde::Serialize;

use crate::algebra::{complex_embed, CDElement, ComplexPoint, LeftMultOperator, Matrix16};
use crate::error::{Error, Result};

pub use hyper::{
    cker_curve_point, cker_membership, find_companion, iota_frame, is_hyper_solution, kernel_zeta, phi, HyperSolution,
};
pub use sample::{
    random_companion, random_frame, random_hyper_pair, random_sedenion, random_slice_unit,
    random_unit_imaginary_octonion, seeded_rng, DEFAULT_SEED,
};

/// Tolerance for `L_s² = -id` and for slice-unit equality.
pub const SLICE_TOL: f64 = 1e-9;
/// Below this `sin α` a unit is treated as `±e8`.
pub const POLE_TOL: f64 = 1e-12;
const FRAME_TOL: f64 = 1e-8;

/// `L_s² = -id` entrywise within [`SLICE_TOL`].
pub fn is_slice_unit(s: &CDElement) -> bool {
    let m = LeftMultOperator::new(s).matrix;
    (m * m + Matrix16::identity()).amax() <= SLICE_TOL
}

/// The octonion unit `e1`, used as the default direction at the poles.
fn octonion_e1() -> CDElement {
    CDElement::unit(1).promote(3).expect("e1 is an octonion")
}

/// Polar coordinates `(α, θ, ȷ)` of a slice unit.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct Polar {
    pub alpha: f64,
    pub theta: f64,
    pub jmath: CDElement,
}

/// An orthonormal pair of imaginary octonion units.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct Frame {
    pub i1: CDElement,
    pub i2: CDElement,
}

impl Frame {
    /// Validates the pair as orthonormal and imaginary within `1e-8`.
    pub fn new(i1: &CDElement, i2: &CDElement) -> Result<Self> {
        let as_oct = |x: &CDElement| x.promote(3).map_err(|_| Error::InvalidFrame(format!("{x} is not an octonion")));
        let (i1, i2) = (as_oct(i1)?, as_oct(i2)?);
        for x in [&i1, &i2] {
            if x.re().abs() > FRAME_TOL || (x.norm() - 1.0).abs() > FRAME_TOL {
                return Err(Error::InvalidFrame(format!("{x} is not a unit imaginary octonion")));
            }
        }
        if i1.inner(&i2).abs() > FRAME_TOL {
            return Err(Error::InvalidFrame(format!("{i1} and {i2} are not orthogonal")));
        }
        Ok(Self { i1, i2 })
    }

    /// `cos θ ı₁ + sin θ ı₂`.
    pub fn direction(&self, theta: f64) -> CDElement {
        self.i1.scale(theta.cos()) + self.i2.scale(theta.sin())
    }
}

/// `ψ(α, θ, frame)`.
pub fn psi(alpha: f64, theta: f64, frame: &Frame) -> Result<SliceUnit> {
    let kappa = frame.direction(theta);
    let (sa, ca) = alpha.sin_cos();
    let lower = kappa.scale(sa * theta.cos());
    let upper = CDElement::real(3, ca) + kappa.scale(sa * theta.sin());
    SliceUnit::new(&CDElement::from_halves(&lower, &upper)?)
}

/// Polar coordinates of a slice unit; `±e8` get `(α, 0, e1)`.
pub fn polar(s: &CDElement) -> Result<Polar> {
    if !is_slice_unit(s) {
        return Err(Error::NotSliceUnit(s.to_string()));
    }
    Ok(polar_unchecked(s))
}

fn polar_unchecked(s: &CDElement) -> Polar {
    let s = s.to_sedenion();
    let u = s.lower().im();
    let v = s.upper();
    let w = v.im();
    let sin_alpha = (u.norm_sqr() + w.norm_sqr()).sqrt();
    let alpha = sin_alpha.atan2(v.re());
    if sin_alpha < POLE_TOL {
        return Polar { alpha, theta: 0.0, jmath: octonion_e1() };
    }
    let (nu, nw) = (u.norm(), w.norm());
    let mut jmath = if nw >= nu { w.scale(1.0 / nw) } else { u.scale(1.0 / nu) };
    if w.inner(&jmath) < 0.0 {
        jmath = -jmath;
    }
    let mut theta = w.inner(&jmath).atan2(u.inner(&jmath));
    if theta > PI - POLE_TOL {
        theta = 0.0;
        jmath = -jmath;
    }
    Polar { alpha, theta: theta.max(0.0), jmath }
}

/// A sedenion `I` with `L_I² = -id`, stored with its polar coordinates.
#[derive(Clone, Copy, Serialize)]
pub struct SliceUnit {
    value: CDElement,
    #[serde(flatten)]
    polar: Polar,
}

impl SliceUnit {
    pub fn new(s: &CDElement) -> Result<Self> {
        let value = s.to_sedenion();
        if !is_slice_unit(&value) {
            return Err(Error::NotSliceUnit(s.to_string()));
        }
        Ok(Self { value, polar: polar_unchecked(&value) })
    }

    /// The basis unit `e_index` for `1 ≤ index ≤ 15`.
    pub fn basis(index: usize) -> Self {
        Self::new(&CDElement::e(index)).expect("imaginary basis units are slice units")
    }

    /// The fixed axis `I₀ = e1` assigned to real points.
    pub fn base() -> Self {
        Self::basis(1)
    }

    pub fn value(&self) -> CDElement {
        self.value
    }

    pub fn polar(&self) -> Polar {
        self.polar
    }

    pub fn alpha(&self) -> f64 {
        self.polar.alpha
    }

    pub fn theta(&self) -> f64 {
        self.polar.theta
    }

    pub fn jmath(&self) -> CDElement {
        self.polar.jmath
    }

    /// `(cos θ, sin θ)` read from the coefficients, so either is exactly zero
    /// when the matching half of the unit has no imaginary part.
    pub fn theta_cos_sin(&self) -> (f64, f64) {
        if self.is_pole() {
            return (1.0, 0.0);
        }
        let j = self.polar.jmath;
        let (x, y) = (self.value.lower().im().inner(&j), self.value.upper().im().inner(&j));
        let r = x.hypot(y);
        (x / r, y / r)
    }

    pub fn neg(&self) -> Self {
        let value = -self.value;
        Self { value, polar: polar_unchecked(&value) }
    }

    pub fn left_mult(&self) -> LeftMultOperator {
        LeftMultOperator::new(&self.value)
    }

    /// Whether the unit is `±e8`, where `θ` and `ȷ` are conventional.
    pub fn is_pole(&self) -> bool {
        self.polar.alpha.sin() < POLE_TOL
    }

    pub fn approx_eq(&self, other: &Self) -> bool {
        self.value.dist(&other.value) < SLICE_TOL
    }
}

impl fmt::Debug for SliceUnit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SliceUnit({})", self.value)
    }
}

impl fmt::Display for SliceUnit {
    /// Coefficients below `POLE_TOL` are printed as zero.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.value.snapped(POLE_TOL).fmt(f)
    }
}

/// A point `q = x + y I` of the slice cone with `y ≥ 0`.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct WPoint {
    value: CDElement,
    re: f64,
    im: f64,
    axis: SliceUnit,
}

impl WPoint {
    /// Splits a sedenion into `Re q + |Im q| I_q`; fails off the slice cone.
    pub fn new(x: &CDElement) -> Result<Self> {
        let value = x.to_sedenion();
        let imag = value.im();
        let im = imag.norm();
        if im <= 1e-12 * value.norm().max(1.0) {
            return Ok(Self::real(value.re()));
        }
        let axis = SliceUnit::new(&imag.scale(1.0 / im)).map_err(|_| Error::NotInSliceCone(x.to_string()))?;
        Ok(Self { value, re: value.re(), im, axis })
    }

    pub fn real(x: f64) -> Self {
        Self { value: CDElement::real(4, x), re: x, im: 0.0, axis: SliceUnit::base() }
    }

    /// `z.re + z.im I`, re-oriented to `-I` when `z.im < 0`.
    pub fn on_slice(z: ComplexPoint, axis: &SliceUnit) -> Self {
        if z.im == 0.0 {
            return Self::real(z.re);
        }
        let axis = if z.im < 0.0 { axis.neg() } else { *axis };
        let im = z.im.abs();
        Self { value: complex_embed(ComplexPoint::new(z.re, im), &axis.value()), re: z.re, im, axis }
    }

    pub fn value(&self) -> CDElement {
        self.value
    }

    pub fn re(&self) -> f64 {
        self.re
    }

    pub fn im(&self) -> f64 {
        self.im
    }

    pub fn axis(&self) -> &SliceUnit {
        &self.axis
    }

    /// Coordinate `x + i y` in the upper half-plane of its own slice.
    pub fn z(&self) -> ComplexPoint {
        ComplexPoint::new(self.re, self.im)
    }

    pub fn is_real(&self) -> bool {
        self.im == 0.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_2;

    fn e(i: usize) -> CDElement {
        CDElement::e(i)
    }

    fn oct(i: usize) -> CDElement {
        CDElement::unit(i).promote(3).unwrap()
    }

    #[test]
    fn slice_unit_examples() {
        assert!(is_slice_unit(&e(8)));
        let r = 0.5f64.sqrt();
        assert!(is_slice_unit(&(e(1) + e(2)).scale(r)));
        assert!(!is_slice_unit(&(e(1) + e(10)).scale(r)));
        assert!(!is_slice_unit(&e(0)));
        assert!(SliceUnit::new(&e(1).scale(2.0)).is_err());
    }

    #[test]
    fn polar_examples() {
        let p = polar(&e(1)).unwrap();
        assert!((p.alpha - FRAC_PI_2).abs() < 1e-15 && p.theta == 0.0);
        assert_eq!(p.jmath, oct(1));

        let p = polar(&e(10)).unwrap();
        assert!((p.alpha - FRAC_PI_2).abs() < 1e-15 && (p.theta - FRAC_PI_2).abs() < 1e-15);
        assert_eq!(p.jmath, oct(2));

        let p = polar(&e(8)).unwrap();
        assert_eq!((p.alpha, p.theta), (0.0, 0.0));
        assert_eq!(p.jmath, oct(1));

        let p = polar(&(-e(8))).unwrap();
        assert!((p.alpha - PI).abs() < 1e-15 && p.theta == 0.0);

        assert!(polar(&e(0)).is_err());
    }

    #[test]
    fn negated_units_fold_theta() {
        let p = polar(&(-e(1))).unwrap();
        assert_eq!(p.theta, 0.0);
        assert_eq!(p.jmath, -oct(1));
    }

    #[test]
    fn psi_examples() {
        let frame = Frame::new(&oct(1), &oct(2)).unwrap();
        assert!(psi(FRAC_PI_2, 0.0, &frame).unwrap().value().dist(&e(1)) < 1e-15);
        assert!(psi(FRAC_PI_2, FRAC_PI_2, &frame).unwrap().value().dist(&e(10)) < 1e-15);
        assert!(psi(0.0, 1.3, &frame).unwrap().value().dist(&e(8)) < 1e-15);
    }

    #[test]
    fn invalid_frames_are_rejected() {
        assert!(Frame::new(&oct(1), &oct(1)).is_err());
        assert!(Frame::new(&oct(1), &CDElement::one(3)).is_err());
        assert!(Frame::new(&oct(1), &oct(2).scale(2.0)).is_err());
        assert!(Frame::new(&oct(1), &e(9)).is_err());
    }

    #[test]
    fn points_split_into_slice_coordinates() {
        let q = WPoint::new(&(CDElement::real(4, 1.0) + e(1).scale(2.0))).unwrap();
        assert_eq!((q.re(), q.im()), (1.0, 2.0));
        assert!(q.axis().approx_eq(&SliceUnit::basis(1)));

        let r = WPoint::new(&CDElement::real(4, -3.0)).unwrap();
        assert!(r.is_real());
        assert!(r.axis().approx_eq(&SliceUnit::base()));

        let below = WPoint::on_slice(ComplexPoint::new(0.5, -2.0), &SliceUnit::basis(10));
        assert_eq!(below.im(), 2.0);
        assert!(below.axis().value().dist(&(-e(10))) < 1e-15);
        assert!(below.value().dist(&(CDElement::real(4, 0.5) - e(10).scale(2.0))) < 1e-15);

        assert!(WPoint::new(&(e(1) + e(10))).is_err());
    }
}
