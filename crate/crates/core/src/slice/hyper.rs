use std::f64::consts::PI;

use serde::Serialize;

use super::{psi, Frame, SliceUnit, SLICE_TOL};
use crate::algebra::CDElement;
use crate::error::{Error, Result};
use crate::zero::{is_zero_divisor, kernel_of_left_mult, Subspace};

const CKER_TOL: f64 = 1e-8;
const COMPANION_TOL: f64 = 1e-8;

/// A pair `J = (J₁, J₂)` of distinct slice units with `J₁ - J₂` a zero divisor.
#[derive(Clone, Debug, Serialize)]
pub struct HyperSolution {
    pub j1: SliceUnit,
    pub j2: SliceUnit,
    pub alpha: f64,
    pub frame: Frame,
    #[serde(skip)]
    kernel: Subspace,
}

impl HyperSolution {
    pub fn new(j1: &SliceUnit, j2: &SliceUnit) -> Result<Self> {
        let (frame, alpha) = iota_frame(j1, j2)?;
        let kernel = kernel_of_left_mult(&(j1.value() - j2.value()));
        Ok(Self { j1: *j1, j2: *j2, alpha, frame, kernel })
    }

    /// `ker(J₁ - J₂)`.
    pub fn kernel(&self) -> &Subspace {
        &self.kernel
    }
}

fn require_distinct(j1: &SliceUnit, j2: &SliceUnit) -> Result<()> {
    if j1.approx_eq(j2) {
        Err(Error::InvalidArgument(format!("slice units coincide: {j1}")))
    } else {
        Ok(())
    }
}

/// Whether `J₁ - J₂` is a zero divisor; the units must differ.
pub fn is_hyper_solution(j1: &SliceUnit, j2: &SliceUnit) -> Result<bool> {
    require_distinct(j1, j2)?;
    Ok(is_zero_divisor(&(j1.value() - j2.value())))
}

/// The frame `ı^{[J]}` shared by both units, together with their common `α`.
pub fn iota_frame(j1: &SliceUnit, j2: &SliceUnit) -> Result<(Frame, f64)> {
    if !is_hyper_solution(j1, j2)? {
        return Err(Error::NotHyperSolution(j1.to_string(), j2.to_string()));
    }
    let (p1, p2) = (j1.polar(), j2.polar());
    let (c1, s1) = j1.theta_cos_sin();
    let (c2, s2) = j2.theta_cos_sin();
    let det = c1 * s2 - s1 * c2;
    if det.abs() < 1e-12 {
        return Err(Error::Inconsistent(format!("hyper-solution ({j1}, {j2}) has equal angles θ = {}", p1.theta)));
    }
    let i1 = (p1.jmath.scale(s2) - p2.jmath.scale(s1)).scale(1.0 / det);
    let i2 = (p2.jmath.scale(c1) - p1.jmath.scale(c2)).scale(1.0 / det);
    Ok((Frame::new(&i1, &i2)?, p1.alpha))
}

/// Whether `K` lies on the kernel curve of `J`, i.e. `(K - J₁)c = 0` for `c ∈ ker(J₁ - J₂)`.
pub fn cker_membership(k: &SliceUnit, j: &HyperSolution) -> bool {
    let diff = k.value() - j.j1.value();
    j.kernel.basis().iter().all(|c| (diff * *c).norm() <= CKER_TOL)
}

/// `ψ(α_J, θ, ı^{[J]})`.
pub fn cker_curve_point(j: &HyperSolution, theta: f64) -> Result<SliceUnit> {
    psi(j.alpha, theta, &j.frame)
}

/// Basis pairs `(-J₁ c, c)` of the kernel of `(x, y) ↦ (x + J₁ y, x + J₂ y)`,
/// one for each basis vector `c` of `ker(J₁ - J₂)`.
pub fn kernel_zeta(j1: &SliceUnit, j2: &SliceUnit) -> Vec<(CDElement, CDElement)> {
    kernel_of_left_mult(&(j1.value() - j2.value())).basis().iter().map(|c| (-(j1.value() * *c), *c)).collect()
}

/// `φ[I](κ, ϑ) = ψ(α_I, ϑ, ı^{I,κ})` with `ı^{I,κ} = R(θ_I)(ȷ_I, κ)`.
pub fn phi(i: &SliceUnit, kappa: &CDElement, vartheta: f64) -> Result<SliceUnit> {
    if i.is_pole() {
        return Err(Error::InvalidArgument(format!("{i} has no companions")));
    }
    let kappa = kappa.promote(3)?;
    let j = i.jmath();
    if (kappa.norm() - 1.0).abs() > CKER_TOL || kappa.re().abs() > CKER_TOL || kappa.inner(&j).abs() > CKER_TOL {
        return Err(Error::InvalidArgument(format!("{kappa} is not a unit imaginary octonion orthogonal to {j}")));
    }
    let (s, c) = i.theta().sin_cos();
    let frame = Frame::new(&(j.scale(c) - kappa.scale(s)), &(j.scale(s) + kappa.scale(c)))?;
    psi(i.alpha(), vartheta, &frame)
}

/// A slice unit `K ≠ ±I` with `(I - K)c = 0`, when `c = d₁ + d₂ e8` admits one.
pub fn find_companion(i: &SliceUnit, c: &CDElement) -> Option<SliceUnit> {
    let c = c.to_sedenion();
    let scale = c.norm();
    if scale == 0.0 || i.is_pole() {
        return None;
    }
    let (d1, d2) = (c.lower(), c.upper());
    let (n1, n2) = (d1.norm(), d2.norm());
    if n1 <= SLICE_TOL * scale || (n1 - n2).abs() > SLICE_TOL * scale {
        return None;
    }
    if d1.re().abs() > SLICE_TOL * scale || d2.re().abs() > SLICE_TOL * scale {
        return None;
    }
    let d1_inv = d1.conj().scale(1.0 / (n1 * n1));
    let kappa = -(i.jmath() * (d2 * d1_inv));
    let k = phi(i, &kappa, (i.theta() + PI / 2.0) % PI).ok()?;
    let residual = ((i.value() - k.value()) * c).norm();
    (residual < COMPANION_TOL * scale).then_some(k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_2;

    fn e(i: usize) -> CDElement {
        CDElement::e(i)
    }

    fn unit(i: usize) -> SliceUnit {
        SliceUnit::basis(i)
    }

    fn oct(i: usize) -> CDElement {
        CDElement::unit(i).promote(3).unwrap()
    }

    fn e1_e10() -> HyperSolution {
        HyperSolution::new(&unit(1), &unit(10)).unwrap()
    }

    #[test]
    fn iota_frame_of_e1_e10() {
        let (frame, alpha) = iota_frame(&unit(1), &unit(10)).unwrap();
        assert!((alpha - FRAC_PI_2).abs() < 1e-15);
        assert!(frame.i1.dist(&oct(1)) < 1e-15 && frame.i2.dist(&oct(2)) < 1e-15);

        let (swapped, _) = iota_frame(&unit(10), &unit(1)).unwrap();
        for j in [unit(1), unit(10)] {
            let rebuilt = psi(alpha, j.theta(), &swapped).unwrap();
            assert!(rebuilt.value().dist(&j.value()) < 1e-9);
        }
        assert!(iota_frame(&unit(1), &unit(2)).is_err());
    }

    #[test]
    fn hyper_solution_examples() {
        assert!(is_hyper_solution(&unit(1), &unit(10)).unwrap());
        assert!(!is_hyper_solution(&unit(1), &unit(2)).unwrap());
        for k in [1, 3, 9, 15] {
            assert!(!is_hyper_solution(&unit(8), &unit(k)).unwrap());
        }
        assert!(is_hyper_solution(&unit(1), &unit(1)).is_err());
    }

    #[test]
    fn cker_curve_of_e1_e10() {
        let j = e1_e10();
        for theta in [0.0, 0.3, FRAC_PI_2, 2.0, 3.1] {
            let k = cker_curve_point(&j, theta).unwrap();
            let (s, c) = f64::sin_cos(theta);
            let expected = e(1).scale(c * c) + e(2).scale(c * s) + e(9).scale(s * c) + e(10).scale(s * s);
            assert!(k.value().dist(&expected) < 1e-15);
            assert!(cker_membership(&k, &j));
        }
        assert!(cker_curve_point(&j, PI - 1e-9).unwrap().value().dist(&e(1)) < 1e-8);
        assert!(!cker_membership(&unit(8), &j));
        assert!(cker_membership(&unit(1), &j));
        assert!(!cker_membership(&unit(1).neg(), &j));
    }

    #[test]
    fn kernel_zeta_pairs() {
        let pairs = kernel_zeta(&unit(1), &unit(10));
        assert_eq!(pairs.len(), 4);
        let seconds: Vec<CDElement> = pairs.iter().map(|p| p.1).collect();
        let expected = Subspace::span(&[e(4) + e(15), e(5) - e(14), e(6) + e(13), e(7) - e(12)]);
        assert!(Subspace::span(&seconds).max_angle(&expected) < 1e-10);
        for (first, second) in &pairs {
            assert!((*first + e(1) * *second).norm() < 1e-15);
            assert!((*first + e(10) * *second).norm() < 1e-12);
        }
        assert!(kernel_zeta(&unit(1), &unit(2)).is_empty());
    }

    #[test]
    fn companion_examples() {
        let k = find_companion(&unit(1), &(e(4) + e(15))).unwrap();
        assert!(k.value().dist(&e(10)) < 1e-12);
        assert!(((e(1) - k.value()) * (e(4) + e(15))).norm() < 1e-15);
        assert!(find_companion(&unit(1), &e(0)).is_none());
        assert!(find_companion(&unit(1), &(e(4) + e(15).scale(2.0))).is_none());
        assert!(find_companion(&unit(8), &(e(4) + e(15))).is_none());
    }

    #[test]
    fn phi_passes_through_its_base() {
        let i = unit(10);
        let k = phi(&i, &oct(5), i.theta()).unwrap();
        assert!(k.approx_eq(&i));
        assert!(phi(&i, &oct(2), 0.3).is_err());
        assert!(phi(&unit(8), &oct(5), 0.3).is_err());
    }
}
