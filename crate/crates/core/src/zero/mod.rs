//! Kernels of left multiplication and the zero-divisor structure built on them.

mod decompose;
mod products;

use serde::Serialize;

use crate::algebra::{CDElement, LeftMultOperator, Matrix16, Vector16, DIM};

pub use decompose::{c8, ortho_decompose, pq_project, OrthoDecomposition, PqProjection};
pub use products::{is_special_triple, zero_product_characterization, ZeroProductCertificate, ZeroProductVerdict};

/// Relative singular-value cutoff used for every numerical kernel.
pub const KERNEL_REL_TOL: f64 = 1e-9;
/// Elements with norm at most this are treated as zero when taking kernels.
pub const ZERO_NORM_TOL: f64 = 1e-12;

/// A linear subspace of the sedenions with an orthonormal basis.
#[derive(Clone, Debug, Serialize)]
#[serde(transparent)]
pub struct Subspace {
    basis: Vec<CDElement>,
}

impl Subspace {
    pub fn zero() -> Self {
        Self { basis: Vec::new() }
    }

    pub fn full() -> Self {
        Self { basis: (0..DIM).map(CDElement::e).collect() }
    }

    /// Orthonormalizes `vectors` (modified Gram-Schmidt), dropping dependent ones.
    pub fn span(vectors: &[CDElement]) -> Self {
        let mut basis: Vec<CDElement> = Vec::new();
        for v in vectors {
            let mut w = v.to_sedenion();
            for _ in 0..2 {
                for b in &basis {
                    w -= b.scale(b.inner(&w));
                }
            }
            if let Some(u) = w.normalized(1e-10 * v.norm().max(1e-300)) {
                basis.push(u);
            }
        }
        Self { basis }
    }

    pub fn basis(&self) -> &[CDElement] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn project(&self, x: &CDElement) -> CDElement {
        let x = x.to_sedenion();
        self.basis.iter().fold(CDElement::zero(4), |acc, b| acc + b.scale(b.inner(&x)))
    }

    /// Distance from `x` to the subspace.
    pub fn residual(&self, x: &CDElement) -> f64 {
        x.to_sedenion().dist(&self.project(x))
    }

    pub fn contains(&self, x: &CDElement, tol: f64) -> bool {
        self.residual(x) <= tol * x.norm().max(1.0)
    }

    /// Orthogonal complement in the sedenions.
    pub fn complement(&self) -> Self {
        let p = self.projector();
        let residual = Matrix16::identity() - p;
        let svd = residual.svd(false, true);
        let v_t = svd.v_t.expect("requested right singular vectors");
        let basis = svd
            .singular_values
            .iter()
            .enumerate()
            .filter(|(_, &s)| s > 0.5)
            .map(|(i, _)| CDElement::from_vector(&v_t.row(i).transpose()))
            .collect();
        Self { basis }
    }

    /// Orthogonal projector as a 16×16 matrix.
    pub fn projector(&self) -> Matrix16 {
        self.basis.iter().fold(Matrix16::zeros(), |acc, b| {
            let v = b.to_vector();
            acc + v * v.transpose()
        })
    }

    /// Principal angles to `other`, in increasing order; both must share a dimension.
    pub fn principal_angles(&self, other: &Self) -> Option<Vec<f64>> {
        if self.dim() != other.dim() {
            return None;
        }
        if self.dim() == 0 {
            return Some(Vec::new());
        }
        let cross = nalgebra::DMatrix::from_fn(self.dim(), other.dim(), |i, j| self.basis[i].inner(&other.basis[j]));
        let residual = nalgebra::DMatrix::from_fn(16, other.dim(), |i, j| {
            let v = other.basis[j];
            (v - self.project(&v)).coeff(i)
        });
        let mut cosines: Vec<f64> = cross.singular_values().iter().map(|s| s.min(1.0)).collect();
        let mut sines: Vec<f64> = residual.singular_values().iter().map(|s| s.min(1.0)).collect();
        cosines.sort_by(|a, b| b.total_cmp(a));
        sines.sort_by(f64::total_cmp);
        sines.truncate(cosines.len());
        Some(cosines.iter().zip(&sines).map(|(c, s)| s.atan2(*c)).collect())
    }

    /// Largest principal angle to `other`; `π/2` for mismatched dimensions.
    pub fn max_angle(&self, other: &Self) -> f64 {
        self.principal_angles(other).map(|a| a.last().copied().unwrap_or(0.0)).unwrap_or(std::f64::consts::FRAC_PI_2)
    }

    /// Applies `f` to every basis vector and re-orthonormalizes.
    pub fn map(&self, f: impl Fn(&CDElement) -> CDElement) -> Self {
        let images: Vec<CDElement> = self.basis.iter().map(f).collect();
        Self::span(&images)
    }

    pub fn is_orthogonal_to(&self, other: &Self, tol: f64) -> bool {
        self.basis.iter().all(|a| other.basis.iter().all(|b| a.inner(b).abs() <= tol))
    }
}

/// `ker L_s`, from the right singular vectors with σ ≤ 1e-9·σ_max.
///
/// An element of norm at most [`ZERO_NORM_TOL`] has the whole space as kernel.
pub fn kernel_of_left_mult(s: &CDElement) -> Subspace {
    if s.norm() <= ZERO_NORM_TOL {
        return Subspace::full();
    }
    let op = LeftMultOperator::new(s);
    let svd = op.matrix.svd(false, true);
    let v_t = svd.v_t.expect("requested right singular vectors");
    let cutoff = KERNEL_REL_TOL * svd.singular_values.max();
    let basis = svd
        .singular_values
        .iter()
        .enumerate()
        .filter(|(_, &sv)| sv <= cutoff)
        .map(|(i, _)| {
            let v: Vector16 = v_t.row(i).transpose();
            CDElement::from_vector(&v)
        })
        .collect();
    Subspace { basis }
}

/// Whether `s` is a nonzero zero divisor, i.e. `L_s` is singular.
pub fn is_zero_divisor(s: &CDElement) -> bool {
    s.norm() > ZERO_NORM_TOL && kernel_of_left_mult(s).dim() > 0
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(i: usize) -> CDElement {
        CDElement::e(i)
    }

    #[test]
    fn kernel_of_e1_minus_e10() {
        let k = kernel_of_left_mult(&(e(1) - e(10)));
        assert_eq!(k.dim(), 4);
        let expected = Subspace::span(&[e(4) + e(15), e(5) - e(14), e(6) + e(13), e(7) - e(12)]);
        assert!(k.max_angle(&expected) < 1e-10);
    }

    #[test]
    fn units_and_zero() {
        assert_eq!(kernel_of_left_mult(&e(3)).dim(), 0);
        assert_eq!(kernel_of_left_mult(&CDElement::zero(4)).dim(), 16);
        assert!(!is_zero_divisor(&e(3)));
        assert!(is_zero_divisor(&(e(1) - e(10))));
        assert!(!is_zero_divisor(&CDElement::zero(4)));
    }

    #[test]
    fn octonion_kernels_are_trivial() {
        let x = CDElement::octonion([0.3, -1.0, 0.2, 0.0, 0.7, 0.1, -0.4, 0.9]);
        assert_eq!(kernel_of_left_mult(&x).dim(), 0);
    }

    #[test]
    fn complement_and_projection() {
        let s = Subspace::span(&[e(1), e(2) + e(3), e(1) + e(2) + e(3)]);
        assert_eq!(s.dim(), 2);
        let c = s.complement();
        assert_eq!(c.dim(), 14);
        assert!(s.is_orthogonal_to(&c, 1e-12));
        let x = e(1) + e(2) + e(9);
        assert!(s.project(&x).dist(&(e(1) + (e(2) + e(3)).scale(0.5))) < 1e-14);
        assert!(s.contains(&(e(2) + e(3)), 1e-12));
        assert!(!s.contains(&e(9), 1e-12));
    }

    #[test]
    fn principal_angles_detect_tilt() {
        let a = Subspace::span(&[e(1)]);
        let b = Subspace::span(&[e(1) + e(2)]);
        let angles = a.principal_angles(&b).unwrap();
        assert!((angles[0] - std::f64::consts::FRAC_PI_4).abs() < 1e-12);
        assert!(a.principal_angles(&Subspace::full()).is_none());
        let tiny = Subspace::span(&[e(1) + e(2).scale(1e-12)]);
        assert!((a.max_angle(&tiny) - 1e-12).abs() < 1e-20);
    }
}
