use nalgebra::{SMatrix, SVector};
use num_complex::Complex64;

use super::{CDElement, DIM};

pub type Matrix16 = SMatrix<f64, DIM, DIM>;
pub type Vector16 = SVector<f64, DIM>;

/// A point `x + i y` of the complex plane.
pub type ComplexPoint = Complex64;

impl CDElement {
    pub fn to_vector(&self) -> Vector16 {
        Vector16::from_column_slice(self.padded())
    }

    pub fn from_vector(v: &Vector16) -> CDElement {
        let mut c = [0.0; DIM];
        c.copy_from_slice(v.as_slice());
        CDElement::sedenion(c)
    }
}

/// The real-linear map `x ↦ s x` on the sedenions.
#[derive(Clone, Debug)]
pub struct LeftMultOperator {
    pub source: CDElement,
    pub matrix: Matrix16,
}

impl LeftMultOperator {
    pub fn new(s: &CDElement) -> Self {
        let s = s.to_sedenion();
        let matrix = Matrix16::from_fn(|row, col| (s * CDElement::e(col)).coeff(row));
        Self { source: s, matrix }
    }

    pub fn apply(&self, x: &CDElement) -> CDElement {
        CDElement::from_vector(&(self.matrix * x.to_vector()))
    }

    /// Numerical rank with singular values below `rel_tol * σ_max` discarded.
    pub fn rank(&self, rel_tol: f64) -> usize {
        let sv = self.matrix.singular_values();
        let cutoff = rel_tol * sv.max();
        sv.iter().filter(|&&s| s > cutoff).count()
    }
}

/// Matrix of left multiplication by `s`; column `m` holds `s e_m`.
pub fn left_mult_matrix(s: &CDElement) -> Matrix16 {
    LeftMultOperator::new(s).matrix
}

/// The embedding `x + i y ↦ x + y I` into the slice through `I`.
pub fn complex_embed(z: ComplexPoint, unit: &CDElement) -> CDElement {
    CDElement::real(unit.level(), z.re) + unit.scale(z.im)
}
