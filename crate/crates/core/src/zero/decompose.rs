use serde::Serialize;

use super::{is_zero_divisor, kernel_of_left_mult, Subspace};
use crate::algebra::CDElement;
use crate::error::{Error, Result};
use crate::slice::WPoint;

/// `u + v e8 ↦ u - v e8`.
pub fn c8(p: &CDElement) -> CDElement {
    let s = p.to_sedenion();
    let mut coeffs = *s.padded();
    for c in &mut coeffs[8..] {
        *c = -*c;
    }
    CDElement::sedenion(coeffs)
}

/// Octonion part `u` of `p = u + v e8`.
pub fn o_left(p: &CDElement) -> CDElement {
    p.to_sedenion().lower()
}

/// Octonion coefficient `v` of `e8` in `p = u + v e8`.
pub fn o_right(p: &CDElement) -> CDElement {
    p.to_sedenion().upper()
}

/// `x = o_part + ker_part + kerc_part` along `𝕆_p ⊕ ker p ⊕ ker p^{c8}`.
#[derive(Clone, Debug, Serialize)]
pub struct OrthoDecomposition {
    pub o_part: CDElement,
    pub ker_part: CDElement,
    pub kerc_part: CDElement,
    #[serde(skip)]
    pub subspaces: [Subspace; 3],
}

/// The eight-dimensional subalgebra `ℍ_p + ℍ_p e8` with `ℍ_p = span(1, u, v, uv)`.
fn octonion_subalgebra(p: &CDElement) -> Subspace {
    let u = o_left(p);
    let v = o_right(p);
    let quaternions = [CDElement::one(3), u, v, u * v];
    let mut gens = Vec::with_capacity(8);
    for h in &quaternions {
        gens.push(h.to_sedenion());
        gens.push(CDElement::from_halves(&CDElement::zero(3), h).expect("octonion halves"));
    }
    Subspace::span(&gens)
}

pub fn ortho_decompose(x: &CDElement, p: &CDElement) -> Result<OrthoDecomposition> {
    if !is_zero_divisor(p) {
        return Err(Error::NotZeroDivisor(p.to_string()));
    }
    let o = octonion_subalgebra(p);
    let ker = kernel_of_left_mult(p);
    let kerc = kernel_of_left_mult(&c8(p));
    if o.dim() + ker.dim() + kerc.dim() != 16 {
        return Err(Error::Inconsistent(format!(
            "decomposition dimensions {}+{}+{} do not add up to 16",
            o.dim(),
            ker.dim(),
            kerc.dim()
        )));
    }
    Ok(OrthoDecomposition {
        o_part: o.project(x),
        ker_part: ker.project(x),
        kerc_part: kerc.project(x),
        subspaces: [o, ker, kerc],
    })
}

/// Components of `d` relative to the slice units of `p` and `q`.
#[derive(Clone, Debug, Serialize)]
pub struct PqProjection {
    /// Component in `ker(I_p - I_q)`.
    pub eq_part: CDElement,
    /// `d - eq_part`.
    pub perp_part: CDElement,
    /// Component in `ker(I_p + I_q)`.
    pub neg_eq_part: CDElement,
    /// Component in the complement of both kernels.
    pub mixed_part: CDElement,
}

pub fn pq_project(d: &CDElement, p: &WPoint, q: &WPoint) -> PqProjection {
    let d = d.to_sedenion();
    if p.is_real() || q.is_real() {
        return PqProjection {
            eq_part: CDElement::zero(4),
            perp_part: d,
            neg_eq_part: CDElement::zero(4),
            mixed_part: d,
        };
    }
    let ip = p.axis().value();
    let iq = q.axis().value();
    let eq_part = kernel_of_left_mult(&(ip - iq)).project(&d);
    let neg_eq_part = kernel_of_left_mult(&(ip + iq)).project(&d);
    PqProjection { eq_part, perp_part: d - eq_part, neg_eq_part, mixed_part: d - eq_part - neg_eq_part }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(i: usize) -> CDElement {
        CDElement::e(i)
    }

    #[test]
    fn c8_examples() {
        assert_eq!(c8(&(e(1) + e(10))), e(1) - e(10));
        assert_eq!(c8(&e(3)), e(3));
        assert_eq!(o_left(&(e(1) + e(10))), CDElement::unit(1).promote(3).unwrap());
        assert_eq!(o_right(&(e(1) + e(10))), CDElement::unit(2).promote(3).unwrap());
        let k = kernel_of_left_mult(&c8(&(e(1) - e(10))));
        let expected = Subspace::span(&[e(4) - e(15), e(5) + e(14), e(6) - e(13), e(7) + e(12)]);
        assert!(k.max_angle(&expected) < 1e-10);
    }

    #[test]
    fn decomposition_examples() {
        let p = e(1) - e(10);
        let d = ortho_decompose(&(e(4) + e(15)), &p).unwrap();
        assert!(d.o_part.norm() < 1e-12 && d.kerc_part.norm() < 1e-12);
        assert!(d.ker_part.dist(&(e(4) + e(15))) < 1e-12);

        let d = ortho_decompose(&e(0), &p).unwrap();
        assert!(d.o_part.dist(&e(0)) < 1e-12);
        assert!(d.ker_part.norm() < 1e-12 && d.kerc_part.norm() < 1e-12);

        assert!(ortho_decompose(&e(0), &e(3)).is_err());
    }

    #[test]
    fn decomposition_reconstructs() {
        let p = e(1) - e(10);
        let x = CDElement::sedenion(std::array::from_fn(|i| (i as f64 * 0.37).sin()));
        let d = ortho_decompose(&x, &p).unwrap();
        assert_eq!(d.subspaces.iter().map(Subspace::dim).collect::<Vec<_>>(), [8, 4, 4]);
        assert!((d.o_part + d.ker_part + d.kerc_part).dist(&x) < 1e-12);
        assert!(d.o_part.inner(&d.ker_part).abs() < 1e-12);
        assert!(d.ker_part.inner(&d.kerc_part).abs() < 1e-12);
    }
}
