use serde::Serialize;

use crate::algebra::CDElement;
use crate::error::{Error, Result};

const TRIPLE_TOL: f64 = 1e-9;

fn require_octonion(x: &CDElement, name: &str) -> Result<CDElement> {
    x.promote(3).map_err(|_| Error::InvalidArgument(format!("{name} = {x} is not an octonion")))
}

/// Unit octonions with `(ij)k = -i(jk)`.
pub fn is_special_triple(i: &CDElement, j: &CDElement, k: &CDElement) -> bool {
    let (Ok(i), Ok(j), Ok(k)) = (require_octonion(i, "i"), require_octonion(j, "j"), require_octonion(k, "k")) else {
        return false;
    };
    if [i, j, k].iter().any(|x| (x.norm() - 1.0).abs() > TRIPLE_TOL) {
        return false;
    }
    let left = (i * j) * k;
    let right = i * (j * k);
    (left + right).norm() <= TRIPLE_TOL
}

/// Evidence that `(a + b e8)(c + d e8) = 0`.
#[derive(Clone, Debug, Serialize)]
pub struct ZeroProductCertificate {
    /// `a(bc) / (|a||b|)`, which must equal `d`.
    pub predicted_d: CDElement,
    pub norm_gap: f64,
    pub d_error: f64,
    pub special_triple: bool,
}

impl ZeroProductCertificate {
    fn holds(&self) -> bool {
        self.norm_gap <= TRIPLE_TOL && self.d_error <= TRIPLE_TOL && self.special_triple
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ZeroProductVerdict {
    pub is_zero: bool,
    /// Present whenever `a, b, c` are all nonzero.
    pub certificate: Option<ZeroProductCertificate>,
    pub product_norm: f64,
}

/// Decides `(a + b e8)(c + d e8) = 0` and checks the answer against the
/// special-triple characterization.
///
/// Direct multiplication and the characterization must agree; a disagreement
/// is reported as [`Error::Inconsistent`].
pub fn zero_product_characterization(
    a: &CDElement,
    b: &CDElement,
    c: &CDElement,
    d: &CDElement,
) -> Result<ZeroProductVerdict> {
    let [a, b, c, d] =
        [require_octonion(a, "a")?, require_octonion(b, "b")?, require_octonion(c, "c")?, require_octonion(d, "d")?];
    let left = CDElement::from_halves(&a, &b)?;
    let right = CDElement::from_halves(&c, &d)?;
    if left.norm() == 0.0 || right.norm() == 0.0 {
        return Err(Error::InvalidArgument("both factors must be nonzero".into()));
    }
    let product_norm = (left * right).norm();
    let is_zero = product_norm <= TRIPLE_TOL * left.norm() * right.norm();

    let certificate = (a.norm() > 0.0 && b.norm() > 0.0 && c.norm() > 0.0).then(|| {
        let (na, nb, nc) = (a.norm(), b.norm(), c.norm());
        let predicted_d = (a * (b * c)).scale(1.0 / (na * nb));
        ZeroProductCertificate {
            predicted_d,
            norm_gap: (na - nb).abs() / na.max(nb),
            d_error: predicted_d.dist(&d) / nc.max(d.norm()),
            special_triple: is_special_triple(&a.scale(1.0 / na), &b.scale(1.0 / nb), &c.scale(1.0 / nc)),
        }
    });
    let characterized = certificate.as_ref().is_some_and(ZeroProductCertificate::holds);
    if characterized != is_zero {
        return Err(Error::Inconsistent(format!(
            "direct product norm {product_norm:e} disagrees with the special-triple characterization"
        )));
    }
    Ok(ZeroProductVerdict { is_zero, certificate, product_norm })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn o(i: usize) -> CDElement {
        CDElement::unit(i).promote(3).unwrap()
    }

    #[test]
    fn special_triple_examples() {
        assert!(is_special_triple(&o(1), &o(2), &o(4)));
        assert!(!is_special_triple(&o(1), &o(2), &o(3)));
        assert!(!is_special_triple(&o(1), &o(2), &o(4).scale(2.0)));
        assert!(!is_special_triple(&o(1), &o(2), &CDElement::e(9)));
    }

    #[test]
    fn characterization_of_e1_minus_e10() {
        let v = zero_product_characterization(&o(1), &(-o(2)), &o(4), &o(7)).unwrap();
        assert!(v.is_zero);
        let cert = v.certificate.unwrap();
        assert_eq!(cert.predicted_d, o(7));
        assert!(cert.special_triple);
    }

    #[test]
    fn nonzero_products() {
        let zero = CDElement::zero(3);
        let v = zero_product_characterization(&o(1), &o(1), &o(2), &zero).unwrap();
        assert!(!v.is_zero);
        let one = CDElement::one(3);
        let v = zero_product_characterization(&one, &o(5), &o(2), &o(3)).unwrap();
        assert!(!v.is_zero);
    }

    #[test]
    fn zero_factor_is_an_argument_error() {
        let zero = CDElement::zero(3);
        assert!(zero_product_characterization(&zero, &zero, &o(1), &o(2)).is_err());
        assert!(zero_product_characterization(&o(1), &o(1), &CDElement::e(9), &o(2)).is_err());
    }
}
