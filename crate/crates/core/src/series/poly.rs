use crate::algebra::{complex_embed, CDElement};
use crate::slice::WPoint;

/// A left polynomial `P(q) = Σ_n q^n b_n` with sedenion coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct Polynomial {
    coeffs: Vec<CDElement>,
}

impl Polynomial {
    pub fn new(coeffs: Vec<CDElement>) -> Self {
        let mut coeffs: Vec<CDElement> = coeffs.iter().map(CDElement::to_sedenion).collect();
        while coeffs.last().is_some_and(|c| c.norm() == 0.0) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn constant(c: &CDElement) -> Self {
        Self::new(vec![*c])
    }

    /// `q - p`.
    pub fn linear(p: &CDElement) -> Self {
        Self::new(vec![-p.to_sedenion(), CDElement::one(4)])
    }

    pub fn coeffs(&self) -> &[CDElement] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// `Σ_n q^n b_n`, with `q^n` built by repeated left multiplication.
    pub fn eval(&self, q: &CDElement) -> CDElement {
        let q = q.to_sedenion();
        let mut power = CDElement::one(4);
        let mut sum = CDElement::zero(4);
        for b in &self.coeffs {
            sum += power * *b;
            power = q * power;
        }
        sum
    }

    /// `P * c`: every coefficient multiplied on the right by `c`.
    pub fn right_mul(&self, c: &CDElement) -> Self {
        Self::new(self.coeffs.iter().map(|b| *b * *c).collect())
    }
}

/// `(P * Q)(q) = Σ_{n,m} q^{n+m} b_n c_m`.
pub fn star_mul(left: &Polynomial, right: &Polynomial) -> Polynomial {
    if left.coeffs.is_empty() || right.coeffs.is_empty() {
        return Polynomial::new(Vec::new());
    }
    let mut out = vec![CDElement::zero(4); left.coeffs.len() + right.coeffs.len() - 1];
    for (n, b) in left.coeffs.iter().enumerate() {
        for (m, c) in right.coeffs.iter().enumerate() {
            out[n + m] += *b * *c;
        }
    }
    Polynomial::new(out)
}

fn binomials(ell: usize) -> Option<Vec<f64>> {
    let mut row = Vec::with_capacity(ell + 1);
    let mut current: u64 = 1;
    row.push(1.0);
    for k in 1..=ell {
        current = current.checked_mul((ell + 1 - k) as u64)? / k as u64;
        row.push(current as f64);
    }
    Some(row)
}

/// `(q - p)^{*ℓ} = Σ_n q^n C(ℓ, n) (-p)^{ℓ-n}`.
pub fn star_pow_center(p: &WPoint, ell: usize) -> Polynomial {
    let Some(binom) = binomials(ell) else {
        let linear = Polynomial::linear(&p.value());
        return (0..ell).fold(Polynomial::constant(&CDElement::one(4)), |acc, _| star_mul(&acc, &linear));
    };
    let minus_z = -p.z();
    let axis = p.axis().value();
    let coeffs = (0..=ell).map(|n| complex_embed(minus_z.powu((ell - n) as u32), &axis).scale(binom[n])).collect();
    Polynomial::new(coeffs)
}
