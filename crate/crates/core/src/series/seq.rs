use serde::{Deserialize, Serialize};

use crate::algebra::CDElement;
use crate::error::{Error, Result};

/// One geometric component `c r^{-ℓ}`.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct GeometricTerm {
    pub coeff: CDElement,
    pub ratio: f64,
}

/// A coefficient sequence `a = (a_ℓ)_{ℓ ≥ 0}`.
///
/// JSON form: `{"kind":"geometric","terms":[{"coeff":"e4+e15","ratio":2}]}`,
/// `{"kind":"lacunary","coeff":"1","ratio":1}` or
/// `{"kind":"table","values":["1","0.5e1"],"candidates":["e10"]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum SeqSpec {
    /// `a_ℓ = Σ_i c_i r_i^{-ℓ}`.
    Geometric { terms: Vec<GeometricTerm> },
    /// `a_ℓ = c r^{-ℓ}` when `ℓ` is a power of two, zero otherwise.
    Lacunary { coeff: CDElement, ratio: f64 },
    /// Finitely many coefficients; radii are windowed estimates.
    Table {
        values: Vec<CDElement>,
        /// Extra slice units tried when estimating `R_a^p`.
        #[serde(default)]
        candidates: Vec<CDElement>,
    },
}

impl SeqSpec {
    pub fn geometric(terms: &[(CDElement, f64)]) -> Result<Self> {
        let spec =
            Self::Geometric { terms: terms.iter().map(|&(coeff, ratio)| GeometricTerm { coeff, ratio }).collect() };
        spec.validated()
    }

    pub fn lacunary(coeff: CDElement, ratio: f64) -> Result<Self> {
        Self::Lacunary { coeff, ratio }.validated()
    }

    pub fn table(values: Vec<CDElement>) -> Self {
        Self::Table { values, candidates: Vec::new() }.validated().expect("tables need no validation")
    }

    /// The all-zero sequence.
    pub fn zero() -> Self {
        Self::Geometric { terms: Vec::new() }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str::<Self>(text)?.validated()
    }

    /// Checks ratios and promotes every coefficient to the sedenions.
    pub fn validated(self) -> Result<Self> {
        let check = |r: f64| {
            if r.is_finite() && r > 0.0 {
                Ok(r)
            } else {
                Err(Error::InvalidArgument(format!("ratio {r} must be positive and finite")))
            }
        };
        Ok(match self {
            Self::Geometric { terms } => Self::Geometric {
                terms: terms
                    .into_iter()
                    .map(|t| Ok(GeometricTerm { coeff: t.coeff.to_sedenion(), ratio: check(t.ratio)? }))
                    .collect::<Result<_>>()?,
            },
            Self::Lacunary { coeff, ratio } => Self::Lacunary { coeff: coeff.to_sedenion(), ratio: check(ratio)? },
            Self::Table { values, candidates } => Self::Table {
                values: values.iter().map(CDElement::to_sedenion).collect(),
                candidates: candidates.iter().map(CDElement::to_sedenion).collect(),
            },
        })
    }

    /// Radii of this sequence are exact limsups rather than estimates.
    pub fn is_exact(&self) -> bool {
        !matches!(self, Self::Table { .. })
    }

    /// `a_ℓ`.
    pub fn coefficient(&self, ell: usize) -> CDElement {
        match self {
            Self::Geometric { terms } => {
                terms.iter().fold(CDElement::zero(4), |acc, t| acc + t.coeff.scale(t.ratio.powi(-(ell as i32))))
            }
            Self::Lacunary { coeff, ratio } => {
                if ell.is_power_of_two() {
                    coeff.scale(ratio.powi(-(ell as i32)))
                } else {
                    CDElement::zero(4)
                }
            }
            Self::Table { values, .. } => values.get(ell).copied().unwrap_or_else(|| CDElement::zero(4)),
        }
    }

    /// Whether `a_ℓ` can be nonzero.
    pub fn in_support(&self, ell: usize) -> bool {
        match self {
            Self::Lacunary { .. } => ell.is_power_of_two(),
            Self::Table { values, .. } => ell < values.len(),
            Self::Geometric { .. } => true,
        }
    }

    /// Geometric components merged by equal ratio, in increasing ratio order,
    /// keeping only groups whose combined coefficient does not cancel.
    pub fn groups(&self) -> Vec<GeometricTerm> {
        let mut terms: Vec<GeometricTerm> = match self {
            Self::Geometric { terms } => terms.clone(),
            Self::Lacunary { coeff, ratio } => vec![GeometricTerm { coeff: *coeff, ratio: *ratio }],
            Self::Table { .. } => return Vec::new(),
        };
        terms.sort_by(|a, b| a.ratio.total_cmp(&b.ratio));
        let mut groups: Vec<(GeometricTerm, f64)> = Vec::new();
        for t in terms {
            match groups.last_mut() {
                Some((g, size)) if g.ratio == t.ratio => {
                    g.coeff += t.coeff;
                    *size += t.coeff.norm();
                }
                _ => groups.push((t, t.coeff.norm())),
            }
        }
        groups.into_iter().filter(|(g, size)| g.coeff.norm() > super::PROJECTION_TOL * size).map(|(g, _)| g).collect()
    }
}
