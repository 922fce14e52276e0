//! Star-product power series `Σ (q - p)^{*ℓ} a_ℓ` centred at a point of the
//! slice cone: the two convergence radii, the convergence domain `Σ(p, a)`
//! and numerical evaluation.

mod domain;
mod eval;
mod poly;
mod radius;
mod scan;
mod seq;

use std::fmt;

use serde::{Serialize, Serializer};

use crate::algebra::format_number;
use crate::error::{Error, Result};

pub use domain::{domain_contains, hyper_sigma_contains, sigma_contains, Classification, ConvergenceDomain, SliceView};
pub use eval::{evaluate_series, evaluate_series_by_operators, geometric_tail_terms, EvalOptions, EvalReport, Verdict};
pub use poly::{star_mul, star_pow_center, Polynomial};
pub use radius::{domain_report, radius_ra, radius_rap, radius_rapj, DomainCase, DomainReport};
pub use scan::{convergence_scan, ScanOptions, ScanReport, ScanSample};
pub use seq::{GeometricTerm, SeqSpec};

/// Relative size below which a projected coefficient counts as zero.
pub const PROJECTION_TOL: f64 = 1e-10;
/// Distance to a radius below which a point is reported on the boundary.
pub const BOUNDARY_TOL: f64 = 1e-9;

/// A value in `[0, +∞]` with `1/0 = +∞` and `1/+∞ = 0`.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd)]
pub struct ExtendedReal(f64);

impl ExtendedReal {
    pub const ZERO: Self = Self(0.0);
    pub const INFINITY: Self = Self(f64::INFINITY);

    pub fn new(x: f64) -> Result<Self> {
        if x.is_nan() || x < 0.0 {
            return Err(Error::InvalidArgument(format!("{x} is not in [0, +inf]")));
        }
        Ok(Self(x))
    }

    pub fn value(self) -> f64 {
        self.0
    }

    pub fn is_infinite(self) -> bool {
        self.0.is_infinite()
    }

    pub fn recip(self) -> Self {
        if self.0 == 0.0 {
            Self::INFINITY
        } else {
            Self(1.0 / self.0)
        }
    }

    pub fn max(self, other: Self) -> Self {
        if other.0 > self.0 {
            other
        } else {
            self
        }
    }

    pub fn min(self, other: Self) -> Self {
        if other.0 < self.0 {
            other
        } else {
            self
        }
    }
}

impl fmt::Display for ExtendedReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_number(self.0))
    }
}

impl Serialize for ExtendedReal {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        if self.is_infinite() {
            serializer.serialize_str("inf")
        } else {
            serializer.serialize_f64(self.0)
        }
    }
}

/// Position of a point relative to the convergence domain.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Membership {
    Interior,
    Exterior,
    Boundary,
}

impl fmt::Display for Membership {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Membership::Interior => "interior",
            Membership::Exterior => "exterior",
            Membership::Boundary => "boundary",
        })
    }
}
