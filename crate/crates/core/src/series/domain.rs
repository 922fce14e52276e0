use serde::Serialize;

use super::{domain_report, radius_rapj, DomainReport, ExtendedReal, Membership, SeqSpec, BOUNDARY_TOL};
use crate::algebra::ComplexPoint;
use crate::error::{Error, Result};
use crate::slice::{cker_membership, HyperSolution, SliceUnit, WPoint};

const CENTER_TOL: f64 = 1e-12;

fn in_ball(w: ComplexPoint, center: ComplexPoint, r: ExtendedReal) -> bool {
    let d = (w - center).norm();
    d < r.value() || d <= CENTER_TOL
}

fn same_axis(q: &WPoint, p: &WPoint) -> bool {
    q.is_real() || p.is_real() || q.axis().approx_eq(p.axis())
}

/// Membership in the σ-ball `Σ(p, r)`, decided on the slice of `q`.
pub fn sigma_contains(q: &WPoint, p: &WPoint, r: ExtendedReal) -> bool {
    let (w, z) = (q.z(), p.z());
    if same_axis(q, p) {
        in_ball(w, z, r)
    } else {
        in_ball(w, z, r) && in_ball(w, z.conj(), r)
    }
}

/// Membership in the hyper-σ-ball `Σ(p, r, J)`; requires `I_p = J₁`.
pub fn hyper_sigma_contains(q: &WPoint, p: &WPoint, r: ExtendedReal, j: &HyperSolution) -> Result<bool> {
    if p.is_real() || !p.axis().approx_eq(&j.j1) {
        return Err(Error::InvalidArgument(format!("center {} does not lie on the slice of {}", p.value(), j.j1)));
    }
    let (w, z) = (q.z(), p.z());
    if same_axis(q, p) || cker_membership(q.axis(), j) {
        Ok(in_ball(w, z, r))
    } else {
        Ok(in_ball(w, z, r) && in_ball(w, z.conj(), r))
    }
}

/// A membership decision with its signed distance to the nearest active radius.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct Classification {
    pub membership: Membership,
    /// `min_k (R_k - d_k)`; positive inside, negative outside.
    pub margin: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Relation {
    RealCenter,
    SameAxis,
    OppositeAxis,
    Other,
}

/// `Σ(p, a)` restricted to one closed half-plane `ℂ_I⁺`.
#[derive(Clone, Debug)]
pub struct SliceView {
    relation: Relation,
    z_p: ComplexPoint,
    r_a: ExtendedReal,
    r_ap: ExtendedReal,
    outer: ExtendedReal,
}

impl SliceView {
    /// Radius of the disk around `z̄_p`, i.e. `R_a^{p,I}`.
    pub fn outer_radius(&self) -> ExtendedReal {
        self.outer
    }

    /// Open disks `(center, radius)` whose intersection is the domain on this
    /// half-plane.
    pub fn disks(&self) -> Vec<(ComplexPoint, ExtendedReal)> {
        let z = self.z_p;
        match self.relation {
            Relation::RealCenter | Relation::SameAxis => vec![(z, self.r_a)],
            Relation::OppositeAxis => vec![(z.conj(), self.r_a)],
            Relation::Other => vec![(z, self.r_a), (z.conj(), self.outer)],
        }
    }

    /// `(distance, radius)` pairs that must all satisfy `distance < radius`.
    pub fn constraints(&self, w: ComplexPoint) -> Vec<(f64, ExtendedReal)> {
        self.disks().into_iter().map(|(c, r)| ((w - c).norm(), r)).collect()
    }

    /// Classifies the point `w` of the upper half-plane (`w.im ≥ 0`).
    pub fn classify(&self, w: ComplexPoint) -> Classification {
        if self.r_a == ExtendedReal::ZERO && self.relation != Relation::RealCenter {
            return self.classify_degenerate(w);
        }
        let margin = self.constraints(w).into_iter().map(|(d, r)| r.value() - d).fold(f64::INFINITY, f64::min);
        let membership = if margin < -BOUNDARY_TOL {
            Membership::Exterior
        } else if margin > BOUNDARY_TOL {
            Membership::Interior
        } else {
            Membership::Boundary
        };
        Classification { membership, margin }
    }

    /// `R_a = 0`: the domain is `{p}`, or the points `Ψ^J(z_p)` with
    /// `R_a^{p,J} > 0` when `R_a^p > 2 Im p`.
    fn classify_degenerate(&self, w: ComplexPoint) -> Classification {
        let gap = (w - self.z_p).norm();
        let at_center = gap <= CENTER_TOL;
        let member = at_center
            && match self.relation {
                Relation::SameAxis => true,
                Relation::Other => self.r_ap.value() > 2.0 * self.z_p.im && self.outer > ExtendedReal::ZERO,
                _ => false,
            };
        if member {
            Classification { membership: Membership::Interior, margin: 0.0 }
        } else {
            Classification { membership: Membership::Exterior, margin: -gap.max(CENTER_TOL) }
        }
    }
}

/// `Σ(p, a)` with its radii computed once.
#[derive(Clone, Debug)]
pub struct ConvergenceDomain {
    p: WPoint,
    seq: SeqSpec,
    report: DomainReport,
    eps: f64,
}

fn reduced(r: ExtendedReal, eps: f64) -> ExtendedReal {
    if r.is_infinite() {
        r
    } else {
        ExtendedReal::new((r.value() - eps).max(0.0)).expect("finite radius")
    }
}

impl ConvergenceDomain {
    pub fn new(p: &WPoint, seq: &SeqSpec) -> Self {
        Self { p: *p, seq: seq.clone(), report: domain_report(p, seq), eps: 0.0 }
    }

    /// Same domain with externally supplied radii; used for degenerate cases.
    pub fn with_report(p: &WPoint, seq: &SeqSpec, report: DomainReport) -> Self {
        Self { p: *p, seq: seq.clone(), report, eps: 0.0 }
    }

    /// `Σ(p, a, ε)`: every radius reduced by `ε`, for `0 ≤ ε < R_a < ∞`.
    pub fn shrunk(&self, eps: f64) -> Result<Self> {
        let r_a = self.report.r_a;
        if r_a.is_infinite() || !(0.0..r_a.value()).contains(&eps) {
            return Err(Error::InvalidArgument(format!("ε = {eps} must lie in [0, R_a) with R_a = {r_a} finite")));
        }
        Ok(Self { eps: self.eps + eps, ..self.clone() })
    }

    /// Amount by which the radii of [`Self::report`] are reduced.
    pub fn shrinkage(&self) -> f64 {
        self.eps
    }

    pub fn report(&self) -> &DomainReport {
        &self.report
    }

    pub fn center(&self) -> &WPoint {
        &self.p
    }

    pub fn sequence(&self) -> &SeqSpec {
        &self.seq
    }

    pub fn slice_view(&self, axis: &SliceUnit) -> SliceView {
        let relation = if self.p.is_real() {
            Relation::RealCenter
        } else if axis.approx_eq(self.p.axis()) {
            Relation::SameAxis
        } else if axis.approx_eq(&self.p.axis().neg()) {
            Relation::OppositeAxis
        } else {
            Relation::Other
        };
        let outer = match relation {
            Relation::Other => radius_rapj(&self.seq, &self.p, axis),
            _ => self.report.r_a,
        };
        SliceView {
            relation,
            z_p: self.p.z(),
            r_a: reduced(self.report.r_a, self.eps),
            r_ap: reduced(self.report.r_ap, self.eps),
            outer: reduced(outer, self.eps),
        }
    }

    pub fn classify(&self, q: &WPoint) -> Classification {
        self.slice_view(q.axis()).classify(q.z())
    }
}

/// Interior, exterior or boundary of `Σ(p, a)`.
pub fn domain_contains(q: &WPoint, p: &WPoint, seq: &SeqSpec) -> Membership {
    ConvergenceDomain::new(p, seq).classify(q).membership
}
