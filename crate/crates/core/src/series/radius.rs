use serde::Serialize;

use super::{ExtendedReal, SeqSpec, PROJECTION_TOL};
use crate::algebra::CDElement;
use crate::slice::{find_companion, SliceUnit, WPoint};
use crate::zero::{kernel_of_left_mult, Subspace};

/// `1 / max |x_ℓ|^{1/ℓ}` over the last half of a finite table (ℓ ≥ 1).
fn windowed_radius(len: usize, size_at: impl Fn(usize) -> f64) -> ExtendedReal {
    let start = (len / 2).max(1);
    let limsup = (start..len).map(|ell| size_at(ell).powf(1.0 / ell as f64)).fold(0.0, f64::max);
    ExtendedReal(limsup).recip()
}

/// `R_a = 1 / limsup |a_ℓ|^{1/ℓ}`.
pub fn radius_ra(seq: &SeqSpec) -> ExtendedReal {
    match seq {
        SeqSpec::Table { values, .. } => windowed_radius(values.len(), |ell| values[ell].norm()),
        _ => seq.groups().first().map_or(ExtendedReal::INFINITY, |g| ExtendedReal(g.ratio)),
    }
}

fn perpendicular_norm(kernel: &Subspace, c: &CDElement) -> f64 {
    c.dist(&kernel.project(c))
}

/// `R_a^{p,J} = 1 / limsup dist(a_ℓ, ker(I_p - J))^{1/ℓ}`, or `R_a` when `p` is
/// real or `J = I_p`.
pub fn radius_rapj(seq: &SeqSpec, p: &WPoint, j: &SliceUnit) -> ExtendedReal {
    if p.is_real() || j.approx_eq(p.axis()) {
        return radius_ra(seq);
    }
    let kernel = kernel_of_left_mult(&(p.axis().value() - j.value()));
    match seq {
        SeqSpec::Table { values, .. } => windowed_radius(values.len(), |ell| perpendicular_norm(&kernel, &values[ell])),
        _ => seq
            .groups()
            .iter()
            .find(|g| perpendicular_norm(&kernel, &g.coeff) > PROJECTION_TOL * g.coeff.norm())
            .map_or(ExtendedReal::INFINITY, |g| ExtendedReal(g.ratio)),
    }
}

/// `R_a^p = sup_K R_a^{p,K}` together with a slice unit attaining it when it
/// exceeds `R_a`.
pub fn radius_rap(seq: &SeqSpec, p: &WPoint) -> (ExtendedReal, Option<SliceUnit>) {
    let r_a = radius_ra(seq);
    if p.is_real() || r_a.is_infinite() {
        return (r_a, None);
    }
    let candidates: Vec<SliceUnit> = match seq {
        SeqSpec::Table { values, candidates } => {
            let start = (values.len() / 2).max(1);
            candidates
                .iter()
                .filter_map(|c| SliceUnit::new(c).ok())
                .chain(
                    values[start.min(values.len())..]
                        .iter()
                        .filter(|c| c.norm() > 0.0)
                        .filter_map(|c| find_companion(p.axis(), c)),
                )
                .collect()
        }
        _ => seq.groups().first().and_then(|g| find_companion(p.axis(), &g.coeff)).into_iter().collect(),
    };
    candidates
        .into_iter()
        .map(|k| (radius_rapj(seq, p, &k), k))
        .filter(|(r, _)| *r > r_a)
        .max_by(|a, b| a.0.value().total_cmp(&b.0.value()))
        .map_or((r_a, None), |(r, k)| (r, Some(k)))
}

/// Which branch of the domain definition applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum DomainCase {
    /// `p` is real: the domain is a Euclidean ball.
    RealCenter,
    /// `R_a^p = R_a`: the domain is the σ-ball of radius `R_a`.
    SigmaBallOnly,
    /// `R_a^p > R_a`: a hyper-σ-ball intersected with a σ-ball.
    HyperIntersection,
}

/// The radii governing `Σ(p, a)`.
#[derive(Clone, Debug, Serialize)]
pub struct DomainReport {
    pub r_a: ExtendedReal,
    pub r_ap: ExtendedReal,
    pub witness: Option<SliceUnit>,
    pub case: DomainCase,
    /// Radii are windowed estimates (table sequences).
    pub approximate: bool,
}

pub fn domain_report(p: &WPoint, seq: &SeqSpec) -> DomainReport {
    let r_a = radius_ra(seq);
    let (r_ap, witness) = radius_rap(seq, p);
    let case = if p.is_real() {
        DomainCase::RealCenter
    } else if witness.is_some() {
        DomainCase::HyperIntersection
    } else {
        DomainCase::SigmaBallOnly
    };
    DomainReport { r_a, r_ap, witness, case, approximate: !seq.is_exact() }
}
