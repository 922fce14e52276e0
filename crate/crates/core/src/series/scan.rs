use std::fmt::Write as _;

use serde::Serialize;

use super::{evaluate_series, ConvergenceDomain, Membership, SeqSpec, Verdict};
use crate::algebra::{format_number, ComplexPoint};
use crate::error::Result;
use crate::slice::{SliceUnit, WPoint};

#[derive(Clone, Copy, Debug, Serialize)]
pub struct ScanOptions {
    pub max_terms: usize,
    pub tol: f64,
    /// Points with `|margin| < band` are left out of the agreement score.
    pub band: f64,
}

impl Default for ScanOptions {
    fn default() -> Self {
        Self { max_terms: 400, tol: 1e-8, band: 0.05 }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ScanSample {
    pub radius: f64,
    pub theta: f64,
    pub re: f64,
    pub im: f64,
    pub predicted: Membership,
    pub margin: f64,
    pub empirical: Verdict,
    pub terms_used: usize,
    pub tail_norm: f64,
    pub scored: bool,
    pub agrees: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ScanReport {
    pub samples: Vec<ScanSample>,
    pub agreed: usize,
    pub scored: usize,
    pub excluded: usize,
}

impl ScanReport {
    /// Fraction of scored samples where prediction and verdict agree.
    pub fn rate(&self) -> f64 {
        if self.scored == 0 {
            1.0
        } else {
            self.agreed as f64 / self.scored as f64
        }
    }

    pub fn to_csv(&self) -> String {
        let mut out =
            String::from("radius,theta,re,im,predicted,margin,empirical,terms_used,tail_norm,scored,agrees\n");
        for s in &self.samples {
            let _ = writeln!(
                out,
                "{},{},{},{},{},{},{},{},{},{},{}",
                format_number(s.radius),
                format_number(s.theta),
                format_number(s.re),
                format_number(s.im),
                s.predicted,
                format_number(s.margin),
                s.empirical,
                s.terms_used,
                format_number(s.tail_norm),
                s.scored,
                s.agrees
            );
        }
        out
    }
}

fn agrees(predicted: Membership, empirical: Verdict) -> bool {
    matches!(
        (predicted, empirical),
        (Membership::Interior, Verdict::Converged) | (Membership::Exterior, Verdict::Diverged)
    )
}

/// Compares the predicted domain with numerical evaluation on the polar grid
/// `r e^{iθ}` of `ℂ_slice⁺` (`θ ∈ [0, π]`).
pub fn convergence_scan(
    p: &WPoint,
    seq: &SeqSpec,
    slice: &SliceUnit,
    radial: &[f64],
    angular: &[f64],
    opts: &ScanOptions,
) -> Result<ScanReport> {
    let domain = ConvergenceDomain::new(p, seq);
    let view = domain.slice_view(slice);
    let mut samples = Vec::with_capacity(radial.len() * angular.len());
    for &theta in angular {
        for &radius in radial {
            let w = ComplexPoint::from_polar(radius, theta);
            let w = ComplexPoint::new(w.re, w.im.max(0.0));
            let class = view.classify(w);
            let q = WPoint::on_slice(w, slice);
            let report = evaluate_series(&q, p, seq, opts.max_terms, opts.tol)?;
            let scored = class.membership != Membership::Boundary && class.margin.abs() >= opts.band;
            samples.push(ScanSample {
                radius,
                theta,
                re: w.re,
                im: w.im,
                predicted: class.membership,
                margin: class.margin,
                empirical: report.verdict,
                terms_used: report.terms_used,
                tail_norm: report.tail_norm,
                scored,
                agrees: agrees(class.membership, report.verdict),
            });
        }
    }
    let scored = samples.iter().filter(|s| s.scored).count();
    let agreed = samples.iter().filter(|s| s.scored && s.agrees).count();
    Ok(ScanReport { excluded: samples.len() - scored, samples, agreed, scored })
}
