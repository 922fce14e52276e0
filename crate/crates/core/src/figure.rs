//! Cross-sections of a convergence domain on representative slices, as
//! classification grids (CSV) and disk-intersection drawings (SVG).

use std::f64::consts::{FRAC_PI_3, PI};
use std::fmt::{self, Write as _};

use serde::Serialize;

use crate::algebra::{format_number, CDElement, ComplexPoint};
use crate::error::Result;
use crate::series::{ConvergenceDomain, Membership, SeqSpec};
use crate::slice::{cker_curve_point, cker_membership, HyperSolution, SliceUnit, WPoint};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PanelKind {
    /// The slice of the center.
    Center,
    /// A point of the companion curve through the center's slice.
    CkerCurve,
    /// The negative of that point.
    NegatedCurve,
    /// A slice on neither the curve nor its negative.
    Generic,
}

impl fmt::Display for PanelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PanelKind::Center => "center",
            PanelKind::CkerCurve => "cker-curve",
            PanelKind::NegatedCurve => "negated-curve",
            PanelKind::Generic => "generic",
        })
    }
}

#[derive(Clone, Debug)]
pub struct Panel {
    pub kind: PanelKind,
    pub slice: SliceUnit,
}

/// Center slice, curve point at angle `π/3`, its negative and the first basis
/// unit off the curve. Without a companion witness the curve panels are omitted.
pub fn figure_panels(domain: &ConvergenceDomain) -> Result<Vec<Panel>> {
    let p = domain.center();
    let center = if p.is_real() { SliceUnit::base() } else { *p.axis() };
    let mut panels = vec![Panel { kind: PanelKind::Center, slice: center }];
    let curve = match &domain.report().witness {
        Some(k) if !p.is_real() => Some(HyperSolution::new(&center, k)?),
        _ => None,
    };
    if let Some(j) = &curve {
        let k = cker_curve_point(j, FRAC_PI_3)?;
        panels.push(Panel { kind: PanelKind::CkerCurve, slice: k });
        panels.push(Panel { kind: PanelKind::NegatedCurve, slice: k.neg() });
    }
    let generic = (2..16).map(SliceUnit::basis).find(|s| {
        !s.approx_eq(&center)
            && !s.approx_eq(&center.neg())
            && curve.as_ref().is_none_or(|j| !cker_membership(s, j) && !cker_membership(&s.neg(), j))
    });
    if let Some(slice) = generic {
        panels.push(Panel { kind: PanelKind::Generic, slice });
    }
    Ok(panels)
}

#[derive(Clone, Debug, Serialize)]
pub struct PanelSample {
    pub panel: PanelKind,
    pub radius: f64,
    pub theta: f64,
    pub re: f64,
    pub im: f64,
    pub membership: Membership,
    pub margin: f64,
}

/// `count` radii evenly spaced in `(0, extent]` and `count` angles in `[0, π]`.
pub fn polar_grid(count: usize, extent: f64) -> (Vec<f64>, Vec<f64>) {
    let radial = (1..=count).map(|k| extent * k as f64 / count as f64).collect();
    let angular = (0..count).map(|k| if count == 1 { 0.0 } else { PI * k as f64 / (count - 1) as f64 }).collect();
    (radial, angular)
}

/// Classifies every grid point of every panel by the domain membership of
/// `Ψ^slice(r e^{iθ})`.
pub fn classify_panels(
    domain: &ConvergenceDomain,
    panels: &[Panel],
    radial: &[f64],
    angular: &[f64],
) -> Vec<PanelSample> {
    let mut out = Vec::with_capacity(panels.len() * radial.len() * angular.len());
    for panel in panels {
        let view = domain.slice_view(&panel.slice);
        for &theta in angular {
            for &radius in radial {
                let w = ComplexPoint::from_polar(radius, theta);
                let w = ComplexPoint::new(w.re, w.im.max(0.0));
                let class = view.classify(w);
                out.push(PanelSample {
                    panel: panel.kind,
                    radius,
                    theta,
                    re: w.re,
                    im: w.im,
                    membership: class.membership,
                    margin: class.margin,
                });
            }
        }
    }
    out
}

pub fn region_csv(samples: &[PanelSample]) -> String {
    let mut out = String::from("panel,radius,theta,re,im,membership,margin\n");
    for s in samples {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{}",
            s.panel,
            format_number(s.radius),
            format_number(s.theta),
            format_number(s.re),
            format_number(s.im),
            s.membership,
            format_number(s.margin)
        );
    }
    out
}

const PANEL_PX: f64 = 240.0;
const MARGIN_PX: f64 = 20.0;

/// Side-by-side drawings of each panel's disk intersection, clipped to the
/// closed upper half-plane `|w| ≤ extent`.
pub fn render_svg(domain: &ConvergenceDomain, panels: &[Panel], extent: f64) -> String {
    let scale = PANEL_PX / (2.0 * extent);
    let width = panels.len() as f64 * (PANEL_PX + MARGIN_PX) + MARGIN_PX;
    let height = PANEL_PX / 2.0 + 2.0 * MARGIN_PX + 16.0;
    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(svg, r#"<rect width="100%" height="100%" fill="white"/>"#);
    for (n, panel) in panels.iter().enumerate() {
        let left = MARGIN_PX + n as f64 * (PANEL_PX + MARGIN_PX);
        let axis_y = MARGIN_PX + PANEL_PX / 2.0;
        let to_px = |w: ComplexPoint| (left + PANEL_PX / 2.0 + w.re * scale, axis_y - w.im * scale);
        let _ = writeln!(svg, r#"<g id="panel-{}">"#, panel.kind);
        let _ = writeln!(
            svg,
            r#"<clipPath id="half-{n}"><rect x="{left}" y="{MARGIN_PX}" width="{PANEL_PX}" height="{}"/></clipPath>"#,
            PANEL_PX / 2.0
        );
        let mut clip = format!("half-{n}");
        for (k, (center, radius)) in domain.slice_view(&panel.slice).disks().into_iter().enumerate() {
            if radius.is_infinite() {
                continue;
            }
            let (cx, cy) = to_px(center);
            let r = radius.value() * scale;
            let id = format!("disk-{n}-{k}");
            let _ = writeln!(
                svg,
                r#"<clipPath id="{id}" clip-path="url(#{clip})"><circle cx="{cx:.3}" cy="{cy:.3}" r="{r:.3}"/></clipPath>"#
            );
            let _ = writeln!(
                svg,
                r#"<circle cx="{cx:.3}" cy="{cy:.3}" r="{r:.3}" fill="none" stroke="gray" stroke-dasharray="3,3" clip-path="url(#half-{n})"/>"#
            );
            clip = id;
        }
        let _ = writeln!(
            svg,
            r#"<rect x="{left}" y="{MARGIN_PX}" width="{PANEL_PX}" height="{}" fill="steelblue" fill-opacity="0.5" clip-path="url(#{clip})"/>"#,
            PANEL_PX / 2.0
        );
        let _ =
            writeln!(svg, r#"<line x1="{left}" y1="{axis_y}" x2="{}" y2="{axis_y}" stroke="black"/>"#, left + PANEL_PX);
        let (cx, cy) = to_px(domain.center().z());
        let _ = writeln!(svg, r#"<circle cx="{cx:.3}" cy="{cy:.3}" r="2.5" fill="black"/>"#);
        let _ = writeln!(
            svg,
            r#"<text x="{}" y="{}" font-family="sans-serif" font-size="12" text-anchor="middle">{}: {}</text>"#,
            left + PANEL_PX / 2.0,
            axis_y + 16.0,
            panel.kind,
            xml_escape(&panel.slice.to_string())
        );
        let _ = writeln!(svg, "</g>");
    }
    svg.push_str("</svg>\n");
    svg
}

fn xml_escape(text: &str) -> String {
    text.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// The worked example: `a_ℓ = 3^{-ℓ} + (e4 + e15) 2^{-ℓ}` centred at `e1`.
pub fn example_domain() -> ConvergenceDomain {
    let seq = SeqSpec::geometric(&[(CDElement::e(0), 3.0), (CDElement::e(4) + CDElement::e(15), 2.0)])
        .expect("positive ratios");
    let p = WPoint::new(&CDElement::e(1)).expect("e1 is a slice unit");
    ConvergenceDomain::new(&p, &seq)
}
