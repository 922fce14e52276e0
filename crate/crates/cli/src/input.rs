use std::path::Path;

use sedenion_core::algebra::parse_sedenion;
use sedenion_core::figure::example_domain;
use sedenion_core::series::SeqSpec;
use sedenion_core::slice::{psi, Frame, SliceUnit, WPoint};
use sedenion_core::CDElement;

use crate::Failure;

pub fn element(text: &str) -> Result<CDElement, Failure> {
    parse_sedenion(text).map_err(|e| Failure::Usage(format!("cannot parse '{text}': {e}")))
}

pub fn slice_unit(text: &str) -> Result<SliceUnit, Failure> {
    Ok(SliceUnit::new(&element(text)?)?)
}

/// An orthonormal frame written as `i1,i2`.
pub fn frame(text: &str) -> Result<Frame, Failure> {
    let (i1, i2) = text
        .split_once(',')
        .ok_or_else(|| Failure::Usage(format!("frame '{text}' must be two elements separated by a comma")))?;
    Ok(Frame::new(&element(i1)?, &element(i2)?)?)
}

pub fn polar_unit(alpha: f64, theta: f64, frame_text: &str) -> Result<SliceUnit, Failure> {
    Ok(psi(alpha, theta, &frame(frame_text)?)?)
}

pub fn point(text: &str) -> Result<WPoint, Failure> {
    Ok(WPoint::new(&element(text)?)?)
}

/// `example`, inline JSON, or a path to a JSON file.
pub fn sequence(source: &str) -> Result<SeqSpec, Failure> {
    let text = match source.trim() {
        "example" => return Ok(example_domain().sequence().clone()),
        s if s.starts_with('{') => s.to_owned(),
        path => std::fs::read_to_string(Path::new(path))
            .map_err(|e| Failure::Usage(format!("cannot read sequence file '{path}': {e}")))?,
    };
    Ok(SeqSpec::from_json(&text)?)
}
