use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use super::{phi, psi, Frame, SliceUnit};
use crate::algebra::{CDElement, OCT_DIM};

/// Seed used whenever the caller does not supply one.
pub const DEFAULT_SEED: u64 = 20_251_016;

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Gaussian sedenion; its direction is uniform on the unit sphere.
pub fn random_sedenion<R: Rng + ?Sized>(rng: &mut R) -> CDElement {
    CDElement::sedenion(std::array::from_fn(|_| rng.sample(StandardNormal)))
}

fn random_imaginary_octonion<R: Rng + ?Sized>(rng: &mut R) -> CDElement {
    let mut c = [0.0; OCT_DIM];
    for x in &mut c[1..] {
        *x = rng.sample(StandardNormal);
    }
    CDElement::octonion(c)
}

/// Uniform unit imaginary octonion.
pub fn random_unit_imaginary_octonion<R: Rng + ?Sized>(rng: &mut R) -> CDElement {
    loop {
        if let Some(u) = random_imaginary_octonion(rng).normalized(1e-6) {
            return u;
        }
    }
}

/// Unit imaginary octonion orthogonal to every element of `against` (assumed orthonormal).
fn random_orthogonal_unit<R: Rng + ?Sized>(rng: &mut R, against: &[CDElement]) -> CDElement {
    loop {
        let mut x = random_imaginary_octonion(rng);
        for a in against {
            x -= a.scale(a.inner(&x));
        }
        if let Some(u) = x.normalized(1e-3) {
            return u;
        }
    }
}

pub fn random_frame<R: Rng + ?Sized>(rng: &mut R) -> Frame {
    let i1 = random_unit_imaginary_octonion(rng);
    let i2 = random_orthogonal_unit(rng, &[i1]);
    Frame::new(&i1, &i2).expect("Gram-Schmidt output is orthonormal")
}

/// `ψ(α, θ, frame)` with `α ∈ [0, π]`, `θ ∈ [0, π)` uniform and a random frame.
pub fn random_slice_unit<R: Rng + ?Sized>(rng: &mut R) -> SliceUnit {
    let alpha = rng.random_range(0.0..=PI);
    let theta = rng.random_range(0.0..PI);
    psi(alpha, theta, &random_frame(rng)).expect("ψ maps valid frames to slice units")
}

/// Two slice units sharing `α` and the frame, with distinct angles.
///
/// Draws with `sin α < 0.01` or angles closer than `0.01` (mod π) are redrawn so
/// the polar coordinates of both members stay well conditioned.
pub fn random_hyper_pair<R: Rng + ?Sized>(rng: &mut R) -> (SliceUnit, SliceUnit) {
    loop {
        let alpha = rng.random_range(0.0..=PI);
        let t1 = rng.random_range(0.0..PI);
        let t2 = rng.random_range(0.0..PI);
        let gap = (t1 - t2).abs();
        if alpha.sin() < 0.01 || gap.min(PI - gap) < 0.01 {
            continue;
        }
        let frame = random_frame(rng);
        let j1 = psi(alpha, t1, &frame).expect("valid frame");
        let j2 = psi(alpha, t2, &frame).expect("valid frame");
        return (j1, j2);
    }
}

/// A random element of `ℋ(I)` through the `φ[I]` parametrization.
pub fn random_companion<R: Rng + ?Sized>(i: &SliceUnit, rng: &mut R) -> Option<SliceUnit> {
    if i.is_pole() {
        return None;
    }
    let kappa = random_orthogonal_unit(rng, &[i.jmath()]);
    loop {
        let vartheta = rng.random_range(0.0..PI);
        let gap = (vartheta - i.theta()).abs();
        if gap.min(PI - gap) > 1e-3 {
            return phi(i, &kappa, vartheta).ok();
        }
    }
}
