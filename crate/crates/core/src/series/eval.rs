use std::fmt;

use serde::Serialize;

use super::{SeqSpec, PROJECTION_TOL};
use crate::algebra::{complex_embed, left_mult_matrix, CDElement, ComplexPoint, Matrix16, Vector16};
use crate::error::{Error, Result};
use crate::slice::WPoint;
use crate::zero::{kernel_of_left_mult, Subspace};

/// A term norm above this stops evaluation with [`Verdict::Diverged`].
const BLOWUP: f64 = 1e6;
/// Longest window of trailing terms inspected by the verdict.
const MAX_WINDOW: usize = 50;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Converged,
    Diverged,
    Undetermined,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Converged => "converged",
            Verdict::Diverged => "diverged",
            Verdict::Undetermined => "undetermined",
        })
    }
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct EvalOptions {
    pub max_terms: usize,
    pub tol: f64,
}

impl Default for EvalOptions {
    fn default() -> Self {
        Self { max_terms: 200, tol: 1e-8 }
    }
}

impl EvalOptions {
    pub fn evaluate(&self, q: &WPoint, p: &WPoint, seq: &SeqSpec) -> Result<EvalReport> {
        evaluate_series(q, p, seq, self.max_terms, self.tol)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct EvalReport {
    pub partial_sum: CDElement,
    /// Number of indices `ℓ` visited.
    pub terms_used: usize,
    pub verdict: Verdict,
    /// Largest term norm in the final window.
    pub tail_norm: f64,
}

/// `Ψ^J(m) x = Re m · x + Im m · J x`, stored as the pair `(x, J x)`.
struct Channel {
    base: ComplexPoint,
    x: Vector16,
    jx: Vector16,
}

impl Channel {
    fn new(base: ComplexPoint, j: &Matrix16, x: Vector16) -> Self {
        Self { base, jx: j * x, x }
    }

    fn weighted(&self, m: ComplexPoint) -> Vector16 {
        self.x * m.re + self.jx * m.im
    }

    fn is_silent(&self) -> bool {
        self.x.norm() == 0.0
    }
}

/// How `(q - p)^{*ℓ} c` is assembled from complex powers on the slice of `q`.
enum Geometry {
    /// `Ψ^I(base^ℓ) c`.
    Single { j: Matrix16, base: ComplexPoint },
    /// `Ψ^J(A^ℓ) u + Ψ^J(B^ℓ) v` with `u`, `v` built from the split of `c`
    /// along `ker(I_p - J)`.
    Split {
        j: Matrix16,
        a: ComplexPoint,
        b: ComplexPoint,
        kernel: Subspace,
        c_plus: Box<Matrix16>,
        c_minus: Box<Matrix16>,
    },
}

impl Geometry {
    fn new(q: &WPoint, p: &WPoint) -> Self {
        let (w, z) = (q.z(), p.z());
        let (axis, base) = if p.is_real() {
            (q.axis(), w - z)
        } else if q.is_real() || q.axis().approx_eq(p.axis()) {
            (p.axis(), w - z)
        } else if q.axis().approx_eq(&p.axis().neg()) {
            (p.axis(), w.conj() - z)
        } else {
            let j = left_mult_matrix(&q.axis().value());
            let product = j * left_mult_matrix(&p.axis().value());
            let half = Matrix16::identity() * 0.5;
            return Self::Split {
                j,
                a: w - z,
                b: w - z.conj(),
                kernel: kernel_of_left_mult(&(p.axis().value() - q.axis().value())),
                c_plus: Box::new(half - product * 0.5),
                c_minus: Box::new(half + product * 0.5),
            };
        };
        Self::Single { j: left_mult_matrix(&axis.value()), base }
    }

    fn channels(&self, c: &CDElement, scale: f64) -> Vec<Channel> {
        match self {
            Self::Single { j, base } => vec![Channel::new(base * scale, j, c.to_vector())],
            Self::Split { j, a, b, kernel, c_plus, c_minus } => {
                let size = c.norm();
                let mut eq = kernel.project(c);
                let mut perp = *c - eq;
                if perp.norm() <= PROJECTION_TOL * size {
                    (eq, perp) = (*c, CDElement::zero(4));
                } else if eq.norm() <= PROJECTION_TOL * size {
                    (eq, perp) = (CDElement::zero(4), *c);
                }
                let perp = perp.to_vector();
                let u = eq.to_vector() + **c_plus * perp;
                let v = **c_minus * perp;
                vec![Channel::new(a * scale, j, u), Channel::new(b * scale, j, v)]
            }
        }
    }

    fn bases(&self) -> Vec<ComplexPoint> {
        match self {
            Self::Single { base, .. } => vec![*base],
            Self::Split { a, b, .. } => vec![*a, *b],
        }
    }
}

/// Produces the monomials `(q - p)^{*ℓ} a_ℓ` in order of `ℓ`.
enum TermStream<'a> {
    Geometric { channels: Vec<Channel>, powers: Vec<ComplexPoint>, lacunary: bool },
    Table { geometry: Box<Geometry>, values: &'a [CDElement] },
}

impl<'a> TermStream<'a> {
    fn new(geometry: Geometry, seq: &'a SeqSpec) -> Self {
        match seq {
            SeqSpec::Table { values, .. } => Self::Table { geometry: Box::new(geometry), values },
            _ => {
                let channels: Vec<Channel> = seq
                    .groups()
                    .iter()
                    .flat_map(|g| geometry.channels(&g.coeff, 1.0 / g.ratio))
                    .filter(|ch| !ch.is_silent())
                    .collect();
                let powers = vec![ComplexPoint::new(1.0, 0.0); channels.len()];
                Self::Geometric { channels, powers, lacunary: matches!(seq, SeqSpec::Lacunary { .. }) }
            }
        }
    }

    /// Every monomial with `ℓ ≥ 1` vanishes.
    fn terminates(&self) -> bool {
        match self {
            Self::Geometric { channels, .. } => channels.iter().all(|ch| ch.base.norm() == 0.0),
            Self::Table { geometry, .. } => geometry.bases().iter().all(|b| b.norm() == 0.0),
        }
    }

    /// The monomial at `ℓ`, or `None` when `ℓ` is outside the support.
    fn next_term(&mut self, ell: usize) -> Option<Vector16> {
        match self {
            Self::Geometric { channels, powers, lacunary } => {
                let in_support = !*lacunary || ell.is_power_of_two();
                let term = in_support
                    .then(|| channels.iter().zip(powers.iter()).map(|(ch, m)| ch.weighted(*m)).sum::<Vector16>());
                for (m, ch) in powers.iter_mut().zip(channels.iter()) {
                    *m *= ch.base;
                }
                term
            }
            Self::Table { geometry, values } => values.get(ell).map(|c| {
                geometry.channels(c, 1.0).iter().map(|ch| ch.weighted(ch.base.powu(ell as u32))).sum::<Vector16>()
            }),
        }
    }
}

fn judge(norms: &[f64], sums: &[Vector16], tol: f64) -> (Verdict, f64) {
    let n = norms.len();
    if n == 0 {
        return (Verdict::Converged, 0.0);
    }
    let width = MAX_WINDOW.min((n / 2).max(1));
    let window = &norms[n - width..];
    let tail = window.iter().copied().fold(0.0, f64::max);
    let cauchy = (sums[n] - sums[n - width]).norm();
    let verdict = if window.iter().all(|&t| t < tol) && cauchy < tol {
        Verdict::Converged
    } else if window[width - 1] >= window[0] && window[width - 1] > 1.0 {
        Verdict::Diverged
    } else {
        Verdict::Undetermined
    };
    (verdict, tail)
}

/// Partial sums of `Σ_{ℓ < N} (q - p)^{*ℓ} a_ℓ` and a convergence verdict
/// drawn from the trailing support terms.
pub fn evaluate_series(q: &WPoint, p: &WPoint, seq: &SeqSpec, max_terms: usize, tol: f64) -> Result<EvalReport> {
    if max_terms == 0 {
        return Err(Error::InvalidArgument("max_terms must be at least 1".into()));
    }
    let mut stream = TermStream::new(Geometry::new(q, p), seq);
    if stream.terminates() {
        let sum = stream.next_term(0).unwrap_or_else(Vector16::zeros);
        return Ok(EvalReport {
            partial_sum: CDElement::from_vector(&sum),
            terms_used: 1,
            verdict: Verdict::Converged,
            tail_norm: 0.0,
        });
    }
    let mut norms = Vec::new();
    let mut sums = vec![Vector16::zeros()];
    for ell in 0..max_terms {
        let Some(term) = stream.next_term(ell) else { continue };
        let size = term.norm();
        let sum = sums[sums.len() - 1] + term;
        if size > BLOWUP || !size.is_finite() {
            return Ok(EvalReport {
                partial_sum: CDElement::from_vector(&sum),
                terms_used: ell + 1,
                verdict: Verdict::Diverged,
                tail_norm: size,
            });
        }
        norms.push(size);
        sums.push(sum);
    }
    let (verdict, tail_norm) = judge(&norms, &sums, tol);
    Ok(EvalReport {
        partial_sum: CDElement::from_vector(&sums[sums.len() - 1]),
        terms_used: max_terms,
        verdict,
        tail_norm,
    })
}

/// `Σ_{ℓ < N} C₊(Ψ^{I_p}((w - z)^ℓ) a_ℓ) + C₋(Ψ^{I_p}((w̄ - z)^ℓ) a_ℓ)` with
/// `C± = (Id ∓ L_{I_q} L_{I_p}) / 2`, summed term by term.
pub fn evaluate_series_by_operators(q: &WPoint, p: &WPoint, seq: &SeqSpec, terms: usize) -> CDElement {
    let (w, z) = (q.z(), p.z());
    let i_p = p.axis().value();
    let product = left_mult_matrix(&q.axis().value()) * left_mult_matrix(&i_p);
    let half = Matrix16::identity() * 0.5;
    let (c_plus, c_minus) = (half - product * 0.5, half + product * 0.5);
    let mut sum = Vector16::zeros();
    for ell in (0..terms).filter(|&ell| seq.in_support(ell)) {
        let a = seq.coefficient(ell);
        let plus = complex_embed((w - z).powu(ell as u32), &i_p) * a;
        let minus = complex_embed((w.conj() - z).powu(ell as u32), &i_p) * a;
        sum += c_plus * plus.to_vector() + c_minus * minus.to_vector();
    }
    CDElement::from_vector(&sum)
}

/// Smallest `N` with `scale · ρ^N / (1 - ρ) < tol`; `None` unless `0 ≤ ρ < 1`.
pub fn geometric_tail_terms(rho: f64, scale: f64, tol: f64) -> Option<usize> {
    if !(0.0..1.0).contains(&rho) || tol <= 0.0 {
        return None;
    }
    let bound = |n: usize| scale * rho.powi(n as i32) / (1.0 - rho);
    let mut n = if rho > 0.0 && bound(0) >= tol {
        ((tol * (1.0 - rho) / scale).ln() / rho.ln()).floor().max(0.0) as usize
    } else {
        0
    };
    while bound(n) >= tol {
        n += 1;
    }
    Some(n)
}
