//! Predictor-corrector continuation along a one-parameter flex.

use nalgebra::{SMatrix, SVector};

use super::{jacobian, max_abs, rank_analysis, residuals, CoordVector, DEFAULT_RANK_TOL};
use crate::error::RigidityError;
use crate::geom::EdgeLengthSet;

/// Largest start residual accepted by [`trace_family`].
const START_TOL: f64 = 1e-10;
const MAX_CORRECTOR_ITERS: usize = 25;

/// Unit kernel vector of the rigidity matrix at `c`, or `None` when the
/// kernel is trivial. The sign is fixed by making the largest component
/// positive.
pub fn flex_tangent(c: &CoordVector, rank_tol: f64) -> Result<Option<[f64; 7]>, RigidityError> {
    let ra = rank_analysis(&jacobian(c), rank_tol);
    match ra.kernel_dim {
        0 => Ok(None),
        1 => {
            let t = ra.kernel().next().expect("one kernel vector");
            Ok(Some(orient(t)))
        }
        k => Err(RigidityError::AmbiguousKernel(k)),
    }
}

fn orient(t: [f64; 7]) -> [f64; 7] {
    let lead = t
        .iter()
        .copied()
        .fold(0.0f64, |m, x| if x.abs() > m.abs() { x } else { m });
    if lead < 0.0 {
        t.map(|x| -x)
    } else {
        t
    }
}

fn dot(a: &[f64; 7], b: &[f64; 7]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TraceOptions {
    pub steps: usize,
    /// Nominal arc-length step, normalized units.
    pub step: f64,
    pub min_step: f64,
    /// `+1.0` follows the oriented tangent, `-1.0` goes the other way.
    pub direction: f64,
    pub rank_tol: f64,
    /// Corrector target for the largest squared-length residual.
    pub residual_tol: f64,
}

impl Default for TraceOptions {
    fn default() -> Self {
        Self {
            steps: 40,
            step: 0.01,
            min_step: 1e-5,
            direction: 1.0,
            rank_tol: DEFAULT_RANK_TOL,
            residual_tol: 1e-11,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TraceStop {
    Completed,
    /// The kernel stopped being one-dimensional or the apex reached the base
    /// plane: the end of the family.
    KernelCollapse { kernel_dim: usize, z3: f64 },
    /// The corrector failed even at the minimal step.
    CorrectionDiverged { step: f64 },
}

#[derive(Debug, Clone, PartialEq)]
pub struct Trace {
    /// Start point followed by every accepted step.
    pub points: Vec<CoordVector>,
    pub stop: TraceStop,
}

impl Trace {
    pub fn accepted_steps(&self) -> usize {
        self.points.len().saturating_sub(1)
    }
}

/// Newton on the residuals plus the hyperplane through `predicted`
/// orthogonal to `tangent`.
fn correct(
    predicted: &CoordVector,
    tangent: &[f64; 7],
    lengths: &EdgeLengthSet,
    tol: f64,
) -> Option<CoordVector> {
    let mut c = *predicted;
    for _ in 0..MAX_CORRECTOR_ITERS {
        let r = residuals(&c, lengths);
        let offset: [f64; 7] = std::array::from_fn(|i| c.0[i] - predicted.0[i]);
        let plane = dot(tangent, &offset);
        if max_abs(&r) <= tol && plane.abs() <= tol {
            return Some(c);
        }
        let j = jacobian(&c);
        let a = SMatrix::<f64, 8, 7>::from_fn(|i, k| if i < 7 { j[(i, k)] } else { tangent[k] });
        let rhs = SVector::<f64, 8>::from_fn(|i, _| if i < 7 { -r[i] } else { -plane });
        let delta = a.svd(true, true).solve(&rhs, 1e-14).ok()?;
        for (x, d) in c.0.iter_mut().zip(delta.iter()) {
            *x += d;
        }
        if c.0.iter().any(|x| !x.is_finite()) {
            return None;
        }
    }
    let r = residuals(&c, lengths);
    (max_abs(&r) <= tol).then_some(c)
}

/// Follows the flex through `start` for up to `opts.steps` accepted steps.
///
/// Fails up front when `start` does not realize `lengths` or has no unique
/// flex direction. Early termination is reported in [`Trace::stop`] together
/// with the points accepted so far.
pub fn trace_family(
    start: &CoordVector,
    lengths: &EdgeLengthSet,
    opts: &TraceOptions,
) -> Result<Trace, RigidityError> {
    let max_residual = max_abs(&residuals(start, lengths));
    if max_residual.is_nan() || max_residual > START_TOL {
        return Err(RigidityError::NotARealization { max_residual });
    }
    let mut tangent = flex_tangent(start, opts.rank_tol)?
        .ok_or(RigidityError::NotFlexible)?
        .map(|x| x * opts.direction.signum());

    let mut points = vec![*start];
    let mut current = *start;
    let mut h = opts.step;
    while points.len() <= opts.steps {
        let predicted = CoordVector(std::array::from_fn(|i| current.0[i] + h * tangent[i]));
        let corrected = correct(&predicted, &tangent, lengths, opts.residual_tol)
            .filter(|c| {
                let moved: f64 = (0..7).map(|i| (c.0[i] - current.0[i]).powi(2)).sum();
                moved.sqrt() <= 2.0 * h
            });
        let Some(next) = corrected else {
            h *= 0.5;
            if h < opts.min_step {
                return Ok(Trace {
                    points,
                    stop: TraceStop::CorrectionDiverged { step: h },
                });
            }
            continue;
        };

        let ra = rank_analysis(&jacobian(&next), opts.rank_tol);
        if ra.kernel_dim != 1 || next.z3() <= 0.0 {
            return Ok(Trace {
                points,
                stop: TraceStop::KernelCollapse {
                    kernel_dim: ra.kernel_dim,
                    z3: next.z3(),
                },
            });
        }
        let fresh = ra.kernel().next().expect("one kernel vector");
        tangent = if dot(&fresh, &tangent) < 0.0 {
            fresh.map(|x| -x)
        } else {
            fresh
        };
        current = next;
        points.push(next);
        h = (2.0 * h).min(opts.step);
    }
    Ok(Trace {
        points,
        stop: TraceStop::Completed,
    })
}
