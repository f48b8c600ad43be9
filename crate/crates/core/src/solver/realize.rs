//! Enumeration of convex realizations of a full length set.

use std::f64::consts::PI;

use nalgebra::SVector;

use super::profile::{ec_profile, SweepLengths, SweepProblem, DEFAULT_GRID};
use super::search::{bisect, golden_section, Extremum};
use super::Branch;
use crate::geom::{congruent, BaseClass, CongruenceTolerance, Edge, EdgeLengthSet, Face, Realization};
use crate::rigidity::{jacobian, max_abs, residuals, CoordVector};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RealizeOptions {
    /// Grid points per admissible interval.
    pub grid: usize,
    /// Root bracket width in the base angle.
    pub alpha_tol: f64,
    /// Target for the largest squared-length residual after polishing.
    pub residual_tol: f64,
    /// Largest `| |EC|^2 - l7^2 |` at which a touching extremum counts as a root.
    pub tangency_tol: f64,
    pub congruence: CongruenceTolerance,
    /// Also admit roots on interval ends (collinear base triple or flat apex).
    pub include_degenerate: bool,
    pub max_newton_iters: usize,
}

impl Default for RealizeOptions {
    fn default() -> Self {
        Self {
            grid: DEFAULT_GRID,
            alpha_tol: 1e-13,
            residual_tol: 1e-12,
            tangency_tol: 1e-9,
            congruence: CongruenceTolerance::default(),
            include_degenerate: false,
            max_newton_iters: 50,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Solution {
    pub realization: Realization,
    /// Angle of the base at `A`.
    pub alpha: f64,
    /// Largest absolute squared-length residual, normalized units.
    pub residual_norm: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub enum EmptyReason {
    /// Some face violates its polygon inequality.
    FaceInequality(Vec<Face>),
    /// No base angle gives a convex base with a real apex.
    ProfileEmpty,
    /// Admissible angles exist but `|EC|` is never attained.
    NoRoot,
}

impl std::fmt::Display for EmptyReason {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            EmptyReason::FaceInequality(faces) => {
                let names: Vec<String> = faces.iter().map(Face::to_string).collect();
                write!(f, "face-inequality({})", names.join(","))
            }
            EmptyReason::ProfileEmpty => f.write_str("profile-empty"),
            EmptyReason::NoRoot => f.write_str("no-root"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Enumeration {
    pub lengths: EdgeLengthSet,
    /// Pairwise non-congruent, sorted by angle.
    pub solutions: Vec<Solution>,
    pub empty_reason: Option<EmptyReason>,
}

impl Enumeration {
    pub fn count(&self) -> usize {
        self.solutions.len()
    }

    pub fn realizations(&self) -> impl Iterator<Item = &Realization> + '_ {
        self.solutions.iter().map(|s| &s.realization)
    }
}

/// Candidate root angle and whether it sits on an interval end.
struct Root {
    alpha: f64,
    branch: Branch,
    boundary: bool,
}

fn roots_on_interval(
    problem: &SweepProblem,
    branch: Branch,
    (start, end): (f64, f64),
    target: f64,
    opts: &RealizeOptions,
) -> Vec<Root> {
    let f = |a: f64| problem.ec2(a, branch).map_or(f64::NAN, |v| v - target);
    let n = opts.grid.max(3);
    let step = (end - start) / (n - 1) as f64;
    let alphas: Vec<f64> = (0..n)
        .map(|i| if i == n - 1 { end } else { start + step * i as f64 })
        .collect();
    let values: Vec<f64> = alphas.iter().map(|&a| f(a)).collect();
    let mut roots = Vec::new();
    let mut push = |alpha: f64| {
        let boundary = alpha <= start || alpha >= end;
        roots.push(Root { alpha, branch, boundary });
    };

    for i in 0..n {
        if values[i] == 0.0 {
            push(alphas[i]);
        }
        if i + 1 < n && values[i] * values[i + 1] < 0.0 {
            push(bisect(f, alphas[i], alphas[i + 1], opts.alpha_tol));
        }
    }

    // Extrema without a sign change on the grid may still touch or cross zero
    // between grid points.
    for i in 1..n - 1 {
        let (a, b, c) = (values[i - 1], values[i], values[i + 1]);
        let same_sign = (a > 0.0 && b > 0.0 && c > 0.0) || (a < 0.0 && b < 0.0 && c < 0.0);
        if !same_sign || (b - a) * (c - b) > 0.0 {
            continue;
        }
        // towards zero: a minimum of a positive stretch, a maximum of a negative one
        let kind = if b > 0.0 { Extremum::Min } else { Extremum::Max };
        if (kind == Extremum::Min && b > a.min(c)) || (kind == Extremum::Max && b < a.max(c)) {
            continue;
        }
        let (x, fx) = golden_section(f, alphas[i - 1], alphas[i + 1], opts.alpha_tol, kind);
        if fx.abs() <= opts.tangency_tol {
            push(x);
        } else if fx.signum() != b.signum() {
            push(bisect(f, alphas[i - 1], x, opts.alpha_tol));
            push(bisect(f, x, alphas[i + 1], opts.alpha_tol));
        }
    }

    if opts.include_degenerate {
        for (alpha, value) in [(start, values[0]), (end, values[n - 1])] {
            if value != 0.0 && value.abs() <= opts.tangency_tol {
                push(alpha);
            }
        }
    }
    roots
}

/// Damped Gauss-Newton on the seven squared-length residuals.
fn polish(start: [f64; 7], lengths: &EdgeLengthSet, opts: &RealizeOptions) -> (CoordVector, f64) {
    let mut c = CoordVector(start);
    let mut norm = max_abs(&residuals(&c, lengths));
    for _ in 0..opts.max_newton_iters {
        if norm <= opts.residual_tol {
            break;
        }
        let r = residuals(&c, lengths);
        let rhs = SVector::<f64, 7>::from_fn(|i, _| -r[i]);
        let Ok(delta) = jacobian(&c).svd(true, true).solve(&rhs, 1e-13) else {
            break;
        };
        let mut damping = 1.0;
        let mut improved = false;
        for _ in 0..30 {
            let trial = CoordVector(std::array::from_fn(|i| c.0[i] + damping * delta[i]));
            let trial_norm = max_abs(&residuals(&trial, lengths));
            if trial_norm < norm {
                c = trial;
                norm = trial_norm;
                improved = true;
                break;
            }
            damping *= 0.5;
        }
        if !improved {
            break;
        }
    }
    (c, norm)
}

/// All pairwise non-congruent convex realizations of `lengths`.
///
/// Sweeps the base angle at `A`, brackets the roots of
/// `|EC|^2(alpha) - |EC|^2` on every admissible interval, and polishes each
/// root on the full seven-equation system.
pub fn find_realizations(lengths: &EdgeLengthSet, opts: &RealizeOptions) -> Enumeration {
    let empty = |reason| Enumeration {
        lengths: *lengths,
        solutions: Vec::new(),
        empty_reason: Some(reason),
    };
    let violations = lengths.face_violations();
    if !violations.is_empty() {
        return empty(EmptyReason::FaceInequality(violations));
    }

    let profile = ec_profile(SweepLengths::from(lengths), (0.0, PI), opts.grid);
    if profile.intervals.is_empty() {
        return empty(EmptyReason::ProfileEmpty);
    }
    let problem = profile.problem;
    let target = lengths.normalized().get(Edge::EC).powi(2);

    let mut roots = Vec::new();
    for iv in &profile.intervals {
        roots.extend(roots_on_interval(&problem, iv.branch, (iv.start, iv.end), target, opts));
    }
    roots.sort_by(|a, b| a.alpha.total_cmp(&b.alpha));

    let mut solutions: Vec<Solution> = Vec::new();
    for root in roots {
        if root.boundary && !opts.include_degenerate {
            continue;
        }
        let Some(state) = problem.state(root.alpha, root.branch) else {
            continue;
        };
        let (coords, residual_norm) = polish(state.coords(), lengths, opts);
        let realization = coords.to_realization(problem.scale());
        let acceptable_class = match realization.base_class {
            BaseClass::ConvexCcw => true,
            BaseClass::Degenerate => opts.include_degenerate,
            _ => false,
        };
        let acceptable_height = realization.apex.z > 0.0 || (opts.include_degenerate && realization.apex.z >= 0.0);
        if !(acceptable_class && acceptable_height) {
            continue;
        }
        if solutions
            .iter()
            .any(|s| congruent(&s.realization, &realization, opts.congruence))
        {
            continue;
        }
        solutions.push(Solution {
            realization,
            alpha: realization.alpha(),
            residual_norm,
        });
    }
    solutions.sort_by(|a, b| a.alpha.total_cmp(&b.alpha));

    let empty_reason = solutions.is_empty().then_some(EmptyReason::NoRoot);
    Enumeration {
        lengths: *lengths,
        solutions,
        empty_reason,
    }
}
