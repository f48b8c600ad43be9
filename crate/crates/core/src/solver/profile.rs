//! `|EC|^2` as a function of the base angle at `A`.
//!
//! Fixing every length except `|EC|` leaves a one-parameter family: the angle
//! `alpha` at `A` places `D`, the circles about `B` and `D` place `C` (two
//! branches), and the spheres about `A`, `B`, `D` place the apex. Realizations
//! of a full length set are the roots of `|EC|^2(alpha) - l7^2`.

use std::f64::consts::PI;

use super::construct::{apex_coordinates, vertex_c, vertex_d, Branch};
use super::search::{bisect_boundary, golden_section, Extremum};
use crate::geom::{classify_base, BaseClass, BaseQuad, Edge, EdgeLengthSet, DEFAULT_ORIENTATION_EPS};

pub const DEFAULT_GRID: usize = 8192;

/// Width to which admissible-interval endpoints are located.
pub const ENDPOINT_TOL: f64 = 1e-12;

/// Extremum location tolerance.
pub const CRITICAL_TOL: f64 = 1e-10;

/// Seven lengths `|AB|, |BC|, |CD|, |DA|, |EA|, |EB|, |ED|`: everything but `|EC|`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepLengths([f64; 7]);

impl SweepLengths {
    pub fn new(lengths: [f64; 7]) -> Result<Self, crate::error::GeomError> {
        let [ab, bc, cd, da, ea, eb, ed] = lengths;
        // validate through the full set with a placeholder EC
        EdgeLengthSet::new([ab, bc, cd, da, ea, eb, 1.0, ed])?;
        Ok(Self(lengths))
    }

    pub fn as_array(&self) -> [f64; 7] {
        self.0
    }
}

impl From<&EdgeLengthSet> for SweepLengths {
    fn from(l: &EdgeLengthSet) -> Self {
        Self([
            l.get(Edge::AB),
            l.get(Edge::BC),
            l.get(Edge::CD),
            l.get(Edge::DA),
            l.get(Edge::EA),
            l.get(Edge::EB),
            l.get(Edge::ED),
        ])
    }
}

/// A pyramid on the sweep, `z3^2` possibly negative.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepState {
    pub base: BaseQuad,
    pub x3: f64,
    pub y3: f64,
    pub z3sq: f64,
}

impl SweepState {
    /// `|EC|^2` continued analytically through `z3^2 < 0`.
    pub fn ec2(&self) -> f64 {
        let c = self.base.c;
        (self.x3 - c.x).powi(2) + (self.y3 - c.y).powi(2) + self.z3sq
    }

    /// `(x1, y1, x2, y2, x3, y3, z3)` with `z3` clamped at zero.
    pub fn coords(&self) -> [f64; 7] {
        [
            self.base.d.x,
            self.base.d.y,
            self.base.c.x,
            self.base.c.y,
            self.x3,
            self.y3,
            self.z3sq.max(0.0).sqrt(),
        ]
    }
}

/// Normalized sweep data.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepProblem {
    lengths: SweepLengths,
    l2: f64,
    l3: f64,
    l4: f64,
    sq5: f64,
    sq6: f64,
    sq8: f64,
}

impl SweepProblem {
    pub fn new(lengths: SweepLengths) -> Self {
        let [ab, bc, cd, da, ea, eb, ed] = lengths.0.map(|l| l / lengths.0[0]);
        debug_assert_eq!(ab, 1.0);
        Self {
            lengths,
            l2: bc,
            l3: cd,
            l4: da,
            sq5: ea * ea,
            sq6: eb * eb,
            sq8: ed * ed,
        }
    }

    pub fn lengths(&self) -> SweepLengths {
        self.lengths
    }

    /// Scale applied to reach normalized units.
    pub fn scale(&self) -> f64 {
        1.0 / self.lengths.0[0]
    }

    pub fn state(&self, alpha: f64, branch: Branch) -> Option<SweepState> {
        let d = vertex_d(self.l4, alpha);
        let c = vertex_c(self.l2, self.l3, d, branch).ok()?;
        let (x3, y3, z3sq) = apex_coordinates(self.sq5, self.sq6, self.sq8, d).ok()?;
        Some(SweepState {
            base: BaseQuad::new(d, c),
            x3,
            y3,
            z3sq,
        })
    }

    pub fn sample(&self, alpha: f64, branch: Branch) -> Option<SweepSample> {
        let s = self.state(alpha, branch)?;
        let base_class = classify_base(&s.base, DEFAULT_ORIENTATION_EPS);
        let admissible = base_class == BaseClass::ConvexCcw && s.z3sq > 0.0;
        Some(SweepSample {
            alpha,
            branch,
            ec2: (s.z3sq >= 0.0).then(|| s.ec2()),
            z3sq: s.z3sq,
            base_class,
            admissible,
        })
    }

    pub fn admissible(&self, alpha: f64, branch: Branch) -> bool {
        self.sample(alpha, branch).is_some_and(|s| s.admissible)
    }

    /// Analytic `|EC|^2`, defined wherever the base closes.
    pub fn ec2(&self, alpha: f64, branch: Branch) -> Option<f64> {
        self.state(alpha, branch).map(|s| s.ec2())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepSample {
    pub alpha: f64,
    pub branch: Branch,
    /// `None` when the apex height is imaginary.
    pub ec2: Option<f64>,
    pub z3sq: f64,
    pub base_class: BaseClass,
    pub admissible: bool,
}

/// Maximal angle range on one branch where the base is convex and the apex
/// lies strictly above it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AdmissibleInterval {
    pub branch: Branch,
    pub start: f64,
    pub end: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepProfile {
    pub problem: SweepProblem,
    pub range: (f64, f64),
    /// Ordered by angle, then branch.
    pub samples: Vec<SweepSample>,
    pub intervals: Vec<AdmissibleInterval>,
}

impl SweepProfile {
    pub fn branch_samples(&self, branch: Branch) -> impl Iterator<Item = &SweepSample> + '_ {
        self.samples.iter().filter(move |s| s.branch == branch)
    }
}

/// Grid of `n` cell midpoints over `range`; always inside the open range.
pub fn grid(range: (f64, f64), n: usize) -> impl Iterator<Item = f64> {
    let (lo, hi) = range;
    let step = (hi - lo) / n as f64;
    (0..n).map(move |i| lo + step * (i as f64 + 0.5))
}

/// Samples `|EC|^2` on `n` angles in `range` (clamped to `(0, pi)`) on both
/// branches and extracts the admissible intervals, with endpoints located
/// to [`ENDPOINT_TOL`].
pub fn ec_profile(lengths: SweepLengths, range: (f64, f64), n: usize) -> SweepProfile {
    let problem = SweepProblem::new(lengths);
    let range = (range.0.max(0.0), range.1.min(PI));
    let mut samples = Vec::new();
    if range.1 > range.0 {
        for alpha in grid(range, n.max(1)) {
            samples.extend(Branch::BOTH.iter().filter_map(|&b| problem.sample(alpha, b)));
        }
    }

    let mut intervals = Vec::new();
    for branch in Branch::BOTH {
        let runs = admissible_runs(&samples, branch, range);
        for (outside_left, first, last, outside_right) in runs {
            let start = bisect_boundary(|a| problem.admissible(a, branch), first, outside_left, ENDPOINT_TOL);
            let end = bisect_boundary(|a| problem.admissible(a, branch), last, outside_right, ENDPOINT_TOL);
            intervals.push(AdmissibleInterval { branch, start, end });
        }
    }
    intervals.sort_by(|a, b| a.start.total_cmp(&b.start));

    SweepProfile {
        problem,
        range,
        samples,
        intervals,
    }
}

/// Runs of consecutive admissible grid angles on one branch, as
/// `(last angle outside, first inside, last inside, first angle outside)`.
/// The range ends stand in for missing outside neighbours.
fn admissible_runs(samples: &[SweepSample], branch: Branch, range: (f64, f64)) -> Vec<(f64, f64, f64, f64)> {
    let mut runs = Vec::new();
    let mut previous_outside = range.0;
    let mut open: Option<(f64, f64, f64)> = None;
    let mut alphas: Vec<(f64, bool)> = Vec::new();
    for s in samples {
        match alphas.last() {
            Some(&(a, _)) if a == s.alpha => {}
            _ => alphas.push((s.alpha, false)),
        }
        if s.branch == branch && s.admissible {
            alphas.last_mut().expect("pushed").1 = true;
        }
    }
    for (alpha, inside) in alphas {
        match (inside, open) {
            (true, None) => open = Some((previous_outside, alpha, alpha)),
            (true, Some((o, f, _))) => open = Some((o, f, alpha)),
            (false, Some((o, f, l))) => {
                runs.push((o, f, l, alpha));
                open = None;
                previous_outside = alpha;
            }
            (false, None) => previous_outside = alpha,
        }
    }
    if let Some((o, f, l)) = open {
        runs.push((o, f, l, range.1));
    }
    runs
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CriticalKind {
    LocalMin,
    LocalMax,
    LeftEndpoint,
    RightEndpoint,
}

impl std::fmt::Display for CriticalKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            CriticalKind::LocalMin => "local-min",
            CriticalKind::LocalMax => "local-max",
            CriticalKind::LeftEndpoint => "left-endpoint",
            CriticalKind::RightEndpoint => "right-endpoint",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CriticalPoint {
    pub branch: Branch,
    pub alpha: f64,
    pub value: f64,
    pub kind: CriticalKind,
}

/// Interval endpoints and interior extrema of `|EC|^2` on every admissible
/// interval, in angle order within each interval.
pub fn critical_points(profile: &SweepProfile) -> Vec<CriticalPoint> {
    let problem = &profile.problem;
    let mut out = Vec::new();
    for iv in &profile.intervals {
        let f = |a: f64| problem.ec2(a, iv.branch).unwrap_or(f64::NAN);
        let mut pts: Vec<(f64, f64)> = vec![(iv.start, f(iv.start))];
        pts.extend(
            profile
                .branch_samples(iv.branch)
                .filter(|s| s.alpha > iv.start && s.alpha < iv.end)
                .map(|s| (s.alpha, f(s.alpha))),
        );
        pts.push((iv.end, f(iv.end)));

        out.push(CriticalPoint {
            branch: iv.branch,
            alpha: iv.start,
            value: pts[0].1,
            kind: CriticalKind::LeftEndpoint,
        });
        for w in pts.windows(3) {
            let (d1, d2) = (w[1].1 - w[0].1, w[2].1 - w[1].1);
            let kind = if d1 > 0.0 && d2 <= 0.0 {
                CriticalKind::LocalMax
            } else if d1 < 0.0 && d2 >= 0.0 {
                CriticalKind::LocalMin
            } else {
                continue;
            };
            let extremum = if kind == CriticalKind::LocalMax { Extremum::Max } else { Extremum::Min };
            let (alpha, value) = golden_section(f, w[0].0, w[2].0, CRITICAL_TOL, extremum);
            out.push(CriticalPoint {
                branch: iv.branch,
                alpha,
                value,
                kind,
            });
        }
        out.push(CriticalPoint {
            branch: iv.branch,
            alpha: iv.end,
            value: pts[pts.len() - 1].1,
            kind: CriticalKind::RightEndpoint,
        });
    }
    out
}
