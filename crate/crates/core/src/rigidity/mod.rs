//! First-order rigidity of a pyramid in standard position.
//!
//! With `A` and `B` pinned and the base held in `z = 0`, seven coordinates
//! remain free and seven edge lengths constrain them (`|AB|` is fixed by the
//! normalization). The Jacobian of the squared-length residuals is the
//! rigidity matrix; a trivial kernel means no first-order flex exists.

mod flex;
mod trace;

pub use flex::{flex_example, flex_example_lengths, flex_sample, FlexSample};
pub use trace::{flex_tangent, trace_family, Trace, TraceOptions, TraceStop};

use nalgebra::SMatrix;

use crate::error::RigidityError;
use crate::geom::{Edge, EdgeLengthSet, Realization};

pub type Matrix7 = SMatrix<f64, 7, 7>;

/// Edges constrained by the residual vector, in residual order.
pub const RESIDUAL_EDGES: [Edge; 7] = [
    Edge::DA,
    Edge::BC,
    Edge::CD,
    Edge::EA,
    Edge::EB,
    Edge::ED,
    Edge::EC,
];

pub const DEFAULT_RANK_TOL: f64 = 1e-8;

/// Largest residual accepted by [`rigidity_verdict`].
pub const REALIZATION_TOL: f64 = 1e-9;

/// Free coordinates `(x1, y1, x2, y2, x3, y3, z3)` of a standard-position
/// pyramid: `D = (x1, y1)`, `C = (x2, y2)`, `E = (x3, y3, z3)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoordVector(pub [f64; 7]);

impl CoordVector {
    pub fn x1(&self) -> f64 {
        self.0[0]
    }
    pub fn y1(&self) -> f64 {
        self.0[1]
    }
    pub fn x2(&self) -> f64 {
        self.0[2]
    }
    pub fn y2(&self) -> f64 {
        self.0[3]
    }
    pub fn x3(&self) -> f64 {
        self.0[4]
    }
    pub fn y3(&self) -> f64 {
        self.0[5]
    }
    pub fn z3(&self) -> f64 {
        self.0[6]
    }

    /// `[A, B, C, D, E]` as 3-vectors.
    pub fn vertices(&self) -> [[f64; 3]; 5] {
        let c = &self.0;
        [
            [0.0, 0.0, 0.0],
            [1.0, 0.0, 0.0],
            [c[2], c[3], 0.0],
            [c[0], c[1], 0.0],
            [c[4], c[5], c[6]],
        ]
    }

    /// Length of the base diagonal `AC`.
    pub fn diagonal_ac(&self) -> f64 {
        self.x2().hypot(self.y2())
    }

    pub fn to_realization(&self, scale: f64) -> Realization {
        Realization::from_coords(self.0, scale)
    }
}

impl From<&Realization> for CoordVector {
    fn from(r: &Realization) -> Self {
        Self(r.coords())
    }
}

/// Slot of a vertex coordinate in the [`CoordVector`], if it is free.
fn slot(vertex: usize, axis: usize) -> Option<usize> {
    match (vertex, axis) {
        (2, 0) => Some(2),
        (2, 1) => Some(3),
        (3, 0) => Some(0),
        (3, 1) => Some(1),
        (4, k) => Some(4 + k),
        _ => None,
    }
}

fn diff(v: &[[f64; 3]; 5], i: usize, j: usize) -> [f64; 3] {
    std::array::from_fn(|k| v[i][k] - v[j][k])
}

/// Squared length from `c` minus the squared target length, for each edge of
/// [`RESIDUAL_EDGES`]. Targets are taken relative to `|AB|`.
pub fn residuals(c: &CoordVector, lengths: &EdgeLengthSet) -> [f64; 7] {
    let targets = lengths.normalized().squared();
    let v = c.vertices();
    RESIDUAL_EDGES.map(|e| {
        let (i, j) = e.endpoints();
        let d = diff(&v, i, j);
        d.iter().map(|x| x * x).sum::<f64>() - targets[e.index()]
    })
}

pub fn max_abs(values: &[f64]) -> f64 {
    values.iter().fold(0.0, |m, x| m.max(x.abs()))
}

/// Rigidity matrix: partial derivatives of [`residuals`] with respect to the
/// seven free coordinates. Targets are constant, so no lengths are needed.
pub fn jacobian(c: &CoordVector) -> Matrix7 {
    let v = c.vertices();
    let mut m = Matrix7::zeros();
    for (row, e) in RESIDUAL_EDGES.iter().enumerate() {
        let (i, j) = e.endpoints();
        let d = diff(&v, i, j);
        for (axis, &dk) in d.iter().enumerate() {
            if let Some(col) = slot(i, axis) {
                m[(row, col)] += 2.0 * dk;
            }
            if let Some(col) = slot(j, axis) {
                m[(row, col)] -= 2.0 * dk;
            }
        }
    }
    m
}

#[derive(Debug, Clone, PartialEq)]
pub struct RankAnalysis {
    /// Descending.
    pub singular_values: [f64; 7],
    pub kernel_dim: usize,
    /// Right singular vectors as columns, matching `singular_values`.
    pub right_vectors: Matrix7,
}

impl RankAnalysis {
    /// Unit vectors spanning the numerical kernel.
    pub fn kernel(&self) -> impl Iterator<Item = [f64; 7]> + '_ {
        (7 - self.kernel_dim..7).map(|k| std::array::from_fn(|i| self.right_vectors[(i, k)]))
    }

    pub fn condition_ratio(&self) -> f64 {
        if self.singular_values[0] == 0.0 {
            0.0
        } else {
            self.singular_values[6] / self.singular_values[0]
        }
    }
}

/// Singular values of `j` and the number of them below `rank_tol` relative
/// to the largest.
pub fn rank_analysis(j: &Matrix7, rank_tol: f64) -> RankAnalysis {
    let svd = j.svd(false, true);
    let v_t = svd.v_t.expect("right singular vectors requested");
    let singular_values: [f64; 7] = std::array::from_fn(|i| svd.singular_values[i]);
    let largest = singular_values[0];
    let kernel_dim = if largest == 0.0 {
        7
    } else {
        singular_values
            .iter()
            .filter(|&&s| s / largest < rank_tol)
            .count()
    };
    RankAnalysis {
        singular_values,
        kernel_dim,
        right_vectors: v_t.transpose(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Rigid,
    InfinitesimallyFlexible,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Rigid => "rigid",
            Verdict::InfinitesimallyFlexible => "infinitesimally-flexible",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RigidityReport {
    pub residuals: [f64; 7],
    pub jacobian: Matrix7,
    pub singular_values: [f64; 7],
    pub kernel_dim: usize,
    pub verdict: Verdict,
}

pub fn verdict_at(
    c: &CoordVector,
    lengths: &EdgeLengthSet,
    rank_tol: f64,
) -> Result<RigidityReport, RigidityError> {
    let res = residuals(c, lengths);
    let max_residual = max_abs(&res);
    if max_residual.is_nan() || max_residual > REALIZATION_TOL {
        return Err(RigidityError::NotARealization { max_residual });
    }
    let jacobian = jacobian(c);
    let rank = rank_analysis(&jacobian, rank_tol);
    Ok(RigidityReport {
        residuals: res,
        jacobian,
        singular_values: rank.singular_values,
        kernel_dim: rank.kernel_dim,
        verdict: if rank.kernel_dim == 0 {
            Verdict::Rigid
        } else {
            Verdict::InfinitesimallyFlexible
        },
    })
}

/// Rigidity report of a realization of `lengths`.
pub fn rigidity_verdict(
    r: &Realization,
    lengths: &EdgeLengthSet,
    rank_tol: f64,
) -> Result<RigidityReport, RigidityError> {
    verdict_at(&CoordVector::from(r), lengths, rank_tol)
}
