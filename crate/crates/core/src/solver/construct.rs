//! Base from the angle at `A`, apex by trilateration.
//!
//! All lengths here are in normalized units (`|AB| = 1`).

use std::fmt;

use crate::error::SolverError;
use crate::geom::{classify_base, BaseClass, BaseQuad, Point2, Point3, DEFAULT_ORIENTATION_EPS};

/// Which intersection of the circles about `B` and `D` is taken as `C`.
///
/// `Outer` lies on the opposite side of the diagonal `BD` from `A`, which
/// a convex base requires; `Inner` lies on the same side.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Branch {
    Outer,
    Inner,
}

impl Branch {
    pub const BOTH: [Branch; 2] = [Branch::Outer, Branch::Inner];

    pub fn index(self) -> u8 {
        match self {
            Branch::Outer => 0,
            Branch::Inner => 1,
        }
    }
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Branch::Outer => "outer",
            Branch::Inner => "inner",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BaseCandidate {
    pub branch: Branch,
    pub quad: BaseQuad,
    pub class: BaseClass,
}

/// Vertex `D` at angle `alpha` from `AB`.
pub(crate) fn vertex_d(l4: f64, alpha: f64) -> Point2 {
    Point2::new(l4 * alpha.cos(), l4 * alpha.sin())
}

/// Relative slack on the squared half chord treated as tangency.
const TANGENCY_SLACK: f64 = 1e-14;

/// Intersection half-chord of the two circles, or the reason there is none.
/// Returns `(foot, unit BD, half chord)`.
fn chord(l2: f64, l3: f64, d: Point2) -> Result<(Point2, nalgebra::Vector2<f64>, f64), SolverError> {
    let b = Point2::new(1.0, 0.0);
    let bd = d - b;
    let dist = bd.norm();
    let disjoint = SolverError::CirclesDisjoint {
        distance: dist,
        r_b: l2,
        r_d: l3,
    };
    if dist == 0.0 {
        return Err(disjoint);
    }
    let u = bd / dist;
    let along = (l2 * l2 - l3 * l3 + dist * dist) / (2.0 * dist);
    let h2 = l2 * l2 - along * along;
    // Rounding can push a tangency slightly negative.
    if h2 < -TANGENCY_SLACK * l2 * l2 {
        return Err(disjoint);
    }
    Ok((b + u * along, u, h2.max(0.0).sqrt()))
}

/// Vertex `C` on the requested branch. Both branches coincide at tangency.
pub(crate) fn vertex_c(l2: f64, l3: f64, d: Point2, branch: Branch) -> Result<Point2, SolverError> {
    let (foot, u, h) = chord(l2, l3, d)?;
    // counter-clockwise normal of BD; A lies on this side
    let normal = nalgebra::Vector2::new(-u.y, u.x);
    Ok(match branch {
        Branch::Outer => foot - normal * h,
        Branch::Inner => foot + normal * h,
    })
}

/// Both bases with `|BC| = l2`, `|CD| = l3`, `|DA| = l4` and angle `alpha` at
/// `A`; one entry when the circles are tangent.
pub fn base_from_angle(l2: f64, l3: f64, l4: f64, alpha: f64) -> Result<Vec<BaseCandidate>, SolverError> {
    let d = vertex_d(l4, alpha);
    let (_, _, h) = chord(l2, l3, d)?;
    // same window as the negative slack accepted in `chord`
    let tangent = h * h <= TANGENCY_SLACK * l2 * l2;
    let branches: &[Branch] = if tangent { &[Branch::Outer] } else { &Branch::BOTH };
    branches
        .iter()
        .map(|&branch| {
            let quad = BaseQuad::new(d, vertex_c(l2, l3, d, branch)?);
            Ok(BaseCandidate {
                branch,
                quad,
                class: classify_base(&quad, DEFAULT_ORIENTATION_EPS),
            })
        })
        .collect()
}

/// Apex coordinates `(x3, y3, z3^2)` from squared distances to `A`, `B`, `D`.
/// `z3^2` may be negative.
pub(crate) fn apex_coordinates(sq5: f64, sq6: f64, sq8: f64, d: Point2) -> Result<(f64, f64, f64), SolverError> {
    if d.y.abs() <= f64::EPSILON * (1.0 + d.x.abs()) {
        return Err(SolverError::CollinearAbd);
    }
    let x3 = (1.0 + (sq5 - sq6)) / 2.0;
    let y3 = (sq5 + d.coords.norm_squared() - sq8 - 2.0 * d.x * x3) / (2.0 * d.y);
    Ok((x3, y3, sq5 - x3 * x3 - y3 * y3))
}

/// Apex above the base plane at distances `l5`, `l6`, `l8` from `A`, `B`, `D`.
pub fn apex_from_three(l5: f64, l6: f64, l8: f64, quad: &BaseQuad) -> Result<Point3, SolverError> {
    let (x3, y3, z3sq) = apex_coordinates(l5 * l5, l6 * l6, l8 * l8, quad.d)?;
    if z3sq < 0.0 {
        return Err(SolverError::NoRealApex { z3sq });
    }
    Ok(Point3::new(x3, y3, z3sq.sqrt()))
}
