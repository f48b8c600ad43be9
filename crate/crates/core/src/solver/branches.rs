//! The two solution families of the first-order deformation system of a
//! quadrangular pyramid, as explicit formulas.
//!
//! A pyramid can only deform with fixed edge lengths if its base lies on one
//! of them: either a parallelogram with the apex over its center, or the
//! non-convex family where `D` is a rational function of `C`.

use crate::error::SolverError;
use crate::geom::{BaseQuad, Point2, Point3, Realization};

/// Parallelogram base `A(0,0) B(1,0) C(a1+1, b1) D(a1, b1)` with the apex at
/// height `c3` over the center.
pub fn branch_parallelogram(a1: f64, b1: f64, c3: f64) -> Result<Realization, SolverError> {
    if b1.is_nan() || b1 <= 0.0 {
        return Err(SolverError::InvalidParameter("b1 must be positive"));
    }
    if c3.is_nan() || c3 <= 0.0 {
        return Err(SolverError::InvalidParameter("apex height must be positive"));
    }
    let base = BaseQuad::new(Point2::new(a1, b1), Point2::new(a1 + 1.0, b1));
    let apex = Point3::new((a1 + 1.0) / 2.0, b1 / 2.0, c3);
    Ok(Realization::new(base, apex, 1.0))
}

/// Vertex `D = (a1, b1)` of the non-convex family for `C = (a2, b2)`.
///
/// The result satisfies `a2 b1 - b2 a1 = -b2`: the turn from `AC` to `AD` is
/// clockwise whenever `b2 > 0`.
pub fn branch_nonconvex(a2: f64, b2: f64) -> Result<(f64, f64), SolverError> {
    if a2 == 0.0 && b2 == 0.0 {
        return Err(SolverError::OriginInput);
    }
    let norm = a2 * a2 + b2 * b2;
    let a1 = (a2 * a2 * a2 - a2 * a2 + a2 * b2 * b2 + b2 * b2) / norm;
    let b1 = b2 * (a2 * a2 - 2.0 * a2 + b2 * b2) / norm;
    Ok((a1, b1))
}

/// `|EB|^2` for a parallelogram with sides `p`, `q` and diagonal `|AC| = d1`,
/// apex over the center with `|EA| = l5`:
/// `l5^2 + (p^2 + q^2) / 2 - d1^2 / 2`. Strictly decreasing in `d1`.
pub fn parallelogram_eb2(p: f64, q: f64, l5: f64, d1: f64) -> Result<f64, SolverError> {
    if !(p > 0.0 && q > 0.0 && l5 > 0.0) {
        return Err(SolverError::InvalidParameter("sides and l5 must be positive"));
    }
    if !(d1 >= (p - q).abs() && d1 <= p + q) {
        return Err(SolverError::InvalidParameter("diagonal outside [|p - q|, p + q]"));
    }
    if l5 < d1 / 2.0 {
        return Err(SolverError::ApexImpossible {
            l5,
            half_diagonal: d1 / 2.0,
        });
    }
    Ok(l5 * l5 + (p * p + q * q) / 2.0 - d1 * d1 / 2.0)
}
