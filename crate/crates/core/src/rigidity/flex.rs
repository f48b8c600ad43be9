//! Closed-form flex of the crossed pyramid
//! `A = (0,0)`, `B = (1,0)`, `C = (2,2)`, `D = (2,1)`, `E = (1,1,1)`.
//!
//! Keeping its eight edge lengths fixed, the remaining coordinates are all
//! functions of `y1`:
//!
//! ```text
//! x3 = 1,   y1^2 y3^2 - 6 y1 y3 + y1^2 + 4 = 0,   x1 + y1 y3 = 3,
//! y2 y3 = 2,   x1 x2 + y1 y2 - x2 = 4,   y3^2 + z3^2 = 2
//! ```

use crate::error::RigidityError;
use crate::geom::EdgeLengthSet;

const BREAKDOWN_TOL: f64 = 1e-12;

/// `(x1, y1, x2, y2, x3, y3, z3)` of the crossed pyramid.
pub fn flex_example() -> [f64; 7] {
    [2.0, 1.0, 2.0, 2.0, 1.0, 1.0, 1.0]
}

/// Its edge lengths: squares `(1, 5, 1, 5, 3, 2, 3, 2)` in storage order.
pub fn flex_example_lengths() -> EdgeLengthSet {
    EdgeLengthSet::new([1.0, 5.0, 1.0, 5.0, 3.0, 2.0, 3.0, 2.0].map(f64::sqrt))
        .expect("positive")
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FlexSample {
    pub x1: f64,
    pub y1: f64,
    pub x2: f64,
    pub y2: f64,
    pub x3: f64,
    pub y3: f64,
    pub z3: f64,
}

impl FlexSample {
    pub fn coords(&self) -> [f64; 7] {
        [self.x1, self.y1, self.x2, self.y2, self.x3, self.y3, self.z3]
    }
}

/// Point of the family with the given `y1`, on the branch through `y1 = 1`.
pub fn flex_sample(y1: f64) -> Result<FlexSample, RigidityError> {
    let disc = 5.0 - y1 * y1;
    if disc < 0.0 {
        return Err(RigidityError::DiscriminantNegative);
    }
    if y1.abs() < BREAKDOWN_TOL {
        return Err(RigidityError::DivisionBreakdown);
    }
    // y1 y3 solves t^2 - 6t + y1^2 + 4 = 0; the smaller root passes through (1, 1).
    let t = 3.0 - disc.sqrt();
    let y3 = t / y1;
    let y3sq = y3 * y3;
    if y3sq > 2.0 {
        return Err(RigidityError::HeightImaginary { y3sq });
    }
    let x1 = 3.0 - t;
    if y3.abs() < BREAKDOWN_TOL || (x1 - 1.0).abs() < BREAKDOWN_TOL {
        return Err(RigidityError::DivisionBreakdown);
    }
    let y2 = 2.0 / y3;
    let x2 = (4.0 - y1 * y2) / (x1 - 1.0);
    Ok(FlexSample {
        x1,
        y1,
        x2,
        y2,
        x3: 1.0,
        y3,
        z3: (2.0 - y3sq).sqrt(),
    })
}
