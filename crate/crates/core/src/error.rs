use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeomError {
    #[error("length #{index} must be positive and finite, got {value}")]
    InvalidLength { index: usize, value: f64 },
    #[error("vertices A and B coincide")]
    DegenerateEdge,
    #[error("base vertices are collinear; the base plane is undetermined")]
    CollinearBase,
    #[error("base is not planar: deviation {deviation:e}")]
    NonCoplanarBase { deviation: f64 },
    #[error("apex lies in the base plane (height {height:e})")]
    FlatPyramid { height: f64 },
    #[error("tolerance must be non-negative, got {0}")]
    NegativeTolerance(f64),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DofError {
    #[error("face vector has no faces")]
    Empty,
    #[error("face size {0} is below 3")]
    FaceTooSmall(u32),
    #[error("pinned face size {0} does not occur in the face vector")]
    PinnedFaceAbsent(u32),
    #[error("sum of i * n_i is odd; edge count is not an integer")]
    NonIntegralCount,
    #[error("derived vertex count {0} is below 4")]
    TooFewVertices(i64),
    #[error("malformed face vector: {0}")]
    Parse(String),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SolverError {
    #[error("circles about B and D do not meet (|BD| = {distance}, radii {r_b} and {r_d})")]
    CirclesDisjoint { distance: f64, r_b: f64, r_d: f64 },
    #[error("A, B and D are collinear; apex trilateration breaks down")]
    CollinearAbd,
    #[error("apex height is imaginary (z3^2 = {z3sq:e})")]
    NoRealApex { z3sq: f64 },
    #[error("input is the origin")]
    OriginInput,
    #[error("apex cannot reach the base vertices (l5 = {l5} < half diagonal {half_diagonal})")]
    ApexImpossible { l5: f64, half_diagonal: f64 },
    #[error("invalid parameter: {0}")]
    InvalidParameter(&'static str),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum RigidityError {
    #[error("coordinates do not realize the lengths (max |residual| = {max_residual:e})")]
    NotARealization { max_residual: f64 },
    #[error("rigidity matrix kernel has dimension {0}; no unique flex direction")]
    AmbiguousKernel(usize),
    #[error("pyramid admits no first-order flex; nothing to trace")]
    NotFlexible,
    #[error("y1^2 > 5: the flex family has no real point here")]
    DiscriminantNegative,
    #[error("apex height is imaginary (y3^2 = {y3sq} > 2)")]
    HeightImaginary { y3sq: f64 },
    #[error("division breakdown in the flex family (x1 = 1 or y3 = 0)")]
    DivisionBreakdown,
}
