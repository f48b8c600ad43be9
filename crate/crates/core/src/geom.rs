//! Labelled quadrangular pyramids in standard position.
//!
//! A pyramid `ABCDE` has the base `ABCD` (in cyclic order) and apex `E`.
//! Standard position puts `A` at the origin, `B` at `(1, 0, 0)`, the base in
//! the plane `z = 0` on the `y >= 0` side and the apex above it. Every
//! congruence class (reflections included) has exactly one representative in
//! standard position, so congruence reduces to comparing seven coordinates.

use std::fmt;

use nalgebra::Vector3;

use crate::error::GeomError;

pub type Point2 = nalgebra::Point2<f64>;
pub type Point3 = nalgebra::Point3<f64>;

/// Default threshold for orientation tests, in normalized units.
pub const DEFAULT_ORIENTATION_EPS: f64 = 1e-10;

/// Default congruence threshold, in normalized units.
pub const DEFAULT_CONGRUENCE_TOL: f64 = 1e-7;

/// The eight edges of a labelled pyramid, in the fixed storage order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Edge {
    AB,
    BC,
    CD,
    DA,
    EA,
    EB,
    EC,
    ED,
}

impl Edge {
    pub const ALL: [Edge; 8] = [
        Edge::AB,
        Edge::BC,
        Edge::CD,
        Edge::DA,
        Edge::EA,
        Edge::EB,
        Edge::EC,
        Edge::ED,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    /// Vertex indices (A=0 .. E=4) joined by this edge.
    pub fn endpoints(self) -> (usize, usize) {
        match self {
            Edge::AB => (0, 1),
            Edge::BC => (1, 2),
            Edge::CD => (2, 3),
            Edge::DA => (3, 0),
            Edge::EA => (4, 0),
            Edge::EB => (4, 1),
            Edge::EC => (4, 2),
            Edge::ED => (4, 3),
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Edge::AB => "AB",
            Edge::BC => "BC",
            Edge::CD => "CD",
            Edge::DA => "DA",
            Edge::EA => "EA",
            Edge::EB => "EB",
            Edge::EC => "EC",
            Edge::ED => "ED",
        };
        f.write_str(name)
    }
}

/// The five faces of a quadrangular pyramid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Face {
    Base,
    Eab,
    Ebc,
    Ecd,
    Eda,
}

impl Face {
    pub const ALL: [Face; 5] = [Face::Base, Face::Eab, Face::Ebc, Face::Ecd, Face::Eda];

    pub fn edges(self) -> &'static [Edge] {
        match self {
            Face::Base => &[Edge::AB, Edge::BC, Edge::CD, Edge::DA],
            Face::Eab => &[Edge::AB, Edge::EA, Edge::EB],
            Face::Ebc => &[Edge::BC, Edge::EB, Edge::EC],
            Face::Ecd => &[Edge::CD, Edge::EC, Edge::ED],
            Face::Eda => &[Edge::DA, Edge::ED, Edge::EA],
        }
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Face::Base => "ABCD",
            Face::Eab => "EAB",
            Face::Ebc => "EBC",
            Face::Ecd => "ECD",
            Face::Eda => "EDA",
        })
    }
}

/// Eight positive edge lengths ordered `|AB|, |BC|, |CD|, |DA|, |EA|, |EB|, |EC|, |ED|`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EdgeLengthSet([f64; 8]);

impl EdgeLengthSet {
    pub fn new(lengths: [f64; 8]) -> Result<Self, GeomError> {
        for (index, &value) in lengths.iter().enumerate() {
            if !(value.is_finite() && value > 0.0) {
                return Err(GeomError::InvalidLength { index, value });
            }
        }
        Ok(Self(lengths))
    }

    /// Lengths measured from coordinates; zero entries are possible when the
    /// measured base is degenerate.
    pub(crate) fn measured(lengths: [f64; 8]) -> Self {
        Self(lengths)
    }

    pub fn get(&self, edge: Edge) -> f64 {
        self.0[edge.index()]
    }

    pub fn as_array(&self) -> [f64; 8] {
        self.0
    }

    pub fn squared(&self) -> [f64; 8] {
        self.0.map(|l| l * l)
    }

    /// Copy scaled so that `|AB| = 1`.
    pub fn normalized(&self) -> Self {
        let ab = self.0[0];
        Self(self.0.map(|l| l / ab))
    }

    pub fn with(&self, edge: Edge, length: f64) -> Result<Self, GeomError> {
        let mut lengths = self.0;
        lengths[edge.index()] = length;
        Self::new(lengths)
    }

    /// Faces whose polygon inequality fails: some edge is at least the sum of
    /// the others. Non-empty means the set has no realization at all.
    pub fn face_violations(&self) -> Vec<Face> {
        Face::ALL
            .into_iter()
            .filter(|face| {
                let edges = face.edges();
                let total: f64 = edges.iter().map(|&e| self.get(e)).sum();
                edges.iter().any(|&e| {
                    let l = self.get(e);
                    l >= total - l
                })
            })
            .collect()
    }
}

/// Planar base `ABCD` with `A = (0, 0)` and `B = (1, 0)` implicit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BaseQuad {
    /// Vertex `D`, i.e. `(x1, y1)`.
    pub d: Point2,
    /// Vertex `C`, i.e. `(x2, y2)`.
    pub c: Point2,
}

impl BaseQuad {
    pub fn new(d: Point2, c: Point2) -> Self {
        Self { d, c }
    }

    /// `[A, B, C, D]`.
    pub fn vertices(&self) -> [Point2; 4] {
        [Point2::origin(), Point2::new(1.0, 0.0), self.c, self.d]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BaseClass {
    ConvexCcw,
    NonConvexSimple,
    SelfIntersecting,
    Degenerate,
}

impl BaseClass {
    /// Short name used in machine-readable output.
    pub fn as_str(self) -> &'static str {
        match self {
            BaseClass::ConvexCcw => "convex",
            BaseClass::NonConvexSimple => "nonconvex",
            BaseClass::SelfIntersecting => "selfint",
            BaseClass::Degenerate => "degenerate",
        }
    }
}

impl fmt::Display for BaseClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A pyramid in standard position.
///
/// Coordinates are in normalized units (`|AB| = 1`). `scale` is the factor
/// that was applied to reach them, so original coordinates are `coord / scale`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Realization {
    pub base: BaseQuad,
    pub apex: Point3,
    pub scale: f64,
    pub base_class: BaseClass,
}

impl Realization {
    /// Builds a realization from normalized coordinates and classifies its base.
    pub fn new(base: BaseQuad, apex: Point3, scale: f64) -> Self {
        Self {
            base,
            apex,
            scale,
            base_class: classify_base(&base, DEFAULT_ORIENTATION_EPS),
        }
    }

    /// From `(x1, y1, x2, y2, x3, y3, z3)`.
    pub fn from_coords(coords: [f64; 7], scale: f64) -> Self {
        let [x1, y1, x2, y2, x3, y3, z3] = coords;
        Self::new(
            BaseQuad::new(Point2::new(x1, y1), Point2::new(x2, y2)),
            Point3::new(x3, y3, z3),
            scale,
        )
    }

    /// `(x1, y1, x2, y2, x3, y3, z3)` in normalized units.
    pub fn coords(&self) -> [f64; 7] {
        [
            self.base.d.x,
            self.base.d.y,
            self.base.c.x,
            self.base.c.y,
            self.apex.x,
            self.apex.y,
            self.apex.z,
        ]
    }

    /// Coordinates in the units of the original problem.
    pub fn coords_unscaled(&self) -> [f64; 7] {
        self.coords().map(|v| v / self.scale)
    }

    /// `[A, B, C, D, E]` in normalized units.
    pub fn vertices(&self) -> [Point3; 5] {
        let lift = |p: Point2| Point3::new(p.x, p.y, 0.0);
        [
            Point3::origin(),
            Point3::new(1.0, 0.0, 0.0),
            lift(self.base.c),
            lift(self.base.d),
            self.apex,
        ]
    }

    /// Angle of the base at `A`.
    pub fn alpha(&self) -> f64 {
        self.base.d.y.atan2(self.base.d.x)
    }

    /// The eight edge lengths, in normalized units or (with `unscaled`) in
    /// the units of the original problem.
    pub fn edge_lengths(&self, unscaled: bool) -> EdgeLengthSet {
        let v = self.vertices();
        let factor = if unscaled { 1.0 / self.scale } else { 1.0 };
        EdgeLengthSet::measured(Edge::ALL.map(|e| {
            let (i, j) = e.endpoints();
            (v[i] - v[j]).norm() * factor
        }))
    }
}

/// Maximum coordinate deviation for two standard-position pyramids to be
/// treated as congruent.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CongruenceTolerance(f64);

impl CongruenceTolerance {
    pub fn new(tol: f64) -> Result<Self, GeomError> {
        if tol.is_nan() || tol < 0.0 {
            return Err(GeomError::NegativeTolerance(tol));
        }
        Ok(Self(tol))
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

impl Default for CongruenceTolerance {
    fn default() -> Self {
        Self(DEFAULT_CONGRUENCE_TOL)
    }
}

/// Moves an arbitrary labelled pyramid `[A, B, C, D, E]` to standard position.
///
/// Returns the applied scale `1 / |AB|` and the normalized pyramid. The map is
/// a rigid motion (possibly orientation reversing) followed by the scaling, so
/// congruent inputs land on identical coordinates. `tol` bounds the allowed
/// distance of `C` and `D` from the base plane and the minimal apex height,
/// both measured after scaling.
pub fn normalize_to_standard(
    points: [Point3; 5],
    tol: f64,
) -> Result<(f64, Realization), GeomError> {
    let [a, b, c, d, e] = points;
    let len = (b - a).norm();
    if len == 0.0 || !len.is_finite() {
        return Err(GeomError::DegenerateEdge);
    }
    let scale = 1.0 / len;
    let local = |p: Point3| (p - a) * scale;
    let u = local(b);
    let (pc, pd, pe) = (local(c), local(d), local(e));

    let off_axis = |w: Vector3<f64>| w - u * w.dot(&u);
    let (wc, wd) = (off_axis(pc), off_axis(pd));
    let w = if wc.norm() >= wd.norm() { wc } else { wd };
    if w.norm() <= tol {
        return Err(GeomError::CollinearBase);
    }
    let mut v = w.normalize();
    let n = u.cross(&v);
    let deviation = pc.dot(&n).abs().max(pd.dot(&n).abs());
    if deviation > tol {
        return Err(GeomError::NonCoplanarBase { deviation });
    }

    let (mut yc, mut yd) = (pc.dot(&v), pd.dot(&v));
    let sum = yc + yd;
    if sum < 0.0 || (sum == 0.0 && yd < 0.0) {
        v = -v;
        yc = -yc;
        yd = -yd;
    }
    // Reflections are allowed, so the normal is oriented towards the apex.
    let n = u.cross(&v);
    let height = pe.dot(&n);
    if height.abs() <= tol {
        return Err(GeomError::FlatPyramid { height });
    }
    let n = if height < 0.0 { -n } else { n };

    let base = BaseQuad::new(Point2::new(pd.dot(&u), yd), Point2::new(pc.dot(&u), yc));
    let apex = Point3::new(pe.dot(&u), pe.dot(&v), pe.dot(&n));
    Ok((scale, Realization::new(base, apex, scale)))
}

/// Twice the signed area of the triangle `abc`; positive for a
/// counter-clockwise turn.
pub fn orient2d(a: Point2, b: Point2, c: Point2) -> f64 {
    (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)
}

fn sign_at(value: f64, eps: f64) -> i8 {
    if value > eps {
        1
    } else if value < -eps {
        -1
    } else {
        0
    }
}

fn within_box(p: Point2, r: Point2, q: Point2, eps: f64) -> bool {
    q.x >= p.x.min(r.x) - eps
        && q.x <= p.x.max(r.x) + eps
        && q.y >= p.y.min(r.y) - eps
        && q.y <= p.y.max(r.y) + eps
}

/// Whether the closed segments `p1p2` and `q1q2` share a point. Orientation
/// values within `eps` of zero count as collinear.
pub fn segments_intersect(p1: Point2, p2: Point2, q1: Point2, q2: Point2, eps: f64) -> bool {
    let o1 = sign_at(orient2d(p1, p2, q1), eps);
    let o2 = sign_at(orient2d(p1, p2, q2), eps);
    let o3 = sign_at(orient2d(q1, q2, p1), eps);
    let o4 = sign_at(orient2d(q1, q2, p2), eps);

    if o1 * o2 < 0 && o3 * o4 < 0 {
        return true;
    }
    (o1 == 0 && within_box(p1, p2, q1, eps))
        || (o2 == 0 && within_box(p1, p2, q2, eps))
        || (o3 == 0 && within_box(q1, q2, p1, eps))
        || (o4 == 0 && within_box(q1, q2, p2, eps))
}

/// Turn at each vertex of `A -> B -> C -> D -> A`, starting with the turn at `A`.
pub fn turns(quad: &BaseQuad) -> [f64; 4] {
    let p = quad.vertices();
    std::array::from_fn(|i| orient2d(p[(i + 3) % 4], p[i], p[(i + 1) % 4]))
}

pub fn classify_base(quad: &BaseQuad, eps: f64) -> BaseClass {
    let t = turns(quad);
    if t.iter().all(|&x| x > eps) {
        return BaseClass::ConvexCcw;
    }
    if t.iter().any(|x| x.abs() <= eps) {
        return BaseClass::Degenerate;
    }
    let [a, b, c, d] = quad.vertices();
    if segments_intersect(a, b, c, d, eps) || segments_intersect(b, c, d, a, eps) {
        BaseClass::SelfIntersecting
    } else {
        BaseClass::NonConvexSimple
    }
}

/// Coordinate-wise comparison of two standard-position pyramids.
pub fn congruent(r1: &Realization, r2: &Realization, tol: CongruenceTolerance) -> bool {
    r1.coords()
        .iter()
        .zip(r2.coords())
        .all(|(x, y)| (x - y).abs() <= tol.value())
}
