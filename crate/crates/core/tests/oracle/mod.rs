//! Independent reference computations for the property and acceptance tests.
//!
//! Everything here works on plain arrays and recomputes from first
//! principles, so it shares no numerics with the library under test.

#![allow(dead_code)]

/// Vertex order `[A, B, C, D, E]`.
pub type Points = [[f64; 3]; 5];

/// Edge endpoints in storage order `AB, BC, CD, DA, EA, EB, EC, ED`.
pub const EDGES: [(usize, usize); 8] = [
    (0, 1),
    (1, 2),
    (2, 3),
    (3, 0),
    (4, 0),
    (4, 1),
    (4, 2),
    (4, 3),
];

pub fn dist2(p: [f64; 3], q: [f64; 3]) -> f64 {
    (0..3).map(|k| (p[k] - q[k]).powi(2)).sum()
}

pub fn points_from_coords(c: [f64; 7]) -> Points {
    [
        [0.0, 0.0, 0.0],
        [1.0, 0.0, 0.0],
        [c[2], c[3], 0.0],
        [c[0], c[1], 0.0],
        [c[4], c[5], c[6]],
    ]
}

pub fn squared_lengths(p: &Points) -> [f64; 8] {
    EDGES.map(|(i, j)| dist2(p[i], p[j]))
}

/// Squared-length residuals in the order `DA, BC, CD, EA, EB, ED, EC`.
pub fn residual_oracle(c: [f64; 7], target_sq: [f64; 8]) -> [f64; 7] {
    let sq = squared_lengths(&points_from_coords(c));
    [3, 1, 2, 4, 5, 7, 6].map(|k| sq[k] - target_sq[k])
}

/// Central finite-difference Jacobian of [`residual_oracle`].
pub fn fd_jacobian(c: [f64; 7], target_sq: [f64; 8], h: f64) -> [[f64; 7]; 7] {
    let mut jac = [[0.0; 7]; 7];
    for col in 0..7 {
        let mut plus = c;
        let mut minus = c;
        plus[col] += h;
        minus[col] -= h;
        let (rp, rm) = (residual_oracle(plus, target_sq), residual_oracle(minus, target_sq));
        for row in 0..7 {
            jac[row][col] = (rp[row] - rm[row]) / (2.0 * h);
        }
    }
    jac
}

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, descending.
pub fn jacobi_eigenvalues<const N: usize>(mut a: [[f64; N]; N]) -> [f64; N] {
    for _sweep in 0..100 {
        let off: f64 = (0..N)
            .flat_map(|i| (0..N).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[i][j] * a[i][j])
            .sum();
        let diag: f64 = (0..N).map(|i| a[i][i] * a[i][i]).sum();
        if off <= 1e-32 * diag {
            break;
        }
        for p in 0..N {
            for q in p + 1..N {
                if a[p][q] == 0.0 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for row in a.iter_mut() {
                    let (akp, akq) = (row[p], row[q]);
                    row[p] = c * akp - s * akq;
                    row[q] = s * akp + c * akq;
                }
                let (rp, rq) = (a[p], a[q]);
                for (k, (apk, aqk)) in rp.into_iter().zip(rq).enumerate() {
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    let mut ev: [f64; N] = std::array::from_fn(|i| a[i][i]);
    ev.sort_by(|x, y| y.total_cmp(x));
    ev
}

/// Singular values from the eigenvalues of `M^T M`, descending.
pub fn singular_values_oracle(m: [[f64; 7]; 7]) -> [f64; 7] {
    let mut gram = [[0.0; 7]; 7];
    for i in 0..7 {
        for j in 0..7 {
            gram[i][j] = (0..7).map(|k| m[k][i] * m[k][j]).sum();
        }
    }
    jacobi_eigenvalues(gram).map(|l| l.max(0.0).sqrt())
}

fn orient_i(a: (i64, i64), b: (i64, i64), c: (i64, i64)) -> i64 {
    ((b.0 - a.0) * (c.1 - a.1) - (b.1 - a.1) * (c.0 - a.0)).signum()
}

fn between(a: i64, b: i64, x: i64) -> bool {
    a.min(b) <= x && x <= a.max(b)
}

/// Exact closed-segment intersection for integer endpoints.
pub fn segments_intersect_exact(p1: (i64, i64), p2: (i64, i64), q1: (i64, i64), q2: (i64, i64)) -> bool {
    let d1 = orient_i(q1, q2, p1);
    let d2 = orient_i(q1, q2, p2);
    let d3 = orient_i(p1, p2, q1);
    let d4 = orient_i(p1, p2, q2);
    if d1 * d2 < 0 && d3 * d4 < 0 {
        return true;
    }
    let on = |a: (i64, i64), b: (i64, i64), x: (i64, i64)| between(a.0, b.0, x.0) && between(a.1, b.1, x.1);
    (d1 == 0 && on(q1, q2, p1))
        || (d2 == 0 && on(q1, q2, p2))
        || (d3 == 0 && on(p1, p2, q1))
        || (d4 == 0 && on(p1, p2, q2))
}

/// `3v - k - 4` with `v` from Euler's formula `v = e - f + 2`.
pub fn dof_oracle(faces: &[(u32, u64)], pinned: u32) -> i64 {
    let incidences: i64 = faces.iter().map(|&(i, n)| i as i64 * n as i64).sum();
    let f: i64 = faces.iter().map(|&(_, n)| n as i64).sum();
    let v = incidences / 2 - f + 2;
    3 * v - pinned as i64 - 4
}

/// Rotation about a unit axis by Rodrigues' formula.
pub fn rotation(axis: [f64; 3], angle: f64) -> [[f64; 3]; 3] {
    let n = (axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]).sqrt();
    let [x, y, z] = axis.map(|a| a / n);
    let (s, c) = angle.sin_cos();
    let t = 1.0 - c;
    [
        [t * x * x + c, t * x * y - s * z, t * x * z + s * y],
        [t * x * y + s * z, t * y * y + c, t * y * z - s * x],
        [t * x * z - s * y, t * y * z + s * x, t * z * z + c],
    ]
}

/// `scale * Q p + shift`, with `Q` the rotation optionally followed by `x -> -x`.
pub fn similarity(p: &Points, rot: [[f64; 3]; 3], mirror: bool, scale: f64, shift: [f64; 3]) -> Points {
    p.map(|v| {
        let mut w: [f64; 3] = std::array::from_fn(|i| (0..3).map(|k| rot[i][k] * v[k]).sum());
        if mirror {
            w[0] = -w[0];
        }
        std::array::from_fn(|i| scale * w[i] + shift[i])
    })
}
