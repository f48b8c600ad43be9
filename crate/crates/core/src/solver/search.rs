//! Scalar bracketing and extremum search.

const MAX_ITERS: usize = 200;

/// Shrinks the sign-change bracket `[a, b]` of `f` to width `tol` and returns
/// its midpoint.
pub fn bisect(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64, tol: f64) -> f64 {
    let mut fa = f(a);
    if fa == 0.0 {
        return a;
    }
    for _ in 0..MAX_ITERS {
        if (b - a).abs() <= tol {
            break;
        }
        let m = 0.5 * (a + b);
        if m == a || m == b {
            break;
        }
        let fm = f(m);
        if fm == 0.0 {
            return m;
        }
        if (fm < 0.0) == (fa < 0.0) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    0.5 * (a + b)
}

/// Boundary between `inside` (where `pred` holds) and `outside` (where it
/// does not), located to within `tol`. Returns the last point known to be
/// inside.
pub fn bisect_boundary(pred: impl Fn(f64) -> bool, mut inside: f64, mut outside: f64, tol: f64) -> f64 {
    for _ in 0..MAX_ITERS {
        if (outside - inside).abs() <= tol {
            break;
        }
        let m = 0.5 * (inside + outside);
        if m == inside || m == outside {
            break;
        }
        if pred(m) {
            inside = m;
        } else {
            outside = m;
        }
    }
    inside
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Extremum {
    Min,
    Max,
}

/// Golden-section search for an extremum of `f` on `[a, b]`, stopping when
/// the bracket is narrower than `tol`. Returns `(x, f(x))`.
pub fn golden_section(
    f: impl Fn(f64) -> f64,
    mut a: f64,
    mut b: f64,
    tol: f64,
    kind: Extremum,
) -> (f64, f64) {
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let better = |u: f64, v: f64| match kind {
        Extremum::Min => u < v,
        Extremum::Max => u > v,
    };
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    for _ in 0..MAX_ITERS {
        if (b - a).abs() <= tol {
            break;
        }
        if better(fc, fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    if better(fc, fd) {
        (c, fc)
    } else {
        (d, fd)
    }
}
