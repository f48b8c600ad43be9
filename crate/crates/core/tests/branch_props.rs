use proptest::prelude::*;
use pyramid_core::geom::{segments_intersect, Point2};
use pyramid_core::solver::{branch_nonconvex, branch_parallelogram, parallelogram_eb2};
use pyramid_core::Edge;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn nonconvex_determinant(a2 in -5.0f64..5.0, b2 in -5.0f64..5.0) {
        prop_assume!(a2.abs() + b2.abs() > 1e-3);
        let (a1, b1) = branch_nonconvex(a2, b2).unwrap();
        let det = a2 * b1 - b2 * a1;
        let scale = (a2 * b1).abs() + (b2 * a1).abs() + b2.abs();
        prop_assert!((det + b2).abs() <= 1e-12 * scale.max(1e-300));
    }

    #[test]
    fn nonconvex_sides_cross(a2 in -5.0f64..5.0, b2 in 0.01f64..5.0) {
        let (a1, b1) = branch_nonconvex(a2, b2).unwrap();
        if b1 > 0.0 {
            prop_assert!(segments_intersect(
                Point2::origin(),
                Point2::new(a1, b1),
                Point2::new(1.0, 0.0),
                Point2::new(a2, b2),
                1e-12,
            ));
        }
    }

    #[test]
    fn parallelogram_apex_is_balanced(a1 in -3.0f64..3.0, b1 in 0.01f64..3.0, c3 in 0.01f64..3.0) {
        let l = branch_parallelogram(a1, b1, c3).unwrap().edge_lengths(false);
        prop_assert!((l.get(Edge::EA) - l.get(Edge::EC)).abs() <= 1e-14);
        prop_assert!((l.get(Edge::EB) - l.get(Edge::ED)).abs() <= 1e-14);
    }

    #[test]
    fn eb2_strictly_decreases_in_the_diagonal(
        p in 0.1f64..3.0,
        q in 0.1f64..3.0,
        t in 0.0f64..1.0,
        u in 0.0f64..1.0,
    ) {
        let (lo, hi) = ((p - q).abs(), p + q);
        let (d, e) = (lo + (hi - lo) * t.min(u), lo + (hi - lo) * t.max(u));
        prop_assume!(e - d > 1e-9);
        let l5 = hi;
        prop_assert!(parallelogram_eb2(p, q, l5, d).unwrap() > parallelogram_eb2(p, q, l5, e).unwrap());
    }
}
