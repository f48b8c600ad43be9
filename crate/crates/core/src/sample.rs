//! Seeded random instances for batch checks.

use rand::Rng;

use crate::geom::{turns, BaseClass, EdgeLengthSet, Realization};

/// Smallest turn accepted at a base vertex of a random convex pyramid.
pub const MIN_TURN: f64 = 0.05;

/// Convex pyramid in standard position, with every base turn at least
/// [`MIN_TURN`] and apex height in `[0.2, 2]`.
pub fn random_convex_pyramid<R: Rng + ?Sized>(rng: &mut R) -> Realization {
    loop {
        let coords = [
            rng.gen_range(-1.0..1.5),
            rng.gen_range(0.2..2.0),
            rng.gen_range(-0.5..2.5),
            rng.gen_range(0.2..2.0),
            rng.gen_range(-0.5..1.5),
            rng.gen_range(-0.5..2.0),
            rng.gen_range(0.2..2.0),
        ];
        let r = Realization::from_coords(coords, 1.0);
        if r.base_class == BaseClass::ConvexCcw && turns(&r.base).iter().all(|&t| t >= MIN_TURN) {
            return r;
        }
    }
}

/// Eight lengths drawn independently from `[0.5, 2.5)`.
pub fn random_length_set<R: Rng + ?Sized>(rng: &mut R) -> EdgeLengthSet {
    EdgeLengthSet::new(std::array::from_fn(|_| rng.gen_range(0.5..2.5))).expect("positive")
}
