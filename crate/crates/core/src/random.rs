//! Random instances for property tests and benchmarks.

use rand::Rng;

use crate::consensus::ValueAssignment;
use crate::duality::SpaceMap;
use crate::pointset::PointSet;
use crate::semitopology::{Semitopology, DEFAULT_OPENS_CAP};

fn point_names(n: usize) -> Vec<String> {
    (0..n).map(|i| i.to_string()).collect()
}

pub fn random_subset<R: Rng>(rng: &mut R, n: usize, density: f64) -> PointSet {
    PointSet::from_indices(n, (0..n).filter(|_| rng.random_bool(density)))
}

/// A space on `n` points generated by up to `max_generators` random subsets.
pub fn random_space<R: Rng>(rng: &mut R, n: usize, max_generators: usize) -> Semitopology {
    let k = rng.random_range(0..=max_generators);
    let density = rng.random_range(0.2..0.7);
    let gens: Vec<PointSet> = (0..k).map(|_| random_subset(rng, n, density)).collect();
    Semitopology::from_generator_sets(point_names(n), gens, DEFAULT_OPENS_CAP)
        .expect("random spaces are small")
}

/// An assignment drawing from `values` distinct tokens.
pub fn random_assignment<R: Rng>(rng: &mut R, space: &Semitopology, values: usize) -> ValueAssignment {
    ValueAssignment {
        values: (0..space.num_points())
            .map(|_| format!("v{}", rng.random_range(0..values.max(1))))
            .collect(),
    }
}

/// A random function into `target` together with a source space on which
/// it is continuous: the source opens are generated by every inverse image
/// plus a few random extra sets.
pub fn random_continuous_map<R: Rng>(
    rng: &mut R,
    n: usize,
    target: &Semitopology,
    extra: usize,
) -> (Semitopology, SpaceMap) {
    let m = target.num_points();
    let images: Vec<usize> = if m == 0 {
        Vec::new()
    } else {
        (0..n).map(|_| rng.random_range(0..m)).collect()
    };
    let n = images.len();
    let mut gens: Vec<PointSet> = target
        .opens()
        .iter()
        .map(|o| PointSet::from_indices(n, (0..n).filter(|&p| o.contains(images[p]))))
        .collect();
    for _ in 0..rng.random_range(0..=extra) {
        gens.push(random_subset(rng, n, 0.4));
    }
    let source = Semitopology::from_generator_sets(point_names(n), gens, DEFAULT_OPENS_CAP)
        .expect("random spaces are small");
    let map = SpaceMap::new(&source, target, images).expect("images are in range");
    debug_assert!(map.is_continuous());
    (source, map)
}
