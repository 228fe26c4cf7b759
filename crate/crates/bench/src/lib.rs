//! Workloads shared by the benchmarks.

use rand::rngs::StdRng;
use rand::SeedableRng;
use torsionlab::det_torsion::random_complex;
use torsionlab::knots::fixtures::fixture;
use torsionlab::{ChainComplex, KnotDiagram, Rational};

/// Knots benchmarked, smallest first.
pub const KNOTS: [&str; 5] = ["trefoil-left", "figure-eight", "5_2", "6_1", "granny"];

pub fn diagram(name: &str) -> KnotDiagram {
    fixture(name)
        .and_then(|f| f.diagram().ok())
        .unwrap_or_else(|| panic!("fixture {name}"))
}

/// Fixed batch of random complexes with top degree and dimensions at most 4.
pub fn complexes(n: usize, seed: u64) -> Vec<ChainComplex<Rational>> {
    let mut rng = StdRng::seed_from_u64(seed);
    (0..n).map(|_| random_complex(&mut rng, 4, 4)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn workloads_build() {
        for k in KNOTS {
            assert!(diagram(k).is_knot());
        }
        assert_eq!(complexes(3, 1), complexes(3, 1));
    }
}
