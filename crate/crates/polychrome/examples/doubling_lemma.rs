//! Measure the doubling recurrence on concrete data.
//!
//! If a k-coloring is polychromatic above t, and each class splits into two
//! colors that are polychromatic (within the class) above c, the resulting
//! 2k-coloring is polychromatic above c^2 * t. This drives the whole
//! construction: log2(k) rounds of splitting, constants multiplied out.

use polychrome::coloring::{refine, Coloring, Strategy};
use polychrome::gen::{generate, GeneratorKind};
use polychrome::ranges::enumerate_ranges;
use polychrome::verify::{empirical_threshold, verify};

fn main() {
    let instance = generate(GeneratorKind::UniformRandom, 70, 11);
    let points = instance.points;
    let catalog = enumerate_ranges(&points);

    let mut coloring = Coloring::trivial(points.len());
    for round in 0..3 {
        let t = empirical_threshold(&catalog, &coloring);
        let (next, achieved) = refine(&points, &coloring, &catalog, Strategy::Exact, round as u64).unwrap();
        let c = achieved.iter().copied().max().unwrap();
        let measured = empirical_threshold(&catalog, &next);
        println!(
            "round {}: {} -> {} colors   t={t} c={c} bound={}  measured={measured}",
            round,
            coloring.k,
            next.k,
            c * c * t
        );
        assert!(verify(&catalog, &next, c * c * t).is_none(), "lemma bound violated");
        coloring = next;
    }
}
