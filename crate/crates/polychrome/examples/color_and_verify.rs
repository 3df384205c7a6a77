//! Color a random instance with 4 colors and check the result.

use polychrome::coloring::{k_color, Strategy};
use polychrome::gen::{generate, GeneratorKind};
use polychrome::verify::verify;

fn main() {
    let instance = generate(GeneratorKind::UniformRandom, 60, 7);
    let outcome = k_color(&instance.points, &instance.triangle, 4, Strategy::Exact, 0).unwrap();

    println!("k = 4, n = {}", instance.points.len());
    println!("empirical threshold:   {}", outcome.empirical.threshold);
    println!("theoretical threshold: {}", outcome.theoretical.threshold);

    // Every range at least as large as the empirical threshold holds all
    // four colors; one point fewer and some range misses a color.
    let t: usize = outcome.empirical.threshold.to_string().parse().unwrap();
    assert!(verify(&outcome.catalog, &outcome.coloring, t).is_none());
    if let Some(v) = verify(&outcome.catalog, &outcome.coloring, t - 1) {
        println!(
            "tight: {} points with color {} missing at a={} b={} s={}",
            v.size, v.missing_color, v.homothet.a, v.homothet.b, v.homothet.s
        );
    }
}
