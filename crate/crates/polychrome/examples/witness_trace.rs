//! Break a coloring on purpose and replay the doubling argument on it.
//!
//! The extractor takes a range that misses one of the refined colors and
//! produces a smaller violation one level down: either a class whose split
//! left c points monochromatic, or a homothet of t points avoiding a parent
//! color entirely.

use polychrome::coloring::Coloring;
use polychrome::gen::{generate, GeneratorKind};
use polychrome::ranges::enumerate_ranges;
use polychrome::verify::verify;
use polychrome::witness::{witness_extract, DerivedKind};

fn main() {
    let instance = generate(GeneratorKind::UniformRandom, 24, 2);
    let points = instance.points;
    let catalog = enumerate_ranges(&points);

    // Worst possible "split" of the single parent class: nobody gets color 1.
    let parent = Coloring::trivial(points.len());
    let refined = Coloring::new(2, vec![0; points.len()]).unwrap();
    let (c, t) = (2, 2);

    let viol = verify(&catalog, &refined, c * c * t).expect("the corrupt coloring must fail");
    println!(
        "refined violation: {} points, color {} missing",
        viol.size, viol.missing_color
    );

    let trace = witness_extract(&points, &parent, &refined, &viol, c, t).unwrap();
    match trace.kind {
        DerivedKind::ClassSplit => println!(
            "derived: split of parent class {} left {} points on one color",
            trace.parent_color, trace.derived.size
        ),
        DerivedKind::ParentColoring => println!(
            "derived: homothet with {} points and no parent color {}",
            trace.derived.size, trace.derived.missing_color
        ),
    }
    println!(
        "derived homothet a={} b={} s={} (inside the violating one)",
        trace.derived.homothet.a, trace.derived.homothet.b, trace.derived.homothet.s
    );
    assert!(trace.derived.homothet.is_subset(&viol.homothet));
}
