//! List every distinct triangle range of a small point set.
//!
//! A "range" is the subset of points captured by some homothet of the
//! triangle; after canonicalization these are the regions
//! {x >= a, y >= b, x + y <= s}. For n points there are O(n^3) of them.

use polychrome::gen::{generate, GeneratorKind};
use polychrome::ranges::enumerate_ranges;

fn main() {
    let instance = generate(GeneratorKind::UniformRandom, 8, 1);
    let catalog = enumerate_ranges(&instance.points);
    println!("{} points, {} distinct ranges\n", instance.points.len(), catalog.ranges.len());
    for range in &catalog.ranges {
        let members: Vec<String> = range.members.iter().map(|i| i.to_string()).collect();
        println!(
            "a={} b={} s={}  -> {{{}}}",
            range.homothet.a,
            range.homothet.b,
            range.homothet.s,
            members.join(",")
        );
    }
}
