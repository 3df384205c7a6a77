//! Write an SVG of a colored instance, highlighting the tightest range.

use polychrome::coloring::{k_color, Strategy};
use polychrome::gen::{generate, GeneratorKind};
use polychrome::ranges::max_nonpoly_range;
use polychrome::svg;

fn main() {
    let instance = generate(GeneratorKind::UniformRandom, 40, 9);
    let outcome = k_color(&instance.points, &instance.triangle, 3, Strategy::Exact, 0).unwrap();
    let highlight = max_nonpoly_range(&outcome.catalog, &outcome.coloring)
        .1
        .map(|(range, _)| range.homothet.clone());
    let text = svg::render(&instance, Some(&outcome.coloring), highlight.as_ref());
    std::fs::write("colored.svg", &text).unwrap();
    println!("wrote colored.svg ({} bytes)", text.len());
}
