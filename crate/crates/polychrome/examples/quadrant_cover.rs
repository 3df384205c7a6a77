//! Cover a point set with quadrants while dodging obstructions.

use polychrome::geom::{ratio, Point};
use polychrome::witness::quadrant_cover;

fn pt(x: i64, y: i64) -> Point {
    Point::new(ratio(x, 1), ratio(y, 1))
}

fn main() {
    // Q: points to cover. R: points no quadrant may touch.
    let q = vec![pt(2, 9), pt(5, 6), pt(8, 3), pt(9, 8), pt(4, 8)];
    let r = vec![pt(1, 4), pt(3, 2), pt(6, 1), pt(2, 3)];

    let cover = quadrant_cover(&q, &r).unwrap();
    println!("|Q| = {}, |R| = {}, cover size {} (<= |R| + 1)", q.len(), r.len(), cover.len());
    for (i, quad) in cover.iter().enumerate() {
        println!(
            "quadrant {i}: x {} {}, y {} {}",
            if quad.open_x { ">" } else { ">=" },
            quad.a,
            if quad.open_y { ">" } else { ">=" },
            quad.b
        );
        for p in &q {
            if quad.contains(p) {
                println!("  covers ({}, {})", p.x, p.y);
            }
        }
    }
    assert!(q.iter().all(|p| cover.iter().any(|c| c.contains(p))));
    assert!(r.iter().all(|p| cover.iter().all(|c| !c.contains(p))));
}
