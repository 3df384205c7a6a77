//! Property tests for the geometric core and the range catalog.

use num::Zero;
use proptest::prelude::*;

use polychrome::geom::{canonical_map, ratio, Homothet, Point, Triangle};
use polychrome::ranges::{enumerate_ranges, range_of, PointSet};

fn rational() -> impl Strategy<Value = polychrome::Scalar> {
    (-60i64..60, 1i64..8).prop_map(|(n, d)| ratio(n, d))
}

fn point() -> impl Strategy<Value = Point> {
    (rational(), rational()).prop_map(|(x, y)| Point::new(x, y))
}

fn triangle() -> impl Strategy<Value = Triangle> {
    (point(), point(), point())
        .prop_filter_map("degenerate", |(v0, v1, v2)| Triangle::new(v0, v1, v2).ok())
}

/// Sign of the orientation of (a, b, c); used as an independent route for
/// point-in-triangle tests.
fn orient(a: &Point, b: &Point, c: &Point) -> i8 {
    let det = (&b.x - &a.x) * (&c.y - &a.y) - (&b.y - &a.y) * (&c.x - &a.x);
    if det.is_zero() {
        0
    } else if det > polychrome::geom::scalar(0) {
        1
    } else {
        -1
    }
}

fn triangle_contains(t: &Triangle, p: &Point) -> bool {
    let d0 = orient(&t.v0, &t.v1, p);
    let d1 = orient(&t.v1, &t.v2, p);
    let d2 = orient(&t.v2, &t.v0, p);
    let has_neg = d0 < 0 || d1 < 0 || d2 < 0;
    let has_pos = d0 > 0 || d1 > 0 || d2 > 0;
    !(has_neg && has_pos)
}

proptest! {
    #[test]
    fn canonical_map_roundtrips_points(t in triangle(), p in point()) {
        let map = canonical_map(&t).unwrap();
        let back = map.inverse().apply(&map.apply(&p));
        prop_assert_eq!(back, p);
    }

    /// Membership in a canonical homothet equals membership of the pre-image
    /// point in the pre-image triangle, decided by orientation predicates.
    #[test]
    fn canonical_membership_matches_world(t in triangle(), p in point(),
                                          a in rational(), b in rational(), margin in 1i64..40) {
        let s = &a + &b + polychrome::geom::scalar(margin);
        let h = Homothet::new(a, b, s);
        let map = canonical_map(&t).unwrap();
        let world = h.to_world(&map.inverse());
        prop_assert_eq!(h.contains(&map.apply(&p)), triangle_contains(&world, &p));
    }

    #[test]
    fn homothet_field_subset_implies_membership_subset(
        a1 in rational(), b1 in rational(), m1 in 0i64..20,
        da in 0i64..10, db in 0i64..10, dm in 0i64..10, p in point())
    {
        let s1 = &a1 + &b1 + polychrome::geom::scalar(m1);
        let outer = Homothet::new(a1.clone(), b1.clone(), &s1 + polychrome::geom::scalar(dm));
        let inner = Homothet::new(
            &a1 + polychrome::geom::scalar(da),
            &b1 + polychrome::geom::scalar(db),
            s1,
        );
        if inner.is_subset(&outer) && inner.contains(&p) {
            prop_assert!(outer.contains(&p));
        }
    }

    #[test]
    fn sweep_key_is_a_strict_total_order(pts in proptest::collection::vec(point(), 1..12)) {
        let mut distinct = pts.clone();
        distinct.sort_by(|p, q| (&p.x, &p.y).cmp(&(&q.x, &q.y)));
        distinct.dedup();
        for i in 0..distinct.len() {
            for j in 0..distinct.len() {
                let (ki, kj) = (distinct[i].sweep_key(), distinct[j].sweep_key());
                if i == j {
                    prop_assert_eq!(ki, kj);
                } else {
                    prop_assert_ne!(ki, kj);
                }
            }
        }
    }

    /// Old catalog entries stay realizable when a point is inserted.
    #[test]
    fn catalog_monotone_under_insertion(pts in proptest::collection::vec(point(), 1..8), extra in point()) {
        let p = PointSet::new(pts.clone());
        let old = enumerate_ranges(&p);
        let mut grown = pts;
        grown.push(extra);
        let q = PointSet::new(grown);
        let new = enumerate_ranges(&q);
        for range in &old.ranges {
            let expected = range_of(&range.homothet, &q);
            prop_assert!(
                new.ranges.iter().any(|r| r.members == expected),
                "old range lost after insertion"
            );
        }
    }

    /// Witness soundness on arbitrary inputs, duplicates included.
    #[test]
    fn catalog_sound_and_minimal(pts in proptest::collection::vec(point(), 0..9)) {
        let p = PointSet::new(pts);
        let catalog = enumerate_ranges(&p);
        for r in &catalog.ranges {
            prop_assert_eq!(&range_of(&r.homothet, &p), &r.members);
            prop_assert_eq!(
                &polychrome::ranges::minimal_witness(&p.points, &r.members),
                &r.homothet
            );
        }
    }
}
