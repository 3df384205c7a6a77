//! Polychromaticity checking and empirical thresholds.

use crate::coloring::Coloring;
use crate::geom::Homothet;
use crate::ranges::{max_nonpoly_range, RangeCatalog};

/// A range of at least `size` points containing no point of `missing_color`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub homothet: Homothet,
    pub missing_color: usize,
    pub size: usize,
}

/// `None` iff every range with at least `m` points contains all colors.
/// Otherwise the largest violating range (ties: smallest missing color, then
/// smallest membership bitset).
pub fn verify(catalog: &RangeCatalog, coloring: &Coloring, m: usize) -> Option<Violation> {
    let classes = coloring.class_bitsets(catalog.n);
    let mut best: Option<(usize, usize, &crate::ranges::Range)> = None;
    for range in &catalog.ranges {
        let size = range.size();
        if size < m {
            continue;
        }
        if let Some(color) = classes.iter().position(|cls| !cls.intersects(&range.members)) {
            let better = match &best {
                None => true,
                Some((bs, bc, br)) => {
                    size > *bs
                        || (size == *bs
                            && (color < *bc || (color == *bc && range.members < br.members)))
                }
            };
            if better {
                best = Some((size, color, range));
            }
        }
    }
    best.map(|(size, color, range)| Violation {
        homothet: range.homothet.clone(),
        missing_color: color,
        size,
    })
}

/// Least `m` such that [`verify`] returns `None`: one more than the largest
/// range missing a color, or 1 if every range is polychromatic.
pub fn empirical_threshold(catalog: &RangeCatalog, coloring: &Coloring) -> usize {
    match max_nonpoly_range(catalog, coloring).0 {
        0 => 1,
        worst => worst + 1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::Point;
    use crate::ranges::{enumerate_ranges, PointSet};

    fn pset(coords: &[(i64, i64)]) -> PointSet {
        PointSet::new(coords.iter().map(|&(x, y)| Point::from_ints(x, y)).collect())
    }

    #[test]
    fn vacuous_threshold_passes() {
        let p = pset(&[(0, 0), (1, 2), (2, 1)]);
        let catalog = enumerate_ranges(&p);
        let coloring = Coloring::new(2, vec![0, 0, 0]).unwrap();
        assert!(verify(&catalog, &coloring, 4).is_none());
    }

    #[test]
    fn monochromatic_full_range_violates() {
        let p = pset(&[(0, 0), (1, 2), (2, 1), (3, 3)]);
        let catalog = enumerate_ranges(&p);
        let coloring = Coloring::new(2, vec![0, 0, 0, 0]).unwrap();
        let v = verify(&catalog, &coloring, 1).unwrap();
        assert_eq!(v.size, 4);
        assert_eq!(v.missing_color, 1);
    }

    #[test]
    fn one_color_always_polychromatic() {
        let p = pset(&[(0, 0), (1, 2), (2, 1)]);
        let catalog = enumerate_ranges(&p);
        let coloring = Coloring::trivial(3);
        assert_eq!(empirical_threshold(&catalog, &coloring), 1);
    }

    #[test]
    fn singleton_two_colors() {
        let p = pset(&[(1, 1)]);
        let catalog = enumerate_ranges(&p);
        let coloring = Coloring::new(2, vec![0]).unwrap();
        assert_eq!(empirical_threshold(&catalog, &coloring), 2);
    }

    #[test]
    fn empirical_matches_linear_search() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
        for _ in 0..10 {
            let pts: Vec<Point> = (0..10)
                .map(|_| {
                    Point::new(
                        crate::geom::ratio(rng.gen_range(0..50), 50),
                        crate::geom::ratio(rng.gen_range(0..50), 50),
                    )
                })
                .collect();
            let p = PointSet::new(pts);
            let catalog = enumerate_ranges(&p);
            let coloring =
                Coloring::new(3, (0..10).map(|_| rng.gen_range(0..3)).collect()).unwrap();
            let fast = empirical_threshold(&catalog, &coloring);
            let slow = (1..=11)
                .find(|&m| verify(&catalog, &coloring, m).is_none())
                .unwrap();
            assert_eq!(fast, slow);
        }
    }
}
