//! k-colorings: base 2-coloring strategies, the color-doubling combinator,
//! threshold arithmetic, and the end-to-end driver.
//!
//! The doubling step splits each color class in two with a base 2-colorer
//! and multiplies the guaranteed threshold by the square of the base
//! constant: if the k-coloring is polychromatic at `t` and every class split
//! is bichromatic at `c`, the 2k-coloring is polychromatic at `c^2 * t`. The
//! base colorer is pluggable; its achieved threshold is measured against the
//! restricted range catalog rather than assumed.

use num::BigUint;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bits::BitSet;
use crate::geom::{canonical_map, AffineMap, Triangle};
use crate::ranges::{enumerate_ranges, max_nonpoly_range, PointSet, RangeCatalog};
use crate::{Error, Result};

/// Largest class size the exhaustive 2-colorer accepts.
pub const EXACT_CUTOFF: usize = 20;

/// Total assignment of point indices to colors `0..k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    pub k: usize,
    pub assignment: Vec<usize>,
}

impl Coloring {
    pub fn new(k: usize, assignment: Vec<usize>) -> Result<Self> {
        if k == 0 {
            return Err(Error::ZeroColors);
        }
        debug_assert!(assignment.iter().all(|&c| c < k));
        Ok(Coloring { k, assignment })
    }

    /// Everything color 0.
    pub fn trivial(n: usize) -> Self {
        Coloring { k: 1, assignment: vec![0; n] }
    }

    /// One bitset per color; classes partition the index range.
    pub fn class_bitsets(&self, n: usize) -> Vec<BitSet> {
        debug_assert_eq!(n, self.assignment.len());
        let mut classes = vec![BitSet::new(n); self.k];
        for (i, &c) in self.assignment.iter().enumerate() {
            classes[c].insert(i);
        }
        classes
    }
}

/// How a coloring threshold was certified.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CertKind {
    /// Solved recurrence, independent of the instance.
    Theoretical,
    /// Measured against the instance's range catalog.
    Empirical,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThresholdCert {
    pub k: usize,
    pub threshold: BigUint,
    pub kind: CertKind,
}

/// Base 2-coloring strategy.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// Branch-and-bound over all splits; returns the optimum. Limited to
    /// [`EXACT_CUTOFF`] points.
    Exact,
    /// Alternate colors along sweep order. No guarantee; the achieved
    /// threshold is whatever the catalog measures.
    GreedySweep,
}

impl std::str::FromStr for Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exact" => Ok(Strategy::Exact),
            "greedy-sweep" => Ok(Strategy::GreedySweep),
            other => Err(Error::UnknownStrategy(other.to_string())),
        }
    }
}

impl std::fmt::Display for Strategy {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Strategy::Exact => write!(f, "exact"),
            Strategy::GreedySweep => write!(f, "greedy-sweep"),
        }
    }
}

/// The threshold guaranteed by the doubling recurrence: 1 for one color,
/// otherwise `12 * 144^(ceil(log2 k) - 1)`, from base 12 and one factor of
/// `144 = 12^2` per doubling. Non-powers of two round up and merge surplus
/// colors, which never hurts polychromaticity.
pub fn theoretical_threshold(k: usize) -> Result<BigUint> {
    if k == 0 {
        return Err(Error::ZeroColors);
    }
    if k == 1 {
        return Ok(BigUint::from(1u32));
    }
    let rounds = ceil_log2(k);
    let result = BigUint::from(12u32) * BigUint::from(144u32).pow(rounds as u32 - 1);
    // Sanity-check the solved forms of the recurrence.
    let solved = BigUint::from(144u32).pow(rounds as u32);
    let poly = BigUint::from(144u32) * BigUint::from(k as u32).pow(8);
    debug_assert!(result <= solved && solved < poly);
    Ok(result)
}

pub fn ceil_log2(k: usize) -> usize {
    debug_assert!(k >= 1);
    (usize::BITS - (k - 1).leading_zeros()) as usize
}

/// Result of one base split: the members assigned the second color, and the
/// achieved threshold measured against the restricted catalog.
#[derive(Clone, Debug)]
pub struct Split {
    pub second: BitSet,
    pub achieved: usize,
}

/// 2-color the `subset`. The achieved threshold is `1 +` the largest
/// restricted range left monochromatic (`1` if none).
pub fn two_color(
    points: &PointSet,
    subset: &BitSet,
    catalog: &RangeCatalog,
    strategy: Strategy,
    seed: u64,
) -> Result<Split> {
    debug_assert!(!subset.is_empty());
    let restricted = catalog.restrict(subset);
    match strategy {
        Strategy::Exact => exact_split(subset, &restricted, seed),
        Strategy::GreedySweep => {
            let second = greedy_sweep(points, subset);
            let achieved = measure_split(subset, &second, &restricted);
            Ok(Split { second, achieved })
        }
    }
}

/// Achieved threshold of a concrete split against restricted ranges.
pub fn measure_split(subset: &BitSet, second: &BitSet, restricted: &[BitSet]) -> usize {
    let mut first = subset.clone();
    for i in second.iter() {
        first.remove(i);
    }
    let mut worst = 0;
    for r in restricted {
        if !r.intersects(&first) || !r.intersects(second) {
            worst = worst.max(r.count());
        }
    }
    if worst == 0 {
        1
    } else {
        worst + 1
    }
}

fn greedy_sweep(points: &PointSet, subset: &BitSet) -> BitSet {
    let mut members: Vec<usize> = subset.iter().collect();
    members.sort_by(|&i, &j| points.points[i].sweep_key().cmp(&points.points[j].sweep_key()));
    let mut second = BitSet::new(points.len());
    for (pos, &i) in members.iter().enumerate() {
        if pos % 2 == 1 {
            second.insert(i);
        }
    }
    second
}

/// Exhaustive branch and bound over the 2^(m-1) splits (first point pinned to
/// the first color), minimizing the largest monochromatic restricted range.
/// The seed only shuffles exploration order; the optimum value is
/// seed-independent.
fn exact_split(subset: &BitSet, restricted: &[BitSet], seed: u64) -> Result<Split> {
    let members: Vec<usize> = subset.iter().collect();
    let m = members.len();
    if m > EXACT_CUTOFF {
        return Err(Error::ExactCutoff { limit: EXACT_CUTOFF, got: m });
    }
    // Local u32 masks; position p corresponds to members[p].
    let local_of: std::collections::HashMap<usize, usize> =
        members.iter().enumerate().map(|(p, &g)| (g, p)).collect();
    let ranges: Vec<(u32, u32)> = restricted
        .iter()
        .map(|r| {
            let mut mask = 0u32;
            for g in r.iter() {
                mask |= 1 << local_of[&g];
            }
            (mask, mask.count_ones())
        })
        .collect();
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); m];
    for (ri, (mask, _)) in ranges.iter().enumerate() {
        for p in 0..m {
            if mask >> p & 1 == 1 {
                incident[p].push(ri);
            }
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (0..m).collect();
    order.shuffle(&mut rng);
    let flip: Vec<bool> = (0..m).map(|_| rng.gen()).collect();

    struct Search<'a> {
        ranges: &'a [(u32, u32)],
        incident: &'a [Vec<usize>],
        order: &'a [usize],
        flip: &'a [bool],
        m: usize,
        assigned: u32,
        second_mask: u32,
        best_obj: usize,
        best_mask: u32,
    }

    impl Search<'_> {
        fn worst_complete_mono(&self) -> usize {
            let mut worst = 0;
            for &(mask, size) in self.ranges {
                if mask & !self.assigned == 0 {
                    let snd = mask & self.second_mask;
                    if snd == 0 || snd == mask {
                        worst = worst.max(size as usize);
                    }
                }
            }
            worst
        }

        fn dfs(&mut self, depth: usize, cur_worst: usize) {
            if cur_worst >= self.best_obj {
                return;
            }
            if depth == self.m {
                self.best_obj = cur_worst;
                self.best_mask = self.second_mask;
                return;
            }
            let p = self.order[depth];
            let colors = if self.flip[depth] { [1, 0] } else { [0, 1] };
            for color in colors {
                if depth == 0 && color == 1 {
                    continue; // symmetry: pin the first explored point
                }
                self.assigned |= 1 << p;
                if color == 1 {
                    self.second_mask |= 1 << p;
                }
                let mut worst = cur_worst;
                for &ri in &self.incident[p] {
                    let (mask, size) = self.ranges[ri];
                    if mask & !self.assigned == 0 {
                        let snd = mask & self.second_mask;
                        if snd == 0 || snd == mask {
                            worst = worst.max(size as usize);
                        }
                    }
                }
                self.dfs(depth + 1, worst);
                self.assigned &= !(1 << p);
                self.second_mask &= !(1 << p);
                if self.best_obj <= cur_worst {
                    return;
                }
            }
        }
    }

    let mut search = Search {
        ranges: &ranges,
        incident: &incident,
        order: &order,
        flip: &flip,
        m,
        assigned: 0,
        second_mask: 0,
        best_obj: usize::MAX,
        best_mask: 0,
    };
    search.dfs(0, 0);
    debug_assert_eq!(search.worst_complete_mono(), 0);
    let best_obj = if search.best_obj == usize::MAX { 0 } else { search.best_obj };

    let mut second = BitSet::new(subset.len());
    for p in 0..m {
        if search.best_mask >> p & 1 == 1 {
            second.insert(members[p]);
        }
    }
    let achieved = if best_obj == 0 { 1 } else { best_obj + 1 };
    Ok(Split { second, achieved })
}

/// Split every color class in two: class `i` becomes colors `2i` and
/// `2i + 1`. Returns the doubled coloring and each class's achieved
/// threshold (1 for empty classes, which stay empty).
pub fn refine(
    points: &PointSet,
    coloring: &Coloring,
    catalog: &RangeCatalog,
    strategy: Strategy,
    seed: u64,
) -> Result<(Coloring, Vec<usize>)> {
    let n = points.len();
    let classes = coloring.class_bitsets(n);
    let mut assignment = vec![0usize; n];
    let mut achieved = Vec::with_capacity(coloring.k);
    for (i, class) in classes.iter().enumerate() {
        if class.is_empty() {
            achieved.push(1);
            continue;
        }
        // Per-class strategy: the exhaustive colorer is only defined up to
        // its cutoff; larger classes fall back to the heuristic.
        let effective = match strategy {
            Strategy::Exact if class.count() > EXACT_CUTOFF => Strategy::GreedySweep,
            s => s,
        };
        let split = two_color(points, class, catalog, effective, seed.wrapping_add(i as u64))?;
        for j in class.iter() {
            assignment[j] = 2 * i + usize::from(split.second.contains(j));
        }
        achieved.push(split.achieved);
    }
    Ok((Coloring { k: 2 * coloring.k, assignment }, achieved))
}

/// Merge surplus color classes down to `k_target` by repeatedly folding the
/// highest color into the one below it (so 4 colors -> 3 leaves classes
/// {0}, {1}, {2,3}). A range containing all old colors contains all merged
/// colors, so the polychromaticity threshold never increases.
pub fn merge_colors(coloring: &Coloring, k_target: usize) -> Result<Coloring> {
    if k_target == 0 {
        return Err(Error::ZeroColors);
    }
    if k_target > coloring.k {
        return Err(Error::MergeTarget { target: k_target, current: coloring.k });
    }
    let assignment = coloring
        .assignment
        .iter()
        .map(|&c| c.min(k_target - 1))
        .collect();
    Ok(Coloring { k: k_target, assignment })
}

/// Everything `k_color` produced, including the canonical-frame artifacts
/// needed to verify or extract witnesses afterwards.
#[derive(Clone, Debug)]
pub struct KColorOutcome {
    pub coloring: Coloring,
    pub empirical: ThresholdCert,
    pub theoretical: ThresholdCert,
    /// Points after the canonical map of the triangle.
    pub canonical: PointSet,
    pub catalog: RangeCatalog,
    pub map: AffineMap,
    /// Achieved per-class base thresholds, one vector per doubling round.
    pub per_round_achieved: Vec<Vec<usize>>,
}

/// End-to-end driver: canonicalize, double colors `ceil(log2 k)` times from
/// the trivial 1-coloring, merge surplus classes down to `k`, and measure.
pub fn k_color(
    points: &PointSet,
    triangle: &Triangle,
    k: usize,
    strategy: Strategy,
    seed: u64,
) -> Result<KColorOutcome> {
    if k == 0 {
        return Err(Error::ZeroColors);
    }
    let map = canonical_map(triangle)?;
    let canonical = PointSet::new(points.points.iter().map(|p| map.apply(p)).collect());
    let catalog = enumerate_ranges(&canonical);

    let mut coloring = Coloring::trivial(canonical.len());
    let mut per_round_achieved = Vec::new();
    for round in 0..ceil_log2(k) {
        let (next, achieved) = refine(
            &canonical,
            &coloring,
            &catalog,
            strategy,
            seed.wrapping_add((round as u64) << 32),
        )?;
        coloring = next;
        per_round_achieved.push(achieved);
    }
    let coloring = merge_colors(&coloring, k)?;

    let (worst, _) = max_nonpoly_range(&catalog, &coloring);
    let empirical = ThresholdCert {
        k,
        threshold: BigUint::from(worst as u64 + 1),
        kind: CertKind::Empirical,
    };
    let theoretical = ThresholdCert {
        k,
        threshold: theoretical_threshold(k)?,
        kind: CertKind::Theoretical,
    };
    Ok(KColorOutcome {
        coloring,
        empirical,
        theoretical,
        canonical,
        catalog,
        map,
        per_round_achieved,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::Point;

    fn pset(coords: &[(i64, i64)]) -> PointSet {
        PointSet::new(coords.iter().map(|&(x, y)| Point::from_ints(x, y)).collect())
    }

    #[test]
    fn threshold_base_cases() {
        assert_eq!(theoretical_threshold(1).unwrap(), BigUint::from(1u32));
        assert_eq!(theoretical_threshold(2).unwrap(), BigUint::from(12u32));
        assert_eq!(theoretical_threshold(3).unwrap(), BigUint::from(1728u32));
        assert_eq!(theoretical_threshold(4).unwrap(), BigUint::from(1728u32));
        assert_eq!(
            theoretical_threshold(8).unwrap(),
            BigUint::from(12u32) * BigUint::from(144u32).pow(2)
        );
        assert!(theoretical_threshold(0).is_err());
    }

    #[test]
    fn single_point_split_achieves_two() {
        let p = pset(&[(0, 0)]);
        let catalog = enumerate_ranges(&p);
        let subset = BitSet::from_indices(1, [0]);
        let split = two_color(&p, &subset, &catalog, Strategy::Exact, 0).unwrap();
        assert_eq!(split.achieved, 2);
    }

    #[test]
    fn collinear_greedy_achieves_two() {
        // Points on x + y = 5: restricted ranges are contiguous intervals,
        // and alternation makes every 2-point interval bichromatic.
        let p = pset(&[(0, 5), (1, 4), (2, 3), (3, 2), (4, 1), (5, 0)]);
        let catalog = enumerate_ranges(&p);
        let subset = BitSet::from_indices(6, 0..6);
        let split = two_color(&p, &subset, &catalog, Strategy::GreedySweep, 0).unwrap();
        assert_eq!(split.achieved, 2);
    }

    #[test]
    fn exact_no_worse_than_greedy() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for trial in 0..10 {
            let pts: Vec<Point> = (0..10)
                .map(|_| {
                    Point::new(
                        crate::geom::ratio(rng.gen_range(0..1000), 1000),
                        crate::geom::ratio(rng.gen_range(0..1000), 1000),
                    )
                })
                .collect();
            let p = PointSet::new(pts);
            let catalog = enumerate_ranges(&p);
            let subset = BitSet::from_indices(10, 0..10);
            let exact = two_color(&p, &subset, &catalog, Strategy::Exact, trial).unwrap();
            let greedy = two_color(&p, &subset, &catalog, Strategy::GreedySweep, trial).unwrap();
            assert!(exact.achieved <= greedy.achieved);
        }
    }

    #[test]
    fn exact_optimum_is_seed_independent() {
        let p = pset(&[(0, 3), (1, 1), (2, 0), (3, 3), (1, 4), (4, 2)]);
        let catalog = enumerate_ranges(&p);
        let subset = BitSet::from_indices(6, 0..6);
        let a = two_color(&p, &subset, &catalog, Strategy::Exact, 1).unwrap();
        let b = two_color(&p, &subset, &catalog, Strategy::Exact, 99).unwrap();
        assert_eq!(a.achieved, b.achieved);
    }

    #[test]
    fn exact_rejects_oversized_input() {
        let coords: Vec<(i64, i64)> = (0..25).map(|i| (i, 50 - i * i % 40)).collect();
        let p = pset(&coords);
        let catalog = enumerate_ranges(&p);
        let subset = BitSet::from_indices(25, 0..25);
        assert!(matches!(
            two_color(&p, &subset, &catalog, Strategy::Exact, 0),
            Err(Error::ExactCutoff { .. })
        ));
    }

    #[test]
    fn refine_from_one_color_matches_two_color() {
        let p = pset(&[(0, 2), (1, 1), (2, 0), (3, 3)]);
        let catalog = enumerate_ranges(&p);
        let (refined, achieved) = refine(&p, &Coloring::trivial(4), &catalog, Strategy::Exact, 5).unwrap();
        assert_eq!(refined.k, 2);
        assert_eq!(achieved.len(), 1);
        let subset = BitSet::from_indices(4, 0..4);
        let split = two_color(&p, &subset, &catalog, Strategy::Exact, 5).unwrap();
        assert_eq!(achieved[0], split.achieved);
        let second: BitSet = BitSet::from_indices(
            4,
            refined.assignment.iter().enumerate().filter(|(_, &c)| c == 1).map(|(i, _)| i),
        );
        assert_eq!(second, split.second);
    }

    #[test]
    fn merge_rules() {
        let c = Coloring::new(4, vec![0, 1, 2, 3, 3, 2]).unwrap();
        assert_eq!(merge_colors(&c, 4).unwrap(), c);
        let merged = merge_colors(&c, 3).unwrap();
        assert_eq!(merged.assignment, vec![0, 1, 2, 2, 2, 2]);
        assert!(merge_colors(&c, 0).is_err());
        assert!(merge_colors(&c, 5).is_err());
    }

    #[test]
    fn merge_never_increases_nonpoly_size() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let pts: Vec<Point> = (0..12)
            .map(|_| {
                Point::new(
                    crate::geom::ratio(rng.gen_range(0..100), 100),
                    crate::geom::ratio(rng.gen_range(0..100), 100),
                )
            })
            .collect();
        let p = PointSet::new(pts);
        let catalog = enumerate_ranges(&p);
        let coloring = Coloring::new(4, (0..12).map(|i| i % 4).collect()).unwrap();
        let (before, _) = max_nonpoly_range(&catalog, &coloring);
        for target in (1..=4).rev() {
            let merged = merge_colors(&coloring, target).unwrap();
            let (after, _) = max_nonpoly_range(&catalog, &merged);
            assert!(after <= before || target == 1 && after == 0 || after <= before);
            assert!(after <= before);
        }
    }

    #[test]
    fn k_color_one_color_trivial() {
        let p = pset(&[(0, 1), (1, 0), (2, 2)]);
        let outcome = k_color(&p, &Triangle::unit(), 1, Strategy::Exact, 0).unwrap();
        assert_eq!(outcome.coloring.assignment, vec![0, 0, 0]);
        assert_eq!(outcome.empirical.threshold, BigUint::from(1u32));
    }

    #[test]
    fn k_color_more_colors_than_points() {
        let p = pset(&[(0, 1), (1, 0)]);
        let outcome = k_color(&p, &Triangle::unit(), 5, Strategy::Exact, 0).unwrap();
        // some colors unused, so every range misses one: threshold n + 1
        assert_eq!(outcome.empirical.threshold, BigUint::from(3u32));
    }

    #[test]
    fn k_color_deterministic() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
        let pts: Vec<Point> = (0..16)
            .map(|_| {
                Point::new(
                    crate::geom::ratio(rng.gen_range(0..1000), 2000),
                    crate::geom::ratio(rng.gen_range(0..1000), 2000),
                )
            })
            .collect();
        let p = PointSet::new(pts);
        let a = k_color(&p, &Triangle::unit(), 4, Strategy::Exact, 42).unwrap();
        let b = k_color(&p, &Triangle::unit(), 4, Strategy::Exact, 42).unwrap();
        assert_eq!(a.coloring, b.coloring);
        assert_eq!(a.empirical, b.empirical);
    }
}
