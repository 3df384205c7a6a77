//! Enumeration of all combinatorially distinct homothet ranges over a
//! canonicalized point set.
//!
//! Completeness: if a homothet `H` cuts the nonempty subset `S` out of `P`,
//! shrink it to the minimal witness `a = min x`, `b = min y`,
//! `s = max (x+y)` over `S`. The shrunk homothet still cuts exactly `S`, and
//! its parameters are point coordinates. So sweeping `a` over the distinct
//! x-values, `b` over the distinct y-values, and `s` over the distinct
//! coordinate sums captures every realizable subset; deduplication is by
//! membership bitset, since the polychromaticity question only sees subsets.

use std::collections::BTreeMap;

use crate::bits::BitSet;
use crate::coloring::Coloring;
use crate::geom::{Homothet, Point, Scalar};

/// An indexed point set. Indices are stable: colorings, bitmasks, and file
/// formats all refer to the input order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointSet {
    pub points: Vec<Point>,
}

impl PointSet {
    pub fn new(points: Vec<Point>) -> Self {
        PointSet { points }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// A distinct range: the subset it cuts plus its minimal witness homothet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Range {
    pub homothet: Homothet,
    pub members: BitSet,
}

impl Range {
    pub fn size(&self) -> usize {
        self.members.count()
    }
}

/// All combinatorially distinct nonempty ranges, sorted by membership bitset.
#[derive(Clone, Debug)]
pub struct RangeCatalog {
    pub ranges: Vec<Range>,
    pub n: usize,
}

impl RangeCatalog {
    pub fn len(&self) -> usize {
        self.ranges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ranges.is_empty()
    }

    /// Restrict every range to `subset`, drop empties, re-deduplicate.
    /// Returned bitsets keep global indices and come out sorted.
    pub fn restrict(&self, subset: &BitSet) -> Vec<BitSet> {
        let mut seen: Vec<BitSet> = self
            .ranges
            .iter()
            .map(|r| r.members.intersection(subset))
            .filter(|b| !b.is_empty())
            .collect();
        seen.sort();
        seen.dedup();
        seen
    }
}

/// The minimal witness homothet of a nonempty member list.
pub fn minimal_witness(points: &[Point], members: &BitSet) -> Homothet {
    let mut it = members.iter();
    let first = it.next().expect("nonempty members");
    let mut a = points[first].x.clone();
    let mut b = points[first].y.clone();
    let mut s = &points[first].x + &points[first].y;
    for i in it {
        let p = &points[i];
        if p.x < a {
            a = p.x.clone();
        }
        if p.y < b {
            b = p.y.clone();
        }
        let sum = &p.x + &p.y;
        if sum > s {
            s = sum;
        }
    }
    Homothet::new(a, b, s)
}

/// Exact membership bitset of `h` over `p`.
pub fn range_of(h: &Homothet, p: &PointSet) -> BitSet {
    let mut b = BitSet::new(p.len());
    for (i, pt) in p.points.iter().enumerate() {
        if h.contains(pt) {
            b.insert(i);
        }
    }
    b
}

/// Enumerate every distinct nonempty range of `p`.
///
/// For each candidate corner `(a, b)` the realizable subsets are exactly the
/// prefixes of the dominated points in coordinate-sum order, one per distinct
/// sum, so the scan is O(n^3) bitset operations rather than the naive O(n^4).
pub fn enumerate_ranges(p: &PointSet) -> RangeCatalog {
    let n = p.len();
    // Rank coordinates once so the cubic scan compares machine integers.
    let rank = |values: Vec<Scalar>| -> (Vec<Scalar>, Vec<usize>) {
        let mut sorted = values.clone();
        sorted.sort();
        sorted.dedup();
        let ranks = values
            .iter()
            .map(|v| sorted.binary_search(v).unwrap())
            .collect();
        (sorted, ranks)
    };
    let (xs, x_rank) = rank(p.points.iter().map(|q| q.x.clone()).collect());
    let (ys, y_rank) = rank(p.points.iter().map(|q| q.y.clone()).collect());
    let (sums, sum_rank) = rank(p.points.iter().map(|q| &q.x + &q.y).collect());

    // Point indices in sweep-sum order, grouped by equal sum downstream.
    let mut by_sum: Vec<usize> = (0..n).collect();
    by_sum.sort_by_key(|&i| sum_rank[i]);

    let mut by_members: BTreeMap<BitSet, (usize, usize, usize)> = BTreeMap::new();
    for ai in 0..xs.len() {
        for bi in 0..ys.len() {
            // Realizable subsets for this corner are the prefixes of the
            // dominated points in sum order, one per distinct sum.
            let mut members = BitSet::new(n);
            let mut witness: Option<(usize, usize, usize)> = None;
            let mut pos = 0;
            while pos < by_sum.len() {
                let group_sum = sum_rank[by_sum[pos]];
                let mut grew = false;
                while pos < by_sum.len() && sum_rank[by_sum[pos]] == group_sum {
                    let i = by_sum[pos];
                    pos += 1;
                    if x_rank[i] >= ai && y_rank[i] >= bi {
                        members.insert(i);
                        grew = true;
                        witness = Some(match witness {
                            None => (x_rank[i], y_rank[i], sum_rank[i]),
                            Some((wa, wb, ws)) => {
                                (wa.min(x_rank[i]), wb.min(y_rank[i]), ws.max(sum_rank[i]))
                            }
                        });
                    }
                }
                if grew {
                    by_members.entry(members.clone()).or_insert(witness.unwrap());
                }
            }
        }
    }

    let ranges = by_members
        .into_iter()
        .map(|(members, (wa, wb, ws))| Range {
            homothet: Homothet::new(xs[wa].clone(), ys[wb].clone(), sums[ws].clone()),
            members,
        })
        .collect();
    RangeCatalog { ranges, n }
}

/// Reference implementation: try every support triple `(a, b, s)` and
/// recompute membership point by point. Quartic; must agree with
/// [`enumerate_ranges`].
pub fn enumerate_ranges_naive(p: &PointSet) -> RangeCatalog {
    let n = p.len();
    let mut by_members: BTreeMap<BitSet, Homothet> = BTreeMap::new();
    for pa in &p.points {
        for pb in &p.points {
            for ps in &p.points {
                let h = Homothet::new(pa.x.clone(), pb.y.clone(), &ps.x + &ps.y);
                if !h.is_nonempty() {
                    continue;
                }
                let members = range_of(&h, p);
                if members.is_empty() {
                    continue;
                }
                by_members
                    .entry(members.clone())
                    .or_insert_with(|| minimal_witness(&p.points, &members));
            }
        }
    }
    let ranges = by_members
        .into_iter()
        .map(|(members, homothet)| Range { homothet, members })
        .collect();
    RangeCatalog { ranges, n }
}

/// Maximum cardinality over ranges missing at least one color, with a
/// witness. `(0, None)` when every range is polychromatic. Ties resolve to
/// the smallest missing color, then the smallest membership bitset.
pub fn max_nonpoly_range<'a>(
    catalog: &'a RangeCatalog,
    coloring: &Coloring,
) -> (usize, Option<(&'a Range, usize)>) {
    let classes = coloring.class_bitsets(catalog.n);
    let mut best: Option<(usize, usize, &Range)> = None;
    for range in &catalog.ranges {
        let missing = classes.iter().position(|cls| !cls.intersects(&range.members));
        if let Some(color) = missing {
            let size = range.size();
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
    match best {
        Some((size, color, range)) => (size, Some((range, color))),
        None => (0, None),
    }
}
