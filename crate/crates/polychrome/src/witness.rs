//! Mechanized replay of the doubling argument: given a violation at the
//! doubled level, derive a violation one level down.
//!
//! The chain: a homothet with at least `c^2 t` points missing one of the 2k
//! colors either holds `c` points of the parent class (so the class split
//! itself failed), or holds fewer than `c`, in which case the sweep order
//! contains a long run `Q` free of the parent color. The run is covered by at
//! most `|R| + 1` quadrant translates that avoid the parent-colored points
//! `R` preceding it; the fullest quadrant, capped by the sweepline through
//! the last point of `Q`, is a homothet with at least `t` points and no point
//! of the parent color.

use crate::bits::BitSet;
use crate::coloring::Coloring;
use crate::geom::{Homothet, Point, Scalar};
use crate::ranges::{minimal_witness, range_of, PointSet};
use crate::verify::Violation;
use crate::{Error, Result};

/// Quadrant translate whose corner may be open on either side.
///
/// The staircase construction needs corners strictly right of or strictly
/// above points of `R`. Exact rationals have no "next value", so instead of
/// perturbing by a concrete epsilon the corner stores an open-side flag and
/// containment uses strict inequality there.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverQuadrant {
    pub a: Scalar,
    pub b: Scalar,
    pub open_x: bool,
    pub open_y: bool,
}

impl CoverQuadrant {
    pub fn contains(&self, p: &Point) -> bool {
        let x_ok = if self.open_x { p.x > self.a } else { p.x >= self.a };
        let y_ok = if self.open_y { p.y > self.b } else { p.y >= self.b };
        x_ok && y_ok
    }
}

/// Cover the points of `Q` with at most `|R| + 1` quadrants, none of which
/// contains a point of `R`.
///
/// Precondition: no point of `R` dominates a point of `Q` (automatic in the
/// doubling argument, where all of `R` precedes `Q` in sweep order). The
/// valid-corner region `{(a,b) : every r has a > r.x or b > r.y}` is
/// upward closed with one concave corner per dominance-maximal point of `R`;
/// quadrants anchored at those corners cover it, and `Q` lies inside it.
pub fn quadrant_cover(q_points: &[Point], r_points: &[Point]) -> Result<Vec<CoverQuadrant>> {
    for r in r_points {
        for q in q_points {
            if r.dominates(q) {
                return Err(Error::DominancePrecondition {
                    rx: r.x.clone(),
                    ry: r.y.clone(),
                    qx: q.x.clone(),
                    qy: q.y.clone(),
                });
            }
        }
    }
    if q_points.is_empty() {
        return Ok(Vec::new());
    }
    let min_qx = q_points.iter().map(|p| &p.x).min().unwrap().clone();
    let min_qy = q_points.iter().map(|p| &p.y).min().unwrap().clone();
    if r_points.is_empty() {
        return Ok(vec![CoverQuadrant { a: min_qx, b: min_qy, open_x: false, open_y: false }]);
    }

    // Dominance-maximal points of R: strictly increasing x, strictly
    // decreasing y.
    let mut sorted: Vec<&Point> = r_points.iter().collect();
    sorted.sort_by(|p, q| (&p.x, &p.y).cmp(&(&q.x, &q.y)));
    let mut staircase: Vec<&Point> = Vec::new();
    for p in sorted.into_iter().rev() {
        match staircase.last() {
            Some(last) if p.y <= last.y => {}
            _ => staircase.push(p),
        }
    }
    staircase.reverse(); // x ascending, y descending

    let mut cover = Vec::with_capacity(staircase.len() + 1);
    cover.push(CoverQuadrant {
        a: min_qx,
        b: staircase[0].y.clone(),
        open_x: false,
        open_y: true,
    });
    for w in staircase.windows(2) {
        cover.push(CoverQuadrant {
            a: w[0].x.clone(),
            b: w[1].y.clone(),
            open_x: true,
            open_y: true,
        });
    }
    cover.push(CoverQuadrant {
        a: staircase[staircase.len() - 1].x.clone(),
        b: min_qy,
        open_x: true,
        open_y: false,
    });
    Ok(cover)
}

/// Which side of the doubling argument produced the derived violation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DerivedKind {
    /// A homothet with at least `c` points of the parent class left
    /// monochromatic by its split.
    ClassSplit,
    /// A homothet with at least `t` points missing the parent color.
    ParentColoring,
}

/// All artifacts of one replay of the doubling argument.
#[derive(Clone, Debug)]
pub struct WitnessTrace {
    pub violating: Homothet,
    /// The missing refined color.
    pub missing: usize,
    /// Its parent class under the coarser coloring.
    pub parent_color: usize,
    /// The run: indices of the chosen parent-color-free block, sweep order.
    pub q_indices: Vec<usize>,
    /// Parent-color points strictly before the run in sweep order.
    pub r_indices: Vec<usize>,
    pub cover: Vec<CoverQuadrant>,
    pub derived: Violation,
    pub kind: DerivedKind,
}

/// Replay the doubling argument on a concrete violation.
///
/// `parent` is the k-coloring, `refined` the 2k-coloring obtained by
/// splitting its classes, `c` the claimed split threshold and `t` the claimed
/// parent threshold. The violating homothet must contain at least `c^2 * t`
/// points, none of the missing refined color.
pub fn witness_extract(
    points: &PointSet,
    parent: &Coloring,
    refined: &Coloring,
    viol: &Violation,
    c: usize,
    t: usize,
) -> Result<WitnessTrace> {
    if c == 0 || t == 0 {
        return Err(Error::WitnessPrecondition("thresholds c and t must be positive".into()));
    }
    if refined.k != 2 * parent.k {
        return Err(Error::WitnessPrecondition(format!(
            "refined coloring has {} colors, expected {}",
            refined.k,
            2 * parent.k
        )));
    }
    if parent
        .assignment
        .iter()
        .zip(&refined.assignment)
        .any(|(&p, &r)| r / 2 != p)
    {
        return Err(Error::WitnessPrecondition(
            "refined coloring does not refine the parent coloring".into(),
        ));
    }
    let members = range_of(&viol.homothet, points);
    let total = members.count();
    if total < c * c * t {
        return Err(Error::WitnessPrecondition(format!(
            "violating homothet contains {total} points, needs at least {}",
            c * c * t
        )));
    }
    if members.iter().any(|i| refined.assignment[i] == viol.missing_color) {
        return Err(Error::WitnessPrecondition(
            "claimed missing color is present in the violating homothet".into(),
        ));
    }
    let parent_color = viol.missing_color / 2;

    let class_in_viol: Vec<usize> = members
        .iter()
        .filter(|&i| parent.assignment[i] == parent_color)
        .collect();
    if class_in_viol.len() >= c {
        // The split of the parent class failed outright: at least c of its
        // points sit in the homothet yet one split color is absent.
        let bits = BitSet::from_indices(points.len(), class_in_viol.iter().copied());
        let derived = Violation {
            homothet: minimal_witness(&points.points, &bits),
            missing_color: viol.missing_color,
            size: class_in_viol.len(),
        };
        debug_assert!(derived.homothet.is_subset(&viol.homothet));
        return Ok(WitnessTrace {
            violating: viol.homothet.clone(),
            missing: viol.missing_color,
            parent_color,
            q_indices: Vec::new(),
            r_indices: Vec::new(),
            cover: Vec::new(),
            derived,
            kind: DerivedKind::ClassSplit,
        });
    }

    // Fewer than c parent-color points: pigeonhole guarantees a
    // parent-color-free run of length c*t in sweep order.
    debug_assert!((c * c * t - c + 1).div_ceil(c) >= c * t);
    let mut sequence: Vec<usize> = members.iter().collect();
    sequence.sort_by(|&i, &j| points.points[i].sweep_key().cmp(&points.points[j].sweep_key()));

    let mut blocks: Vec<(usize, usize)> = Vec::new(); // [start, end) positions
    let mut start = 0;
    for (pos, &i) in sequence.iter().enumerate() {
        if parent.assignment[i] == parent_color {
            if pos > start {
                blocks.push((start, pos));
            }
            start = pos + 1;
        }
    }
    if sequence.len() > start {
        blocks.push((start, sequence.len()));
    }
    // Longest block, earliest on ties.
    let &(q_start, q_end) = blocks
        .iter()
        .max_by_key(|(s, e)| (e - s, usize::MAX - s))
        .ok_or_else(|| Error::InternalInvariant("no parent-color-free block".into()))?;
    if q_end - q_start < c * t {
        return Err(Error::InternalInvariant(format!(
            "longest run has {} points, pigeonhole requires {}",
            q_end - q_start,
            c * t
        )));
    }
    let q_indices: Vec<usize> = sequence[q_start..q_end].to_vec();
    let r_indices: Vec<usize> = sequence[..q_start]
        .iter()
        .copied()
        .filter(|&i| parent.assignment[i] == parent_color)
        .collect();
    debug_assert!(r_indices.len() < c);

    let q_points: Vec<Point> = q_indices.iter().map(|&i| points.points[i].clone()).collect();
    let r_points: Vec<Point> = r_indices.iter().map(|&i| points.points[i].clone()).collect();
    let cover = quadrant_cover(&q_points, &r_points)?;

    // Fullest quadrant; ties by smallest corner.
    let mut best: Option<(usize, &CoverQuadrant)> = None;
    for quad in &cover {
        let count = q_points.iter().filter(|p| quad.contains(p)).count();
        let better = match &best {
            None => true,
            Some((bc, bq)) => count > *bc || (count == *bc && (&quad.a, &quad.b) < (&bq.a, &bq.b)),
        };
        if better {
            best = Some((count, quad));
        }
    }
    let (_, quad) = best.ok_or_else(|| Error::InternalInvariant("empty quadrant cover".into()))?;
    let mut contained: Vec<usize> = q_indices
        .iter()
        .copied()
        .filter(|&i| quad.contains(&points.points[i]))
        .collect();

    // Shrink to the bounding homothet of the contained run points. A parent-
    // color point can then only sneak in on the final sweepline (equal
    // coordinate sum, later tie order); dropping that sweepline and repeating
    // restores the invariant. Only degenerate sum ties ever take the loop.
    let derived_homothet = loop {
        if contained.len() < t {
            return Err(Error::InternalInvariant(format!(
                "best quadrant retains {} points, pigeonhole requires {t}",
                contained.len()
            )));
        }
        let bits = BitSet::from_indices(points.len(), contained.iter().copied());
        let h = minimal_witness(&points.points, &bits);
        let h_members = range_of(&h, points);
        if h_members.iter().all(|i| parent.assignment[i] != parent_color) {
            break h;
        }
        let max_sum = contained
            .iter()
            .map(|&i| &points.points[i].x + &points.points[i].y)
            .max()
            .unwrap();
        contained.retain(|&i| &points.points[i].x + &points.points[i].y < max_sum);
    };

    let derived = Violation {
        homothet: derived_homothet,
        missing_color: parent_color,
        size: contained.len(),
    };
    debug_assert!(derived.homothet.is_subset(&viol.homothet));
    Ok(WitnessTrace {
        violating: viol.homothet.clone(),
        missing: viol.missing_color,
        parent_color,
        q_indices,
        r_indices,
        cover,
        derived,
        kind: DerivedKind::ParentColoring,
    })
}
