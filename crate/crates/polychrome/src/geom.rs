//! Exact rational planar primitives.
//!
//! Everything downstream assumes triangles have been normalized to the unit
//! right triangle, after which each homothet is the region
//! `{x >= a, y >= b, x + y <= s}` (closed on all sides). All arithmetic is
//! over arbitrary-precision rationals; there is no floating point anywhere in
//! a predicate.

use num::{BigRational, Zero};

use crate::{Error, Result};

/// Exact rational coordinate. `BigRational` keeps lowest terms and a
/// positive denominator by construction.
pub type Scalar = BigRational;

/// Scalar from an integer.
pub fn scalar(n: i64) -> Scalar {
    BigRational::from_integer(n.into())
}

/// Scalar from a fraction (denominator nonzero).
pub fn ratio(num: i64, den: i64) -> Scalar {
    BigRational::new(num.into(), den.into())
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point {
    pub x: Scalar,
    pub y: Scalar,
}

impl Point {
    pub fn new(x: Scalar, y: Scalar) -> Self {
        Point { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Point::new(scalar(x), scalar(y))
    }

    /// Key realizing the sweep by a line of slope -1: points are processed in
    /// non-decreasing `x + y`, ties broken lexicographically by `(x, y)`.
    pub fn sweep_key(&self) -> (Scalar, Scalar, Scalar) {
        (&self.x + &self.y, self.x.clone(), self.y.clone())
    }

    /// Weak dominance: `self.x >= other.x` and `self.y >= other.y`.
    pub fn dominates(&self, other: &Point) -> bool {
        self.x >= other.x && self.y >= other.y
    }
}

impl std::fmt::Debug for Point {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// An arbitrary non-degenerate triangle in world coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triangle {
    pub v0: Point,
    pub v1: Point,
    pub v2: Point,
}

impl Triangle {
    /// Fails on collinear vertices.
    pub fn new(v0: Point, v1: Point, v2: Point) -> Result<Self> {
        let t = Triangle { v0, v1, v2 };
        if t.signed_area_doubled().is_zero() {
            return Err(Error::DegenerateTriangle);
        }
        Ok(t)
    }

    /// The unit right triangle with vertices (0,0), (1,0), (0,1).
    pub fn unit() -> Self {
        Triangle {
            v0: Point::from_ints(0, 0),
            v1: Point::from_ints(1, 0),
            v2: Point::from_ints(0, 1),
        }
    }

    pub fn signed_area_doubled(&self) -> Scalar {
        let ax = &self.v1.x - &self.v0.x;
        let ay = &self.v1.y - &self.v0.y;
        let bx = &self.v2.x - &self.v0.x;
        let by = &self.v2.y - &self.v0.y;
        ax * by - ay * bx
    }

    // Sorted by (y, x), which makes the unit right triangle come out in the
    // order ((0,0), (1,0), (0,1)) and therefore map to itself identically.
    fn sorted_vertices(&self) -> [&Point; 3] {
        let mut vs = [&self.v0, &self.v1, &self.v2];
        vs.sort_by(|p, q| (&p.y, &p.x).cmp(&(&q.y, &q.x)));
        vs
    }
}

/// Invertible affine map `p -> M p + t` with exact rational entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineMap {
    /// Row-major linear part.
    pub m: [[Scalar; 2]; 2],
    pub t: [Scalar; 2],
}

impl AffineMap {
    pub fn new(m: [[Scalar; 2]; 2], t: [Scalar; 2]) -> Result<Self> {
        let map = AffineMap { m, t };
        if map.determinant().is_zero() {
            return Err(Error::SingularMap);
        }
        Ok(map)
    }

    pub fn identity() -> Self {
        AffineMap {
            m: [[scalar(1), scalar(0)], [scalar(0), scalar(1)]],
            t: [scalar(0), scalar(0)],
        }
    }

    pub fn determinant(&self) -> Scalar {
        &self.m[0][0] * &self.m[1][1] - &self.m[0][1] * &self.m[1][0]
    }

    pub fn apply(&self, p: &Point) -> Point {
        Point::new(
            &self.m[0][0] * &p.x + &self.m[0][1] * &p.y + &self.t[0],
            &self.m[1][0] * &p.x + &self.m[1][1] * &p.y + &self.t[1],
        )
    }

    pub fn inverse(&self) -> AffineMap {
        let det = self.determinant();
        debug_assert!(!det.is_zero());
        let inv = [
            [&self.m[1][1] / &det, -(&self.m[0][1] / &det)],
            [-(&self.m[1][0] / &det), &self.m[0][0] / &det],
        ];
        // t' = -M^{-1} t
        let tx = -(&inv[0][0] * &self.t[0] + &inv[0][1] * &self.t[1]);
        let ty = -(&inv[1][0] * &self.t[0] + &inv[1][1] * &self.t[1]);
        AffineMap { m: inv, t: [tx, ty] }
    }

    /// `self` after `other`: `(self * other)(p) = self(other(p))`.
    pub fn compose(&self, other: &AffineMap) -> AffineMap {
        let mut m = [[scalar(0), scalar(0)], [scalar(0), scalar(0)]];
        for i in 0..2 {
            for j in 0..2 {
                m[i][j] = &self.m[i][0] * &other.m[0][j] + &self.m[i][1] * &other.m[1][j];
            }
        }
        let t = [
            &self.m[0][0] * &other.t[0] + &self.m[0][1] * &other.t[1] + &self.t[0],
            &self.m[1][0] * &other.t[0] + &self.m[1][1] * &other.t[1] + &self.t[1],
        ];
        AffineMap { m, t }
    }

    pub fn is_identity(&self) -> bool {
        self == &AffineMap::identity()
    }
}

/// The unique affine map sending `T`'s lexicographically sorted vertices
/// `(v0, v1, v2)` to `(0,0), (1,0), (0,1)`.
///
/// Any fixed vertex correspondence works: conjugating by an invertible affine
/// map sends homothets of `T` bijectively to homothets of the image. Sorting
/// pins the correspondence so canonicalization is reproducible.
pub fn canonical_map(triangle: &Triangle) -> Result<AffineMap> {
    if triangle.signed_area_doubled().is_zero() {
        return Err(Error::DegenerateTriangle);
    }
    let [v0, v1, v2] = triangle.sorted_vertices();
    // M [v1-v0 | v2-v0] = I, so M is the inverse of the edge matrix.
    let edges = AffineMap::new(
        [
            [&v1.x - &v0.x, &v2.x - &v0.x],
            [&v1.y - &v0.y, &v2.y - &v0.y],
        ],
        [scalar(0), scalar(0)],
    )?;
    let linear = edges.inverse();
    let tx = -(&linear.m[0][0] * &v0.x + &linear.m[0][1] * &v0.y);
    let ty = -(&linear.m[1][0] * &v0.x + &linear.m[1][1] * &v0.y);
    Ok(AffineMap { m: linear.m, t: [tx, ty] })
}

/// Canonical homothet `{x >= a, y >= b, x + y <= s}`, closed on all sides.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Homothet {
    pub a: Scalar,
    pub b: Scalar,
    pub s: Scalar,
}

impl Homothet {
    pub fn new(a: Scalar, b: Scalar, s: Scalar) -> Self {
        Homothet { a, b, s }
    }

    /// Nonempty iff `a + b <= s`.
    pub fn is_nonempty(&self) -> bool {
        &self.a + &self.b <= self.s
    }

    pub fn contains(&self, p: &Point) -> bool {
        p.x >= self.a && p.y >= self.b && &p.x + &p.y <= self.s
    }

    /// Field-wise containment test: `self` is a subset of `other` exactly
    /// when `a >= other.a`, `b >= other.b`, `s <= other.s`.
    pub fn is_subset(&self, other: &Homothet) -> bool {
        self.a >= other.a && self.b >= other.b && self.s <= other.s
    }

    /// Corner vertices `(a,b), (s-b,b), (a,s-a)` mapped back to world
    /// coordinates through `inv` (the inverse canonical map).
    pub fn to_world(&self, inv: &AffineMap) -> Triangle {
        Triangle {
            v0: inv.apply(&Point::new(self.a.clone(), self.b.clone())),
            v1: inv.apply(&Point::new(&self.s - &self.b, self.b.clone())),
            v2: inv.apply(&Point::new(self.a.clone(), &self.s - &self.a)),
        }
    }
}

impl std::fmt::Debug for Homothet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Homothet(a={}, b={}, s={})", self.a, self.b, self.s)
    }
}

/// Closed translate of the first quadrant, `{x >= a, y >= b}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quadrant {
    pub a: Scalar,
    pub b: Scalar,
}

impl Quadrant {
    pub fn new(a: Scalar, b: Scalar) -> Self {
        Quadrant { a, b }
    }

    pub fn contains(&self, p: &Point) -> bool {
        p.x >= self.a && p.y >= self.b
    }

    /// Intersect with the halfplane `x + y <= s`. Requires `s >= a + b` so
    /// the result is a nonempty homothet.
    pub fn cap(&self, s: Scalar) -> Homothet {
        debug_assert!(&self.a + &self.b <= s);
        Homothet::new(self.a.clone(), self.b.clone(), s)
    }
}

/// Sort point indices by sweep order (slope -1 line, lexicographic ties).
pub fn sweep_order(points: &[Point]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..points.len()).collect();
    idx.sort_by(|&i, &j| points[i].sweep_key().cmp(&points[j].sweep_key()));
    idx
}
