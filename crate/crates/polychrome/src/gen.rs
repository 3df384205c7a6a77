//! Deterministic instance generators.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::geom::{ratio, Point, Triangle};
use crate::ranges::PointSet;
use crate::{Error, Result};

/// A concrete problem instance: a triangle, a point set, and how it was made.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub triangle: Triangle,
    pub points: PointSet,
    pub meta: Option<Metadata>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Metadata {
    pub generator: String,
    pub seed: u64,
    pub n: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GeneratorKind {
    /// Rational coordinates uniform in the unit triangle.
    UniformRandom,
    /// Square lattice scaled into the unit triangle.
    Grid,
    /// Points on a single line of slope -1 (every coordinate sum equal).
    CollinearDiagonal,
    /// A dominance antichain along a convex staircase.
    StaircaseAdversarial,
}

impl std::str::FromStr for GeneratorKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "uniform-random" => Ok(GeneratorKind::UniformRandom),
            "grid" => Ok(GeneratorKind::Grid),
            "collinear-diagonal" => Ok(GeneratorKind::CollinearDiagonal),
            "staircase-adversarial" => Ok(GeneratorKind::StaircaseAdversarial),
            other => Err(Error::Parse(format!("unknown generator kind `{other}`"))),
        }
    }
}

impl std::fmt::Display for GeneratorKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            GeneratorKind::UniformRandom => "uniform-random",
            GeneratorKind::Grid => "grid",
            GeneratorKind::CollinearDiagonal => "collinear-diagonal",
            GeneratorKind::StaircaseAdversarial => "staircase-adversarial",
        };
        write!(f, "{name}")
    }
}

/// Deterministic for fixed `(kind, n, seed)`; all coordinates exact.
pub fn generate(kind: GeneratorKind, n: usize, seed: u64) -> Instance {
    let points = match kind {
        GeneratorKind::UniformRandom => uniform_random(n, seed),
        GeneratorKind::Grid => grid(n),
        GeneratorKind::CollinearDiagonal => collinear_diagonal(n),
        GeneratorKind::StaircaseAdversarial => staircase(n),
    };
    Instance {
        triangle: Triangle::unit(),
        points: PointSet::new(points),
        meta: Some(Metadata { generator: kind.to_string(), seed, n }),
    }
}

fn uniform_random(n: usize, seed: u64) -> Vec<Point> {
    const DEN: i64 = 1 << 20;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let u = rng.gen_range(0..=DEN);
        let v = rng.gen_range(0..=DEN);
        if u + v <= DEN {
            out.push(Point::new(ratio(u, DEN), ratio(v, DEN)));
        }
    }
    out
}

/// `ceil(sqrt(n))`-sided lattice `(i, j) / (2 (m - 1))`, row-major, truncated
/// to `n` points. The scaling puts the whole square inside the unit triangle.
fn grid(n: usize) -> Vec<Point> {
    let m = (1..).find(|&m| m * m >= n).unwrap_or(1);
    let den = if m > 1 { 2 * (m as i64 - 1) } else { 1 };
    let mut out = Vec::with_capacity(n);
    'outer: for i in 0..m {
        for j in 0..m {
            if out.len() == n {
                break 'outer;
            }
            out.push(Point::new(ratio(i as i64, den), ratio(j as i64, den)));
        }
    }
    out
}

/// `n` points with equal coordinate sum 1/2.
fn collinear_diagonal(n: usize) -> Vec<Point> {
    let den = 2 * n as i64;
    (0..n as i64)
        .map(|i| Point::new(ratio(i, den), ratio(n as i64 - i, den)))
        .collect()
}

/// `x_i = i / 2n`, `y_i = (n - i)^2 / 2n^2`: x strictly increasing, y
/// strictly decreasing, so no point dominates another.
fn staircase(n: usize) -> Vec<Point> {
    let nn = n as i64;
    (0..nn)
        .map(|i| Point::new(ratio(i, 2 * nn), ratio((nn - i) * (nn - i), 2 * nn * nn)))
        .collect()
}

/// A random invertible rational affine map, for invariance testing.
pub fn random_affine_map(seed: u64) -> crate::geom::AffineMap {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let entry = |rng: &mut ChaCha8Rng| ratio(rng.gen_range(-12..=12), rng.gen_range(1..=4));
        let m = [
            [entry(&mut rng), entry(&mut rng)],
            [entry(&mut rng), entry(&mut rng)],
        ];
        let t = [entry(&mut rng), entry(&mut rng)];
        if let Ok(map) = crate::geom::AffineMap::new(m, t) {
            return map;
        }
    }
}

/// Map an entire instance through an affine map.
pub fn transform_instance(instance: &Instance, map: &crate::geom::AffineMap) -> Instance {
    Instance {
        triangle: Triangle {
            v0: map.apply(&instance.triangle.v0),
            v1: map.apply(&instance.triangle.v1),
            v2: map.apply(&instance.triangle.v2),
        },
        points: PointSet::new(instance.points.points.iter().map(|p| map.apply(p)).collect()),
        meta: instance.meta.clone(),
    }
}
