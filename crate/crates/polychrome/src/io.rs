//! Flat-file formats: point/instance files, coloring documents, catalog CSV,
//! witness traces, experiment reports.
//!
//! Point files are UTF-8 text, one `x y` pair per line, rationals written
//! `num/den` (bare integers allowed), `#` comments and blank lines ignored.
//! The triangle and generator metadata ride in structured comment lines so a
//! plain list of points is also a valid instance (unit triangle assumed).
//! Everything round-trips bit-exactly; rationals are always in lowest terms.

use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::coloring::Coloring;
use crate::gen::{Instance, Metadata};
use crate::geom::{Homothet, Point, Scalar, Triangle};
use crate::ranges::{PointSet, RangeCatalog};
use crate::verify::Violation;
use crate::witness::{CoverQuadrant, DerivedKind, WitnessTrace};
use crate::{Error, Result};

pub fn parse_scalar(s: &str) -> Result<Scalar> {
    Scalar::from_str(s.trim()).map_err(|e| Error::Parse(format!("bad rational `{s}`: {e}")))
}

fn parse_point(s: &str) -> Result<Point> {
    let mut it = s.split_whitespace();
    let (Some(x), Some(y), None) = (it.next(), it.next(), it.next()) else {
        return Err(Error::Parse(format!("expected `x y`, got `{s}`")));
    };
    Ok(Point::new(parse_scalar(x)?, parse_scalar(y)?))
}

/// `"x0,y0 x1,y1 x2,y2"`.
pub fn parse_triangle(s: &str) -> Result<Triangle> {
    let mut vs = Vec::new();
    for part in s.split_whitespace() {
        let (x, y) = part
            .split_once(',')
            .ok_or_else(|| Error::Parse(format!("expected `x,y`, got `{part}`")))?;
        vs.push(Point::new(parse_scalar(x)?, parse_scalar(y)?));
    }
    if vs.len() != 3 {
        return Err(Error::Parse(format!("triangle needs 3 vertices, got {}", vs.len())));
    }
    let mut it = vs.into_iter();
    Triangle::new(it.next().unwrap(), it.next().unwrap(), it.next().unwrap())
}

pub fn format_triangle(t: &Triangle) -> String {
    format!("{},{} {},{} {},{}", t.v0.x, t.v0.y, t.v1.x, t.v1.y, t.v2.x, t.v2.y)
}

pub fn write_instance(instance: &Instance) -> String {
    let mut out = String::new();
    out.push_str("# polychrome instance\n");
    if let Some(meta) = &instance.meta {
        out.push_str(&format!(
            "# generator: {} seed={} n={}\n",
            meta.generator, meta.seed, meta.n
        ));
    }
    out.push_str(&format!("# triangle: {}\n", format_triangle(&instance.triangle)));
    for p in &instance.points.points {
        out.push_str(&format!("{} {}\n", p.x, p.y));
    }
    out
}

pub fn read_instance(text: &str) -> Result<Instance> {
    let mut triangle = Triangle::unit();
    let mut meta = None;
    let mut points = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            let comment = comment.trim();
            if let Some(rest) = comment.strip_prefix("triangle:") {
                triangle = parse_triangle(rest)?;
            } else if let Some(rest) = comment.strip_prefix("generator:") {
                meta = parse_metadata(rest);
            }
            continue;
        }
        points.push(parse_point(line)?);
    }
    Ok(Instance { triangle, points: PointSet::new(points), meta })
}

fn parse_metadata(rest: &str) -> Option<Metadata> {
    let mut it = rest.split_whitespace();
    let generator = it.next()?.to_string();
    let mut seed = None;
    let mut n = None;
    for field in it {
        if let Some(v) = field.strip_prefix("seed=") {
            seed = v.parse().ok();
        } else if let Some(v) = field.strip_prefix("n=") {
            n = v.parse().ok();
        }
    }
    Some(Metadata { generator, seed: seed?, n: n? })
}

#[derive(Serialize, Deserialize)]
struct ColoringDoc {
    k: usize,
    colors: Vec<usize>,
}

pub fn write_coloring(coloring: &Coloring) -> String {
    let doc = ColoringDoc { k: coloring.k, colors: coloring.assignment.clone() };
    let mut s = serde_json::to_string_pretty(&doc).expect("serialize coloring");
    s.push('\n');
    s
}

pub fn read_coloring(text: &str) -> Result<Coloring> {
    let doc: ColoringDoc =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("bad coloring file: {e}")))?;
    if doc.colors.iter().any(|&c| c >= doc.k) {
        return Err(Error::Parse("color index out of range".into()));
    }
    Coloring::new(doc.k, doc.colors)
}

/// One line per range: `a,b,s,size,members` with the membership bitset in
/// hex. Header row included.
pub fn write_catalog_csv(catalog: &RangeCatalog) -> String {
    let mut out = String::from("a,b,s,size,members\n");
    for r in &catalog.ranges {
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            r.homothet.a,
            r.homothet.b,
            r.homothet.s,
            r.size(),
            r.members.to_hex()
        ));
    }
    out
}

#[derive(Serialize, Deserialize)]
struct HomothetDoc {
    a: String,
    b: String,
    s: String,
}

impl HomothetDoc {
    fn of(h: &Homothet) -> Self {
        HomothetDoc { a: h.a.to_string(), b: h.b.to_string(), s: h.s.to_string() }
    }

    fn parse(&self) -> Result<Homothet> {
        Ok(Homothet::new(
            parse_scalar(&self.a)?,
            parse_scalar(&self.b)?,
            parse_scalar(&self.s)?,
        ))
    }
}

#[derive(Serialize, Deserialize)]
struct QuadrantDoc {
    a: String,
    b: String,
    open_x: bool,
    open_y: bool,
}

#[derive(Serialize, Deserialize)]
struct ViolationDoc {
    homothet: HomothetDoc,
    missing_color: usize,
    size: usize,
}

#[derive(Serialize, Deserialize)]
struct WitnessTraceDoc {
    violating: HomothetDoc,
    /// The violating homothet mapped back through the inverse canonical map,
    /// if a world triangle is known.
    violating_world: Option<[String; 6]>,
    missing: usize,
    parent_color: usize,
    q_indices: Vec<usize>,
    r_indices: Vec<usize>,
    cover: Vec<QuadrantDoc>,
    kind: String,
    derived: ViolationDoc,
}

pub fn write_witness_trace(trace: &WitnessTrace, world: Option<&Triangle>) -> String {
    let doc = WitnessTraceDoc {
        violating: HomothetDoc::of(&trace.violating),
        violating_world: world.map(|t| {
            [
                t.v0.x.to_string(),
                t.v0.y.to_string(),
                t.v1.x.to_string(),
                t.v1.y.to_string(),
                t.v2.x.to_string(),
                t.v2.y.to_string(),
            ]
        }),
        missing: trace.missing,
        parent_color: trace.parent_color,
        q_indices: trace.q_indices.clone(),
        r_indices: trace.r_indices.clone(),
        cover: trace
            .cover
            .iter()
            .map(|q| QuadrantDoc {
                a: q.a.to_string(),
                b: q.b.to_string(),
                open_x: q.open_x,
                open_y: q.open_y,
            })
            .collect(),
        kind: match trace.kind {
            DerivedKind::ClassSplit => "class-split".into(),
            DerivedKind::ParentColoring => "parent-coloring".into(),
        },
        derived: ViolationDoc {
            homothet: HomothetDoc::of(&trace.derived.homothet),
            missing_color: trace.derived.missing_color,
            size: trace.derived.size,
        },
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("serialize witness trace");
    s.push('\n');
    s
}

pub fn read_witness_trace(text: &str) -> Result<WitnessTrace> {
    let doc: WitnessTraceDoc =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("bad witness trace: {e}")))?;
    Ok(WitnessTrace {
        violating: doc.violating.parse()?,
        missing: doc.missing,
        parent_color: doc.parent_color,
        q_indices: doc.q_indices,
        r_indices: doc.r_indices,
        cover: doc
            .cover
            .iter()
            .map(|q| {
                Ok(CoverQuadrant {
                    a: parse_scalar(&q.a)?,
                    b: parse_scalar(&q.b)?,
                    open_x: q.open_x,
                    open_y: q.open_y,
                })
            })
            .collect::<Result<_>>()?,
        kind: match doc.kind.as_str() {
            "class-split" => DerivedKind::ClassSplit,
            "parent-coloring" => DerivedKind::ParentColoring,
            other => return Err(Error::Parse(format!("unknown trace kind `{other}`"))),
        },
        derived: Violation {
            homothet: doc.derived.homothet.parse()?,
            missing_color: doc.derived.missing_color,
            size: doc.derived.size,
        },
    })
}
