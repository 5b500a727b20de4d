//! Scene JSON format.
//!
//! ```json
//! {"regions":[{"name":"a","pieces":[{"kind":"point","at":[0,"1/2"]}]}]}
//! ```
//!
//! Coordinates are JSON integers or `"p/q"` strings; float literals are rejected.

use serde::Serialize;
use serde_json::Value;

use super::piece::Piece;
use super::point::Point;
use super::scene::{Region, Scene};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FormatError {
    #[error("line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("at {path}: {message}")]
    Schema { path: String, message: String },
}

impl FormatError {
    pub(crate) fn schema(path: &str, message: impl Into<String>) -> Self {
        FormatError::Schema { path: path.to_string(), message: message.into() }
    }

    pub(crate) fn from_json(e: serde_json::Error) -> Self {
        FormatError::Syntax { line: e.line(), column: e.column(), message: e.to_string() }
    }
}

pub(crate) fn parse_value(text: &str) -> Result<Value, FormatError> {
    serde_json::from_str(text).map_err(FormatError::from_json)
}

pub(crate) fn scalar_of(v: &Value, path: &str) -> Result<Scalar, FormatError> {
    match v {
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(Scalar::from_int(i))
            } else if let Some(u) = n.as_u64() {
                Ok(Scalar::from(num_bigint::BigInt::from(u)))
            } else {
                Err(FormatError::schema(path, format!("float literal {n} not allowed; use an integer or \"p/q\"")))
            }
        }
        Value::String(s) => s.parse().map_err(|e| FormatError::schema(path, format!("{e}"))),
        other => Err(FormatError::schema(path, format!("expected rational coordinate, found {other}"))),
    }
}

pub(crate) fn point_of(v: &Value, path: &str) -> Result<Point, FormatError> {
    match v.as_array() {
        Some(a) if a.len() == 2 => {
            Ok(Point::new(scalar_of(&a[0], &format!("{path}[0]"))?, scalar_of(&a[1], &format!("{path}[1]"))?))
        }
        _ => Err(FormatError::schema(path, "expected [x, y]")),
    }
}

fn field<'a>(obj: &'a serde_json::Map<String, Value>, key: &str, path: &str) -> Result<&'a Value, FormatError> {
    obj.get(key).ok_or_else(|| FormatError::schema(path, format!("missing field `{key}`")))
}

fn piece_of(v: &Value, path: &str) -> Result<Piece, FormatError> {
    let obj = v.as_object().ok_or_else(|| FormatError::schema(path, "expected piece object"))?;
    let kind = field(obj, "kind", path)?
        .as_str()
        .ok_or_else(|| FormatError::schema(&format!("{path}.kind"), "expected string"))?;
    match kind {
        "point" => Ok(Piece::Point(point_of(field(obj, "at", path)?, &format!("{path}.at"))?)),
        "segment" => Ok(Piece::Segment(
            point_of(field(obj, "a", path)?, &format!("{path}.a"))?,
            point_of(field(obj, "b", path)?, &format!("{path}.b"))?,
        )),
        "polygon" => {
            let verts = field(obj, "verts", path)?
                .as_array()
                .ok_or_else(|| FormatError::schema(&format!("{path}.verts"), "expected array"))?;
            let pts = verts
                .iter()
                .enumerate()
                .map(|(i, p)| point_of(p, &format!("{path}.verts[{i}]")))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(Piece::Polygon(pts))
        }
        other => Err(FormatError::schema(&format!("{path}.kind"), format!("unknown piece kind `{other}`"))),
    }
}

/// Parses scene JSON; does not validate geometry (see `validate_scene`).
pub fn parse_scene(text: &str) -> Result<Scene, FormatError> {
    let root = parse_value(text)?;
    let regions = root
        .get("regions")
        .and_then(Value::as_array)
        .ok_or_else(|| FormatError::schema("$", "expected object with `regions` array"))?;
    let mut out = Vec::with_capacity(regions.len());
    for (i, r) in regions.iter().enumerate() {
        let path = format!("regions[{i}]");
        let obj = r.as_object().ok_or_else(|| FormatError::schema(&path, "expected region object"))?;
        let name = field(obj, "name", &path)?
            .as_str()
            .ok_or_else(|| FormatError::schema(&format!("{path}.name"), "expected string"))?;
        let pieces = field(obj, "pieces", &path)?
            .as_array()
            .ok_or_else(|| FormatError::schema(&format!("{path}.pieces"), "expected array"))?;
        let pieces = pieces
            .iter()
            .enumerate()
            .map(|(j, p)| piece_of(p, &format!("{path}.pieces[{j}]")))
            .collect::<Result<Vec<_>, _>>()?;
        out.push(Region::new(name, pieces));
    }
    Ok(Scene::new(out))
}

#[derive(Serialize)]
#[serde(untagged)]
pub(crate) enum Coord {
    Int(i64),
    Str(String),
}

impl From<&Scalar> for Coord {
    fn from(s: &Scalar) -> Self {
        match s.as_small() {
            Some((n, 1)) => Coord::Int(n),
            _ => Coord::Str(s.to_string()),
        }
    }
}

pub(crate) fn coords(p: &Point) -> [Coord; 2] {
    [Coord::from(&p.x), Coord::from(&p.y)]
}

#[derive(Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
enum PieceOut {
    Point { at: [Coord; 2] },
    Segment { a: [Coord; 2], b: [Coord; 2] },
    Polygon { verts: Vec<[Coord; 2]> },
}

#[derive(Serialize)]
struct RegionOut<'a> {
    name: &'a str,
    pieces: Vec<PieceOut>,
}

#[derive(Serialize)]
struct SceneOut<'a> {
    regions: Vec<RegionOut<'a>>,
}

/// Deterministic pretty JSON for a scene.
pub fn scene_to_json(s: &Scene) -> String {
    let out = SceneOut {
        regions: s
            .regions
            .iter()
            .map(|r| RegionOut {
                name: &r.name,
                pieces: r
                    .pieces
                    .iter()
                    .map(|pc| match pc {
                        Piece::Point(p) => PieceOut::Point { at: coords(p) },
                        Piece::Segment(a, b) => PieceOut::Segment { a: coords(a), b: coords(b) },
                        Piece::Polygon(v) => PieceOut::Polygon { verts: v.iter().map(coords).collect() },
                    })
                    .collect(),
            })
            .collect(),
    };
    let mut text = serde_json::to_string_pretty(&out).expect("scene serializes");
    text.push('\n');
    text
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::point::pt;

    #[test]
    fn parses_all_piece_kinds() {
        let text = r#"{"regions":[
            {"name":"a","pieces":[{"kind":"point","at":[0,"1/2"]}]},
            {"name":"b","pieces":[{"kind":"segment","a":[1,1],"b":["-3/6",2]}]},
            {"name":"c","pieces":[{"kind":"polygon","verts":[[5,5],[6,5],[6,6]]}]}
        ]}"#;
        let s = parse_scene(text).unwrap();
        assert_eq!(s.regions[0].pieces[0], Piece::Point(Point::new(Scalar::zero(), Scalar::ratio(1, 2))));
        assert_eq!(s.regions[1].pieces[0], Piece::Segment(pt(1, 1), Point::new(Scalar::ratio(-1, 2), Scalar::from_int(2))));
        assert_eq!(s.regions[2].pieces[0], Piece::Polygon(vec![pt(5, 5), pt(6, 5), pt(6, 6)]));
        assert_eq!(parse_scene(&scene_to_json(&s)).unwrap(), s);
    }

    #[test]
    fn rejects_floats_and_garbage() {
        let float = r#"{"regions":[{"name":"a","pieces":[{"kind":"point","at":[0.5,1]}]}]}"#;
        match parse_scene(float) {
            Err(FormatError::Schema { path, message }) => {
                assert_eq!(path, "regions[0].pieces[0].at[0]");
                assert!(message.contains("float"));
            }
            other => panic!("unexpected {other:?}"),
        }
        let nan = r#"{"regions":[{"name":"a","pieces":[{"kind":"point","at":["NaN",1]}]}]}"#;
        assert!(parse_scene(nan).is_err());
        assert!(matches!(parse_scene("{\"regions\": [\n}"), Err(FormatError::Syntax { line: 2, .. })));
        let kind = r#"{"regions":[{"name":"a","pieces":[{"kind":"disk","at":[0,1]}]}]}"#;
        assert!(parse_scene(kind).is_err());
    }
}
