//! JSON input documents.
//!
//! ```json
//! {"type": "polygon", "dimension": 2, "vertices": [[0, 0], ["1/3", 0.5], [0, 1]]}
//! {"type": "polytope", "dimension": 3, "vertices": [...], "faces": [[0, 1, 2], ...]}
//! {"type": "samples", "base": [0, 0], "points": [[1, 0], ...]}
//! ```
//!
//! Coordinates are JSON numbers, read exactly from their decimal text, or
//! strings `"p/q"`.

use std::path::Path;

use ccm_core::geometry::Point;
use ccm_core::scalar::{parse_decimal, parse_exact};
use ccm_core::Rational;
use serde_json::Value;

use crate::error::CliError;

#[derive(Debug, Clone, PartialEq)]
pub enum Document {
    Polygon(Vec<Point<Rational>>),
    Polytope {
        vertices: Vec<Point<Rational>>,
        faces: Vec<Vec<usize>>,
    },
    Samples {
        base: Point<Rational>,
        points: Vec<Point<Rational>>,
    },
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

/// Parses `"p/q"`, `"p"` or a decimal literal.
pub fn parse_number(text: &str) -> Option<Rational> {
    let text = text.trim();
    parse_exact(text).or_else(|| parse_decimal(text))
}

fn number(v: &Value, at: &str) -> Result<Rational, CliError> {
    let parsed = match v {
        Value::Number(n) => parse_decimal(&n.to_string()),
        Value::String(s) => parse_number(s),
        _ => None,
    };
    parsed.ok_or_else(|| usage(format!("{at}: expected a number or \"p/q\" string, got {v}")))
}

fn point(v: &Value, at: &str) -> Result<Point<Rational>, CliError> {
    let coords = v
        .as_array()
        .ok_or_else(|| usage(format!("{at}: expected an array of coordinates")))?;
    coords
        .iter()
        .enumerate()
        .map(|(k, c)| number(c, &format!("{at}[{k}]")))
        .collect::<Result<Vec<_>, _>>()
        .map(Point::new)
}

fn points(doc: &Value, key: &str) -> Result<Vec<Point<Rational>>, CliError> {
    let list = doc
        .get(key)
        .and_then(Value::as_array)
        .ok_or_else(|| usage(format!("missing array \"{key}\"")))?;
    list.iter()
        .enumerate()
        .map(|(i, v)| point(v, &format!("{key}[{i}]")))
        .collect()
}

fn check_dimension(doc: &Value, pts: &[Point<Rational>]) -> Result<(), CliError> {
    let declared = match doc.get("dimension") {
        None => None,
        Some(d) => Some(
            d.as_u64()
                .ok_or_else(|| usage("\"dimension\" must be a positive integer"))? as usize,
        ),
    };
    let first = pts.first().map(Point::dim).ok_or_else(|| usage("no vertices"))?;
    let expected = declared.unwrap_or(first);
    if let Some((i, p)) = pts.iter().enumerate().find(|(_, p)| p.dim() != expected) {
        return Err(usage(format!(
            "vertex {i} has {} coordinates, expected {expected}",
            p.dim()
        )));
    }
    Ok(())
}

pub fn parse_document(text: &str) -> Result<Document, CliError> {
    let doc: Value = serde_json::from_str(text).map_err(|e| usage(format!("invalid JSON: {e}")))?;
    let kind = doc
        .get("type")
        .and_then(Value::as_str)
        .ok_or_else(|| usage("missing string field \"type\""))?;
    match kind {
        "polygon" => {
            let vertices = points(&doc, "vertices")?;
            check_dimension(&doc, &vertices)?;
            if vertices[0].dim() != 2 {
                return Err(usage("polygons must be planar"));
            }
            if doc.get("faces").is_some() {
                return Err(usage("polygons take no \"faces\"; use type \"polytope\""));
            }
            Ok(Document::Polygon(vertices))
        }
        "polytope" => {
            let vertices = points(&doc, "vertices")?;
            check_dimension(&doc, &vertices)?;
            let faces = doc
                .get("faces")
                .and_then(Value::as_array)
                .ok_or_else(|| usage("missing array \"faces\""))?
                .iter()
                .enumerate()
                .map(|(i, f)| {
                    f.as_array()
                        .and_then(|ix| ix.iter().map(|x| x.as_u64().map(|x| x as usize)).collect())
                        .ok_or_else(|| usage(format!("faces[{i}]: expected an array of vertex indices")))
                })
                .collect::<Result<Vec<Vec<usize>>, _>>()?;
            Ok(Document::Polytope { vertices, faces })
        }
        "samples" => {
            let pts = points(&doc, "points")?;
            check_dimension(&doc, &pts)?;
            let base = point(doc.get("base").ok_or_else(|| usage("missing \"base\""))?, "base")?;
            if base.dim() != 2 || pts[0].dim() != 2 {
                return Err(usage("curve samples must be planar"));
            }
            Ok(Document::Samples { base, points: pts })
        }
        other => Err(usage(format!(
            "unknown type {other:?}; expected polygon, polytope or samples"
        ))),
    }
}

pub fn load(path: &Path) -> Result<Document, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_document(&text)
}
