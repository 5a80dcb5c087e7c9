use ccm_core::centers::{euler_line_point, Body, Polygon2D};
use ccm_core::geometry::{fan_triangulation, Point, SimplicialPolytope};
use ccm_core::random::convert_point;
use ccm_core::{Rational, Scalar};
use serde_json::{json, Map, Value};

use crate::error::CliError;
use crate::input::Document;
use crate::output::{point_json, Emission, Emit, Table};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Which {
    Cm,
    Ccm,
    Euler,
}

impl Which {
    fn name(self) -> &'static str {
        match self {
            Which::Cm => "cm",
            Which::Ccm => "ccm",
            Which::Euler => "euler",
        }
    }
}

fn convert_all<S: Scalar>(pts: &[Point<Rational>]) -> Vec<Point<S>> {
    pts.iter().map(convert_point).collect()
}

/// Validates a polytope, reversing every face if the whole boundary is
/// negatively oriented.
fn polytope<S: Scalar>(
    vertices: &[Point<Rational>],
    faces: &[Vec<usize>],
    warnings: &mut Vec<String>,
) -> Result<SimplicialPolytope<S>, CliError> {
    let raw = SimplicialPolytope::<S>::new_unoriented(convert_all(vertices), faces.to_vec())?;
    let volume = raw.volume();
    if volume.is_zero() {
        return Err(CliError::Degenerate("polytope has zero volume".into()));
    }
    let faces: Vec<Vec<usize>> = if volume < S::zero() {
        warnings.push("faces were negatively oriented and have been reversed".into());
        faces
            .iter()
            .map(|f| {
                let mut f = f.clone();
                f.swap(0, 1);
                f
            })
            .collect()
    } else {
        faces.to_vec()
    };
    let p = SimplicialPolytope::new(raw.vertices().to_vec(), faces)?;
    let average = p.vertex_average();
    if !p.fan_volume(&average).close_to(&p.volume(), 1e-9) {
        warnings.push("boundary does not appear closed; the result depends on the fan apex".into());
    }
    Ok(p)
}

/// Flat cones of the fan from the origin. They are kept, contributing through
/// `phi`, but are listed so that the user can see them.
fn degenerate_warning<S: Scalar>(p: &SimplicialPolytope<S>, warnings: &mut Vec<String>) -> Result<(), CliError> {
    let flat = fan_triangulation(p, &Point::origin(p.dim()))?.degenerate_members();
    if !flat.is_empty() {
        let list: Vec<String> = flat.iter().map(usize::to_string).collect();
        warnings.push(format!(
            "fan from the origin has degenerate members at faces [{}]; they are kept",
            list.join(", ")
        ));
    }
    Ok(())
}

fn evaluate<S: Scalar>(body: &dyn Body<S>, which: Which, t: &S) -> Result<Point<S>, CliError> {
    Ok(match which {
        Which::Cm => body.center_of_mass()?,
        Which::Ccm => body.circumcenter_of_mass()?,
        Which::Euler => euler_line_point(body, t)?,
    })
}

pub fn run<S: Emit>(doc: &Document, which: Which, t: &Rational) -> Result<Emission, CliError> {
    let mut warnings = Vec::new();
    let t_s: S = S::from_rational(t);
    let (center, volume) = match doc {
        Document::Polygon(vertices) => {
            let p = Polygon2D::new(convert_all::<S>(vertices))?;
            let area = p.signed_area();
            if area < S::zero() {
                warnings.push("vertices are clockwise; the signed area is negative".into());
            }
            degenerate_warning(&p.to_polytope()?, &mut warnings)?;
            (evaluate(&p, which, &t_s)?, area)
        }
        Document::Polytope { vertices, faces } => {
            let p = polytope::<S>(vertices, faces, &mut warnings)?;
            let v = p.volume();
            degenerate_warning(&p, &mut warnings)?;
            (evaluate(&p, which, &t_s)?, v)
        }
        Document::Samples { .. } => {
            return Err(CliError::Usage(
                "compute expects a polygon or polytope document".into(),
            ))
        }
    };
    let mut json = Map::new();
    json.insert("command".into(), json!("compute"));
    json.insert("which".into(), json!(which.name()));
    json.insert("backend".into(), json!(if S::EXACT { "rational" } else { "float" }));
    if which == Which::Euler {
        json.insert("t".into(), t_s.json());
    }
    json.insert("center".into(), point_json(&center));
    json.insert("signed_volume".into(), volume.json());
    json.insert(
        "warnings".into(),
        Value::Array(warnings.iter().map(|w| json!(w)).collect()),
    );
    let mut headers = vec!["which".to_string()];
    headers.extend((1..=center.dim()).map(|k| format!("c{k}")));
    headers.push("signed_volume".into());
    let mut row = vec![which.name().to_string()];
    row.extend(center.coords().iter().map(Emit::cell));
    row.push(volume.cell());
    Ok(Emission {
        json,
        table: Table {
            headers,
            rows: vec![row],
        },
        passed: true,
    })
}
