use ccm_core::centers::Polygon2D;
use ccm_core::geometry::Point;
use ccm_core::scalar::format_exact;
use ccm_core::valuation::{
    continuous_limit, degenerate_triangle_demo, k_alpha_phi, moment_polynomial, not_valuation_demo,
    ExactReal, StarCurve,
};
use ccm_core::Rational;
use serde_json::{json, Map, Value};

use crate::error::CliError;
use crate::input::{parse_number, Document};
use crate::output::{point_json, Emission, Emit, Table};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Experiment {
    DegenerateTriangle,
    KAlpha,
    Moment,
    NotValuation,
    ContinuousLimit,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Family {
    Circle,
    Ellipse,
}

#[derive(Debug, Clone, clap::Args)]
pub struct Params {
    /// Comma-separated apex heights for k-alpha and not-valuation.
    #[arg(long, default_value = "1,1/2,1/10,1/100")]
    pub h: String,
    /// Coefficient threshold for not-valuation.
    #[arg(long, default_value_t = 1e-3)]
    pub threshold: f64,
    /// Value of epsilon at which to evaluate the moment polynomial.
    #[arg(long)]
    pub eps: Option<String>,
    #[arg(long, value_enum, default_value_t = Family::Ellipse)]
    pub family: Family,
    /// Semi-axis along x (radius for the circle).
    #[arg(long, default_value_t = 2.0)]
    pub a: f64,
    #[arg(long, default_value_t = 1.0)]
    pub b: f64,
    #[arg(long, default_value = "1,2")]
    pub center: String,
    /// Comma-separated sample counts.
    #[arg(long, default_value = "128,256,512,1024")]
    pub samples: String,
    /// Parameter warp `t = u + w sin u` for the ellipse.
    #[arg(long, default_value_t = 0.3)]
    pub warp: f64,
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn rational_list(text: &str, what: &str) -> Result<Vec<Rational>, CliError> {
    text.split(',')
        .map(|x| parse_number(x).ok_or_else(|| usage(format!("--{what}: cannot parse {x:?}"))))
        .collect()
}

fn count_list(text: &str) -> Result<Vec<usize>, CliError> {
    text.split(',')
        .map(|x| {
            x.trim()
                .parse::<usize>()
                .map_err(|_| usage(format!("--samples: cannot parse {x:?}")))
        })
        .collect()
}

fn base(kind: &str) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("command".into(), json!("experiment"));
    m.insert("experiment".into(), json!(kind));
    m
}

fn to_map(v: impl serde::Serialize) -> Result<Map<String, Value>, CliError> {
    match serde_json::to_value(v).map_err(|e| usage(e.to_string()))? {
        Value::Object(m) => Ok(m),
        other => {
            let mut m = Map::new();
            m.insert("value".into(), other);
            Ok(m)
        }
    }
}

fn exact_cell(x: &ExactReal) -> String {
    x.to_string()
}

fn degenerate_triangle() -> Result<Emission, CliError> {
    let report = degenerate_triangle_demo();
    let mut table = Table::new(&["piece", "signed_area", "phi_x", "phi_y"]);
    for p in &report.pieces {
        table.push(vec![
            p.label.into(),
            format_exact(&p.signed_area),
            format_exact(&p.phi[0]),
            format_exact(&p.phi[1]),
        ]);
    }
    for (label, v) in [
        ("sum_with_degenerate", &report.sum_with_degenerate),
        ("sum_without_degenerate", &report.sum_without_degenerate),
        ("ccm_abc", &report.ccm_abc),
        ("discrepancy", &report.discrepancy),
    ] {
        table.push(vec![label.into(), String::new(), format_exact(&v[0]), format_exact(&v[1])]);
    }
    let passed = report.restores_total_sum;
    let mut json = base("degenerate-triangle");
    json.extend(to_map(&report)?);
    Ok(Emission { json, table, passed })
}

fn k_alpha<S: Emit>(params: &Params) -> Result<Emission, CliError> {
    let hs = rational_list(&params.h, "h")?;
    let mut table = Table::new(&["h", "phi_x", "phi_y"]);
    let mut rows = Vec::new();
    for h in &hs {
        let phi: Point<S> = k_alpha_phi(&S::from_rational(h))?;
        table.push(vec![format_exact(h), phi[0].cell(), phi[1].cell()]);
        rows.push(json!({"h": format_exact(h), "phi": point_json(&phi)}));
    }
    let mut json = base("k-alpha");
    json.insert("backend".into(), json!(if S::EXACT { "rational" } else { "float" }));
    json.insert("rows".into(), Value::Array(rows));
    Ok(Emission {
        json,
        table,
        passed: true,
    })
}

fn moment(doc: Option<&Document>, params: &Params) -> Result<Emission, CliError> {
    let vertices = match doc {
        Some(Document::Polygon(v)) => v.clone(),
        Some(_) => return Err(usage("moment expects a polygon document")),
        None => return Err(usage("moment needs --input with a convex polygon")),
    };
    let polygon = Polygon2D::new(vertices)?;
    let mp = moment_polynomial(&polygon)?;
    let mut table = Table::new(&["power", "x", "y", "x_float", "y_float"]);
    for (k, c) in mp.coefficients().iter().enumerate() {
        table.push(vec![
            k.to_string(),
            exact_cell(&c[0]),
            exact_cell(&c[1]),
            format!("{:e}", c[0].to_f64()),
            format!("{:e}", c[1].to_f64()),
        ]);
    }
    let mut json = base("moment");
    json.extend(to_map(&mp)?);
    json.insert("degree".into(), json!(mp.degree()));
    json.insert("steiner_holds".into(), json!(mp.steiner_holds()));
    if let Some(eps) = &params.eps {
        let e = parse_number(eps).ok_or_else(|| usage(format!("--eps: cannot parse {eps:?}")))?;
        let v = mp.evaluate(&e);
        json.insert("eps".into(), json!(format_exact(&e)));
        json.insert(
            "moment_at_eps".into(),
            serde_json::to_value(&v).map_err(|e| usage(e.to_string()))?,
        );
        json.insert(
            "moment_at_eps_float".into(),
            json!([v[0].to_f64(), v[1].to_f64()]),
        );
    }
    let passed = mp.steiner_holds();
    Ok(Emission { json, table, passed })
}

fn not_valuation(params: &Params) -> Result<Emission, CliError> {
    let hs = rational_list(&params.h, "h")?;
    let report = not_valuation_demo(&hs, params.threshold)?;
    let mut table = Table::new(&[
        "h", "phi_x", "phi_y", "distance_to_limit", "c0", "c1", "c2", "c3", "max_coefficient",
    ]);
    for r in &report.rows {
        let mut row = vec![
            format_exact(&r.h),
            format_exact(&r.phi[0]),
            format_exact(&r.phi[1]),
            format!("{:e}", r.distance_to_limit),
        ];
        row.extend(r.coefficient_norms.iter().map(|c| format!("{c:e}")));
        row.push(format!("{:e}", r.max_coefficient_norm));
        table.push(row);
    }
    let mut json = base("not-valuation");
    json.extend(to_map(&report)?);
    Ok(Emission {
        json,
        table,
        passed: true,
    })
}

fn pair(text: &str) -> Result<[f64; 2], CliError> {
    let parts: Vec<f64> = text
        .split(',')
        .map(|x| x.trim().parse::<f64>())
        .collect::<Result<_, _>>()
        .map_err(|_| usage(format!("--center: cannot parse {text:?}")))?;
    match parts.as_slice() {
        [x, y] => Ok([*x, *y]),
        _ => Err(usage("--center expects x,y")),
    }
}

fn limit(doc: Option<&Document>, params: &Params) -> Result<Emission, CliError> {
    let curves: Vec<StarCurve> = match doc {
        Some(Document::Samples { base, points }) => vec![StarCurve::from_samples(
            points.iter().map(Point::to_f64).collect(),
            base.to_f64(),
        )?],
        Some(_) => return Err(usage("continuous-limit expects a samples document")),
        None => {
            let center = pair(&params.center)?;
            count_list(&params.samples)?
                .into_iter()
                .map(|n| match params.family {
                    Family::Circle => StarCurve::circle(center, params.a, n),
                    Family::Ellipse => StarCurve::ellipse(center, params.a, params.b, n, params.warp),
                })
                .collect::<Result<_, _>>()?
        }
    };
    let mut table = Table::new(&["samples", "ccm_x", "ccm_y", "cm_x", "cm_y", "gap", "ratio"]);
    let mut rows = Vec::new();
    let mut previous: Option<f64> = None;
    let mut monotone = true;
    for curve in &curves {
        let r = continuous_limit(curve)?;
        let ratio = previous.map(|g| r.gap / g);
        if let Some(g) = previous {
            monotone &= r.gap <= g + 1e-12;
        }
        previous = Some(r.gap);
        table.push(vec![
            r.samples.to_string(),
            format!("{:e}", r.ccm_n[0]),
            format!("{:e}", r.ccm_n[1]),
            format!("{:e}", r.cm_lamina[0]),
            format!("{:e}", r.cm_lamina[1]),
            format!("{:e}", r.gap),
            ratio.map_or(String::new(), |x| format!("{x:.6}")),
        ]);
        let mut row = to_map(&r)?;
        row.insert("ratio".into(), ratio.map_or(Value::Null, |x| json!(x)));
        rows.push(Value::Object(row));
    }
    let mut json = base("continuous-limit");
    json.insert("backend".into(), json!("float"));
    json.insert("rows".into(), Value::Array(rows));
    json.insert("gap_nonincreasing".into(), json!(monotone));
    Ok(Emission {
        json,
        table,
        passed: true,
    })
}

pub fn run<S: Emit>(which: Experiment, doc: Option<&Document>, params: &Params) -> Result<Emission, CliError> {
    match which {
        Experiment::DegenerateTriangle => degenerate_triangle(),
        Experiment::KAlpha => k_alpha::<S>(params),
        Experiment::Moment => moment(doc, params),
        Experiment::NotValuation => not_valuation(params),
        Experiment::ContinuousLimit => limit(doc, params),
    }
}
