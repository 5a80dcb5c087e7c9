//! Randomized verification suites.
//!
//! Instances are generated exactly and converted to the requested backend, so
//! the same seed exercises the same geometry on both backends. Trials run in
//! parallel; results are gathered in trial order.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::centers::{
    ccm_polygon, ccm_polytope, ccm_triangulated, cm_triangulated, euler_line_point, phi_simplex, Body, Polygon2D,
};
use crate::geometry::{centroid, circumcenter, fan_triangulation, Point, Simplex, SimplicialPolytope};
use crate::random::{convert_map, convert_point, convert_polytope, Sampler};
use crate::scalar::{format_exact, Rational, Scalar};
use crate::shapes::{orient_faces_about, simplex_boundary};
use crate::skew::certify::{basis_rank_check, uniqueness_report, RankReport, UniquenessReport};
use crate::skew::determinants::{eval_v, rotation_action, subdivision_check, translation_action};
use crate::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Triangulation,
    Archimedes,
    Isometry,
    Basis,
    Actions,
    Uniqueness,
    All,
}

impl Suite {
    pub const EACH: [Suite; 6] = [
        Suite::Triangulation,
        Suite::Archimedes,
        Suite::Isometry,
        Suite::Basis,
        Suite::Actions,
        Suite::Uniqueness,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Triangulation => "triangulation",
            Suite::Archimedes => "archimedes",
            Suite::Isometry => "isometry",
            Suite::Basis => "basis",
            Suite::Actions => "actions",
            Suite::Uniqueness => "uniqueness",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Suite::EACH
            .iter()
            .chain([&Suite::All])
            .find(|suite| suite.name() == s)
            .copied()
            .ok_or_else(|| Error::InvalidParameter(format!("unknown suite {s:?}")))
    }
}

#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub dimension: usize,
    pub trials: usize,
    pub seed: u64,
    /// Absolute tolerance on the float backend; ignored by the exact one.
    pub tolerance: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Counterexample {
    pub trial: u64,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PropertyOutcome {
    pub property: String,
    pub trials: usize,
    pub failures: usize,
    pub first_counterexample: Option<Counterexample>,
}

impl PropertyOutcome {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub backend: &'static str,
    pub dimension: usize,
    pub seed: u64,
    pub passed: bool,
    pub properties: Vec<PropertyOutcome>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rank: Option<RankReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<UniquenessReport>,
}

type Check = Result<(), String>;

fn backend_name<S: Scalar>() -> &'static str {
    if S::EXACT {
        "rational"
    } else {
        "float"
    }
}

fn describe(points: &[Point<Rational>]) -> String {
    let parts: Vec<String> = points
        .iter()
        .map(|p| {
            let c: Vec<String> = p.coords().iter().map(format_exact).collect();
            format!("({})", c.join(", "))
        })
        .collect();
    format!("[{}]", parts.join(", "))
}

fn show<S: Scalar>(p: &Point<S>) -> String {
    format!("{:?}", p.to_f64().coords())
}

fn same<S: Scalar>(what: &str, a: &Point<S>, b: &Point<S>, tol: f64) -> Check {
    if a.close_to(b, tol) {
        Ok(())
    } else {
        Err(format!("{what}: {} vs {}", show(a), show(b)))
    }
}

fn run_trials<F>(cfg: &SuiteConfig, names: &[&str], trial: F) -> Vec<PropertyOutcome>
where
    F: Fn(&mut Sampler) -> (String, Vec<Check>) + Sync,
{
    let results: Vec<(String, Vec<Check>)> = (0..cfg.trials as u64)
        .into_par_iter()
        .map(|k| trial(&mut Sampler::for_trial(cfg.seed, k)))
        .collect();
    names
        .iter()
        .enumerate()
        .map(|(slot, name)| {
            let mut failures = 0;
            let mut first = None;
            for (k, (instance, checks)) in results.iter().enumerate() {
                if let Err(e) = &checks[slot] {
                    failures += 1;
                    first.get_or_insert_with(|| Counterexample {
                        trial: k as u64,
                        detail: format!("{e}; instance {instance}"),
                    });
                }
            }
            PropertyOutcome {
                property: name.to_string(),
                trials: results.len(),
                failures,
                first_counterexample: first,
            }
        })
        .collect()
}

/// A random simplex as a closed boundary.
fn simplex_polytope(s: &Simplex<Rational>) -> SimplicialPolytope<Rational> {
    let n = s.dim();
    let faces = simplex_boundary::<Rational>(n).faces().to_vec();
    let faces = orient_faces_about(s.vertices(), faces, &centroid(s));
    SimplicialPolytope::new(s.vertices().to_vec(), faces).expect("nondegenerate simplex")
}

fn err<T>(r: Result<T, Error>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn triangulation_trial<S: Scalar>(s: &mut Sampler, n: usize, tol: f64) -> (String, Vec<Check>) {
    let a1: Point<S> = convert_point(&s.point(n, -10.0, 10.0));
    let a2: Point<S> = convert_point(&s.point(n, -10.0, 10.0));
    let simplex = s.configuration(n);
    let (instance, apex, concordance) = if n == 2 {
        let vertices = s.polygon(12);
        let p: Polygon2D<S> = Polygon2D::new(vertices.iter().map(convert_point).collect()).expect("polygon");
        let instance = describe(&vertices);
        let apex = (|| {
            let c1 = err(ccm_triangulated(&p.fan(&a1)))?.point;
            let c2 = err(ccm_triangulated(&p.fan(&a2)))?.point;
            same("ccm", &c1, &c2, tol)?;
            let m1 = err(cm_triangulated(&p.fan(&a1)))?.point;
            let m2 = err(cm_triangulated(&p.fan(&a2)))?.point;
            same("cm", &m1, &m2, tol)
        })();
        let concordance = (|| {
            let closed = err(ccm_polygon(&p))?;
            let faces = err(ccm_polytope(&err(p.to_polytope())?))?;
            let fan = err(ccm_triangulated(&p.fan(&a1)))?.point;
            same("closed form vs boundary formula", &closed, &faces, tol)?;
            same("closed form vs fan", &closed, &fan, tol)
        })();
        (instance, apex, concordance)
    } else {
        let exact = s.polytope(n);
        let instance = format!("vertices {} faces {:?}", describe(exact.vertices()), exact.faces());
        let p: SimplicialPolytope<S> = convert_polytope(&exact).expect("valid polytope");
        let fan = |a: &Point<S>| -> Result<Point<S>, String> {
            Ok(err(ccm_triangulated(&err(fan_triangulation(&p, a))?))?.point)
        };
        let apex = (|| {
            same("ccm", &fan(&a1)?, &fan(&a2)?, tol)?;
            let m1 = err(cm_triangulated(&err(fan_triangulation(&p, &a1))?))?.point;
            let m2 = err(cm_triangulated(&err(fan_triangulation(&p, &a2))?))?.point;
            same("cm", &m1, &m2, tol)
        })();
        let concordance = (|| same("boundary formula vs fan", &err(ccm_polytope(&p))?, &fan(&a1)?, tol))();
        (instance, apex, concordance)
    };
    let simplex_check = (|| {
        let boundary: SimplicialPolytope<S> = err(convert_polytope(&simplex_polytope(&simplex)))?;
        let cc = err(circumcenter(&simplex))?;
        same("simplex ccm vs circumcenter", &err(ccm_polytope(&boundary))?, &convert_point(&cc), tol)
    })();
    let simplex_check = simplex_check.map_err(|e| format!("{e}; simplex {}", describe(simplex.vertices())));
    (instance, vec![apex, concordance, simplex_check])
}

fn archimedes_trial<S: Scalar>(s: &mut Sampler, n: usize, tol: f64) -> (String, Vec<Check>) {
    let exact = s.configuration(n);
    let weights: Vec<Rational> = (0..=n).map(|_| s.rational(0.05, 1.0)).collect();
    let total: Rational = weights.iter().cloned().sum();
    let inside = exact
        .vertices()
        .iter()
        .zip(&weights)
        .fold(Point::origin(n), |acc, (v, w)| &acc + &v.scale(&(w / &total)));
    let stretch = s.rational(0.5, 3.0);
    let v0 = exact.vertex(0);
    let outside = v0 + &(v0 - &centroid(&exact)).scale(&stretch);
    let instance = format!(
        "{} inside {} outside {}",
        describe(exact.vertices()),
        describe(std::slice::from_ref(&inside)),
        describe(std::slice::from_ref(&outside))
    );
    let c: Simplex<S> = exact.map_to(convert_point);
    let check = |o: &Point<Rational>| -> Check {
        let o: Point<S> = convert_point(o);
        for i in 0..n {
            for j in 0..n {
                for k in j..n {
                    let r = err(subdivision_check(&c, &o, i, j, k))?;
                    if !r.close_to(&S::zero(), tol) {
                        return Err(format!("X_{{{i},{j}{k}}} residual {:?}", r.to_f64()));
                    }
                }
            }
        }
        let pieces = (0..=n).fold(Point::origin(n), |acc, m| &acc + &phi_simplex(&c.with_vertex(m, o.clone())));
        same("phi additivity", &phi_simplex(&c), &pieces, tol)
    };
    (instance, vec![check(&inside), check(&outside)])
}

fn isometry_trial<S: Scalar>(s: &mut Sampler, n: usize, tol: f64) -> (String, Vec<Check>) {
    let map = s.isometry(n);
    let g = convert_map::<S>(&map);
    let third = S::from_ratio(1, 3);
    let compare = |body: &dyn Body<S>, image: &dyn Body<S>| -> Vec<Check> {
        let covariant = |what: &str, f: &dyn Fn(&dyn Body<S>) -> Result<Point<S>, Error>| -> Check {
            same(what, &f(image).map_err(|e| e.to_string())?, &g.apply(&err(f(body))?), tol)
        };
        vec![
            covariant("cm", &|b| b.center_of_mass()),
            covariant("ccm", &|b| b.circumcenter_of_mass()),
            covariant("euler(1/3)", &|b| euler_line_point(b, &third)),
        ]
    };
    let (instance, checks) = if n == 2 {
        let vertices = s.polygon(12);
        let p: Polygon2D<S> = Polygon2D::new(vertices.iter().map(convert_point).collect()).expect("polygon");
        let image = p.map_vertices(|v| g.apply(v));
        (describe(&vertices), compare(&p, &image))
    } else {
        let exact = s.polytope(n);
        let p: SimplicialPolytope<S> = convert_polytope(&exact).expect("valid polytope");
        let image = g.apply_polytope(&p);
        (describe(exact.vertices()), compare(&p, &image))
    };
    (format!("{instance} map {map:?}"), checks)
}

fn actions_trial<S: Scalar>(s: &mut Sampler, n: usize, tol: f64) -> (String, Vec<Check>) {
    let exact = s.configuration(n);
    let c: Simplex<S> = exact.map_to(convert_point);
    let v = eval_v(&c);
    let delta = |a: usize, b: usize| if a == b { S::one() } else { S::zero() };
    let translation = (|| {
        for r in 0..n {
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        let got = err(translation_action(&c, r, i, j, k))?;
                        let want = (delta(i, j) * delta(r, k) + delta(i, k) * delta(r, j)) * v.clone();
                        if !got.close_to(&want, tol) {
                            return Err(format!("r={r} i={i} j={j} k={k}: {:?} vs {:?}", got.to_f64(), want.to_f64()));
                        }
                    }
                }
            }
        }
        Ok(())
    })();
    let rotation = (|| {
        for p in 0..n {
            for q in (0..n).filter(|&q| q != p) {
                for i in 0..n {
                    for j in 0..n {
                        for k in 0..n {
                            let r = err(rotation_action(&c, p, q, i, j, k))?;
                            if !r.close_to(&S::zero(), tol) {
                                return Err(format!("p={p} q={q} i={i} j={j} k={k}: residual {:?}", r.to_f64()));
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    })();
    (describe(exact.vertices()), vec![translation, rotation])
}

fn report<S: Scalar>(suite: Suite, cfg: &SuiteConfig, properties: Vec<PropertyOutcome>) -> SuiteReport {
    SuiteReport {
        suite,
        backend: backend_name::<S>(),
        dimension: cfg.dimension,
        seed: cfg.seed,
        passed: properties.iter().all(PropertyOutcome::passed),
        properties,
        rank: None,
        certificate: None,
    }
}

fn single(property: &str, result: Check) -> PropertyOutcome {
    PropertyOutcome {
        property: property.into(),
        trials: 1,
        failures: usize::from(result.is_err()),
        first_counterexample: result.err().map(|detail| Counterexample { trial: 0, detail }),
    }
}

fn check_config(cfg: &SuiteConfig) -> Result<(), Error> {
    if !(2..=4).contains(&cfg.dimension) {
        return Err(Error::InvalidParameter(format!(
            "dimension must be 2, 3 or 4, got {}",
            cfg.dimension
        )));
    }
    Ok(())
}

/// Runs one suite. Basis and uniqueness are certified in exact arithmetic
/// regardless of `S`.
pub fn run_suite<S: Scalar>(suite: Suite, cfg: &SuiteConfig) -> Result<Vec<SuiteReport>, Error> {
    check_config(cfg)?;
    let (n, tol) = (cfg.dimension, cfg.tolerance);
    let one = match suite {
        Suite::All => {
            return Suite::EACH
                .iter()
                .map(|&s| run_suite::<S>(s, cfg).map(|mut r| r.remove(0)))
                .collect();
        }
        Suite::Triangulation => report::<S>(
            suite,
            cfg,
            run_trials(
                cfg,
                &["apex_independence", "formula_concordance", "simplex_circumcenter"],
                |s| triangulation_trial::<S>(s, n, tol),
            ),
        ),
        Suite::Archimedes => report::<S>(
            suite,
            cfg,
            run_trials(cfg, &["subdivision_inside", "subdivision_outside"], |s| {
                archimedes_trial::<S>(s, n, tol)
            }),
        ),
        Suite::Isometry => report::<S>(
            suite,
            cfg,
            run_trials(cfg, &["cm_covariance", "ccm_covariance", "euler_covariance"], |s| {
                isometry_trial::<S>(s, n, tol)
            }),
        ),
        Suite::Actions => report::<S>(
            suite,
            cfg,
            run_trials(cfg, &["translation_action", "rotation_action"], |s| {
                actions_trial::<S>(s, n, tol)
            }),
        ),
        Suite::Basis => {
            let rank = basis_rank_check(n, cfg.trials, &mut Sampler::new(cfg.seed));
            if let Err(Error::InvalidParameter(msg)) = &rank {
                return Err(Error::InvalidParameter(msg.clone()));
            }
            let mut r = report::<Rational>(suite, cfg, vec![single("full_rank", rank.as_ref().map(|_| ()).map_err(|e| e.to_string()))]);
            r.rank = rank.ok();
            r
        }
        Suite::Uniqueness => {
            let cert = uniqueness_report(n)?;
            let properties = cert
                .clauses
                .iter()
                .map(|c| {
                    single(
                        &format!("clause_{}", c.id),
                        if c.passed { Ok(()) } else { Err(c.detail.clone()) },
                    )
                })
                .collect();
            let mut r = report::<Rational>(suite, cfg, properties);
            r.certificate = Some(cert);
            r
        }
    };
    Ok(vec![one])
}
