//! Machine certification of the uniqueness of polynomial isometry-covariant
//! centers and of the linear independence of the `X` determinants.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::linalg;
use crate::random::Sampler;
use crate::scalar::{format_exact, ratio, Rational};
use crate::skew::coefficients::{
    basis_size, ccm_coefficients, cm_coefficients, unknown_count, CenterCoefficients, CoefficientKey,
};
use crate::skew::constraints::{build_constraint_system, solve_affine_space, AffineSolution};
use crate::skew::determinants::eval_x;
use crate::Error;

/// Representatives of the transposition orbits of unknowns, keyed by the
/// pattern of equal indices. `min_dim` is the smallest `n` in which the
/// pattern exists.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Orbit {
    pub key: (usize, usize, usize, usize),
    pub min_dim: usize,
    pub survives: bool,
}

/// The eleven orbits. Only the first three may be nonzero on a covariant
/// center.
pub const ORBITS: [Orbit; 11] = [
    Orbit { key: (0, 0, 0, 0), min_dim: 1, survives: true },
    Orbit { key: (0, 0, 1, 1), min_dim: 2, survives: true },
    Orbit { key: (0, 1, 0, 1), min_dim: 2, survives: true },
    Orbit { key: (1, 0, 0, 0), min_dim: 2, survives: false },
    Orbit { key: (0, 0, 0, 1), min_dim: 2, survives: false },
    Orbit { key: (0, 1, 0, 0), min_dim: 2, survives: false },
    Orbit { key: (0, 0, 1, 2), min_dim: 3, survives: false },
    Orbit { key: (0, 1, 0, 2), min_dim: 3, survives: false },
    Orbit { key: (1, 2, 0, 0), min_dim: 3, survives: false },
    Orbit { key: (1, 0, 0, 2), min_dim: 3, survives: false },
    Orbit { key: (0, 1, 2, 3), min_dim: 4, survives: false },
];

impl Orbit {
    pub fn coefficient_key(&self) -> CoefficientKey {
        let (l, i, j, k) = self.key;
        CoefficientKey::new(l, i, j, k)
    }

    pub fn value<'a>(&self, c: &'a CenterCoefficients<Rational>) -> &'a Rational {
        let (l, i, j, k) = self.key;
        c.get(l, i, j, k)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Clause {
    pub id: &'static str,
    pub statement: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct OrbitValue {
    pub orbit: String,
    /// Value at the particular solution.
    pub at_particular: String,
    /// Component of the homogeneous direction.
    pub along_line: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct UniquenessReport {
    pub dimension: usize,
    pub unknowns: usize,
    pub rows: usize,
    pub rank: usize,
    pub affine_dimension: Option<usize>,
    /// `lambda` with `homogeneous = lambda * (cm - ccm)`, when parallel.
    pub direction_scale: Option<String>,
    pub clauses: Vec<Clause>,
    pub orbit_values: Vec<OrbitValue>,
}

impl UniquenessReport {
    pub fn passed(&self) -> bool {
        self.clauses.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&Clause> {
        self.clauses.iter().find(|c| !c.passed)
    }
}

fn parallel_scale(h: &CenterCoefficients<Rational>, d: &CenterCoefficients<Rational>) -> Option<Rational> {
    let (hv, dv) = (h.as_slice(), d.as_slice());
    let pivot = dv.iter().position(|x| !x.is_zero())?;
    let lambda = &hv[pivot] / &dv[pivot];
    hv.iter()
        .zip(dv)
        .all(|(a, b)| *a == &lambda * b)
        .then_some(lambda)
}

/// Checks the affine relations on the surviving orbits and the vanishing of
/// the others, on one solution.
fn orbit_relations(n: usize, c: &CenterCoefficients<Rational>) -> Result<(), String> {
    let half = ratio(1, 2);
    let diag = ORBITS[0].value(c);
    let off_diag = ORBITS[1].value(c);
    let mixed = ORBITS[2].value(c);
    let nn = Rational::from_integer((n as i64).into());
    let expected_diag = &half - (&nn - Rational::one()) * mixed;
    let expected_off = &half - (&nn + Rational::one()) * mixed;
    if *diag != expected_diag {
        return Err(format!(
            "A^1_{{1,11}} = {} but 1/2 - (n-1) A^1_{{2,12}} = {}",
            format_exact(diag),
            format_exact(&expected_diag)
        ));
    }
    if *off_diag != expected_off {
        return Err(format!(
            "A^1_{{1,22}} = {} but 1/2 - (n+1) A^1_{{2,12}} = {}",
            format_exact(off_diag),
            format_exact(&expected_off)
        ));
    }
    for orbit in ORBITS.iter().filter(|o| !o.survives && o.min_dim <= n) {
        let v = orbit.value(c);
        if !v.is_zero() {
            return Err(format!(
                "{} = {} should vanish",
                orbit.coefficient_key().label(),
                format_exact(v)
            ));
        }
    }
    Ok(())
}

/// Builds the report without failing on violated clauses.
pub fn uniqueness_report(n: usize) -> Result<UniquenessReport, Error> {
    if !(2..=4).contains(&n) {
        return Err(Error::InvalidParameter(format!(
            "uniqueness is certified for 2 <= n <= 4, got {n}"
        )));
    }
    let sys = build_constraint_system(n)?;
    let solved = solve_affine_space(&sys);
    let cm = cm_coefficients::<Rational>(n);
    let ccm = ccm_coefficients::<Rational>(n);
    let mut clauses = Vec::new();
    let mut report = UniquenessReport {
        dimension: n,
        unknowns: unknown_count(n),
        rows: sys.rows().len(),
        rank: 0,
        affine_dimension: None,
        direction_scale: None,
        clauses: Vec::new(),
        orbit_values: Vec::new(),
    };

    clauses.push(Clause {
        id: "a",
        statement: "the covariance constraints are consistent",
        passed: solved.is_ok(),
        detail: match &solved {
            Ok(_) => "exact particular solution found".into(),
            Err(e) => e.to_string(),
        },
    });

    let solution: Option<AffineSolution> = solved.ok();
    if let Some(sol) = &solution {
        report.rank = sol.rank;
        report.affine_dimension = Some(sol.dimension());
    }
    let dim = solution.as_ref().map(AffineSolution::dimension);
    clauses.push(Clause {
        id: "b",
        statement: "the solution set is an affine line",
        passed: dim == Some(1),
        detail: match dim {
            Some(d) => format!("affine dimension {d}"),
            None => "no solution".into(),
        },
    });

    let cm_violation = sys.first_violation(&cm).map(|r| r.tag.to_string());
    let ccm_violation = sys.first_violation(&ccm).map(|r| r.tag.to_string());
    clauses.push(Clause {
        id: "c",
        statement: "center of mass and circumcenter tensors both satisfy every row",
        passed: cm_violation.is_none() && ccm_violation.is_none(),
        detail: match (&cm_violation, &ccm_violation) {
            (None, None) => format!("{} rows checked for each", sys.rows().len()),
            (Some(r), _) => format!("center of mass violates {r}"),
            (None, Some(r)) => format!("circumcenter violates {r}"),
        },
    });

    let difference = cm.difference(&ccm);
    let scale = solution
        .as_ref()
        .filter(|s| s.dimension() == 1)
        .and_then(|s| parallel_scale(&s.homogeneous_basis[0], &difference));
    report.direction_scale = scale.as_ref().map(format_exact);
    clauses.push(Clause {
        id: "d",
        statement: "the line is parallel to cm - ccm",
        passed: scale.is_some(),
        detail: match &scale {
            Some(l) => format!("homogeneous direction = {} * (cm - ccm)", format_exact(l)),
            None => "not parallel or not one-dimensional".into(),
        },
    });

    let relations = match &solution {
        Some(sol) if sol.dimension() == 1 => {
            let next = sol.particular.sum(&sol.homogeneous_basis[0]);
            orbit_relations(n, &sol.particular).and_then(|_| orbit_relations(n, &next))
        }
        Some(sol) => orbit_relations(n, &sol.particular),
        None => Err("no solution".into()),
    };
    clauses.push(Clause {
        id: "e",
        statement: "on the solution line the surviving orbits obey the affine relations and all other orbits vanish",
        passed: relations.is_ok(),
        detail: relations.err().unwrap_or_else(|| "checked at two distinct points of the line".into()),
    });

    if let Some(sol) = &solution {
        let zero = CenterCoefficients::zeros(n);
        let direction = sol.homogeneous_basis.first().unwrap_or(&zero);
        report.orbit_values = ORBITS
            .iter()
            .filter(|o| o.min_dim <= n)
            .map(|o| OrbitValue {
                orbit: o.coefficient_key().label(),
                at_particular: format_exact(o.value(&sol.particular)),
                along_line: format_exact(o.value(direction)),
            })
            .collect();
    }
    report.clauses = clauses;
    Ok(report)
}

/// Certifies that the polynomial isometry-covariant centers in dimension `n`
/// form exactly the line through the center of mass and the circumcenter.
pub fn certify_uniqueness(n: usize) -> Result<UniquenessReport, Error> {
    let report = uniqueness_report(n)?;
    if let Some(c) = report.first_failure() {
        return Err(Error::CertificationFailed(format!(
            "clause ({}) {}: {}",
            c.id, c.statement, c.detail
        )));
    }
    Ok(report)
}

#[derive(Debug, Clone, Serialize)]
pub struct RankReport {
    pub dimension: usize,
    pub trials: usize,
    pub expected_rank: usize,
    pub rank: usize,
}

/// Evaluates every `X_{i,jk}` (with `j <= k`) on `trials` random rational
/// configurations and returns the exact rank of the resulting matrix.
pub fn evaluation_matrix(n: usize, trials: usize, sampler: &mut Sampler) -> Vec<Vec<Rational>> {
    (0..trials)
        .map(|_| {
            let c = sampler.configuration(n);
            let mut row = Vec::with_capacity(basis_size(n));
            for i in 0..n {
                for j in 0..n {
                    for k in j..n {
                        row.push(eval_x(&c, i, j, k).expect("indices in range"));
                    }
                }
            }
            row
        })
        .collect()
}

/// Linear independence of the `n^2 (n+1) / 2` determinants `X_{i,jk}`.
pub fn basis_rank_check(n: usize, trials: usize, sampler: &mut Sampler) -> Result<RankReport, Error> {
    let expected = basis_size(n);
    if trials < expected {
        return Err(Error::InvalidParameter(format!(
            "need at least {expected} trials for rank {expected}, got {trials}"
        )));
    }
    let rank = linalg::rank(&evaluation_matrix(n, trials, sampler));
    if rank != expected {
        return Err(Error::RankDeficient { rank, expected });
    }
    Ok(RankReport {
        dimension: n,
        trials,
        expected_rank: expected,
        rank,
    })
}
