use ccm_core::suites::{run_suite, Suite, SuiteConfig};
use ccm_core::Scalar;
use serde_json::{json, Map};

use crate::error::CliError;
use crate::output::{Emission, Table};

pub fn run<S: Scalar>(suite: Suite, cfg: &SuiteConfig) -> Result<Emission, CliError> {
    let reports = run_suite::<S>(suite, cfg)?;
    let passed = reports.iter().all(|r| r.passed);
    let mut table = Table::new(&["suite", "dimension", "backend", "property", "trials", "failures", "first_trial", "detail"]);
    for r in &reports {
        for p in &r.properties {
            let (trial, detail) = p
                .first_counterexample
                .as_ref()
                .map_or((String::new(), String::new()), |c| (c.trial.to_string(), c.detail.clone()));
            table.push(vec![
                r.suite.to_string(),
                r.dimension.to_string(),
                r.backend.to_string(),
                p.property.clone(),
                p.trials.to_string(),
                p.failures.to_string(),
                trial,
                detail,
            ]);
        }
    }
    let mut map = Map::new();
    map.insert("command".into(), json!("verify"));
    map.insert("suite".into(), json!(suite.name()));
    map.insert("dimension".into(), json!(cfg.dimension));
    map.insert("trials".into(), json!(cfg.trials));
    map.insert("seed".into(), json!(cfg.seed));
    map.insert("passed".into(), json!(passed));
    map.insert(
        "reports".into(),
        serde_json::to_value(&reports).map_err(|e| CliError::Usage(e.to_string()))?,
    );
    Ok(Emission {
        json: map,
        table,
        passed,
    })
}
