use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{verify_defining_relations, RepLabel};
use crate::error::Result;
use crate::hyper::identities::{all_suites, IdentityReport};
use crate::oscillator::{m_k, spectral_checks, Corruption};
use crate::report::Check;

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyOptions {
    /// Float checks run for `0 <= j <= j_max`.
    pub j_max: u32,
    /// Exact identity suites run up to this size.
    pub exact_j_max: u32,
    pub tol: f64,
    /// Adds 1 to `M_k` in every position matrix checked.
    pub corrupt_mk: Option<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub passed: bool,
    pub j_max: u32,
    pub exact_j_max: u32,
    pub tol: f64,
    pub checks: Vec<Check>,
    pub identities: Vec<IdentityReport>,
    /// Names of failed checks and identity suites.
    pub failures: Vec<String>,
}

fn float_checks(j: u32, options: &VerifyOptions) -> Result<Vec<Check>> {
    let rep = RepLabel::new(j);
    let mut checks: Vec<Check> = verify_defining_relations(rep, options.tol)
        .checks
        .into_iter()
        .map(|c| Check { name: format!("{} (j={j})", c.name), ..c })
        .collect();
    let corruption = match options.corrupt_mk {
        Some(k) if k + 1 < rep.dim() => Some(Corruption { k, value: m_k(k, rep)? + 1.0 }),
        _ => None,
    };
    checks.extend(spectral_checks(rep, options.tol, corruption)?.checks);
    Ok(checks)
}

pub fn run_verification(options: &VerifyOptions) -> Result<VerifyReport> {
    let (per_j, identities) = rayon::join(
        || (0..=options.j_max).into_par_iter().map(|j| float_checks(j, options)).collect::<Result<Vec<_>>>(),
        || all_suites(options.exact_j_max),
    );
    let checks: Vec<Check> = per_j?.into_iter().flatten().collect();
    let failures: Vec<String> = checks
        .iter()
        .filter(|c| !c.passed)
        .map(|c| c.name.clone())
        .chain(identities.iter().filter(|r| !r.passed()).map(|r| r.name.to_string()))
        .collect();
    Ok(VerifyReport {
        passed: failures.is_empty(),
        j_max: options.j_max,
        exact_j_max: options.exact_j_max,
        tol: options.tol,
        checks,
        identities,
        failures,
    })
}
