use serde::Serialize;

/// One named residual measured against a tolerance.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub residual: f64,
    pub tol: f64,
    pub passed: bool,
}

impl Check {
    pub fn residual(name: impl Into<String>, residual: f64, tol: f64) -> Self {
        // NaN never passes
        let passed = residual <= tol;
        Self { name: name.into(), residual, tol, passed }
    }

    /// A check with no tolerance: exact agreement or not.
    pub fn exact(name: impl Into<String>, passed: bool) -> Self {
        Self { name: name.into(), residual: if passed { 0.0 } else { 1.0 }, tol: 0.0, passed }
    }
}

/// Ordered collection of checks.
#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}
