//! Violation reports shared by all validators.

use std::fmt;

/// One failed axiom instance: the axiom's name and the witnessing data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub axiom: &'static str,
    pub witness: String,
}

impl Violation {
    pub fn new(axiom: &'static str, witness: impl Into<String>) -> Self {
        Violation {
            axiom,
            witness: witness.into(),
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.axiom, self.witness)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, axiom: &'static str, witness: impl Into<String>) {
        self.violations.push(Violation::new(axiom, witness));
    }

    pub fn extend(&mut self, other: ValidationReport) {
        self.violations.extend(other.violations);
    }

    /// Adds `other` with every witness prefixed by `context`.
    pub fn extend_with_context(&mut self, context: &str, other: ValidationReport) {
        self.violations
            .extend(other.violations.into_iter().map(|v| Violation {
                axiom: v.axiom,
                witness: format!("{context}: {}", v.witness),
            }));
    }

    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn mentions(&self, axiom: &str) -> bool {
        self.violations.iter().any(|v| v.axiom == axiom)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_ok() {
            return write!(f, "ok");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}
