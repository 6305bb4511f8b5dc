//! Pass/fail reporting for axiom sweeps.

use std::fmt;

/// Outcome of checking a single named law over a tuple space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomCheck {
    pub name: &'static str,
    pub holds: bool,
    /// First violating tuple, rendered for display, when one exists.
    pub counterexample: Option<String>,
    /// Number of tuples examined.
    pub cases: u128,
    /// Whether the whole tuple space was swept or a seeded sample of it.
    pub exhaustive: bool,
}

impl AxiomCheck {
    pub fn passed(name: &'static str, cases: u128, exhaustive: bool) -> Self {
        AxiomCheck {
            name,
            holds: true,
            counterexample: None,
            cases,
            exhaustive,
        }
    }

    pub fn failed(name: &'static str, witness: String, cases: u128, exhaustive: bool) -> Self {
        AxiomCheck {
            name,
            holds: false,
            counterexample: Some(witness),
            cases,
            exhaustive,
        }
    }
}

impl fmt::Display for AxiomCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mode = if self.exhaustive {
            "exhaustive"
        } else {
            "sampled"
        };
        if self.holds {
            write!(f, "{}: holds ({} cases, {})", self.name, self.cases, mode)
        } else {
            write!(
                f,
                "{}: FAILS at {}",
                self.name,
                self.counterexample.as_deref().unwrap_or("?")
            )
        }
    }
}

/// A bundle of [`AxiomCheck`]s for one verification run.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AxiomReport {
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn first_failure(&self) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| !c.holds)
    }

    pub fn get(&self, name: &str) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for check in &self.checks {
            writeln!(f, "{check}")?;
        }
        Ok(())
    }
}
