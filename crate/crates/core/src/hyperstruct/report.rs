use std::fmt;

use serde::{Deserialize, Serialize};

/// A counterexample: indices (or subset bitmasks, depending on the axiom)
/// plus a rendered explanation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub tuple: Vec<usize>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub name: String,
    pub passed: bool,
    /// Informational verdicts (such as commutativity) never fail a report.
    pub required: bool,
    pub checked: usize,
    pub witness: Option<Witness>,
}

impl Verdict {
    pub fn pass(name: &str, checked: usize) -> Self {
        Verdict { name: name.into(), passed: true, required: true, checked, witness: None }
    }

    pub fn fail(name: &str, checked: usize, tuple: Vec<usize>, detail: String) -> Self {
        Verdict { name: name.into(), passed: false, required: true, checked, witness: Some(Witness { tuple, detail }) }
    }

    pub fn from_search(name: &str, checked: usize, found: Option<(Vec<usize>, String)>) -> Self {
        match found {
            None => Self::pass(name, checked),
            Some((t, d)) => Self::fail(name, checked, t, d),
        }
    }

    pub fn informational(mut self) -> Self {
        self.required = false;
        self
    }
}

/// Per-axiom verdicts with first counterexamples.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomReport {
    pub verdicts: Vec<Verdict>,
}

impl AxiomReport {
    pub fn push(&mut self, v: Verdict) {
        self.verdicts.push(v);
    }

    pub fn extend(&mut self, other: AxiomReport) {
        self.verdicts.extend(other.verdicts);
    }

    /// Whether every required verdict passed.
    pub fn passed(&self) -> bool {
        self.verdicts.iter().all(|v| v.passed || !v.required)
    }

    pub fn get(&self, name: &str) -> Option<&Verdict> {
        self.verdicts.iter().find(|v| v.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Verdict> {
        self.verdicts.iter().filter(|v| v.required && !v.passed)
    }

    pub fn total_checked(&self) -> usize {
        self.verdicts.iter().map(|v| v.checked).sum()
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.verdicts {
            let tag = match (v.passed, v.required) {
                (true, _) => "pass",
                (false, true) => "FAIL",
                (false, false) => "no",
            };
            write!(f, "{tag:>4}  {:<28} {:>8} checked", v.name, v.checked)?;
            if let Some(w) = &v.witness {
                write!(f, "  witness {:?}: {}", w.tuple, w.detail)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
