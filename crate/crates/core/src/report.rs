//! Structured pass/fail records produced by the verifiers.

use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::cube::{Count, VertexSet};
use crate::family::Family;

/// Evidence attached to a failing (or, for searches, an extremal) check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    Vertex(VertexSet),
    Family(Family),
}

impl Serialize for Witness {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Witness::Vertex(v) => v.elements().collect::<Vec<u32>>().serialize(serializer),
            Witness::Family(f) => f
                .iter()
                .map(|v| v.elements().collect::<Vec<u32>>())
                .collect::<Vec<_>>()
                .serialize(serializer),
        }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Vertex(v) => write!(f, "{v}"),
            Witness::Family(fam) => {
                f.write_str("[")?;
                for (i, v) in fam.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{v}")?;
                }
                f.write_str("]")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub m: Option<Count>,
    pub measured: Option<Count>,
    pub bound: Option<Count>,
    pub witness: Option<Witness>,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool) -> Self {
        Check {
            name: name.into(),
            passed,
            m: None,
            measured: None,
            bound: None,
            witness: None,
        }
    }

    pub fn with_m(mut self, m: Count) -> Self {
        self.m = Some(m);
        self
    }

    pub fn with_values(mut self, measured: Count, bound: Count) -> Self {
        self.measured = Some(measured);
        self.bound = Some(bound);
        self
    }

    pub fn with_witness(mut self, witness: Option<Witness>) -> Self {
        self.witness = witness;
        self
    }

    pub fn status(&self) -> &'static str {
        if self.passed {
            "pass"
        } else {
            "fail"
        }
    }
}

impl Serialize for Check {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let fields = 5 + usize::from(self.witness.is_some());
        let mut s = serializer.serialize_struct("Check", fields)?;
        s.serialize_field("check", &self.name)?;
        s.serialize_field("status", self.status())?;
        s.serialize_field("m", &self.m)?;
        s.serialize_field("measured", &self.measured)?;
        s.serialize_field("bound", &self.bound)?;
        if let Some(w) = &self.witness {
            s.serialize_field("witness", w)?;
        }
        s.end()
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:<4}  {}", self.status().to_uppercase(), self.name)?;
        if let Some(m) = self.m {
            write!(f, "  m={m}")?;
        }
        if let Some(v) = self.measured {
            write!(f, "  measured={v}")?;
        }
        if let Some(v) = self.bound {
            write!(f, "  bound={v}")?;
        }
        if let Some(w) = &self.witness {
            write!(f, "  witness={w}")?;
        }
        Ok(())
    }
}

/// Ordered list of checks about one subject. Content depends only on the
/// inputs (and the seed, for sampled checks).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub subject: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    pub status: &'static str,
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn new(subject: impl Into<String>) -> Self {
        VerificationReport {
            subject: subject.into(),
            note: None,
            status: "pass",
            checks: Vec::new(),
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn push(&mut self, check: Check) {
        if !check.passed {
            self.status = "fail";
        }
        self.checks.push(check);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "# {} [{}]", self.subject, self.status)?;
        if let Some(note) = &self.note {
            writeln!(f, "# note: {note}")?;
        }
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        Ok(())
    }
}
