//! Verification reports: an ordered list of stages, each with exactly one
//! status, plus the literature inputs a conclusion rests on.

use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StageStatus {
    Verified,
    Derived,
    Assumed,
    Failed,
}

impl StageStatus {
    pub fn label(self) -> &'static str {
        match self {
            Self::Verified => "VERIFIED",
            Self::Derived => "DERIVED",
            Self::Assumed => "ASSUMED",
            Self::Failed => "FAILED",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Stage {
    pub name: String,
    pub status: StageStatus,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub citation: Option<String>,
    pub witness: Value,
}

impl Stage {
    pub fn new(name: impl Into<String>, status: StageStatus, witness: Value) -> Self {
        Self {
            name: name.into(),
            status,
            citation: None,
            witness,
        }
    }

    pub fn check(name: impl Into<String>, ok: bool, witness: Value) -> Self {
        let status = if ok { StageStatus::Verified } else { StageStatus::Failed };
        Self::new(name, status, witness)
    }

    pub fn assumed(name: impl Into<String>, citation: impl Into<String>, witness: Value) -> Self {
        Self {
            citation: Some(citation.into()),
            ..Self::new(name, StageStatus::Assumed, witness)
        }
    }

    pub fn with_citation(mut self, citation: impl Into<String>) -> Self {
        self.citation = Some(citation.into());
        self
    }

    fn witness_text(&self) -> String {
        match &self.witness {
            Value::String(s) => s.clone(),
            Value::Null => String::new(),
            v => v.to_string(),
        }
    }
}

/// A literature fact a conclusion depends on but that is never recomputed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Assumption {
    pub statement: String,
    pub citation: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub version: String,
    pub command: String,
    pub params: Value,
    pub stages: Vec<Stage>,
    #[serde(default)]
    pub assumptions: Vec<Assumption>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl ReportDocument {
    pub fn new(command: impl Into<String>, params: Value) -> Self {
        Self {
            version: env!("CARGO_PKG_VERSION").to_string(),
            command: command.into(),
            params,
            stages: Vec::new(),
            assumptions: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn push(&mut self, stage: Stage) -> bool {
        let ok = stage.status != StageStatus::Failed;
        self.stages.push(stage);
        ok
    }

    pub fn assume(&mut self, statement: impl Into<String>, citation: impl Into<String>) {
        self.assumptions.push(Assumption {
            statement: statement.into(),
            citation: citation.into(),
        });
    }

    pub fn stage(&self, name: &str) -> Option<&Stage> {
        self.stages.iter().find(|s| s.name == name)
    }

    pub fn failed(&self) -> bool {
        self.stages.iter().any(|s| s.status == StageStatus::Failed)
    }

    pub fn exit_code(&self) -> i32 {
        i32::from(self.failed())
    }

    /// Assumed stages and assumptions must cite something.
    pub fn validate(&self) -> Result<()> {
        for s in &self.stages {
            if s.status == StageStatus::Assumed && s.citation.as_deref().is_none_or(str::is_empty) {
                return Err(Error::Parse(format!("assumed stage {:?} has no citation", s.name)));
            }
        }
        if let Some(a) = self.assumptions.iter().find(|a| a.citation.is_empty()) {
            return Err(Error::Parse(format!("assumption {:?} has no citation", a.statement)));
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let doc: Self = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        doc.validate()?;
        Ok(doc)
    }
}

impl fmt::Display for ReportDocument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.stages {
            writeln!(f, "[{}] {} — {}", s.status.label(), s.name, s.witness_text())?;
        }
        for a in &self.assumptions {
            writeln!(f, "[ASSUMED] {} — {}", a.statement, a.citation)?;
        }
        for n in &self.notes {
            writeln!(f, "note: {n}")?;
        }
        Ok(())
    }
}
