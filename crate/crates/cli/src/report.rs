//! JSON shapes of the command outputs. Every report deserializes back to the
//! value it was serialized from.

use serde::{Deserialize, Serialize};
use sepset_core::{AlgebraCensus, CloneLevel, ComplexityReport, VarSet};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EssReport {
    pub arity: usize,
    pub ess: VarSet,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SepReport {
    pub arity: usize,
    pub separable: Vec<VarSet>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SepVerdict {
    pub arity: usize,
    pub set: VarSet,
    pub separable: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubtermReport {
    pub arity: usize,
    pub subterm: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub arity: usize,
    pub identity: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CpReport {
    pub arity: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cp1: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cp2: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cp3: Option<ComplexityReport>,
}

impl CpReport {
    pub fn render(&self) -> String {
        let mut lines = Vec::new();
        if let Some(v) = self.cp1 {
            lines.push(format!("Cp1 = {v}"));
        }
        if let Some(v) = self.cp2 {
            lines.push(format!("Cp2 = {v}"));
        }
        if let Some(report) = &self.cp3 {
            lines.push(format!("Cp3 = {} (n = {})", report.total, report.arity));
            for sc in &report.per_set {
                lines.push(format!("  {}: {}", sc.vars, sc.count));
            }
        }
        lines.join("\n")
    }
}

pub fn render_census(census: &AlgebraCensus) -> String {
    let mut lines = vec![
        format!("algebra: {}", census.algebra),
        format!("n: {}", census.n),
        format!("clone size: {}", census.clone_size),
        format!("n-complexity: {}", census.total),
        "complexity  count".to_string(),
    ];
    for b in &census.histogram {
        lines.push(format!("{:>10}  {}", b.complexity, b.count));
    }
    lines.join("\n")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CloneMember {
    pub values: Vec<u32>,
    pub witness: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CloneReport {
    pub arity: usize,
    pub size: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub members: Option<Vec<CloneMember>>,
}

impl CloneReport {
    pub fn new(level: &CloneLevel, list: bool) -> Self {
        CloneReport {
            arity: level.arity(),
            size: level.len(),
            members: list.then(|| {
                level
                    .members()
                    .iter()
                    .enumerate()
                    .map(|(i, m)| CloneMember {
                        values: m.values().to_vec(),
                        witness: level.witness(i).to_string(),
                    })
                    .collect()
            }),
        }
    }

    pub fn render(&self) -> String {
        let mut lines = vec![format!("clone size: {} (n = {})", self.size, self.arity)];
        for m in self.members.iter().flatten() {
            let values: Vec<String> = m.values.iter().map(u32::to_string).collect();
            lines.push(format!("[{}]  {}", values.join(","), m.witness));
        }
        lines.join("\n")
    }
}
