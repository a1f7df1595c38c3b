//! The JSON document every command can emit.

use rimhook_core::{Partition, QClass};
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputDocument {
    pub schema_version: String,
    pub command: CommandEcho,
    pub result: ResultPayload,
}

impl OutputDocument {
    pub fn new(command: CommandEcho, result: ResultPayload) -> Self {
        OutputDocument { schema_version: SCHEMA_VERSION.to_string(), command, result }
    }

    pub fn to_json(&self) -> serde_json::Result<String> {
        serde_json::to_string_pretty(self)
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }
}

/// The parsed command line, echoed back.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "name", rename_all = "snake_case")]
pub enum CommandEcho {
    Qlr { l: usize, k: usize, lambda: Vec<usize>, mu: Vec<usize>, nu: Vec<usize>, dual: bool, explain: bool },
    Product { l: usize, k: usize, lambda: Vec<usize>, mu: Vec<usize>, dual: bool, verify: bool },
    Qkostka { l: usize, k: usize, lambda: Vec<usize>, nu: Vec<usize>, mu_list: Vec<usize>, show_tableaux: bool },
    Reduce { l: usize, k: usize, lambda: Vec<usize> },
    Core { n: usize, k: Option<usize>, lambda: Vec<usize> },
    Table { l: usize, k: usize, max_degree: Option<usize>, out: String },
    Selftest { max_size: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ResultPayload {
    Coefficient { value: i64, m: Option<usize>, note: Option<String>, terms: Vec<PreimageDoc> },
    Class { terms: Vec<TermDoc>, verified: Option<bool> },
    Kostka { value: u64, m: Option<usize>, note: Option<String>, tableaux: Vec<String> },
    Reduced { term: Option<TermDoc> },
    Core { core: Vec<usize>, m: usize, widths: Vec<usize>, sign: Option<i64> },
    Table { rows: Vec<TableRow> },
    Written { path: String, rows: usize },
    Selftest { passed: bool, checks: Vec<CheckDoc> },
}

/// `coefficient · q^m σ_partition`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermDoc {
    pub coefficient: i64,
    pub m: usize,
    pub partition: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PreimageDoc {
    pub rho: Vec<usize>,
    pub sign: i64,
    pub classical: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub l: usize,
    pub k: usize,
    pub lambda: Vec<usize>,
    pub mu: Vec<usize>,
    pub nu: Vec<usize>,
    pub m: usize,
    pub coefficient: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckDoc {
    pub name: String,
    pub cases: u64,
    pub failures: u64,
}

pub fn parts(p: &Partition) -> Vec<usize> {
    p.parts().to_vec()
}

/// Terms in `(m, ν)` ascending order.
pub fn class_terms(x: &QClass) -> Vec<TermDoc> {
    x.terms().map(|(m, nu, c)| TermDoc { coefficient: c, m, partition: parts(nu) }).collect()
}
