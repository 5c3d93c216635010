//! Verification reports: one entry per checked identity instance.

use serde::Serialize;
use std::fmt;

#[derive(Serialize, Clone, Copy, Debug, PartialEq, Eq)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Serialize, Clone, Debug)]
pub struct Entry {
    pub identity_id: String,
    pub parameters: serde_json::Value,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Serialize, Clone, Debug, Default)]
#[serde(transparent)]
pub struct Report {
    pub entries: Vec<Entry>,
}

impl Report {
    pub fn new() -> Report {
        Report::default()
    }

    pub fn push(&mut self, id: &str, params: serde_json::Value, ok: bool, witness: impl FnOnce() -> String) {
        self.entries.push(Entry {
            identity_id: id.to_string(),
            parameters: params,
            status: if ok { Status::Pass } else { Status::Fail },
            witness: if ok { None } else { Some(witness()) },
        });
    }

    pub fn pass(&mut self, id: &str, params: serde_json::Value) {
        self.push(id, params, true, String::new);
    }

    pub fn fail(&mut self, id: &str, params: serde_json::Value, witness: String) {
        self.push(id, params, false, || witness);
    }

    pub fn extend(&mut self, other: Report) {
        self.entries.extend(other.entries);
    }

    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|e| e.status == Status::Pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Entry> {
        self.entries.iter().filter(|e| e.status == Status::Fail)
    }

    /// First failing entry, if any.
    pub fn first_failure(&self) -> Option<&Entry> {
        self.failures().next()
    }

    pub fn count(&self) -> (usize, usize) {
        let pass = self.entries.iter().filter(|e| e.status == Status::Pass).count();
        (pass, self.entries.len() - pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.entries {
            let st = match e.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
            };
            write!(f, "{st} {} {}", e.identity_id, e.parameters)?;
            if let Some(w) = &e.witness {
                write!(f, "  witness: {w}")?;
            }
            writeln!(f)?;
        }
        let (p, fl) = self.count();
        writeln!(f, "{p} passed, {fl} failed")
    }
}
