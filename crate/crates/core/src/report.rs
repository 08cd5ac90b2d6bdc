//! Structured check results shared by every verification routine.

use serde::{Deserialize, Serialize};

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CheckRecord {
    pub check: String,
    pub inputs: String,
    pub expected: String,
    pub got: String,
    pub pass: bool,
    /// Set on records that document a known deviation from a printed claim.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl CheckRecord {
    pub fn new(
        check: impl Into<String>,
        inputs: impl Into<String>,
        expected: impl Into<String>,
        got: impl Into<String>,
        pass: bool,
    ) -> Self {
        Self {
            check: check.into(),
            inputs: inputs.into(),
            expected: expected.into(),
            got: got.into(),
            pass,
            note: None,
        }
    }

    /// A record whose pass flag is the equality of the two renderings.
    pub fn compare(check: impl Into<String>, inputs: impl Into<String>, expected: String, got: String) -> Self {
        let pass = expected == got;
        Self::new(check, inputs, expected, got, pass)
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
pub struct Report {
    pub records: Vec<CheckRecord>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, r: CheckRecord) {
        self.records.push(r);
    }

    pub fn extend(&mut self, other: Report) {
        self.records.extend(other.records);
    }

    pub fn all_pass(&self) -> bool {
        self.records.iter().all(|r| r.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.records.iter().filter(|r| !r.pass)
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }
}

impl FromIterator<CheckRecord> for Report {
    fn from_iter<I: IntoIterator<Item = CheckRecord>>(iter: I) -> Self {
        Self {
            records: iter.into_iter().collect(),
        }
    }
}
