use serde::{Deserialize, Serialize};

/// One counterexample. Values are rendered in their canonical text formats.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub input: String,
    pub expected: String,
    pub actual: String,
}

impl Failure {
    pub fn new(input: impl ToString, expected: impl ToString, actual: impl ToString) -> Self {
        Failure {
            input: input.to_string(),
            expected: expected.to_string(),
            actual: actual.to_string(),
        }
    }
}

/// Outcome of an exhaustive check. Passes iff `failures` is empty.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub size_range: [usize; 2],
    pub checked: u64,
    pub failures: Vec<Failure>,
    pub elapsed_ms: u64,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>, lo: usize, hi: usize) -> Self {
        VerificationReport {
            suite: suite.into(),
            size_range: [lo, hi],
            checked: 0,
            failures: Vec::new(),
            elapsed_ms: 0,
            notes: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Folds `other` into `self`, keeping at most `limit` failures.
    /// Associative, so partial reports from workers can be merged in any grouping.
    pub fn merge(mut self, other: VerificationReport, limit: usize) -> VerificationReport {
        self.checked += other.checked;
        self.size_range = [
            self.size_range[0].min(other.size_range[0]),
            self.size_range[1].max(other.size_range[1]),
        ];
        let room = limit.saturating_sub(self.failures.len());
        self.failures.extend(other.failures.into_iter().take(room));
        self.elapsed_ms += other.elapsed_ms;
        self.notes.extend(other.notes);
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}
