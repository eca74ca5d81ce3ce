//! Machine-readable check certificates.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Outcome of one identity/inequality check on a (graph, partition) pair.
/// `holds` records whether the checked relation was satisfied; a false
/// value is data (a counterexample witness), not an error.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VerificationReport {
    pub check: String,
    pub graph6: String,
    pub partition: Vec<Vec<usize>>,
    pub lhs: i64,
    pub rhs: i64,
    pub holds: bool,
    pub witness: BTreeMap<String, i64>,
}

impl VerificationReport {
    pub fn new(
        check: &str,
        graph6: String,
        partition: Vec<Vec<usize>>,
        lhs: i64,
        rhs: i64,
        holds: bool,
    ) -> Self {
        VerificationReport {
            check: check.to_string(),
            graph6,
            partition,
            lhs,
            rhs,
            holds,
            witness: BTreeMap::new(),
        }
    }

    pub fn with(mut self, key: &str, value: i64) -> Self {
        self.witness.insert(key.to_string(), value);
        self
    }
}
