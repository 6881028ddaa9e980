//! Verification reports: named checks with instance and failure counts.

use serde::{Deserialize, Serialize};

/// Failure messages kept per check; the count is always exact.
const MAX_EXAMPLES: usize = 5;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub instances: u64,
    pub failures: u64,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub examples: Vec<String>,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// Ordered collection of checks. Order is first-recorded, so a report built
/// by a deterministic traversal serializes deterministically.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    fn entry(&mut self, name: &str) -> &mut Check {
        let pos = match self.checks.iter().position(|c| c.name == name) {
            Some(p) => p,
            None => {
                self.checks.push(Check { name: name.to_string(), instances: 0, failures: 0, examples: vec![] });
                self.checks.len() - 1
            }
        };
        &mut self.checks[pos]
    }

    /// Records one instance; `detail` is only evaluated on failure.
    pub fn record(&mut self, name: &str, ok: bool, detail: impl FnOnce() -> String) {
        let c = self.entry(name);
        c.instances += 1;
        if !ok {
            c.failures += 1;
            if c.examples.len() < MAX_EXAMPLES {
                c.examples.push(detail());
            }
        }
    }

    /// Registers a check with zero instances so that vacuous checks still
    /// appear in the output.
    pub fn declare(&mut self, name: &str) {
        self.entry(name);
    }

    /// Appends every check of `other`, merging by name.
    pub fn merge(&mut self, other: Report) {
        for c in other.checks {
            let e = self.entry(&c.name);
            e.instances += c.instances;
            e.failures += c.failures;
            for ex in c.examples {
                if e.examples.len() < MAX_EXAMPLES {
                    e.examples.push(ex);
                }
            }
        }
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn failures(&self) -> u64 {
        self.checks.iter().map(|c| c.failures).sum()
    }

    pub fn instances(&self) -> u64 {
        self.checks.iter().map(|c| c.instances).sum()
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn merge_keeps_order_and_counts() {
        let mut a = Report::new();
        a.record("x", true, String::new);
        a.record("y", false, || "bad".into());
        let mut b = Report::new();
        b.record("y", true, String::new);
        b.record("z", true, String::new);
        a.merge(b);
        let names: Vec<&str> = a.checks.iter().map(|c| c.name.as_str()).collect();
        assert_eq!(names, ["x", "y", "z"]);
        assert_eq!(a.get("y").unwrap().instances, 2);
        assert_eq!(a.failures(), 1);
        assert!(!a.all_passed());
    }
}
