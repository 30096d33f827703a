use std::collections::BTreeMap;

use serde::Serialize;

use crate::graph::Graph;

/// A graph on which a claim failed, with a note on what went wrong.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub graph: Graph,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClaimResult {
    pub claim: String,
    pub checked: u64,
    pub failures: u64,
    pub passed: bool,
    pub witness: Option<Witness>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub params: BTreeMap<String, String>,
    pub instances: u64,
    pub claims: Vec<ClaimResult>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.claims.iter().all(|c| c.passed)
    }

    pub fn claim(&self, name: &str) -> Option<&ClaimResult> {
        self.claims.iter().find(|c| c.claim == name)
    }

    pub fn failed_claims(&self) -> impl Iterator<Item = &ClaimResult> {
        self.claims.iter().filter(|c| !c.passed)
    }
}

#[derive(Debug, Clone, Default)]
struct Tally {
    checked: u64,
    failures: u64,
    witness: Option<(u64, Witness)>,
}

/// Per-claim counters for one shard of a suite. Merging keeps the witness
/// with the smallest instance key, so the result does not depend on how
/// instances were split between workers.
#[derive(Debug, Clone)]
pub(crate) struct Tallies {
    names: &'static [&'static str],
    tallies: Vec<Tally>,
    pub(crate) instances: u64,
}

impl Tallies {
    pub(crate) fn new(names: &'static [&'static str]) -> Self {
        Tallies {
            names,
            tallies: vec![Tally::default(); names.len()],
            instances: 0,
        }
    }

    pub(crate) fn record(&mut self, claim: usize, key: u64, ok: bool, g: &Graph, detail: impl FnOnce() -> String) {
        let t = &mut self.tallies[claim];
        t.checked += 1;
        if ok {
            return;
        }
        t.failures += 1;
        if t.witness.as_ref().is_none_or(|(k, _)| key < *k) {
            t.witness = Some((
                key,
                Witness {
                    graph: g.clone(),
                    detail: detail(),
                },
            ));
        }
    }

    pub(crate) fn merge(mut self, other: Tallies) -> Tallies {
        self.instances += other.instances;
        for (mine, theirs) in self.tallies.iter_mut().zip(other.tallies) {
            mine.checked += theirs.checked;
            mine.failures += theirs.failures;
            mine.witness = match (mine.witness.take(), theirs.witness) {
                (Some(a), Some(b)) => Some(if b.0 < a.0 { b } else { a }),
                (a, b) => a.or(b),
            };
        }
        self
    }

    pub(crate) fn into_report(self, suite: &str, params: BTreeMap<String, String>) -> VerificationReport {
        let claims = self
            .names
            .iter()
            .zip(self.tallies)
            .map(|(name, t)| ClaimResult {
                claim: name.to_string(),
                checked: t.checked,
                failures: t.failures,
                passed: t.failures == 0,
                witness: t.witness.map(|(_, w)| w),
            })
            .collect();
        VerificationReport {
            suite: suite.to_string(),
            params,
            instances: self.instances,
            claims,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const NAMES: [&str; 2] = ["a", "b"];

    #[test]
    fn merge_keeps_smallest_witness() {
        let g1 = Graph::empty(1);
        let g2 = Graph::empty(2);
        let mut left = Tallies::new(&NAMES);
        left.record(0, 7, false, &g1, || "late".into());
        left.record(1, 7, true, &g1, String::new);
        let mut right = Tallies::new(&NAMES);
        right.record(0, 3, false, &g2, || "early".into());
        let a = left.clone().merge(right.clone()).into_report("t", BTreeMap::new());
        let b = right.merge(left).into_report("t", BTreeMap::new());
        assert_eq!(a, b);
        let claim = a.claim("a").unwrap();
        assert_eq!((claim.checked, claim.failures), (2, 2));
        assert_eq!(claim.witness.as_ref().unwrap().detail, "early");
        assert!(a.claim("b").unwrap().passed);
        assert!(!a.passed());
    }
}
