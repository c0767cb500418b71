//! Campaign reports: one record per checked claim, JSON schema version 1.

use std::fmt;
use std::time::Instant;

use serde::Serialize;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    pub claim: String,
    pub anchor: String,
    /// graph6 of the graph checked, or the pattern expression when the
    /// claim is about several graphs.
    pub input: String,
    pub expected: String,
    pub observed: String,
    pub ok: bool,
    pub ms: u64,
}

impl CheckRecord {
    /// `ok` is `expected == observed`; `ms` runs from `started`.
    pub fn compare(
        claim: impl Into<String>,
        anchor: impl Into<String>,
        input: impl Into<String>,
        expected: impl ToString,
        observed: impl ToString,
        started: Instant,
    ) -> Self {
        let expected = expected.to_string();
        let observed = observed.to_string();
        CheckRecord {
            claim: claim.into(),
            anchor: anchor.into(),
            input: input.into(),
            ok: expected == observed,
            expected,
            observed,
            ms: started.elapsed().as_millis() as u64,
        }
    }

    /// Same record with `ms` zeroed, for byte comparisons across runs.
    pub fn untimed(&self) -> Self {
        CheckRecord { ms: 0, ..self.clone() }
    }
}

/// Invariant: `passed + failed == total == checks.len()`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CampaignReport {
    pub schema: u32,
    pub campaign: String,
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    /// Scope statements that qualify what a pass means.
    pub notes: Vec<String>,
    pub checks: Vec<CheckRecord>,
}

impl CampaignReport {
    pub fn new(campaign: &str, notes: Vec<String>, checks: Vec<CheckRecord>) -> Self {
        let passed = checks.iter().filter(|c| c.ok).count();
        CampaignReport {
            schema: SCHEMA_VERSION,
            campaign: campaign.to_string(),
            total: checks.len(),
            passed,
            failed: checks.len() - passed,
            notes,
            checks,
        }
    }

    pub fn ok(&self) -> bool {
        self.failed == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.checks.iter().filter(|c| !c.ok)
    }

    pub fn elapsed_ms(&self) -> u64 {
        self.checks.iter().map(|c| c.ms).sum()
    }

    pub fn untimed(&self) -> Self {
        CampaignReport { checks: self.checks.iter().map(CheckRecord::untimed).collect(), ..self.clone() }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

impl fmt::Display for CampaignReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "campaign {}: {}/{} passed", self.campaign, self.passed, self.total)?;
        for n in &self.notes {
            writeln!(f, "  note: {n}")?;
        }
        for c in &self.checks {
            let mark = if c.ok { "ok  " } else { "FAIL" };
            writeln!(f, "  {mark} [{}] {} ({} ms)", c.anchor, c.claim, c.ms)?;
            if !c.ok {
                writeln!(f, "       input {}", c.input)?;
                writeln!(f, "       expected {}", c.expected)?;
                writeln!(f, "       observed {}", c.observed)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_and_schema() {
        let t = Instant::now();
        let r = CampaignReport::new(
            "demo",
            vec![],
            vec![
                CheckRecord::compare("a", "x", "C~", true, true, t),
                CheckRecord::compare("b", "x", "C~", 3, 4, t),
            ],
        );
        assert_eq!((r.total, r.passed, r.failed), (2, 1, 1));
        assert!(!r.ok());
        assert_eq!(r.failures().next().unwrap().claim, "b");
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["schema"], 1);
        assert_eq!(v["checks"][1]["observed"], "4");
        let mut keys: Vec<&str> = v["checks"][0].as_object().unwrap().keys().map(|k| k.as_str()).collect();
        keys.sort_unstable();
        assert_eq!(keys, ["anchor", "claim", "expected", "input", "ms", "observed", "ok"]);
    }
}
