//! Claim suites behind the `verify` command line tool.
//!
//! Every suite returns [`ClaimResult`]s: a stable claim id, a verdict, the
//! statement being checked and machine-readable evidence. Reports are
//! deterministic apart from `elapsed_ms`, which [`Report::zero_elapsed`]
//! clears for comparisons.

mod cache;
mod census;
mod corpus;
mod p2qr;
mod pqrs;
mod theorems;

use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::Value;

pub use cache::ReportCache;
pub use census::{census, census_entries, CensusEntry};
pub use corpus::{corpus, CorpusGroup};
pub use p2qr::{p2qr, p2qr_candidates, Candidate};
pub use pqrs::pqrs;
pub use theorems::theorems;

use crate::error::Result;
use crate::numtheory::{equation_registry, fraction_bounds};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Verified,
    Partial,
    Refuted,
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Status::Verified => "verified",
            Status::Partial => "partial",
            Status::Refuted => "refuted",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClaimResult {
    pub claim_id: String,
    pub status: Status,
    pub statement: String,
    pub evidence: Vec<Value>,
    pub elapsed_ms: u64,
}

impl ClaimResult {
    /// Counterexamples recorded in the evidence (entries tagged
    /// `"counterexample"`).
    pub fn counterexamples(&self) -> Vec<&Value> {
        self.evidence
            .iter()
            .filter(|v| v.get("counterexample").is_some())
            .collect()
    }
}

/// Times a claim computation; the closure returns status and evidence.
pub(crate) fn timed<F>(claim_id: &str, statement: &str, f: F) -> Result<ClaimResult>
where
    F: FnOnce() -> Result<(Status, Vec<Value>)>,
{
    let start = Instant::now();
    let (mut status, evidence) = f()?;
    let has_counterexample = evidence.iter().any(|v| v.get("counterexample").is_some());
    if status == Status::Refuted && !has_counterexample {
        // a refutation must carry a concrete counterexample
        log::warn!("claim {claim_id} refuted without counterexample; downgraded to partial");
        status = Status::Partial;
    }
    Ok(ClaimResult {
        claim_id: claim_id.to_string(),
        status,
        statement: statement.to_string(),
        evidence,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub tool_version: String,
    pub claims: Vec<ClaimResult>,
}

impl Report {
    pub fn new(claims: Vec<ClaimResult>) -> Report {
        Report {
            tool_version: TOOL_VERSION.to_string(),
            claims,
        }
    }

    pub fn zero_elapsed(mut self) -> Report {
        for c in &mut self.claims {
            c.elapsed_ms = 0;
        }
        self
    }

    /// The worst status over all claims (`None` when there are none).
    pub fn overall(&self) -> Option<Status> {
        self.claims.iter().map(|c| c.status).max()
    }
}

/// Options shared by all suites.
#[derive(Default)]
pub struct Options {
    pub cache: Option<ReportCache>,
}

/// Static description of a registered claim, as printed by `list-claims`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClaimInfo {
    pub claim_id: String,
    pub kind: &'static str,
    pub command: &'static str,
    pub statement: String,
}

/// Every claim id the tool can produce, in a fixed order.
pub fn list_claims() -> Vec<ClaimInfo> {
    let mut out = vec![
        ClaimInfo {
            claim_id: "census".into(),
            kind: "census",
            command: "census",
            statement: census::STATEMENT.into(),
        },
        ClaimInfo {
            claim_id: "pqrs".into(),
            kind: "exhaustive",
            command: "pqrs",
            statement: pqrs::STATEMENT.into(),
        },
        ClaimInfo {
            claim_id: "p2qr".into(),
            kind: "candidate-search",
            command: "p2qr",
            statement: p2qr::STATEMENT.into(),
        },
    ];
    for (id, statement) in theorems::PROPERTY_CLAIMS {
        out.push(ClaimInfo {
            claim_id: id.to_string(),
            kind: "property",
            command: "theorems",
            statement: statement.to_string(),
        });
    }
    for eq in equation_registry() {
        out.push(ClaimInfo {
            claim_id: eq.id.to_string(),
            kind: "equation",
            command: "theorems",
            statement: eq.statement.to_string(),
        });
    }
    for b in fraction_bounds() {
        out.push(ClaimInfo {
            claim_id: b.id.to_string(),
            kind: "bound",
            command: "theorems",
            statement: b.statement.to_string(),
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn claim_ids_are_unique() {
        let claims = list_claims();
        let mut ids: Vec<&str> = claims.iter().map(|c| c.claim_id.as_str()).collect();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), claims.len());
    }

    #[test]
    fn refutation_needs_a_counterexample() {
        let r = timed("x", "s", || Ok((Status::Refuted, vec![]))).unwrap();
        assert_eq!(r.status, Status::Partial);
        let r = timed("x", "s", || {
            Ok((
                Status::Refuted,
                vec![serde_json::json!({"counterexample": 1})],
            ))
        })
        .unwrap();
        assert_eq!(r.status, Status::Refuted);
        assert_eq!(r.counterexamples().len(), 1);
    }

    #[test]
    fn overall_status_is_the_worst() {
        let mk = |s| ClaimResult {
            claim_id: "c".into(),
            status: s,
            statement: String::new(),
            evidence: vec![],
            elapsed_ms: 5,
        };
        let r = Report::new(vec![mk(Status::Verified), mk(Status::Partial)]);
        assert_eq!(r.overall(), Some(Status::Partial));
        assert_eq!(r.zero_elapsed().claims[0].elapsed_ms, 0);
        assert_eq!(Report::new(vec![]).overall(), None);
    }
}
