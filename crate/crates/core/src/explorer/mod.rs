//! Topology enumeration, exhaustive implication checks and the claim audit.

pub mod audit;
pub mod check;
pub mod enumerate;

use thiserror::Error;

pub use audit::{audit_claims, audit_records, load_claims, named_space, AuditCell, AuditFinding, AuditReport, AuditTarget, ClaimRecord};
pub use check::{
    check_implication, run_theorem_suite, search_minimal_counterexample, CounterexampleReport, ImplicationSpec,
    Outcome, Theorem, TheoremOutcome, THEOREMS,
};
pub use enumerate::{count_preorders, enumerate_topologies, PreorderEnumerator, Relabeler, MAX_ENUMERATION_POINTS};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExplorerError {
    #[error("point count {n} is outside 1..={max}", max = MAX_ENUMERATION_POINTS)]
    Range { n: usize },
    #[error("empty point-count range {start}..{end}")]
    EmptyRange { start: usize, end: usize },
}
