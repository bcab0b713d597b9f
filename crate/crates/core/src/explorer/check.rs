//! Exhaustive implication checks and minimal-counterexample search.

use std::ops::RangeInclusive;

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::axioms::{self, Axiom, MeeklyOptions, Refutation};
use crate::space::{SpaceContext, SpaceFile, Topology};

use super::enumerate::{check_range, PreorderEnumerator, Relabeler};
use super::ExplorerError;

/// "The conjunction of `hypotheses` implies `conclusion`" over a range of
/// point counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ImplicationSpec {
    pub hypotheses: Vec<Axiom>,
    pub conclusion: Axiom,
    pub options: MeeklyOptions,
    pub n_range: RangeInclusive<usize>,
    pub up_to_homeomorphism: bool,
}

impl ImplicationSpec {
    pub fn new(hypotheses: &[Axiom], conclusion: Axiom, n_range: RangeInclusive<usize>) -> Self {
        ImplicationSpec {
            hypotheses: hypotheses.to_vec(),
            conclusion,
            options: MeeklyOptions::default(),
            n_range,
            up_to_homeomorphism: false,
        }
    }

    pub fn with_options(mut self, options: MeeklyOptions) -> Self {
        self.options = options;
        self
    }

    pub fn up_to_homeomorphism(mut self, yes: bool) -> Self {
        self.up_to_homeomorphism = yes;
        self
    }

    pub fn validate(&self) -> Result<(), ExplorerError> {
        check_range(*self.n_range.start())?;
        check_range(*self.n_range.end())?;
        if self.n_range.is_empty() {
            return Err(ExplorerError::EmptyRange {
                start: *self.n_range.start(),
                end: *self.n_range.end(),
            });
        }
        Ok(())
    }

    pub fn describe(&self) -> String {
        let hyps: Vec<&str> = self.hypotheses.iter().map(|a| a.name()).collect();
        format!(
            "{} => {} over n in {}..{}",
            if hyps.is_empty() { "true".to_string() } else { hyps.join(" & ") },
            self.conclusion,
            self.n_range.start(),
            self.n_range.end()
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    VerifiedExhaustively,
    Counterexample {
        topology: Topology,
        /// Why the conclusion fails on `topology`.
        refutation: Option<Refutation>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CounterexampleReport {
    pub spec: ImplicationSpec,
    /// Spaces examined, including those where a hypothesis failed.
    pub checked_count: u64,
    /// Spaces where every hypothesis held.
    pub premise_count: u64,
    pub outcome: Outcome,
}

impl CounterexampleReport {
    pub fn is_verified(&self) -> bool {
        self.outcome == Outcome::VerifiedExhaustively
    }

    pub fn counterexample(&self) -> Option<&Topology> {
        match &self.outcome {
            Outcome::Counterexample { topology, .. } => Some(topology),
            Outcome::VerifiedExhaustively => None,
        }
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "hypotheses": self.spec.hypotheses,
            "conclusion": self.spec.conclusion,
            "options": self.spec.options,
            "n_range": [self.spec.n_range.start(), self.spec.n_range.end()],
            "up_to_homeomorphism": self.spec.up_to_homeomorphism,
            "checked_count": self.checked_count,
            "premise_count": self.premise_count,
        });
        match &self.outcome {
            Outcome::VerifiedExhaustively => v["outcome"] = json!("verified-exhaustively"),
            Outcome::Counterexample { topology, refutation } => {
                v["outcome"] = json!("counterexample");
                v["space"] = serde_json::to_value(SpaceFile::from_topology(topology)).expect("space serializes");
                if let Some(r) = refutation {
                    let ctx = SpaceContext::new(topology.clone());
                    v["refutation"] = json!(axioms::describe_refutation(&ctx, r));
                }
            }
        }
        v
    }
}

#[derive(Default)]
struct ShardResult {
    checked: u64,
    premises: u64,
    best: Option<Topology>,
}

fn better(a: Option<Topology>, b: Option<Topology>) -> Option<Topology> {
    match (a, b) {
        (Some(x), Some(y)) => Some(if y.minimality_key() < x.minimality_key() { y } else { x }),
        (x, None) => x,
        (None, y) => y,
    }
}

fn merge(a: ShardResult, b: ShardResult) -> ShardResult {
    ShardResult {
        checked: a.checked + b.checked,
        premises: a.premises + b.premises,
        best: better(a.best, b.best),
    }
}

fn examine(spec: &ImplicationSpec, t: Topology, acc: &mut ShardResult) {
    acc.checked += 1;
    let ctx = SpaceContext::new(t);
    if !spec.hypotheses.iter().all(|&h| axioms::holds(&ctx, h, spec.options)) {
        return;
    }
    acc.premises += 1;
    if axioms::holds(&ctx, spec.conclusion, spec.options) {
        return;
    }
    acc.best = better(acc.best.take(), Some(ctx.topology().clone()));
}

fn scan_n(spec: &ImplicationSpec, n: usize) -> Result<ShardResult, ExplorerError> {
    let shards = PreorderEnumerator::shards(n, 64)?;
    let relabeler = spec.up_to_homeomorphism.then(|| Relabeler::new(n));
    Ok(shards
        .into_par_iter()
        .map(|shard| {
            let mut acc = ShardResult::default();
            for t in shard {
                if relabeler.as_ref().is_some_and(|r| !r.is_canonical(&t)) {
                    continue;
                }
                examine(spec, t, &mut acc);
            }
            acc
        })
        .reduce(ShardResult::default, merge))
}

/// Runs the implication over every space in range. Point counts are
/// scanned in increasing order and the scan stops after the first `n` that
/// contains a counterexample; the reported one is minimal by (points, open
/// sets, open-family encoding). Work inside each `n` is spread over the
/// current rayon pool, and the result does not depend on its size.
pub fn check_implication(spec: &ImplicationSpec) -> Result<CounterexampleReport, ExplorerError> {
    spec.validate()?;
    let mut total = ShardResult::default();
    for n in spec.n_range.clone() {
        total = merge(total, scan_n(spec, n)?);
        if total.best.is_some() {
            break;
        }
    }
    let outcome = match total.best {
        None => Outcome::VerifiedExhaustively,
        Some(topology) => {
            let ctx = SpaceContext::new(topology.clone());
            let refutation = axioms::satisfies(&ctx, spec.conclusion, spec.options).refutation;
            Outcome::Counterexample { topology, refutation }
        }
    };
    Ok(CounterexampleReport {
        spec: spec.clone(),
        checked_count: total.checked,
        premise_count: total.premises,
        outcome,
    })
}

/// Looks for the smallest space where every property in `hypotheses` holds
/// and `conclusion` fails, i.e. a space separating the two sides.
/// `VerifiedExhaustively` means no such space exists in range.
pub fn search_minimal_counterexample(spec: &ImplicationSpec) -> Result<CounterexampleReport, ExplorerError> {
    check_implication(spec)
}

/// A named implication the theorem suite runs.
#[derive(Debug, Clone, Copy)]
pub struct Theorem {
    pub name: &'static str,
    pub statement: &'static str,
    pub hypotheses: &'static [Axiom],
    pub conclusion: Axiom,
}

impl Theorem {
    pub fn involves_meekly(&self) -> bool {
        self.hypotheses.contains(&Axiom::MeeklySCStarNormal) || self.conclusion == Axiom::MeeklySCStarNormal
    }
}

pub const THEOREMS: &[Theorem] = &[
    Theorem {
        name: "sc-star-normal-implies-meekly",
        statement: "every SC*-normal space is meekly SC*-normal",
        hypotheses: &[Axiom::SCStarNormal],
        conclusion: Axiom::MeeklySCStarNormal,
    },
    Theorem {
        name: "extremally-disconnected-meekly-implies-sc-star-normal",
        statement: "every extremally disconnected meekly SC*-normal space is SC*-normal",
        hypotheses: &[Axiom::ExtremallyDisconnected, Axiom::MeeklySCStarNormal],
        conclusion: Axiom::SCStarNormal,
    },
    Theorem {
        name: "t1-almost-beta-normal-implies-almost-regular",
        statement: "every T1 almost β-normal space is almost regular",
        hypotheses: &[Axiom::T1, Axiom::AlmostBetaNormal],
        conclusion: Axiom::AlmostRegular,
    },
    Theorem {
        name: "t1-meekly-implies-softly-regular",
        statement: "every T1 meekly SC*-normal space is softly regular",
        hypotheses: &[Axiom::T1, Axiom::MeeklySCStarNormal],
        conclusion: Axiom::SoftlyRegular,
    },
    Theorem {
        name: "t1-meekly-implies-almost-regular",
        statement: "every T1 meekly SC*-normal space is almost regular",
        hypotheses: &[Axiom::T1, Axiom::MeeklySCStarNormal],
        conclusion: Axiom::AlmostRegular,
    },
    Theorem {
        name: "lindelof-t1-meekly-implies-k-normal",
        statement: "every Lindelöf meekly SC*-normal T1 space is κ-normal",
        hypotheses: &[Axiom::Lindelof, Axiom::T1, Axiom::MeeklySCStarNormal],
        conclusion: Axiom::KNormal,
    },
    Theorem {
        name: "t1-semi-normal-meekly-implies-regular",
        statement: "every T1 semi-normal meekly SC*-normal space is regular",
        hypotheses: &[Axiom::T1, Axiom::SemiNormal, Axiom::MeeklySCStarNormal],
        conclusion: Axiom::Regular,
    },
    Theorem {
        name: "normal-implies-sc-star-normal",
        statement: "every normal space is SC*-normal",
        hypotheses: &[Axiom::Normal],
        conclusion: Axiom::SCStarNormal,
    },
    Theorem {
        name: "softly-regular-implies-almost-regular",
        statement: "every softly regular space is almost regular",
        hypotheses: &[Axiom::SoftlyRegular],
        conclusion: Axiom::AlmostRegular,
    },
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremOutcome {
    pub theorem: &'static str,
    pub statement: &'static str,
    pub report: CounterexampleReport,
}

impl TheoremOutcome {
    pub fn to_json(&self) -> Value {
        let mut v = self.report.to_json();
        v["theorem"] = json!(self.theorem);
        v["statement"] = json!(self.statement);
        v
    }
}

/// Runs every theorem over `n_range`. Theorems mentioning meekly
/// SC*-normality run once per option combination, the rest once.
pub fn run_theorem_suite(n_range: RangeInclusive<usize>) -> Result<Vec<TheoremOutcome>, ExplorerError> {
    let mut out = Vec::new();
    for th in THEOREMS {
        let modes: &[MeeklyOptions] = if th.involves_meekly() {
            &MeeklyOptions::ALL
        } else {
            &MeeklyOptions::ALL[..1]
        };
        for &options in modes {
            let spec = ImplicationSpec::new(th.hypotheses, th.conclusion, n_range.clone()).with_options(options);
            out.push(TheoremOutcome {
                theorem: th.name,
                statement: th.statement,
                report: check_implication(&spec)?,
            });
        }
    }
    Ok(out)
}
