//! Cell-by-cell comparison of recorded claims against values computed from
//! the definitions.
//!
//! Claims live in `data/claims.json`, one record per cell:
//!
//! ```json
//! { "target": "closed-set-table",
//!   "location": "space three-point / set {k} / class semi-closed",
//!   "claimed_value": true,
//!   "citation": "..." }
//! ```
//!
//! A location is a list of `key value` segments joined by ` / `. Keys:
//! `space` (required), `set`, `class`, `family`, `axiom`, `pair`
//! (`{..}|{..}`), `claim`, `disjointness`, `operands`. Sets are written with
//! point names, `∅` or `X`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::axioms::{self, Axiom, Disjointness, MeeklyOptions, Operands};
use crate::classes::{is_member, SetClass};
use crate::mask::SubsetMask;
use crate::space::{SpaceContext, Topology};

const CLAIMS_JSON: &str = include_str!("../../data/claims.json");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AuditTarget {
    /// Seven closed-set classes over every subset of the three-point space.
    ClosedSetTable,
    /// Axiom verdicts for named finite spaces.
    TopologyTable,
    /// Listed SC*-type families of the three-point space.
    ExampleFamilies,
    /// The two meekly SC*-normality examples.
    MeeklyExamples,
}

impl AuditTarget {
    pub const ALL: [AuditTarget; 4] = [
        AuditTarget::ClosedSetTable,
        AuditTarget::TopologyTable,
        AuditTarget::ExampleFamilies,
        AuditTarget::MeeklyExamples,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AuditTarget::ClosedSetTable => "closed-set-table",
            AuditTarget::TopologyTable => "topology-table",
            AuditTarget::ExampleFamilies => "example-families",
            AuditTarget::MeeklyExamples => "meekly-examples",
        }
    }
}

impl fmt::Display for AuditTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for AuditTarget {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        AuditTarget::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| format!("unknown audit target {s:?}"))
    }
}

/// One stored claim.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimRecord {
    pub target: AuditTarget,
    pub location: String,
    pub claimed_value: bool,
    pub citation: String,
}

#[derive(Debug, Clone, Deserialize)]
struct ClaimFile {
    version: u32,
    records: Vec<ClaimRecord>,
}

/// The embedded claim records.
pub fn load_claims() -> Vec<ClaimRecord> {
    let file: ClaimFile = serde_json::from_str(CLAIMS_JSON).expect("embedded claims parse");
    assert_eq!(file.version, 1, "unsupported claims version");
    file.records
}

/// The spaces claims refer to, all on points `k, l, m[, n]`.
pub fn named_space(name: &str) -> Option<Topology> {
    let names = |n: usize| ["k", "l", "m", "n"][..n].iter().map(|s| s.to_string()).collect::<Vec<_>>();
    let t = match name {
        // points k=bit0, l=bit1, m=bit2, n=bit3
        "three-point" => Topology::from_bits(3, &[0, 0b001, 0b010, 0b011, 0b111], names(3)),
        "four-point" => Topology::from_bits(
            4,
            &[0, 0b1111, 0b0010, 0b0100, 0b1100, 0b0110, 0b0111, 0b1110],
            names(4),
        ),
        "three-point-split" => Topology::from_bits(3, &[0, 0b001, 0b110, 0b111], names(3)),
        "finite-discrete" => Ok(Topology::discrete(3).with_point_names(names(3))),
        "finite-trivial" => Ok(Topology::indiscrete(3).with_point_names(names(3))),
        _ => return None,
    };
    Some(t.expect("named spaces are valid"))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LocationError {
    Segment(String),
    MissingSpace,
    UnknownSpace(String),
    UnknownKey(String),
    BadSet(String),
    BadValue(String, String),
    NoQuestion,
}

impl fmt::Display for LocationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LocationError::Segment(s) => write!(f, "segment {s:?} is not `key value`"),
            LocationError::MissingSpace => write!(f, "location names no space"),
            LocationError::UnknownSpace(s) => write!(f, "unknown space {s:?}"),
            LocationError::UnknownKey(k) => write!(f, "unknown key {k:?}"),
            LocationError::BadSet(s) => write!(f, "cannot read set {s:?}"),
            LocationError::BadValue(k, v) => write!(f, "bad value {v:?} for {k}"),
            LocationError::NoQuestion => write!(f, "location asks nothing (needs class, family, axiom or pair)"),
        }
    }
}

/// What a location asks about a space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Question {
    Member { set: SubsetMask, class: SetClass },
    Axiom { axiom: Axiom, options: MeeklyOptions },
    Separable { a: SubsetMask, b: SubsetMask, options: MeeklyOptions },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Location {
    pub space: String,
    pub question: Question,
}

fn parse_set(t: &Topology, s: &str) -> Result<SubsetMask, LocationError> {
    let bad = || LocationError::BadSet(s.to_string());
    match s {
        "∅" | "{}" => return Ok(SubsetMask::empty(t.n())),
        "X" => return Ok(t.full()),
        _ => {}
    }
    let inner = s.strip_prefix('{').and_then(|r| r.strip_suffix('}')).ok_or_else(bad)?;
    let mut bits = 0u16;
    for name in inner.split(',') {
        let i = t.point_names().iter().position(|p| p == name.trim()).ok_or_else(bad)?;
        bits |= 1 << i;
    }
    Ok(t.mask(bits))
}

pub fn parse_location(loc: &str) -> Result<Location, LocationError> {
    let mut kv = BTreeMap::new();
    for seg in loc.split(" / ") {
        let (k, v) = seg
            .trim()
            .split_once(' ')
            .ok_or_else(|| LocationError::Segment(seg.to_string()))?;
        match k {
            "space" | "set" | "class" | "family" | "axiom" | "pair" | "claim" | "disjointness" | "operands" => {}
            _ => return Err(LocationError::UnknownKey(k.to_string())),
        }
        kv.insert(k, v.trim());
    }
    let space = kv.get("space").ok_or(LocationError::MissingSpace)?.to_string();
    let t = named_space(&space).ok_or_else(|| LocationError::UnknownSpace(space.clone()))?;
    let bad = |k: &str, v: &str| LocationError::BadValue(k.to_string(), v.to_string());
    let mut options = MeeklyOptions::default();
    if let Some(&d) = kv.get("disjointness") {
        options.disjointness = Disjointness::from_str(d).map_err(|_| bad("disjointness", d))?;
    }
    if let Some(&o) = kv.get("operands") {
        options.operands = Operands::from_str(o).map_err(|_| bad("operands", o))?;
    }
    let class_of = |key: &str| -> Result<Option<SetClass>, LocationError> {
        kv.get(key)
            .map(|&c| SetClass::from_str(c).map_err(|_| bad(key, c)))
            .transpose()
    };
    let question = if let Some(&ax) = kv.get("axiom") {
        Question::Axiom {
            axiom: Axiom::from_str(ax).map_err(|_| bad("axiom", ax))?,
            options,
        }
    } else if let Some(&pair) = kv.get("pair") {
        let (a, b) = pair.split_once('|').ok_or_else(|| bad("pair", pair))?;
        Question::Separable {
            a: parse_set(&t, a)?,
            b: parse_set(&t, b)?,
            options,
        }
    } else if let Some(class) = class_of("class")?.or(class_of("family")?) {
        let s = kv.get("set").ok_or(LocationError::NoQuestion)?;
        Question::Member {
            set: parse_set(&t, s)?,
            class,
        }
    } else {
        return Err(LocationError::NoQuestion);
    };
    Ok(Location { space, question })
}

/// Computes the answer to `q` from the definitions.
pub fn evaluate(ctx: &SpaceContext, q: &Question) -> bool {
    match *q {
        Question::Member { set, class } => is_member(ctx, set, class),
        Question::Axiom { axiom, options } => axioms::holds(ctx, axiom, options),
        Question::Separable { a, b, options } => {
            axioms::separate_pair(ctx, Axiom::MeeklySCStarNormal, options, a, b).is_some()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AuditCell {
    pub location: String,
    pub citation: String,
    pub claimed_value: bool,
    pub oracle_value: bool,
    pub agree: bool,
}

/// A problem among the claims themselves, independent of the oracle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AuditFinding {
    pub kind: &'static str,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AuditReport {
    pub target: AuditTarget,
    pub cells: Vec<AuditCell>,
    pub findings: Vec<AuditFinding>,
}

impl AuditReport {
    pub fn agreed(&self) -> usize {
        self.cells.iter().filter(|c| c.agree).count()
    }

    pub fn disagreements(&self) -> impl Iterator<Item = &AuditCell> {
        self.cells.iter().filter(|c| !c.agree)
    }

    pub fn cell(&self, location: &str) -> Option<&AuditCell> {
        self.cells.iter().find(|c| c.location == location)
    }
}

/// Claims disagreeing with each other about the same set and class, and
/// fully listed open families that are not the complements of the listed
/// closed partner.
fn internal_findings(records: &[(&ClaimRecord, Location)]) -> Vec<AuditFinding> {
    let mut findings = Vec::new();
    let mut by_cell: BTreeMap<(&str, SetClass, u16), Vec<&ClaimRecord>> = BTreeMap::new();
    let mut listed: BTreeMap<(&str, SetClass), Vec<(SubsetMask, bool)>> = BTreeMap::new();
    for (rec, loc) in records {
        if let Question::Member { set, class } = loc.question {
            by_cell.entry((loc.space.as_str(), class, set.bits())).or_default().push(rec);
            if rec.location.contains("/ family ") {
                listed.entry((loc.space.as_str(), class)).or_default().push((set, rec.claimed_value));
            }
        }
    }
    for ((space, class, _), recs) in &by_cell {
        if recs.iter().any(|r| r.claimed_value != recs[0].claimed_value) {
            let parts: Vec<String> = recs
                .iter()
                .map(|r| format!("{} ({})", r.claimed_value, r.citation))
                .collect();
            findings.push(AuditFinding {
                kind: "conflicting-claims",
                detail: format!("{space}: {class} membership claimed as {}", parts.join(" vs ")),
            });
        }
    }
    for (&(space, class), cells) in &listed {
        let Some(dual) = class.dual() else { continue };
        let Some(partner) = listed.get(&(space, dual)) else {
            continue;
        };
        let t = named_space(space).expect("validated");
        if class.kind() != crate::classes::ClassKind::Open || cells.len() != 1 << t.n() || partner.len() != 1 << t.n() {
            continue;
        }
        let names = t.point_names();
        let members = |v: &[(SubsetMask, bool)]| -> Vec<SubsetMask> {
            let mut m: Vec<SubsetMask> = v.iter().filter(|c| c.1).map(|c| c.0).collect();
            m.sort_by_key(|s| s.table_key());
            m
        };
        let open = members(cells);
        let mut complements: Vec<SubsetMask> = members(partner).iter().map(|s| s.complement()).collect();
        complements.sort_by_key(|s| s.table_key());
        if open != complements {
            let label = |s: &SubsetMask| match (s.is_empty(), s.is_full()) {
                (true, _) => "∅".to_string(),
                (_, true) => "X".to_string(),
                _ => s.display_with(names).to_string(),
            };
            let show = |v: &[SubsetMask]| v.iter().map(label).collect::<Vec<_>>().join(", ");
            findings.push(AuditFinding {
                kind: "complement-mismatch",
                detail: format!(
                    "{space}: listed {class} family [{}] is not the complement family of listed {dual} [{}], which is [{}]",
                    show(&open),
                    show(&members(partner)),
                    show(&complements)
                ),
            });
        }
    }
    findings
}

/// Audits the embedded claims for the given targets. Every oracle value is
/// computed afresh from the definitions.
pub fn audit_claims(targets: &[AuditTarget]) -> Vec<AuditReport> {
    audit_records(&load_claims(), targets)
}

/// Audits an explicit list of claim records.
pub fn audit_records(records: &[ClaimRecord], targets: &[AuditTarget]) -> Vec<AuditReport> {
    let mut contexts: BTreeMap<String, SpaceContext> = BTreeMap::new();
    targets
        .iter()
        .map(|&target| {
            let parsed: Vec<(&ClaimRecord, Location)> = records
                .iter()
                .filter(|r| r.target == target)
                .map(|r| {
                    let loc = parse_location(&r.location)
                        .unwrap_or_else(|e| panic!("claim location {:?}: {e}", r.location));
                    (r, loc)
                })
                .collect();
            let cells = parsed
                .iter()
                .map(|(rec, loc)| {
                    let ctx = contexts
                        .entry(loc.space.clone())
                        .or_insert_with(|| SpaceContext::new(named_space(&loc.space).expect("validated")));
                    let oracle_value = evaluate(ctx, &loc.question);
                    AuditCell {
                        location: rec.location.clone(),
                        citation: rec.citation.clone(),
                        claimed_value: rec.claimed_value,
                        oracle_value,
                        agree: oracle_value == rec.claimed_value,
                    }
                })
                .collect();
            AuditReport {
                target,
                cells,
                findings: internal_findings(&parsed),
            }
        })
        .collect()
}
