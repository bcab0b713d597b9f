//! Space-level separation properties, decided by exhausting their
//! quantifiers and reported with witnesses or a refuting obligation.
//!
//! Every axiom is phrased as a list of obligations (a hypothesis instance,
//! e.g. a pair of disjoint closed sets) each of which must admit a witness
//! (e.g. a pair of open sets). Obligations are visited in ascending mask
//! order and witnesses are chosen as the lexicographically smallest
//! candidate, so verdicts are deterministic.
//!
//! "Dense in A" is evaluated as `A ⊆ cl(U ∩ A)`. For closed `A` this is
//! the same as `cl(U ∩ A) = A`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::{json, Value};

use crate::classes::SetClass;
use crate::mask::{subset, SubsetMask};
use crate::space::SpaceContext;

macro_rules! axioms {
    ($($tag:ident => $name:literal),* $(,)?) => {
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum Axiom {
            $($tag),*
        }

        impl Axiom {
            pub const ALL: &'static [Axiom] = &[$(Axiom::$tag),*];

            pub fn name(self) -> &'static str {
                match self {
                    $(Axiom::$tag => $name),*
                }
            }
        }
    };
}

axioms! {
    Normal => "normal",
    KNormal => "k-normal",
    AlmostNormal => "almost-normal",
    PiNormal => "pi-normal",
    AlmostRegular => "almost-regular",
    SoftlyRegular => "softly-regular",
    AlphaNormal => "alpha-normal",
    BetaNormal => "beta-normal",
    AlmostBetaNormal => "almost-beta-normal",
    BetaKNormal => "beta-k-normal",
    SemiNormal => "semi-normal",
    SCStarNormal => "sc-star-normal",
    MeeklySCStarNormal => "meekly-sc-star-normal",
    ThetaNormal => "theta-normal",
    WeaklyThetaNormal => "weakly-theta-normal",
    ExtremallyDisconnected => "extremally-disconnected",
    T1 => "t1",
    Regular => "regular",
    Lindelof => "lindelof",
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown axiom {0:?}")]
pub struct UnknownAxiom(pub String);

impl FromStr for Axiom {
    type Err = UnknownAxiom;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let alias = match s {
            "mildly-normal" | "kappa-normal" => "k-normal",
            "w-theta-normal" => "weakly-theta-normal",
            "t-1" => "t1",
            other => other,
        };
        Axiom::ALL
            .iter()
            .copied()
            .find(|a| a.name() == alias)
            .ok_or_else(|| UnknownAxiom(s.to_string()))
    }
}

impl Serialize for Axiom {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

impl<'de> Deserialize<'de> for Axiom {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// Which disjointness the separating open sets of meekly SC*-normality need.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Disjointness {
    /// `U ∩ V = ∅`.
    #[default]
    Open,
    /// `cl(U) ∩ cl(V) = ∅`.
    #[serde(rename = "closure")]
    ClosureDisjoint,
}

/// Which pairs `(A, B)` meekly SC*-normality quantifies over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub enum Operands {
    /// Both closed, at least one SC*-closed.
    #[default]
    #[serde(rename = "both-closed")]
    BothClosedOneSCStar,
    /// One SC*-closed (not necessarily closed), the other closed.
    #[serde(rename = "relaxed")]
    SCStarSideNeedNotBeClosed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct MeeklyOptions {
    pub disjointness: Disjointness,
    pub operands: Operands,
}

impl MeeklyOptions {
    pub const ALL: [MeeklyOptions; 4] = [
        MeeklyOptions {
            disjointness: Disjointness::Open,
            operands: Operands::BothClosedOneSCStar,
        },
        MeeklyOptions {
            disjointness: Disjointness::Open,
            operands: Operands::SCStarSideNeedNotBeClosed,
        },
        MeeklyOptions {
            disjointness: Disjointness::ClosureDisjoint,
            operands: Operands::BothClosedOneSCStar,
        },
        MeeklyOptions {
            disjointness: Disjointness::ClosureDisjoint,
            operands: Operands::SCStarSideNeedNotBeClosed,
        },
    ];

    pub fn label(self) -> String {
        format!("disjointness={} operands={}", self.disjointness.name(), self.operands.name())
    }
}

impl Disjointness {
    pub fn name(self) -> &'static str {
        match self {
            Disjointness::Open => "open",
            Disjointness::ClosureDisjoint => "closure",
        }
    }
}

impl Operands {
    pub fn name(self) -> &'static str {
        match self {
            Operands::BothClosedOneSCStar => "both-closed",
            Operands::SCStarSideNeedNotBeClosed => "relaxed",
        }
    }
}

impl FromStr for Disjointness {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "open" => Ok(Disjointness::Open),
            "closure" => Ok(Disjointness::ClosureDisjoint),
            _ => Err(format!("unknown disjointness {s:?} (expected open|closure)")),
        }
    }
}

impl FromStr for Operands {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "both-closed" => Ok(Operands::BothClosedOneSCStar),
            "relaxed" => Ok(Operands::SCStarSideNeedNotBeClosed),
            _ => Err(format!("unknown operands mode {s:?} (expected both-closed|relaxed)")),
        }
    }
}

/// One hypothesis instance an axiom must discharge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Obligation {
    /// Separate `a` from `b`.
    Pair { a: SubsetMask, b: SubsetMask },
    /// Separate the set from the point.
    PointSet { set: SubsetMask, point: usize },
    /// Closed set inside an open set; find a regular open set between them.
    Nested { closed: SubsetMask, open: SubsetMask },
    /// The singleton must be closed.
    Singleton { point: usize },
    /// The closure of this open set must be open.
    OpenSet { open: SubsetMask },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Witness {
    /// `u` serves the first operand of the obligation, `v` the second
    /// (for `PointSet`, `u` goes with the set and `v` with the point).
    Separation { u: SubsetMask, v: SubsetMask },
    /// A single set, e.g. the regular open set of semi-normality.
    Between { v: SubsetMask },
    /// The obligation holds without a constructed set.
    Direct,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Refutation {
    pub obligation: Obligation,
    /// The quantifier that was exhausted without finding a witness.
    pub exhausted: &'static str,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomVerdict {
    pub axiom: Axiom,
    pub holds: bool,
    pub options: MeeklyOptions,
    /// Filled only when the verdict was requested with witnesses.
    pub witnesses: Vec<(Obligation, Witness)>,
    pub refutation: Option<Refutation>,
    /// Reported for extremal disconnectedness only; not folded into `holds`.
    pub hausdorff: Option<bool>,
    pub notes: Vec<&'static str>,
}

#[derive(Clone, Copy)]
enum Fit {
    Contain,
    Dense,
}

#[derive(Clone, Copy)]
enum Apart {
    Sets,
    Closures,
    Both,
}

#[derive(Clone, Copy)]
struct Rule {
    family: SetClass,
    fit: Fit,
    apart: Apart,
}

impl Rule {
    const CONTAIN: Rule = Rule {
        family: SetClass::Open,
        fit: Fit::Contain,
        apart: Apart::Sets,
    };

    fn exhausted(self) -> &'static str {
        match (self.family, self.fit, self.apart) {
            (SetClass::SCStarOpen, _, _) => "no disjoint SC*-open U ⊇ A, V ⊇ B",
            (_, Fit::Contain, _) => "no disjoint open U ⊇ A, V ⊇ B",
            (_, Fit::Dense, Apart::Sets) => "no open U, V with U ∩ V = ∅, A ⊆ cl(U ∩ A), B ⊆ cl(V ∩ B)",
            (_, Fit::Dense, Apart::Closures) => {
                "no open U, V with cl U ∩ cl V = ∅, A ⊆ cl(U ∩ A), B ⊆ cl(V ∩ B)"
            }
            (_, Fit::Dense, Apart::Both) => {
                "no open U, V with U ∩ V = ∅, cl U ∩ cl V = ∅, A ⊆ cl(U ∩ A), B ⊆ cl(V ∩ B)"
            }
        }
    }
}

fn rule_for(axiom: Axiom, options: MeeklyOptions) -> Rule {
    use Axiom::*;
    match axiom {
        SCStarNormal => Rule {
            family: SetClass::SCStarOpen,
            fit: Fit::Contain,
            apart: Apart::Sets,
        },
        AlphaNormal => Rule {
            family: SetClass::Open,
            fit: Fit::Dense,
            apart: Apart::Sets,
        },
        BetaNormal => Rule {
            family: SetClass::Open,
            fit: Fit::Dense,
            apart: Apart::Closures,
        },
        AlmostBetaNormal | BetaKNormal => Rule {
            family: SetClass::Open,
            fit: Fit::Dense,
            apart: Apart::Both,
        },
        MeeklySCStarNormal => Rule {
            family: SetClass::Open,
            fit: Fit::Dense,
            apart: match options.disjointness {
                Disjointness::Open => Apart::Sets,
                Disjointness::ClosureDisjoint => Apart::Closures,
            },
        },
        _ => Rule::CONTAIN,
    }
}

impl SpaceContext {
    fn fits(&self, fit: Fit, a: u16, u: u16) -> bool {
        match fit {
            Fit::Contain => subset(a, u),
            Fit::Dense => subset(a, self.cl(u & a)),
        }
    }

    fn apart(&self, apart: Apart, u: u16, v: u16) -> bool {
        match apart {
            Apart::Sets => u & v == 0,
            Apart::Closures => self.cl(u) & self.cl(v) == 0,
            Apart::Both => u & v == 0 && self.cl(u) & self.cl(v) == 0,
        }
    }

    fn is_theta_closed(&self, a: u16) -> bool {
        self.theta_cl(a) == a
    }

    /// Lexicographically smallest `(u, v)` satisfying the rule for `(a, b)`.
    fn separate(&self, rule: Rule, a: u16, b: u16) -> Option<(u16, u16)> {
        let fam = self.family(rule.family);
        let us: Vec<u16> = fam.iter().filter(|&u| self.fits(rule.fit, a, u)).collect();
        if us.is_empty() {
            return None;
        }
        let vs: Vec<u16> = fam.iter().filter(|&v| self.fits(rule.fit, b, v)).collect();
        us.iter()
            .find_map(|&u| vs.iter().find(|&&v| self.apart(rule.apart, u, v)).map(|&v| (u, v)))
    }
}

type PairTest<'a> = Box<dyn Fn(u16, u16) -> bool + 'a>;

/// Symmetric hypothesis on a disjoint pair, plus the pool both sides are
/// drawn from.
fn pair_hypothesis(ctx: &SpaceContext, axiom: Axiom, options: MeeklyOptions) -> Option<(Vec<u16>, PairTest<'_>)> {
    use Axiom::*;
    let closed: Vec<u16> = ctx.closed_bits().collect();
    let rc = |a| ctx.member(SetClass::RegularClosed, a);
    let sc = |a| ctx.member(SetClass::SCStarClosed, a);
    let any = |_: u16, _: u16| true;
    Some(match axiom {
        Normal | AlphaNormal | BetaNormal | SCStarNormal => (closed, Box::new(any)),
        KNormal | BetaKNormal => (ctx.family(SetClass::RegularClosed).to_vec(), Box::new(any)),
        AlmostNormal | AlmostBetaNormal => (closed, Box::new(move |a, b| rc(a) || rc(b))),
        PiNormal => {
            let pi = |a| ctx.member(SetClass::PiClosed, a);
            (closed, Box::new(move |a, b| pi(a) || pi(b)))
        }
        ThetaNormal => (closed, Box::new(move |a, b| ctx.is_theta_closed(a) || ctx.is_theta_closed(b))),
        WeaklyThetaNormal => {
            let pool = closed.into_iter().filter(|&a| ctx.is_theta_closed(a)).collect();
            (pool, Box::new(any))
        }
        MeeklySCStarNormal => match options.operands {
            Operands::BothClosedOneSCStar => (closed, Box::new(move |a, b| sc(a) || sc(b))),
            Operands::SCStarSideNeedNotBeClosed => {
                let pool = ctx.powerset().filter(|&a| ctx.is_closed_bits(a) || sc(a)).collect();
                let c = |a| ctx.is_closed_bits(a);
                (pool, Box::new(move |a, b| (sc(a) && c(b)) || (c(a) && sc(b))))
            }
        },
        _ => return None,
    })
}

/// Every obligation of `axiom`, in the fixed visiting order.
pub fn obligations(ctx: &SpaceContext, axiom: Axiom, options: MeeklyOptions) -> Vec<Obligation> {
    use Axiom::*;
    let mask = |a| ctx.topology().mask(a);
    let n = ctx.n();
    if let Some((pool, hyp)) = pair_hypothesis(ctx, axiom, options) {
        let mut out = Vec::new();
        for (i, &a) in pool.iter().enumerate() {
            for &b in &pool[i..] {
                if a & b == 0 && hyp(a, b) {
                    out.push(Obligation::Pair { a: mask(a), b: mask(b) });
                }
            }
        }
        return out;
    }
    let point_sets = |sets: Vec<u16>| -> Vec<Obligation> {
        sets.into_iter()
            .flat_map(|a| {
                (0..n)
                    .filter(move |&x| a >> x & 1 == 0)
                    .map(move |point| Obligation::PointSet { set: mask(a), point })
            })
            .collect()
    };
    match axiom {
        AlmostRegular => point_sets(ctx.family(SetClass::RegularClosed).to_vec()),
        SoftlyRegular => point_sets(ctx.family(SetClass::PiClosed).to_vec()),
        Regular => point_sets(ctx.closed_bits().collect()),
        SemiNormal => ctx
            .closed_bits()
            .flat_map(|a| {
                ctx.topology()
                    .open_bits()
                    .iter()
                    .filter(move |&&u| subset(a, u))
                    .map(move |&u| Obligation::Nested {
                        closed: mask(a),
                        open: mask(u),
                    })
            })
            .collect(),
        T1 => (0..n).map(|point| Obligation::Singleton { point }).collect(),
        ExtremallyDisconnected => ctx.topology().opens().map(|open| Obligation::OpenSet { open }).collect(),
        Lindelof => Vec::new(),
        _ => unreachable!("pair axioms handled above"),
    }
}

fn find_witness(ctx: &SpaceContext, axiom: Axiom, options: MeeklyOptions, ob: &Obligation) -> Option<Witness> {
    let mask = |a| ctx.topology().mask(a);
    let separation = |(u, v)| Witness::Separation { u: mask(u), v: mask(v) };
    match *ob {
        Obligation::Pair { a, b } => ctx.separate(rule_for(axiom, options), a.bits(), b.bits()).map(separation),
        Obligation::PointSet { set, point } => ctx.separate(Rule::CONTAIN, set.bits(), 1 << point).map(separation),
        Obligation::Nested { closed, open } => ctx
            .family(SetClass::RegularOpen)
            .iter()
            .find(|&v| subset(closed.bits(), v) && subset(v, open.bits()))
            .map(|v| Witness::Between { v: mask(v) }),
        Obligation::Singleton { point } => ctx.is_closed_bits(1 << point).then_some(Witness::Direct),
        Obligation::OpenSet { open } => ctx.is_open_bits(ctx.cl(open.bits())).then_some(Witness::Direct),
    }
}

fn exhausted_for(axiom: Axiom, options: MeeklyOptions) -> &'static str {
    match axiom {
        Axiom::AlmostRegular | Axiom::SoftlyRegular | Axiom::Regular => "no disjoint open U ⊇ A, V ∋ x",
        Axiom::SemiNormal => "no regular open V with A ⊆ V ⊆ U",
        Axiom::T1 => "singleton is not closed",
        Axiom::ExtremallyDisconnected => "closure of the open set is not open",
        Axiom::Lindelof => "",
        _ => rule_for(axiom, options).exhausted(),
    }
}

fn is_discrete(ctx: &SpaceContext) -> bool {
    ctx.topology().open_count() == 1usize << ctx.n()
}

fn evaluate(ctx: &SpaceContext, axiom: Axiom, options: MeeklyOptions, collect: bool) -> AxiomVerdict {
    let mut verdict = AxiomVerdict {
        axiom,
        holds: true,
        options,
        witnesses: Vec::new(),
        refutation: None,
        hausdorff: None,
        notes: Vec::new(),
    };
    match axiom {
        Axiom::Lindelof => verdict.notes.push("every finite space is Lindelöf"),
        Axiom::ExtremallyDisconnected => {
            // Finite Hausdorff spaces are discrete.
            verdict.hausdorff = Some(is_discrete(ctx));
            verdict.notes.push("Hausdorff status reported separately");
        }
        _ => {}
    }
    for ob in obligations(ctx, axiom, options) {
        match find_witness(ctx, axiom, options, &ob) {
            Some(w) => {
                if collect {
                    verdict.witnesses.push((ob, w));
                }
            }
            None => {
                verdict.holds = false;
                verdict.refutation = Some(Refutation {
                    obligation: ob,
                    exhausted: exhausted_for(axiom, options),
                });
                break;
            }
        }
    }
    verdict
}

/// Decides `axiom`, recording a witness for every obligation when it holds.
/// `options` only affects meekly SC*-normality.
pub fn satisfies(ctx: &SpaceContext, axiom: Axiom, options: MeeklyOptions) -> AxiomVerdict {
    evaluate(ctx, axiom, options, true)
}

/// Like `satisfies` without collecting witnesses.
pub fn decide(ctx: &SpaceContext, axiom: Axiom, options: MeeklyOptions) -> AxiomVerdict {
    evaluate(ctx, axiom, options, false)
}

pub fn holds(ctx: &SpaceContext, axiom: Axiom, options: MeeklyOptions) -> bool {
    decide(ctx, axiom, options).holds
}

/// Verdicts for every axiom, in `Axiom::ALL` order.
pub fn axiom_report(ctx: &SpaceContext, options: MeeklyOptions) -> Vec<AxiomVerdict> {
    Axiom::ALL.iter().map(|&a| satisfies(ctx, a, options)).collect()
}

/// The separating pair `axiom` would use for `(a, b)`, ignoring whether
/// `(a, b)` meets the axiom's hypothesis. `None` for axioms that do not
/// separate pairs of sets, or when no pair exists.
pub fn separate_pair(
    ctx: &SpaceContext,
    axiom: Axiom,
    options: MeeklyOptions,
    a: SubsetMask,
    b: SubsetMask,
) -> Option<Witness> {
    let _ = pair_hypothesis(ctx, axiom, options)?;
    ctx.separate(rule_for(axiom, options), a.bits(), b.bits())
        .map(|(u, v)| Witness::Separation {
            u: ctx.topology().mask(u),
            v: ctx.topology().mask(v),
        })
}

/// Whether `ob` is an instance of the axiom's hypothesis, checked directly
/// from the definitions.
pub fn obligation_is_hypothesis(ctx: &SpaceContext, axiom: Axiom, options: MeeklyOptions, ob: &Obligation) -> bool {
    use Axiom::*;
    let closed = |a: SubsetMask| ctx.closure(a) == a;
    let rc = |a: SubsetMask| ctx.closure(ctx.interior(a)) == a;
    let sc = |a: SubsetMask| crate::classes::is_member(ctx, a, SetClass::SCStarClosed);
    let pi = |a: SubsetMask| crate::classes::is_pi_closed(ctx, a);
    let theta = |a: SubsetMask| ctx.theta_closure(a) == a;
    match (*ob, axiom) {
        (Obligation::Pair { a, b }, _) if !a.is_disjoint(b) => false,
        (Obligation::Pair { a, b }, Normal | AlphaNormal | BetaNormal | SCStarNormal) => closed(a) && closed(b),
        (Obligation::Pair { a, b }, KNormal | BetaKNormal) => rc(a) && rc(b),
        (Obligation::Pair { a, b }, AlmostNormal | AlmostBetaNormal) => closed(a) && closed(b) && (rc(a) || rc(b)),
        (Obligation::Pair { a, b }, PiNormal) => closed(a) && closed(b) && (pi(a) || pi(b)),
        (Obligation::Pair { a, b }, ThetaNormal) => closed(a) && closed(b) && (theta(a) || theta(b)),
        (Obligation::Pair { a, b }, WeaklyThetaNormal) => theta(a) && theta(b),
        (Obligation::Pair { a, b }, MeeklySCStarNormal) => match options.operands {
            Operands::BothClosedOneSCStar => closed(a) && closed(b) && (sc(a) || sc(b)),
            Operands::SCStarSideNeedNotBeClosed => (sc(a) && closed(b)) || (closed(a) && sc(b)),
        },
        (Obligation::PointSet { set, point }, AlmostRegular) => rc(set) && !set.contains(point),
        (Obligation::PointSet { set, point }, SoftlyRegular) => pi(set) && !set.contains(point),
        (Obligation::PointSet { set, point }, Regular) => closed(set) && !set.contains(point),
        (Obligation::Nested { closed: a, open: u }, SemiNormal) => {
            closed(a) && ctx.topology().is_open(u) && a.is_subset(u)
        }
        (Obligation::Singleton { point }, T1) => point < ctx.n(),
        (Obligation::OpenSet { open }, ExtremallyDisconnected) => ctx.topology().is_open(open),
        _ => false,
    }
}

/// Re-checks a witness against the axiom's conditions verbatim.
pub fn witness_is_sound(ctx: &SpaceContext, axiom: Axiom, options: MeeklyOptions, ob: &Obligation, w: &Witness) -> bool {
    use Axiom::*;
    if !obligation_is_hypothesis(ctx, axiom, options, ob) {
        return false;
    }
    let open = |u: SubsetMask| ctx.topology().is_open(u);
    let sc_open = |u: SubsetMask| crate::classes::is_member(ctx, u, SetClass::SCStarOpen);
    let dense = |u: SubsetMask, a: SubsetMask| a.is_subset(ctx.closure(u.intersection(a)));
    let cl_apart = |u: SubsetMask, v: SubsetMask| ctx.closure(u).is_disjoint(ctx.closure(v));
    match (*ob, *w) {
        (Obligation::Pair { a, b }, Witness::Separation { u, v }) => match axiom {
            SCStarNormal => sc_open(u) && sc_open(v) && a.is_subset(u) && b.is_subset(v) && u.is_disjoint(v),
            AlphaNormal => open(u) && open(v) && u.is_disjoint(v) && dense(u, a) && dense(v, b),
            BetaNormal => open(u) && open(v) && dense(u, a) && dense(v, b) && cl_apart(u, v),
            AlmostBetaNormal | BetaKNormal => {
                open(u) && open(v) && u.is_disjoint(v) && dense(u, a) && dense(v, b) && cl_apart(u, v)
            }
            MeeklySCStarNormal => {
                let apart = match options.disjointness {
                    Disjointness::Open => u.is_disjoint(v),
                    Disjointness::ClosureDisjoint => cl_apart(u, v),
                };
                open(u) && open(v) && apart && dense(u, a) && dense(v, b)
            }
            _ => open(u) && open(v) && a.is_subset(u) && b.is_subset(v) && u.is_disjoint(v),
        },
        (Obligation::PointSet { set, point }, Witness::Separation { u, v }) => {
            open(u) && open(v) && set.is_subset(u) && v.contains(point) && u.is_disjoint(v)
        }
        (Obligation::Nested { closed, open: u }, Witness::Between { v }) => {
            ctx.interior(ctx.closure(v)) == v && closed.is_subset(v) && v.is_subset(u)
        }
        (Obligation::Singleton { point }, Witness::Direct) => {
            let s = SubsetMask::singleton(point, ctx.n());
            ctx.closure(s) == s
        }
        (Obligation::OpenSet { open: u }, Witness::Direct) => open(ctx.closure(u)),
        _ => false,
    }
}

/// Confirms a refutation by brute force over the whole powerset: the
/// obligation is a hypothesis instance and no candidate witness passes
/// `witness_is_sound`.
pub fn refutation_is_sound(ctx: &SpaceContext, axiom: Axiom, options: MeeklyOptions, r: &Refutation) -> bool {
    if !obligation_is_hypothesis(ctx, axiom, options, &r.obligation) {
        return false;
    }
    let n = ctx.n();
    let all: Vec<SubsetMask> = ctx.powerset().map(|a| SubsetMask::new(a, n)).collect();
    let ob = &r.obligation;
    let sound = |w: Witness| witness_is_sound(ctx, axiom, options, ob, &w);
    match ob {
        Obligation::Pair { .. } | Obligation::PointSet { .. } => !all
            .iter()
            .any(|&u| all.iter().any(|&v| sound(Witness::Separation { u, v }))),
        Obligation::Nested { .. } => !all.iter().any(|&v| sound(Witness::Between { v })),
        Obligation::Singleton { .. } | Obligation::OpenSet { .. } => !sound(Witness::Direct),
    }
}

fn names(ctx: &SpaceContext, a: SubsetMask) -> Value {
    Value::from(
        a.points()
            .map(|p| ctx.topology().point_names()[p].clone())
            .collect::<Vec<_>>(),
    )
}

fn obligation_json(ctx: &SpaceContext, ob: &Obligation) -> Value {
    let point = |p: usize| Value::from(ctx.topology().point_names()[p].clone());
    match *ob {
        Obligation::Pair { a, b } => json!({"a": names(ctx, a), "b": names(ctx, b)}),
        Obligation::PointSet { set, point: x } => json!({"set": names(ctx, set), "point": point(x)}),
        Obligation::Nested { closed, open } => json!({"closed": names(ctx, closed), "open": names(ctx, open)}),
        Obligation::Singleton { point: x } => json!({"singleton": point(x)}),
        Obligation::OpenSet { open } => json!({"open": names(ctx, open)}),
    }
}

fn witness_json(ctx: &SpaceContext, w: &Witness) -> Value {
    match *w {
        Witness::Separation { u, v } => json!({"u": names(ctx, u), "v": names(ctx, v)}),
        Witness::Between { v } => json!({"v": names(ctx, v)}),
        Witness::Direct => json!("direct"),
    }
}

/// JSON rendering with every set spelled as an array of point names.
pub fn verdict_json(ctx: &SpaceContext, v: &AxiomVerdict) -> Value {
    let mut obj = json!({
        "axiom": v.axiom,
        "holds": v.holds,
    });
    if v.axiom == Axiom::MeeklySCStarNormal {
        obj["options"] = json!(v.options);
    }
    if !v.witnesses.is_empty() {
        obj["witnesses"] = Value::from(
            v.witnesses
                .iter()
                .map(|(ob, w)| json!({"obligation": obligation_json(ctx, ob), "witness": witness_json(ctx, w)}))
                .collect::<Vec<_>>(),
        );
    }
    if let Some(r) = &v.refutation {
        obj["refutation"] = json!({"obligation": obligation_json(ctx, &r.obligation), "exhausted": r.exhausted});
    }
    if let Some(h) = v.hausdorff {
        obj["hausdorff"] = json!(h);
    }
    if !v.notes.is_empty() {
        obj["notes"] = json!(v.notes);
    }
    obj
}

/// Human-readable one-liner for a refutation.
pub fn describe_refutation(ctx: &SpaceContext, r: &Refutation) -> String {
    let names = ctx.topology().point_names();
    let ob = match r.obligation {
        Obligation::Pair { a, b } => format!("A={} B={}", a.display_with(names), b.display_with(names)),
        Obligation::PointSet { set, point } => format!("A={} x={}", set.display_with(names), names[point]),
        Obligation::Nested { closed, open } => {
            format!("A={} U={}", closed.display_with(names), open.display_with(names))
        }
        Obligation::Singleton { point } => format!("{{{}}}", names[point]),
        Obligation::OpenSet { open } => format!("U={}", open.display_with(names)),
    };
    format!("{ob}: {}", r.exhausted)
}
