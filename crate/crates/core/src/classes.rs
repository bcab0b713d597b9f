//! Membership predicates for the generalized closed and open set classes,
//! together with the class-closure and class-interior operators.
//!
//! Closed-variant classes are decided by their defining inclusions. Every
//! open-variant class with a closed partner is defined as the family of
//! complements of that partner, so duality holds by construction.
//!
//! Conditions of the form "for every member U of family F with A ⊆ U,
//! S(A) ⊆ U" are decided as `S(A) ⊆ ⋂{U ∈ F : A ⊆ U}`, using a superset
//! meet table per family. Derived families are evaluated in dependency
//! order through the context's memo:
//!
//! ```text
//! semi-open -> w-closed -> w-open -> h-closed -> h-open, h-closure
//!           -> gh / rgh / regular-h-open / hCg
//! c*-open -> SC*-closed -> SC*-open, SC*-closure -> gSC*, SC*g
//! ```

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::mask::{subset, subset_join, superset_meet, MaskSet, SubsetMask};
use crate::space::SpaceContext;

macro_rules! set_classes {
    ($($tag:ident => $name:literal),* $(,)?) => {
        /// Every set class the library can decide.
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum SetClass {
            $($tag),*
        }

        impl SetClass {
            pub const ALL: &'static [SetClass] = &[$(SetClass::$tag),*];

            /// Canonical kebab-case name.
            pub fn name(self) -> &'static str {
                match self {
                    $(SetClass::$tag => $name),*
                }
            }
        }
    };
}

set_classes! {
    Closed => "closed",
    Open => "open",
    RegularClosed => "regular-closed",
    RegularOpen => "regular-open",
    SemiClosed => "semi-closed",
    SemiOpen => "semi-open",
    PreClosed => "pre-closed",
    PreOpen => "pre-open",
    WClosed => "w-closed",
    WOpen => "w-open",
    AlphaClosed => "alpha-closed",
    AlphaOpen => "alpha-open",
    BetaClosed => "beta-closed",
    BetaOpen => "beta-open",
    BOpen => "b-open",
    BClosed => "b-closed",
    AlphaStarSet => "alpha-star-set",
    CSet => "c-set",
    HClosed => "h-closed",
    HOpen => "h-open",
    GhClosed => "gh-closed",
    GhOpen => "gh-open",
    RegularHOpen => "regular-h-open",
    RghClosed => "rgh-closed",
    RghOpen => "rgh-open",
    HCgClosed => "hcg-closed",
    HCgOpen => "hcg-open",
    CStarOpen => "c-star-open",
    CStarClosed => "c-star-closed",
    SCStarClosed => "sc-star-closed",
    SCStarOpen => "sc-star-open",
    GClosed => "g-closed",
    GOpen => "g-open",
    GSCStarClosed => "g-sc-star-closed",
    GSCStarOpen => "g-sc-star-open",
    SCStarGClosed => "sc-star-g-closed",
    SCStarGOpen => "sc-star-g-open",
    PiClosed => "pi-closed",
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassKind {
    Closed,
    Open,
    Neither,
}

/// Closed/open partners. The open member is the family of complements.
const DUALS: &[(SetClass, SetClass)] = &[
    (SetClass::Closed, SetClass::Open),
    (SetClass::RegularClosed, SetClass::RegularOpen),
    (SetClass::SemiClosed, SetClass::SemiOpen),
    (SetClass::PreClosed, SetClass::PreOpen),
    (SetClass::WClosed, SetClass::WOpen),
    (SetClass::AlphaClosed, SetClass::AlphaOpen),
    (SetClass::BetaClosed, SetClass::BetaOpen),
    (SetClass::BClosed, SetClass::BOpen),
    (SetClass::HClosed, SetClass::HOpen),
    (SetClass::GhClosed, SetClass::GhOpen),
    (SetClass::RghClosed, SetClass::RghOpen),
    (SetClass::HCgClosed, SetClass::HCgOpen),
    (SetClass::CStarClosed, SetClass::CStarOpen),
    (SetClass::SCStarClosed, SetClass::SCStarOpen),
    (SetClass::GClosed, SetClass::GOpen),
    (SetClass::GSCStarClosed, SetClass::GSCStarOpen),
    (SetClass::SCStarGClosed, SetClass::SCStarGOpen),
];

impl SetClass {
    pub const COUNT: usize = Self::ALL.len();

    /// The columns of the closed-set relationship table.
    pub const TABLE_COLUMNS: &'static [SetClass] = &[
        SetClass::Closed,
        SetClass::SemiClosed,
        SetClass::PreClosed,
        SetClass::GClosed,
        SetClass::SCStarClosed,
        SetClass::GSCStarClosed,
        SetClass::SCStarGClosed,
    ];

    #[inline]
    pub fn index(self) -> usize {
        self as usize
    }

    pub fn dual(self) -> Option<SetClass> {
        DUALS.iter().find_map(|&(c, o)| {
            if c == self {
                Some(o)
            } else if o == self {
                Some(c)
            } else {
                None
            }
        })
    }

    pub fn kind(self) -> ClassKind {
        match self {
            SetClass::PiClosed => ClassKind::Closed,
            SetClass::RegularHOpen => ClassKind::Open,
            SetClass::AlphaStarSet | SetClass::CSet => ClassKind::Neither,
            c if DUALS.iter().any(|&(closed, _)| closed == c) => ClassKind::Closed,
            _ => ClassKind::Open,
        }
    }

    /// Closed/open pairs, closed member first.
    pub fn dual_pairs() -> &'static [(SetClass, SetClass)] {
        DUALS
    }
}

impl fmt::Display for SetClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown set class {0:?}")]
pub struct UnknownClass(pub String);

impl FromStr for SetClass {
    type Err = UnknownClass;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let alias = match s {
            "p-closed" => "pre-closed",
            "p-open" => "pre-open",
            "s-closed" => "semi-closed",
            "s-open" => "semi-open",
            "gamma-open" => "b-open",
            "gamma-closed" => "b-closed",
            other => other,
        };
        SetClass::ALL
            .iter()
            .copied()
            .find(|c| c.name() == alias)
            .ok_or_else(|| UnknownClass(s.to_string()))
    }
}

impl Serialize for SetClass {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

impl<'de> Deserialize<'de> for SetClass {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Per-context memo of class families and their meet/join tables.
pub(crate) struct ClassMemo {
    families: [OnceLock<MaskSet>; SetClass::COUNT],
    meets: [OnceLock<Vec<u16>>; SetClass::COUNT],
    joins: [OnceLock<Vec<u16>>; SetClass::COUNT],
}

impl Default for ClassMemo {
    fn default() -> Self {
        ClassMemo {
            families: std::array::from_fn(|_| OnceLock::new()),
            meets: std::array::from_fn(|_| OnceLock::new()),
            joins: std::array::from_fn(|_| OnceLock::new()),
        }
    }
}

impl SpaceContext {
    pub(crate) fn family(&self, class: SetClass) -> &MaskSet {
        self.classes.families[class.index()].get_or_init(|| compute_family(self, class))
    }

    /// Intersection of the members of `class` containing `a`.
    #[inline]
    pub(crate) fn meet(&self, class: SetClass, a: u16) -> u16 {
        self.classes.meets[class.index()].get_or_init(|| superset_meet(self.family(class)))[a as usize]
    }

    /// Union of the members of `class` contained in `a`.
    #[inline]
    pub(crate) fn join(&self, class: SetClass, a: u16) -> u16 {
        self.classes.joins[class.index()].get_or_init(|| subset_join(self.family(class)))[a as usize]
    }

    #[inline]
    pub(crate) fn member(&self, class: SetClass, a: u16) -> bool {
        self.family(class).contains(a)
    }
}

fn compute_family(ctx: &SpaceContext, class: SetClass) -> MaskSet {
    use SetClass::*;
    let n = ctx.n();
    let cl = |a| ctx.cl(a);
    let int = |a| ctx.int(a);
    let from = |pred: &dyn Fn(u16) -> bool| MaskSet::from_pred(n, pred);

    if class.kind() == ClassKind::Open {
        if let Some(closed) = class.dual() {
            if class != CStarOpen {
                return ctx.family(closed).complements();
            }
        }
    }

    match class {
        Closed => from(&|a| cl(a) == a),
        RegularClosed => from(&|a| cl(int(a)) == a),
        SemiClosed => from(&|a| subset(int(cl(a)), a)),
        PreClosed => from(&|a| subset(cl(int(a)), a)),
        AlphaClosed => from(&|a| subset(cl(int(cl(a))), a)),
        BetaClosed => from(&|a| subset(int(cl(int(a))), a)),
        BClosed => from(&|a| subset(cl(int(a)) & int(cl(a)), a)),
        AlphaStarSet => from(&|a| int(cl(int(a))) == int(a)),
        // A = U ∩ V with U open forces U ⊇ ker(A); the kernel is the best choice.
        CSet => {
            let alpha_star = ctx.family(AlphaStarSet);
            from(&|a| {
                let k = ctx.ker(a);
                alpha_star.iter().any(|v| v & k == a)
            })
        }
        CStarOpen => from(&|a| subset(int(cl(a)), a) && subset(a, cl(int(a)))),
        CStarClosed => ctx.family(CStarOpen).complements(),
        WClosed => from(&|a| subset(cl(a), ctx.meet(SemiOpen, a))),
        HClosed => from(&|a| subset(ctx.meet(SemiClosed, a), ctx.meet(WOpen, a))),
        GhClosed => from(&|a| subset(ctx.meet(HClosed, a), ctx.meet(HOpen, a))),
        RegularHOpen => {
            let regular_open = ctx.family(RegularOpen).to_vec();
            from(&|a| {
                regular_open
                    .iter()
                    .any(|&u| subset(u, a) && subset(a, ctx.meet(HClosed, u)))
            })
        }
        RghClosed => from(&|a| subset(ctx.meet(HClosed, a), ctx.meet(RegularHOpen, a))),
        HCgClosed => from(&|a| subset(ctx.meet(HClosed, a), ctx.meet(CSet, a))),
        SCStarClosed => from(&|a| subset(ctx.meet(SemiClosed, a), ctx.meet(CStarOpen, a))),
        GClosed => from(&|a| subset(cl(a), ctx.ker(a))),
        GSCStarClosed => from(&|a| subset(ctx.meet(SCStarClosed, a), ctx.ker(a))),
        SCStarGClosed => from(&|a| subset(ctx.meet(SCStarClosed, a), ctx.meet(SCStarOpen, a))),
        PiClosed => from(&|a| ctx.meet(RegularClosed, a) == a),
        _ => unreachable!("open classes with partners are handled above"),
    }
}

/// Whether `a` belongs to `class`.
pub fn is_member(ctx: &SpaceContext, a: SubsetMask, class: SetClass) -> bool {
    ctx.member(class, a.bits())
}

/// All members of `class`, ascending by mask value.
pub fn class_family(ctx: &SpaceContext, class: SetClass) -> Vec<SubsetMask> {
    ctx.family(class).iter().map(|a| ctx.topology().mask(a)).collect()
}

/// Intersection of all members of `class` containing `a`; the full set when
/// no member contains `a`. The result need not itself be a member.
pub fn class_closure(ctx: &SpaceContext, a: SubsetMask, class: SetClass) -> SubsetMask {
    ctx.topology().mask(ctx.meet(class, a.bits()))
}

/// Union of all members of `class` contained in `a`.
pub fn class_interior(ctx: &SpaceContext, a: SubsetMask, class: SetClass) -> SubsetMask {
    ctx.topology().mask(ctx.join(class, a.bits()))
}

/// Finite intersection of regular-closed sets.
pub fn is_pi_closed(ctx: &SpaceContext, a: SubsetMask) -> bool {
    is_member(ctx, a, SetClass::PiClosed)
}

/// Whether the members of `class` are closed under pairwise intersection,
/// which makes `class_closure` land in the class.
pub fn is_intersection_stable(ctx: &SpaceContext, class: SetClass) -> bool {
    let fam = ctx.family(class);
    let members = fam.to_vec();
    members
        .iter()
        .enumerate()
        .all(|(i, &a)| members[i..].iter().all(|&b| fam.contains(a & b)))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub subset: SubsetMask,
    pub cells: Vec<bool>,
}

/// Powerset-by-classes membership table. Rows are ordered by cardinality,
/// then lexicographically by point index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationTable {
    pub classes: Vec<SetClass>,
    pub rows: Vec<TableRow>,
}

impl ClassificationTable {
    pub fn row(&self, subset: SubsetMask) -> Option<&TableRow> {
        self.rows.iter().find(|r| r.subset == subset)
    }

    pub fn cell(&self, subset: SubsetMask, class: SetClass) -> Option<bool> {
        let col = self.classes.iter().position(|&c| c == class)?;
        self.row(subset).map(|r| r.cells[col])
    }
}

pub fn classification_table(ctx: &SpaceContext, classes: &[SetClass]) -> ClassificationTable {
    let mut subsets: Vec<SubsetMask> = ctx.powerset().map(|a| ctx.topology().mask(a)).collect();
    subsets.sort_by_key(|m| m.table_key());
    let rows = subsets
        .into_iter()
        .map(|subset| TableRow {
            subset,
            cells: classes.iter().map(|&c| is_member(ctx, subset, c)).collect(),
        })
        .collect();
    ClassificationTable {
        classes: classes.to_vec(),
        rows,
    }
}
