//! Finite topological spaces: validation, the closure/interior calculus and
//! the JSON space format.

use std::collections::HashMap;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::classes::ClassMemo;
use crate::mask::{full_bits, subset, MaskSet, SubsetMask, MAX_POINTS};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TopologyError {
    #[error("point count {0} is outside 1..={MAX_POINTS}")]
    PointCount(usize),
    #[error("mask {0:?} does not have width {1}")]
    WidthMismatch(SubsetMask, usize),
    #[error("the empty set is not open")]
    MissingEmptySet,
    #[error("the full set is not open")]
    MissingFullSet,
    #[error("not closed under union: {0:?} ∪ {1:?} is not open")]
    NotClosedUnderUnion(SubsetMask, SubsetMask),
    #[error("not closed under intersection: {0:?} ∩ {1:?} is not open")]
    NotClosedUnderIntersection(SubsetMask, SubsetMask),
}

impl TopologyError {
    /// Variant name, stable for scripts matching on error kinds.
    pub fn kind(&self) -> &'static str {
        match self {
            TopologyError::PointCount(_) => "PointCount",
            TopologyError::WidthMismatch(..) => "WidthMismatch",
            TopologyError::MissingEmptySet => "MissingEmptySet",
            TopologyError::MissingFullSet => "MissingFullSet",
            TopologyError::NotClosedUnderUnion(..) => "NotClosedUnderUnion",
            TopologyError::NotClosedUnderIntersection(..) => "NotClosedUnderIntersection",
        }
    }

    /// Same message as `Display`, with sets spelled in point names.
    pub fn describe<S: AsRef<str>>(&self, names: &[S]) -> String {
        match self {
            TopologyError::NotClosedUnderUnion(a, b) => format!(
                "not closed under union: {} ∪ {} is not open",
                a.display_with(names),
                b.display_with(names)
            ),
            TopologyError::NotClosedUnderIntersection(a, b) => format!(
                "not closed under intersection: {} ∩ {} is not open",
                a.display_with(names),
                b.display_with(names)
            ),
            other => other.to_string(),
        }
    }
}

/// A validated topology on `n` points. The open family is sorted ascending
/// by mask value and free of duplicates.
#[derive(Clone)]
pub struct Topology {
    n: usize,
    point_names: Vec<String>,
    opens: Vec<u16>,
    lookup: MaskSet,
}

impl PartialEq for Topology {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.opens == other.opens && self.point_names == other.point_names
    }
}

impl Eq for Topology {}

impl std::fmt::Debug for Topology {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let opens: Vec<String> = self
            .opens
            .iter()
            .map(|&o| SubsetMask::new(o, self.n).display_with(&self.point_names).to_string())
            .collect();
        f.debug_struct("Topology")
            .field("points", &self.point_names)
            .field("opens", &opens)
            .finish()
    }
}

/// Default labels `a, b, c, ...`.
pub fn default_point_names(n: usize) -> Vec<String> {
    (0..n).map(|i| ((b'a' + i as u8) as char).to_string()).collect()
}

/// Checks the topology axioms and returns the canonical form.
pub fn validate_topology(n: usize, candidate_opens: &[SubsetMask]) -> Result<Topology, TopologyError> {
    if !(1..=MAX_POINTS).contains(&n) {
        return Err(TopologyError::PointCount(n));
    }
    if let Some(bad) = candidate_opens.iter().find(|m| m.width() != n) {
        return Err(TopologyError::WidthMismatch(*bad, n));
    }
    let raw: Vec<u16> = candidate_opens.iter().map(|m| m.bits()).collect();
    Topology::from_bits(n, &raw, default_point_names(n))
}

impl Topology {
    /// Validates a family given as raw bit patterns.
    pub fn from_bits(n: usize, opens: &[u16], point_names: Vec<String>) -> Result<Self, TopologyError> {
        if !(1..=MAX_POINTS).contains(&n) {
            return Err(TopologyError::PointCount(n));
        }
        assert_eq!(point_names.len(), n, "one name per point");
        let full = full_bits(n);
        if let Some(&bad) = opens.iter().find(|&&o| o & !full != 0) {
            return Err(TopologyError::WidthMismatch(SubsetMask::new(bad, MAX_POINTS), n));
        }
        let mut sorted = opens.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let mut lookup = MaskSet::new(n);
        for &o in &sorted {
            lookup.insert(o);
        }
        if !lookup.contains(0) {
            return Err(TopologyError::MissingEmptySet);
        }
        if !lookup.contains(full) {
            return Err(TopologyError::MissingFullSet);
        }
        for (i, &a) in sorted.iter().enumerate() {
            for &b in &sorted[i + 1..] {
                if !lookup.contains(a | b) {
                    return Err(TopologyError::NotClosedUnderUnion(
                        SubsetMask::new(a, n),
                        SubsetMask::new(b, n),
                    ));
                }
                if !lookup.contains(a & b) {
                    return Err(TopologyError::NotClosedUnderIntersection(
                        SubsetMask::new(a, n),
                        SubsetMask::new(b, n),
                    ));
                }
            }
        }
        Ok(Topology {
            n,
            point_names,
            opens: sorted,
            lookup,
        })
    }

    /// Builds from a family already known to be a topology, e.g. from the
    /// preorder enumeration. Checked in debug builds only.
    pub(crate) fn from_trusted(n: usize, mut opens: Vec<u16>) -> Self {
        opens.sort_unstable();
        opens.dedup();
        let mut lookup = MaskSet::new(n);
        for &o in &opens {
            lookup.insert(o);
        }
        let t = Topology {
            n,
            point_names: default_point_names(n),
            opens,
            lookup,
        };
        debug_assert!(Topology::from_bits(n, &t.opens, t.point_names.clone()).is_ok());
        t
    }

    pub fn discrete(n: usize) -> Self {
        Self::from_trusted(n, (0..=full_bits(n)).collect())
    }

    pub fn indiscrete(n: usize) -> Self {
        Self::from_trusted(n, vec![0, full_bits(n)])
    }

    pub fn with_point_names(mut self, names: Vec<String>) -> Self {
        assert_eq!(names.len(), self.n);
        self.point_names = names;
        self
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn point_names(&self) -> &[String] {
        &self.point_names
    }

    pub fn opens(&self) -> impl Iterator<Item = SubsetMask> + '_ {
        self.opens.iter().map(move |&o| SubsetMask::new(o, self.n))
    }

    pub(crate) fn open_bits(&self) -> &[u16] {
        &self.opens
    }

    pub(crate) fn open_family(&self) -> &MaskSet {
        &self.lookup
    }

    pub fn open_count(&self) -> usize {
        self.opens.len()
    }

    #[inline]
    pub fn is_open(&self, a: SubsetMask) -> bool {
        self.lookup.contains(a.bits())
    }

    pub fn mask(&self, bits: u16) -> SubsetMask {
        SubsetMask::new(bits, self.n)
    }

    pub fn full(&self) -> SubsetMask {
        SubsetMask::full(self.n)
    }

    /// Applies a point relabeling (`i` goes to `perm[i]`) to the open family.
    /// Point names are kept in place.
    pub fn relabel(&self, perm: &[usize]) -> Topology {
        let opens = self
            .opens
            .iter()
            .map(|&o| crate::mask::permute_bits(o, perm))
            .collect();
        Topology::from_trusted(self.n, opens).with_point_names(self.point_names.clone())
    }

    /// Ordering key used to pick minimal counterexamples.
    pub fn minimality_key(&self) -> (usize, usize, &[u16]) {
        (self.n, self.opens.len(), &self.opens)
    }
}

/// How "closed neighborhood" is read in the θ-closure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ThetaReading {
    /// Closures of open neighborhoods.
    #[default]
    ClosureOfOpenNeighbourhood,
    /// Closed sets whose interior contains the point.
    ClosedNeighbourhood,
}

/// A topology together with lazily filled lookup tables. Every table is
/// write-once, so a context can be shared between threads.
pub struct SpaceContext {
    topology: Topology,
    theta_reading: ThetaReading,
    /// Smallest open set containing each point.
    neighbourhoods: Vec<u16>,
    closure: OnceLock<Vec<u16>>,
    interior: OnceLock<Vec<u16>>,
    theta: OnceLock<Vec<u16>>,
    kernel: OnceLock<Vec<u16>>,
    pub(crate) classes: ClassMemo,
}

impl SpaceContext {
    pub fn new(topology: Topology) -> Self {
        Self::with_theta_reading(topology, ThetaReading::default())
    }

    pub fn with_theta_reading(topology: Topology, theta_reading: ThetaReading) -> Self {
        let n = topology.n();
        let neighbourhoods = (0..n)
            .map(|x| {
                topology
                    .open_bits()
                    .iter()
                    .filter(|&&o| o >> x & 1 == 1)
                    .fold(full_bits(n), |acc, &o| acc & o)
            })
            .collect();
        SpaceContext {
            topology,
            theta_reading,
            neighbourhoods,
            closure: OnceLock::new(),
            interior: OnceLock::new(),
            theta: OnceLock::new(),
            kernel: OnceLock::new(),
            classes: ClassMemo::default(),
        }
    }

    pub fn topology(&self) -> &Topology {
        &self.topology
    }

    pub fn theta_reading(&self) -> ThetaReading {
        self.theta_reading
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.topology.n()
    }

    #[inline]
    pub(crate) fn full_bits(&self) -> u16 {
        full_bits(self.n())
    }

    pub(crate) fn powerset(&self) -> impl Iterator<Item = u16> {
        (0..=self.full_bits() as u32).map(|a| a as u16)
    }

    /// Smallest open set containing `x`.
    pub fn neighbourhood(&self, x: usize) -> SubsetMask {
        self.topology.mask(self.neighbourhoods[x])
    }

    pub fn closure(&self, a: SubsetMask) -> SubsetMask {
        self.topology.mask(self.cl(a.bits()))
    }

    pub fn interior(&self, a: SubsetMask) -> SubsetMask {
        self.topology.mask(self.int(a.bits()))
    }

    pub fn theta_closure(&self, a: SubsetMask) -> SubsetMask {
        self.topology.mask(self.theta_cl(a.bits()))
    }

    /// Smallest open superset (the intersection of all open supersets).
    pub fn kernel(&self, a: SubsetMask) -> SubsetMask {
        self.topology.mask(self.ker(a.bits()))
    }

    #[inline]
    pub(crate) fn cl(&self, a: u16) -> u16 {
        self.closure.get_or_init(|| {
            self.powerset()
                .map(|a| {
                    (0..self.n())
                        .filter(|&x| self.neighbourhoods[x] & a != 0)
                        .fold(0u16, |acc, x| acc | 1 << x)
                })
                .collect()
        })[a as usize]
    }

    #[inline]
    pub(crate) fn int(&self, a: u16) -> u16 {
        self.interior.get_or_init(|| {
            self.powerset()
                .map(|a| {
                    (0..self.n())
                        .filter(|&x| subset(self.neighbourhoods[x], a))
                        .fold(0u16, |acc, x| acc | 1 << x)
                })
                .collect()
        })[a as usize]
    }

    #[inline]
    pub(crate) fn ker(&self, a: u16) -> u16 {
        self.kernel.get_or_init(|| {
            self.powerset()
                .map(|a| {
                    (0..self.n())
                        .filter(|&x| a >> x & 1 == 1)
                        .fold(0u16, |acc, x| acc | self.neighbourhoods[x])
                })
                .collect()
        })[a as usize]
    }

    #[inline]
    pub(crate) fn theta_cl(&self, a: u16) -> u16 {
        self.theta.get_or_init(|| match self.theta_reading {
            // Closure is monotone, so the smallest neighborhood decides.
            ThetaReading::ClosureOfOpenNeighbourhood => self
                .powerset()
                .map(|a| {
                    (0..self.n())
                        .filter(|&x| self.cl(self.neighbourhoods[x]) & a != 0)
                        .fold(0u16, |acc, x| acc | 1 << x)
                })
                .collect(),
            ThetaReading::ClosedNeighbourhood => {
                let full = self.full_bits();
                let closed: Vec<u16> = self.topology.open_bits().iter().map(|&o| !o & full).collect();
                self.powerset()
                    .map(|a| {
                        (0..self.n())
                            .filter(|&x| {
                                closed
                                    .iter()
                                    .filter(|&&f| self.int(f) >> x & 1 == 1)
                                    .all(|&f| f & a != 0)
                            })
                            .fold(0u16, |acc, x| acc | 1 << x)
                    })
                    .collect()
            }
        })[a as usize]
    }

    #[inline]
    pub(crate) fn is_open_bits(&self, a: u16) -> bool {
        self.topology.open_family().contains(a)
    }

    #[inline]
    pub(crate) fn is_closed_bits(&self, a: u16) -> bool {
        self.topology.open_family().contains(!a & self.full_bits())
    }

    pub fn is_closed(&self, a: SubsetMask) -> bool {
        self.is_closed_bits(a.bits())
    }

    pub(crate) fn closed_bits(&self) -> impl Iterator<Item = u16> + '_ {
        let full = self.full_bits();
        let mut v: Vec<u16> = self.topology.open_bits().iter().map(|&o| !o & full).collect();
        v.sort_unstable();
        v.into_iter()
    }
}

/// On-disk space description: open sets listed by point name.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpaceFile {
    pub points: Vec<String>,
    pub opens: Vec<Vec<String>>,
}

#[derive(Debug, Error)]
pub enum SpaceFileError {
    #[error("malformed space JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("point count {0} is outside 1..={MAX_POINTS}")]
    PointCount(usize),
    #[error("duplicate point name {0:?}")]
    DuplicatePoint(String),
    #[error("unknown point name {0:?} in an open set")]
    UnknownPoint(String),
    #[error("point {0:?} listed twice in one open set")]
    RepeatedMember(String),
    #[error("open set {0} listed more than once")]
    DuplicateOpen(String),
    #[error("invalid topology ({kind}): {0}", kind = .1.kind())]
    Invalid(String, #[source] TopologyError),
}

impl SpaceFile {
    pub fn from_topology(t: &Topology) -> Self {
        let mut opens: Vec<SubsetMask> = t.opens().collect();
        opens.sort_by_key(|m| m.table_key());
        SpaceFile {
            points: t.point_names().to_vec(),
            opens: opens
                .iter()
                .map(|m| m.points().map(|p| t.point_names()[p].clone()).collect())
                .collect(),
        }
    }

    pub fn into_topology(self) -> Result<Topology, SpaceFileError> {
        let n = self.points.len();
        if !(1..=MAX_POINTS).contains(&n) {
            return Err(SpaceFileError::PointCount(n));
        }
        let mut index = HashMap::new();
        for (i, p) in self.points.iter().enumerate() {
            if index.insert(p.as_str(), i).is_some() {
                return Err(SpaceFileError::DuplicatePoint(p.clone()));
            }
        }
        let mut seen = MaskSet::new(n);
        let mut bits = Vec::with_capacity(self.opens.len());
        for open in &self.opens {
            let mut m = 0u16;
            for name in open {
                let &i = index
                    .get(name.as_str())
                    .ok_or_else(|| SpaceFileError::UnknownPoint(name.clone()))?;
                if m >> i & 1 == 1 {
                    return Err(SpaceFileError::RepeatedMember(name.clone()));
                }
                m |= 1 << i;
            }
            if seen.contains(m) {
                return Err(SpaceFileError::DuplicateOpen(
                    SubsetMask::new(m, n).display_with(&self.points).to_string(),
                ));
            }
            seen.insert(m);
            bits.push(m);
        }
        Topology::from_bits(n, &bits, self.points.clone())
            .map_err(|e| SpaceFileError::Invalid(e.describe(&self.points), e))
    }
}

pub fn parse_space_json(text: &str) -> Result<Topology, SpaceFileError> {
    let file: SpaceFile = serde_json::from_str(text)?;
    file.into_topology()
}

pub fn space_to_json(t: &Topology) -> String {
    serde_json::to_string(&SpaceFile::from_topology(t)).expect("space serializes")
}
