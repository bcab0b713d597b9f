//! Subsets of a finite point set stored as a single machine word.

use std::fmt;

use serde::{Serialize, Serializer};

/// Largest supported point count. One bit per point in a `u16`.
pub const MAX_POINTS: usize = 16;

/// A subset of `{0, .., n-1}`. Only the low `n` bits are ever set.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubsetMask {
    bits: u16,
    n: u8,
}

impl SubsetMask {
    /// Builds a mask, dropping any bits above width `n`.
    pub fn new(bits: u16, n: usize) -> Self {
        assert!((1..=MAX_POINTS).contains(&n), "point count {n} out of range");
        SubsetMask {
            bits: bits & full_bits(n),
            n: n as u8,
        }
    }

    pub fn empty(n: usize) -> Self {
        Self::new(0, n)
    }

    pub fn full(n: usize) -> Self {
        Self::new(full_bits(n), n)
    }

    pub fn singleton(point: usize, n: usize) -> Self {
        assert!(point < n, "point {point} outside width {n}");
        Self::new(1 << point, n)
    }

    pub fn from_points<I: IntoIterator<Item = usize>>(points: I, n: usize) -> Self {
        let bits = points.into_iter().fold(0u16, |acc, p| {
            assert!(p < n, "point {p} outside width {n}");
            acc | (1 << p)
        });
        Self::new(bits, n)
    }

    #[inline]
    pub fn bits(self) -> u16 {
        self.bits
    }

    #[inline]
    pub fn width(self) -> usize {
        self.n as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.bits == 0
    }

    #[inline]
    pub fn is_full(self) -> bool {
        self.bits == full_bits(self.width())
    }

    #[inline]
    pub fn len(self) -> usize {
        self.bits.count_ones() as usize
    }

    #[inline]
    pub fn contains(self, point: usize) -> bool {
        point < self.width() && self.bits >> point & 1 == 1
    }

    #[inline]
    pub fn complement(self) -> Self {
        SubsetMask {
            bits: !self.bits & full_bits(self.width()),
            n: self.n,
        }
    }

    #[inline]
    pub fn union(self, other: Self) -> Self {
        debug_assert_eq!(self.n, other.n);
        SubsetMask {
            bits: self.bits | other.bits,
            n: self.n,
        }
    }

    #[inline]
    pub fn intersection(self, other: Self) -> Self {
        debug_assert_eq!(self.n, other.n);
        SubsetMask {
            bits: self.bits & other.bits,
            n: self.n,
        }
    }

    #[inline]
    pub fn difference(self, other: Self) -> Self {
        debug_assert_eq!(self.n, other.n);
        SubsetMask {
            bits: self.bits & !other.bits,
            n: self.n,
        }
    }

    #[inline]
    pub fn is_subset(self, other: Self) -> bool {
        self.bits & other.bits == self.bits
    }

    #[inline]
    pub fn is_disjoint(self, other: Self) -> bool {
        self.bits & other.bits == 0
    }

    /// Point indices in ascending order.
    pub fn points(self) -> impl Iterator<Item = usize> {
        let bits = self.bits;
        (0..self.width()).filter(move |&i| bits >> i & 1 == 1)
    }

    /// Applies a point relabeling: point `i` moves to `perm[i]`.
    pub fn permute(self, perm: &[usize]) -> Self {
        debug_assert_eq!(perm.len(), self.width());
        Self::new(permute_bits(self.bits, perm), self.width())
    }

    /// Renders with the given point labels, e.g. `{k,m}`.
    pub fn display_with<'a, S: AsRef<str>>(self, names: &'a [S]) -> impl fmt::Display + 'a {
        Labeled { mask: self, names }
    }

    /// Ordering used for tables: by cardinality, then lexicographically by
    /// the ascending list of point indices.
    pub fn table_key(self) -> (usize, Vec<usize>) {
        (self.len(), self.points().collect())
    }
}

impl fmt::Debug for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, p) in self.points().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "}}/{}", self.n)
    }
}

/// Serializes as the ascending list of point indices.
impl Serialize for SubsetMask {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.points())
    }
}

struct Labeled<'a, S> {
    mask: SubsetMask,
    names: &'a [S],
}

impl<S: AsRef<str>> fmt::Display for Labeled<'_, S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, p) in self.mask.points().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            f.write_str(self.names[p].as_ref())?;
        }
        write!(f, "}}")
    }
}

#[inline]
pub(crate) fn full_bits(n: usize) -> u16 {
    if n >= 16 {
        u16::MAX
    } else {
        (1u16 << n) - 1
    }
}

#[inline]
pub(crate) fn subset(a: u16, b: u16) -> bool {
    a & b == a
}

pub(crate) fn permute_bits(bits: u16, perm: &[usize]) -> u16 {
    let mut out = 0u16;
    for (i, &to) in perm.iter().enumerate() {
        if bits >> i & 1 == 1 {
            out |= 1 << to;
        }
    }
    out
}

/// A set of masks over a fixed width, stored as a dense bitmap over the
/// whole powerset.
#[derive(Clone, PartialEq, Eq)]
pub struct MaskSet {
    n: usize,
    words: Vec<u64>,
}

impl MaskSet {
    pub fn new(n: usize) -> Self {
        let len = (1usize << n).div_ceil(64);
        MaskSet {
            n,
            words: vec![0; len],
        }
    }

    pub fn from_pred(n: usize, mut pred: impl FnMut(u16) -> bool) -> Self {
        let mut set = Self::new(n);
        for a in 0..(1u32 << n) {
            if pred(a as u16) {
                set.insert(a as u16);
            }
        }
        set
    }

    pub fn width(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn insert(&mut self, a: u16) {
        let a = a as usize;
        self.words[a / 64] |= 1 << (a % 64);
    }

    #[inline]
    pub fn contains(&self, a: u16) -> bool {
        let a = a as usize;
        self.words[a / 64] >> (a % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Members in ascending numeric order.
    pub fn iter(&self) -> impl Iterator<Item = u16> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let tz = w.trailing_zeros() as usize;
                w &= w - 1;
                Some((wi * 64 + tz) as u16)
            })
        })
    }

    /// The family of complements.
    pub fn complements(&self) -> Self {
        let full = full_bits(self.n);
        let mut out = Self::new(self.n);
        for a in self.iter() {
            out.insert(!a & full);
        }
        out
    }

    pub fn to_vec(&self) -> Vec<u16> {
        self.iter().collect()
    }
}

impl fmt::Debug for MaskSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set()
            .entries(self.iter().map(|a| SubsetMask::new(a, self.n)))
            .finish()
    }
}

/// For every `a`, the intersection of all members of `family` containing
/// `a` (the full set when none does). Superset zeta transform, O(n 2^n).
pub(crate) fn superset_meet(family: &MaskSet) -> Vec<u16> {
    let n = family.width();
    let full = full_bits(n);
    let mut table: Vec<u16> = (0..(1u32 << n))
        .map(|a| if family.contains(a as u16) { a as u16 } else { full })
        .collect();
    for bit in 0..n {
        let step = 1usize << bit;
        for a in 0..table.len() {
            if a & step == 0 {
                table[a] &= table[a | step];
            }
        }
    }
    table
}

/// For every `a`, the union of all members of `family` contained in `a`.
/// Subset zeta transform, O(n 2^n).
pub(crate) fn subset_join(family: &MaskSet) -> Vec<u16> {
    let n = family.width();
    let mut table: Vec<u16> = (0..(1u32 << n))
        .map(|a| if family.contains(a as u16) { a as u16 } else { 0 })
        .collect();
    for bit in 0..n {
        let step = 1usize << bit;
        for a in 0..table.len() {
            if a & step != 0 {
                table[a] |= table[a ^ step];
            }
        }
    }
    table
}
